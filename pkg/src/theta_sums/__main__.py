import sys

from theta_sums.cli import main

sys.exit(main())
