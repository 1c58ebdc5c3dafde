import sys

from hashtag_drift.cli import main

sys.exit(main())
