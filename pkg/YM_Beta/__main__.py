import sys

from YM_Beta.cli import main

sys.exit(main())
