import sys

from geo3.cli import main


sys.exit(main())
