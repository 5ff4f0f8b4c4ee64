import sys

from graphcomp.cli import main

sys.exit(main())
