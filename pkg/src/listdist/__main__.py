import sys

from listdist.cli import main

sys.exit(main())
