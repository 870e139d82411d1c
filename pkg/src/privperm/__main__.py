import sys

from privperm.cli import main

sys.exit(main())
