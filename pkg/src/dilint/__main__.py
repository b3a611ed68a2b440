import sys

from dilint.cli import main

sys.exit(main())
