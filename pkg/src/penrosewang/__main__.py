#
#    Module `__main__`: runs the command line interface with ``python -m penrosewang``.
#    penrosewang authors (C) 2024.
#
import sys
from penrosewang.cli import main

sys.exit(main())

# End
