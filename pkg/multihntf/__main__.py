"""Entry point for running multihntf as a module"""

import sys

from multihntf.cli import main

if __name__ == "__main__":
    sys.exit(main())
