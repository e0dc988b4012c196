import sys

from src.cli.cuntzlab import main

if __name__ == "__main__":
    sys.exit(main())
