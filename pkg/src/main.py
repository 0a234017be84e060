import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.app import run  # noqa: E402


def main():
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
