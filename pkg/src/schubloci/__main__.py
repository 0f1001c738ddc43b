import os
import sys

from .cli import main


def run() -> int:
    try:
        return main()
    except BrokenPipeError:
        # downstream reader (head, less) closed early
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(run())
