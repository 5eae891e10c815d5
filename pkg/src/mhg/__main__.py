"""Allow running the command-line interface as ``python -m mhg``."""

from .cli import console_main

if __name__ == "__main__":
    console_main()
