"""
Main Entry Point
python -m src.main <subcommand> ...
"""
import sys

from .cli import run


def main():
    """Main entry point for the command-line toolkit"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
