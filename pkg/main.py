#!/usr/bin/env python3
import sys
from typing import List, Optional

from cli.commands import dispatch
from logging_setup import setup_logging


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the finite-group TQFT toolkit."""
    # Set up logging first; results go to stdout, logs only to files
    try:
        setup_logging()
    except OSError as e:
        print(f"warning: logging disabled ({e})", file=sys.stderr)

    try:
        return dispatch(argv)
    except KeyboardInterrupt:
        print("Interrupted.", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
