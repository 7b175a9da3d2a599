"""Entry point for the UAV swarm backhaul simulator."""

from __future__ import annotations

import sys
from typing import Optional, Sequence

from cli import create_parser, run_command
from cli.middleware import EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and run the selected verb.

    Returns
    -------
    int
        Process exit code: 0 on success, 2 for simulation or configuration
        errors and unusable arguments, 1 for anything unexpected.
    """

    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors were already reported on stderr by the parser
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    return run_command(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
