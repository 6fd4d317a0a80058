from __future__ import annotations

import sys


def main() -> int:
    from selfsim_app.main import main as run_cli

    return run_cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
