from __future__ import annotations

import sys


def main() -> int:
    from selfsim_app.main import main as run_app

    return run_app()


if __name__ == "__main__":
    sys.exit(main())
