"""Run the selection service.

    python scripts/serve.py --data-dir ./data --admin-password change-me

Admin credentials can also come from SAWSELECT_ADMIN_USER /
SAWSELECT_ADMIN_PASSWORD; flags win over the environment.
"""

import argparse
import os
from pathlib import Path

import uvicorn

from sawselect.service import ServiceConfig, create_app


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--data-dir", default=os.environ.get("SAWSELECT_DATA_DIR", "./data"))
    parser.add_argument("--criteria", help="criteria config JSON (default: bundled config)")
    parser.add_argument("--admin-user", default=os.environ.get("SAWSELECT_ADMIN_USER", "admin"))
    parser.add_argument(
        "--admin-password", default=os.environ.get("SAWSELECT_ADMIN_PASSWORD", "admin")
    )
    parser.add_argument(
        "--static-dir",
        default=os.environ.get("SAWSELECT_STATIC_DIR"),
        help="serve a built admin UI from this directory",
    )
    args = parser.parse_args()

    config = ServiceConfig(
        data_dir=Path(args.data_dir),
        admin_username=args.admin_user,
        admin_password=args.admin_password,
        criteria_path=Path(args.criteria) if args.criteria else None,
        static_dir=Path(args.static_dir) if args.static_dir else None,
    )
    uvicorn.run(create_app(config), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
