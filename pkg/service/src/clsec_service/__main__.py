"""Run the service: `python -m clsec_service`."""
import uvicorn

from .app import create_app
from .config import ServiceConfig


def main() -> None:
    cfg = ServiceConfig.from_env()
    uvicorn.run(create_app(cfg), host="0.0.0.0", port=cfg.port)


if __name__ == "__main__":
    main()
