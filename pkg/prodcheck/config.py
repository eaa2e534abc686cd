import os
from pathlib import Path

import dotenv
from pydantic import BaseModel

dotenv.load_dotenv()

DEFAULT_CATALOG = Path(__file__).parent / "data" / "catalog.txt"
DEFAULT_COVERAGE = Path(__file__).parent / "data" / "coverage.txt"


class Settings(BaseModel):
    catalog_path: Path = DEFAULT_CATALOG
    log_file: str = "prodcheck.log"
    log_level: str = "INFO"
    host: str = "0.0.0.0"
    port: int = 8001


def load_settings() -> Settings:
    return Settings(
        catalog_path=Path(os.environ.get("PRODCHECK_CATALOG", str(DEFAULT_CATALOG))),
        log_file=os.environ.get("PRODCHECK_LOG_FILE", "prodcheck.log"),
        log_level=os.environ.get("PRODCHECK_LOG_LEVEL", "INFO").upper(),
        host=os.environ.get("PRODCHECK_HOST", "0.0.0.0"),
        port=int(os.environ.get("PRODCHECK_PORT", "8001")),
    )


settings = load_settings()
