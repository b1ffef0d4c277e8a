import json
from datetime import datetime
from pathlib import Path
from typing import Optional, Union
import aiofiles
import jsonschema
from pydantic import BaseModel
from utils.config import config
from utils.errors import ReportStorageError, ReportValidationError
from utils.logger import logger

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "verification" / "report_schema.json"


def load_schema() -> dict:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_report(payload: dict, schema: Optional[dict] = None) -> None:
    try:
        jsonschema.validate(payload, schema or load_schema())
    except jsonschema.ValidationError as e:
        raise ReportValidationError(f"Report does not match its schema: {e.message}") from e


class ReportStorage:
    def __init__(self, run_name: str, base_dir: Optional[Path] = None):
        self.base_dir = Path(base_dir or config.settings.directories.base)
        self.run_name = self._sanitize_name(run_name)
        self.reports_dir = self.base_dir / config.settings.directories.reports / self.run_name

        # Track initialization state
        self._initialized = False

    async def initialize(self):
        """Create the report directory"""
        if not self._initialized:
            await self._ensure_directories_ready()
            self._initialized = True
            logger.info(f"Report storage ready at {self.reports_dir}")

    async def is_ready(self) -> bool:
        """Check the report directory exists and is writable"""
        try:
            await self.initialize()
            test_file = self.reports_dir / "test_write.tmp"
            async with aiofiles.open(test_file, "w") as f:
                await f.write("test")
            test_file.unlink()
            return self.reports_dir.is_dir()
        except Exception as e:
            logger.error(f"Report storage readiness check failed: {e}")
            return False

    async def _ensure_directories_ready(self) -> None:
        try:
            self.reports_dir.mkdir(parents=True, exist_ok=True)
        except Exception as e:
            logger.error(f"Failed to create directories: {e}")
            raise ReportStorageError(f"Could not initialize report storage: {e}") from e

    async def save_report(self, report: Union[BaseModel, dict], kind: str, validate: bool = False) -> Path:
        """Write a report as `<kind>_<timestamp>.json`; verification reports are schema-checked first."""
        await self.initialize()
        payload = report.model_dump(mode="json") if isinstance(report, BaseModel) else report
        if validate:
            validate_report(payload)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
        filepath = self.reports_dir / f"{self._sanitize_name(kind)}_{timestamp}.json"
        try:
            async with aiofiles.open(filepath, "w", encoding="utf-8") as f:
                await f.write(json.dumps(payload, indent=2, sort_keys=True))
        except OSError as e:
            raise ReportStorageError(f"Could not write {filepath}: {e}") from e
        logger.info(f"Saved {kind} report to {filepath}")
        return filepath

    def _sanitize_name(self, name: str) -> str:
        return "".join(c for c in name if c.isalnum() or c in (' ', '_', '-')).strip().replace(' ', '_') or "run"
