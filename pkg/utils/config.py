import os
import yaml
from dotenv import load_dotenv
from pathlib import Path
from pydantic import ValidationError, BaseModel
from .config_models import AppConfig, GroebnerConfig, WitnessConfig, LimitsConfig, VerificationConfig, LoggingConfig
import logging

BUDGET_ENV_VAR = "CRITID_BUDGET"

# Basic logger for config loading issues, independent of the main app logger
_config_loader_logger = logging.getLogger('config_loader')
if not _config_loader_logger.handlers:
    _handler = logging.StreamHandler()
    _formatter = logging.Formatter('%(asctime)s - config_loader - %(levelname)s - %(message)s')
    _handler.setFormatter(_formatter)
    _config_loader_logger.addHandler(_handler)
    _config_loader_logger.setLevel(logging.WARNING)
    _config_loader_logger.propagate = False

class Config:
    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        root_dir = Path(__file__).parent.parent
        load_dotenv(root_dir / ".env")

        self.config_path = config_path = root_dir / "config.yaml"
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found at {config_path}")

        with open(config_path, 'r') as f:
            yaml_data = yaml.safe_load(f)

        if yaml_data is None:
            _config_loader_logger.warning(f"Configuration file {config_path} is empty, using defaults.")
            yaml_data = {}

        try:
            self.settings = AppConfig(**yaml_data)
            _config_loader_logger.info("Configuration loaded and validated successfully using AppConfig.")
        except ValidationError as e:
            for error in e.errors():
                _config_loader_logger.error(f"  Field: {'.'.join(map(str, error['loc']))}, Message: {error['msg']}, Type: {error['type']}")
            detailed_error_message = "\n".join([f"  - Field '{'.'.join(map(str, error['loc']))}': {error['msg']}" for error in e.errors()])
            raise ValueError(detailed_error_message) from e

        self._initialized = True

    def get(self, key_path: str, default=None):
        """
        Retrieves a value from the loaded configuration using a dot-separated key path.
        Example: 'groebner.pair_budget' reads config.settings.groebner.pair_budget.
        """
        obj = self.settings
        for key in key_path.split('.'):
            if isinstance(obj, BaseModel):
                if not hasattr(obj, key):
                    return default
                obj = getattr(obj, key)
            elif isinstance(obj, dict):
                if key not in obj:
                    return default
                obj = obj[key]
            else:
                return default
        return obj

    def get_env(self, key, default=None):
        """Get value from environment variables."""
        return os.getenv(key, default)

    @property
    def groebner_budget(self) -> int:
        """Pair budget, with CRITID_BUDGET taking precedence over config.yaml."""
        raw = self.get_env(BUDGET_ENV_VAR)
        if raw:
            try:
                value = int(raw)
                if value > 0:
                    return value
            except ValueError:
                pass
            _config_loader_logger.warning(f"Ignoring invalid {BUDGET_ENV_VAR}={raw!r}")
        return self.settings.groebner.pair_budget

    @property
    def groebner_config(self) -> GroebnerConfig:
        return self.settings.groebner

    @property
    def witness_config(self) -> WitnessConfig:
        return self.settings.witness

    @property
    def limits_config(self) -> LimitsConfig:
        return self.settings.limits

    @property
    def verification_config(self) -> VerificationConfig:
        return self.settings.verification

    @property
    def logging_config(self) -> LoggingConfig:
        return self.settings.logging

# Create a singleton instance
config = Config()
