import logging
import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


@dataclass(frozen=True)
class Settings:
    seed: int = 0
    log_level: str = 'INFO'
    max_rank_a: int = 7
    max_rank_c: int = 3
    secret_key: str = 'dev-secret-key'
    cors_origins: str = '*'
    host: str = '0.0.0.0'
    port: int = 5000
    debug: bool = False


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or value.strip() == '':
        return default
    try:
        return int(value)
    except ValueError:
        logging.getLogger(__name__).warning("Ignoring non-integer %s=%r", name, value)
        return default


def load_settings():
    """
    Build the settings from the environment, loading an optional .env file first

    Returns:
        Settings: Immutable configuration snapshot
    """
    load_dotenv()
    return Settings(
        seed=_env_int('ORBITS_SEED', 0),
        log_level=os.environ.get('ORBITS_LOG_LEVEL', 'INFO').upper(),
        max_rank_a=_env_int('ORBITS_MAX_RANK_A', 7),
        max_rank_c=_env_int('ORBITS_MAX_RANK_C', 3),
        secret_key=os.environ.get('SECRET_KEY', 'dev-secret-key'),
        cors_origins=os.environ.get('CORS_ORIGINS', '*'),
        host=os.environ.get('HOST', '0.0.0.0'),
        port=_env_int('PORT', 5000),
        debug=os.environ.get('DEBUG', '').lower() in ('1', 'true', 'yes'),
    )


def configure_logging(level='INFO'):
    """Install a single stream handler on the root logger, pointed at the current stderr."""
    root = logging.getLogger()
    for stale in [h for h in root.handlers if getattr(h, '_orbits_handler', False)]:
        root.removeHandler(stale)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._orbits_handler = True
    root.addHandler(handler)
    root.setLevel(getattr(logging, str(level).upper(), logging.INFO))
