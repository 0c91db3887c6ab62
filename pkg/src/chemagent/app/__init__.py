"""User-facing surfaces: command-line interface and HTTP service."""

from .config import AppConfig, load_config, read_config_file, validate_data_dir
from .service import create_app, serve

__all__ = ["AppConfig", "create_app", "load_config", "read_config_file", "serve", "validate_data_dir"]
