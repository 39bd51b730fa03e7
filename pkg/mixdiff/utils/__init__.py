"""Utility modules for mixdiff."""
from .config_file import (
    load_config, get_config_value, create_default_config,
    get_config_dir, get_global_config_path, get_project_config_path, GlobalConfig,
)

__all__ = [
    'load_config',
    'get_config_value',
    'create_default_config',
    'get_config_dir',
    'get_global_config_path',
    'get_project_config_path',
    'GlobalConfig',
]
