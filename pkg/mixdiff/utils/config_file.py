"""Guard settings read from TOML files.

Two files are consulted: a per-user file in the platform config directory and
a ``.mixdiff.toml`` in the current directory or any parent. Both hold a single
``[guards]`` table; the project file wins.
"""
import os

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Optional

from ..config import Guards
from ..errors import InvalidConfigError

PROJECT_FILE = '.mixdiff.toml'

_GUARD_NOTES = {
    'max_set_size': "Largest n for exhaustive set-partition streams (B_n partitions are visited)",
    'max_multiset_size': "Largest |tau| for multiset-partition streams (expansions, cumulants)",
    'max_oracle_composition': "Largest |tau| for polynomial oracle checks",
    'max_oracle_sweep': "Largest |tau| for brute-force multiplicity sweeps",
    'seed': "Seed for randomized oracle trials",
}


@dataclass
class GlobalConfig:
    """Resolved file configuration."""
    guards: Guards = field(default_factory=Guards)
    source: Optional[Path] = None  # Last file that contributed values

    def to_dict(self) -> dict:
        return {'guards': asdict(self.guards)}

    @classmethod
    def from_dict(cls, data: dict, source: Optional[Path] = None) -> 'GlobalConfig':
        """Build from a parsed document; keys outside [guards] are ignored."""
        return cls(guards=Guards().with_overrides(data.get('guards', {})), source=source)


def get_config_dir() -> Path:
    """Per-user directory: %APPDATA%/mixdiff on Windows, else $XDG_CONFIG_HOME/mixdiff."""
    if os.name == 'nt':
        root = os.environ.get('APPDATA') or Path.home()
    else:
        root = os.environ.get('XDG_CONFIG_HOME') or Path.home() / '.config'
    return Path(root) / 'mixdiff'


def get_global_config_path() -> Path:
    return get_config_dir() / 'config.toml'


def get_project_config_path(start_dir: Optional[Path] = None) -> Optional[Path]:
    """Nearest .mixdiff.toml at or above start_dir (defaults to cwd), or None."""
    here = Path(start_dir or Path.cwd()).resolve()
    for directory in (here, *here.parents):
        candidate = directory / PROJECT_FILE
        if candidate.is_file():
            return candidate
    return None


def parse_toml(path: Path) -> dict:
    """Parse a TOML file.

    Raises:
        FileNotFoundError: If file doesn't exist
        tomllib.TOMLDecodeError: If the file is not valid TOML
    """
    return tomllib.loads(Path(path).read_text(encoding='utf-8'))


def _read_guard_table(path: Optional[Path]) -> Optional[dict]:
    """The [guards] table of path, or None if it is absent or unreadable."""
    if path is None or not path.is_file():
        return None
    try:
        table = parse_toml(path).get('guards', {})
        # Validate now so a bad file is skipped as a whole
        Guards().with_overrides(table)
    except (tomllib.TOMLDecodeError, InvalidConfigError, OSError, AttributeError):
        return None
    return table


def load_config(
    project_dir: Optional[Path] = None,
    include_global: bool = True,
    include_project: bool = True,
) -> GlobalConfig:
    """Merge the global and project files over the built-in defaults.

    Files that fail to parse, or hold invalid guard values, are skipped.

    Args:
        project_dir: Where to start looking for .mixdiff.toml
        include_global: Read the per-user file
        include_project: Read the project file
    """
    sources = []
    if include_global:
        sources.append(get_global_config_path())
    if include_project:
        sources.append(get_project_config_path(project_dir))

    config = GlobalConfig()
    for path in sources:
        table = _read_guard_table(path)
        if table is not None:
            config = GlobalConfig(guards=config.guards.with_overrides(table), source=path)
    return config


def render_default_config() -> str:
    """Commented TOML listing every guard at its default."""
    defaults = Guards()
    lines = [
        "# mixdiff configuration file",
        "# Environment variables (MIXDIFF_MAX_SET_SIZE, ...) override these values.",
        "",
        "[guards]",
    ]
    for f in fields(defaults):
        lines += [f"# {_GUARD_NOTES[f.name]}", f"{f.name} = {getattr(defaults, f.name)}", ""]
    return "\n".join(lines)


def create_default_config(path: Path) -> Path:
    """Write the default configuration to path, creating parent directories.

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_default_config(), encoding='utf-8')
    return path


def get_config_value(key: str, default: Any = None) -> Any:
    """Look up a dotted key such as 'guards.max_set_size' in the loaded config."""
    node: Any = load_config().to_dict()
    for name in key.split('.'):
        if not isinstance(node, dict) or name not in node:
            return default
        node = node[name]
    return node


__all__ = [
    'PROJECT_FILE',
    'GlobalConfig',
    'get_config_dir',
    'get_global_config_path',
    'get_project_config_path',
    'load_config',
    'render_default_config',
    'create_default_config',
    'get_config_value',
]
