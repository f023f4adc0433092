"""Run configuration: knot table location and solver settings.

The knot table path is resolved in the following order:
1. Explicit value passed by the caller (``--table``)
2. Environment variable CORDAUG_TABLE
3. CORDAUG_TABLE entry in a .env file in the current directory or a parent
4. The table bundled with the package

Example:
    from cordaug.config import resolve_table_path

    path = resolve_table_path()
"""

import logging
import os
from importlib import resources
from pathlib import Path
from typing import NamedTuple

from cordaug.core.models import SolverConfig

logger = logging.getLogger(__name__)

# Environment variable names
ENV_TABLE = "CORDAUG_TABLE"
ENV_SEED = "CORDAUG_SEED"
ENV_PRECISION = "CORDAUG_PRECISION_DIGITS"

BUNDLED_TABLE = "knots.csv"


class TableSource(NamedTuple):
    """Resolved knot table and where the path came from."""

    path: Path
    origin: str


def resolve_table_path(table: str | None = None) -> TableSource:
    """Resolve the knot table path.

    Args:
        table: Explicit path (overrides other sources)

    Returns:
        TableSource with the path and its origin ('explicit', 'env', 'dotenv', 'bundled')
    """
    # 1. Use explicit parameter if provided
    if table:
        return TableSource(Path(table), "explicit")

    # 2. Fall back to environment variable
    env_value = os.environ.get(ENV_TABLE)
    if env_value:
        return TableSource(Path(env_value), "env")

    # 3. Fall back to .env file
    dotenv_value = _load_dotenv().get(ENV_TABLE)
    if dotenv_value:
        return TableSource(Path(dotenv_value), "dotenv")

    # 4. Bundled table
    bundled = resources.files("cordaug").joinpath("data").joinpath(BUNDLED_TABLE)
    return TableSource(Path(str(bundled)), "bundled")


def solver_config_from_env(**overrides: object) -> SolverConfig:
    """Build solver settings, applying CORDAUG_SEED / CORDAUG_PRECISION_DIGITS.

    Explicit keyword overrides that are not None win over the environment.
    """
    values: dict[str, object] = {}
    if os.environ.get(ENV_SEED):
        values["seed"] = int(os.environ[ENV_SEED])
    if os.environ.get(ENV_PRECISION):
        values["precision_digits"] = int(os.environ[ENV_PRECISION])
    values.update({key: value for key, value in overrides.items() if value is not None})
    return SolverConfig(**values)  # type: ignore[arg-type]


def _load_dotenv() -> dict[str, str]:
    """Load variables from .env file.

    Searches current directory and parent directories for .env file.

    Returns:
        Dictionary of variables from the first .env file found
    """
    env_vars: dict[str, str] = {}

    current = Path.cwd()
    for directory in [current, *current.parents]:
        env_file = directory / ".env"
        if env_file.exists():
            logger.debug("Loading .env from %s", env_file)
            try:
                with open(env_file, encoding="utf-8") as f:
                    for line in f:
                        line = line.strip()
                        if not line or line.startswith("#"):
                            continue
                        if "=" in line:
                            key, _, value = line.partition("=")
                            value = value.strip()
                            if value and value[0] in ('"', "'") and value[-1] == value[0]:
                                value = value[1:-1]
                            env_vars[key.strip()] = value
            except OSError as e:
                logger.debug("Error reading .env file: %s", e)
            break  # Only load from first .env found

    return env_vars
