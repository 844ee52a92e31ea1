"""Configuration settings for neurotrade

This module is intentionally framework-agnostic (no FastAPI/argparse imports).
Run-level settings (tickers, split dates, hyperparameters) live in
`neurotrade.schemas.schemas.RunConfig` and are loaded from YAML by
`load_run_config`; the `Config` class only carries process-level defaults that
come from the environment.
"""

from pathlib import Path
import os
from typing import Any, Dict, Optional, Sequence

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from neurotrade.core.errors import ConfigInvalid
from neurotrade.schemas.schemas import RunConfig

BASE_DIR = Path(__file__).parent.parent.parent

# Load .env from repository root so env vars are available to all modules.
_env_path = BASE_DIR / '.env'
if _env_path.exists():
    load_dotenv(str(_env_path))
else:
    load_dotenv()


class Config:
    """Configuration settings"""

    # Environment variable names (read again at run-config build time)
    DATA_DIR_ENV = 'NEUROTRADE_DATA_DIR'
    OUTPUT_DIR_ENV = 'NEUROTRADE_OUTPUT_DIR'
    CONFIG_FILE_ENV = 'NEUROTRADE_CONFIG'
    PARALLELISM_ENV = 'NEUROTRADE_PARALLELISM'

    # Inputs / outputs
    DATA_DIR = os.environ.get(DATA_DIR_ENV, 'data')
    OUTPUT_DIR = os.environ.get(OUTPUT_DIR_ENV, 'out')
    CONFIG_FILE = os.environ.get(CONFIG_FILE_ENV, '')

    # Ticker-level worker pool
    PARALLELISM = int(os.environ.get(PARALLELISM_ENV, '1'))

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO').upper()
    LOG_DIR = os.environ.get('LOG_DIR', 'logs')
    LOG_TO_FILE = os.environ.get('LOG_TO_FILE', 'true').lower() in ('1', 'true', 'yes')

    # HTTP surface
    API_HOST = os.environ.get('API_HOST', '0.0.0.0')
    API_PORT = int(os.environ.get('API_PORT', '8080'))


def _set_path(data: Dict[str, Any], dotted: str, value: Any) -> None:
    keys = [k for k in dotted.strip().split('.') if k]
    if not keys:
        raise ConfigInvalid(f'empty override key in {dotted!r}')
    node = data
    for key in keys[:-1]:
        child = node.setdefault(key, {})
        if not isinstance(child, dict):
            raise ConfigInvalid(f'cannot set {dotted!r}: {key!r} is not a section')
        node = child
    node[keys[-1]] = value


def load_run_config(
    path: Optional[str] = None,
    overrides: Sequence[str] = (),
    *,
    tickers: Optional[str] = None,
    output_dir: Optional[str] = None,
    parallelism: Optional[int] = None,
    seed: Optional[int] = None,
) -> RunConfig:
    """Build the validated `RunConfig`.

    Precedence, lowest first: model defaults, process environment defaults,
    the YAML file, NEUROTRADE_DATA_DIR, `--set key=value` overrides, dedicated flags.
    """
    data: Dict[str, Any] = {}
    if os.environ.get(Config.OUTPUT_DIR_ENV):
        data['output_dir'] = os.environ[Config.OUTPUT_DIR_ENV]
    if os.environ.get(Config.PARALLELISM_ENV):
        data['parallelism'] = os.environ[Config.PARALLELISM_ENV]

    path = path or os.environ.get(Config.CONFIG_FILE_ENV) or None
    if path:
        try:
            with open(path, encoding='utf-8') as fh:
                loaded = yaml.safe_load(fh) or {}
        except OSError as e:
            raise ConfigInvalid(f'cannot read config file {path}: {e}')
        except yaml.YAMLError as e:
            raise ConfigInvalid(f'config file {path} is not valid YAML: {e}')
        if not isinstance(loaded, dict):
            raise ConfigInvalid(f'config file {path} must contain a mapping')
        data.update(loaded)

    if os.environ.get(Config.DATA_DIR_ENV):
        data['data_dir'] = os.environ[Config.DATA_DIR_ENV]

    for item in overrides:
        key, sep, raw = item.partition('=')
        if not sep:
            raise ConfigInvalid(f'override {item!r} is not of the form key=value')
        try:
            value = yaml.safe_load(raw)
        except yaml.YAMLError as e:
            raise ConfigInvalid(f'override {item!r} has an unparsable value: {e}')
        _set_path(data, key, value)

    if tickers:
        data['tickers'] = [t for t in tickers.split(',') if t.strip()]
    if output_dir:
        data['output_dir'] = output_dir
    if parallelism is not None:
        data['parallelism'] = parallelism
    if seed is not None:
        _set_path(data, 'mlp.seed', seed)

    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigInvalid(f'invalid run configuration:\n{e}')
