"""Logging setup shared by the CLI, the API and the worker processes."""

import logging
from pathlib import Path
from typing import Optional

from neurotrade.core.config import Config

_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def setup_logging(level: Optional[str] = None, log_dir: Optional[str] = None, to_file: Optional[bool] = None) -> logging.Logger:
    root = logging.getLogger('neurotrade')
    root.setLevel((level or Config.LOG_LEVEL).upper())

    if getattr(root, '_neurotrade_configured', False):
        return root

    stream = logging.StreamHandler()
    stream.setFormatter(logging.Formatter(_FORMAT))
    root.addHandler(stream)

    if Config.LOG_TO_FILE if to_file is None else to_file:
        directory = Path(log_dir or Config.LOG_DIR)
        try:
            directory.mkdir(parents=True, exist_ok=True)
            fh = logging.FileHandler(directory / 'neurotrade.log', encoding='utf-8')
            fh.setFormatter(logging.Formatter(_FORMAT))
            root.addHandler(fh)
        except OSError as e:
            root.warning('file logging disabled: %r', e)

    root.propagate = False
    root._neurotrade_configured = True
    return root
