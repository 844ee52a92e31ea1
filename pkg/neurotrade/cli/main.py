"""Command-line entry point: `neurotrade <stage|run> --config run.yaml ...`."""

import argparse
import logging
import sys
from typing import List, Optional

from neurotrade.controllers.pipeline_controller import PipelineController
from neurotrade.core.config import Config, load_run_config
from neurotrade.core.errors import ConfigInvalid, NoTickersSucceeded
from neurotrade.core.logging import setup_logging
from neurotrade.services.pipeline_service_base import STAGES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_CONFIG = 2

_HELP = {
    'ingest': 'parse and adjust each ticker CSV',
    'prepare': 'compute indicators, label, split, normalize and resample',
    'train': 'train one classifier per ticker',
    'backtest': 'predict test labels and simulate trading',
    'evaluate': 'compute trading statistics and write the aggregate report',
    'run': 'all stages end to end',
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='neurotrade', description='Neural-network trading signals from technical indicators')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=None, help=f'run configuration YAML (default: ${Config.CONFIG_FILE_ENV})')
    common.add_argument('--tickers', default=None, help='comma-separated symbols, overrides the config')
    common.add_argument('--out', default=None, help='output directory')
    common.add_argument('--parallelism', type=int, default=None, help='ticker worker pool size')
    common.add_argument('--seed', type=int, default=None, help='training seed')
    common.add_argument('--set', dest='overrides', action='append', default=[], metavar='KEY=VALUE',
                        help='override any config leaf, e.g. --set trading.stop_loss_fraction=0.1')
    common.add_argument('--resume', action='store_true', help='skip stages whose artifacts are up to date')
    common.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING, ...')

    sub = parser.add_subparsers(dest='command', required=True)
    for name in STAGES + ('run',):
        p = sub.add_parser(name, parents=[common], help=_HELP[name])
        if name in ('backtest', 'run'):
            p.add_argument('--labels', default=None,
                           help='Date,Label CSV used instead of model predictions; "{ticker}" is substituted')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)

    try:
        run_config = load_run_config(
            args.config,
            args.overrides,
            tickers=args.tickers,
            output_dir=args.out,
            parallelism=args.parallelism,
            seed=args.seed,
        )
        stages = STAGES if args.command == 'run' else (args.command,)
        controller = PipelineController(run_config, resume=args.resume, labels_path=getattr(args, 'labels', None))
        summary = controller.run(stages)
    except ConfigInvalid as e:
        logger.error('%s', e)
        print(f'config error: {e}', file=sys.stderr)
        return EXIT_CONFIG
    except NoTickersSucceeded as e:
        logger.error('%s', e)
        return EXIT_FAILURES

    for o in summary.outcomes:
        print(f'{o.symbol:<8} {o.status:<8} {o.detail}')
    return EXIT_FAILURES if summary.exit_code else EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
