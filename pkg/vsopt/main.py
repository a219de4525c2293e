#!/usr/bin/env python
# -*- coding: utf-8 -*-

# main.py
"""
The command line entry point for vso-opt: bench, portfolio and rank
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import argparse
import logging
import sys
from os.path import isfile
from pubsub import pub
from vsopt._version import __version__
from vsopt.errors import ConfigurationError, PriceDataError, UnsupportedMetricError, IncompleteMatrixError
from vsopt.experiment import ExperimentConfig, ALGORITHMS, PORTFOLIO_MODES, run_experiment, rank_summary_files
from vsopt.options import Options
from vsopt.params import parse_override
from vsopt.paths import CONFIG_HELP
from vsopt.threading import PROGRESS_TOPIC


logger = logging.getLogger('vsopt')

EXIT_OK = 0
EXIT_RUN_FAILURES = 1
EXIT_CONFIGURATION = 2
EXIT_IO = 3

CONFIGURATION_ERRORS = (ConfigurationError, PriceDataError, UnsupportedMetricError, IncompleteMatrixError)


def _override(text):
    try:
        return parse_override(text)
    except ConfigurationError as e:
        raise argparse.ArgumentTypeError(str(e))


def _csv_list(item_type):
    def parse(text):
        try:
            return [item_type(v.strip()) for v in text.split(',') if v.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError("invalid list %r" % text)
    return parse


def _config_help():
    if isfile(CONFIG_HELP):
        with open(CONFIG_HELP, 'r', encoding='utf-8') as doc:
            return doc.read()
    return None


def _add_shared_arguments(parser):
    """Flags common to bench and portfolio; defaults live in Options so a config file can supply them"""
    parser.add_argument('--config', help="flat key = value file; flags given here take precedence")
    parser.add_argument('--algo', choices=ALGORITHMS, help="optimizer (default vso)")
    parser.add_argument('--no-import', dest='no_import', action='store_true', default=None,
                        help="shorthand for --algo vso-no-import")
    parser.add_argument('--iters', type=int, help="iterations per run (default 10000 bench, 1000 portfolio)")
    parser.add_argument('--runs', type=int, help="independent runs per objective (default 31)")
    parser.add_argument('--seed', type=int, help="base seed, run k uses seed + k (default 0)")
    parser.add_argument('--param', action='append', type=_override, metavar='KEY=VALUE',
                        help="optimizer parameter override, repeatable (e.g. n_pop=50)")
    parser.add_argument('--workers', type=int, help="runs executed concurrently (default 1)")
    parser.add_argument('--out', help="output directory")


def get_parser():
    parser = argparse.ArgumentParser(prog='vsopt', description="Virus spread optimization experiments",
                                     epilog=_config_help(), formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    verbosity.add_argument('-q', '--quiet', action='store_true', help="warnings and errors only")
    sub = parser.add_subparsers(dest='cmd', required=True)

    pb = sub.add_parser('bench', help="run benchmark functions and write summary and trace files")
    pb.add_argument('--function', type=_csv_list(str), help="F1..F16, comma separated (default F1)")
    pb.add_argument('--dim', type=_csv_list(int), help="dimensions, comma separated (default 30)")
    pb.add_argument('--error', action='store_true', default=None,
                    help="report f(x) - f(x*) instead of raw fitness when the optimum is known")
    _add_shared_arguments(pb)

    pp = sub.add_parser('portfolio', help="maximize the Sharpe ratio of a portfolio built from a price file")
    pp.add_argument('--prices', help="CSV: a date column, then one price column per symbol")
    pp.add_argument('--mode', choices=PORTFOLIO_MODES, help="long-only or long/short (default long)")
    pp.add_argument('--risk-free', dest='risk_free',
                    help="annual risk-free rate as a fraction, or us-treasury-5y / cn-deposit-3y (default 0)")
    pp.add_argument('--risk-free-annual', dest='risk_free_annual', action='store_true', default=None,
                    help="use the quoted annual rate unchanged instead of dividing it by 252")
    _add_shared_arguments(pp)

    pr = sub.add_parser('rank', help="average ranks of algorithms from summary files")
    pr.add_argument('--inputs', nargs='+', help="summary.json/summary.csv files or result directories, "
                                                "optionally as name=path")
    pr.add_argument('--config', help="flat key = value file")
    pr.add_argument('--out', help="directory for ranks.csv and rank_detail.csv")

    return parser


def load_options(args):
    """Defaults < config file < command line"""
    options = Options()
    if getattr(args, 'config', None):
        options.load_config(args.config)
    options.apply_args(args)
    return options


def build_config(options, kind):
    """
    :param options: merged preferences
    :type options: Options
    :param kind: 'bench' or 'portfolio'
    :rtype: ExperimentConfig
    """
    algorithm = options.algo
    if options.no_import:
        if algorithm == 'de':
            raise ConfigurationError("--no-import only applies to vso")
        algorithm = 'vso-no-import'
    return ExperimentConfig(kind=kind, functions=tuple(options.function), dimensions=tuple(options.dim),
                            prices=options.prices, mode=options.mode, risk_free=options.risk_free,
                            risk_free_raw=options.risk_free_annual, algorithm=algorithm,
                            overrides=dict(options.params), n_runs=options.runs, max_iterations=options.iters,
                            base_seed=options.seed, output_dir=options.out, report_error=options.error,
                            workers=options.workers)


def log_progress(msg):
    logger.info("%s (%0.0f%%)", msg['label'], 100. * msg['gauge'])


def run_command(args):
    options = load_options(args)
    if args.cmd == 'rank':
        if not options.inputs:
            raise ConfigurationError("rank needs at least one summary file (--inputs)")
        rank_summary_files(options.inputs, output_dir=options.out)
        return EXIT_OK

    result = run_experiment(build_config(options, args.cmd))
    return EXIT_RUN_FAILURES if result.failed_run_count else EXIT_OK


def main(argv=None):
    """
    :param argv: command line arguments without the program name (sys.argv[1:] when None)
    :return: process exit code
    :rtype: int
    """
    args = get_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    pub.subscribe(log_progress, PROGRESS_TOPIC)
    try:
        return run_command(args)
    except CONFIGURATION_ERRORS as e:
        logger.error("%s", e)
        return EXIT_CONFIGURATION
    except OSError as e:
        logger.error("%s", e)
        return EXIT_IO
    finally:
        pub.unsubscribe(log_progress, PROGRESS_TOPIC)


def start():
    sys.exit(main())


if __name__ == '__main__':
    start()
