#!/usr/bin/env python
# -*- coding: utf-8 -*-

# experiment.py
"""
Multi-seed experiments: run protocol, summary statistics, rank aggregation and result files
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import logging
import math
from dataclasses import dataclass, field
from os.path import join, isdir, isfile, basename, dirname, splitext
from typing import Optional
import numpy as np
from vsopt.benchmarks import make_benchmark, fitness_error, normalize_id
from vsopt.data_table import DataTable, scientific_formats
from vsopt.errors import ConfigurationError, IncompleteMatrixError, UnsupportedMetricError
from vsopt.params import VsoParams, DeParams, BASELINE_DE_POP_SIZE, split_overrides
from vsopt.paths import DEFAULT_OUTPUT_DIR
from vsopt.portfolio import ingest_prices, make_portfolio_spec, make_portfolio_objective, normalize_weights,\
    risk_free_per_period
from vsopt.threads import RunJob, RunWorker
from vsopt.utilities import derive_seed, ensure_directory, save_csv_to_file, save_json_to_file,\
    load_json_from_file, load_csv_from_file, safe_file_name


logger = logging.getLogger(__name__)

ALGORITHMS = ('vso', 'vso-no-import', 'de')
KINDS = ('bench', 'portfolio')
PORTFOLIO_MODES = ('long', 'longshort')
DEFAULT_RUNS = 31
DEFAULT_ITERATIONS = {'bench': 10000, 'portfolio': 1000}

SUMMARY_COLUMNS = ['Function', 'Dimension', 'Mean', 'Std', 'Best', 'Worst', 'Time(s)']
STAT_COLUMNS = ['Mean', 'Std', 'Best', 'Worst', 'Time(s)']
TIME_COLUMN = 'Time(s)'
RELIABILITY_COLUMNS = ['Function', 'Dimension', 'Min', 'Q1', 'Median', 'Q3', 'Max']
CONVERGENCE_COLUMNS = ['Function', 'Dimension', 'iteration', 'median_best_fitness']
RANK_COLUMNS = ['Algorithm', 'Avg Fitness Rank', 'Fitness Rank', 'Avg Time Rank', 'Time Rank']

SUMMARY_CSV = 'summary.csv'
SUMMARY_JSON = 'summary.json'
RELIABILITY_CSV = 'reliability.csv'
CONVERGENCE_CSV = 'convergence_median.csv'
PORTFOLIO_JSON = 'portfolio.json'
TRACES_DIR = 'traces'


#################################################################################
# Configuration
#################################################################################
@dataclass(frozen=True)
class ExperimentConfig:
    kind: str = 'bench'
    functions: tuple = ('F1',)
    dimensions: tuple = (30,)
    prices: Optional[str] = None
    mode: str = 'long'
    risk_free: str = '0'
    risk_free_raw: bool = False
    algorithm: str = 'vso'
    overrides: dict = field(default_factory=dict)
    n_runs: int = DEFAULT_RUNS
    max_iterations: Optional[int] = None
    base_seed: int = 0
    output_dir: str = DEFAULT_OUTPUT_DIR
    report_error: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError("Unknown experiment kind %r" % self.kind)
        if self.algorithm not in ALGORITHMS:
            raise ConfigurationError("Unknown algorithm %r, expected one of %s" %
                                     (self.algorithm, ', '.join(ALGORITHMS)))
        if self.n_runs < 1:
            raise ConfigurationError("runs must be a positive integer, got %s" % self.n_runs)
        if self.max_iterations is None:
            object.__setattr__(self, 'max_iterations', DEFAULT_ITERATIONS[self.kind])
        if self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be at least 1, got %s" % self.max_iterations)
        if not 0 <= int(self.base_seed) < 2 ** 64:
            raise ConfigurationError("seed must be a 64-bit unsigned integer, got %s" % self.base_seed)
        if self.workers < 1:
            raise ConfigurationError("workers must be a positive integer, got %s" % self.workers)
        if self.kind == 'bench':
            object.__setattr__(self, 'functions', tuple(normalize_id(f) for f in self.functions))
            object.__setattr__(self, 'dimensions', tuple(int(d) for d in self.dimensions))
            if not self.functions or not self.dimensions:
                raise ConfigurationError("At least one function and one dimension are needed")
        else:
            if not self.prices:
                raise ConfigurationError("A price file is needed for a portfolio experiment")
            if self.mode not in PORTFOLIO_MODES:
                raise ConfigurationError("mode must be one of %s, got %r" % (', '.join(PORTFOLIO_MODES), self.mode))
        self.validate_params()

    def validate_params(self):
        """Build both parameter sets so bad overrides fail before any run starts"""
        return self.vso_params, self.de_params

    @property
    def vso_params(self):
        vso_overrides, _ = split_overrides(self.overrides)
        vso_overrides = dict(vso_overrides, max_iterations=self.max_iterations)
        return VsoParams().with_overrides(vso_overrides)

    @property
    def de_params(self):
        _, de_overrides = split_overrides(self.overrides)
        base = DeParams(pop_size=BASELINE_DE_POP_SIZE) if self.algorithm == 'de' else DeParams()
        return base.with_overrides(de_overrides)

    @property
    def risk_free_rate(self):
        return risk_free_per_period(self.risk_free, raw=self.risk_free_raw)

    def to_dict(self):
        return {'kind': self.kind, 'algorithm': self.algorithm, 'n_runs': self.n_runs,
                'max_iterations': self.max_iterations, 'base_seed': int(self.base_seed),
                'vso_params': self.vso_params.to_dict(), 'de_params': self.de_params.to_dict(),
                'report_error': self.report_error}


@dataclass(frozen=True)
class Target:
    """One objective of an experiment (a benchmark at one dimension, or a portfolio)"""
    label: str
    dimension: int
    objective: object

    @property
    def key(self):
        return self.label, self.dimension


def build_targets(config):
    """
    :param config: experiment definition
    :type config: ExperimentConfig
    :return: objectives in report order
    :rtype: list
    """
    if config.kind == 'bench':
        return [Target(f, d, make_benchmark(f, d)) for f in config.functions for d in config.dimensions]

    prices = ingest_prices(config.prices)
    if prices.dropped_rows:
        logger.warning("%s: dropped rows %s", config.prices, ', '.join(str(r) for r in prices.dropped_rows))
    spec = make_portfolio_spec(prices, risk_free=config.risk_free_rate, allow_short=config.mode == 'longshort')
    label = 'portfolio-%s' % config.mode
    return [Target(label, spec.n_assets, make_portfolio_objective(spec, name=label))]


#################################################################################
# Statistics
#################################################################################
@dataclass(frozen=True)
class SummaryRow:
    function: str
    dimension: int
    mean: float
    std: float
    best: float
    worst: float
    time_seconds: float
    n_runs: int = 1
    n_failed: int = 0

    @classmethod
    def from_values(cls, function, dimension, values, times, n_failed=0):
        """
        :param values: final fitness (or fitness error) of each successful run
        :param times: wall time of each successful run, seconds
        :rtype: SummaryRow
        """
        values = np.asarray(values, dtype=float)
        if not len(values):
            nan = float('nan')
            return cls(function, int(dimension), nan, nan, nan, nan, nan, n_runs=0, n_failed=n_failed)
        std = float(np.std(values, ddof=1)) if len(values) > 1 else 0.
        return cls(function, int(dimension), mean=float(np.mean(values)), std=std, best=float(np.min(values)),
                   worst=float(np.max(values)), time_seconds=float(np.mean(times)), n_runs=len(values),
                   n_failed=n_failed)

    def to_dict(self):
        return {'Function': self.function, 'Dimension': self.dimension, 'Mean': self.mean, 'Std': self.std,
                'Best': self.best, 'Worst': self.worst, 'Time(s)': self.time_seconds,
                'Runs': self.n_runs, 'Failed': self.n_failed}


def median_trace(records):
    """Iteration-wise median of the best-so-far traces of equally long runs"""
    traces = np.array([r.trace_fitness for r in records])
    return np.median(traces, axis=0)


def quartiles(values):
    """min, Q1, median, Q3, max"""
    return tuple(float(v) for v in np.percentile(np.asarray(values, dtype=float), [0, 25, 50, 75, 100]))


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    targets: list
    records: dict  # Target.key -> list of RunRecord (None for a failed run), in run order
    failures: dict = field(default_factory=dict)  # Target.key -> list of (run_index, exception)
    summaries: list = field(default_factory=list)
    metric: str = 'fitness'

    @property
    def failed_run_count(self):
        return sum(len(f) for f in self.failures.values())

    def successful_records(self, key):
        return [r for r in self.records[key] if r is not None]


def _reported_values(target, records, report_error):
    values = [r.best_fitness for r in records]
    if not report_error:
        return values
    try:
        return [fitness_error(v, target.objective.spec) for v in values]
    except (UnsupportedMetricError, AttributeError):
        logger.warning("%s D=%s has no documented optimum, reporting raw fitness", target.label, target.dimension)
        return values


def summarize(result):
    """Fill result.summaries, one row per target"""
    result.summaries = []
    for target in result.targets:
        records = result.successful_records(target.key)
        values = _reported_values(target, records, result.config.report_error)
        result.summaries.append(SummaryRow.from_values(target.label, target.dimension, values,
                                                       [r.wall_time for r in records],
                                                       n_failed=len(result.failures.get(target.key, []))))
    return result.summaries


#################################################################################
# Protocol
#################################################################################
def trace_file_name(target, run_index):
    return '%s_D%s_run%03d.csv' % (safe_file_name(target.label), target.dimension, run_index)


def run_experiment(config):
    """
    Execute n_runs independent runs per target with seeds base_seed + k, then export every result file
    :param config: experiment definition
    :type config: ExperimentConfig
    :rtype: ExperimentResult
    """
    targets = build_targets(config)
    traces_dir = ensure_directory(join(config.output_dir, TRACES_DIR))
    vso_params, de_params = config.vso_params, config.de_params

    jobs = [RunJob(objective=t.objective, algorithm=config.algorithm, vso_params=vso_params, de_params=de_params,
                   seed=derive_seed(config.base_seed, k), run_index=k, label=t.label,
                   trace_path=join(traces_dir, trace_file_name(t, k)))
            for t in targets for k in range(config.n_runs)]
    logger.info("Starting %s %s run(s) of %s on %s target(s)", len(jobs), config.algorithm,
                config.max_iterations, len(targets))

    worker = RunWorker(jobs, workers=config.workers)
    worker.join()

    records = {t.key: [None] * config.n_runs for t in targets}
    failures = {}
    for job, outcome in zip(jobs, worker.results):
        key = (job.label, job.objective.dimension)
        if outcome is not None and outcome.ok:
            records[key][job.run_index] = outcome.data
        else:
            error = outcome.error if outcome is not None else RuntimeError("run did not finish")
            failures.setdefault(key, []).append((job.run_index, error))

    result = ExperimentResult(config=config, targets=targets, records=records, failures=failures,
                              metric='error' if config.report_error else 'fitness')
    summarize(result)
    export_results(result, config.output_dir)
    if result.failed_run_count:
        logger.error("%s run(s) failed, results cover the remaining runs", result.failed_run_count)
    return result


#################################################################################
# Result files
#################################################################################
def summary_table(summaries):
    """
    :param summaries: SummaryRow objects
    :rtype: DataTable
    """
    table = DataTable(columns=SUMMARY_COLUMNS, formats=scientific_formats(STAT_COLUMNS))
    for row in summaries:
        table.append_row([row.function, row.dimension, row.mean, row.std, row.best, row.worst, row.time_seconds])
    return table


def reliability_table(result):
    table = DataTable(columns=RELIABILITY_COLUMNS, formats=scientific_formats(RELIABILITY_COLUMNS[2:]))
    for target in result.targets:
        records = result.successful_records(target.key)
        if records:
            values = _reported_values(target, records, result.config.report_error)
            table.append_row([target.label, target.dimension] + list(quartiles(values)))
    return table


def convergence_table(result):
    table = DataTable(columns=CONVERGENCE_COLUMNS)
    for target in result.targets:
        records = result.successful_records(target.key)
        if records:
            for (iteration, _), value in zip(records[0].trace, median_trace(records)):
                table.append_row([target.label, target.dimension, int(iteration), float(value)])
    return table


def portfolio_report(result):
    """Best and mean Sharpe ratio (the variance-denominated variant) and the best normalized weights"""
    target = result.targets[0]
    records = result.successful_records(target.key)
    if not records:
        return None
    spec = target.objective.spec
    best = min(records, key=lambda r: r.best_fitness)
    ratios = [1. / r.best_fitness for r in records]
    weights = normalize_weights(best.best_rna)
    return {'mode': result.config.mode,
            'risk_free_per_period': spec.risk_free,
            'best_sharpe_ratio': 1. / best.best_fitness,
            'mean_sharpe_ratio': float(np.mean(ratios)),
            'best_seed': best.seed,
            'weights': {symbol: float(w) for symbol, w in zip(spec.symbols, weights)}}


def export_results(result, output_dir):
    """
    Write summary.csv/json, reliability.csv, convergence_median.csv (and portfolio.json for portfolios)
    Per-run trace files are written by the run workers as each run finishes
    :param result: a summarized experiment
    :type result: ExperimentResult
    :param output_dir: destination directory, created if needed
    :type output_dir: str
    """
    ensure_directory(output_dir)
    table = summary_table(result.summaries)
    save_csv_to_file(table.get_csv(), join(output_dir, SUMMARY_CSV))

    summary = {'algorithm': result.config.algorithm,
               'metric': result.metric,
               'config': result.config.to_dict(),
               'rows': [row.to_dict() for row in result.summaries]}
    save_json_to_file(summary, join(output_dir, SUMMARY_JSON))

    save_csv_to_file(reliability_table(result).get_csv(), join(output_dir, RELIABILITY_CSV))
    save_csv_to_file(convergence_table(result).get_csv(), join(output_dir, CONVERGENCE_CSV))

    if result.config.kind == 'portfolio':
        report = portfolio_report(result)
        if report is not None:
            save_json_to_file(report, join(output_dir, PORTFOLIO_JSON))
            logger.info("Best Sharpe ratio %s", report['best_sharpe_ratio'])

    logger.info("Results written to %s", output_dir)


#################################################################################
# Ranking
#################################################################################
def competition_ranks(values):
    """
    Rank 1 = smallest; tied values share the lowest rank of the tie (1, 1, 3)
    :param values: real numbers
    :rtype: list
    """
    return [1 + sum(1 for other in values if other < v) for v in values]


@dataclass(frozen=True)
class RankResult:
    algorithms: tuple
    functions: tuple
    fitness_ranks: dict  # function key -> {algorithm: rank}
    time_ranks: dict
    avg_fitness_rank: dict  # algorithm -> average rank over functions
    avg_time_rank: dict
    overall_fitness_rank: dict  # algorithm -> competition rank of its average rank
    overall_time_rank: dict

    def table(self):
        table = DataTable(columns=RANK_COLUMNS)
        for algorithm in self.algorithms:
            table.append_row([algorithm, self.avg_fitness_rank[algorithm], self.overall_fitness_rank[algorithm],
                              self.avg_time_rank[algorithm], self.overall_time_rank[algorithm]])
        return table

    def detail_table(self):
        columns = ['Function'] + list(self.algorithms)
        table = DataTable(columns=columns)
        for function in self.functions:
            table.append_row([function] + [self.fitness_ranks[function][a] for a in self.algorithms])
        return table


def _rank_per_function(matrix, algorithms, functions, index):
    ranks = {}
    for function in functions:
        values = [matrix[a][function][index] for a in algorithms]
        ranks[function] = dict(zip(algorithms, competition_ranks(values)))
    return ranks


def rank_algorithms(summaries):
    """
    Average competition ranks of algorithms across functions, by mean fitness and by mean time
    :param summaries: algorithm -> {function key: (mean, time_seconds)}
    :type summaries: dict
    :rtype: RankResult
    """
    if not summaries:
        raise IncompleteMatrixError("No algorithms to rank")
    algorithms = tuple(summaries)
    functions = []
    for algorithm in algorithms:
        for function in summaries[algorithm]:
            if function not in functions:
                functions.append(function)
    if not functions:
        raise IncompleteMatrixError("No functions to rank")

    for algorithm in algorithms:
        for function in functions:
            cell = summaries[algorithm].get(function)
            if cell is None or any(v is None or math.isnan(float(v)) for v in cell):
                raise IncompleteMatrixError("No result for algorithm %s on %s" % (algorithm, function))

    fitness_ranks = _rank_per_function(summaries, algorithms, functions, 0)
    time_ranks = _rank_per_function(summaries, algorithms, functions, 1)
    avg_fitness = {a: float(np.mean([fitness_ranks[f][a] for f in functions])) for a in algorithms}
    avg_time = {a: float(np.mean([time_ranks[f][a] for f in functions])) for a in algorithms}

    overall_fitness = competition_ranks([avg_fitness[a] for a in algorithms])
    overall_time = competition_ranks([avg_time[a] for a in algorithms])
    return RankResult(algorithms=algorithms, functions=tuple(functions),
                      fitness_ranks=fitness_ranks, time_ranks=time_ranks,
                      avg_fitness_rank=avg_fitness, avg_time_rank=avg_time,
                      overall_fitness_rank=dict(zip(algorithms, overall_fitness)),
                      overall_time_rank=dict(zip(algorithms, overall_time)))


def function_key(function, dimension):
    return '%s/D%s' % (function, dimension)


def load_summary(path):
    """
    Read a summary written by export_results
    :param path: summary.json, summary.csv, or a result directory; an optional 'name=' prefix sets the label
    :type path: str
    :return: algorithm label and {function key: (mean, time_seconds)}
    :rtype: tuple
    """
    label = None
    if '=' in path:
        label, path = path.split('=', 1)
    if isdir(path):
        path = join(path, SUMMARY_JSON)
    if not isfile(path):
        raise FileNotFoundError("Summary file not found: %s" % path)

    if splitext(path)[1].lower() == '.json':
        try:
            summary = load_json_from_file(path)
        except ValueError as e:
            raise ConfigurationError("%s is not valid JSON: %s" % (path, e))
        if not isinstance(summary, dict) or 'rows' not in summary:
            raise ConfigurationError("%s is not a summary file" % path)
        label = label or summary.get('algorithm') or basename(dirname(path))
        cells = {function_key(r['Function'], r['Dimension']): (r['Mean'], r['Time(s)']) for r in summary['rows']}
        return label, cells

    columns, data = load_csv_from_file(path)
    missing = [c for c in SUMMARY_COLUMNS if c not in columns]
    if missing:
        raise ConfigurationError("%s is missing column(s) %s" % (path, ', '.join(missing)))
    label = label or basename(dirname(path)) or splitext(basename(path))[0]
    cells = {}
    for i, function in enumerate(data['Function']):
        try:
            cells[function_key(function, data['Dimension'][i])] = (float(data['Mean'][i]), float(data['Time(s)'][i]))
        except ValueError:
            raise ConfigurationError("%s row %s has a non-numeric Mean or Time(s)" % (path, i + 2))
    return label, cells


def rank_summary_files(paths, output_dir=None):
    """
    Rank the algorithms behind several summary files and optionally write ranks.csv and rank_detail.csv
    :param paths: summary file paths, directories or name=path entries
    :type paths: list
    :rtype: RankResult
    """
    summaries = {}
    for path in paths:
        label, cells = load_summary(path)
        if label in summaries:
            raise ConfigurationError("Duplicate algorithm label %r, use name=path to rename" % label)
        summaries[label] = cells

    ranks = rank_algorithms(summaries)
    if output_dir is not None:
        ensure_directory(output_dir)
        save_csv_to_file(ranks.table().get_csv(), join(output_dir, 'ranks.csv'))
        save_csv_to_file(ranks.detail_table().get_csv(), join(output_dir, 'rank_detail.csv'))
    for algorithm in ranks.algorithms:
        logger.info("%s: average fitness rank %0.2f, average time rank %0.2f", algorithm,
                    ranks.avg_fitness_rank[algorithm], ranks.avg_time_rank[algorithm])
    return ranks

