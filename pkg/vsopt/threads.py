#!/usr/bin/env python
# -*- coding: utf-8 -*-

# threads.py
"""
Optimizer runs of an experiment, executed on the queue worker
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import logging
from dataclasses import dataclass
from typing import Optional
from vsopt import vso
from vsopt.data_table import DataTable
from vsopt.de import run_de
from vsopt.errors import ConfigurationError
from vsopt.threading import QueueWorker
from vsopt.utilities import save_csv_to_file


logger = logging.getLogger(__name__)

TRACE_COLUMNS = ['iteration', 'best_fitness']


@dataclass(frozen=True)
class RunJob:
    """Everything one independent run needs; owns nothing mutable"""
    objective: object
    algorithm: str
    vso_params: object
    de_params: object
    seed: int
    run_index: int
    label: str
    trace_path: Optional[str] = None


def trace_table(record):
    """
    :param record: a finished run
    :type record: RunRecord
    :rtype: DataTable
    """
    data = {'iteration': [int(i) for i, _ in record.trace],
            'best_fitness': [float(f) for _, f in record.trace]}
    return DataTable(data, TRACE_COLUMNS)


def write_trace(record, abs_file_path):
    save_csv_to_file(trace_table(record).get_csv(), abs_file_path)


def perform_run(job):
    """
    Execute one run and flush its convergence trace to disk right away
    :param job: run definition
    :type job: RunJob
    :rtype: RunRecord
    """
    if job.algorithm == 'de':
        record = run_de(job.objective, job.de_params, job.vso_params.max_iterations, job.seed)
    elif job.algorithm in {'vso', 'vso-no-import'}:
        record = vso.run(job.objective, job.vso_params, job.seed, de_params=job.de_params,
                         use_import=job.algorithm == 'vso')
    else:
        raise ConfigurationError("Unknown algorithm %r" % job.algorithm)

    if job.trace_path is not None:
        write_trace(record, job.trace_path)

    logger.info("%s run %s (seed %s): best fitness %s in %0.2fs",
                job.label, job.run_index + 1, job.seed, record.best_fitness, record.wall_time)
    return record


class RunWorker(QueueWorker):
    """Run every job, publishing 'run_complete' per finished run and 'experiment_complete' at the end"""
    def __init__(self, jobs, workers=1, start=True):
        QueueWorker.__init__(self, jobs, perform_run, close_msg='experiment_complete', action_msg='run_complete',
                             action_phrase='Run', workers=workers, start=start)
