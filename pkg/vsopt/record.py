#!/usr/bin/env python
# -*- coding: utf-8 -*-

# record.py
"""
Per-run artifacts and random stream setup shared by the optimizers
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

from dataclasses import dataclass, field, asdict
import numpy as np


def seed_streams(seed):
    """
    Independent random Generators derived from one 64-bit seed
    :param seed: non-negative integer below 2**64
    :return: (operator stream, imported colony stream, import acceptance stream)
    :rtype: tuple
    """
    children = np.random.SeedSequence(int(seed)).spawn(3)
    return tuple(np.random.default_rng(child) for child in children)


@dataclass
class Diagnostics:
    """Counters of unusual events during a run"""
    non_finite_fitness: int = 0
    non_finite_rna: int = 0
    imported_replacements: int = 0
    colony_eval_count: int = 0

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class RunRecord:
    """Result of one optimizer run"""
    best_rna: tuple
    best_fitness: float
    trace: tuple  # (iteration, best fitness so far) pairs
    eval_count: int
    wall_time: float
    seed: int
    algorithm: str = 'vso'
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    @property
    def trace_fitness(self):
        return np.array([f for _, f in self.trace])

    def to_dict(self, include_trace=False):
        data = {'best_rna': list(self.best_rna),
                'best_fitness': self.best_fitness,
                'eval_count': self.eval_count,
                'wall_time': self.wall_time,
                'seed': self.seed,
                'algorithm': self.algorithm,
                'diagnostics': self.diagnostics.to_dict()}
        if include_trace:
            data['trace'] = [list(row) for row in self.trace]
        return data
