#!/usr/bin/env python
# -*- coding: utf-8 -*-

# de.py
"""
A minimal DE/rand/1/bin differential evolution colony, used for imported infection and as a baseline
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import logging
import math
from time import perf_counter
import numpy as np
from vsopt.errors import ConfigurationError
from vsopt.params import MIN_DE_POP_SIZE
from vsopt.record import RunRecord, Diagnostics, seed_streams


logger = logging.getLogger(__name__)


class DeColony:
    """Members, cached fitness and best index of a differential evolution population"""
    def __init__(self, members, fitness):
        """
        :param members: pop_size x D array of candidate solutions
        :type members: np.ndarray
        :param fitness: pop_size fitness values
        :type fitness: np.ndarray
        """
        self.members = members
        self.fitness = fitness
        self.best_index = int(np.argmin(fitness))
        self.eval_count = len(fitness)
        self.non_finite_count = 0

    def __len__(self):
        return len(self.fitness)

    @property
    def best_rna(self):
        return self.members[self.best_index].copy()

    @property
    def best_fitness(self):
        return float(self.fitness[self.best_index])


def _safe_evaluate(objective, x):
    value = float(objective(x))
    return value if math.isfinite(value) else math.inf


def de_init(objective, de_params, rng):
    """
    Sample and evaluate a colony uniformly inside the objective's bounds
    :param objective: the minimization target
    :type objective: Objective
    :param de_params: colony constants
    :type de_params: DeParams
    :param rng: numpy random Generator
    :rtype: DeColony
    """
    if de_params.pop_size < MIN_DE_POP_SIZE:
        raise ConfigurationError("DE pop_size must be at least %s, got %s" % (MIN_DE_POP_SIZE, de_params.pop_size))
    members = objective.sample_uniform(rng, de_params.pop_size)
    fitness = np.array([_safe_evaluate(objective, x) for x in members])
    colony = DeColony(members, fitness)
    colony.non_finite_count = int(np.sum(np.isinf(fitness)))
    return colony


def crossover_mask(dimension, crossover_rate, rng):
    """Binomial crossover mask with one forced dimension, so a trial always takes at least one mutant gene"""
    mask = rng.random(dimension) < crossover_rate
    mask[rng.integers(dimension)] = True
    return mask


def make_trial(members, target_index, de_params, rng):
    """
    Build one DE/rand/1/bin trial vector (not clamped)
    :param members: pop_size x D population
    :param target_index: index of the target vector
    :type target_index: int
    :param de_params: colony constants
    :param rng: numpy random Generator
    :return: trial vector and the partner indices (r1, r2, r3)
    :rtype: tuple
    """
    pop_size, dimension = members.shape
    candidates = [j for j in range(pop_size) if j != target_index]
    r1, r2, r3 = (int(j) for j in rng.choice(candidates, size=3, replace=False))
    mutant = members[r1] + de_params.differential_weight * (members[r2] - members[r3])
    mask = crossover_mask(dimension, de_params.crossover_rate, rng)
    return np.where(mask, mutant, members[target_index]), (r1, r2, r3)


def de_step(colony, objective, de_params, rng):
    """
    Advance the colony one synchronous generation with greedy (<=) replacement
    :param colony: initialized colony, updated in place
    :type colony: DeColony
    :param objective: the minimization target
    :param de_params: colony constants
    :param rng: numpy random Generator
    :return: best RNA and best fitness after the generation
    :rtype: tuple
    """
    new_members = colony.members.copy()
    new_fitness = colony.fitness.copy()
    for i in range(len(colony)):
        trial, _ = make_trial(colony.members, i, de_params, rng)
        trial = objective.clamp(trial)
        value = float(objective(trial))
        if not math.isfinite(value):
            colony.non_finite_count += 1
            value = math.inf
        if value <= colony.fitness[i]:
            new_members[i] = trial
            new_fitness[i] = value
    colony.eval_count += len(colony)
    colony.members = new_members
    colony.fitness = new_fitness
    colony.best_index = int(np.argmin(new_fitness))
    return colony.best_rna, colony.best_fitness


def run_de(objective, de_params, max_iterations, seed, callback=None):
    """
    Run DE on its own for max_iterations generations
    :param objective: the minimization target
    :param de_params: colony constants
    :param max_iterations: number of generations
    :type max_iterations: int
    :param seed: 64-bit unsigned seed
    :param callback: optional function called with (iteration, max_iterations)
    :rtype: RunRecord
    """
    if max_iterations < 1:
        raise ConfigurationError("max_iterations must be at least 1, got %s" % max_iterations)

    start = perf_counter()
    rng = seed_streams(seed)[0]
    colony = de_init(objective, de_params, rng)
    trace = []
    for iteration in range(max_iterations):
        _, best_fitness = de_step(colony, objective, de_params, rng)
        trace.append((iteration, best_fitness))
        if callback is not None:
            callback(iteration + 1, max_iterations)

    diagnostics = Diagnostics(non_finite_fitness=colony.non_finite_count)
    logger.debug("DE seed %s finished with best fitness %s", seed, colony.best_fitness)
    return RunRecord(best_rna=tuple(float(v) for v in colony.best_rna), best_fitness=colony.best_fitness,
                     trace=tuple(trace), eval_count=colony.eval_count, wall_time=perf_counter() - start,
                     seed=int(seed), algorithm='de', diagnostics=diagnostics)
