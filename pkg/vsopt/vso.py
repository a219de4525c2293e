#!/usr/bin/env python
# -*- coding: utf-8 -*-

# vso.py
"""
The virus spread optimizer: host population, the viral operators and the iteration loop
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import logging
import math
from enum import Enum
from time import perf_counter
import numpy as np
from vsopt.de import de_init, de_step
from vsopt.errors import VsoptError
from vsopt.params import DeParams
from vsopt.record import RunRecord, Diagnostics, seed_streams
from vsopt.utilities import get_sorted_indices


logger = logging.getLogger(__name__)

INTENSITY_EPS = 1e-12  # severe intensity is initialized as 1/u with u drawn from (INTENSITY_EPS, 1]
MIN_INTENSITY_S = np.finfo(float).tiny
GENE_COPY_PROBABILITY = 0.5


class HostType(Enum):
    HEALTHY = 'healthy'
    MILD = 'mild'
    SEVERE = 'severe'
    CRITICAL = 'critical'

    @property
    def is_infectious(self):
        return self is not HostType.HEALTHY

    @property
    def downgraded(self):
        """Host type after recovery"""
        return {HostType.SEVERE: HostType.MILD,
                HostType.MILD: HostType.HEALTHY}.get(self, self)


class Host:
    """A population member: viral RNA, host type, cached fitness and mutation intensities"""
    def __init__(self, rna, intensity_m, intensity_s, host_type=HostType.HEALTHY):
        """
        :param rna: candidate solution, length D
        :type rna: np.ndarray
        :param intensity_m: mild mutation intensity, length D
        :type intensity_m: np.ndarray
        :param intensity_s: severe mutation intensity (> 0)
        :type intensity_s: float
        :param host_type: initial type
        :type host_type: HostType
        """
        self.rna = rna
        self.intensity_m = intensity_m
        self.intensity_s = intensity_s
        self.host_type = host_type
        self.fitness = None  # stale until the next evaluation pass

    def __repr__(self):
        return "Host(%s, fitness=%s)" % (self.host_type.value, self.fitness)

    @property
    def is_infectious(self):
        return self.host_type.is_infectious

    def reinitialize(self, objective, rng):
        """Fresh RNA and intensities (type unchanged), fitness marked stale"""
        self.rna, self.intensity_m, self.intensity_s = _draw_host_state(objective, rng)
        self.fitness = None


class GBest:
    """Best solution found so far by the whole population"""
    def __init__(self, rna, fitness):
        self.rna = np.array(rna, dtype=float)
        self.fitness = float(fitness)

    def __repr__(self):
        return "GBest(fitness=%s)" % self.fitness


def _draw_host_state(objective, rng):
    rna = objective.sample_uniform(rng)
    intensity_m = objective.sample_uniform(rng) / 10.
    u = INTENSITY_EPS + (1. - INTENSITY_EPS) * (1. - rng.random())  # (eps, 1]
    return rna, intensity_m, 1. / u


#################################################################################
# Operators
#################################################################################
def initialize(params, objective, rng):
    """
    Create n_pop healthy hosts with uniformly random RNA and initial mutation intensities
    :param params: optimizer constants
    :type params: VsoParams
    :param objective: the minimization target (bounds are validated on its construction)
    :type objective: Objective
    :param rng: numpy random Generator
    :return: population
    :rtype: list
    """
    return [Host(*_draw_host_state(objective, rng)) for _ in range(params.n_pop)]


def evaluate(population, objective, diagnostics=None):
    """
    Refresh every host's cached fitness; non-finite values are stored as +inf
    :param population: hosts
    :type population: list
    :param objective: the minimization target
    :param diagnostics: optional counters updated with non-finite events
    :type diagnostics: Diagnostics
    :return: number of objective evaluations performed
    :rtype: int
    """
    for host in population:
        value = float(objective(host.rna))
        if not math.isfinite(value):
            value = math.inf
            if diagnostics is not None:
                diagnostics.non_finite_fitness += 1
        host.fitness = value
    return len(population)


def select_critical(population, prev_critical=None, gbest=None):
    """
    Designate the best host as the single critical host, downgrading the previous one to severe
    :param population: hosts with fresh fitness
    :param prev_critical: population index of the previous critical host, if any
    :type prev_critical: int
    :param gbest: best solution so far, if any
    :type gbest: GBest
    :return: index of the critical host and the (possibly new) GBest
    :rtype: tuple
    """
    if not population:
        raise VsoptError("Cannot select a critical host from an empty population")

    critical = get_sorted_indices([h.fitness for h in population])[0]
    population[critical].host_type = HostType.CRITICAL

    if critical != prev_critical:
        if prev_critical is not None:
            population[prev_critical].host_type = HostType.SEVERE
        gbest = GBest(population[critical].rna, population[critical].fitness)
    elif gbest is None or population[critical].fitness < gbest.fitness:
        gbest = GBest(population[critical].rna, population[critical].fitness)

    return critical, gbest


def mutate(population, gbest, params, objective, rng, diagnostics=None):
    """
    Update every host's RNA according to its type, then clamp to the search box
    :param population: hosts
    :param gbest: best solution of the previous selection
    :type gbest: GBest
    :param params: optimizer constants
    :param objective: supplies bounds for resampling and clamping
    :param rng: numpy random Generator
    :param diagnostics: optional counters updated when non-finite RNA is repaired
    """
    for host in population:
        if host.host_type is HostType.CRITICAL:
            continue

        if host.host_type is HostType.HEALTHY:
            host.rna = objective.sample_uniform(rng)
            continue

        previous = host.rna
        if host.host_type is HostType.MILD:
            host.intensity_m = params.alpha * host.intensity_m + params.gamma * rng.random() * (gbest.rna - host.rna)
            rna = host.rna + host.intensity_m
        else:  # severe
            host.intensity_s = max(params.delta_s * host.intensity_s, MIN_INTENSITY_S)
            rna = host.rna + rng.normal(0., host.intensity_s, objective.dimension) * host.rna

        bad = ~np.isfinite(rna)
        if np.any(bad):
            rna = np.where(bad, previous, rna)
            if diagnostics is not None:
                diagnostics.non_finite_rna += int(np.sum(bad))
        host.rna = objective.clamp(rna)


def infection_rate(host_type, params):
    return {HostType.CRITICAL: params.r_c,
            HostType.SEVERE: params.r_s,
            HostType.MILD: params.r_m}[host_type]


def mild_probability(host_type, params):
    """Probability that a successful infection from host_type produces a mild host"""
    return {HostType.CRITICAL: params.p_c_hm,
            HostType.SEVERE: params.p_s_hm,
            HostType.MILD: params.p_m_hm}[host_type]


def infect(population, params, rng):
    """
    Infectious hosts (best first) contact the worst healthy hosts and may pass on their RNA
    :param population: hosts with fitness cached at this iteration's evaluation
    :param params: optimizer constants
    :param rng: numpy random Generator
    :return: number of successful infections
    :rtype: int
    """
    infectious = [i for i, h in enumerate(population) if h.is_infectious]
    infectious = [infectious[i] for i in get_sorted_indices([population[i].fitness for i in infectious])]

    infected_count = 0
    for source_index in infectious:
        source = population[source_index]
        healthy = [i for i, h in enumerate(population) if h.host_type is HostType.HEALTHY]
        if len(healthy) < params.h_contacts:
            continue

        order = get_sorted_indices([population[i].fitness for i in healthy], descending=True)
        contacted = [healthy[i] for i in order[:params.h_contacts]]

        rate = infection_rate(source.host_type, params)
        p_mild = mild_probability(source.host_type, params)
        for dest_index in contacted:
            if rng.random() > rate:
                continue
            dest = population[dest_index]
            if rng.random() <= p_mild:
                copy_mask = rng.random(len(dest.rna)) <= GENE_COPY_PROBABILITY
                dest.rna = np.where(copy_mask, source.rna, dest.rna)
                dest.host_type = HostType.MILD
            else:
                dest.rna = source.rna.copy()
                dest.fitness = source.fitness
                dest.host_type = HostType.SEVERE
            infected_count += 1

    return infected_count


def recover(population, params, objective, rng, critical=None):
    """
    When every host is infectious, re-initialize the worst rev_num hosts and downgrade them one level
    :param population: hosts
    :param params: optimizer constants
    :param objective: supplies bounds for re-initialization
    :param rng: numpy random Generator
    :param critical: index of the critical host, never recovered
    :type critical: int
    :return: indices of recovered hosts
    :rtype: list
    """
    if not all(h.is_infectious for h in population):
        return []

    candidates = [i for i in range(len(population)) if i != critical]
    order = get_sorted_indices([population[i].fitness for i in candidates], descending=True)
    recovered = [candidates[i] for i in order[:params.rev_num]]

    for index in recovered:
        host = population[index]
        host.reinitialize(objective, rng)
        host.host_type = host.host_type.downgraded

    return recovered


def imported_infection(critical_host, colony, objective, params, de_params, iteration, rng, colony_rng):
    """
    Advance the imported DE colony one generation and possibly replace the critical host's RNA with its best
    :param critical_host: the current critical host (updated in place)
    :type critical_host: Host
    :param colony: the persistent DE colony, or None when imported infection is disabled
    :type colony: DeColony
    :param objective: the minimization target
    :param params: optimizer constants (p_im, max_iterations)
    :param de_params: colony constants
    :param iteration: current iteration in [0, max_iterations)
    :type iteration: int
    :param rng: random Generator for the acceptance draw, separate from the operator stream
    :param colony_rng: colony random Generator
    :return: True if the critical host was replaced
    :rtype: bool
    """
    if colony is None or not params.import_enabled:
        return False

    best_rna, best_fitness = de_step(colony, objective, de_params, colony_rng)
    threshold = params.p_im * iteration / params.max_iterations
    if rng.random() <= threshold and best_fitness < critical_host.fitness:
        critical_host.rna = best_rna
        critical_host.fitness = best_fitness
        return True
    return False


#################################################################################
# Iteration loop
#################################################################################
class VirusSpreadOptimizer:
    """State of a single run; operators are applied in order every iteration"""
    def __init__(self, objective, params, seed, de_params=None, use_import=True):
        """
        :param objective: the minimization target
        :type objective: Objective
        :param params: optimizer constants
        :type params: VsoParams
        :param seed: 64-bit unsigned seed
        :type seed: int
        :param de_params: crossover rate and differential weight for the imported colony (pop_size is params.n_im)
        :type de_params: DeParams
        :param use_import: False to skip imported infection entirely
        :type use_import: bool
        """
        self.objective = objective
        self.params = params
        self.seed = int(seed)
        de_params = de_params or DeParams()
        self.use_import = use_import and params.import_enabled
        self.de_params = DeParams(pop_size=params.n_im, crossover_rate=de_params.crossover_rate,
                                  differential_weight=de_params.differential_weight) if self.use_import else None

        self.rng, self.colony_rng, self.import_rng = seed_streams(self.seed)
        self.diagnostics = Diagnostics()
        self.population = initialize(params, objective, self.rng)
        self.colony = de_init(objective, self.de_params, self.colony_rng) if self.use_import else None

        self.critical = None
        self.gbest = None
        self.eval_count = 0
        self.trace = []

    @property
    def algorithm(self):
        return 'vso' if self.use_import else 'vso-no-import'

    def step(self, iteration):
        """Perform one full iteration, append the best-so-far fitness to the trace"""
        self.eval_count += evaluate(self.population, self.objective, self.diagnostics)
        self.critical, self.gbest = select_critical(self.population, self.critical, self.gbest)
        mutate(self.population, self.gbest, self.params, self.objective, self.rng, self.diagnostics)
        infect(self.population, self.params, self.rng)
        recover(self.population, self.params, self.objective, self.rng, critical=self.critical)

        if self.use_import:
            critical_host = self.population[self.critical]
            if imported_infection(critical_host, self.colony, self.objective, self.params, self.de_params,
                                  iteration, self.import_rng, self.colony_rng):
                self.gbest = GBest(critical_host.rna, critical_host.fitness)
                self.diagnostics.imported_replacements += 1

        self.trace.append((iteration, self.gbest.fitness))

    def run(self, callback=None):
        """
        Execute max_iterations iterations
        :param callback: optional function called with (iteration, max_iterations)
        :rtype: RunRecord
        """
        start = perf_counter()
        for iteration in range(self.params.max_iterations):
            self.step(iteration)
            if callback is not None:
                callback(iteration + 1, self.params.max_iterations)

        if self.colony is not None:
            self.diagnostics.colony_eval_count = self.colony.eval_count
        if self.diagnostics.non_finite_fitness or self.diagnostics.non_finite_rna:
            logger.warning("Seed %s on %s: %s non-finite fitness values, %s non-finite RNA elements repaired",
                           self.seed, self.objective.name, self.diagnostics.non_finite_fitness,
                           self.diagnostics.non_finite_rna)

        return RunRecord(best_rna=tuple(float(v) for v in self.gbest.rna), best_fitness=self.gbest.fitness,
                         trace=tuple(self.trace), eval_count=self.eval_count, wall_time=perf_counter() - start,
                         seed=self.seed, algorithm=self.algorithm, diagnostics=self.diagnostics)


def run(objective, params, seed, de_params=None, use_import=True, callback=None):
    """
    Minimize objective with the virus spread optimizer
    :param objective: the minimization target
    :type objective: Objective
    :param params: optimizer constants
    :type params: VsoParams
    :param seed: 64-bit unsigned seed; identical inputs give identical records (wall time aside)
    :type seed: int
    :param de_params: imported colony crossover rate and differential weight
    :type de_params: DeParams
    :param use_import: False for the variant without imported infection
    :type use_import: bool
    :param callback: optional progress function called with (iteration, max_iterations)
    :rtype: RunRecord
    """
    optimizer = VirusSpreadOptimizer(objective, params, seed, de_params=de_params, use_import=use_import)
    return optimizer.run(callback=callback)
