#!/usr/bin/env python
# -*- coding: utf-8 -*-

# test_de.py
"""
Tests of the DE/rand/1/bin colony
"""

import numpy as np
import pytest
from vsopt.de import de_init, de_step, make_trial, crossover_mask, run_de
from vsopt.errors import ConfigurationError
from vsopt.objective import Objective
from vsopt.params import DeParams


@pytest.fixture
def sphere_10d():
    return Objective(lambda x: float(np.sum(x ** 2)), 10, -5.12, 5.12, name='sphere')


def test_init_size_and_bounds():
    objective = Objective(lambda x: float(np.sum(x)), 6, -1., 1.)
    colony = de_init(objective, DeParams(pop_size=20), np.random.default_rng(0))
    assert len(colony) == 20
    assert colony.eval_count == 20
    assert np.all(colony.members >= -1.) and np.all(colony.members <= 1.)
    assert colony.best_index == int(np.argmin(colony.fitness))


def test_init_constant_objective_ties(constant_objective):
    colony = de_init(constant_objective(4.), DeParams(pop_size=5), np.random.default_rng(0))
    assert colony.best_index == 0


def test_init_rejects_small_population(sphere_10d):
    with pytest.raises(ConfigurationError):
        de_init(sphere_10d, DeParams(pop_size=3), np.random.default_rng(0))


def test_params_validation():
    with pytest.raises(ConfigurationError):
        DeParams(crossover_rate=1.5)
    with pytest.raises(ConfigurationError):
        DeParams(differential_weight=-0.1)


def test_trial_copies_r1_without_differential_weight():
    members = np.random.default_rng(1).random((6, 4))
    trial, (r1, r2, r3) = make_trial(members, 2, DeParams(pop_size=6, crossover_rate=1., differential_weight=0.),
                                     np.random.default_rng(2))
    assert len({2, r1, r2, r3}) == 4
    np.testing.assert_array_equal(trial, members[r1])


def test_crossover_forces_one_dimension():
    rng = np.random.default_rng(3)
    for _ in range(100):
        mask = crossover_mask(8, 0., rng)
        assert mask.sum() == 1


def test_trial_differs_from_target():
    rng = np.random.default_rng(4)
    members = rng.random((10, 5))
    params = DeParams(pop_size=10, crossover_rate=0.)
    for target in range(10):
        trial, _ = make_trial(members, target, params, rng)
        assert np.sum(trial != members[target]) >= 1


def test_step_best_is_monotone(sphere_10d):
    params = DeParams(pop_size=20)
    rng = np.random.default_rng(5)
    colony = de_init(sphere_10d, params, rng)
    previous = colony.best_fitness
    for _ in range(50):
        _, best = de_step(colony, sphere_10d, params, rng)
        assert best <= previous
        previous = best
    assert np.all(colony.members >= -5.12) and np.all(colony.members <= 5.12)
    assert colony.eval_count == 20 * 51


def test_step_returns_best(sphere_10d):
    params = DeParams(pop_size=8)
    rng = np.random.default_rng(6)
    colony = de_init(sphere_10d, params, rng)
    rna, fitness = de_step(colony, sphere_10d, params, rng)
    assert fitness == colony.fitness.min()
    assert fitness == pytest.approx(sphere_10d(rna))


def reference_de_sphere(dimension, pop_size, generations, seed, weight=0.5, crossover_rate=0.3, bound=5.12):
    """Plain numpy DE/rand/1/bin on the sphere, synchronous generations and <= replacement"""
    rng = np.random.default_rng(seed)
    population = rng.uniform(-bound, bound, (pop_size, dimension))
    fitness = np.sum(population ** 2, axis=1)
    for _ in range(generations):
        trials = np.empty_like(population)
        for i in range(pop_size):
            r1, r2, r3 = rng.choice([j for j in range(pop_size) if j != i], 3, replace=False)
            mutant = population[r1] + weight * (population[r2] - population[r3])
            cross = rng.random(dimension) < crossover_rate
            cross[rng.integers(dimension)] = True
            trials[i] = np.clip(np.where(cross, mutant, population[i]), -bound, bound)
        trial_fitness = np.sum(trials ** 2, axis=1)
        accepted = trial_fitness <= fitness
        population[accepted] = trials[accepted]
        fitness[accepted] = trial_fitness[accepted]
    return float(fitness.min())


def test_sphere_sanity(sphere_10d):
    assert reference_de_sphere(10, 20, 500, seed=0) <= 1e-3

    record = run_de(sphere_10d, DeParams(pop_size=20), 500, seed=0)
    assert record.best_fitness <= 1e-3
    assert record.algorithm == 'de'
    assert np.all(np.diff(record.trace_fitness) <= 0)


def test_run_de_deterministic(sphere_10d):
    first = run_de(sphere_10d, DeParams(pop_size=10), 30, seed=8)
    second = run_de(sphere_10d, DeParams(pop_size=10), 30, seed=8)
    assert first.trace == second.trace
    assert first.best_rna == second.best_rna


def test_run_de_rejects_zero_iterations(sphere_10d):
    with pytest.raises(ConfigurationError):
        run_de(sphere_10d, DeParams(), 0, seed=0)
