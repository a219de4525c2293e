#!/usr/bin/env python
# -*- coding: utf-8 -*-

# test_benchmarks.py
"""
Benchmark registry, function values at documented optima and the fitness error metric
"""

from dataclasses import replace
import numpy as np
import pytest
from vsopt.benchmarks import BENCHMARKS, make_benchmark, get_benchmark_spec, fitness_error, normalize_id
from vsopt.errors import ConfigurationError, UnsupportedMetricError


ZERO_OPTIMUM_IDS = ['F%d' % i for i in list(range(1, 12)) + [13, 14, 15]]


@pytest.mark.parametrize('function_id', ZERO_OPTIMUM_IDS)
@pytest.mark.parametrize('dimension', [2, 30])
def test_zero_optimum_at_origin(function_id, dimension):
    objective = make_benchmark(function_id, dimension)
    assert objective.spec.known_optimum == 0.
    assert objective(np.zeros(dimension)) == pytest.approx(0., abs=1e-6)


def test_sphere_origin():
    assert make_benchmark('F1', 30)(np.zeros(30)) == 0.


def test_rastrigin_all_ones():
    assert make_benchmark('F9', 30)(np.ones(30)) == pytest.approx(30.)


def test_ackley_origin():
    assert make_benchmark('F10', 30)(np.zeros(30)) == pytest.approx(0., abs=1e-12)


def test_styblinski_tang_optimum():
    spec = get_benchmark_spec('F12', 30)
    objective = make_benchmark('F12', 30)
    value = objective(np.full(30, -2.903534))
    assert value == pytest.approx(-1174.98, abs=0.01)
    assert value == pytest.approx(spec.known_optimum, abs=1e-2)


def test_michalewicz_2d_optimum():
    objective = make_benchmark('F16', 2)
    assert objective(np.array(objective.spec.optimum_location)) == pytest.approx(-1.8013, abs=1e-3)
    assert objective.spec.known_optimum == pytest.approx(-1.8013)


def test_michalewicz_optimum_absent_above_2d():
    assert get_benchmark_spec('F16', 10).known_optimum is None


@pytest.mark.parametrize('function_id, lower, upper', [('F1', -1000., 1000.), ('F9', -5.12, 5.12),
                                                       ('F10', -32., 32.), ('F16', 0., np.pi)])
def test_bounds(function_id, lower, upper):
    objective = make_benchmark(function_id, 3)
    assert np.all(objective.lower == lower) and np.all(objective.upper == upper)


def test_modality():
    assert all(BENCHMARKS['F%d' % i].modality == 'uni-modal' for i in range(1, 9))
    assert all(BENCHMARKS['F%d' % i].modality == 'multi-modal' for i in range(9, 17))


@pytest.mark.parametrize('function_id', list(BENCHMARKS))
def test_finite_at_bounds_in_1000_dimensions(function_id):
    objective = make_benchmark(function_id, 1000)
    for x in (objective.lower, objective.upper, (objective.lower + objective.upper) / 2.):
        assert np.isfinite(objective(x))


def test_functions_are_pure():
    x = np.random.default_rng(0).uniform(-1., 1., 10)
    for function_id in BENCHMARKS:
        objective = make_benchmark(function_id, 10)
        assert objective(x) == objective(x.copy())


def test_weighted_sphere_weights_inside_sum():
    assert make_benchmark('F5', 3)(np.array([1., 1., 1.])) == pytest.approx(6.)


def test_normalize_id():
    assert normalize_id('f1') == 'F1'
    assert normalize_id('F01') == 'F1'
    with pytest.raises(ConfigurationError):
        normalize_id('sphere')
    with pytest.raises(ConfigurationError):
        make_benchmark('F17', 2)
    with pytest.raises(ConfigurationError):
        make_benchmark('F1', 0)


def test_fitness_error():
    spec = get_benchmark_spec('F1', 30)
    assert fitness_error(105., replace(spec, known_optimum=100.)) == 5.
    assert fitness_error(0., spec) == 0.
    assert fitness_error(-1000., get_benchmark_spec('F12', 30)) == pytest.approx(174.98, abs=0.01)


def test_fitness_error_without_optimum():
    with pytest.raises(UnsupportedMetricError):
        fitness_error(-5., get_benchmark_spec('F16', 10))
