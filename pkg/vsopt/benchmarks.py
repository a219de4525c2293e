#!/usr/bin/env python
# -*- coding: utf-8 -*-

# benchmarks.py
"""
Sixteen classical, dimension-scalable benchmark functions and the fitness error metric
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional
import numpy as np
from vsopt.errors import ConfigurationError, UnsupportedMetricError
from vsopt.objective import Objective


STYBLINSKI_TANG_MIN_PER_DIM = -39.16599
STYBLINSKI_TANG_ARGMIN = -2.903534
MICHALEWICZ_2D_MIN = -1.8013
MICHALEWICZ_2D_ARGMIN = (2.20290552, 1.57079633)
MICHALEWICZ_M = 10


@dataclass(frozen=True)
class BenchmarkSpec:
    id: str
    name: str
    dimension: int
    bound_l: float
    bound_u: float
    known_optimum: Optional[float]
    modality: str
    optimum_location: Optional[tuple] = None


#################################################################################
# Functions, x is a 1-D numpy array
#################################################################################
def _index(x):
    return np.arange(1, len(x) + 1)


def sphere(x):
    return float(np.sum(x ** 2))


def brown(x):
    x2 = x ** 2
    return float(np.sum(x2[:-1] ** (x2[1:] + 1.) + x2[1:] ** (x2[:-1] + 1.)))


def ellipsoid(x):
    # As tabulated: one common scale factor for every coordinate
    factor = 1000. ** (1. / (len(x) - 1)) if len(x) > 1 else 1.
    return float(np.sum((factor * x) ** 2))


def schwefel_2_21(x):
    return float(np.max(np.abs(x)))


def weighted_sphere(x):
    return float(np.sum(_index(x) * x ** 2))


def sum_of_different_powers(x):
    return float(np.sum(np.abs(x) ** (_index(x) + 1)))


def zakharov(x):
    s = np.sum(0.5 * _index(x) * x)
    return float(np.sum(x ** 2) + s ** 2 + s ** 4)


def schwefel_1_2(x):
    return float(np.sum(np.cumsum(x) ** 2))


def rastrigin(x):
    return float(10. * len(x) + np.sum(x ** 2 - 10. * np.cos(2. * np.pi * x)))


def ackley(x):
    d = len(x)
    return float(-20. * np.exp(-0.2 * np.sqrt(np.sum(x ** 2) / d))
                 - np.exp(np.sum(np.cos(2. * np.pi * x)) / d) + 20. + np.e)


def griewank(x):
    return float(1. + np.sum(x ** 2) / 4000. - np.prod(np.cos(x / np.sqrt(_index(x)))))


def styblinski_tang(x):
    return float(0.5 * np.sum(x ** 4 - 16. * x ** 2 + 5. * x))


def csendes(x):
    nonzero = x != 0
    inv = np.divide(1., x, out=np.zeros_like(x), where=nonzero)
    return float(np.sum(np.where(nonzero, x ** 6 * (2. + np.sin(inv)), 0.)))


def xin_she_yang_2(x):
    return float(np.sum(np.abs(x)) * np.exp(-np.sum(np.sin(x ** 2))))


def alpine_1(x):
    return float(np.sum(np.abs(x * np.sin(x) + 0.1 * x)))


def michalewicz(x):
    return float(-np.sum(np.sin(x) * np.sin(_index(x) * x ** 2 / np.pi) ** (2 * MICHALEWICZ_M)))


#################################################################################
# Registry
#################################################################################
class BenchmarkFunction:
    """Registry entry: expression, search range and documented optimum"""
    def __init__(self, name, func, bound_l, bound_u, modality, optimum=0., location=0.):
        """
        :param optimum: optimum value, or a function of D returning it (None when not documented)
        :param location: per-coordinate optimum location, a function of D returning a tuple, or None
        """
        self.name = name
        self.func = func
        self.bound_l = bound_l
        self.bound_u = bound_u
        self.modality = modality
        self.optimum = optimum
        self.location = location

    def known_optimum(self, dimension):
        if callable(self.optimum):
            return self.optimum(dimension)
        return self.optimum

    def optimum_location(self, dimension):
        if callable(self.location):
            return self.location(dimension)
        if self.location is None:
            return None
        return tuple([float(self.location)] * dimension)


def _michalewicz_optimum(dimension):
    return MICHALEWICZ_2D_MIN if dimension == 2 else None


def _michalewicz_location(dimension):
    return MICHALEWICZ_2D_ARGMIN if dimension == 2 else None


BENCHMARKS = OrderedDict([
    ('F1', BenchmarkFunction('Sphere', sphere, -1000., 1000., 'uni-modal')),
    ('F2', BenchmarkFunction('Brown', brown, -1., 4., 'uni-modal')),
    ('F3', BenchmarkFunction('Ellipsoid', ellipsoid, -5.12, 5.12, 'uni-modal')),
    ('F4', BenchmarkFunction('Schwefel 2.21', schwefel_2_21, -100., 100., 'uni-modal')),
    ('F5', BenchmarkFunction('Weighted Sphere', weighted_sphere, -5.12, 5.12, 'uni-modal')),
    ('F6', BenchmarkFunction('Sum of Different Powers', sum_of_different_powers, -1., 1., 'uni-modal')),
    ('F7', BenchmarkFunction('Zakharov', zakharov, -5., 10., 'uni-modal')),
    ('F8', BenchmarkFunction('Schwefel 1.2', schwefel_1_2, -100., 100., 'uni-modal')),
    ('F9', BenchmarkFunction('Rastrigin', rastrigin, -5.12, 5.12, 'multi-modal')),
    ('F10', BenchmarkFunction('Ackley', ackley, -32., 32., 'multi-modal')),
    ('F11', BenchmarkFunction('Griewank', griewank, -100., 100., 'multi-modal')),
    ('F12', BenchmarkFunction('Styblinski-Tang', styblinski_tang, -5., 5., 'multi-modal',
                              optimum=lambda d: STYBLINSKI_TANG_MIN_PER_DIM * d, location=STYBLINSKI_TANG_ARGMIN)),
    ('F13', BenchmarkFunction('Csendes', csendes, -1., 1., 'multi-modal')),
    ('F14', BenchmarkFunction('Xin-She Yang N.2', xin_she_yang_2, -2. * np.pi, 2. * np.pi, 'multi-modal')),
    ('F15', BenchmarkFunction('Alpine N.1', alpine_1, -10., 10., 'multi-modal')),
    ('F16', BenchmarkFunction('Michalewicz', michalewicz, 0., np.pi, 'multi-modal',
                              optimum=_michalewicz_optimum, location=_michalewicz_location)),
])


def normalize_id(function_id):
    """Accept 'F1', 'f1' or 'F01'"""
    text = str(function_id).strip().upper()
    if text.startswith('F') and text[1:].isdigit() and 'F%d' % int(text[1:]) in BENCHMARKS:
        return 'F%d' % int(text[1:])
    raise ConfigurationError("Unknown benchmark function %r, expected one of %s" %
                             (function_id, ', '.join(BENCHMARKS)))


def get_benchmark_spec(function_id, dimension):
    """
    :param function_id: 'F1' ... 'F16'
    :param dimension: number of decision variables
    :rtype: BenchmarkSpec
    """
    key = normalize_id(function_id)
    if key not in BENCHMARKS:
        raise ConfigurationError("Unknown benchmark function %r, expected one of %s" %
                                 (function_id, ', '.join(BENCHMARKS)))
    entry = BENCHMARKS[key]
    return BenchmarkSpec(id=key, name=entry.name, dimension=int(dimension), bound_l=entry.bound_l,
                         bound_u=entry.bound_u, known_optimum=entry.known_optimum(int(dimension)),
                         modality=entry.modality, optimum_location=entry.optimum_location(int(dimension)))


def make_benchmark(function_id, dimension):
    """
    Build the Objective for a registered benchmark
    :param function_id: 'F1' ... 'F16' (case-insensitive, leading zeros allowed)
    :param dimension: D >= 1
    :rtype: Objective
    """
    spec = get_benchmark_spec(function_id, dimension)
    return Objective(BENCHMARKS[spec.id].func, spec.dimension, spec.bound_l, spec.bound_u,
                     name=spec.id, spec=spec)


def fitness_error(f_x, spec):
    """
    Distance of an achieved fitness from the documented global optimum, f(x) - f(x*)
    :param f_x: achieved fitness
    :param spec: benchmark metadata
    :type spec: BenchmarkSpec
    """
    if spec.known_optimum is None:
        raise UnsupportedMetricError("%s (%s) has no documented optimum at D=%s" %
                                     (spec.id, spec.name, spec.dimension))
    return float(f_x) - spec.known_optimum
