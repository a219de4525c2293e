#!/usr/bin/env python
# -*- coding: utf-8 -*-

# conftest.py
"""
Shared fixtures and the --runslow option for desk-scale replication runs
"""

import numpy as np
import pytest
from vsopt.objective import Objective
from vsopt.params import VsoParams


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help="run desk-scale replication tests")


def pytest_configure(config):
    config.addinivalue_line('markers', "slow: desk-scale replication run, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


class FixedRng:
    """Stand-in for numpy's Generator returning scripted uniform draws, in order, then a constant"""
    def __init__(self, values=(), default=0.5):
        self.values = list(values)
        self.default = default

    def _next(self):
        return self.values.pop(0) if self.values else self.default

    def random(self, size=None):
        if size is None:
            return self._next()
        return np.array([self._next() for _ in range(int(np.prod(size)))]).reshape(size)

    def normal(self, loc=0., scale=1., size=None):
        return np.zeros(size) if size is not None else 0.

    def integers(self, high, size=None):
        return 0


@pytest.fixture
def fixed_rng():
    return FixedRng


@pytest.fixture
def sphere_objective():
    return Objective(lambda x: float(np.sum(x ** 2)), 5, -5., 5., name='sphere')


@pytest.fixture
def constant_objective():
    def make(value, dimension=3, lower=-1., upper=1.):
        return Objective(lambda x: value, dimension, lower, upper, name='constant')
    return make


@pytest.fixture
def default_params():
    return VsoParams()
