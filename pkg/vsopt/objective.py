#!/usr/bin/env python
# -*- coding: utf-8 -*-

# objective.py
"""
The minimization target consumed by the optimizers
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import numpy as np
from vsopt.errors import ConfigurationError


class Objective:
    """A black-box function of a length-D real vector with a box-shaped search space"""
    def __init__(self, func, dimension, lower, upper, name='objective', spec=None):
        """
        :param func: callable mapping a 1-D numpy array to a real fitness (smaller is better)
        :param dimension: number of decision variables D
        :type dimension: int
        :param lower: lower bound, scalar or length-D sequence
        :param upper: upper bound, scalar or length-D sequence
        :param name: label used in reports
        :type name: str
        :param spec: optional metadata (e.g., a BenchmarkSpec or PortfolioSpec)
        """
        try:
            dimension = int(dimension)
        except (TypeError, ValueError):
            raise ConfigurationError("Dimension must be an integer, got %r" % (dimension,))
        if dimension < 1:
            raise ConfigurationError("Dimension must be at least 1, got %s" % dimension)

        self.func = func
        self.dimension = dimension
        self.name = name
        self.spec = spec
        self.lower = self._broadcast(lower, 'lower')
        self.upper = self._broadcast(upper, 'upper')

        if not np.all(np.isfinite(self.lower)) or not np.all(np.isfinite(self.upper)):
            raise ConfigurationError("Bounds of %s must be finite" % name)
        if np.any(self.lower >= self.upper):
            bad = int(np.argmax(self.lower >= self.upper))
            raise ConfigurationError("Invalid bounds for %s in dimension %s: lower %s >= upper %s" %
                                     (name, bad, self.lower[bad], self.upper[bad]))

        self.lower.setflags(write=False)
        self.upper.setflags(write=False)

    def __call__(self, x):
        return self.func(np.asarray(x, dtype=float))

    def __repr__(self):
        return "Objective(%s, D=%s)" % (self.name, self.dimension)

    def _broadcast(self, bound, label):
        values = np.asarray(bound, dtype=float)
        if values.ndim == 0:
            return np.full(self.dimension, float(values))
        if values.shape != (self.dimension,):
            raise ConfigurationError("%s bound has shape %s, expected (%s,)" % (label, values.shape, self.dimension))
        return values.copy()

    @property
    def span(self):
        return self.upper - self.lower

    def sample_uniform(self, rng, count=None):
        """
        Draw points uniformly from the search box
        :param rng: numpy random Generator
        :param count: number of rows; None for a single 1-D vector
        :return: lower + rand(0,1) * (upper - lower)
        """
        shape = self.dimension if count is None else (count, self.dimension)
        return self.lower + rng.random(shape) * self.span

    def clamp(self, x):
        """Elementwise clamp to [lower, upper]"""
        return np.clip(x, self.lower, self.upper)
