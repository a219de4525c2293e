#!/usr/bin/env python
# -*- coding: utf-8 -*-

# params.py
"""
Tunable constants of the virus spread optimizer and its imported differential evolution colony
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

from dataclasses import dataclass, fields, replace
from vsopt.errors import ConfigurationError


MIN_DE_POP_SIZE = 4  # target plus three distinct partners


def _check_range(name, value, low, high, low_open=False, high_open=False):
    """Raise ConfigurationError unless value lies in the given (half-)open interval"""
    too_low = value <= low if low_open else value < low
    too_high = value >= high if high_open else value > high
    if too_low or too_high:
        interval = "%s%s, %s%s" % ('(' if low_open else '[', low, high, ')' if high_open else ']')
        raise ConfigurationError("%s must be in %s, got %s" % (name, interval, value))


def _coerce(field_type, key, value):
    if not isinstance(value, str):
        return field_type(value)
    try:
        if field_type is int:
            return int(float(value)) if float(value).is_integer() else int(value)
        return field_type(value)
    except ValueError:
        raise ConfigurationError("Could not convert %s=%r to %s" % (key, value, field_type.__name__))


class _OverridableMixin:
    def with_overrides(self, overrides):
        """
        Build a new, validated instance with some fields replaced
        :param overrides: mapping of field name to value (strings are coerced to the field type)
        :type overrides: dict
        :return: new params object
        """
        types = {f.name: f.type for f in fields(self)}
        unknown = sorted(set(overrides) - set(types))
        if unknown:
            raise ConfigurationError("Unknown parameter(s) for %s: %s" % (type(self).__name__, ', '.join(unknown)))
        kwargs = {key: _coerce(types[key], key, value) for key, value in overrides.items()}
        return replace(self, **kwargs)

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class VsoParams(_OverridableMixin):
    """All tunable constants of the virus spread optimizer, defaults tuned on the benchmark suite"""
    n_pop: int = 30
    n_im: int = 20
    r_c: float = 0.8
    r_s: float = 0.3
    r_m: float = 0.3
    p_c_hs: float = 0.8
    p_s_hs: float = 0.5
    delta_s: float = 0.9
    alpha: float = 0.1
    gamma: float = 2.0
    rev_percent: float = 0.8
    p_im: float = 0.5
    h_contacts: int = 1
    max_iterations: int = 10000

    def __post_init__(self):
        if self.n_pop < 1:
            raise ConfigurationError("n_pop must be a positive integer, got %s" % self.n_pop)
        if self.n_im != 0 and self.n_im < MIN_DE_POP_SIZE:
            raise ConfigurationError("n_im must be 0 (no imported infection) or at least %s, got %s" %
                                     (MIN_DE_POP_SIZE, self.n_im))
        for name in ['r_c', 'r_s', 'r_m']:
            _check_range(name, getattr(self, name), 0., 1., low_open=True, high_open=True)
        if not (self.r_m <= self.r_s < self.r_c):
            raise ConfigurationError("Infection rates must satisfy 0 < r_m <= r_s < r_c < 1, got "
                                     "r_m=%s, r_s=%s, r_c=%s" % (self.r_m, self.r_s, self.r_c))
        for name in ['p_c_hs', 'p_s_hs', 'alpha', 'rev_percent', 'p_im']:
            _check_range(name, getattr(self, name), 0., 1.)
        _check_range('delta_s', self.delta_s, 0., 1., low_open=True)
        _check_range('gamma', self.gamma, 1., 2.)
        if self.h_contacts < 1:
            raise ConfigurationError("h_contacts must be a positive integer, got %s" % self.h_contacts)
        if self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be at least 1, got %s" % self.max_iterations)

    # Transformation matrix: each row is (P_H->M, P_H->S) for a source type and sums to 1
    @property
    def p_c_hm(self):
        return 1. - self.p_c_hs

    @property
    def p_s_hm(self):
        return 1. - self.p_s_hs

    @property
    def p_m_hm(self):
        return 1.

    @property
    def p_m_hs(self):
        return 0.

    @property
    def transformation_matrix(self):
        """Rows for critical, severe and mild sources, columns (to mild, to severe)"""
        return ((self.p_c_hm, self.p_c_hs),
                (self.p_s_hm, self.p_s_hs),
                (self.p_m_hm, self.p_m_hs))

    @property
    def rev_num(self):
        """Number of hosts recovered when the whole population is infectious (floored)"""
        return int(self.n_pop * self.rev_percent + 1e-9)

    @property
    def import_enabled(self):
        return self.n_im > 0


@dataclass(frozen=True)
class DeParams(_OverridableMixin):
    """Differential evolution (DE/rand/1/bin) constants"""
    pop_size: int = 20
    crossover_rate: float = 0.3
    differential_weight: float = 0.5

    def __post_init__(self):
        if self.pop_size < 1:
            raise ConfigurationError("pop_size must be a positive integer, got %s" % self.pop_size)
        _check_range('crossover_rate', self.crossover_rate, 0., 1.)
        _check_range('differential_weight', self.differential_weight, 0., 2.)


BASELINE_DE_POP_SIZE = 50


def split_overrides(overrides):
    """
    Route a flat mapping of key=value overrides to VsoParams and DeParams
    :param overrides: mapping from --param flags or param.<name> config keys
    :type overrides: dict
    :return: (vso overrides, de overrides)
    :rtype: tuple
    """
    vso_keys, de_keys = set(VsoParams.field_names()), set(DeParams.field_names())
    unknown = sorted(set(overrides) - vso_keys - de_keys)
    if unknown:
        raise ConfigurationError("Unknown parameter(s): %s" % ', '.join(unknown))
    vso = {k: v for k, v in overrides.items() if k in vso_keys}
    de = {k: v for k, v in overrides.items() if k in de_keys}
    return vso, de


def parse_override(text):
    """Split a 'key=value' string"""
    if '=' not in text:
        raise ConfigurationError("Parameter override must look like key=value, got %r" % text)
    key, value = text.split('=', 1)
    return key.strip(), value.strip()
