#!/usr/bin/env python
# -*- coding: utf-8 -*-

# options.py
"""
Classes containing user preferences: built-in defaults, a flat key = value config file and command line flags
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import logging
from vsopt.errors import ConfigurationError
from vsopt.paths import DEFAULT_OUTPUT_DIR


logger = logging.getLogger(__name__)

PARAM_PREFIX = 'param.'
TRUE_STRINGS = {'1', 'true', 'yes', 'on'}
FALSE_STRINGS = {'0', 'false', 'no', 'off'}


class Options:
    def __init__(self):
        # Objective selection
        self.function = ['F1']
        self.dim = [30]
        self.prices = None
        self.mode = 'long'
        self.risk_free = '0'
        self.risk_free_annual = False

        # Protocol
        self.algo = 'vso'
        self.no_import = False
        self.iters = None  # per-objective default when unset
        self.runs = 31
        self.seed = 0
        self.workers = 1
        self.error = False

        # Output
        self.out = DEFAULT_OUTPUT_DIR
        self.inputs = []

        # key=value optimizer parameter overrides, strings until validated by VsoParams/DeParams
        self.params = {}

    # types used to parse config file values; None-valued defaults are listed explicitly
    _types = {'function': (list, str), 'dim': (list, int), 'inputs': (list, str), 'prices': str, 'iters': int}

    @property
    def keys(self):
        return sorted(k for k in vars(self) if k != 'params')

    def _parse_value(self, key, text):
        kind = self._types.get(key, type(getattr(self, key)))
        try:
            if isinstance(kind, tuple):
                item_type = kind[1]
                return [item_type(v.strip()) for v in text.split(',') if v.strip()]
            if kind is bool:
                lowered = text.lower()
                if lowered in TRUE_STRINGS:
                    return True
                if lowered in FALSE_STRINGS:
                    return False
                raise ValueError(text)
            return kind(text)
        except ValueError:
            raise ConfigurationError("Invalid value for %s: %r" % (key, text))

    def set_option(self, key, value):
        """
        :param key: flag name (dashes or underscores) or param.<name>
        :type key: str
        :param value: already typed value, or a str to parse
        """
        if key.startswith(PARAM_PREFIX):
            self.params[key[len(PARAM_PREFIX):].strip()] = str(value).strip()
            return
        attr = key.strip().replace('-', '_')
        if attr not in self.keys:
            raise ConfigurationError("Unknown option %r" % key)
        setattr(self, attr, self._parse_value(attr, value) if isinstance(value, str) else value)

    def load_config(self, abs_file_path):
        """
        Apply a flat key = value document; blank lines and # comments are ignored
        :param abs_file_path: config file path
        :type abs_file_path: str
        """
        with open(abs_file_path, 'r', encoding='utf-8') as doc:
            for line_number, line in enumerate(doc, start=1):
                line = line.split('#', 1)[0].strip()
                if not line:
                    continue
                if '=' not in line:
                    raise ConfigurationError("%s line %s: expected key = value, got %r" %
                                             (abs_file_path, line_number, line))
                key, value = line.split('=', 1)
                self.set_option(key.strip(), value.strip())
        logger.debug("Loaded options from %s", abs_file_path)

    def apply_args(self, args):
        """
        Apply every command line flag that was given (argparse leaves the others as None)
        :param args: parsed command line
        :type args: argparse.Namespace
        """
        for key, value in vars(args).items():
            if value is None or key not in self.keys:
                continue
            if isinstance(value, bool) and not value:
                continue  # store_true flags can only switch an option on
            setattr(self, key, value)
        for key, value in (getattr(args, 'param', None) or []):
            self.params[key] = value
