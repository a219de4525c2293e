#!/usr/bin/env python
# -*- coding: utf-8 -*-

# errors.py
"""
Exceptions raised by vsopt
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution


class VsoptError(Exception):
    """Base class for all vsopt errors"""


class ConfigurationError(VsoptError):
    """Invalid parameters, bounds, dimensions, identifiers or config files"""


class PriceDataError(VsoptError):
    """Price data could not be turned into a usable PriceMatrix"""


class PriceParseError(PriceDataError):
    def __init__(self, message, row=None, column=None):
        """
        :param message: description of the problem
        :param row: 1-based line number in the source file (header is line 1)
        :type row: int
        :param column: column name of the offending cell
        :type column: str
        """
        self.row = row
        self.column = column
        if row is not None or column is not None:
            message = "%s (row %s, column %s)" % (message, row, column)
        VsoptError.__init__(self, message)


class InsufficientDataError(PriceDataError):
    pass


class UnsupportedMetricError(VsoptError):
    """The requested metric needs information the objective does not have"""


class IncompleteMatrixError(VsoptError):
    """A ranking table is missing an algorithm/function cell"""


class DegenerateWeightsError(VsoptError):
    """A raw weight vector cannot be normalized (all zeros)"""
