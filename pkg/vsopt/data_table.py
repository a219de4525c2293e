#!/usr/bin/env python
# -*- coding: utf-8 -*-

# data_table.py
"""
A column-oriented table used for summaries, traces and rank tables
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

from copy import deepcopy
from vsopt.utilities import format_scientific


class DataTable:
    """
    Data is stored as a dictionary keyed by column name with equal-length lists as values; rows are rendered to
    csv with optional per-column formatters
    """
    def __init__(self, data=None, columns=None, formats=None):
        """
        :param data: data should be formatted in a dictionary with keys being the column names and values being lists
        :type data: dict
        :param columns: the keys of the data object, in display order
        :type columns: list
        :param formats: optional mapping of column name to a function converting a value to str
        :type formats: dict
        """
        self.data = {}
        self.columns = []
        self.formats = dict(formats) if formats else {}
        if columns:
            self.set_data(data or {c: [] for c in columns}, columns)

    def set_data(self, data, columns):
        """
        Replace all data
        :param data: dict of column name to list of values
        :type data: dict
        :param columns: the keys of data, in display order
        :type columns: list
        """
        lengths = {len(data[c]) for c in columns}
        if len(lengths) > 1:
            raise ValueError("All columns must have the same length")
        self.data = deepcopy(data)
        self.columns = list(columns)

    @property
    def keys(self):
        return [col for col in self.columns]

    @property
    def column_count(self):
        return len(self.columns)

    @property
    def row_count(self):
        if self.data and self.columns:
            return len(self.data[self.columns[0]])
        return 0

    def append_row(self, row):
        """
        Add a row of data
        :param row: data ordered by self.columns
        :type row: list
        """
        if len(row) != self.column_count:
            raise ValueError("Row has %s values, table has %s columns" % (len(row), self.column_count))
        for i, key in enumerate(self.keys):
            self.data.setdefault(key, []).append(row[i])

    def format_value(self, column, value):
        if column in self.formats:
            return self.formats[column](value)
        if isinstance(value, float):
            return repr(value)
        return str(value)

    @property
    def data_for_csv(self):
        """
        Iterate through self.data to get a list of csv rows, header first
        :rtype: list
        """
        data = [list(self.columns)]
        for row_index in range(self.row_count):
            data.append([self.format_value(key, self.data[key][row_index]).replace(',', ';') for key in self.keys])
        return data

    def get_csv(self, exclude_columns=None):
        """
        :param exclude_columns: columns left out of the output (e.g., timing columns for byte comparison)
        :type exclude_columns: list
        :return: csv string
        :rtype: str
        """
        exclude = set(exclude_columns or [])
        keep = [i for i, c in enumerate(self.columns) if c not in exclude]
        return '\n'.join(','.join(row[i] for i in keep) for row in self.data_for_csv)


def scientific_formats(columns, digits=2):
    """Formatter mapping that prints the given columns like 1.92E+06"""
    return {c: (lambda value, d=digits: format_scientific(value, d)) for c in columns}
