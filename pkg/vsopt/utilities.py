#!/usr/bin/env python
# -*- coding: utf-8 -*-

# utilities.py
"""
General utilities for file handling, sorting and seeding
"""
# Copyright (c) 2026 vso-opt developers
# This file is part of vso-opt, released under an MIT license.
#    See the file LICENSE.txt included with this distribution

import json
import math
from os import makedirs
from os.path import isfile, basename


SEED_MODULUS = 2 ** 64


def get_sorted_indices(some_list, descending=False):
    """
    Stable argsort of a list of numbers; equal values keep their original (lowest index first) order
    :param some_list: values to sort
    :param descending: sort largest first
    :type descending: bool
    :return: indices of some_list in sorted order
    :rtype: list
    """
    if descending:
        return [i[0] for i in sorted(enumerate(some_list), key=lambda x: x[1], reverse=True)]
    return [i[0] for i in sorted(enumerate(some_list), key=lambda x: x[1])]


def derive_seed(base_seed, run_index):
    """Seed of the run_index-th run of an experiment, wrapped to a 64-bit unsigned integer"""
    return (int(base_seed) + int(run_index)) % SEED_MODULUS


def format_scientific(value, digits=2):
    """
    Format a value the way result tables print it, e.g. 1.92E+06
    :param value: any real
    :param digits: mantissa digits after the decimal point
    :type digits: int
    :rtype: str
    """
    if value is None:
        return ''
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return ("%%0.%dE" % digits) % value


def ensure_directory(path):
    """Create path (and parents) if needed, return path"""
    makedirs(path, exist_ok=True)
    return path


def save_csv_to_file(csv_data, abs_file_path):
    """
    Save a csv string to the provided file path
    """
    with open(abs_file_path, 'w', encoding='utf-8', newline='') as outfile:
        outfile.write(csv_data)
        if csv_data and not csv_data.endswith('\n'):
            outfile.write('\n')


def load_csv_from_file(abs_file_path):
    """
    Load a csv file written by save_csv_to_file
    :return: column names and a dict of column name to list of str values
    :rtype: tuple
    """
    columns, data = None, None
    if isfile(abs_file_path):
        with open(abs_file_path, 'r', encoding='utf-8') as infile:
            columns = [c.strip() for c in infile.readline().split(',')]
            data = {c: [] for c in columns}
            for row in infile:
                if not row.strip():
                    continue
                for i, value in enumerate(row.split(',')):
                    data[columns[i]].append(value.strip().replace(';', ','))

    return columns, data


def save_json_to_file(obj, abs_file_path):
    """
    Save a json-serializable python object to the provided file path
    """
    with open(abs_file_path, 'w', encoding='utf-8') as outfile:
        json.dump(obj, outfile, indent=2, sort_keys=True)
        outfile.write('\n')


def load_json_from_file(abs_file_path):
    """
    Load a json document from the provided absolute file path
    """
    if isfile(abs_file_path):
        with open(abs_file_path, 'r', encoding='utf-8') as infile:
            return json.load(infile)


def safe_file_name(some_string):
    """Replace path separators and spaces so a label can be used as a file name"""
    return basename(str(some_string)).replace(' ', '_').replace('/', '_').replace('\\', '_')
