#!/usr/bin/env python
# -*- coding: utf-8 -*-

# test_data_table.py

import pytest
from vsopt.data_table import DataTable, scientific_formats


@pytest.fixture
def table():
    data = {'name': ['b', 'a', 'c'], 'value': [2., 1.5, -3.]}
    return DataTable(data, ['name', 'value'])


def test_shape(table):
    assert table.row_count == 3
    assert table.column_count == 2
    assert DataTable().row_count == 0
    assert DataTable(columns=['x']).row_count == 0


def test_append_row(table):
    table.append_row(['d', 4.])
    assert table.row_count == 4
    assert table.get_csv().splitlines()[-1] == 'd,4.0'
    with pytest.raises(ValueError):
        table.append_row(['too', 'many', 'values'])


def test_unequal_columns():
    with pytest.raises(ValueError):
        DataTable({'a': [1, 2], 'b': [1]}, ['a', 'b'])


def test_data_is_copied():
    data = {'a': [1]}
    table = DataTable(data, ['a'])
    data['a'].append(2)
    assert table.row_count == 1


def test_csv(table):
    table.append_row(['x,y', 0.1])
    assert table.get_csv().splitlines() == ['name,value', 'b,2.0', 'a,1.5', 'c,-3.0', 'x;y,0.1']
    assert table.get_csv(exclude_columns=['value']).splitlines() == ['name', 'b', 'a', 'c', 'x;y']


def test_scientific_formats(table):
    table.formats = scientific_formats(['value'])
    assert table.get_csv().splitlines()[1:] == ['b,2.00E+00', 'a,1.50E+00', 'c,-3.00E+00']
