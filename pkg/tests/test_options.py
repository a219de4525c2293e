#!/usr/bin/env python
# -*- coding: utf-8 -*-

# test_options.py

from argparse import Namespace
import pytest
from vsopt.errors import ConfigurationError
from vsopt.options import Options


def write_config(tmp_path, text):
    path = tmp_path / 'options.cfg'
    path.write_text(text, encoding='utf-8')
    return str(path)


def test_load_config_types(tmp_path):
    options = Options()
    options.load_config(write_config(tmp_path, '\n'
                                               'function = F1, f9 ,F10\n'
                                               'dim = 30,100\n'
                                               'iters = 500\n'
                                               'error = yes\n'
                                               'risk-free-annual = On\n'
                                               'risk-free = us-treasury-5y\n'
                                               'param.n_pop = 40\n'))
    assert options.function == ['F1', 'f9', 'F10']
    assert options.dim == [30, 100]
    assert options.iters == 500
    assert options.error is True
    assert options.risk_free_annual is True
    assert options.risk_free == 'us-treasury-5y'
    assert options.params == {'n_pop': '40'}


def test_comments_and_blank_lines(tmp_path):
    options = Options()
    options.load_config(write_config(tmp_path, '# header\n\n   \nruns = 5 # trailing\n'))
    assert options.runs == 5


@pytest.mark.parametrize('text', ['runs\n', 'unknown = 1\n', 'runs = five\n', 'error = maybe\n', 'dim = 3,x\n'])
def test_config_errors(tmp_path, text):
    with pytest.raises(ConfigurationError):
        Options().load_config(write_config(tmp_path, text))


def test_error_names_line(tmp_path):
    with pytest.raises(ConfigurationError, match='line 2'):
        Options().load_config(write_config(tmp_path, 'runs = 2\nnot a pair\n'))


def test_apply_args_precedence(tmp_path):
    options = Options()
    options.load_config(write_config(tmp_path, 'runs = 5\nseed = 7\nerror = true\nparam.n_pop = 40\n'))
    options.apply_args(Namespace(runs=2, seed=None, error=None, no_import=False, cmd='bench', config='x',
                                 param=[('n_pop', '50'), ('n_im', '10')]))
    assert options.runs == 2
    assert options.seed == 7
    assert options.error is True
    assert options.no_import is False
    assert options.params == {'n_pop': '50', 'n_im': '10'}


def test_set_option_dashes():
    options = Options()
    options.set_option('no-import', 'true')
    options.set_option('workers', 4)
    assert options.no_import is True
    assert options.workers == 4
