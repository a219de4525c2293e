#!/usr/bin/env python
# -*- coding: utf-8 -*-

# test_main.py
"""
Command line: exit codes, config file precedence and the rank command
"""

from os.path import isfile
import pytest
from vsopt.main import main, get_parser, load_options
from vsopt.utilities import load_json_from_file


def bench_args(out, *extra):
    return ['-q', 'bench', '--function', 'F1', '--dim', '2', '--iters', '3', '--runs', '2', '--out', str(out)] + \
        list(extra)


def test_bench_success(tmp_path):
    assert main(bench_args(tmp_path / 'out')) == 0
    assert isfile(str(tmp_path / 'out' / 'summary.csv'))
    assert isfile(str(tmp_path / 'out' / 'traces' / 'F1_D2_run001.csv'))


def test_unknown_function(tmp_path):
    args = ['-q', 'bench', '--function', 'F42', '--dim', '2', '--out', str(tmp_path / 'out')]
    assert main(args) == 2
    assert not isfile(str(tmp_path / 'out' / 'summary.csv'))


@pytest.mark.parametrize('param', ['bogus=1', 'r_m=0.9', 'n_pop=abc', 'gamma=3', 'n_im=3'])
def test_bad_parameter(tmp_path, param):
    assert main(bench_args(tmp_path / 'out', '--param', param)) == 2


def test_no_import_with_de(tmp_path):
    assert main(bench_args(tmp_path / 'out', '--algo', 'de', '--no-import')) == 2


def test_missing_price_file(tmp_path):
    args = ['-q', 'portfolio', '--prices', str(tmp_path / 'missing.csv'), '--out', str(tmp_path / 'out')]
    assert main(args) == 3


def test_malformed_price_file(tmp_path):
    prices = tmp_path / 'prices.csv'
    prices.write_text('date,A\n2020-01-01,1\n2020-01-02,-3\n', encoding='utf-8')
    assert main(['-q', 'portfolio', '--prices', str(prices), '--out', str(tmp_path / 'out')]) == 2


def test_unwritable_output(tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text('x', encoding='utf-8')
    assert main(bench_args(blocker / 'sub')) == 3


def test_portfolio_success(tmp_path):
    prices = tmp_path / 'prices.csv'
    prices.write_text('date,A,B\n2020-01-01,10,20\n2020-01-02,11,19\n2020-01-03,12,21\n2020-01-06,12.5,20\n',
                      encoding='utf-8')
    args = ['-q', 'portfolio', '--prices', str(prices), '--iters', '5', '--runs', '2', '--out', str(tmp_path / 'out')]
    assert main(args) == 0
    assert isfile(str(tmp_path / 'out' / 'portfolio.json'))


def test_argument_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(['bench', '--runs', 'many'])
    assert e.value.code == 2


def test_config_precedence(tmp_path):
    config = tmp_path / 'experiment.cfg'
    config.write_text('# small experiment\n'
                      'function = F2\n'
                      'dim = 2\n'
                      'runs = 3   # overridden below\n'
                      'iters = 4\n'
                      'param.n_pop = 10\n', encoding='utf-8')
    out = tmp_path / 'out'
    assert main(['-q', 'bench', '--config', str(config), '--runs', '1', '--out', str(out)]) == 0

    summary = load_json_from_file(str(out / 'summary.json'))
    assert summary['config']['n_runs'] == 1
    assert summary['config']['max_iterations'] == 4
    assert summary['config']['vso_params']['n_pop'] == 10
    assert [row['Function'] for row in summary['rows']] == ['F2']


def test_config_file_errors(tmp_path):
    config = tmp_path / 'experiment.cfg'
    config.write_text('runs 3\n', encoding='utf-8')
    assert main(['-q', 'bench', '--config', str(config)]) == 2
    config.write_text('colour = blue\n', encoding='utf-8')
    assert main(['-q', 'bench', '--config', str(config)]) == 2
    assert main(['-q', 'bench', '--config', str(tmp_path / 'missing.cfg')]) == 3


def test_load_options_defaults():
    options = load_options(get_parser().parse_args(['bench']))
    assert options.function == ['F1']
    assert options.dim == [30]
    assert options.runs == 31
    assert options.iters is None


def test_rank_command(tmp_path):
    assert main(bench_args(tmp_path / 'vso')) == 0
    assert main(bench_args(tmp_path / 'de', '--algo', 'de')) == 0
    args = ['-q', 'rank', '--inputs', str(tmp_path / 'vso'), str(tmp_path / 'de'), '--out', str(tmp_path / 'ranks')]
    assert main(args) == 0
    assert isfile(str(tmp_path / 'ranks' / 'ranks.csv'))


def test_rank_errors(tmp_path):
    assert main(['-q', 'rank', '--inputs', str(tmp_path / 'missing.json')]) == 3

    assert main(bench_args(tmp_path / 'one')) == 0
    two = ['-q', 'bench', '--function', 'F1,F9', '--dim', '2', '--iters', '3', '--runs', '2', '--algo', 'de',
           '--out', str(tmp_path / 'two')]
    assert main(two) == 0
    args = ['-q', 'rank', '--inputs', str(tmp_path / 'one'), str(tmp_path / 'two'), '--out', str(tmp_path / 'r')]
    assert main(args) == 2

    bad = tmp_path / 'bad.json'
    bad.write_text('{not json', encoding='utf-8')
    assert main(['-q', 'rank', '--inputs', str(bad)]) == 2
