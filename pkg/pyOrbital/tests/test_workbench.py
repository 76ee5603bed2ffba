from generate_dataset import generate_base, generate_unit_lattice
from generate_dataset import generate_diagonal
from generate_dataset import plus_central_L_n1, minus_central_L_n1

import json
import os
import pytest

import numpy as np
import pandas as pd

from fractions import Fraction
from pyOrbital.invariants import TildeGlElement, GlNextElement
from pyOrbital.lfactors import LaurentRational
from pyOrbital.unitary import unitary_indicator
from pyOrbital.utils import UnsupportedConfigurationError
from pyOrbital.workbench import RESULTS_ENV, WorkbenchConfig, results_dir
from pyOrbital.workbench import canonical_json, digest, to_payload
from pyOrbital.workbench import parse_element, parse_central, parse_function
from pyOrbital.workbench import parse_unitary_family, parse_point
from pyOrbital.workbench import parse_laurent
from pyOrbital.workbench import VerificationReport, read_ledger
from pyOrbital.workbench import collect, verify, run, main

inert5 = generate_base(5, 'inert')
unit1 = generate_unit_lattice(1, 5)

Z_plus = TildeGlElement.central(1, 0, 1)
Z_minus = TildeGlElement.central(1, 0, -1)
X_k2 = generate_diagonal([0, 1, 2], [0, 0, 1], [0, 0, 1])

unit_family = {'0': {'indicator': 0}, '1': {'indicator': None}}


def _sample_report():
    report = VerificationReport('demo', 1)
    report.add_check('half', {'x': 1}, Fraction(1, 2), True, 0.25)
    report.add_check('zero', {'x': 2}, 0, False)
    return report


def test_config_defaults():

    config = WorkbenchConfig()
    assert config.base == inert5
    assert config.window == 6
    assert config.depth == 1
    assert config.xi.value_at_p == 1
    assert config.replace(seed=7).seed == 7


def test_config_json():

    config = WorkbenchConfig(window=4, seed=3)
    payload = config.to_json()
    assert payload['oracle'] == {'window': 4, 'depth': 1}
    assert WorkbenchConfig.from_json(payload).to_json() == payload
    assert WorkbenchConfig.from_json(None).to_json() == \
        WorkbenchConfig().to_json()


def test_config_file(tmp_path):

    fname = str(tmp_path / 'config.json')
    with open(fname, 'w') as fp:
        json.dump({'base': {'p': 3, 'etale': 'split'}, 'seed': 9}, fp)
    config = WorkbenchConfig.from_file(fname)
    assert config.base == generate_base(3, 'split')
    assert config.seed == 9


def test_invalid_config():

    with pytest.raises(ValueError):
        WorkbenchConfig(window=1)
    with pytest.raises(ValueError):
        WorkbenchConfig(depth=-1)
    with pytest.raises(UnsupportedConfigurationError):
        WorkbenchConfig(mu=3)
    with pytest.raises(UnsupportedConfigurationError):
        WorkbenchConfig.from_json({'base': {'p': 2}})
    with pytest.raises(TypeError):
        WorkbenchConfig(base=5)


def test_results_dir(monkeypatch):

    monkeypatch.delenv(RESULTS_ENV, raising=False)
    assert results_dir() == 'results'
    monkeypatch.setenv(RESULTS_ENV, '/tmp/orbital')
    assert results_dir() == '/tmp/orbital'


def test_canonical_json():

    assert canonical_json({'b': 1, 'a': [1, 2]}) == '{"a":[1,2],"b":1}'
    assert digest({'b': 1, 'a': 2}) == digest({'a': 2, 'b': 1})
    assert digest({'a': 1}) != digest({'a': 2})


def test_to_payload():

    assert to_payload(Fraction(1, 3)) == '1/3'
    assert to_payload(np.int64(3)) == 3
    assert to_payload((Fraction(2), None, True)) == ['2', None, True]
    assert to_payload({1: Fraction(1, 2)}) == {'1': '1/2'}
    df = pd.DataFrame([{'a': 1, 'b': 'x'}])
    assert to_payload(df) == [{'a': 1, 'b': 'x'}]
    assert to_payload(Z_plus) == Z_plus.to_json()
    with pytest.raises(TypeError):
        to_payload(object())


def test_parse_element():

    assert parse_element(Z_plus.to_json()) == Z_plus
    Y = GlNextElement.join(Z_plus, 1)
    assert parse_element(Y.to_json()) == Y
    with pytest.raises(TypeError):
        parse_element([1])
    with pytest.raises(KeyError):
        parse_element({'A': [['0']], 'v': ['1']})


def test_parse_central():

    assert parse_central({'lam': '1/5', 'sign': '-'}) == (-1, Fraction(1, 5))
    assert parse_central({'lam': 0}) == (1, 0)
    assert parse_central(Z_minus.to_json()) == Z_minus
    with pytest.raises(KeyError):
        parse_central({'sign': '+'})
    with pytest.raises(ValueError):
        parse_central({'lam': 0, 'sign': '+-'})


def test_parse_functions():

    assert parse_function({'unit_lattice': 1}, inert5) == unit1
    family = parse_unitary_family(unit_family, inert5)
    assert family[0] == unitary_indicator(inert5, 0)
    assert family[1].is_zero()
    assert family[1].h0 == 5
    assert parse_unitary_family({'0': '1/2'}, inert5) == {0: Fraction(1, 2)}


def test_parse_point():

    a = parse_point({'charpoly': ['0', '1'], 'moments': ['0']})
    assert a.is_central()
    assert parse_point(X_k2.to_json()).r == 1


def test_parse_laurent():

    L = plus_central_L_n1(-1)
    assert parse_laurent(L.to_json()) == L


def test_run_integrate():

    payload = {'central': {'lam': '0', 'sign': '+'},
               'function': {'unit_lattice': 1}}
    expected = plus_central_L_n1(-1).to_json()
    for route in ('tate', 'gamma', 'oracle'):
        result = run('integrate', payload, route=route)
        assert result['route'] == route
        assert result['I'] == expected
    result = run('integrate', payload)
    assert result['route'] == 'descent'
    assert result['I'] == expected
    assert result['normalized'] == LaurentRational(1).to_json()
    assert result['at_zero']['value'] == '1'


def test_run_integrate_element():

    payload = {'element': Z_minus.to_json(),
               'function': {'unit_lattice': 1}}
    result = run('integrate', payload, route='descent')
    assert result['L'] == minus_central_L_n1(-1).to_json()


def test_run_structure_verbs():

    assert run('classify', {'element': Z_minus.to_json()}) == \
        {'epsilon': '-'}
    assert run('orbits', {'point': X_k2.to_json()})['count'] == 4
    assert run('stratify', {'point': X_k2.to_json()})['r'] == 1
    assert run('quotient', {'element': Z_plus.to_json()})['central']
    assert run('orbits-unitary', {'point': Z_plus.to_json()})['count'] == 2


def test_run_lfactor():

    assert run('lfactor', {'n': 1, 'sign': '-'}) == \
        minus_central_L_n1(-1).to_json()
    assert run('lfactor', {'n': 1, 'sign': '+', 'xi': 2}) == \
        plus_central_L_n1(-2).to_json()


def test_run_transfer_verbs():

    result = run('match', {'function': {'unit_lattice': 1},
                           'unitary': unit_family})
    assert result['matched']
    assert result['first_failure'] is None
    result = run('transfer-check', {'function': {'unit_lattice': 1},
                                    'unitary': unit_family,
                                    'element': Z_minus.to_json()})
    assert result['verdict'] == 'equal'
    assert run('constants', {'element': Z_plus.to_json()})['c_X'] == '1'


def test_run_errors():

    with pytest.raises(ValueError):
        run('unknown')
    with pytest.raises(TypeError):
        run('classify', [1])
    with pytest.raises(KeyError):
        run('classify', {})


def test_main_output(capsys):

    assert main(['lfactor', '{"n": 1, "sign": "+"}']) == 0
    out = capsys.readouterr().out
    assert json.loads(out) == plus_central_L_n1(-1).to_json()


def test_main_out_file(tmp_path):

    fname = str(tmp_path / 'out.json')
    assert main(['classify', json.dumps({'element': Z_plus.to_json()}),
                 '--out', fname]) == 0
    with open(fname) as fp:
        assert json.load(fp) == {'epsilon': '+'}


def test_main_schema_errors(capsys):

    assert main(['integrate', '{"function": {"unit_lattice": 1}}']) == 2
    error = json.loads(capsys.readouterr().out)['error']
    assert error['code'] == 'schema'
    assert 'central' in error['message']

    assert main(['integrate', '{bad']) == 2
    assert json.loads(capsys.readouterr().out)['error']['code'] == 'schema'


def test_main_unsupported(tmp_path, capsys):

    fname = str(tmp_path / 'config.json')
    with open(fname, 'w') as fp:
        json.dump({'base': {'p': 2}}, fp)
    assert main(['lfactor', '{"n": 1}', '--config', fname]) == 2
    error = json.loads(capsys.readouterr().out)['error']
    assert error['code'] == 'unsupported'


def test_main_window(capsys):

    payload = {'central': {'lam': '0'}, 'function': {'unit_lattice': 1},
               'window': 2}
    assert main(['integrate-oracle', json.dumps(payload)]) == 2
    error = json.loads(capsys.readouterr().out)['error']
    assert error['code'] == 'window'


def test_main_verify(tmp_path, monkeypatch, capsys):

    monkeypatch.setenv(RESULTS_ENV, str(tmp_path))
    assert main(['verify', 'orbits']) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['suite'] == 'orbits'
    assert report['passed']
    assert len(os.listdir(str(tmp_path))) == 1


def test_verify_orbits():

    report = verify('orbits')
    assert report.passed
    assert len(report.checks) == 6
    assert report.failures == []


def test_verify_unramified():

    report = verify('unramified')
    assert report.passed
    assert len(report.checks) == 48


@pytest.mark.parametrize('suite', ['rs', 'oracle', 'cayley', 'stability',
                                   'transfer-n1', 'group-n1', 'properties'])
def test_verify_suite(suite):

    report = verify(suite)
    assert len(report.checks) > 0
    assert report.passed, report.failures


def test_verify_oracle_n2():

    config = WorkbenchConfig()
    names = [c[0] for c in collect('oracle', config, config.seed)]
    assert sum('routes-n2-' in name for name in names) == 3
    report = verify('oracle')
    assert not [name for name in report.failures if 'routes-n2-' in name]


def test_verify_group_checks():

    names = [c['name'] for c in verify('group-n1').checks]
    for name in ('direct-rs', 'direct-rs-coset', 'twist-eta-unit',
                 'twist-eta-uniformizer'):
        assert any(n.endswith(name) for n in names)


def test_verify_determinism():

    first = verify('orbits', seed=3)
    second = verify('orbits', seed=3, n_jobs=2, prefer='threads')
    assert canonical_json(first.to_json()) == \
        canonical_json(second.to_json())
    assert first.inputs_digest() == second.inputs_digest()


def test_collect():

    config = WorkbenchConfig()
    assert len(collect('orbits', config, 1)) == 6
    names = [c[0] for c in collect('all', config, 1)]
    assert 'orbits/orbits-0' in names
    with pytest.raises(ValueError):
        collect('unknown', config, 1)


def test_report():

    report = _sample_report()
    assert not report.passed
    assert report.failures == ['zero']
    assert list(report.summary().index) == ['half', 'zero']
    assert report.checks[0]['outputs'] == '1/2'
    assert 'runtime' not in report.to_json()['checks'][0]
    with pytest.raises(ValueError):
        report.add_check('half', {}, 0, True)


def test_report_save(tmp_path):

    directory = str(tmp_path)
    report = _sample_report()
    fname = report.save(directory)
    assert os.path.exists(fname)
    assert report.save(directory) == fname
    assert len(os.listdir(directory)) == 1
    assert VerificationReport.from_file(fname).to_json() == report.to_json()


def test_report_no_overwrite(tmp_path):

    directory = str(tmp_path)
    report = _sample_report()
    fname = report.save(directory)
    with open(fname, 'w') as fp:
        fp.write('{}')
    with pytest.warns(UserWarning):
        other = report.save(directory)
    assert other == fname[:-len('.json')] + '.1.json'
    with open(fname) as fp:
        assert fp.read() == '{}'


def test_report_ledger(tmp_path):

    report = _sample_report()
    fname = report.save(str(tmp_path), ledger='csv')
    ledger = read_ledger(fname[:-len('.json')] + '.csv')
    assert list(ledger.index) == ['half', 'zero']
    assert list(ledger['verdict']) == ['pass', 'fail']
    with pytest.raises(ValueError):
        report.save(str(tmp_path), ledger='xls')


def test_report_results_dir(tmp_path, monkeypatch):

    monkeypatch.setenv(RESULTS_ENV, str(tmp_path))
    fname = _sample_report().save()
    assert os.path.dirname(fname) == str(tmp_path)
