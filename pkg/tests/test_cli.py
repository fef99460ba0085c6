# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

import json
from pathlib import Path

import pytest

from unirational.__main__ import run
from unirational.report import EXIT_CODES
from unirational.report import Status


DIR = Path(__file__).parent.resolve()


def _json(capsys, *args):
    code = run(['unirational'] + list(args) + ['--format', 'json'])
    document = json.loads(capsys.readouterr().out)
    return code, document


def test_fibration_surface_is_not_rational(capsys):
    code, document = _json(capsys, 'cubic', 'rationality', '--paper-surface')
    assert code == 0
    assert document['status'] == 'verified'
    records = {r['name']: r for r in document['records']}
    certificate = records['cubic.rationality']['details']
    assert certificate['verdict'] == 'not_rational'
    assert sorted(certificate['pairings'].values()) == ['no', 'no', 'no']
    assert records['cubic.unit_points']['details']['points'] == 27


def test_split_cubic_lines(capsys):
    code, document = _json(capsys, 'cubic', 'lines', '--coeffs', str(DIR / 'data/split_cubic.txt'),
                           '--field', 'Q(omega)')
    assert code == 0
    record, = document['records']
    assert record['details']['lines'] == 27
    assert record['details']['rational'] == 27
    assert record['details']['meeting_counts'] == [10]


def test_inline_coefficients_eckardt(capsys):
    code, document = _json(capsys, 'cubic', 'eckardt', '--coeffs', '1, 8, -27, 1/8', '--field', 'Q(omega)')
    assert code == 0
    record, = document['records']
    assert record['details']['points'] == 18


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv('UNIRATIONAL_SEED', '5')
    _, document = _json(capsys, 'cubic', 'rationality', '--paper-surface')
    assert document['config']['seed'] == 5
    _, document = _json(capsys, 'cubic', 'rationality', '--paper-surface', '--seed', '9')
    assert document['config']['seed'] == 9


def test_exit_code_follows_statuses(capsys):
    code, document = _json(capsys, 'geiser', 'check', '--prime', '10007', '--trials', '10')
    statuses = [Status(r['status']) for r in document['records']]
    assert document['status'] == Status.combine(statuses).value
    assert code == EXIT_CODES[Status(document['status'])]
    names = [r['name'] for r in document['records']]
    assert names == sorted(names)


def test_same_seed_same_bytes(capsys):
    args = ['unirational', 'geiser', 'check', '--trials', '5', '--seed', '11', '--format', 'json']
    run(args)
    first = capsys.readouterr().out
    run(args)
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("args", [
    ['cubic', 'lines'],
    ['cubic', 'lines', '--coeffs', '1, 2, +'],
    ['cubic', 'lines', '--coeffs', '1, 2, 3'],
    ['cubic', 'lines', '--coeffs', '1, 2, 3, 4', '--field', 'R'],
    ['verify', 'lemmas', '--n', '7'],
    ['verify', 'lemmas', '--bogus'],
    ['nonsense'],
    ['cubic'],
    ['selftest', '--prime-range', '3,2'],
    ['selftest', '--prime-range', '242,271'],
], ids=lambda args: ' '.join(args))
def test_usage_errors(args, capsys):
    assert run(['unirational'] + args) == 1


def test_syntax_error_position(capsys):
    assert run(['unirational', 'cubic', 'lines', '--coeffs', '1, 2, 3, 4 *']) == 1
    assert '1:13:' in capsys.readouterr().err
