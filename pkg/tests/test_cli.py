#!/usr/bin/env python

import json

import pytest

from fermatlab.cli import entry_point, parse_options


@pytest.fixture(autouse=True)
def single_thread(monkeypatch):
    monkeypatch.setenv('FERMATLAB_THREADS', '1')


def run(capsys, *argv):
    with pytest.raises(SystemExit) as exit_info:
        entry_point(['-v', '0', '--bounds', 'small'] + list(argv))
    captured = capsys.readouterr()
    return exit_info.value.code, captured.out, captured.err


def test_parse_options():
    args = parse_options(['--json', '--seed', '3', 'sweep', 'nearmiss', '--a-max', '10', '--n', '3', '4',
                          '--cap', '1'])
    assert args.json is True
    assert args.seed == 3
    assert args.command == 'sweep'
    assert args.kind == 'nearmiss'
    assert args.n_set == [3, 4]


def test_missing_command_is_usage_error():
    with pytest.raises(SystemExit) as exit_info:
        parse_options([])
    assert exit_info.value.code == 2


def test_check_pythagorean(capsys):
    code, out, _ = run(capsys, '--json', 'check', '3', '4', '5', '2')
    bundle = json.loads(out)
    assert code == 0
    assert bundle['parity_profile'] == 'OneEven'
    assert bundle['pythagorean'] is True
    assert bundle['defect'] == 0
    assert bundle['root_verdict'] == 'IntegerValue(5)'
    assert bundle['triple'] == {'valid': True, 'a': 4, 'b': 3, 'c': 5}
    assert bundle['form'] == {'variant': 'FormA_even', 'k': 2, 'd': 1}
    assert bundle['solved_n'] == pytest.approx(2.0, abs=1e-9)
    assert bundle['integer_exponent_exclusion']['excluded'] is False


def test_check_near_miss(capsys):
    code, out, _ = run(capsys, '--json', 'check', '6', '8', '9', '3')
    bundle = json.loads(out)
    assert code == 0
    assert bundle['defect'] == 1
    assert bundle['root_verdict'] == 'Irrational'
    assert bundle['solved_n'] == pytest.approx(2.99, abs=0.01)
    assert bundle['parity_profile'] == 'TwoEven'
    assert bundle['form']['variant'] is None
    assert bundle['integer_exponent_exclusion']['excluded'] is True


def test_check_non_primitive(capsys):
    code, out, _ = run(capsys, '--json', 'check', '6', '8', '10', '2')
    bundle = json.loads(out)
    assert code == 2
    assert bundle['triple']['valid'] is False
    assert bundle['triple']['violation']['type'] == 'FermatlabNonPrimitiveError'
    assert bundle['triple']['violation']['gcd'] == 2


def test_check_rejects_nonpositive(capsys):
    code, out, err = run(capsys, 'check', '0', '4', '5', '2')
    assert code == 2
    assert out == ''
    assert 'FermatlabDomainError' in err


def test_check_table(capsys):
    code, out, _ = run(capsys, 'check', '3', '4', '5', '2')
    assert code == 0
    assert 'parity_profile' in out
    assert 'OneEven' in out


def test_pyth(capsys):
    code, out, _ = run(capsys, '--json', 'pyth', '--hyp-limit', '30')
    rows = json.loads(out)
    assert code == 0
    assert {tuple(sorted((row['leg1'], row['leg2']))) + (row['hyp'],) for row in rows} == \
        {(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)}


def test_solve(capsys):
    code, out, _ = run(capsys, '--json', 'solve', '4', '3', '5')
    solution = json.loads(out)
    assert code == 0
    assert solution['n'] == pytest.approx(2.0, abs=1e-9)
    assert solution['bracket'][0] <= solution['n'] <= solution['bracket'][1]


def test_bruteforce(capsys):
    code, out, _ = run(capsys, '--json', 'bruteforce', '--a-max', '30', '--n-max', '6')
    assert code == 0
    assert json.loads(out) == []


def test_bruteforce_validation_csv(tmp_path, capsys):
    outfile = tmp_path / 'hits.csv'
    code, _, _ = run(capsys, '--out', str(outfile), 'bruteforce', '--a-max', '5', '--n-max', '3', '--validation')
    assert code == 0
    assert outfile.read_text(encoding='utf-8') == 'a,b,c,n\n4,3,5,2\n'


def test_sweep_geometry_rows(capsys):
    code, out, _ = run(capsys, 'sweep', 'geometry', '--a', '1', '1', '--b', '1', '1', '--n', '2.1', '5.0',
                       '--step', '0.1')
    lines = out.split('\n')
    assert code == 0
    assert '\r' not in out
    assert lines[0] == 'a,b,n,c,theta_deg,shape,in_S'
    assert lines[-1] == ''
    assert len(lines) - 2 == 30


def test_sweep_lattice(capsys):
    code, out, _ = run(capsys, 'sweep', 'lattice', '--a-max', '100', '--n-min', '3')
    lines = out.strip().split('\n')
    assert code == 0
    assert lines[0] == 'a,n_min,count,bound,count_sqrt2'
    assert len(lines) == 101
    for line in lines[1:]:
        fields = line.split(',')
        assert int(fields[2]) <= int(fields[3])


def test_sweep_nearmiss(capsys):
    code, out, _ = run(capsys, 'sweep', 'nearmiss', '--a-max', '10', '--n', '3', '--cap', '1')
    lines = out.strip().split('\n')
    assert code == 0
    assert lines[0] == 'a,b,c,n,defect'
    assert '8,6,9,3,1' in lines[1:]


def test_sweep_conjecture1(capsys):
    code, out, _ = run(capsys, 'sweep', 'conjecture1', '--a-max', '10', '--n-max', '5')
    report = json.loads(out)
    assert code == 0
    assert report['a_max'] == 10
    assert report['summary']['all_excluded_ge3'] is True
    assert any(row['a'] == 8 and row['b'] == 6 and row['c'] == 9 for row in report['rows'])


def test_sweep_unwritable_destination(tmp_path, capsys):
    outfile = tmp_path / 'missing' / 'lattice.csv'
    code, _, err = run(capsys, '--out', str(outfile), 'sweep', 'lattice', '--a-max', '10')
    assert code == 3
    assert 'FermatlabIOError' in err


def test_sweep_is_byte_deterministic(capsys):
    argv = ('sweep', 'nearmiss', '--a-max', '40', '--n', '3', '4', '--cap', '50')
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_audit_malformed_bounds(capsys):
    code, out, err = run(capsys, 'audit', '--a-max', '0')
    assert code == 2
    assert out == ''
    assert 'FermatlabSettingsError' in err


def test_audit_writes_report(tmp_path, capsys):
    outfile = tmp_path / 'audit.json'
    code, out, _ = run(capsys, '--out', str(outfile), 'audit')
    report = json.loads(outfile.read_text(encoding='utf-8'))
    assert code == 0
    assert out == ''
    assert report['schemaVersion'] == 1
    assert report['parameters']['bounds_preset'] == 'small'
    assert ['L1', 'C2'] in report['dependencyEdges']
    verdicts = {claim['id']: claim['verdict'] for claim in report['claims']}
    assert verdicts['TABLE1'] == 'Unchecked'
    assert verdicts['FLT_SWEEP'] == 'Verified'


def test_config_file(tmp_path, capsys):
    config_file = tmp_path / 'config.json'
    config_file.write_text(json.dumps({'general': {'float_digits': 4}}), encoding='utf-8')
    code, out, _ = run(capsys, '-c', str(config_file), 'sweep', 'geometry', '--a', '1', '1', '--b', '1', '1',
                       '--n', '3', '3', '--step', '1')
    assert code == 0
    # c = 2^(1/3)
    assert out.split('\n')[1].split(',')[3] == '1.26'


def test_missing_config_file(tmp_path, capsys):
    code, _, err = run(capsys, '-c', str(tmp_path / 'nope.json'), 'pyth', '--hyp-limit', '10')
    assert code == 2
    assert 'FermatlabSettingsError' in err
