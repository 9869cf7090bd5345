import csv
import io
import json

import pytest

from bnwalls import bncore
from bnwalls import cli
from bnwalls import exceptions
from bnwalls import papertable


def run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return (status, captured.out, captured.err)


def test_bn_json(capsys):
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--d', '24', '--r', '5', '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert data['nonempty'] is True
    assert data['count'] == 81
    assert data['structure'] == 'grassmannian-union'
    assert data['fiber'] == [0, 3]
    assert data['threshold'] == {'lhs': 0, 'rhs': 0}


def test_bn_human_empty(capsys):
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--d', '20', '--r', '4')
    assert status == 0
    assert 'EMPTY' in out
    assert 'rho' in out


def test_bn_by_h2(capsys):
    (status, out, err) = run(capsys, 'bn', '--h2', '54', '--d', '25', '--r', '5', '--format', 'json')
    assert status == 0
    assert json.loads(out)['dim'] == 6


def test_bn_chi_zero(capsys):
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--d', '27', '--r', '1')
    assert status == exceptions.ChiZero.exit_code == 2
    assert 'ChiZero' in err

    (status, out, err) = run(capsys, 'bn', '--g', '28', '--d', '27')
    assert status == 2
    assert 'ChiZero' in err

    (status, out, err) = run(capsys, 'bn', '--h2', '54', '--d', '27')
    assert status == 2


def test_bn_missing_r(capsys):
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--d', '24')
    assert status == 64
    assert '--r' in err


def test_bn_usage_errors(capsys):
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--h2', '54', '--d', '24', '--r', '5')
    assert status == 64
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--r', '5')
    assert status == 64
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--d', 'many', '--r', '5')
    assert status == 64


def test_moduli(capsys):
    (status, out, err) = run(capsys, 'moduli', '--h2', '54', '--k', '1', '--chi', '-2', '--r', '1', '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert data['v'] == [1, 1, -2]
    assert data['dim'] == 52

    (status, out, err) = run(capsys, 'moduli', '--h2', '54', '--k', '0', '--chi', '-3', '--r', '5')
    assert status == 0
    assert 'M^6_H(0, 1, -3)' in out


def test_table_csv_round_trip(capsys):
    (status, out, err) = run(capsys, 'table', '--g', '28', '--d-range', '20-26', '--r-range', '1-7', '--format', 'csv')
    assert status == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ['d'] + [f'r{r}' for r in range(1, 8)]
    table = bncore.bn_table(28, range(20, 27), range(1, 8))
    for (row, d, expected) in zip(rows[1:], table.d_values, table.rows):
        assert int(row[0]) == d
        assert tuple(row[1:]) == expected


def test_table_single_cell_matches_bn(capsys):
    (status, out, err) = run(capsys, 'table', '--g', '28', '--d-range', '26', '--r-range', '5', '--format', 'json')
    assert status == 0
    assert json.loads(out)['rows'] == [[bncore.classify_cell(28, 26, 5)]]


def test_table_compare_paper(capsys):
    (status, out, err) = run(capsys, 'table', '--compare-paper', '--format', 'json', '--workers', '2')
    assert status == 0
    data = json.loads(out)
    assert [(x['d'], x['r']) for x in data['paper_differences']] == [(20, 3)]
    assert data['paper_differences'][0]['known'] is True

    (status, out, err) = run(capsys, 'table', '--compare-paper')
    assert status == 0
    assert '1 cells differ' in out
    assert 'known' in out


def test_table_chi_zero_cells(capsys):
    (status, out, err) = run(capsys, 'table', '--g', '28', '--d-range', '27..28', '--r-range', '1-2', '--format', 'csv')
    assert status == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1] == ['27', '–', '–']


def test_table_svg(capsys):
    (status, out, err) = run(capsys, 'table', '--format', 'svg', '--compare-paper')
    assert status == 0
    assert out.startswith('<svg')
    assert out.rstrip().endswith('</svg>')


def test_table_bad_range(capsys):
    (status, out, err) = run(capsys, 'table', '--d-range', '26-20')
    assert status == 64


def test_walls_json(capsys):
    (status, out, err) = run(capsys, 'walls', '--h2', '54', '--v', '0,1,-3', '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert data['v'] == [0, 1, -3]
    keys = [(wall['a'], wall['b'], wall['c']) for wall in data['walls']]
    assert (9, 1, 0) in keys
    first = data['walls'][keys.index((9, 1, 0))]
    assert first['center'] == '-1/18'


def test_walls_isotropic(capsys):
    (status, out, err) = run(capsys, 'walls', '--h2', '54', '--v', '1,0,0', '--format', 'json')
    assert status == 0
    assert json.loads(out)['walls'] == []

    (status, out, err) = run(capsys, 'walls', '--h2', '54', '--v', '1,0,0')
    assert status == 0
    assert 'No walls.' in out


def test_walls_region_and_svg(capsys):
    (status, out, err) = run(capsys, 'walls', '--h2', '6', '--v', '0,1,-1', '--region=-1,0,1/100,2', '--format', 'svg')
    assert status == 0
    assert out.startswith('<svg')
    assert '#c00' in out


def test_walls_errors(capsys):
    (status, out, err) = run(capsys, 'walls', '--h2', '54', '--v=1,0,1')
    assert status == 3
    assert 'NegativeSquare' in err
    (status, out, err) = run(capsys, 'walls', '--h2', '54', '--v', '0,1')
    assert status == 64
    (status, out, err) = run(capsys, 'walls', '--h2', '54', '--v', '0,1,-3', '--region=0,-1,1,2')
    assert status == 2


def test_walls_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('1,0,0\n'))
    (status, out, err) = run(capsys, 'walls', '--h2', '54', '--v', '!i', '--format', 'json')
    assert status == 0
    assert json.loads(out)['v'] == [1, 0, 0]


def test_strata(capsys):
    (status, out, err) = run(capsys, 'strata', '--h2', '54', '--chi', '-3', '--k', '9', '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert data['max_h'] == 6
    assert data['top_k_red'] == 0
    top = data['strata'][0]
    assert (top['k_red'], top['h'], top['dim']) == (0, 6, 2)

    (status, out, err) = run(capsys, 'strata', '--h2', '54', '--chi', '-3', '--k', '5')
    assert status == 0
    assert 'Gr(0, 3)' in out
    assert '*' in out


def test_strata_positive_chi(capsys):
    (status, out, err) = run(capsys, 'strata', '--h2', '54', '--chi', '1', '--k', '5')
    assert status == 2
    assert 'NonNegativeChi' in err


@pytest.mark.parametrize('argv', [
    ['verify', '--suite', 'delta'],
    ['verify', '--suite', 'integrality', '--chi-min', '-10', '--r-max', '30'],
    ['verify', '--suite', 'strata', '--k-max', '10', '--chi', '-3', '--h2', '54'],
    ['verify', '--suite', 'klm-equivalence', '--g-max', '20', '--r-max', '10', '--chi-min', '-10'],
    ['verify', '--suite', 'verdicts', '--g-max', '12', '--r-max', '6', '--chi-min', '-8'],
    ['verify', '--suite', 'first-wall', '--chi', '-1', '--h2', '6'],
])
def test_verify_suites(capsys, argv):
    (status, out, err) = run(capsys, *argv)
    assert status == 0
    assert 'PASS' in out
    assert 'FAIL' not in out


def test_verify_table_json(capsys):
    (status, out, err) = run(capsys, 'verify', '--suite', 'table', '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert data['passed'] is True
    (report,) = data['reports']
    assert report['checks'] == len(papertable.D_VALUES) * len(papertable.R_VALUES)
    assert len(report['notes']) == 1


def test_verify_half_case(capsys):
    (status, out, err) = run(capsys, 'verify', '--suite', 'strata', '--chi', '-3')
    assert status == 64


def test_config_file(capsys, tmp_path):
    config = tmp_path / 'bnwalls.json'
    config.write_text(json.dumps({'verify': {'delta': {'n_max': 5, 'samples': 3}}}))
    (status, out, err) = run(capsys, 'verify', '--suite', 'delta', '--config', str(config))
    assert status == 0
    assert 'samples=3' in out

    (status, out, err) = run(capsys, 'verify', '--suite', 'delta', '--config', str(tmp_path / 'missing.json'))
    assert status == 64


def test_help(capsys):
    (status, out, err) = run(capsys, '--help')
    assert status == 0
    assert 'bnwalls bn' in err

    (status, out, err) = run(capsys, 'walls', '--help')
    assert status == 0
    assert '--region' in err


def test_no_command(capsys):
    (status, out, err) = run(capsys)
    assert status == 64
    assert 'did not choose a command' in err

    (status, out, err) = run(capsys, 'frobnicate')
    assert status == 64


def test_log_flags_are_removed(capsys):
    (status, out, err) = run(capsys, 'bn', '--g', '28', '--d', '24', '--r', '5', '--format', 'json', '--silent')
    assert status == 0
    assert json.loads(out)['count'] == 81
