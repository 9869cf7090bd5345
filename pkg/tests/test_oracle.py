from fractions import Fraction

import pytest

from bnwalls import bncore
from bnwalls import exceptions
from bnwalls import oracle
from bnwalls.lattice import Surface
from bnwalls.stability import Region

G28 = Surface(54)
G4 = Surface(6)
REGION = Region(-2, 0, Fraction(1, 100), 2)


def test_report():
    report = oracle.Report(name='sample')
    report.check(True, 'fine')
    assert report.passed
    report.check(False, 'broken')
    assert not report.passed
    assert report.checks == 2

    other = oracle.Report(name='other', checks=3, notes=['n'])
    report.merge(other)
    assert report.checks == 5
    assert report.to_json() == {
        'name': 'sample',
        'checks': 5,
        'violations': ['broken'],
        'notes': ['n'],
        'passed': False,
    }


def test_jh_partitions():
    partitions = oracle.jh_partitions(0, -3, G28)
    assert partitions == [oracle.JHPartition(k=0, k_prime=0, structure_copies=0)]

    partitions = oracle.jh_partitions(3, -3, G28)
    assert len(partitions) == 4
    assert [p.structure_copies for p in partitions] == [3, 2, 1, 0]

    with pytest.raises(exceptions.NonNegativeChi):
        oracle.jh_partitions(3, 1, G28)


def test_delta_recursive():
    assert oracle.delta_recursive(Fraction(5, 2)) == Fraction(9, 2)
    assert oracle.delta_recursive(Fraction(0)) == 0
    assert oracle.delta_recursive(Fraction(10)) == 55


def test_brute_max_h():
    assert oracle.brute_max_h(9, -3) == 6
    assert oracle.brute_max_h(0, -5) == 0
    assert oracle.brute_max_h(13, -2) == bncore.max_h(13, -2)


@pytest.mark.parametrize('k_max, chi, s', [
    (20, -3, G28),
    (15, -7, G28),
    (20, -7, G28),
    (20, -1, G4),
    (0, -5, G28),
])
def test_brute_stratum_recursion(k_max, chi, s):
    report = oracle.brute_stratum_recursion(k_max, chi, s)
    assert report.passed, report.violations
    assert report.checks > 0


@pytest.mark.parametrize('k_max, chi, s', [
    (20, -3, G28),
    (20, -7, G28),
    (20, -1, G4),
])
def test_compare_strata(k_max, chi, s):
    report = oracle.compare_strata(k_max, chi, s)
    assert report.passed, report.violations


def test_klm_equivalence_full_box():
    report = oracle.brute_klm_equivalence(60, 40, -40, workers=4)
    assert report.passed, report.violations[:10]
    assert report.checks > 0
    assert len(report.notes) == 1
    assert report.notes[0].endswith('equality cases')


def test_klm_equivalence_spot_check():
    assert oracle._criterion(28, 5, -2)[0]
    assert oracle._klm_form(28, 5, -2)


def test_klm_equivalence_needs_negative_chi():
    with pytest.raises(exceptions.BadRange):
        oracle.brute_klm_equivalence(10, 5, 0)


def test_integrality():
    report = oracle.brute_integrality(-40, 200, 200)
    assert report.passed, report.violations[:10]


def test_compare_delta():
    report = oracle.compare_delta(100, 2000, seed=7)
    assert report.passed, report.violations[:10]


def test_brute_bn_cell():
    assert oracle.brute_bn_cell(28, 20, 3) == (False, False)
    assert oracle.brute_bn_cell(28, 24, 5) == (True, True)
    assert oracle.brute_bn_cell(28, 40, 5) == (True, True)
    with pytest.raises(exceptions.ChiZero):
        oracle.brute_bn_cell(28, 27, 1)


def test_compare_verdicts():
    report = oracle.compare_verdicts(24, 10, -20, workers=2)
    assert report.passed, report.violations[:10]


@pytest.mark.parametrize('chi, s', [(-1, G4), (-3, G28)])
def test_verify_first_wall(chi, s):
    report = oracle.verify_first_wall(chi, s, REGION)
    assert report.passed, report.violations
    assert 'W_chi found' in report.notes[0]


def test_verify_first_wall_clips_positive_beta():
    report = oracle.verify_first_wall(-1, G4, Region(-2, 1, Fraction(1, 100), 2))
    assert report.passed, report.violations


def test_verify_first_wall_errors():
    with pytest.raises(exceptions.NonNegativeChi):
        oracle.verify_first_wall(2, G28, REGION)
    with pytest.raises(exceptions.InvalidRegion):
        oracle.verify_first_wall(-1, G4, Region(0, 1, Fraction(1, 100), 2))
