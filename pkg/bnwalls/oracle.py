'''
oracle
======

Brute-force checks for the verdict arithmetic. Nothing in here calls into the
closed forms of bncore to get its answers: Delta is recomputed by its
recursive definition, dimensions come straight from the lattice, and the
criteria are re-evaluated from their raw inequalities. Functions whose names
start with compare_ then hold the two paths against each other.

Every check returns a Report. A report passes when it has no violations.
'''
import dataclasses
import fractions
import functools
import random

from bnwalls import bncore
from bnwalls import exceptions
from bnwalls import lattice
from bnwalls import stability
from bnwalls import threadpool
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.oracle')

Fraction = fractions.Fraction

@dataclasses.dataclass
class Report:
    name: str
    checks: int = 0
    violations: list = dataclasses.field(default_factory=list)
    notes: list = dataclasses.field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def check(self, condition, message):
        self.checks += 1
        if not condition:
            log.warning('%s: %s', self.name, message)
            self.violations.append(message)

    def merge(self, other):
        self.checks += other.checks
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)

    def to_json(self):
        return {
            'name': self.name,
            'checks': self.checks,
            'violations': list(self.violations),
            'notes': list(self.notes),
            'passed': self.passed,
        }

@dataclasses.dataclass(frozen=True)
class JHPartition:
    k: int
    k_prime: int
    structure_copies: int

def _first_rank(chi, s):
    return s.h_squared // (-2 * chi)

def _w(k, chi, s):
    return lattice.Character(k - _first_rank(chi, s), 1, chi)

@functools.lru_cache(maxsize=None)
def delta_recursive(t):
    '''
    Delta by its definition: t on [0, 1], then Delta(t - 1) + t.
    '''
    if t <= 1:
        return t
    return delta_recursive(t - 1) + t

def _brute_dim(k, h, chi, s):
    return lattice.square(_w(k, chi, s), s) + 2 + h * chi - h * h

def jh_partitions(k, chi, s):
    '''
    The k + 1 ways an object of class w_k on the first wall splits into copies
    of (1,0,0) and one w_{k'}, each checked as a lattice identity.
    '''
    if chi >= 0:
        raise exceptions.NonNegativeChi(f'chi should be negative, not {chi}.')
    target = _w(k, chi, s)
    partitions = []
    for k_prime in range(k + 1):
        copies = k - k_prime
        total = copies * lattice.RANK_ONE + _w(k_prime, chi, s)
        exceptions.require(total == target, f'{copies}(1,0,0) + w_{k_prime} = {total} is not w_{k} = {target}.')
        partitions.append(JHPartition(k=k, k_prime=k_prime, structure_copies=copies))
    return partitions

def brute_max_h(k, chi):
    m = -chi
    h = 0
    while Fraction(k, m) >= delta_recursive(Fraction(h + 1, m)):
        h += 1
    return h

def brute_stratum_recursion(k_max, chi, s):
    '''
    For every k <= k_max and every h allowed at k:
    - d(k-h, l) + h(l - chi - h) <= d(k, h) for all l >= max(0, h + chi) up to
      the largest l allowed at k - h, with equality only at l = 0 or
      l = h + chi;
    - exactly one k_red in [0, k] has (k - k_red)/(-chi) = Delta(h/(-chi));
    - d(k - h, h + chi) = d(k, h) once h >= -chi.
    '''
    report = Report(name=f'strata chi={chi} H²={s.h_squared} k<={k_max}')
    m = -chi
    for k in range(k_max + 1):
        for h in range(brute_max_h(k, chi) + 1):
            top = _brute_dim(k, h, chi, s)
            for l in range(max(0, h + chi), brute_max_h(k - h, chi) + 1):
                value = _brute_dim(k - h, l, chi, s) + h * (l - chi - h)
                report.check(value <= top, f'k={k} h={h} l={l}: {value} > d(k,h)={top}')
                if value == top:
                    report.check(l in (0, h + chi), f'k={k} h={h} l={l}: equality away from l=0 and l=h+chi')

            needed = delta_recursive(Fraction(h, m))
            attaining = [k_red for k_red in range(k + 1) if Fraction(k - k_red, m) == needed]
            report.check(len(attaining) == 1, f'k={k} h={h}: equality at k_red in {attaining}')

            if h >= m:
                reduced = _brute_dim(k - h, h + chi, chi, s)
                report.check(reduced == top, f'k={k} h={h}: d(k-h, h+chi)={reduced} but d(k,h)={top}')
    log.info('%s: %d checks, %d violations.', report.name, report.checks, len(report.violations))
    return report

def _criterion(g, r, chi):
    m = -chi
    rho = g - (r + 1) * (r + 1 - chi)
    D = (r + 1) % m
    return (rho + g - 2 >= D * m - D * D, rho + g - 2 == D * m - D * D)

def _klm_form(g, r, chi):
    m = -chi
    f = r // m
    rho = g - (r + 1) * (r + 1 - chi)
    return rho + r * (r + 2) >= -f * chi * (r + 1 + Fraction(chi * (f + 1), 2))

def _klm_slab(g, r_max, chi_min):
    report = Report(name=f'klm g={g}')
    for r in range(1, r_max + 1):
        for chi in range(chi_min, 0):
            (criterion, equality) = _criterion(g, r, chi)
            klm = _klm_form(g, r, chi)
            report.check(criterion == klm, f'g={g} r={r} chi={chi}: criterion {criterion} but bound {klm}')
            if equality:
                m = -chi
                report.check((g - 1) % m == 0, f'g={g} r={r} chi={chi}: equality but {m} does not divide g-1')
                root = (g - 1) // m
                report.check(root * root * m * m == (g - 1) ** 2, f'g={g} r={r} chi={chi}: count is not a square')
                report.notes.append(f'equality g={g} r={r} chi={chi} count={root * root}')
    return report

def brute_klm_equivalence(g_max, r_max, chi_min, *, workers=1):
    '''
    Compare the nonemptiness criterion with the KLM-style bound on every
    g in [2, g_max], r in [1, r_max], chi in [chi_min, -1]. Each equality case
    of the criterion must have -chi dividing g - 1.
    '''
    if chi_min >= 0:
        raise exceptions.BadRange(f'chi_min should be negative, not {chi_min}.')
    report = Report(name=f'klm-equivalence g<={g_max} r<={r_max} chi>={chi_min}')
    slabs = threadpool.map_ordered(
        _klm_slab,
        ((g, r_max, chi_min) for g in range(2, g_max + 1)),
        workers=workers,
    )
    for slab in slabs:
        report.merge(slab)
    equalities = len(report.notes)
    report.notes = [f'{equalities} equality cases']
    log.info('%s: %d checks, %d violations.', report.name, report.checks, len(report.violations))
    return report

def brute_integrality(chi_min, h_max, r_max):
    '''
    chi * Delta(h/(-chi)) is an integer, and so is (r+1+D)(s+1)/2 where
    r + 1 = s(-chi) + D.
    '''
    report = Report(name=f'integrality chi>={chi_min}')
    for chi in range(chi_min, 0):
        m = -chi
        for h in range(h_max + 1):
            value = chi * delta_recursive(Fraction(h, m))
            report.check(value.denominator == 1, f'chi={chi} h={h}: {value}')
        for r in range(r_max + 1):
            (s, D) = divmod(r + 1, m)
            report.check((r + 1 + D) * (s + 1) % 2 == 0, f'chi={chi} r={r}: (r+1+D)(s+1) is odd')
    return report

def brute_bn_cell(g, d, r):
    '''
    Return (criterion, bound) for one cell, each recomputed from scratch,
    after Serre duality when chi > 0.
    '''
    chi = d + 1 - g
    if chi == 0:
        raise exceptions.ChiZero(f'd = {d} = g - 1 gives chi = 0.')
    if chi > 0:
        if r + 1 <= chi:
            return (True, True)
        (r, chi) = (r - chi, -chi)
    (criterion, equality) = _criterion(g, r, chi)
    return (criterion, _klm_form(g, r, chi))

def verify_first_wall(chi, s, reg, *, workers=1):
    '''
    Enumerate the walls of (0, 1, chi) in the part of reg with beta <= 0 and
    check that none meets the ray beta = 0 and all lie inside W_chi.
    '''
    if chi >= 0:
        raise exceptions.NonNegativeChi(f'chi should be negative, not {chi}.')
    beta_hi = min(reg.beta_hi, Fraction(0))
    if reg.beta_lo >= beta_hi:
        raise exceptions.InvalidRegion('The region has no part with beta < 0.')
    clipped = stability.Region(reg.beta_lo, beta_hi, reg.alpha_lo, reg.alpha_hi)

    report = Report(name=f'first-wall chi={chi} H²={s.h_squared}')
    v = lattice.Character(0, 1, chi)
    (R, w0, first) = stability.first_wall_data(chi, s)
    walls = stability.enumerate_walls(v, clipped, s, workers=workers)
    for (u, wall) in walls:
        report.check(not stability.wall_meets_vertical(wall, 0), f'{wall.key} from {u} meets beta=0')
        report.check(stability.wall_inside(wall, first), f'{wall.key} from {u} leaves W_chi {first.key}')
    found = any(wall.key == first.key for (u, wall) in walls)
    report.notes.append(f'{len(walls)} walls; W_chi {"found" if found else "not in region"}')
    log.info('%s: %d walls, %d violations.', report.name, len(walls), len(report.violations))
    return report

# CROSS CHECKS
################################################################################

def compare_delta(n_max, samples, *, seed=0):
    '''
    Delta(n) = n(n+1)/2, the closed form against the recursion on random
    rationals in [1, 50], and the functional equation of the closed form.
    '''
    report = Report(name=f'delta n<={n_max} samples={samples}')
    for n in range(n_max + 1):
        report.check(bncore.delta_klm(n) == Fraction(n * (n + 1), 2), f'Delta({n}) != {n}({n}+1)/2')
        report.check(delta_recursive(Fraction(n)) == Fraction(n * (n + 1), 2), f'recursive Delta({n})')

    rng = random.Random(seed)
    for _ in range(samples):
        denominator = rng.randint(1, 60)
        t = Fraction(rng.randint(denominator, 50 * denominator), denominator)
        closed = bncore.delta_klm(t)
        report.check(closed == bncore.delta_klm(t - 1) + t, f'Delta({t}) != Delta({t - 1}) + {t}')
        report.check(closed == delta_recursive(t), f'Delta({t}): closed form {closed} != recursion')
    return report

def compare_strata(k_max, chi, s):
    '''
    brute_max_h against bncore.max_h, and the top stratum of bncore against
    the unique equality k_red.
    '''
    report = Report(name=f'strata agreement chi={chi} H²={s.h_squared} k<={k_max}')
    for k in range(k_max + 1):
        report.check(brute_max_h(k, chi) == bncore.max_h(k, chi), f'max_h({k}, {chi})')
        for h in range(brute_max_h(k, chi) + 1):
            report.check(bncore.expected_dim(k, h, chi, s) == _brute_dim(k, h, chi, s), f'd({k},{h})')
            k_red = bncore.k_red_for(k, h, chi)
            report.check(
                Fraction(k - k_red, -chi) == delta_recursive(Fraction(h, -chi)),
                f'k_red({k},{h}) = {k_red} misses equality',
            )
            chain = bncore.reduction_chain(k, h, chi)
            dims = {_brute_dim(a, b, chi, s) for (a, b) in chain}
            report.check(len(dims) == 1, f'd changes along the chain from ({k},{h})')
    return report

def _verdict_slab(g, r_max, chi_min):
    report = Report(name=f'verdicts g={g}')
    for r in range(1, r_max + 1):
        for chi in range(max(chi_min, 2 - g), 0):
            d = g - 1 + chi
            verdict = bncore.bn_verdict(g, d, r)
            s = lattice.Surface.from_genus(g)
            R = _first_rank(chi, s)
            m = -chi
            via_strata = Fraction(R, m) >= delta_recursive(Fraction(r + 1, m))
            report.check(verdict.nonempty == via_strata, f'g={g} d={d} r={r}: verdict vs M^(r+1)_R')
            report.check(verdict.nonempty == brute_bn_cell(g, d, r)[0], f'g={g} d={d} r={r}: verdict vs criterion')

            # The chi > 0 cell whose Serre dual is (d, r).
            dual_d = 2 * g - 2 - d
            dual_r = r + (dual_d + 1 - g)
            report.check(bncore.serre_dual(g, dual_d, dual_r) == (d, r), f'g={g} d={dual_d}: duality')
            report.check(bncore.serre_dual(g, d, r) == (dual_d, dual_r), f'g={g} d={d}: duality')
            dual = bncore.bn_verdict(g, dual_d, dual_r)
            report.check(dual.nonempty == verdict.nonempty, f'g={g} d={dual_d} r={dual_r}: dual verdict')
    return report

def compare_verdicts(g_max, r_max, chi_min, *, workers=1):
    '''
    bn_verdict against the stratum criterion for M^{r+1}_R and against the raw
    inequality, for every chi < 0 cell with d >= 1, and its Serre dual.
    '''
    report = Report(name=f'verdicts g<={g_max} r<={r_max} chi>={chi_min}')
    slabs = threadpool.map_ordered(
        _verdict_slab,
        ((g, r_max, chi_min) for g in range(2, g_max + 1)),
        workers=workers,
    )
    for slab in slabs:
        report.merge(slab)
    return report
