'''
bncore
======

The arithmetic that decides Brill-Noether loci of curves in |H| on an abelian
surface: the piecewise-linear function Delta, the expected dimensions d(k, h)
of the section strata of M(w_k), and the verdicts built from them.

Notation: chi < 0 is the Euler characteristic of the rank zero class
(0, 1, chi), m = -chi, R = floor(H²/(2m)), and w_k = (k - R, 1, chi). A
stratum M^h_{k, k_red} holds the objects of class w_k with h sections whose
reduction has class w_{k_red}.

>>> delta_klm(Fraction(5, 2))
Fraction(9, 2)
>>> max_h(9, -3)
6
>>> k_red_for(9, 6, -3)
0
'''
import dataclasses
import fractions
import math

from bnwalls import exceptions
from bnwalls import lattice
from bnwalls import sentinel
from bnwalls import stability
from bnwalls import threadpool
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.bncore')

Fraction = fractions.Fraction

EMPTY = sentinel.Sentinel('EMPTY', truthyness=False, serialized='empty')
NONEMPTY = sentinel.Sentinel('NONEMPTY', serialized='nonempty')
UNKNOWN_NONMAXIMAL = sentinel.Sentinel('UNKNOWN_NONMAXIMAL', truthyness=False, serialized='unknown-nonmaximal')

IRREDUCIBLE = sentinel.Sentinel('IRREDUCIBLE', serialized='irreducible')
GRASSMANNIAN_UNION = sentinel.Sentinel('GRASSMANNIAN_UNION', serialized='grassmannian-union')

LABEL_EMPTY = 'EMPTY'
LABEL_BN = 'BN'
LABEL_KLM = 'KLM'
LABEL_NEW = 'NEW'
LABELS = (LABEL_EMPTY, LABEL_BN, LABEL_KLM, LABEL_NEW)

def _require_negative_chi(chi):
    if chi >= 0:
        raise exceptions.NonNegativeChi(f'chi should be negative, not {chi}.')

def _require_nonnegative(**kwargs):
    for (name, value) in kwargs.items():
        if value < 0:
            raise exceptions.NegativeArgument(f'{name} should be >= 0, not {value}.')

# DELTA AND THE STRATA
################################################################################

def delta_klm(t):
    '''
    Delta(t) = (t - floor(t)/2)(floor(t) + 1), the continuous piecewise linear
    function with Delta(t) = t on [0, 1] and Delta(t) = Delta(t - 1) + t.
    '''
    t = Fraction(t)
    if t < 0:
        raise exceptions.NegativeArgument(f'Delta is defined for t >= 0, not {t}.')
    n = math.floor(t)
    return (t - Fraction(n, 2)) * (n + 1)

def section_bound(h, chi):
    '''
    Return -chi * Delta(h / -chi) as an int. Writing h = s(-chi) + D with
    0 <= D < -chi, this is (h + D)(s + 1)/2.
    '''
    _require_negative_chi(chi)
    _require_nonnegative(h=h)
    m = -chi
    (quotient, remainder) = divmod(h, m)
    doubled = (h + remainder) * (quotient + 1)
    exceptions.require(doubled % 2 == 0, f'(h + D)(s + 1) = {doubled} is odd for h={h}, chi={chi}.')
    value = m * delta_klm(Fraction(h, m))
    exceptions.require(value == doubled // 2, f'-chi Delta(h/-chi) = {value} is not (h + D)(s + 1)/2.')
    return doubled // 2

def expected_dim(k, h, chi, s):
    '''
    d(k, h) = w0² - 2k chi + 2 + h chi - h², which is also w_k² + 2 + h chi - h².
    Both are computed and must agree.
    '''
    _require_negative_chi(chi)
    _require_nonnegative(k=k, h=h)
    (R, w0, wall) = stability.first_wall_data(chi, s)
    w_k = w0 + k * lattice.RANK_ONE
    from_w0 = lattice.square(w0, s) - 2 * k * chi + 2 + h * chi - h * h
    from_wk = lattice.square(w_k, s) + 2 + h * chi - h * h
    exceptions.require(from_w0 == from_wk, f'd({k},{h}) is {from_w0} from w0 but {from_wk} from w_k.')
    return from_w0

def mhk_nonempty(k, h, chi):
    _require_negative_chi(chi)
    _require_nonnegative(k=k, h=h)
    m = -chi
    return Fraction(k, m) >= delta_klm(Fraction(h, m))

def max_h(k, chi):
    '''
    The largest h with mhk_nonempty(k, h, chi). Delta is strictly increasing
    and Delta(t) >= t, so the scan stops by h = k.
    '''
    _require_negative_chi(chi)
    _require_nonnegative(k=k)
    h = 0
    while mhk_nonempty(k, h + 1, chi):
        h += 1
    return h

def k_red_for(k, h, chi):
    '''
    The unique k_red in [0, k] with (k - k_red)/(-chi) = Delta(h/(-chi)).
    '''
    if not mhk_nonempty(k, h, chi):
        raise exceptions.EmptyStratum(f'M^{h}_{k} is empty for chi={chi}.')
    value = k + chi * delta_klm(Fraction(h, -chi))
    exceptions.require(value.denominator == 1, f'k_red = {value} is not an integer.')
    value = value.numerator
    exceptions.require(0 <= value <= k, f'k_red = {value} is outside [0, {k}].')
    return value

def ext1_dimension(h, chi):
    '''
    dim Ext^1(E, O) = h - chi for an object with h sections and Euler
    characteristic chi.
    '''
    return h - chi

def quotient_by_sections(k, h, w, chi):
    '''
    Quotienting an object of class w_k with h sections by a w-dimensional
    space of them gives class w_{k-w} with at least max(0, w + chi) sections.
    '''
    if not 0 <= w <= h:
        raise exceptions.BadRange(f'w should be in [0, {h}], not {w}.')
    return (k - w, max(0, w + chi))

def extension_by_ext(k, h, v, chi):
    '''
    Extending by a v-dimensional subspace of Ext^1(E, O) gives class w_{k+v}
    with at least v sections.
    '''
    if not 0 <= v <= ext1_dimension(h, chi):
        raise exceptions.BadRange(f'v should be in [0, {ext1_dimension(h, chi)}], not {v}.')
    return (k + v, v)

def grassmannian_dim(D, n):
    if not 0 <= D <= n:
        raise exceptions.BadRange(f'Gr({D}, {n}) needs 0 <= D <= n.')
    return D * (n - D)

def grassmannian_bundle_dim(k, k_red, chi, s):
    '''
    dim M(w_{k_red}) + dim Gr(k - k_red, -chi). For 0 <= k - k_red < -chi this
    is d(k, k - k_red).
    '''
    _require_negative_chi(chi)
    if not 0 <= k_red <= k:
        raise exceptions.BadRange(f'k_red should be in [0, {k}], not {k_red}.')
    (R, w0, wall) = stability.first_wall_data(chi, s)
    base = lattice.square(w0 + k_red * lattice.RANK_ONE, s) + 2
    return base + grassmannian_dim(k - k_red, -chi)

def reduction_chain(k, h, chi):
    '''
    Follow (k, h) -> (k - h, h + chi) while h >= -chi. d(k, h) and h mod (-chi)
    stay the same along the chain.
    '''
    _require_negative_chi(chi)
    _require_nonnegative(k=k, h=h)
    m = -chi
    chain = [(k, h)]
    while h >= m:
        (k, h) = (k - h, h + chi)
        chain.append((k, h))
    return chain

@dataclasses.dataclass(frozen=True)
class StratumDescriptor:
    k: int
    k_red: int
    h: int
    chi: int
    status: sentinel.Sentinel
    dim: int = None
    fiber: tuple = None
    dim_bound: int = None

    @property
    def D(self):
        return self.h % -self.chi

    def to_json(self):
        return {
            'k': self.k,
            'k_red': self.k_red,
            'h': self.h,
            'chi': self.chi,
            'D': self.D,
            'status': self.status.to_json(),
            'dim': self.dim,
            'fiber': list(self.fiber) if self.fiber else None,
            'dim_bound': self.dim_bound,
        }

def stratum_status(k, k_red, h, chi, s):
    '''
    Empty when (k - k_red)/(-chi) < Delta(h/(-chi)). Otherwise nonempty when h
    is the largest h allowed by k - k_red, with dimension d(k, h) and fiber
    Gr(h mod -chi, -chi) in the equality case. Smaller h under strict
    inequality is reported as UNKNOWN_NONMAXIMAL.
    '''
    _require_negative_chi(chi)
    _require_nonnegative(h=h)
    if not 0 <= k_red <= k:
        raise exceptions.BadRange(f'k_red should be in [0, {k}], not {k_red}.')

    m = -chi
    available = Fraction(k - k_red, m)
    needed = delta_klm(Fraction(h, m))
    bound = expected_dim(k, h, chi, s)
    if available < needed:
        return StratumDescriptor(k, k_red, h, chi, status=EMPTY, dim_bound=bound)

    if h != max_h(k - k_red, chi):
        return StratumDescriptor(k, k_red, h, chi, status=UNKNOWN_NONMAXIMAL, dim_bound=bound)

    if available == needed:
        return StratumDescriptor(
            k, k_red, h, chi,
            status=NONEMPTY,
            dim=bound,
            fiber=(h % m, m),
            dim_bound=bound,
        )
    return StratumDescriptor(k, k_red, h, chi, status=NONEMPTY, dim_bound=bound)

@dataclasses.dataclass(frozen=True)
class StrataTable:
    k: int
    chi: int
    h_squared: int
    max_h: int
    top_k_red: int
    rows: tuple

    def to_json(self):
        return {
            'k': self.k,
            'chi': self.chi,
            'h_squared': self.h_squared,
            'max_h': self.max_h,
            'top_k_red': self.top_k_red,
            'strata': [row.to_json() for row in self.rows],
        }

def strata_table(k, chi, s):
    '''
    For each k_red in [0, k], the stratum at the largest h that k - k_red
    allows. The top-dimensional stratum of M(w_k) is the one at h = max_h(k).
    '''
    _require_negative_chi(chi)
    _require_nonnegative(k=k)
    top_h = max_h(k, chi)
    top_k_red = k_red_for(k, top_h, chi)
    rows = tuple(
        stratum_status(k, k_red, max_h(k - k_red, chi), chi, s)
        for k_red in range(k + 1)
    )
    return StrataTable(k=k, chi=chi, h_squared=s.h_squared, max_h=top_h, top_k_red=top_k_red, rows=rows)

# VERDICTS
################################################################################

def serre_dual(g, d, r):
    '''
    (d, r) -> (2g - 2 - d, r - chi). Applying it twice gives back (d, r).
    '''
    chi = d + 1 - g
    return (2 * g - 2 - d, r - chi)

@dataclasses.dataclass(frozen=True)
class BNVerdict:
    g: int
    d: int
    r: int
    chi: int
    rho: int
    D: int
    nonempty: bool
    dim: int = None
    structure: sentinel.Sentinel = EMPTY
    count: int = None
    fiber: tuple = None
    dual: tuple = None
    R: int = None
    w0: lattice.Character = None
    k0: int = None
    base_dim: int = None
    fiber_dim: int = None
    moduli_dim: int = None
    lhs: int = None
    rhs: int = None
    automatic: bool = False

    def to_json(self):
        return {
            'g': self.g,
            'd': self.d,
            'r': self.r,
            'chi': self.chi,
            'rho': self.rho,
            'D': self.D,
            'nonempty': self.nonempty,
            'dim': self.dim,
            'structure': self.structure.to_json(),
            'count': self.count,
            'fiber': list(self.fiber) if self.fiber else None,
            'dual': list(self.dual) if self.dual else None,
            'R': self.R,
            'w0': self.w0.to_json() if self.w0 else None,
            'k0': self.k0,
            'base_dim': self.base_dim,
            'fiber_dim': self.fiber_dim,
            'moduli_dim': self.moduli_dim,
            'threshold': {'lhs': self.lhs, 'rhs': self.rhs},
            'automatic': self.automatic,
        }

def bn_verdict(g, d, r):
    '''
    Decide V^r_d(|H|) for curves of genus g on an abelian surface.

    With chi = d + 1 - g < 0, rho = g - (r+1)(r+1-chi) and D = (r+1) mod -chi,
    the locus is nonempty iff rho + g - 2 >= D(-chi) - D². It then has
    dimension rho + g - 2, and on equality it is a union of ((g-1)/chi)²
    Grassmannians Gr(D, -chi). chi > 0 is reduced to chi < 0 by Serre duality.

    >>> bn_verdict(28, 24, 5).count
    81
    '''
    if g < 2:
        raise exceptions.BadRange(f'g should be at least 2, not {g}.')
    if d < 1 or r < 1:
        raise exceptions.BadRange(f'd and r should be at least 1, not d={d}, r={r}.')
    chi = d + 1 - g
    if chi == 0:
        raise exceptions.ChiZero(f'd = {d} = g - 1 gives chi = 0.')

    rho = g - (r + 1) * (r + 1 - chi)
    if chi > 0 and r + 1 <= chi:
        log.debug('(g=%d, d=%d, r=%d) asks for no more sections than chi.', g, d, r)
        return BNVerdict(
            g=g, d=d, r=r, chi=chi, rho=rho, D=(r + 1) % chi,
            nonempty=True, dim=2 * g - 2, structure=IRREDUCIBLE, automatic=True,
        )

    dual = None
    (d_work, r_work, chi_work) = (d, r, chi)
    if chi > 0:
        dual = serre_dual(g, d, r)
        (d_work, r_work) = dual
        chi_work = -chi
        log.debug('Reduced (d=%d, r=%d) to its dual (d=%d, r=%d).', d, r, d_work, r_work)

    m = -chi_work
    n = r_work + 1
    D = n % m
    exceptions.require(g - n * (n - chi_work) == rho, 'rho changed under Serre duality.')

    lhs = rho + g - 2
    rhs = D * m - D * D
    nonempty = lhs >= rhs

    integer_form = 2 * g - 2 >= (n + D) * (n - D - chi_work)
    exceptions.require(integer_form == nonempty, 'The integer form of the criterion disagrees.')

    s = lattice.Surface.from_genus(g)
    (R, w0, wall) = stability.first_wall_data(chi_work, s)
    exceptions.require(
        mhk_nonempty(R, n, chi_work) == nonempty,
        f'M^{n}_{R} and V^{r}_{d} disagree on emptiness.',
    )

    common = dict(g=g, d=d, r=r, chi=chi, rho=rho, D=D, dual=dual, R=R, w0=w0, lhs=lhs, rhs=rhs)
    if not nonempty:
        exceptions.require(rho < 0, f'Empty locus with rho = {rho} >= 0.')
        return BNVerdict(nonempty=False, structure=EMPTY, **common)

    k0 = k_red_for(R, n, chi_work)
    base_dim = rho + g - D * (m - D)
    exceptions.require(base_dim == lattice.square(w0 + k0 * lattice.RANK_ONE, s) + 2, 'Base dimension mismatch.')
    fiber_dim = grassmannian_dim(D, m)
    dim = lhs

    if lhs > rhs:
        exceptions.require(base_dim % 2 == 0 and base_dim >= 4, f'Base dimension {base_dim} should be even and >= 4.')
        return BNVerdict(
            nonempty=True, dim=dim, structure=IRREDUCIBLE,
            k0=k0, base_dim=base_dim, fiber_dim=fiber_dim, moduli_dim=dim + 2,
            **common,
        )

    exceptions.require((g - 1) % m == 0, f'Equality with chi={chi_work} not dividing g - 1 = {g - 1}.')
    count = ((g - 1) // m) ** 2
    rank = (w0 + k0 * lattice.RANK_ONE).r
    exceptions.require(count == rank * rank, f'Component count {count} is not rk(w_k0)² = {rank * rank}.')
    return BNVerdict(
        nonempty=True, dim=dim, structure=GRASSMANNIAN_UNION, count=count, fiber=(D, m),
        k0=k0, base_dim=base_dim, fiber_dim=fiber_dim, moduli_dim=dim + 2,
        **common,
    )

@dataclasses.dataclass(frozen=True)
class ModuliVerdict:
    v: lattice.Character
    r: int
    chi: int
    h_squared: int
    square: int
    D: int
    nonempty: bool
    dim: int = None

    def to_json(self):
        return {
            'v': self.v.to_json(),
            'r': self.r,
            'chi': self.chi,
            'h_squared': self.h_squared,
            'square': self.square,
            'D': self.D,
            'nonempty': self.nonempty,
            'dim': self.dim,
        }

def moduli_verdict(k, chi, r, s):
    '''
    Decide M^{r+1}_H(v) for v = (k, 1, chi): nonempty iff
    v² - (r+1)(r+1-chi) >= D(-chi) - D², of dimension v² + 2 - (r+1)(r+1-chi).
    '''
    _require_negative_chi(chi)
    _require_nonnegative(r=r)
    v = lattice.Character(k, 1, chi)
    q = lattice.square(v, s)
    m = -chi
    n = r + 1
    D = n % m
    common = dict(v=v, r=r, chi=chi, h_squared=s.h_squared, square=q, D=D)
    if q < 0:
        log.debug('%s has negative square, so M^%d is empty.', v, n)
        return ModuliVerdict(nonempty=False, **common)

    excess = q - n * (n - chi)
    nonempty = excess >= D * m - D * D

    (R, w0, wall) = stability.first_wall_data(chi, s)
    exceptions.require(
        mhk_nonempty(k + R, n, chi) == nonempty,
        f'M^{n}_H({v}) and M^{n}_{k + R} disagree on emptiness.',
    )
    if not nonempty:
        return ModuliVerdict(nonempty=False, **common)
    return ModuliVerdict(nonempty=True, dim=excess + 2, **common)

def klm_bound_holds(g, r, chi):
    '''
    rho + r(r+2) >= -f chi (r + 1 + chi(f + 1)/2) with f = floor(r/(-chi)).
    For r >= 1 this holds exactly when the nonemptiness criterion does.
    '''
    _require_negative_chi(chi)
    m = -chi
    f = r // m
    rho = g - (r + 1) * (r + 1 - chi)
    lhs = rho + r * (r + 2)
    rhs = Fraction(f * m * (2 * (r + 1) - m * (f + 1)), 2)
    return lhs >= rhs

def classify_cell(g, d, r):
    '''
    EMPTY when the locus is empty, else BN when rho >= 0, else KLM when
    d >= r(r+1), else NEW.
    '''
    verdict = bn_verdict(g, d, r)
    if not verdict.nonempty:
        return LABEL_EMPTY
    if verdict.rho >= 0:
        return LABEL_BN
    if d >= r * (r + 1):
        return LABEL_KLM
    return LABEL_NEW

def _table_row(g, d, r_values):
    row = []
    for r in r_values:
        if d + 1 - g == 0:
            row.append(None)
        else:
            row.append(classify_cell(g, d, r))
    log.debug('g=%d d=%d: %s', g, d, row)
    return row

@dataclasses.dataclass(frozen=True)
class BNTable:
    g: int
    d_values: tuple
    r_values: tuple
    rows: tuple

    def cell(self, d, r):
        return self.rows[self.d_values.index(d)][self.r_values.index(r)]

    def to_json(self):
        return {
            'g': self.g,
            'd': list(self.d_values),
            'r': list(self.r_values),
            'rows': [list(row) for row in self.rows],
        }

def bn_table(g, d_values, r_values, *, workers=1):
    '''
    Classify every (d, r) cell. Cells with chi = 0 are None.
    '''
    d_values = tuple(d_values)
    r_values = tuple(r_values)
    rows = threadpool.map_ordered(
        _table_row,
        ((g, d, r_values) for d in d_values),
        workers=workers,
    )
    log.info('Classified %d cells for g=%d.', len(d_values) * len(r_values), g)
    return BNTable(g=g, d_values=d_values, r_values=r_values, rows=tuple(tuple(row) for row in rows))
