'''
stability
=========

Central charges, slopes and the exact geometry of walls for the family of
stability conditions sigma(alpha, beta) on the Mukai lattice.

For a class v the slope nu(v) = -Re Z / Im Z changes relative to a class u only
across the locus where the two slopes agree. Expanding Re Z(v) Im Z(u) =
Re Z(u) Im Z(v) gives

    a (alpha² + beta²) + b beta + c = 0

with integer a, b, c (see wall_between), so every wall is a semicircle centered
on the beta axis or a vertical line. Walls are kept in lowest terms with a
positive leading coefficient so two walls are equal exactly when their
triples are.

No square roots are taken anywhere. Points on a wall are handled as
(beta, alpha²) pairs when alpha would be irrational.
'''
import dataclasses
import fractions
import math

from bnwalls import exceptions
from bnwalls import lattice
from bnwalls import sentinel
from bnwalls import threadpool
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.stability')

Fraction = fractions.Fraction

PLUS_INFINITY = sentinel.Sentinel('PLUS_INFINITY', serialized='+inf')

# Scale for the rational upper bounds of square roots used in the search box.
SQRT_SCALE = 1 << 32

@dataclasses.dataclass(frozen=True)
class StabilityPoint:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'alpha', lattice.parse_rational(self.alpha))
        object.__setattr__(self, 'beta', lattice.parse_rational(self.beta))
        if self.alpha <= 0:
            raise exceptions.BadRange(f'alpha should be positive, not {self.alpha}.')

    @property
    def alpha_sq(self):
        return self.alpha * self.alpha

@dataclasses.dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im: Fraction

    def __bool__(self):
        return bool(self.re or self.im)

    def to_json(self):
        return {'re': lattice.rational_to_json(self.re), 'im': lattice.rational_to_json(self.im)}

@dataclasses.dataclass(frozen=True)
class Wall:
    a: int
    b: int
    c: int
    defining_pair: tuple = dataclasses.field(default=None, compare=False, repr=False)

    @property
    def key(self):
        return (self.a, self.b, self.c)

    @property
    def is_vertical(self):
        return self.a == 0

    @property
    def center(self):
        if self.is_vertical:
            return None
        return Fraction(-self.b, 2 * self.a)

    @property
    def radius_sq(self):
        if self.is_vertical:
            return None
        return Fraction(self.b * self.b - 4 * self.a * self.c, 4 * self.a * self.a)

    @property
    def vertical_beta(self):
        if not self.is_vertical:
            return None
        return Fraction(-self.c, self.b)

    def evaluate(self, beta, alpha_sq):
        return self.a * (alpha_sq + beta * beta) + self.b * beta + self.c

    def to_json(self):
        data = {'a': self.a, 'b': self.b, 'c': self.c}
        if self.is_vertical:
            data['beta'] = lattice.rational_to_json(self.vertical_beta)
            data['center'] = None
            data['radius_sq'] = None
        else:
            data['center'] = lattice.rational_to_json(self.center)
            data['radius_sq'] = lattice.rational_to_json(self.radius_sq)
        return data

@dataclasses.dataclass(frozen=True)
class Region:
    beta_lo: Fraction
    beta_hi: Fraction
    alpha_lo: Fraction
    alpha_hi: Fraction

    def __post_init__(self):
        for name in ('beta_lo', 'beta_hi', 'alpha_lo', 'alpha_hi'):
            object.__setattr__(self, name, lattice.parse_rational(getattr(self, name)))
        if self.alpha_lo <= 0:
            raise exceptions.InvalidRegion(f'alpha_lo should be positive, not {self.alpha_lo}.')
        if not self.beta_lo < self.beta_hi:
            raise exceptions.InvalidRegion(f'beta_lo {self.beta_lo} should be below beta_hi {self.beta_hi}.')
        if not self.alpha_lo < self.alpha_hi:
            raise exceptions.InvalidRegion(f'alpha_lo {self.alpha_lo} should be below alpha_hi {self.alpha_hi}.')

    @classmethod
    def parse(cls, text):
        '''
        Parse "beta_lo,beta_hi,alpha_lo,alpha_hi", e.g. "-2,0,1/100,2".
        '''
        parts = [part.strip() for part in text.split(',')]
        if len(parts) != 4:
            raise exceptions.UsageError(f'{text!r} should be beta_lo,beta_hi,alpha_lo,alpha_hi.')
        return cls(*parts)

    @classmethod
    def from_config(cls, config):
        return cls(config.beta_lo, config.beta_hi, config.alpha_lo, config.alpha_hi)

    def to_json(self):
        return {
            'beta_lo': lattice.rational_to_json(self.beta_lo),
            'beta_hi': lattice.rational_to_json(self.beta_hi),
            'alpha_lo': lattice.rational_to_json(self.alpha_lo),
            'alpha_hi': lattice.rational_to_json(self.alpha_hi),
        }

@dataclasses.dataclass(frozen=True)
class Span:
    '''
    An interval of rationals whose ends may each be open or closed.
    '''
    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    @property
    def is_empty(self):
        return self.lo > self.hi or (self.lo == self.hi and (self.lo_open or self.hi_open))

    def contains(self, x):
        above = x > self.lo or (x == self.lo and not self.lo_open)
        below = x < self.hi or (x == self.hi and not self.hi_open)
        return above and below

    def closure(self):
        return Span(self.lo, self.hi)

    def intersect(self, other):
        if self.lo > other.lo:
            (lo, lo_open) = (self.lo, self.lo_open)
        elif self.lo < other.lo:
            (lo, lo_open) = (other.lo, other.lo_open)
        else:
            (lo, lo_open) = (self.lo, self.lo_open or other.lo_open)

        if self.hi < other.hi:
            (hi, hi_open) = (self.hi, self.hi_open)
        elif self.hi > other.hi:
            (hi, hi_open) = (other.hi, other.hi_open)
        else:
            (hi, hi_open) = (self.hi, self.hi_open or other.hi_open)
        return Span(lo, hi, lo_open, hi_open)

    def below(self, x):
        '''
        Restrict to values strictly less than x.
        '''
        if x < self.hi:
            return Span(self.lo, x, self.lo_open, True)
        if x == self.hi:
            return Span(self.lo, self.hi, self.lo_open, True)
        return self

    def above(self, x):
        '''
        Restrict to values strictly greater than x.
        '''
        if x > self.lo:
            return Span(x, self.hi, True, self.hi_open)
        if x == self.lo:
            return Span(self.lo, self.hi, True, self.hi_open)
        return self

# CHARGES AND SLOPES
################################################################################

def central_charge(v, p, s):
    '''
    Z(v) = -chi^beta + i alpha H² c^beta + alpha²/2 H² r, on the lattice:
    re = -chi + beta c H² - (beta² - alpha²)/2 H² r
    im = alpha H² (c - beta r)
    '''
    h2 = s.h_squared
    (alpha, beta) = (p.alpha, p.beta)
    re = -v.chi + beta * v.c * h2 - (beta * beta - alpha * alpha) / 2 * h2 * v.r
    im = alpha * h2 * (v.c - beta * v.r)
    return ChargeValue(re=Fraction(re), im=Fraction(im))

def slope_nu(v, p, s):
    charge = central_charge(v, p, s)
    if charge.im == 0:
        if charge.re == 0:
            raise exceptions.ZeroCharge(f'{v} lies in the kernel of Z at {p}.')
        return PLUS_INFINITY
    return -charge.re / charge.im

def kernel_vector(p, s):
    '''
    The rational class (1, beta, (alpha² + beta²) H²/2) spanning the kernel of
    Z at p. Its square is -alpha² H², so no class of nonnegative square is
    ever in the kernel.
    '''
    return lattice.TwistedCharacter(
        r=Fraction(1),
        c=p.beta,
        chi=(p.alpha_sq + p.beta * p.beta) * s.h_squared / 2,
    )

def _real_part(v, beta, alpha_sq, s):
    h2 = s.h_squared
    return -v.chi + beta * v.c * h2 - (beta * beta - alpha_sq) / 2 * h2 * v.r

def same_slope(v, u, beta, alpha_sq, s):
    '''
    Test nu(v) == nu(u) at the point with the given beta and alpha² without
    knowing alpha itself. The common factor alpha H² of both imaginary parts
    is dropped, which leaves a polynomial identity in beta and alpha².
    Two classes of slope +inf at the point compare equal.
    '''
    beta = Fraction(beta)
    alpha_sq = Fraction(alpha_sq)
    im_v = v.c - beta * v.r
    im_u = u.c - beta * u.r
    return _real_part(u, beta, alpha_sq, s) * im_v == _real_part(v, beta, alpha_sq, s) * im_u

# WALLS
################################################################################

def normalize_wall(a, b, c, defining_pair=None):
    g = math.gcd(math.gcd(a, b), c)
    if g == 0:
        raise exceptions.Proportional('A wall needs at least one nonzero coefficient.')
    (a, b, c) = (a // g, b // g, c // g)
    leading = next(x for x in (a, b, c) if x != 0)
    if leading < 0:
        (a, b, c) = (-a, -b, -c)
    return Wall(a, b, c, defining_pair=defining_pair)

def wall_coefficients(v, u, s):
    '''
    Return the integer triple (a, b, c), not normalized, of the locus where
    nu(v) = nu(u). H² is even so a is an integer.
    '''
    a = (s.h_squared // 2) * (v.r * u.c - u.r * v.c)
    b = v.chi * u.r - u.chi * v.r
    c = u.chi * v.c - v.chi * u.c
    return (a, b, c)

def wall_between(v, u, s):
    '''
    Return the Wall where the slopes of v and u agree, or None if that locus
    does not reach the open upper half-plane.

    >>> wall_between(lattice.Character(0, 1, -3), lattice.Character(1, 0, 0), lattice.Surface(54)).key
    (9, 1, 0)
    '''
    if lattice.is_proportional(v, u):
        raise exceptions.Proportional(f'{u} and {v} span the same line.')
    (a, b, c) = wall_coefficients(v, u, s)
    if a == 0 and b == 0:
        # Then c != 0 since the classes are not proportional: an empty locus.
        return None
    if a != 0 and b * b - 4 * a * c <= 0:
        return None
    return normalize_wall(a, b, c, defining_pair=(v, u))

def gieseker_uhlenbeck_wall(v, s):
    '''
    The wall spanned by v and the point class (0,0,1). For r != 0 this is the
    vertical line beta = c/r.
    '''
    return wall_between(v, lattice.POINT, s)

def on_wall(w, p):
    return w.evaluate(p.beta, p.alpha_sq) == 0

def wall_alpha_sq(wall, beta):
    '''
    alpha² of the circle above the given beta. Nonpositive means the circle
    has no point with that beta in the upper half-plane.
    '''
    if wall.is_vertical:
        raise exceptions.BadRange('A vertical wall does not determine alpha from beta.')
    beta = Fraction(beta)
    return Fraction(-(wall.b * beta + wall.c), wall.a) - beta * beta

def wall_meets_vertical(wall, beta):
    beta = Fraction(beta)
    if wall.is_vertical:
        return wall.vertical_beta == beta
    return wall_alpha_sq(wall, beta) > 0

def walls_cross(w1, w2):
    '''
    True when the two walls meet transversally in the open upper half-plane.
    Circles and their mirror images meet in conjugate pairs, so circles cross
    exactly when their radical axis has a point with alpha² > 0.
    '''
    if w1.key == w2.key:
        return False
    if w1.is_vertical and w2.is_vertical:
        return False
    if w1.is_vertical:
        return wall_alpha_sq(w2, w1.vertical_beta) > 0
    if w2.is_vertical:
        return wall_alpha_sq(w1, w2.vertical_beta) > 0

    slope = Fraction(w1.b, w1.a) - Fraction(w2.b, w2.a)
    offset = Fraction(w1.c, w1.a) - Fraction(w2.c, w2.a)
    if slope == 0:
        # Concentric.
        return False
    beta = -offset / slope
    return wall_alpha_sq(w1, beta) > 0

def wall_inside(inner, outer):
    '''
    True when the semicircle `inner` lies weakly inside the disc of `outer`.
    Vertical lines are never inside anything.
    '''
    if inner.key == outer.key:
        return True
    if inner.is_vertical or outer.is_vertical:
        return False
    if walls_cross(inner, outer):
        return False
    distance_sq = (inner.center - outer.center) ** 2
    return inner.radius_sq <= outer.radius_sq and distance_sq <= outer.radius_sq

def rational_points_on_wall(wall, count):
    '''
    Return `count` exact StabilityPoints on the wall.

    Circles need a rational radius, and the points come from the rational
    parametrization of the circle by slopes m > 0. Vertical walls use the
    heights 1, 2, 3... Raise BadRange for circles of irrational radius; use
    sample_points_on_wall for those.
    '''
    if wall.is_vertical:
        return [StabilityPoint(alpha=n, beta=wall.vertical_beta) for n in range(1, count + 1)]

    radius = rational_sqrt(wall.radius_sq)
    if radius is None:
        raise exceptions.BadRange(f'The wall {wall.key} has irrational radius.')
    points = []
    for j in range(1, count + 1):
        m = Fraction(2 * j, count + 1)
        beta = wall.center + radius * (1 - m * m) / (1 + m * m)
        alpha = radius * 2 * m / (1 + m * m)
        points.append(StabilityPoint(alpha=alpha, beta=beta))
    return points

def sample_points_on_wall(wall, count):
    '''
    Return `count` pairs (beta, alpha²) on a circular wall, alpha² > 0, with
    rational beta. |delta| < radius because radius²/(1 + radius²) < radius.
    '''
    if wall.is_vertical:
        return [(wall.vertical_beta, Fraction(n * n)) for n in range(1, count + 1)]
    radius_sq = wall.radius_sq
    reach = radius_sq / (1 + radius_sq)
    samples = []
    for j in range(1, count + 1):
        delta = reach * Fraction(2 * j - count - 1, count + 1)
        beta = wall.center + delta
        samples.append((beta, wall_alpha_sq(wall, beta)))
    return samples

def rational_sqrt(value):
    value = Fraction(value)
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None

def sqrt_upper(value):
    '''
    A rational upper bound for the square root of a nonnegative rational, at
    most 1/SQRT_SCALE above it.
    '''
    scaled = math.floor(Fraction(value) * SQRT_SCALE * SQRT_SCALE)
    return Fraction(math.isqrt(scaled) + 1, SQRT_SCALE)

def first_wall_data(chi, s):
    '''
    Return (R, w0, wall) for the first wall W_chi of the class (0,1,chi):
    R = floor(H²/(-2 chi)), w0 = (-R, 1, chi), and the wall spanned by (1,0,0)
    and (0,1,chi), which contains every w_k = w0 + (k,0,0).
    '''
    if chi >= 0:
        raise exceptions.NonNegativeChi(f'chi should be negative, not {chi}.')
    R = s.h_squared // (-2 * chi)
    w0 = lattice.Character(-R, 1, chi)
    wall = wall_between(lattice.Character(0, 1, chi), lattice.RANK_ONE, s)
    return (R, w0, wall)

# ENUMERATION
################################################################################

def _positive_beta_span(v, ru, cu, region):
    '''
    The betas of the region where 0 < Im Z(u) < Im Z(v) for u = (ru, cu, *),
    up to the positive factor alpha H². Each condition is A - B beta > 0.
    '''
    span = Span(region.beta_lo, region.beta_hi)
    conditions = [
        (v.c, v.r),
        (cu, ru),
        (v.c - cu, v.r - ru),
    ]
    for (A, B) in conditions:
        if B == 0:
            if A <= 0:
                return None
            continue
        if B > 0:
            span = span.below(Fraction(A, B))
        else:
            span = span.above(Fraction(A, B))
        if span.is_empty:
            return None
    return span

def _concave_image(wall, span):
    '''
    The image of the span under beta -> alpha²(beta), a concave parabola with
    its vertex at the wall's center.
    '''
    center = wall.center
    lo_val = wall_alpha_sq(wall, span.lo)
    hi_val = wall_alpha_sq(wall, span.hi)

    if span.lo < center < span.hi:
        (top, top_open) = (wall_alpha_sq(wall, center), False)
    elif center == span.lo:
        (top, top_open) = (lo_val, span.lo_open)
    elif center == span.hi:
        (top, top_open) = (hi_val, span.hi_open)
    elif center < span.lo:
        (top, top_open) = (lo_val, span.lo_open)
    else:
        (top, top_open) = (hi_val, span.hi_open)

    if lo_val < hi_val:
        (bottom, bottom_open) = (lo_val, span.lo_open)
    elif hi_val < lo_val:
        (bottom, bottom_open) = (hi_val, span.hi_open)
    else:
        (bottom, bottom_open) = (lo_val, span.lo_open and span.hi_open)
    return Span(bottom, top, bottom_open, top_open)

def wall_meets_region(wall, beta_span, region):
    '''
    True when the wall has a point (beta, alpha) with beta in beta_span and
    alpha_lo <= alpha <= alpha_hi.
    '''
    if wall.is_vertical:
        return beta_span.contains(wall.vertical_beta)
    image = _concave_image(wall, beta_span)
    window = Span(region.alpha_lo ** 2, region.alpha_hi ** 2)
    return not image.intersect(window).is_empty

def _ratio(cu, ru, v, beta):
    # Im Z(u) / Im Z(v) at beta, or None where Im Z(v) vanishes.
    denominator = v.c - beta * v.r
    if denominator == 0:
        return None
    return (cu - beta * ru) / denominator

def _chi_box(v, ru, cu, beta_span, region, s, q_v):
    '''
    Return the closed integer range of u.chi that can give a wall for
    u = (ru, cu, u.chi), or None.

    On a wall u = t v + y n with n the kernel vector, t = Im Z(u)/Im Z(v) in
    (0, 1) and y = ru - t rv, and y² alpha² H² <= t (1 - t) v². That bounds
    alpha and t, and chi(u) = t chi(v) + y (alpha² + beta²) H²/2 then lies
    between the corner values of a bilinear function.
    '''
    h2 = s.h_squared
    closed = beta_span.closure()
    t_values = [_ratio(cu, ru, v, closed.lo), _ratio(cu, ru, v, closed.hi)]
    if None in t_values:
        (t_lo, t_hi) = (Fraction(0), Fraction(1))
    else:
        (t_lo, t_hi) = (max(Fraction(0), min(t_values)), min(Fraction(1), max(t_values)))

    y_lo = ru - t_lo * v.r
    y_hi = ru - t_hi * v.r
    if y_lo * y_hi <= 0:
        y_min = Fraction(0)
    else:
        y_min = min(abs(y_lo), abs(y_hi))

    alpha_sq_lo = region.alpha_lo ** 2
    alpha_sq_hi = region.alpha_hi ** 2
    if y_min > 0:
        alpha_sq_hi = min(alpha_sq_hi, q_v / (4 * y_min * y_min * h2))
        if alpha_sq_hi < alpha_sq_lo:
            return None
        tau = y_min * y_min * alpha_sq_lo * h2 / q_v
        if tau > Fraction(1, 4):
            return None
        root = sqrt_upper(1 - 4 * tau)
        t_lo = max(t_lo, (1 - root) / 2)
        t_hi = min(t_hi, (1 + root) / 2)
        if t_lo > t_hi:
            return None
        # y has no zero on [t_lo, t_hi], so beta(t) is monotone there.
        betas = sorted(
            (cu - t * v.c) / (ru - t * v.r)
            for t in (t_lo, t_hi)
        )
        closed = closed.intersect(Span(betas[0], betas[1]))
        if closed.is_empty:
            return None

    if closed.lo <= 0 <= closed.hi:
        beta_sq_lo = Fraction(0)
    else:
        beta_sq_lo = min(closed.lo ** 2, closed.hi ** 2)
    beta_sq_hi = max(closed.lo ** 2, closed.hi ** 2)
    s_lo = (alpha_sq_lo + beta_sq_lo) * h2 / 2
    s_hi = (alpha_sq_hi + beta_sq_hi) * h2 / 2

    corners = [
        t * v.chi + (ru - t * v.r) * kernel_chi
        for t in (t_lo, t_hi)
        for kernel_chi in (s_lo, s_hi)
    ]
    chi_lo = min(corners)
    chi_hi = max(corners)

    # Q(u) >= 0.
    if ru > 0:
        chi_hi = min(chi_hi, Fraction(cu * cu * h2, 2 * ru))
    elif ru < 0:
        chi_lo = max(chi_lo, Fraction(cu * cu * h2, 2 * ru))

    # Q(v - u) >= 0.
    rank_gap = v.r - ru
    if rank_gap != 0:
        bound = v.chi - Fraction((v.c - cu) ** 2 * h2, 2 * rank_gap)
        if rank_gap > 0:
            chi_lo = max(chi_lo, bound)
        else:
            chi_hi = min(chi_hi, bound)

    chi_lo = math.ceil(chi_lo)
    chi_hi = math.floor(chi_hi)

    # For rank zero v the discriminant is linear in u.chi and must be positive.
    if v.r == 0:
        bound = Fraction(v.chi * cu, v.c) - Fraction(v.chi * v.chi * ru, 2 * h2 * v.c * v.c)
        if ru > 0:
            chi_lo = max(chi_lo, math.floor(bound) + 1)
        else:
            chi_hi = min(chi_hi, math.ceil(bound) - 1)

    if chi_lo > chi_hi:
        return None
    return (chi_lo, chi_hi)

def _scan_rank(v, ru, region, s, q_v):
    '''
    Return every (u, wall) with u.r == ru that passes the exact conditions.
    '''
    found = []
    if v.r == 0 and ru == 0:
        # Two rank zero classes never give a wall in the upper half-plane.
        return found

    betas = (region.beta_lo, region.beta_hi)
    cu_floor = min(beta * ru for beta in betas)
    cu_ceiling = max(v.c + beta * (ru - v.r) for beta in betas)
    for cu in range(math.floor(cu_floor) + 1, math.ceil(cu_ceiling)):
        beta_span = _positive_beta_span(v, ru, cu, region)
        if beta_span is None:
            continue
        box = _chi_box(v, ru, cu, beta_span, region, s, q_v)
        if box is None:
            continue
        for chi_u in range(box[0], box[1] + 1):
            u = lattice.Character(ru, cu, chi_u)
            if lattice.square(u, s) < 0 or lattice.square(v - u, s) < 0:
                continue
            if lattice.is_proportional(v, u):
                continue
            wall = wall_between(v, u, s)
            if wall is None:
                continue
            if not wall_meets_region(wall, beta_span, region):
                continue
            log.loud('%s destabilizes %s along %s.', u, v, wall.key)
            found.append((u, wall))
    return found

def _canonical_key(u):
    return (abs(u.r), abs(u.c), u.r, u.c, u.chi)

def wall_top_beta(wall):
    '''
    The beta of the highest point of a semicircular wall. A vertical wall has
    no highest point, and Im Z scales uniformly along it, so its own beta
    serves.
    '''
    if wall.is_vertical:
        return wall.vertical_beta
    return wall.center

def subobject_at_top(v, u, wall):
    '''
    Test 0 <= Im Z(u) < Im Z(v) at the top of the wall. Both imaginary parts
    carry the factor alpha H², so only c - beta r is compared.
    '''
    beta = wall_top_beta(wall)
    im_u = u.c - beta * u.r
    im_v = v.c - beta * v.r
    return 0 <= im_u < im_v

def _representative_key(v, u, wall):
    return (not subobject_at_top(v, u, wall), _canonical_key(u))

def _sort_key(wall):
    if wall.is_vertical:
        return (wall.vertical_beta, 1, Fraction(0), wall.key)
    return (wall.center, 0, wall.radius_sq, wall.key)

def enumerate_walls(v, reg, s, *, workers=1):
    '''
    Return the potential walls for v inside the region as a list of
    (u, wall), sorted by wall center.

    A class u qualifies when u² >= 0, (v - u)² >= 0, u is not a multiple of v,
    and somewhere on the wall inside the region 0 < Im Z(u) < Im Z(v). Classes
    giving the same wall are merged. The representative satisfies
    0 <= Im Z(u) < Im Z(v) at the top of the wall whenever some candidate
    does, and among those has the smallest |rank|, then the smallest |c|. Whether an actual strictly semistable object
    exists along each wall is not decided here.
    '''
    q_v = lattice.square(v, s)
    if q_v < 0:
        raise exceptions.NegativeSquare(f'{v} has square {q_v} < 0.')
    if q_v == 0:
        log.debug('%s is isotropic, so there are no walls.', v)
        return []

    reach = math.isqrt(math.floor(Fraction(q_v) / (4 * reg.alpha_lo ** 2 * s.h_squared))) + 1
    ranks = range(min(0, v.r) - reach, max(0, v.r) + reach + 1)
    log.debug('Scanning ranks %d..%d for walls of %s.', ranks.start, ranks.stop - 1, v)

    chunks = threadpool.map_ordered(
        _scan_rank,
        ((v, ru, reg, s, q_v) for ru in ranks),
        workers=workers,
    )

    best = {}
    for chunk in chunks:
        for (u, wall) in chunk:
            rank = _representative_key(v, u, wall)
            current = best.get(wall.key)
            if current is None or rank < current[0]:
                best[wall.key] = (rank, u)

    results = []
    for (key, (rank, u)) in best.items():
        wall = normalize_wall(*key, defining_pair=(v, u))
        results.append((u, wall))
    results.sort(key=lambda pair: _sort_key(pair[1]))
    log.info('Found %d potential walls for %s.', len(results), v)
    return results
