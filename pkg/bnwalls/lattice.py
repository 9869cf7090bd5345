'''
lattice
=======

Exact arithmetic on the algebraic Mukai lattice of a polarized abelian surface
of Picard rank one (or any surface where only H² matters).

A Character is the integral class (r, c, chi) standing for the Chern character
(ch0, ch1 / H, ch2). On an abelian surface the Todd class is trivial, so ch2 is
the Euler characteristic and we call it chi throughout. The self-intersection
H² lives on the Surface and only enters through the pairing and the central
charge.

>>> s = Surface(54)
>>> genus(s)
28
>>> square(Character(-9, 1, -3), s)
0
>>> mukai_pairing(Character(1, 0, 0), Character(0, 0, 1), s)
-1

Everything here is exact: ints and fractions.Fraction, never float.
'''
import dataclasses
import fractions

from bnwalls import exceptions
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.lattice')

Fraction = fractions.Fraction

def parse_rational(value):
    '''
    Turn an int, Fraction, or a string like "3", "-1/18", "0.25" into an exact
    Fraction. Floats are refused because they are already inexact.
    '''
    if isinstance(value, bool):
        raise TypeError(f'value should be a rational, not {type(value)}.')
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise exceptions.UsageError(f'{value!r} is not a rational number.')
    raise TypeError(f'value should be int, Fraction, or str, not {type(value)}.')

def rational_to_json(value):
    '''
    Integers stay JSON ints, anything else becomes the string "p/q".
    '''
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f'{value.numerator}/{value.denominator}'

@dataclasses.dataclass(frozen=True)
class Surface:
    h_squared: int

    def __post_init__(self):
        if isinstance(self.h_squared, bool) or not isinstance(self.h_squared, int):
            raise exceptions.InvalidSurface(f'H² should be an int, not {self.h_squared!r}.')
        if self.h_squared < 2 or self.h_squared % 2:
            raise exceptions.InvalidSurface(f'H² should be even and at least 2, not {self.h_squared}.')

    @classmethod
    def from_genus(cls, g):
        if g < 2:
            raise exceptions.InvalidSurface(f'Genus should be at least 2, not {g}.')
        return cls(2 * g - 2)

    @classmethod
    def from_json(cls, data):
        return cls(data['h_squared'])

    @property
    def genus(self):
        return self.h_squared // 2 + 1

    def to_json(self):
        return {'h_squared': self.h_squared}

@dataclasses.dataclass(frozen=True)
class Character:
    r: int
    c: int
    chi: int

    def __post_init__(self):
        for (name, value) in (('r', self.r), ('c', self.c), ('chi', self.chi)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f'{name} should be an int, not {value!r}.')

    def __add__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return Character(self.r + other.r, self.c + other.c, self.chi + other.chi)

    def __sub__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return Character(self.r - other.r, self.c - other.c, self.chi - other.chi)

    def __neg__(self):
        return Character(-self.r, -self.c, -self.chi)

    def __mul__(self, scalar):
        if isinstance(scalar, bool) or not isinstance(scalar, int):
            return NotImplemented
        return Character(scalar * self.r, scalar * self.c, scalar * self.chi)

    __rmul__ = __mul__

    def __iter__(self):
        return iter((self.r, self.c, self.chi))

    def __str__(self):
        return f'({self.r}, {self.c}, {self.chi})'

    @classmethod
    def parse(cls, text):
        '''
        Parse "r,c,chi", allowing surrounding brackets and whitespace, as in
        "(0, 1, -3)" or "[0,1,-3]".
        '''
        stripped = text.strip().strip('()[]')
        parts = [part.strip() for part in stripped.split(',')]
        if len(parts) != 3:
            raise exceptions.UsageError(f'{text!r} should have three comma-separated integers r,c,chi.')
        try:
            (r, c, chi) = (int(part) for part in parts)
        except ValueError:
            raise exceptions.UsageError(f'{text!r} should have three comma-separated integers r,c,chi.')
        return cls(r, c, chi)

    @classmethod
    def from_json(cls, data):
        (r, c, chi) = data
        return cls(r, c, chi)

    def to_json(self):
        return [self.r, self.c, self.chi]

@dataclasses.dataclass(frozen=True)
class TwistedCharacter:
    r: Fraction
    c: Fraction
    chi: Fraction

    def __iter__(self):
        return iter((self.r, self.c, self.chi))

    def to_json(self):
        return [rational_to_json(x) for x in self]

RANK_ONE = Character(1, 0, 0)
POINT = Character(0, 0, 1)

def genus(s):
    return s.h_squared // 2 + 1

def mukai_pairing(v, w, s):
    '''
    <v, w> = v.c w.c H² - v.r w.chi - v.chi w.r.

    Works on Characters (int result) and TwistedCharacters (Fraction result).
    '''
    return v.c * w.c * s.h_squared - v.r * w.chi - v.chi * w.r

def square(v, s):
    return mukai_pairing(v, v, s)

def twisted_character(v, beta, s):
    '''
    ch^beta = exp(-beta H) ch, expanded on the lattice:
    (r, c - beta r, chi - beta c H² + beta²/2 H² r).

    >>> twisted_character(Character(0, 1, -3), 1, Surface(54))
    TwistedCharacter(r=Fraction(0, 1), c=Fraction(1, 1), chi=Fraction(-57, 1))
    '''
    beta = Fraction(beta)
    h2 = s.h_squared
    return TwistedCharacter(
        r=Fraction(v.r),
        c=v.c - beta * v.r,
        chi=v.chi - beta * v.c * h2 + beta * beta / 2 * h2 * v.r,
    )

def is_proportional(v, u):
    '''
    True when u is a rational multiple of v or v of u, including when either
    is zero. The cross product of the two coordinate vectors vanishes exactly
    in that case.
    '''
    return (
        v.c * u.chi - v.chi * u.c == 0 and
        v.chi * u.r - v.r * u.chi == 0 and
        v.r * u.c - v.c * u.r == 0
    )

def gram_matrix(s):
    '''
    The pairing on the basis (1,0,0), (0,1,0), (0,0,1).
    '''
    return [
        [0, 0, -1],
        [0, s.h_squared, 0],
        [-1, 0, 0],
    ]

def signature(matrix):
    '''
    Return (positive, negative, zero) for a symmetric rational matrix, found by
    exact congruence diagonalization (Sylvester's law of inertia).
    '''
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError('Matrix should be square.')
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError('Matrix should be symmetric.')

    diagonal = []
    for i in range(n):
        if m[i][i] == 0:
            pivot = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if pivot is not None:
                # Swap basis vectors i and pivot.
                m[i], m[pivot] = m[pivot], m[i]
                for row in m:
                    row[i], row[pivot] = row[pivot], row[i]
            else:
                partner = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if partner is not None:
                    # e_i += e_partner, making the diagonal entry 2 m[i][partner].
                    for k in range(n):
                        m[i][k] += m[partner][k]
                    for k in range(n):
                        m[k][i] += m[k][partner]

        pivot_value = m[i][i]
        diagonal.append(pivot_value)
        if pivot_value == 0:
            continue
        for j in range(i + 1, n):
            factor = m[j][i] / pivot_value
            if factor == 0:
                continue
            for k in range(n):
                m[j][k] -= factor * m[i][k]
            for k in range(n):
                m[k][j] -= factor * m[k][i]

    positive = sum(1 for x in diagonal if x > 0)
    negative = sum(1 for x in diagonal if x < 0)
    return (positive, negative, n - positive - negative)
