'''
The published g = 28 (H² = 54) table of nonempty and empty Brill-Noether loci
for 20 <= d <= 26 and 1 <= r <= 7, with its labels kept exactly as printed,
and the comparison of our own classification against it.

Printed labels:
    BN      rho >= 0
    KLM     rho < 0, but d >= r(r+1)
    phi     empty
    Delta   nonempty, also reachable through nodal hyperelliptic curves
    Thm1.1  nonempty, new

Delta and Thm1.1 differ only in which earlier work also proves them, so both
map to NEW.
'''
import dataclasses

from bnwalls import bncore
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.papertable')

GENUS = 28
D_VALUES = tuple(range(20, 27))
R_VALUES = tuple(range(1, 8))

PRINTED = {
    20: ('BN', 'KLM', 'KLM', 'phi', 'phi', 'phi', 'phi'),
    21: ('BN', 'BN', 'KLM', 'phi', 'phi', 'phi', 'phi'),
    22: ('BN', 'BN', 'KLM', 'KLM', 'phi', 'phi', 'phi'),
    23: ('BN', 'BN', 'KLM', 'KLM', 'phi', 'phi', 'phi'),
    24: ('BN', 'BN', 'BN', 'KLM', 'Thm1.1', 'phi', 'phi'),
    25: ('BN', 'BN', 'BN', 'KLM', 'Delta', 'phi', 'phi'),
    26: ('BN', 'BN', 'BN', 'KLM', 'Delta', 'phi', 'phi'),
}

PRINTED_TO_LABEL = {
    'BN': bncore.LABEL_BN,
    'KLM': bncore.LABEL_KLM,
    'phi': bncore.LABEL_EMPTY,
    'Delta': bncore.LABEL_NEW,
    'Thm1.1': bncore.LABEL_NEW,
}

# (d, r) -> why the printed label cannot be reproduced.
KNOWN_DISCREPANCIES = {
    (20, 3): (
        'printed KLM, but chi=-7 and D=4 give rho+g-2 = 10 < 12 = D(-chi)-D², '
        'and the KLM-style bound fails as -1 >= 0'
    ),
}

@dataclasses.dataclass(frozen=True)
class Difference:
    d: int
    r: int
    printed: str
    expected: str
    computed: str
    known: bool
    note: str = None

    def to_json(self):
        return dataclasses.asdict(self)

def printed_label(d, r):
    return PRINTED[d][R_VALUES.index(r)]

def paper_cell(d, r):
    return PRINTED_TO_LABEL[printed_label(d, r)]

def compare_paper_table(table=None, *, workers=1):
    '''
    Classify every cell of the printed table and return the cells where our
    label differs from the printed one, in row order.
    '''
    if table is None:
        table = bncore.bn_table(GENUS, D_VALUES, R_VALUES, workers=workers)
    differences = []
    for d in D_VALUES:
        for r in R_VALUES:
            expected = paper_cell(d, r)
            computed = table.cell(d, r)
            if computed == expected:
                continue
            note = KNOWN_DISCREPANCIES.get((d, r))
            if note is None:
                log.error('Cell (d=%d, r=%d) is %s but printed %s.', d, r, computed, printed_label(d, r))
            else:
                log.warning('Cell (d=%d, r=%d): %s.', d, r, note)
            differences.append(Difference(
                d=d,
                r=r,
                printed=printed_label(d, r),
                expected=expected,
                computed=computed,
                known=note is not None,
                note=note,
            ))
    return differences
