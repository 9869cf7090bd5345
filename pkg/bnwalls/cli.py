'''
bnwalls
=======

Decide Brill-Noether loci of curves on abelian surfaces, and draw the walls
behind the decision.

Every subcommand prints to stdout in the chosen --format. Exit status is 0 on
success, 1 when a verify suite finds a violation, 2 for questions outside the
theory (such as chi = 0), 3 for classes of negative square, and 64 for
malformed command lines.
'''
import csv
import io
import json
import sys

from bnwalls import betterhelp
from bnwalls import bncore
from bnwalls import configlayers
from bnwalls import exceptions
from bnwalls import lattice
from bnwalls import niceprints
from bnwalls import oracle
from bnwalls import papertable
from bnwalls import pipeable
from bnwalls import stability
from bnwalls import svgrender
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.cli')

FORMAT_HUMAN = 'human'
FORMAT_JSON = 'json'
FORMAT_CSV = 'csv'
FORMAT_SVG = 'svg'

SUITES = ('klm-equivalence', 'verdicts', 'integrality', 'delta', 'strata', 'first-wall', 'table')

# HELPERS
################################################################################

def dump_json(data):
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)

def parse_range(text):
    '''
    "20-26", "20..26" or "20" into a range of ints, both ends included.
    '''
    text = text.strip()
    for separator in ('..', '-', ':'):
        (start, found, stop) = text.partition(separator)
        if found and start:
            break
    else:
        (start, stop) = (text, text)
    try:
        (start, stop) = (int(start), int(stop))
    except ValueError:
        raise exceptions.UsageError(f'{text!r} should be a range like 20-26.')
    if start > stop:
        raise exceptions.UsageError(f'{text!r} is an empty range.')
    return range(start, stop + 1)

def load_config(args):
    config = configlayers.load_file(args.config)
    if getattr(args, 'workers', None) is not None:
        config.workers = configlayers.cap_workers(args.workers)
    return config

def surface_from_args(args):
    if args.h2 is not None and args.g is not None:
        raise exceptions.UsageError('Give either --g or --h2, not both.')
    if args.h2 is not None:
        return lattice.Surface(args.h2)
    if args.g is not None:
        return lattice.Surface.from_genus(args.g)
    raise exceptions.UsageError('Give --g or --h2.')

def render_value(value):
    if value is None:
        return '-'
    if isinstance(value, (tuple, list)):
        return '(' + ', '.join(str(x) for x in value) + ')'
    return str(value)

def boxed(title, pairs):
    body = niceprints.key_value_lines((key, render_value(value)) for (key, value) in pairs)
    return niceprints.equals_header(title) + '\n' + niceprints.in_box(body)

def add_common_arguments(parser, formats, *, workers=False):
    parser.add_argument(
        '--format',
        choices=formats,
        default=formats[0],
        help='Output format.',
    )
    parser.add_argument(
        '--config',
        metavar='FILE',
        default=None,
        help='''
        A JSON file overlaid on the built-in defaults.
        ''',
    )
    if workers:
        parser.add_argument(
            '--workers',
            type=int,
            default=None,
            help='''
            Threads for the sweep. Capped by the BNWALLS_WORKERS environment
            variable.
            ''',
        )

def add_surface_arguments(parser):
    parser.add_argument('--g', type=int, default=None, help='Genus of the curves in |H|.')
    parser.add_argument('--h2', type=int, default=None, help='Self-intersection H², even and at least 2.')

# COMMANDS
################################################################################

def bn_argparse(args):
    if (args.g is None) == (args.h2 is None):
        raise exceptions.UsageError('Give exactly one of --g and --h2.')
    g = args.g if args.g is not None else lattice.Surface(args.h2).genus
    # chi = 0 is a domain error whatever r is.
    if args.d + 1 - g == 0:
        raise exceptions.ChiZero(f'd = {args.d} = g - 1 gives chi = 0.')
    if args.r is None:
        raise exceptions.UsageError('the following arguments are required: --r')
    verdict = bncore.bn_verdict(g, args.d, args.r)

    if args.format == FORMAT_JSON:
        pipeable.stdout(dump_json(verdict.to_json()))
        return 0

    pairs = [
        ('chi', verdict.chi),
        ('rho', verdict.rho),
        ('D', verdict.D),
        ('rho+g-2', verdict.lhs),
        ('D(-chi)-D²', verdict.rhs),
        ('nonempty', verdict.nonempty),
        ('dim', verdict.dim),
        ('structure', verdict.structure),
    ]
    if verdict.count is not None:
        pairs.append(('components', verdict.count))
        pairs.append(('fiber', f'Gr{render_value(verdict.fiber)}'))
    if verdict.dual is not None:
        pairs.append(('Serre dual (d, r)', verdict.dual))
    if verdict.w0 is not None:
        pairs.extend([('R', verdict.R), ('w0', verdict.w0), ('k0', verdict.k0)])
    if verdict.nonempty and verdict.base_dim is not None:
        pairs.extend([
            ('dim M(w_k0)', verdict.base_dim),
            ('fiber dim', verdict.fiber_dim),
            ('dim M^(r+1)_R', verdict.moduli_dim),
        ])
    if verdict.automatic:
        pairs.append(('note', 'r+1 <= chi, every sheaf has enough sections'))
    label = bncore.classify_cell(g, args.d, args.r)
    pairs.append(('label', label))
    pipeable.stdout(boxed(f'V^{args.r}_{args.d}(|H|), g = {g}', pairs))
    return 0

def moduli_argparse(args):
    s = surface_from_args(args)
    verdict = bncore.moduli_verdict(args.k, args.chi, args.r, s)
    if args.format == FORMAT_JSON:
        pipeable.stdout(dump_json(verdict.to_json()))
        return 0
    pairs = [
        ('v', verdict.v),
        ('v²', verdict.square),
        ('D', verdict.D),
        ('nonempty', verdict.nonempty),
        ('dim', verdict.dim),
    ]
    pipeable.stdout(boxed(f'M^{args.r + 1}_H{verdict.v}, H² = {s.h_squared}', pairs))
    return 0

def table_argparse(args):
    config = load_config(args)
    d_values = parse_range(args.d_range)
    r_values = parse_range(args.r_range)
    table = bncore.bn_table(args.g, d_values, r_values, workers=config.workers)

    differences = []
    if args.compare_paper:
        differences = papertable.compare_paper_table(workers=config.workers)

    if args.format == FORMAT_JSON:
        data = table.to_json()
        if args.compare_paper:
            data['paper_differences'] = [difference.to_json() for difference in differences]
        pipeable.stdout(dump_json(data))

    elif args.format == FORMAT_CSV:
        handle = io.StringIO()
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(['d'] + [f'r{r}' for r in table.r_values])
        for (d, row) in zip(table.d_values, table.rows):
            writer.writerow([d] + ['–' if label is None else label for label in row])
        pipeable.stdout(handle.getvalue().rstrip('\n'))

    elif args.format == FORMAT_SVG:
        flagged = [(difference.d, difference.r) for difference in differences]
        pipeable.stdout(svgrender.render_table_svg(table, flagged=flagged))

    else:
        header = ['d'] + [f'r={r}' for r in table.r_values]
        rows = [
            [d] + ['–' if label is None else label for label in row]
            for (d, row) in zip(table.d_values, table.rows)
        ]
        pipeable.stdout(niceprints.equals_header(f'V^r_d(|H|), g = {args.g}'))
        pipeable.stdout(niceprints.grid(header, rows))
        if args.compare_paper:
            pipeable.stdout()
            pipeable.stdout(f'{len(differences)} cells differ from the printed table:')
            for difference in differences:
                tag = 'known' if difference.known else 'UNEXPECTED'
                pipeable.stdout(
                    f'  (d={difference.d}, r={difference.r}) printed {difference.printed}, '
                    f'computed {difference.computed} [{tag}] {difference.note or ""}'.rstrip()
                )

    if any(not difference.known for difference in differences):
        return 1
    return 0

def walls_argparse(args):
    config = load_config(args)
    s = surface_from_args(args)
    v = lattice.Character.parse(pipeable.input(args.v, input_prompt='r,c,chi: '))
    if args.region is not None:
        region = stability.Region.parse(args.region)
    else:
        region = stability.Region.from_config(config.walls.region)

    walls = stability.enumerate_walls(v, region, s, workers=config.workers)

    if args.format == FORMAT_JSON:
        records = []
        for (u, wall) in walls:
            record = wall.to_json()
            record['u'] = u.to_json()
            records.append(record)
        data = {
            'v': v.to_json(),
            'surface': s.to_json(),
            'region': region.to_json(),
            'walls': records,
        }
        pipeable.stdout(dump_json(data))

    elif args.format == FORMAT_SVG:
        pipeable.stdout(svgrender.render_walls_svg(
            v,
            walls,
            region,
            s,
            width=config.svg.width,
            height=config.svg.height,
            precision=config.svg.precision,
        ))

    else:
        header = ['u', 'a', 'b', 'c', 'center', 'radius²']
        rows = [
            [
                u,
                wall.a,
                wall.b,
                wall.c,
                render_value(wall.center if not wall.is_vertical else f'beta={wall.vertical_beta}'),
                render_value(wall.radius_sq),
            ]
            for (u, wall) in walls
        ]
        pipeable.stdout(niceprints.equals_header(f'Walls of {v}, H² = {s.h_squared}'))
        if rows:
            pipeable.stdout(niceprints.grid(header, rows))
        else:
            pipeable.stdout('No walls.')
    return 0

def strata_argparse(args):
    s = surface_from_args(args)
    table = bncore.strata_table(args.k, args.chi, s)

    if args.format == FORMAT_JSON:
        pipeable.stdout(dump_json(table.to_json()))
        return 0

    header = ['k_red', 'h', 'status', 'dim', 'fiber', 'dim bound', 'top']
    rows = []
    for row in table.rows:
        rows.append([
            row.k_red,
            row.h,
            row.status,
            render_value(row.dim),
            f'Gr{render_value(row.fiber)}' if row.fiber else '-',
            row.dim_bound,
            '*' if row.k_red == table.top_k_red else '',
        ])
    title = f'Strata of M(w_{args.k}), chi = {args.chi}, H² = {s.h_squared}, max h = {table.max_h}'
    pipeable.stdout(niceprints.equals_header(title))
    pipeable.stdout(niceprints.grid(header, rows))
    return 0

def _strata_cases(args, config):
    if args.chi is not None or args.h2 is not None:
        if args.chi is None or args.h2 is None:
            raise exceptions.UsageError('--chi and --h2 go together.')
        return [(args.chi, args.h2)]
    return [tuple(case) for case in config.verify.strata.cases]

def _first_wall_cases(args, config):
    if args.chi is not None or args.h2 is not None:
        if args.chi is None or args.h2 is None:
            raise exceptions.UsageError('--chi and --h2 go together.')
        return [(args.chi, args.h2)]
    return [tuple(case) for case in config.verify.first_wall.cases]

def _table_report(workers):
    report = oracle.Report(name='paper table g=28')
    differences = papertable.compare_paper_table(workers=workers)
    # Each differing cell is counted by its own check below.
    report.checks = len(papertable.D_VALUES) * len(papertable.R_VALUES) - len(differences)
    for difference in differences:
        if difference.known:
            report.notes.append(f'(d={difference.d}, r={difference.r}): {difference.note}')
            (criterion, bound) = oracle.brute_bn_cell(papertable.GENUS, difference.d, difference.r)
            report.check(
                difference.computed == bncore.LABEL_EMPTY and not criterion and not bound,
                f'(d={difference.d}, r={difference.r}) should be empty by both forms',
            )
        else:
            report.check(False, f'(d={difference.d}, r={difference.r}) printed {difference.printed}, computed {difference.computed}')
    return report

def run_suite(name, args, config):
    workers = config.workers
    klm = config.verify.klm_equivalence
    g_max = args.g_max if args.g_max is not None else klm.g_max
    r_max = args.r_max if args.r_max is not None else klm.r_max
    chi_min = args.chi_min if args.chi_min is not None else klm.chi_min

    if name == 'klm-equivalence':
        return [oracle.brute_klm_equivalence(g_max, r_max, chi_min, workers=workers)]

    if name == 'verdicts':
        return [oracle.compare_verdicts(g_max, r_max, chi_min, workers=workers)]

    if name == 'integrality':
        bounds = config.verify.integrality
        return [oracle.brute_integrality(
            args.chi_min if args.chi_min is not None else bounds.chi_min,
            bounds.h_max,
            args.r_max if args.r_max is not None else bounds.r_max,
        )]

    if name == 'delta':
        bounds = config.verify.delta
        return [oracle.compare_delta(bounds.n_max, bounds.samples)]

    if name == 'strata':
        k_max = args.k_max if args.k_max is not None else config.verify.strata.k_max
        reports = []
        for (chi, h2) in _strata_cases(args, config):
            s = lattice.Surface(h2)
            reports.append(oracle.brute_stratum_recursion(k_max, chi, s))
            reports.append(oracle.compare_strata(k_max, chi, s))
        return reports

    if name == 'first-wall':
        if args.region is not None:
            region = stability.Region.parse(args.region)
        else:
            region = stability.Region.from_config(config.walls.region)
        return [
            oracle.verify_first_wall(chi, lattice.Surface(h2), region, workers=workers)
            for (chi, h2) in _first_wall_cases(args, config)
        ]

    if name == 'table':
        return [_table_report(workers)]

    raise exceptions.UsageError(f'Unknown suite {name!r}.')

def verify_argparse(args):
    config = load_config(args)
    names = SUITES if args.suite == 'all' else (args.suite,)
    reports = []
    for name in names:
        log.info('Running suite %s.', name)
        reports.extend(run_suite(name, args, config))

    passed = all(report.passed for report in reports)
    if args.format == FORMAT_JSON:
        pipeable.stdout(dump_json({'passed': passed, 'reports': [report.to_json() for report in reports]}))
    else:
        for report in reports:
            status = 'PASS' if report.passed else 'FAIL'
            pipeable.stdout(f'{status} {report.name}: {report.checks} checks, {len(report.violations)} violations')
            for note in report.notes:
                pipeable.stdout(f'    {note}')
            for violation in report.violations[:20]:
                pipeable.stdout(f'    ! {violation}')
    return 0 if passed else 1

# MAIN
################################################################################

def make_parser():
    parser = betterhelp.ArgumentParser(description=__doc__)
    subparsers = parser.add_subparsers()

    ################################################################################################

    p_bn = subparsers.add_parser(
        'bn',
        description='''
        Decide whether V^r_d(|H|) is nonempty, and give its dimension and
        structure, with every intermediate quantity.
        ''',
    )
    add_surface_arguments(p_bn)
    p_bn.add_argument('--d', type=int, required=True, help='Degree.')
    p_bn.add_argument('--r', type=int, default=None, help='Sections minus one. Required unless chi = 0.')
    add_common_arguments(p_bn, [FORMAT_HUMAN, FORMAT_JSON])
    p_bn.set_defaults(func=bn_argparse)
    p_bn.examples = [
        {'args': 'bn --g 28 --d 24 --r 5 --format json', 'comment': 'Equality case, 81 Grassmannians'},
        {'args': 'bn --g 28 --d 20 --r 4'},
    ]

    ################################################################################################

    p_moduli = subparsers.add_parser(
        'moduli',
        description='''
        Decide whether the locus of sheaves with at least r+1 sections in
        M_H(k, 1, chi) is nonempty, and give its dimension.
        ''',
    )
    add_surface_arguments(p_moduli)
    p_moduli.add_argument('--k', type=int, required=True, help='Rank of v = (k, 1, chi).')
    p_moduli.add_argument('--chi', type=int, required=True, help='Euler characteristic, negative.')
    p_moduli.add_argument('--r', type=int, required=True, help='Sections minus one.')
    add_common_arguments(p_moduli, [FORMAT_HUMAN, FORMAT_JSON])
    p_moduli.set_defaults(func=moduli_argparse)
    p_moduli.examples = [
        {'args': 'moduli --h2 54 --k 0 --chi -3 --r 5'},
    ]

    ################################################################################################

    p_table = subparsers.add_parser(
        'table',
        description='''
        Label every (d, r) cell as EMPTY, BN (rho >= 0), KLM (rho < 0 and
        d >= r(r+1)) or NEW. Cells with chi = 0 are shown as –.
        ''',
    )
    p_table.add_argument('--g', type=int, default=28, help='Genus.')
    p_table.add_argument('--d-range', dest='d_range', default='20-26', help='Degrees, like 20-26.')
    p_table.add_argument('--r-range', dest='r_range', default='1-7', help='Values of r, like 1-7.')
    p_table.add_argument(
        '--compare-paper',
        dest='compare_paper',
        action='store_true',
        help='''
        List the cells where the computed labels differ from the published
        g = 28 table. Exit 1 if any difference is not a known one.
        ''',
    )
    add_common_arguments(p_table, [FORMAT_HUMAN, FORMAT_JSON, FORMAT_CSV, FORMAT_SVG], workers=True)
    p_table.set_defaults(func=table_argparse)
    p_table.examples = [
        {'args': 'table --g 28 --d-range 20-26 --r-range 1-7 --compare-paper'},
        {'args': 'table --format csv'},
    ]

    ################################################################################################

    p_walls = subparsers.add_parser(
        'walls',
        description='''
        List the potential walls of a class v inside a region of the
        (beta, alpha) half-plane.
        ''',
    )
    add_surface_arguments(p_walls)
    p_walls.add_argument(
        '--v',
        required=True,
        help='''
        The class as r,c,chi. Use !i for stdin or !c for the clipboard. Write
        --v=-1,0,0 when r is negative.
        ''',
    )
    p_walls.add_argument(
        '--region',
        default=None,
        help='''
        beta_lo,beta_hi,alpha_lo,alpha_hi with rationals like 1/100. Write
        --region=-2,0,1/100,2 since it starts with a minus sign.
        Defaults to walls.region of the config.
        ''',
    )
    add_common_arguments(p_walls, [FORMAT_HUMAN, FORMAT_JSON, FORMAT_SVG], workers=True)
    p_walls.set_defaults(func=walls_argparse)
    p_walls.examples = [
        {'args': 'walls --h2 54 --v 0,1,-3 --format json'},
        {'args': 'walls --h2 6 --v 0,1,-1 --region=-1,0,1/100,2 --format svg', 'comment': 'Draw W_chi'},
    ]

    ################################################################################################

    p_strata = subparsers.add_parser(
        'strata',
        description='''
        For M(w_k), the largest number of sections, and for every k_red the
        stratum at the largest h it allows, marking the top-dimensional one.
        ''',
    )
    add_surface_arguments(p_strata)
    p_strata.add_argument('--chi', type=int, required=True, help='Euler characteristic, negative.')
    p_strata.add_argument('--k', type=int, required=True, help='Index of w_k.')
    add_common_arguments(p_strata, [FORMAT_HUMAN, FORMAT_JSON])
    p_strata.set_defaults(func=strata_argparse)
    p_strata.examples = [
        {'args': 'strata --h2 54 --chi -3 --k 9'},
    ]

    ################################################################################################

    p_verify = subparsers.add_parser(
        'verify',
        description='''
        Run brute-force checks of the arithmetic and report PASS or FAIL for
        each. Exit 1 if any check fails. Bounds default to the config.
        ''',
    )
    p_verify.add_argument('--suite', choices=SUITES + ('all',), default='all', help='Which checks to run.')
    p_verify.add_argument('--k-max', dest='k_max', type=int, default=None, help='strata: largest k.')
    p_verify.add_argument('--chi', type=int, default=None, help='strata, first-wall: a single chi.')
    p_verify.add_argument('--h2', type=int, default=None, help='strata, first-wall: a single H².')
    p_verify.add_argument('--g-max', dest='g_max', type=int, default=None, help='klm-equivalence, verdicts.')
    p_verify.add_argument('--r-max', dest='r_max', type=int, default=None, help='klm-equivalence, verdicts, integrality.')
    p_verify.add_argument('--chi-min', dest='chi_min', type=int, default=None, help='klm-equivalence, verdicts, integrality.')
    p_verify.add_argument('--region', default=None, help='first-wall: beta_lo,beta_hi,alpha_lo,alpha_hi.')
    add_common_arguments(p_verify, [FORMAT_HUMAN, FORMAT_JSON], workers=True)
    p_verify.set_defaults(func=verify_argparse)
    p_verify.examples = [
        {'args': 'verify --suite klm-equivalence'},
        {'args': 'verify --suite strata --k-max 20 --chi -3 --h2 54'},
        {'args': 'verify --suite first-wall --chi -1 --h2 6'},
    ]

    return parser

@vlogging.main_decorator
def main(argv):
    parser = make_parser()
    try:
        return betterhelp.go(parser, argv)
    except exceptions.BNWallsException as exc:
        log.debug('Exiting with %d.', exc.exit_code, exc_info=True)
        pipeable.stderr(f'{type(exc).__name__}: {exc}')
        return exc.exit_code

def console_entry():
    return main(sys.argv[1:])

if __name__ == '__main__':
    raise SystemExit(main(sys.argv[1:]))
