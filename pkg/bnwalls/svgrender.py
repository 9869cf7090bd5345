'''
Static SVG drawings: the walls of a class in the (beta, alpha) half-plane, and
the Brill-Noether table as a heatmap. The SVG text is written out directly.

All geometry is exact until here. Coordinates are rounded only when they are
formatted into the document, at the configured precision.
'''
import math

from bnwalls import bncore
from bnwalls import stability
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.svgrender')

MARGIN = 40

LABEL_COLORS = {
    bncore.LABEL_EMPTY: '#dddddd',
    bncore.LABEL_BN: '#99ccff',
    bncore.LABEL_KLM: '#ffcc99',
    bncore.LABEL_NEW: '#ff6666',
    None: '#ffffff',
}

def number(x, precision):
    text = f'{float(x):.{precision}f}'
    if '.' in text:
        text = text.rstrip('0').rstrip('.')
    if text == '-0':
        text = '0'
    return text

def svg_header(width, height):
    return [
        f'<svg width="{width}" height="{height}" viewBox="0 0 {width} {height}" fill="none" xmlns="http://www.w3.org/2000/svg">',
        '  <style>',
        '    text {',
        '      font-family: Arial, sans-serif;',
        '      font-size: 12px;',
        '      fill: #000;',
        '    }',
        '  </style>',
    ]

def escape(text):
    return text.replace('&', '&amp;').replace('<', '&lt;').replace('>', '&gt;')

def _first_wall_key(v, s):
    if v.r == 0 and v.c == 1 and v.chi < 0:
        return stability.first_wall_data(v.chi, s)[2].key
    return None

def render_walls_svg(v, walls, region, s, *, width=800, height=480, precision=6):
    '''
    Semicircles and vertical lines for the (u, wall) pairs, beta across and
    alpha up. For v = (0, 1, chi) with chi < 0 the first wall W_chi is drawn in
    red and the ray beta = 0, where the Gieseker chamber starts, in green.
    '''
    (beta_lo, beta_hi) = (region.beta_lo, region.beta_hi)
    alpha_hi = region.alpha_hi
    plot_w = width - 2 * MARGIN
    plot_h = height - 2 * MARGIN

    def x(beta):
        return number(MARGIN + (beta - beta_lo) / (beta_hi - beta_lo) * plot_w, precision)

    def y(alpha):
        return number(height - MARGIN - alpha / alpha_hi * plot_h, precision)

    x_scale = plot_w / (beta_hi - beta_lo)
    y_scale = plot_h / alpha_hi
    highlight = _first_wall_key(v, s)

    lines = svg_header(width, height)
    lines.append('  <defs>')
    lines.append(f'    <clipPath id="plot"><rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{plot_h}" /></clipPath>')
    lines.append('  </defs>')
    lines.append(f'  <text x="{MARGIN}" y="{MARGIN - 16}">{escape(f"walls of v = {v}, H² = {s.h_squared}")}</text>')

    # The searched part of the plot, alpha >= alpha_lo.
    searched_h = number((1 - region.alpha_lo / alpha_hi) * plot_h, precision)
    lines.append(f'  <rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{searched_h}" fill="#f4f4f4" />')
    # Axes.
    lines.append(f'  <line x1="{MARGIN}" y1="{y(0)}" x2="{width - MARGIN}" y2="{y(0)}" stroke="#000" />')
    lines.append(f'  <line x1="{MARGIN}" y1="{y(0)}" x2="{MARGIN}" y2="{MARGIN}" stroke="#000" />')
    lines.append(f'  <text x="{MARGIN}" y="{height - MARGIN + 16}">{number(beta_lo, precision)}</text>')
    lines.append(f'  <text x="{width - MARGIN}" y="{height - MARGIN + 16}" text-anchor="end">{number(beta_hi, precision)}</text>')
    lines.append(f'  <text x="{MARGIN - 4}" y="{MARGIN}" text-anchor="end">{number(alpha_hi, precision)}</text>')
    lines.append(f'  <text x="{width - MARGIN}" y="{height - MARGIN - 4}" text-anchor="end">β</text>')
    lines.append(f'  <text x="{MARGIN + 4}" y="{MARGIN + 12}">α</text>')

    if highlight is not None and beta_lo <= 0 <= beta_hi:
        lines.append(
            f'  <line x1="{x(0)}" y1="{y(0)}" x2="{x(0)}" y2="{MARGIN}" '
            'stroke="#080" stroke-width="2" stroke-dasharray="6 4" />'
        )

    lines.append('  <g clip-path="url(#plot)">')
    for (u, wall) in walls:
        if wall.key == highlight:
            stroke = 'stroke="#c00" stroke-width="2"'
        else:
            stroke = 'stroke="#008" stroke-width="1"'
        title = f'<title>{escape(f"u = {u}, {wall.a}(α²+β²) + {wall.b}β + {wall.c} = 0")}</title>'
        if wall.is_vertical:
            lines.append(
                f'    <line x1="{x(wall.vertical_beta)}" y1="{y(0)}" x2="{x(wall.vertical_beta)}" y2="{MARGIN}" {stroke}>{title}</line>'
            )
            continue
        radius = math.sqrt(wall.radius_sq)
        left = number(MARGIN + (float(wall.center - beta_lo) - radius) * float(x_scale), precision)
        right = number(MARGIN + (float(wall.center - beta_lo) + radius) * float(x_scale), precision)
        rx = number(radius * float(x_scale), precision)
        ry = number(radius * float(y_scale), precision)
        lines.append(
            f'    <path d="M{left} {y(0)} A{rx} {ry} 0 0 1 {right} {y(0)}" {stroke}>{title}</path>'
        )
    lines.append('  </g>')
    lines.append('</svg>')
    log.debug('Rendered %d walls.', len(walls))
    return '\n'.join(lines)

def render_table_svg(table, *, cell=48, flagged=()):
    '''
    The table as colored cells, d down the side and r across the top. Cells
    in `flagged`, given as (d, r), get a heavy outline.
    '''
    columns = len(table.r_values)
    rows = len(table.d_values)
    width = (columns + 1) * cell + 2 * MARGIN
    height = (rows + 1) * cell + 2 * MARGIN
    flagged = set(flagged)

    lines = svg_header(width, height)
    lines.append(f'  <text x="{MARGIN}" y="{MARGIN - 16}">{escape(f"V^r_d(|H|) for g = {table.g}")}</text>')
    lines.append(f'  <text x="{MARGIN + cell // 2}" y="{MARGIN + cell // 2}" text-anchor="middle">d \\ r</text>')

    for (index, r) in enumerate(table.r_values):
        cx = MARGIN + (index + 1) * cell + cell // 2
        lines.append(f'  <text x="{cx}" y="{MARGIN + cell // 2}" text-anchor="middle">{r}</text>')

    for (row_index, d) in enumerate(table.d_values):
        top = MARGIN + (row_index + 1) * cell
        lines.append(f'  <text x="{MARGIN + cell // 2}" y="{top + cell // 2}" text-anchor="middle">{d}</text>')
        for (col_index, r) in enumerate(table.r_values):
            left = MARGIN + (col_index + 1) * cell
            label = table.rows[row_index][col_index]
            if (d, r) in flagged:
                outline = 'stroke="#000" stroke-width="3"'
            else:
                outline = 'stroke="#000" stroke-width="1"'
            lines.append(f'  <rect x="{left}" y="{top}" width="{cell}" height="{cell}" fill="{LABEL_COLORS[label]}" {outline} />')
            text = '–' if label is None else label
            lines.append(f'  <text x="{left + cell // 2}" y="{top + cell // 2 + 4}" text-anchor="middle">{text}</text>')

    lines.append('</svg>')
    return '\n'.join(lines)
