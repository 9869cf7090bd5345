from fractions import Fraction
from xml.etree import ElementTree

from bnwalls import bncore
from bnwalls import papertable
from bnwalls import stability
from bnwalls import svgrender
from bnwalls.lattice import Character, Surface
from bnwalls.stability import Region

SVG = '{http://www.w3.org/2000/svg}'
REGION = Region(-2, 0, Fraction(1, 100), 2)


def test_number():
    assert svgrender.number(Fraction(1, 3), 3) == '0.333'
    assert svgrender.number(2, 6) == '2'
    assert svgrender.number(Fraction(-1, 10 ** 9), 3) == '0'
    assert svgrender.number(Fraction(5, 2), 6) == '2.5'


def test_escape():
    assert svgrender.escape('<a&b>') == '&lt;a&amp;b&gt;'


def test_walls_svg_highlights_first_wall():
    s = Surface(54)
    v = Character(0, 1, -3)
    walls = stability.enumerate_walls(v, REGION, s)
    text = svgrender.render_walls_svg(v, walls, REGION, s)
    root = ElementTree.fromstring(text)
    assert root.tag == f'{SVG}svg'
    paths = root.findall(f'.//{SVG}path')
    assert len(paths) == len([1 for (u, wall) in walls if not wall.is_vertical])
    highlighted = [path for path in paths if path.get('stroke') == '#c00']
    assert len(highlighted) == 1
    assert 'stroke-dasharray' in text


def test_walls_svg_without_walls():
    s = Surface(54)
    v = Character(1, 0, 0)
    text = svgrender.render_walls_svg(v, [], REGION, s, width=400, height=300)
    root = ElementTree.fromstring(text)
    assert root.get('width') == '400'
    assert root.findall(f'.//{SVG}path') == []
    assert 'stroke-dasharray' not in text


def test_table_svg():
    table = bncore.bn_table(28, papertable.D_VALUES, papertable.R_VALUES)
    text = svgrender.render_table_svg(table, flagged=[(20, 3)])
    root = ElementTree.fromstring(text)
    rects = root.findall(f'.//{SVG}rect')
    assert len(rects) == 49
    heavy = [rect for rect in rects if rect.get('stroke-width') == '3']
    assert len(heavy) == 1
    assert heavy[0].get('fill') == svgrender.LABEL_COLORS[bncore.LABEL_EMPTY]


def test_table_svg_chi_zero_cells():
    table = bncore.bn_table(28, [27], [1, 2])
    text = svgrender.render_table_svg(table)
    root = ElementTree.fromstring(text)
    fills = {rect.get('fill') for rect in root.findall(f'.//{SVG}rect')}
    assert fills == {svgrender.LABEL_COLORS[None]}
