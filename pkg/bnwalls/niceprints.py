'''
niceprints
==========

Plain-text rendering for the human output format: headers, boxes around
verdicts, and aligned grids for the Brill-Noether table and the strata listing.

These functions do the minimum amount of transformation for their effect.
Every glyph used by bnwalls (χ, ρ, Δ, box drawing) is one column wide, so
len() is the display width.
'''
from bnwalls import dotdict

SINGLE_BOX = dotdict.DotDict(
    upper_left='┌',
    upper_right='┐',
    top='─',
    lower_left='└',
    lower_right='┘',
    side='│',
)

def equals_header(text):
    '''
    Sample text
    ===========
    '''
    return text + '\n' + ('=' * len(text))

def in_box(text, *, boxchars=SINGLE_BOX, title=''):
    '''
    ┌Verdict──────────┐
    │nonempty: true   │
    │dim: 6           │
    └─────────────────┘

    This function does not wrap. Wrap the text before boxing it.
    '''
    lines = text.splitlines()
    longest_line = max((len(line) for line in lines), default=0)
    box_width = max(longest_line, len(title))
    top = title + boxchars.top * (box_width - len(title))
    bottom = boxchars.top * box_width

    new_lines = [boxchars.upper_left + top + boxchars.upper_right]
    for line in lines:
        space = ' ' * (box_width - len(line))
        new_lines.append(f'{boxchars.side}{line}{space}{boxchars.side}')
    new_lines.append(boxchars.lower_left + bottom + boxchars.lower_right)
    return '\n'.join(new_lines)

def key_value_lines(pairs):
    '''
    Align "key: value" lines on the colon.
    '''
    pairs = list(pairs)
    width = max((len(key) for (key, value) in pairs), default=0)
    return '\n'.join(f'{key.rjust(width)}: {value}' for (key, value) in pairs)

def grid(header, rows):
    '''
    Render rows of cells as left-aligned columns separated by two spaces,
    with a rule under the header row.
    '''
    table = [[str(cell) for cell in header]] + [[str(cell) for cell in row] for row in rows]
    widths = [max(len(row[index]) for row in table) for index in range(len(header))]

    def render(row):
        return '  '.join(cell.ljust(width) for (cell, width) in zip(row, widths)).rstrip()

    lines = [render(table[0]), '  '.join('-' * width for width in widths)]
    lines.extend(render(row) for row in table[1:])
    return '\n'.join(lines)
