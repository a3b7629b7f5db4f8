"""Group files and pair files.

Group file::

    # comment
    degree 5
    (1,2,3,4,5)
    (1,2)(3,4)

Pair file: a group file, then ``pair`` followed by x and t, or
``rotations`` followed by x and y (then t = x*y). If no group generators
precede the keyword, the ambient group is the one generated by the pair.

One generator per line. A generator may continue onto following lines while
a cycle is still open, or on lines that start with whitespace, so
permutations can be pasted exactly as typeset.
"""

from __future__ import annotations

from ..errors import ParseError
from ..perm import Permutation, parse_permutation

_KEYWORDS = ("pair", "rotations")


def _strip_comment(line):
    return line.split("#", 1)[0]


def _logical_lines(text):
    """Yield (first_line_no, text) with continuation lines joined by newlines."""
    current = None
    start = 0
    depth = 0
    for no, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            if current is not None and depth == 0:
                yield start, current
                current = None
            continue
        continues = (current is not None and current.lstrip().startswith("(")
                     and (depth > 0 or line[:1].isspace()))
        if continues:
            current += "\n" + line
        else:
            if current is not None:
                yield start, current
            current, start = line, no
        depth += line.count("(") - line.count(")")
        if depth < 0:
            raise ParseError("unbalanced ')'", no)
    if current is not None:
        if depth:
            raise ParseError("unterminated cycle at end of file", start)
        yield start, current


def _parse(text):
    lines = list(_logical_lines(text))
    if not lines:
        raise ParseError("empty file", 1)
    no, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != "degree":
        raise ParseError("first line must be 'degree <n>'", no)
    try:
        degree = int(parts[1])
    except ValueError:
        raise ParseError(f"bad degree {parts[1]!r}", no) from None
    if degree < 1:
        raise ParseError("degree must be positive", no)
    gens = []
    keyword = None
    pair = []
    for no, chunk in lines[1:]:
        word = chunk.strip()
        if word in _KEYWORDS:
            if keyword is not None:
                raise ParseError(f"second '{word}' section", no)
            keyword = word
            continue
        perm = parse_permutation(chunk, degree, line_offset=no - 1)
        if keyword is None:
            gens.append(perm)
        else:
            pair.append(perm)
    return degree, gens, keyword, pair


def parse_group_text(text):
    """Return (degree, generators)."""
    degree, gens, keyword, _ = _parse(text)
    if keyword is not None:
        raise ParseError(f"unexpected '{keyword}' section in a group file")
    return degree, gens


def parse_pair_text(text):
    """Return (degree, generators, x, t). ``generators`` may be empty."""
    degree, gens, keyword, pair = _parse(text)
    if keyword is None:
        raise ParseError("pair file needs a 'pair' or 'rotations' section")
    if len(pair) != 2:
        raise ParseError(f"'{keyword}' must be followed by exactly two permutations, "
                         f"found {len(pair)}")
    x, second = pair
    t = x * second if keyword == "rotations" else second
    return degree, gens, x, t


def format_group_text(degree, generators, header=None):
    out = []
    if header:
        out.extend(f"# {h}" for h in header.splitlines())
    out.append(f"degree {degree}")
    out.extend(str(g) for g in generators)
    return "\n".join(out) + "\n"


def format_pair_text(degree, generators, x: Permutation, t: Permutation, header=None):
    body = format_group_text(degree, generators, header)
    return body + f"pair\n{x}\n{t}\n"


def split_blocks(text):
    """Split a ``=== name key=value ...`` container into (name, meta, body)."""
    blocks = []
    name = meta = None
    body = []
    for raw in text.splitlines():
        if raw.startswith("==="):
            if name is not None:
                blocks.append((name, meta, "\n".join(body) + "\n"))
            fields = raw[3:].split()
            name = fields[0]
            meta = dict(f.split("=", 1) for f in fields[1:])
            body = []
        elif name is not None:
            body.append(raw)
    if name is not None:
        blocks.append((name, meta, "\n".join(body) + "\n"))
    return blocks
