"""Reading ideals from text and drawing dual graphs.

Monomial grammar: a product of factors ``v`` or ``v^e`` with an optional
``*`` between factors.  ``v`` is one of ``x, y, z`` (three variables) or
``x1, x2, ...`` (any number of variables); ``e`` is a positive integer.
Whitespace is ignored and a variable may appear only once.  An ideal is a
list of monomials separated by commas or newlines.
"""
from __future__ import annotations

import re
import warnings

from .dualgraph import simplex_graph
from .monomials import MonomialIdeal, format_monomial, minimalize

_FACTOR = re.compile(r"(x\d+|[xyz])(?:\^(\d+))?")


class ParseError(ValueError):
    pass


class NonMinimalInputWarning(UserWarning):
    pass


def _factors(text: str) -> list:
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty monomial")
    out = []
    pos = 0
    while pos < len(s):
        if out and s[pos] == "*":
            pos += 1
        m = _FACTOR.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        name, exp = m.group(1), m.group(2)
        if exp is not None and (int(exp) < 1 or exp.startswith("0")):
            raise ParseError(f"exponent must be a positive integer in {text!r}")
        out.append((name, int(exp) if exp else 1))
        pos = m.end()
    return out


def _variable_index(name: str) -> int:
    if name in "xyz":
        return "xyz".index(name)
    idx = int(name[1:])
    if idx < 1:
        raise ParseError(f"variable indices start at 1, got {name}")
    return idx - 1


def parse_monomial(text: str, num_vars: int | None = None):
    return _parse_many([text], num_vars)[0]


def _parse_many(texts, num_vars):
    parsed = [_factors(t) for t in texts]
    names = {name for fs in parsed for name, _ in fs}
    indexed = {n for n in names if n not in ("x", "y", "z")}
    if indexed and indexed != names:
        raise ParseError("mixing x, y, z with indexed variables x1, x2, ...")
    if indexed:
        n = max(_variable_index(v) for v in indexed) + 1
    else:
        n = 3
    if num_vars is not None:
        if num_vars < n:
            raise ParseError(f"input uses {n} variables but num_vars = {num_vars}")
        if not indexed and num_vars != 3:
            raise ParseError("x, y, z names are only for three variables")
        n = num_vars
    out = []
    for text, fs in zip(texts, parsed):
        exps = [0] * n
        for name, e in fs:
            i = _variable_index(name)
            if exps[i]:
                raise ParseError(f"variable {name} repeated in {text!r}")
            exps[i] = e
        out.append(tuple(exps))
    return out


def parse_ideal(text: str, num_vars: int | None = None) -> MonomialIdeal:
    """Parse a comma/newline separated generator list.

    Duplicates are dropped silently; redundant generators are dropped with a
    ``NonMinimalInputWarning``.
    """
    items = [t for t in re.split(r"[,\n]", text) if t.strip()]
    if not items:
        raise ParseError("no generators given")
    monos = _parse_many(items, num_vars)
    ideal = minimalize(monos)
    if len(ideal.generators) < len(set(monos)):
        dropped = sorted(set(monos) - set(ideal.generators))
        warnings.warn(
            "non-minimal input; dropped " + ", ".join(format_monomial(m) for m in dropped),
            NonMinimalInputWarning,
            stacklevel=2,
        )
    return ideal


def format_ideal(ideal: MonomialIdeal) -> str:
    return ", ".join(format_monomial(g) for g in ideal.generators)


# Lattice layout: x^d at the left corner, y^d at the right, z^d on top.
# Column = (y-exponent - x-exponent), row = z-exponent.
_DX, _DY, _MARGIN, _RADIUS = 30, 52, 40, 6


def _lattice_points(ideal: MonomialIdeal):
    if ideal.num_vars != 3:
        raise ValueError("rendering needs three variables")
    if ideal.is_zero:
        raise ValueError("cannot render the zero ideal")
    d = ideal.degree
    graph = simplex_graph(3, d)
    gens = set(ideal.generators)
    return d, graph, gens


def _position(m, d: int):
    x = _MARGIN + (m[1] - m[0] + d) * _DX
    y = _MARGIN + (d - m[2]) * _DY
    return x, y


def render_dot(ideal: MonomialIdeal) -> str:
    d, graph, gens = _lattice_points(ideal)
    lines = ["graph dual {", "  node [shape=circle, style=filled, fontsize=10];"]
    for v in graph.vertices:
        m = graph.monomial(v)
        color = "blue" if m in gens else "red"
        px, py = _position(m, d)
        lines.append(
            f'  v{v} [label="{format_monomial(m)}", fillcolor={color}, pos="{px},{-py}!"];'
        )
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_svg(ideal: MonomialIdeal) -> str:
    d, graph, gens = _lattice_points(ideal)
    width = 2 * _MARGIN + 2 * d * _DX
    height = 2 * _MARGIN + d * _DY
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="black" stroke-width="1.5">',
    ]
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
        x1, y1 = _position(graph.monomial(u), d)
        x2, y2 = _position(graph.monomial(v), d)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    for v in graph.vertices:
        m = graph.monomial(v)
        color = "blue" if m in gens else "red"
        x, y = _position(m, d)
        out.append(f'<circle cx="{x}" cy="{y}" r="{_RADIUS}" fill="{color}">'
                   f"<title>{format_monomial(m)}</title></circle>")
        out.append(f'<text x="{x}" y="{y + 18}" font-size="10" text-anchor="middle">'
                   f"{format_monomial(m)}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dual_graph(ideal: MonomialIdeal, fmt: str = "svg") -> str:
    """Draw ``Delta(d)`` with the generators of ``ideal`` blue and the other degree-d monomials red."""
    if fmt == "dot":
        return render_dot(ideal)
    if fmt == "svg":
        return render_svg(ideal)
    raise ValueError(f"unknown render format {fmt!r}")
