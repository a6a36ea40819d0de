"""Text grammar for rings, monomials, ideals and decompositions.

    ring n=<k> [names=a,b,c]
    monomial ::= '1' | term ('*' term)*      term ::= name ('^' positive-int)?
    ideal    ::= monomial (',' monomial)*    ('0' is the zero ideal)

Whitespace is ignored everywhere.
"""

from __future__ import annotations

import re
from typing import List, Optional, Sequence, Tuple

from .ideal import MonomialIdeal
from .monomial import Monomial, RingContext


class ParseError(ValueError):
    pass


_HEADER = re.compile(r"^ring\s+n\s*=\s*(\d+)(?:\s+names\s*=\s*(.+))?$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TERM = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^([0-9]+))?$")


def parse_ring(line: str) -> RingContext:
    m = _HEADER.match(line.strip())
    if not m:
        raise ParseError(f"bad ring header: {line.strip()!r}")
    n = int(m.group(1))
    names: Tuple[str, ...] = ()
    if m.group(2):
        names = tuple(s.strip() for s in m.group(2).split(","))
        for s in names:
            if not _NAME.match(s):
                raise ParseError(f"bad variable name {s!r}")
    try:
        return RingContext(n, names)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_ring(ring: RingContext) -> str:
    default = RingContext(ring.n)
    if ring.names == default.names:
        return f"ring n={ring.n}"
    return f"ring n={ring.n} names={','.join(ring.names)}"


def parse_monomial(ring: RingContext, text: str) -> Monomial:
    s = re.sub(r"\s+", "", text)
    if s == "1":
        return ring.one()
    if not s:
        raise ParseError("empty monomial")
    index = {name: i for i, name in enumerate(ring.names)}
    exps = [0] * ring.n
    for term in s.split("*"):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"bad term {term!r} in {text!r}")
        name, power = m.group(1), m.group(2)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}")
        e = int(power) if power is not None else 1
        if e < 1:
            raise ParseError(f"exponent must be positive in {term!r}")
        exps[index[name]] += e
    return Monomial(ring, tuple(exps))


def parse_ideal(ring: RingContext, text: str) -> MonomialIdeal:
    s = re.sub(r"\s+", "", text)
    if s == "0":
        return MonomialIdeal.zero(ring)
    if not s:
        raise ParseError("empty ideal text")
    return MonomialIdeal(ring, [parse_monomial(ring, part) for part in s.split(",")])


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_document(text: str) -> Tuple[RingContext, MonomialIdeal]:
    """A ring header line followed by ideal text (which may span lines)."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input: a 'ring n=<k>' header is required")
    ring = parse_ring(lines[0])
    if len(lines) < 2:
        raise ParseError("missing ideal text after the ring header")
    return ring, parse_ideal(ring, " ".join(lines[1:]))


def format_document(ideal: MonomialIdeal) -> str:
    return f"{format_ring(ideal.ring)}\n{ideal}\n"


_RADICAL_PREFIX = re.compile(r"^\(([^)]*)\)\s*:(.*)$")


def parse_components(text: str, ring: Optional[RingContext] = None) -> Tuple[RingContext, List[MonomialIdeal]]:
    """One component per line, optionally prefixed by ``(vars):`` as printed
    by :func:`format_components`. A ring header line is required unless
    ``ring`` is given."""
    lines = _content_lines(text)
    if lines and lines[0].startswith("ring"):
        ring = parse_ring(lines.pop(0))
    if ring is None:
        raise ParseError("decomposition text needs a 'ring n=<k>' header")
    comps = []
    for line in lines:
        m = _RADICAL_PREFIX.match(line)
        comps.append(parse_ideal(ring, m.group(2) if m else line))
    return ring, comps


def format_support(ring: RingContext, support: Sequence[int]) -> str:
    return "(" + ",".join(ring.names[j - 1] for j in support) + ")"


def format_components(ring: RingContext, comps: Sequence[Tuple[Sequence[int], MonomialIdeal]]) -> str:
    return "".join(f"{format_support(ring, sup)}: {ideal}\n" for sup, ideal in comps)
