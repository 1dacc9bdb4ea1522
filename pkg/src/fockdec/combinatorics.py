"""Multipartitions, charged nodes, and the charge-shifted dominance order.

A partition is a weakly decreasing tuple of positive ints, a multipartition
an l-tuple of partitions, and a charge an l-tuple of ints.  Nodes are
(row, col, comp) triples, all 1-based; the content of a node is
col - row + charge[comp-1], and for a finite modulus e its residue is the
content mod e (e=None throughout the package means "no modulus", i.e. the
content itself is the residue).

The dominance comparison never takes a modulus: it is computed from a
charge-and-level-shifted beta-sequence, identical for every e.

>>> mp = parse_multipartition("1.1|1.1|1")
>>> format_multipartition(mp), rank(mp)
('1.1|1.1|1', 5)
>>> compare_dominance(((3,),), ((2, 1),), (0,)).value
'Greater'
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Optional

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]
Charge = tuple[int, ...]

__all__ = [
    "Partition",
    "Multipartition",
    "Charge",
    "Node",
    "Ordering",
    "RankMismatch",
    "partitions",
    "parse_multipartition",
    "format_multipartition",
    "parse_charge",
    "format_charge",
    "rank",
    "empty",
    "add_node",
    "remove_node",
    "content",
    "residue",
    "node_key",
    "node_less",
    "addable_nodes",
    "removable_nodes",
    "gamma_sequence",
    "compare_dominance",
    "gamma_lex_sorted",
    "enumerate_multipartitions",
]


class RankMismatch(ValueError):
    """Dominance comparison of multipartitions of different rank."""


class Node(NamedTuple):
    row: int
    col: int
    comp: int


class Ordering(enum.Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, each a weakly decreasing tuple.

    >>> partitions(4)[0], len(partitions(4)), len(partitions(0))
    ((4,), 5, 1)
    """
    if n < 0:
        raise ValueError(f"negative rank {n}")
    return tuple(_partitions_below(n, n))


@lru_cache(maxsize=None)
def _partitions_below(n: int, cap: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_below(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def parse_multipartition(text: str) -> Multipartition:
    """Parse '1.1|1.1|1' syntax; '-' is the empty component.

    >>> parse_multipartition("-|2.1")
    ((), (2, 1))
    """
    comps = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if chunk in ("-", ""):
            comps.append(())
            continue
        parts = tuple(int(p) for p in chunk.split("."))
        if any(p <= 0 for p in parts):
            raise ValueError(f"nonpositive part in {chunk!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing in {chunk!r}")
        comps.append(parts)
    return tuple(comps)


def format_multipartition(mp: Multipartition) -> str:
    return "|".join(".".join(str(p) for p in comp) if comp else "-" for comp in mp)


def parse_charge(text: str) -> Charge:
    """Parse '0,0,-1' syntax."""
    return tuple(int(c) for c in text.split(","))


def format_charge(charge: Charge) -> str:
    return ",".join(str(c) for c in charge)


def rank(mp: Multipartition) -> int:
    return sum(sum(comp) for comp in mp)


def empty(level: int) -> Multipartition:
    return ((),) * level


def add_node(mp: Multipartition, node: Node) -> Multipartition:
    """Insert one box; the position must be addable."""
    row, col, comp = node
    part = mp[comp - 1]
    if row == len(part) + 1:
        if col != 1:
            raise ValueError(f"{node} is not addable on {mp}")
        new = part + (1,)
    else:
        if not (1 <= row <= len(part)) or col != part[row - 1] + 1:
            raise ValueError(f"{node} is not addable on {mp}")
        if row > 1 and part[row - 2] < col:
            raise ValueError(f"{node} is not addable on {mp}")
        new = part[: row - 1] + (col,) + part[row:]
    return mp[: comp - 1] + (new,) + mp[comp:]


def remove_node(mp: Multipartition, node: Node) -> Multipartition:
    """Delete one box; the position must be removable."""
    row, col, comp = node
    part = mp[comp - 1]
    if not (1 <= row <= len(part)) or col != part[row - 1]:
        raise ValueError(f"{node} is not removable on {mp}")
    if row < len(part) and part[row] >= col:
        raise ValueError(f"{node} is not removable on {mp}")
    if col == 1:
        new = part[: row - 1] + part[row:]
    else:
        new = part[: row - 1] + (col - 1,) + part[row:]
    return mp[: comp - 1] + (new,) + mp[comp:]


def content(node: Node, charge: Charge) -> int:
    return node.col - node.row + charge[node.comp - 1]


def residue(c: int, e: Optional[int]) -> int:
    """Reduce a content mod e; with no modulus the content stands."""
    return c if e is None else c % e


def node_key(node: Node, charge: Charge) -> tuple[int, int]:
    """Sort key for the node order: content first, then component index."""
    return (content(node, charge), node.comp)


def node_less(a: Node, b: Node, charge: Charge) -> bool:
    """Strict node order used in all operator exponent counts.

    >>> node_less(Node(1, 1, 1), Node(1, 1, 2), (0, 0))
    True
    """
    return node_key(a, charge) < node_key(b, charge)


def _match(c: int, e: Optional[int], i: Optional[int]) -> bool:
    if i is None:
        return True
    if e is None:
        return c == i
    return (c - i) % e == 0


def addable_nodes(
    mp: Multipartition, charge: Charge, e: Optional[int] = None, i: Optional[int] = None
) -> list[Node]:
    """Addable nodes, optionally filtered to residue i, ascending in the node order.

    >>> addable_nodes(((1,), ()), (0, 0), 2, 0)
    [Node(row=1, col=1, comp=2)]
    >>> addable_nodes(((1,), ()), (0, 0), 2, 1)
    [Node(row=2, col=1, comp=1), Node(row=1, col=2, comp=1)]
    """
    out = []
    for ci, part in enumerate(mp, start=1):
        for row in range(1, len(part) + 2):
            here = part[row - 1] if row <= len(part) else 0
            above = part[row - 2] if row >= 2 else None
            if above is not None and above <= here:
                continue
            node = Node(row, here + 1, ci)
            if _match(content(node, charge), e, i):
                out.append(node)
    out.sort(key=lambda nd: node_key(nd, charge))
    return out


def removable_nodes(
    mp: Multipartition, charge: Charge, e: Optional[int] = None, i: Optional[int] = None
) -> list[Node]:
    """Removable nodes, optionally filtered to residue i, ascending in the node order."""
    out = []
    for ci, part in enumerate(mp, start=1):
        for row in range(1, len(part) + 1):
            below = part[row] if row < len(part) else 0
            if part[row - 1] == below:
                continue
            node = Node(row, part[row - 1], ci)
            if _match(content(node, charge), e, i):
                out.append(node)
    out.sort(key=lambda nd: node_key(nd, charge))
    return out


def gamma_sequence(mp: Multipartition, charge: Charge, pad: int = 0) -> tuple[int, ...]:
    """The descending comparison sequence behind the dominance order.

    Component i contributes parts[j] - j + charge[i] - (l+1-i)/(l+1) for
    j = 1 .. rank + max(charge[i], 0) + pad.  Values are returned scaled by
    l+1 so everything stays an exact int.  Enlarging pad only appends
    entries that every equal-rank multipartition shares, so comparisons do
    not depend on it.
    """
    lv = len(mp)
    if lv != len(charge):
        raise ValueError(f"level {lv} multipartition with level {len(charge)} charge")
    if pad < 0:
        raise ValueError(f"negative pad {pad}")
    n = rank(mp)
    scale = lv + 1
    out = []
    for i, (part, s) in enumerate(zip(mp, charge), start=1):
        depth = n + max(s, 0) + pad
        frac = scale - i
        for j in range(1, depth + 1):
            pj = part[j - 1] if j <= len(part) else 0
            out.append(scale * (pj - j + s) - frac)
    out.sort(reverse=True)
    return tuple(out)


def compare_dominance(
    a: Multipartition, b: Multipartition, charge: Charge, pad: int = 0
) -> Ordering:
    """Compare in the charged dominance order (no modulus involved).

    Greater means a dominates b: every prefix sum of a's gamma sequence is
    at least b's.  Equal-rank inputs only.
    """
    na, nb = rank(a), rank(b)
    if na != nb:
        raise RankMismatch(f"rank {na} vs rank {nb}")
    if a == b:
        return Ordering.EQUAL
    ga = gamma_sequence(a, charge, pad)
    gb = gamma_sequence(b, charge, pad)
    if ga == gb:
        raise ValueError(f"distinct multipartitions {a} and {b} share a gamma sequence")
    ge = le = True
    run = 0
    for xa, xb in zip(ga, gb):
        run += xa - xb
        if run > 0:
            le = False
        elif run < 0:
            ge = False
        if not ge and not le:
            return Ordering.INCOMPARABLE
    # distinct sequences with equal totals cannot keep every prefix sum equal
    assert not (ge and le)
    return Ordering.GREATER if ge else Ordering.LESS


def gamma_lex_sorted(
    mps: Iterator[Multipartition] | list[Multipartition],
    charge: Charge,
    pad: int = 0,
    reverse: bool = True,
) -> list[Multipartition]:
    """Sort by the gamma sequence, lexicographically, descending by default.

    This is the deterministic total order used for matrix rows and columns:
    it refines the dominance order (a Greater comparison always sorts
    first), and puts incomparable pairs in a fixed, reproducible place.
    """
    return sorted(mps, key=lambda m: gamma_sequence(m, charge, pad), reverse=reverse)


def enumerate_multipartitions(
    level: int, n: int, charge: Optional[Charge] = None, pad: int = 0
) -> list[Multipartition]:
    """All level-l multipartitions of rank n, in descending gamma-lex order.

    The order depends on the charge (default all zeros), which is why the
    charge is accepted here: matrix rows for a charged module must be
    ordered with that same charge.

    >>> [format_multipartition(m) for m in enumerate_multipartitions(1, 3)]
    ['3', '2.1', '1.1.1']
    """
    if charge is None:
        charge = (0,) * level
    if len(charge) != level:
        raise ValueError(f"level {level} with charge {charge}")
    out: list[Multipartition] = []
    for sizes in _compositions(n, level):
        for combo in product(*(partitions(k) for k in sizes)):
            out.append(tuple(combo))
    return gamma_lex_sorted(out, charge, pad)


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest
