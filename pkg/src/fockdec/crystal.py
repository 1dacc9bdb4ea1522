"""Good nodes and crystal components of the charged Fock space.

For a residue i, write the addable and removable i-nodes of a
multipartition in one word, ascending in the node order, then repeatedly
delete a removable node standing immediately before an addable one.  What
survives is a block of addable nodes followed by a block of removable
ones.  The good addable node is the last survivor of the addable block,
the good removable node the first survivor of the removable block, and
epsilon counts the removable block.

Adding the good addable node is injective with inverse "remove the good
removable node", which makes the set of multipartitions reachable from the
empty one a combinatorial component that this module generates rank by
rank.

>>> good_node(((), ()), 2, 0, (0, 0))
Node(row=1, col=1, comp=2)
>>> epsilon(((1,), (1,)), 2, 0, (0, 0))
2
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .combinatorics import (
    Charge,
    Multipartition,
    Node,
    add_node,
    addable_nodes,
    content,
    empty,
    format_multipartition,
    gamma_lex_sorted,
    node_key,
    remove_node,
    removable_nodes,
)

__all__ = [
    "NotInCrystal",
    "signature_blocks",
    "good_node",
    "good_removable_node",
    "epsilon",
    "apply_good",
    "remove_good",
    "residue_alphabet",
    "CrystalGraph",
    "generate_component",
]


class NotInCrystal(ValueError):
    """A multipartition outside the generated component."""


def signature_blocks(
    mp: Multipartition, e: Optional[int], i: int, charge: Charge
) -> tuple[list[Node], list[Node]]:
    """The surviving (addable block, removable block) of the i-word."""
    word = [(n, True) for n in addable_nodes(mp, charge, e, i)]
    word += [(n, False) for n in removable_nodes(mp, charge, e, i)]
    word.sort(key=lambda t: node_key(t[0], charge))
    stack: list[tuple[Node, bool]] = []
    for item in word:
        if item[1] and stack and not stack[-1][1]:
            stack.pop()
        else:
            stack.append(item)
    cut = sum(1 for t in stack if t[1])
    return [t[0] for t in stack[:cut]], [t[0] for t in stack[cut:]]


def good_node(
    mp: Multipartition, e: Optional[int], i: int, charge: Charge
) -> Optional[Node]:
    """The good addable i-node, or None when the addable block is empty."""
    adds, _ = signature_blocks(mp, e, i, charge)
    return adds[-1] if adds else None


def good_removable_node(
    mp: Multipartition, e: Optional[int], i: int, charge: Charge
) -> Optional[Node]:
    """The good removable i-node, or None when the removable block is empty."""
    _, rems = signature_blocks(mp, e, i, charge)
    return rems[0] if rems else None


def epsilon(mp: Multipartition, e: Optional[int], i: int, charge: Charge) -> int:
    """The size of the surviving removable block."""
    _, rems = signature_blocks(mp, e, i, charge)
    return len(rems)


def apply_good(
    mp: Multipartition, e: Optional[int], i: int, charge: Charge
) -> Optional[Multipartition]:
    """Add the good addable i-node, or None."""
    node = good_node(mp, e, i, charge)
    return None if node is None else add_node(mp, node)


def remove_good(
    mp: Multipartition, e: Optional[int], i: int, charge: Charge
) -> Optional[Multipartition]:
    """Remove the good removable i-node, or None."""
    node = good_removable_node(mp, e, i, charge)
    return None if node is None else remove_node(mp, node)


def residue_alphabet(mp: Multipartition, e: Optional[int], charge: Charge) -> list[int]:
    """Residues that could possibly carry a good addable node of mp."""
    if e is not None:
        return list(range(e))
    return sorted({content(n, charge) for n in addable_nodes(mp, charge)})


@dataclass(frozen=True)
class CrystalGraph:
    """A component generated from the empty multipartition, rank by rank.

    ``layers[n]`` lists the rank-n vertices in descending gamma order;
    ``edges`` maps (vertex, residue) to the vertex above it.
    """

    e: Optional[int]
    charge: Charge
    max_rank: int
    layers: tuple[tuple[Multipartition, ...], ...]
    edges: dict[tuple[Multipartition, int], Multipartition]

    def vertices(self, n: int) -> tuple[Multipartition, ...]:
        if not (0 <= n <= self.max_rank):
            raise ValueError(f"rank {n} outside 0..{self.max_rank}")
        return self.layers[n]

    def __contains__(self, mp: Multipartition) -> bool:
        r = sum(sum(c) for c in mp)
        return r <= self.max_rank and mp in self.layers[r]

    def to_json_obj(self) -> dict:
        return {
            "e": "inf" if self.e is None else self.e,
            "charge": list(self.charge),
            "max_rank": self.max_rank,
            "vertices": [
                [format_multipartition(mp) for mp in layer] for layer in self.layers
            ],
            "edges": [
                {
                    "source": format_multipartition(src),
                    "target": format_multipartition(self.edges[(src, i)]),
                    "residue": i,
                }
                for layer in self.layers
                for src in layer
                for i in sorted(j for (m, j) in self.edges if m == src)
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=BT;"]
        for layer in self.layers:
            for mp in layer:
                lines.append(f'  "{format_multipartition(mp)}";')
        for layer in self.layers:
            for src in layer:
                for i in sorted(j for (m, j) in self.edges if m == src):
                    dst = self.edges[(src, i)]
                    lines.append(
                        f'  "{format_multipartition(src)}" -> '
                        f'"{format_multipartition(dst)}" [label="{i}"];'
                    )
        lines.append("}")
        return "\n".join(lines)


def generate_component(e: Optional[int], charge: Charge, max_rank: int) -> CrystalGraph:
    """Generate the component of the empty multipartition up to max_rank."""
    if max_rank < 0:
        raise ValueError(f"negative rank {max_rank}")
    layers = [[empty(len(charge))]]
    edges: dict[tuple[Multipartition, int], Multipartition] = {}
    for _ in range(max_rank):
        nxt = set()
        for mp in layers[-1]:
            for i in residue_alphabet(mp, e, charge):
                up = apply_good(mp, e, i, charge)
                if up is not None:
                    edges[(mp, i)] = up
                    nxt.add(up)
        layers.append(gamma_lex_sorted(nxt, charge))
    return CrystalGraph(
        e=e,
        charge=charge,
        max_rank=max_rank,
        layers=tuple(tuple(gamma_lex_sorted(layer, charge)) for layer in layers),
        edges=edges,
    )
