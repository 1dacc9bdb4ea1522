"""Bar-invariant canonical bases of the charged Fock space.

For each crystal vertex of the requested rank, a monomial in divided powers
of the raising operators is read off by maximal good-node peeling: starting
from the vertex, repeatedly pick the residue whose good removable node is
greatest in the node order, remove good nodes epsilon many times, and
recurse until the empty multipartition.  Applying the reversed monomial to
the vacuum yields a bar-invariant vector supported at the vertex.  A
Gaussian pass then subtracts bar-symmetric multiples of other basis vectors
until every off-diagonal coefficient lies in v*Z[v]; the result is the
unique bar-invariant basis vector congruent to its vertex modulo v.

The monomial usually has unit coefficient at its vertex and support below
it, but not always: from rank 9 on (first at e=2, charge (0,0), vertex
(3.1|4.1)) a monomial can contain a gamma-greater vertex with bar-symmetric
coefficient, and then its own coefficient picks up the matching excess.
The Gaussian pass handles this by building the basis vector of such an
offender on demand, recursively; subtracting it removes the excess as well,
and the diagonal coefficient is checked to be exactly 1 only after
reduction.  A dependency cycle between vertices would make the system
unsolvable by this route and raises OrderViolation; none has been
observed.

The construction never uses dominance of the charge, so it runs at any
charge directly.  canonical_basis_any_charge additionally implements the
reduction route: peeling sequences are taken at the dominant representative
of the charge (componentwise mod e, sorted) and applied in the module of
the requested charge, labeling each vector by its greatest support term.
Both routes produce the same basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .combinatorics import (
    Charge,
    Multipartition,
    empty,
    format_multipartition,
    gamma_lex_sorted,
    gamma_sequence,
    node_key,
    rank,
    removable_nodes,
    content,
)
from .crystal import (
    CrystalGraph,
    NotInCrystal,
    epsilon,
    generate_component,
    good_removable_node,
    remove_good,
)
from .fock import FockVector, apply_f_divided, basis_vector
from .laurent import ONE, LaurentPoly, bar_symmetric_part

__all__ = [
    "PeelingUnitriangularityViolated",
    "MissingPredecessor",
    "OrderViolation",
    "CanonicalBasisSet",
    "peeling_sequence",
    "build_A",
    "canonical_basis",
    "reduce_charge",
    "canonical_basis_any_charge",
    "brute_force_basis",
]


class PeelingUnitriangularityViolated(RuntimeError):
    """A reduced vector failed to have unit coefficient at its label."""


class MissingPredecessor(RuntimeError):
    """Elimination needs a basis vector at a label that is not a vertex."""


class OrderViolation(RuntimeError):
    """Basis vectors depend on each other in a cycle."""


def peeling_sequence(
    mp: Multipartition, e: Optional[int], charge: Charge
) -> tuple[tuple[int, int], ...]:
    """The maximal good-node peeling word for a crystal vertex.

    Entries are (residue, multiplicity) pairs, first entry peeling mp
    itself.  Raises NotInCrystal when peeling dead-ends before the empty
    multipartition, which happens exactly off the component.
    """
    seq: list[tuple[int, int]] = []
    cur = mp
    vac = empty(len(charge))
    while cur != vac:
        best: Optional[tuple[tuple[int, int], int]] = None
        for i in _removable_residues(cur, e, charge):
            node = good_removable_node(cur, e, i, charge)
            if node is not None:
                key = node_key(node, charge)
                if best is None or key > best[0]:
                    best = (key, i)
        if best is None:
            raise NotInCrystal(f"{format_multipartition(mp)} peels to a dead end")
        i = best[1]
        u = epsilon(cur, e, i, charge)
        seq.append((i, u))
        for _ in range(u):
            nxt = remove_good(cur, e, i, charge)
            assert nxt is not None
            cur = nxt
    return tuple(seq)


def _removable_residues(
    mp: Multipartition, e: Optional[int], charge: Charge
) -> list[int]:
    if e is not None:
        return list(range(e))
    return sorted({content(n, charge) for n in removable_nodes(mp, charge)})


def apply_peeling(
    seq: tuple[tuple[int, int], ...], e: Optional[int], charge: Charge
) -> FockVector:
    """Apply the reversed peeling word to the vacuum of the given charge."""
    x = basis_vector(empty(len(charge)), charge)
    for i, u in reversed(seq):
        x = apply_f_divided(x, e, i, u)
    return x


def build_A(mp: Multipartition, e: Optional[int], charge: Charge) -> FockVector:
    """The bar-invariant peeling monomial vector for one crystal vertex.

    The coefficient at mp is checked to be exactly 1.
    """
    x = apply_peeling(peeling_sequence(mp, e, charge), e, charge)
    if x.coeff(mp) != ONE:
        raise PeelingUnitriangularityViolated(
            f"coefficient of {format_multipartition(mp)} is {x.coeff(mp)}"
        )
    return x


@dataclass(frozen=True)
class CanonicalBasisSet:
    """All canonical basis vectors of one rank, with their provenance.

    ``labels`` is in descending gamma order (the matrix column order);
    ``vectors``/``avectors``/``peelings``/``corrections`` are keyed by
    label.  ``corrections[lam]`` holds the bar-symmetric coefficients m
    with A(lam) = G(lam) + sum m[mu] G(mu).  For a non-dominant charge,
    ``sources`` maps each label to the dominant-crystal vertex whose
    peeling word produced it; at a dominant charge sources is None and the
    labels are the crystal vertices themselves.
    """

    e: Optional[int]
    charge: Charge
    rank: int
    labels: tuple[Multipartition, ...]
    vectors: dict[Multipartition, FockVector]
    avectors: dict[Multipartition, FockVector]
    peelings: dict[Multipartition, tuple[tuple[int, int], ...]]
    corrections: dict[Multipartition, dict[Multipartition, LaurentPoly]]
    sources: Optional[dict[Multipartition, Multipartition]] = None


def _reduce(
    x: FockVector,
    label: Multipartition,
    charge: Charge,
    resolve,
) -> tuple[FockVector, dict[Multipartition, LaurentPoly]]:
    """Subtract resolved basis vectors until off-label coefficients sit in v*Z[v].

    Offenders are cleared greatest-gamma first; ``resolve(mp)`` must return
    the finished basis vector at mp, building it first if necessary.  An
    offender gamma-greater than the label is legitimate: the peeling
    monomials are not always triangular, and subtracting the offender's
    basis vector also removes the excess it contributed on the label.
    """
    corrections: dict[Multipartition, LaurentPoly] = {}
    guard = 0
    limit = 4 * len(x.entries) + 64
    while True:
        offender = None
        for mp, c in x.entries.items():
            if mp != label and not c.in_v_ztimes():
                if offender is None or gamma_sequence(mp, charge) > gamma_sequence(
                    offender, charge
                ):
                    offender = mp
        if offender is None:
            return x, corrections
        m = bar_symmetric_part(x.coeff(offender))
        assert m.is_bar_symmetric() and not m.is_zero()
        g = resolve(offender)
        corrections[offender] = corrections.get(offender, LaurentPoly()) + m
        x = x - g.scale(m)
        guard += 1
        if guard > limit:
            raise RuntimeError("elimination failed to terminate")


def canonical_basis(
    e: Optional[int], charge: Charge, n: int, graph: Optional[CrystalGraph] = None
) -> CanonicalBasisSet:
    """The canonical basis vectors labeled by rank-n crystal vertices.

    Vertices are processed in ascending gamma order; when a peeling
    monomial carries a gamma-greater vertex, that vertex's basis vector is
    built first, recursively.
    """
    if graph is None:
        graph = generate_component(e, charge, n)
    verts_desc = list(graph.vertices(n))
    vert_set = set(verts_desc)
    table: dict[Multipartition, FockVector] = {}
    avectors: dict[Multipartition, FockVector] = {}
    peelings: dict[Multipartition, tuple[tuple[int, int], ...]] = {}
    corrections: dict[Multipartition, dict[Multipartition, LaurentPoly]] = {}
    building: list[Multipartition] = []

    def resolve(mp: Multipartition) -> FockVector:
        if mp not in vert_set:
            raise MissingPredecessor(
                f"no crystal vertex at {format_multipartition(mp)}"
            )
        return build(mp)

    def build(lam: Multipartition) -> FockVector:
        if lam in table:
            return table[lam]
        if lam in building:
            chain = " <- ".join(
                format_multipartition(m) for m in building + [lam]
            )
            raise OrderViolation(f"basis vectors depend on each other: {chain}")
        building.append(lam)
        try:
            seq = peeling_sequence(lam, e, charge)
            a = apply_peeling(seq, e, charge)
            g, corr = _reduce(a, lam, charge, resolve)
            _check_reduced(g, lam)
            peelings[lam] = seq
            avectors[lam] = a
            corrections[lam] = corr
            table[lam] = g
        finally:
            building.pop()
        return g

    for lam in reversed(verts_desc):
        build(lam)
    return CanonicalBasisSet(
        e=e,
        charge=charge,
        rank=n,
        labels=tuple(verts_desc),
        vectors=table,
        avectors=avectors,
        peelings=peelings,
        corrections=corrections,
    )


def _check_reduced(g: FockVector, label: Multipartition) -> None:
    if g.coeff(label) != ONE:
        raise PeelingUnitriangularityViolated(
            f"coefficient of {format_multipartition(label)} is {g.coeff(label)} "
            "after reduction"
        )
    for mp, c in g.entries.items():
        if mp != label:
            assert c.in_v_ztimes(), f"{format_multipartition(mp)}: {c}"


def reduce_charge(charge: Charge, e: Optional[int]) -> tuple[Charge, bool]:
    """The dominant representative of a charge, and whether it already was one.

    Finite e: componentwise mod e, sorted ascending.  No modulus: sorted
    ascending.
    """
    if e is None:
        dom = tuple(sorted(charge))
    else:
        dom = tuple(sorted(c % e for c in charge))
    return dom, dom == tuple(charge)


def canonical_basis_any_charge(
    e: Optional[int], charge: Charge, n: int
) -> CanonicalBasisSet:
    """Canonical basis at an arbitrary charge via the dominant reduction.

    Peeling words are read in the crystal of the dominant representative
    and applied in the module of the requested charge; each resulting
    vector is labeled by its greatest support term.
    """
    dom, was_dominant = reduce_charge(charge, e)
    if was_dominant:
        return canonical_basis(e, charge, n)
    graph = generate_component(e, dom, n)
    built: dict[Multipartition, tuple] = {}
    for src in graph.vertices(n):
        seq = peeling_sequence(src, e, dom)
        a = apply_peeling(seq, e, charge)
        label = max(a.entries, key=lambda m: gamma_sequence(m, charge))
        if a.coeff(label) != ONE:
            raise PeelingUnitriangularityViolated(
                f"coefficient of {format_multipartition(label)} is {a.coeff(label)}"
            )
        if label in built:
            raise PeelingUnitriangularityViolated(
                f"two vectors claim the label {format_multipartition(label)}"
            )
        built[label] = (src, seq, a)
    table: dict[Multipartition, FockVector] = {}
    avectors = {}
    peelings = {}
    corrections = {}
    sources = {}
    building: list[Multipartition] = []

    def resolve(mp: Multipartition) -> FockVector:
        if mp not in built:
            raise MissingPredecessor(f"no basis vector at {format_multipartition(mp)}")
        return build(mp)

    def build(label: Multipartition) -> FockVector:
        if label in table:
            return table[label]
        if label in building:
            chain = " <- ".join(
                format_multipartition(m) for m in building + [label]
            )
            raise OrderViolation(f"basis vectors depend on each other: {chain}")
        building.append(label)
        try:
            src, seq, a = built[label]
            g, corr = _reduce(a, label, charge, resolve)
            _check_reduced(g, label)
            table[label] = g
            avectors[label] = a
            peelings[label] = seq
            corrections[label] = corr
            sources[label] = src
        finally:
            building.pop()
        return g

    for label in sorted(built, key=lambda m: gamma_sequence(m, charge)):
        build(label)
    labels = tuple(gamma_lex_sorted(list(table), charge))
    return CanonicalBasisSet(
        e=e,
        charge=charge,
        rank=n,
        labels=labels,
        vectors=table,
        avectors=avectors,
        peelings=peelings,
        corrections=corrections,
        sources=sources,
    )


def brute_force_basis(
    e: Optional[int], charge: Charge, n: int
) -> dict[Multipartition, FockVector]:
    """Independent solver for the same basis, for cross-checking.

    Works coordinate-wise in the span of the peeling monomial vectors: for
    each vertex, start from the unit coordinate vector and repeatedly
    re-expand the full combination in the standard basis, cancelling the
    bar-symmetric part of the greatest off-label coefficient by adjusting
    the coordinate at that label.  No intermediate basis vectors are
    reused, so the only shared ingredients with canonical_basis are the
    monomial vectors themselves.
    """
    graph = generate_component(e, charge, n)
    verts = list(graph.vertices(n))
    amat = {
        lam: apply_peeling(peeling_sequence(lam, e, charge), e, charge)
        for lam in verts
    }
    out: dict[Multipartition, FockVector] = {}
    for lam in verts:
        coords: dict[Multipartition, LaurentPoly] = {lam: ONE}
        rounds = 0
        while True:
            rounds += 1
            if rounds > 8 * len(verts) + 64:
                raise RuntimeError("coordinate adjustment failed to terminate")
            y = FockVector(charge, {})
            for kap, c in coords.items():
                y = y + amat[kap].scale(c)
            offender = None
            for mp, c in y.entries.items():
                if mp == lam:
                    continue
                if not bar_symmetric_part(c).is_zero():
                    if offender is None or gamma_sequence(mp, charge) > gamma_sequence(
                        offender, charge
                    ):
                        offender = mp
            if offender is None:
                assert y.coeff(lam) == ONE
                out[lam] = y
                break
            assert offender in amat, f"offender {offender} is not a vertex"
            m = bar_symmetric_part(y.coeff(offender))
            coords[offender] = coords.get(offender, LaurentPoly()) - m
    return out
