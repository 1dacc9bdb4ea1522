"""Tests for peeling words, bar-invariant monomials, and the canonical basis."""

from __future__ import annotations

import pytest

from fockdec.canonical import (
    CanonicalBasisSet,
    MissingPredecessor,
    PeelingUnitriangularityViolated,
    apply_peeling,
    build_A,
    brute_force_basis,
    canonical_basis,
    canonical_basis_any_charge,
    peeling_sequence,
    reduce_charge,
)
from fockdec.combinatorics import (
    Ordering,
    compare_dominance,
    format_multipartition,
    gamma_sequence,
    parse_multipartition,
)
from fockdec.crystal import NotInCrystal
from fockdec.fock import FockVector, basis_vector
from fockdec.laurent import ONE, LaurentPoly, bar_symmetric_part


def mp(text):
    return parse_multipartition(text)


def poly(*pairs):
    return LaurentPoly.from_pairs(pairs)


def test_peeling_sequence_fixtures():
    assert peeling_sequence(mp("-|3"), 2, (0, 0)) == ((0, 1), (1, 1), (0, 1))
    assert peeling_sequence(mp("-|2.1"), 2, (0, 0)) == ((1, 2), (0, 1))
    assert peeling_sequence(mp("3.1|4.1"), 2, (0, 0)) == (
        (1, 2),
        (0, 2),
        (1, 3),
        (0, 2),
    )
    assert peeling_sequence(mp("-|-"), 2, (0, 0)) == ()


def test_peeling_dead_end():
    with pytest.raises(NotInCrystal):
        peeling_sequence(mp("2|-"), 2, (0, 0))


def test_apply_peeling_reaches_its_vertex():
    for text in ["-|3", "1|2", "-|2.1", "3.1|4.1"]:
        lam = mp(text)
        a = apply_peeling(peeling_sequence(lam, 2, (0, 0)), 2, (0, 0))
        assert not a.coeff(lam).is_zero()
    assert apply_peeling((), 2, (0, 0)) == basis_vector(((), ()), (0, 0))


def test_build_A_unit_coefficient():
    a = build_A(mp("-|2.1"), 2, (0, 0))
    assert a.coeff(mp("-|2.1")) == ONE
    assert a.coeff(mp("2.1|-")) == poly((1, 1))


def test_golden_columns_rank3():
    cb = canonical_basis(2, (0, 0), 3)
    assert [format_multipartition(l) for l in cb.labels] == ["-|3", "1|2", "-|2.1"]
    assert str(cb.vectors[mp("-|3")]) == (
        "(-|3, 1) + (3|-, v) + (1|2, v) + (2|1, v^2) + (1|1.1, v) + "
        "(1.1|1, v^2) + (-|1.1.1, v^2) + (1.1.1|-, v^3)"
    )
    assert str(cb.vectors[mp("1|2")]) == (
        "(1|2, 1) + (2|1, v) + (1|1.1, v^2) + (1.1|1, v^3)"
    )
    assert str(cb.vectors[mp("-|2.1")]) == "(-|2.1, 1) + (2.1|-, v)"


def test_golden_columns_rank3_no_modulus():
    cb = canonical_basis(None, (0, 0), 3)
    expected = {
        "-|3": "(-|3, 1) + (3|-, v)",
        "1|2": "(1|2, 1) + (2|1, v)",
        "-|2.1": "(-|2.1, 1) + (2.1|-, v)",
        "1|1.1": "(1|1.1, 1) + (1.1|1, v)",
        "-|1.1.1": "(-|1.1.1, 1) + (1.1.1|-, v)",
    }
    assert {format_multipartition(l): str(cb.vectors[l]) for l in cb.labels} == expected


def test_level_one_no_modulus_is_identity():
    for n in range(6):
        cb = canonical_basis(None, (0,), n)
        for lam in cb.labels:
            assert cb.vectors[lam] == basis_vector(lam, (0,))


def test_columns_are_unitriangular_and_ordered():
    for e, charge in [(2, (0, 0)), (3, (0, 1)), (None, (0, 0))]:
        for n in range(5):
            cb = canonical_basis(e, charge, n)
            for lam in cb.labels:
                g = cb.vectors[lam]
                assert g.coeff(lam) == ONE
                for term, c in g.entries.items():
                    if term == lam:
                        continue
                    assert c.in_v_ztimes()
                    assert gamma_sequence(term, charge) < gamma_sequence(lam, charge)
                    # support terms sit strictly below the label
                    assert compare_dominance(lam, term, charge) is Ordering.GREATER


def test_monomial_reexpansion_identity():
    for e, charge, n in [(2, (0, 0), 4), (3, (0, 1), 4), (2, (0, 0), 9)]:
        cb = canonical_basis(e, charge, n)
        for lam in cb.labels:
            total = cb.vectors[lam]
            for mu, m in cb.corrections[lam].items():
                assert m == bar_symmetric_part(m)  # corrections are bar-symmetric
                assert not m.is_zero()
                assert mu != lam
                total = total + cb.vectors[mu].scale(m)
            assert total == cb.avectors[lam]


def test_brute_force_agreement_small():
    for e in (2, 3, None):
        for charge in [(0,), (0, 1)]:
            for n in range(4):
                cb = canonical_basis(e, charge, n)
                bf = brute_force_basis(e, charge, n)
                assert set(bf) == set(cb.labels)
                for lam in cb.labels:
                    assert cb.vectors[lam] == bf[lam]


def test_nontrivial_correction_regression():
    # the first vertex whose peeling monomial is not unitriangular on its
    # own: the reduction must subtract a full basis vector, not a monomial
    cb = canonical_basis(2, (0, 0), 9)
    lam = ((3, 1), (4, 1))
    assert cb.corrections[lam] == {((4,), (4, 1)): ONE}
    # the correction points at a gamma-greater vertex, so the usual
    # downward elimination order cannot produce it
    assert gamma_sequence(((4,), (4, 1)), (0, 0)) > gamma_sequence(lam, (0, 0))
    assert cb.avectors[lam].coeff(lam) == poly((0, 1), (2, 1))
    assert cb.vectors[lam].coeff(lam) == ONE
    bf = brute_force_basis(2, (0, 0), 9)
    for label in cb.labels:
        assert cb.vectors[label] == bf[label]


def test_reduce_charge():
    assert reduce_charge((1, 0), 2) == ((0, 1), False)
    assert reduce_charge((0, 1), 2) == ((0, 1), True)
    assert reduce_charge((1, 3), 2) == ((1, 1), False)
    assert reduce_charge((3, -1), None) == ((-1, 3), False)
    assert reduce_charge((0,), 5) == ((0,), True)


def test_any_charge_dominant_falls_through():
    cb = canonical_basis_any_charge(2, (0, 1), 3)
    assert cb.sources is None
    assert cb.vectors == canonical_basis(2, (0, 1), 3).vectors


def test_any_charge_non_dominant():
    cb = canonical_basis_any_charge(2, (1, 0), 3)
    assert cb.sources is not None
    assert [format_multipartition(l) for l in cb.labels] == ["3|-", "-|3", "2|1", "1|2"]
    dom_count = len(canonical_basis(2, (0, 1), 3).labels)
    assert len(cb.labels) == dom_count
    for lam in cb.labels:
        g = cb.vectors[lam]
        assert g.coeff(lam) == ONE
        for term, c in g.entries.items():
            if term != lam:
                assert c.in_v_ztimes()
                assert gamma_sequence(term, (1, 0)) < gamma_sequence(lam, (1, 0))
    # the fixture column: the swap of the dominant-charge column
    assert str(cb.vectors[mp("3|-")]) == (
        "(3|-, 1) + (1|2, v) + (1|1.1, v) + (1.1.1|-, v^2)"
    )


def test_basis_set_is_frozen():
    cb = canonical_basis(2, (0,), 2)
    assert isinstance(cb, CanonicalBasisSet)
    with pytest.raises(Exception):
        cb.rank = 7


def test_missing_predecessor_error_type():
    assert issubclass(MissingPredecessor, RuntimeError)
    assert issubclass(PeelingUnitriangularityViolated, RuntimeError)
