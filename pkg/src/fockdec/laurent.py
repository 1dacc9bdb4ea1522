"""Exact Laurent polynomials over the integers in one variable v.

This is the coefficient ring for everything else in the package: balanced
quantum integers, the bar involution v -> 1/v, exact division, and the
bar-symmetric truncation used by basis eliminations all live here.

>>> p = LaurentPoly.from_terms({-2: 1, 1: 3})
>>> str(p)
'v^-2 + 3*v'
>>> str(p.bar())
'3*v^-1 + v^2'
>>> str(qint(3) * qint(2))
'v^-3 + 2*v^-1 + 2*v + v^3'

The term-level arithmetic is delegated to a kernel module: the compiled
fockdec._poly_cy when it imported cleanly, else the pure-Python
fockdec._poly_py.  Setting the environment variable FOCKDEC_PURE=1 before
import forces the pure kernel.  Both kernels use arbitrary-precision integer
coefficients; results are identical.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Mapping

from . import _poly_py

if os.environ.get("FOCKDEC_PURE") == "1":
    _kernel = _poly_py
else:
    try:
        from . import _poly_cy as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _poly_py

KERNEL = _kernel.KERNEL

__all__ = [
    "LaurentPoly",
    "DivisionNotExact",
    "KERNEL",
    "ZERO",
    "ONE",
    "V",
    "qint",
    "qfactorial",
    "exact_div",
    "bar_symmetric_part",
]


class DivisionNotExact(ArithmeticError):
    """Raised when a quotient does not exist over Z[v, 1/v]."""


class LaurentPoly:
    """An immutable Laurent polynomial in normal form.

    ``val`` is the exponent of the lowest term, ``coeffs`` the tuple of
    integer coefficients from that exponent upward, with nonzero ends.
    Structural equality and hashing; all arithmetic returns new objects.
    """

    __slots__ = ("val", "coeffs")

    def __init__(self, val: int = 0, coeffs: tuple[int, ...] = ()):
        # inputs are trusted to be in normal form; use the constructors
        # below for raw data
        self.val = val
        self.coeffs = coeffs

    @staticmethod
    def from_terms(terms: Mapping[int, int]) -> "LaurentPoly":
        """Build from an exponent -> coefficient mapping.

        >>> LaurentPoly.from_terms({0: 1, 2: 1, 5: 0}) == ONE + V * V
        True
        """
        live = {e: c for e, c in terms.items() if c}
        if not live:
            return ZERO
        lo = min(live)
        hi = max(live)
        return LaurentPoly(lo, tuple(live.get(e, 0) for e in range(lo, hi + 1)))

    @staticmethod
    def from_pairs(pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        """Build from [exponent, coefficient] pairs (the JSON form)."""
        terms: dict[int, int] = {}
        for e, c in pairs:
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly.from_terms(terms)

    @staticmethod
    def monomial(coeff: int, exp: int) -> "LaurentPoly":
        if coeff == 0:
            return ZERO
        return LaurentPoly(exp, (coeff,))

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, exp: int) -> int:
        i = exp - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs, ascending, nonzero only."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield (self.val + i, c)

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no extreme exponents")
        return self.val

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no extreme exponents")
        return self.val + len(self.coeffs) - 1

    def is_bar_symmetric(self) -> bool:
        """True when invariant under v -> 1/v."""
        return _kernel.bar(self.val, self.coeffs) == (self.val, self.coeffs)

    def is_nonneg(self) -> bool:
        """True when every coefficient is >= 0."""
        return all(c >= 0 for c in self.coeffs)

    def in_v_ztimes(self) -> bool:
        """True when the polynomial lies in v*Z[v] (zero included).

        >>> (V + V * V).in_v_ztimes(), ONE.in_v_ztimes(), ZERO.in_v_ztimes()
        (True, False, True)
        """
        return not self.coeffs or self.val >= 1

    def in_nonneg_v_poly(self) -> bool:
        """True when in N[v]: nonnegative coefficients, no negative exponents."""
        return not self.coeffs or (self.val >= 0 and self.is_nonneg())

    def eval_one(self) -> int:
        """The integer value at v = 1."""
        return sum(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(*_kernel.add(self.val, self.coeffs, other.val, other.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        nv, nc = _kernel.neg(other.val, other.coeffs)
        return LaurentPoly(*_kernel.add(self.val, self.coeffs, nv, nc))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(*_kernel.neg(self.val, self.coeffs))

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return LaurentPoly(*_kernel.mul(self.val, self.coeffs, other.val, other.coeffs))
        if isinstance(other, int):
            return LaurentPoly(*_kernel.mono_mul(self.val, self.coeffs, other, 0))
        return NotImplemented

    def __rmul__(self, other) -> "LaurentPoly":
        return self.__mul__(other)

    def shift(self, exp: int, coeff: int = 1) -> "LaurentPoly":
        """Multiply by coeff * v**exp."""
        return LaurentPoly(*_kernel.mono_mul(self.val, self.coeffs, coeff, exp))

    def bar(self) -> "LaurentPoly":
        """Apply the involution v -> 1/v."""
        return LaurentPoly(*_kernel.bar(self.val, self.coeffs))

    # -- comparisons and formatting --------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.val == other.val
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.val, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.val}, {self.coeffs})"

    def __str__(self) -> str:
        """Human form, terms ascending: 'v^-2 + 3*v', '0', '1 - v^2'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                vpart = "v" if e == 1 else f"v^{e}"
                body = vpart if mag == 1 else f"{mag}*{vpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_pairs(self) -> list[list[int]]:
        """Sorted [exponent, coefficient] pairs (the JSON serialization)."""
        return [[e, c] for e, c in self.items()]


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (1,))
V = LaurentPoly(1, (1,))


def qint(n: int) -> LaurentPoly:
    """The balanced quantum integer [n] = v^(n-1) + v^(n-3) + ... + v^(1-n).

    >>> str(qint(1)), str(qint(2)), str(qint(3))
    ('1', 'v^-1 + v', 'v^-2 + 1 + v^2')
    """
    if n <= 0:
        raise ValueError(f"quantum integer needs n >= 1, got {n}")
    coeffs = [0] * (2 * n - 1)
    coeffs[0::2] = [1] * n
    return LaurentPoly(1 - n, tuple(coeffs))


def qfactorial(n: int) -> LaurentPoly:
    """The quantum factorial [n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    out = ONE
    for k in range(2, n + 1):
        out = out * qint(k)
    return out


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """The exact quotient p / q, raising DivisionNotExact when none exists.

    >>> str(exact_div(qint(2) * qint(3), qint(3)))
    'v^-1 + v'
    >>> exact_div(ONE + V, qint(2))
    Traceback (most recent call last):
        ...
    fockdec.laurent.DivisionNotExact: (1 + v) / (v^-1 + v)
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    got = _kernel.exact_div(p.val, p.coeffs, q.val, q.coeffs)
    if got is None:
        raise DivisionNotExact(f"({p}) / ({q})")
    return LaurentPoly(*got)


def bar_symmetric_part(p: LaurentPoly) -> LaurentPoly:
    """The bar-invariant truncation a_0 + sum_{k>0} a_{-k} (v^k + v^-k).

    The result m is bar-invariant, agrees with p on all exponents <= 0, and
    p - m has only exponents >= 1.  A bar-invariant input is returned whole.

    >>> str(bar_symmetric_part(LaurentPoly.from_terms({-1: 1, 0: 2, 1: 3})))
    'v^-1 + 2 + v'
    >>> bar_symmetric_part(V * V * 5)
    LaurentPoly(0, ())
    """
    terms: dict[int, int] = {}
    for e, c in p.items():
        if e == 0:
            terms[0] = terms.get(0, 0) + c
        elif e < 0:
            terms[e] = terms.get(e, 0) + c
            terms[-e] = terms.get(-e, 0) + c
    return LaurentPoly.from_terms(terms)
