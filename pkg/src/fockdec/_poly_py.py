"""Pure-Python Laurent polynomial kernel.

A polynomial is a pair ``(val, coeffs)``: ``val`` is the exponent of the
lowest term and ``coeffs`` a tuple of ints with ``coeffs[0] != 0`` and
``coeffs[-1] != 0``; the zero polynomial is ``(0, ())``.  Coefficients are
arbitrary-precision Python ints.  fockdec._poly_cy mirrors this module
function for function; fockdec.laurent selects one at import time.
"""

KERNEL = "python"


def normalize(val, coeffs):
    """Trim zero ends of a coefficient list, returning canonical form."""
    i = 0
    j = len(coeffs)
    while i < j and coeffs[i] == 0:
        i += 1
    while j > i and coeffs[j - 1] == 0:
        j -= 1
    if i == j:
        return (0, ())
    return (val + i, tuple(coeffs[i:j]))


def add(av, ac, bv, bc):
    if not ac:
        return (bv, bc)
    if not bc:
        return (av, ac)
    lo = min(av, bv)
    hi = max(av + len(ac), bv + len(bc))
    out = [0] * (hi - lo)
    for i in range(len(ac)):
        out[av - lo + i] += ac[i]
    for i in range(len(bc)):
        out[bv - lo + i] += bc[i]
    return normalize(lo, out)


def neg(av, ac):
    return (av, tuple(-x for x in ac))


def mul(av, ac, bv, bc):
    if not ac or not bc:
        return (0, ())
    out = [0] * (len(ac) + len(bc) - 1)
    for i in range(len(ac)):
        x = ac[i]
        if x:
            for j in range(len(bc)):
                y = bc[j]
                if y:
                    out[i + j] += x * y
    # ends are products of nonzero ints, so no trim needed
    return (av + bv, tuple(out))


def mono_mul(av, ac, coeff, exp):
    """Multiply by the monomial coeff * v**exp."""
    if coeff == 0 or not ac:
        return (0, ())
    if coeff == 1:
        return (av + exp, ac)
    return (av + exp, tuple(coeff * x for x in ac))


def bar(av, ac):
    """The involution v -> 1/v."""
    if not ac:
        return (0, ())
    return (-(av + len(ac) - 1), tuple(reversed(ac)))


def exact_div(av, ac, bv, bc):
    """Divide exactly, or return None when no quotient exists over Z[v, 1/v]."""
    if not ac:
        return (0, ())
    if len(ac) < len(bc):
        return None
    head = bc[0]
    n = len(ac) - len(bc) + 1
    rem = list(ac)
    quo = [0] * n
    for i in range(n):
        q, r = divmod(rem[i], head)
        if r:
            return None
        if q:
            quo[i] = q
            for j in range(1, len(bc)):
                rem[i + j] -= q * bc[j]
    for i in range(n, len(ac)):
        if rem[i]:
            return None
    return normalize(av - bv, quo)
