# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Laurent polynomial kernel.

Same contract as fockdec._poly_py: polynomials are (val, coeffs) pairs with
nonzero first/last coefficients and (0, ()) for zero.  Coefficients stay
Python ints (exact, arbitrary precision); the speedup comes from typed index
arithmetic and C-level loops around the coefficient objects.
"""

KERNEL = "cython"


def normalize(val, coeffs):
    """Trim zero ends of a coefficient list, returning canonical form."""
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t j = len(coeffs)
    while i < j and not coeffs[i]:
        i += 1
    while j > i and not coeffs[j - 1]:
        j -= 1
    if i == j:
        return (0, ())
    return (val + i, tuple(coeffs[i:j]))


def add(av, ac, bv, bc):
    cdef Py_ssize_t la = len(ac)
    cdef Py_ssize_t lb = len(bc)
    if la == 0:
        return (bv, bc)
    if lb == 0:
        return (av, ac)
    cdef long long avi = av
    cdef long long bvi = bv
    cdef long long lo = avi if avi < bvi else bvi
    cdef long long ha = avi + la
    cdef long long hb = bvi + lb
    cdef long long hi = ha if ha > hb else hb
    cdef Py_ssize_t n = <Py_ssize_t> (hi - lo)
    cdef list out = [0] * n
    cdef Py_ssize_t i
    cdef Py_ssize_t oa = <Py_ssize_t> (avi - lo)
    cdef Py_ssize_t ob = <Py_ssize_t> (bvi - lo)
    for i in range(la):
        out[oa + i] = out[oa + i] + ac[i]
    for i in range(lb):
        out[ob + i] = out[ob + i] + bc[i]
    return normalize(lo, out)


def neg(av, ac):
    return (av, tuple([-x for x in ac]))


def mul(av, ac, bv, bc):
    cdef Py_ssize_t la = len(ac)
    cdef Py_ssize_t lb = len(bc)
    if la == 0 or lb == 0:
        return (0, ())
    cdef list out = [0] * (la + lb - 1)
    cdef Py_ssize_t i, j
    for i in range(la):
        x = ac[i]
        if x:
            for j in range(lb):
                y = bc[j]
                if y:
                    out[i + j] = out[i + j] + x * y
    return (av + bv, tuple(out))


def mono_mul(av, ac, coeff, exp):
    """Multiply by the monomial coeff * v**exp."""
    if coeff == 0 or len(ac) == 0:
        return (0, ())
    if coeff == 1:
        return (av + exp, ac)
    return (av + exp, tuple([coeff * x for x in ac]))


def bar(av, ac):
    """The involution v -> 1/v."""
    cdef Py_ssize_t la = len(ac)
    if la == 0:
        return (0, ())
    return (-(av + la - 1), tuple(ac[::-1]))


def exact_div(av, ac, bv, bc):
    """Divide exactly, or return None when no quotient exists over Z[v, 1/v]."""
    cdef Py_ssize_t la = len(ac)
    cdef Py_ssize_t lb = len(bc)
    if la == 0:
        return (0, ())
    if la < lb:
        return None
    head = bc[0]
    cdef Py_ssize_t n = la - lb + 1
    cdef list rem = list(ac)
    cdef list quo = [0] * n
    cdef Py_ssize_t i, j
    for i in range(n):
        q, r = divmod(rem[i], head)
        if r:
            return None
        if q:
            quo[i] = q
            for j in range(1, lb):
                rem[i + j] = rem[i + j] - q * bc[j]
    for i in range(n, la):
        if rem[i]:
            return None
    return normalize(av - bv, quo)
