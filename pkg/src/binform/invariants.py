"""Trace and characteristic-polynomial invariants of binary forms.

For F of degree d = 2k (k even) and n >= k, the transvection operator maps
G in the order-n space to (F, G)_k.  Its matrix in the monomial basis
x1^(n-i) x2^i, i = 0..n, has the single-term entries

    M[i][j] = f_{i-j+k} * t_coeff(i-j+k, j, 2k, n, k)

(the transvectant of F with a monomial leaves exactly one term).  Traces
of powers of M and coefficients of its characteristic polynomial are SL2
invariants of F; the matrix is built symbolically or numerically through
one code path.
"""

from __future__ import annotations

import functools
import hashlib
from fractions import Fraction

from .exactnum import fact_product
from .forms import BinaryForm, generic_form
from .polyring import MultiPoly, RingMatrix, charpoly
from .transvect import t_coeff, transvectant
from .umbral import octavic_a_bracket, octavic_b_bracket, umbral_eval


def _check_fk(form: BinaryForm, n: int) -> int:
    d = form.degree
    if d % 2:
        raise ValueError(f"form degree {d} is odd; need d = 2k")
    k = d // 2
    if k % 2 or k < 2:
        raise ValueError(f"need k = d/2 even and >= 2, got k = {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n = {n} < k = {k}")
    return k


def transvection_matrix(form: BinaryForm, n: int) -> RingMatrix:
    """Matrix of G |-> (F, G)_k on the order-n space, in the monomial basis.

    Entry (i, j) multiplies basis element i in the image of basis element j.
    """
    k = _check_fk(form, n)
    d = form.degree
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            s = i - j + k
            if 0 <= s <= d and form.coeffs[s]:
                row.append(form.coeffs[s] * t_coeff(s, j, d, n, k))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return RingMatrix(rows)


def trace_invariant(form: BinaryForm, n: int, p: int):
    """tr(M^p) for the transvection matrix M; degree p in the coefficients."""
    if p < 1:
        raise ValueError("power must be >= 1")
    return transvection_matrix(form, n).pow(p).trace()


def charpoly_invariants(form: BinaryForm, n: int) -> list[Fraction]:
    """Coefficients of det(lambda*Id - M) from lambda^0 up (monic).

    Numeric forms only; the entry of coefficient degree p sits at index
    n + 1 - p (see charpoly_invariant).
    """
    if not form.is_numeric():
        raise ValueError("characteristic polynomial is computed for numeric forms only")
    return charpoly(transvection_matrix(form, n))


def charpoly_invariant(form: BinaryForm, n: int, p: int) -> Fraction:
    """The degree-p invariant among the characteristic coefficients, i.e.
    the coefficient of lambda^(n+1-p).  Vanishes identically for p = 1
    (binary forms have no linear invariant); equals 1 for p = 0."""
    if not 0 <= p <= n + 1:
        raise ValueError(f"degree index {p} out of range 0..{n + 1}")
    return charpoly_invariants(form, n)[n + 1 - p]


def shioda_invariant(idx: int, form: BinaryForm):
    """The degree-idx generator of the octavic invariant ring, idx in 2..5:

        J2 = (F,F)_8                    J3 = (F,(F,F)_4)_8
        J4 = ((F,F)_6,(F,F)_6)_4        J5 = ((F,(F,F)_6)_4,(F,F)_6)_4
    """
    if form.degree != 8:
        raise ValueError(f"octavic invariants need degree 8, got {form.degree}")
    if idx == 2:
        return transvectant(form, form, 8).constant()
    if idx == 3:
        return transvectant(form, transvectant(form, form, 4), 8).constant()
    ff6 = transvectant(form, form, 6)
    if idx == 4:
        return transvectant(ff6, ff6, 4).constant()
    if idx == 5:
        return transvectant(transvectant(form, ff6, 4), ff6, 4).constant()
    raise ValueError(f"index must be 2, 3, 4 or 5, got {idx}")


def p2_closed_form(form: BinaryForm, n: int):
    """Closed form of the quadratic trace invariant:

        tr(M^2) = (n-k)! (n+k+1)! k!^2 / (n!^2 (2k+1)!) * (F, F)_{2k}

    For n = k the constant is 1 and the invariant is just (F, F)_{2k}.
    """
    k = _check_fk(form, n)
    const = fact_product([n - k, n + k + 1, k, k], [n, n, 2 * k + 1])
    return const * transvectant(form, form, 2 * k).constant()


def scalar_str(x) -> str:
    """Canonical decimal string of a Fraction or MultiPoly."""
    return str(x)


def covariant_hash(x) -> str:
    """sha256 of the canonical serialization of a scalar or BinaryForm."""
    if isinstance(x, BinaryForm):
        text = f"order={x.degree};" + ";".join(scalar_str(c) for c in x.coeffs)
    else:
        text = scalar_str(x)
    return hashlib.sha256(text.encode("ascii")).hexdigest()


@functools.cache
def octavic_identity_report() -> tuple[dict, ...]:
    """Certify the octavic trace-invariant and bracket identities over the
    polynomial ring in f0..f8.  Each entry records both sides' canonical
    hashes, so a pass is exactly hash equality."""
    f = generic_form(8)
    j2 = shioda_invariant(2, f)
    j3 = shioda_invariant(3, f)
    j4 = shioda_invariant(4, f)
    j5 = shioda_invariant(5, f)
    ff6 = transvectant(f, f, 6)
    assign = {"a": f, "b": f, "c": f}
    a4 = umbral_eval(octavic_a_bracket((4, 0, 0)), assign)
    a31 = umbral_eval(octavic_a_bracket((3, 1, 0)), assign)
    a22 = umbral_eval(octavic_a_bracket((2, 2, 0)), assign)
    a211 = umbral_eval(octavic_a_bracket((2, 1, 1)), assign)
    b44 = umbral_eval(octavic_b_bracket((4, 4, 0)), assign)
    b53 = umbral_eval(octavic_b_bracket((5, 3, 0)), assign)
    b62 = umbral_eval(octavic_b_bracket((6, 2, 0)), assign)
    b431 = umbral_eval(octavic_b_bracket((4, 3, 1)), assign)
    b332 = umbral_eval(octavic_b_bracket((3, 3, 2)), assign)
    zero4 = BinaryForm([MultiPoly.zero(("f" + str(i) for i in range(9)))] * 5)
    checks = [
        ("P(4,2) = J2", trace_invariant(f, 4, 2), j2),
        ("P(4,3) = J3", trace_invariant(f, 4, 3), j3),
        ("P(4,4) = 8/5 J4 + 7/30 J2^2", trace_invariant(f, 4, 4),
         Fraction(8, 5) * j4 + Fraction(7, 30) * j2 * j2),
        ("P(4,5) = 6/5 J5 + 13/30 J2 J3", trace_invariant(f, 4, 5),
         Fraction(6, 5) * j5 + Fraction(13, 30) * j2 * j3),
        ("A(2,1,1) = 0", a211, zero4),
        ("A(3,1) = 1/2 A(4)", a31, Fraction(1, 2) * a4),
        ("A(2,2) = 1/2 A(4)", a22, Fraction(1, 2) * a4),
        ("A(2,2) = 1/2 (F,(F,F)_6)_4", a22, Fraction(1, 2) * transvectant(f, ff6, 4)),
        ("B(3,3,2) = -2 B(4,3,1)", b332, Fraction(-2) * b431),
        ("B(4,4) = 6/5 B(5,3) - 1/5 B(6,2)", b44,
         Fraction(6, 5) * b53 - Fraction(1, 5) * b62),
    ]
    report = []
    for name, lhs, rhs in checks:
        report.append({
            "identity": name,
            "pass": bool(lhs == rhs),
            "lhs_sha256": covariant_hash(lhs),
            "rhs_sha256": covariant_hash(rhs),
        })
    return tuple(report)
