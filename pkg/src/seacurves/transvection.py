"""The r-transvection of binary forms.

For f of degree n and g of degree m and 0 <= r <= min(n, m):

    (f, g)^r = (m-r)! (n-r)! / (n! m!)
               * sum_{k=0}^{r} (-1)^k C(r, k)
                 * d^r f / dX^(r-k) dZ^k  *  d^r g / dX^k dZ^(r-k)

The result is a form of degree n + m - 2r.  Every covariant and invariant in
:mod:`seacurves.invariants` is a composition of this single operation with
form products.

The inner loops run on raw backend rationals whenever both inputs are
rational (the overwhelmingly common case); quadratic-extension coefficients
take the generic Scalar path.
"""

from __future__ import annotations

from math import comb, factorial

from .forms import BinaryForm
from .scalars import Scalar, _R0, _raw, _RAT

__all__ = ["transvect", "TransvectionError"]


class TransvectionError(ValueError):
    """r exceeds the degree of one of the operands (or is negative)."""


def _falling(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


def _partial_rows_raw(coeffs, n: int, r: int):
    """Row k = coefficients of d^r f / dX^(r-k) dZ^k over the raw rationals."""
    rows = []
    for k in range(r + 1):
        p = r - k
        row = []
        for i in range(n - r + 1):
            mult = _falling(i + p, p) * _falling(n - i - p, k)
            row.append(coeffs[i + p] * mult if mult else _R0)
        rows.append(row)
    return rows


def transvect(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """The r-transvection (f, g)^r, exact."""
    n, m = f.degree, g.degree
    if r < 0 or r > min(n, m):
        raise TransvectionError(
            f"transvection order {r} out of range for degrees ({n}, {m})"
        )
    deg = n + m - 2 * r
    pref_num = factorial(m - r) * factorial(n - r)
    pref_den = factorial(n) * factorial(m)

    rational_inputs = all(c.disc == 0 for c in f.coeffs) and all(
        c.disc == 0 for c in g.coeffs
    )
    if rational_inputs:
        fa = [c.a for c in f.coeffs]
        ga = [c.a for c in g.coeffs]
        tf = _partial_rows_raw(fa, n, r)
        tg = _partial_rows_raw(ga, m, r)
        acc = [_R0] * (deg + 1)
        for k in range(r + 1):
            sign_binom = comb(r, k) if k % 2 == 0 else -comb(r, k)
            left = tf[k]
            right = tg[r - k]
            for i, ai in enumerate(left):
                if ai == 0:
                    continue
                sai = ai * sign_binom
                for j, bj in enumerate(right):
                    if bj != 0:
                        acc[i + j] += sai * bj
        pref = _RAT(pref_num, pref_den)
        return BinaryForm(deg, [_raw(pref * c, _R0, 0) for c in acc])

    # Generic path over Scalar (quadratic-extension coefficients present).
    tf = [_partial_scalar(f, r, k) for k in range(r + 1)]
    tg = [_partial_scalar(g, r, k) for k in range(r + 1)]
    acc_s = [Scalar(0)] * (deg + 1)
    for k in range(r + 1):
        sign_binom = comb(r, k) if k % 2 == 0 else -comb(r, k)
        left = tf[k]
        right = tg[r - k]
        for i, ai in enumerate(left):
            if ai.is_zero:
                continue
            sai = sign_binom * ai
            for j, bj in enumerate(right):
                if not bj.is_zero:
                    acc_s[i + j] = acc_s[i + j] + sai * bj
    pref_s = Scalar(_RAT(pref_num, pref_den))
    return BinaryForm(deg, [pref_s * c for c in acc_s])


def _partial_scalar(f: BinaryForm, r: int, k: int):
    p = r - k
    n = f.degree
    return [
        f.coeffs[i + p] * (_falling(i + p, p) * _falling(n - i - p, k))
        for i in range(n - r + 1)
    ]
