"""Binary forms, univariate polynomials and exact GL2 substitution.

A :class:`BinaryForm` of degree d is F(X, Z) = sum a_i X^i Z^(d-i) with the
coefficients stored ascending in the X-power (a_0 .. a_d).  Forms keep their
declared degree even when leading coefficients vanish; the all-zero form is a
legal value of any degree.

All coefficient arithmetic happens in :class:`~seacurves.scalars.Scalar`; no
operation here ever touches floating point.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, FieldMixError, Scalar, parse_scalar

__all__ = [
    "BinaryForm",
    "UnivariatePoly",
    "Matrix2",
    "DegreeError",
    "SingularMatrixError",
    "make_form",
    "form_add",
    "form_mul",
    "partial_derivative",
    "moebius_act",
    "evaluate",
    "homogenize",
    "dehomogenize",
    "resultant",
    "discriminant",
    "is_squarefree",
    "poly_gcd",
]


class DegreeError(ValueError):
    """Degree preconditions violated (wrong length, mismatch, too small)."""


class SingularMatrixError(ValueError):
    """Substitution by a matrix with zero determinant."""


def _scal(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def _join_coeff_field(coeffs: Iterable[Scalar]) -> int:
    disc = 0
    for c in coeffs:
        if c.disc:
            if disc and c.disc != disc:
                raise FieldMixError(
                    f"cannot mix sqrt({disc}) and sqrt({c.disc}) coefficients"
                )
            disc = c.disc
    return disc


class BinaryForm:
    """Homogeneous bivariate polynomial of a fixed degree."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence):
        if degree < 0:
            raise DegreeError("degree must be nonnegative")
        cs = tuple(_scal(c) for c in coeffs)
        if len(cs) != degree + 1:
            raise DegreeError(
                f"degree {degree} needs {degree + 1} coefficients, got {len(cs)}"
            )
        _join_coeff_field(cs)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    @classmethod
    def zero(cls, degree: int) -> BinaryForm:
        return cls(degree, (ZERO,) * (degree + 1))

    @classmethod
    def from_descending(cls, degree: int, coeffs: Sequence) -> BinaryForm:
        """Build from the descending convention a_0 X^d + a_1 X^(d-1) Z + ..."""
        return cls(degree, tuple(reversed([_scal(c) for c in coeffs])))

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other: BinaryForm) -> BinaryForm:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        return self + (-other)

    def __neg__(self) -> BinaryForm:
        return BinaryForm(self.degree, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            deg = self.degree + other.degree
            out = [ZERO] * (deg + 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
            return BinaryForm(deg, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> BinaryForm:
        c = _scal(c)
        return BinaryForm(self.degree, [c * a for a in self.coeffs])

    def __pow__(self, n: int) -> BinaryForm:
        if n < 0:
            raise ValueError("forms only take nonnegative powers")
        result = BinaryForm(0, (ONE,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def binomial_coefficients(self) -> tuple[Scalar, ...]:
        """The normalized b_i with a_i = C(d, i) b_i, i.e. b_i = (d-i)! i!/d! a_i."""
        from math import comb

        return tuple(a / comb(self.degree, i) for i, a in enumerate(self.coeffs))

    def constant_value(self) -> Scalar:
        """The scalar value of a degree-0 form."""
        if self.degree != 0:
            raise DegreeError(f"form has degree {self.degree}, not 0")
        return self.coeffs[0]

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> BinaryForm:
        return cls(doc["degree"], [parse_scalar(c) for c in doc["coeffs"]])

    def __repr__(self):
        terms = []
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            mono = "".join(
                (f"X^{i}" if i > 1 else "X" if i == 1 else "",
                 f"Z^{d - i}" if d - i > 1 else "Z" if d - i == 1 else "")
            )
            cs = str(c)
            if mono and cs == "1":
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}{'*' if mono else ''}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"BinaryForm<{d}>({body})"


def make_form(degree: int, coeffs: Sequence) -> BinaryForm:
    """The form sum a_i X^i Z^(degree-i); rejects wrong-length input."""
    return BinaryForm(degree, coeffs)


def form_add(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    return f + g


def form_mul(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    return f * g


def partial_derivative(f: BinaryForm, var: str, order: int = 1) -> BinaryForm:
    """Iterated exact formal partial derivative in "X" or "Z".

    The degree drops by ``order``; differentiating past the degree gives the
    zero form of degree 0.
    """
    if var not in ("X", "Z"):
        raise ValueError(f"var must be 'X' or 'Z', got {var!r}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order > f.degree:
        return BinaryForm.zero(0)
    coeffs = f.coeffs
    d = f.degree
    for _ in range(order):
        if var == "X":
            coeffs = tuple(i * coeffs[i] for i in range(1, d + 1))
        else:
            coeffs = tuple((d - i) * coeffs[i] for i in range(d))
        d -= 1
    return BinaryForm(d, coeffs)


def evaluate(f: BinaryForm, x, z) -> Scalar:
    """Exact value F(x, z)."""
    x = _scal(x)
    z = _scal(z)
    acc = ZERO
    xp = ONE
    zpows = [ONE]
    for _ in range(f.degree):
        zpows.append(zpows[-1] * z)
    for i, c in enumerate(f.coeffs):
        if not c.is_zero:
            acc = acc + c * xp * zpows[f.degree - i]
        if i < f.degree:
            xp = xp * x
    return acc


class Matrix2:
    """2x2 matrix over Scalar, acting on (X, Z) by substitution."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", _scal(a))
        object.__setattr__(self, "b", _scal(b))
        object.__setattr__(self, "c", _scal(c))
        object.__setattr__(self, "d", _scal(d))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix2 is immutable")

    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Matrix2) -> Matrix2:
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"Matrix2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def moebius_act(M: Matrix2, f: BinaryForm) -> BinaryForm:
    """Substituted form f(aX + bZ, cX + dZ); requires det(M) != 0.

    Composition order: acting by M then by N equals acting by N @ M once,
    matching the contravariance of substitution actions.
    """
    if M.det().is_zero:
        raise SingularMatrixError("substitution matrix must be invertible")
    d = f.degree
    # pow1[i] = (aX + bZ)^i, pow2[j] = (cX + dZ)^j as coefficient lists.
    lin1 = BinaryForm(1, (M.b, M.a))   # coeff of X is a, of Z is b
    lin2 = BinaryForm(1, (M.d, M.c))
    pow1 = [BinaryForm(0, (ONE,))]
    pow2 = [BinaryForm(0, (ONE,))]
    for i in range(d):
        pow1.append(pow1[-1] * lin1)
        pow2.append(pow2[-1] * lin2)
    acc = BinaryForm.zero(d)
    for i, c in enumerate(f.coeffs):
        if not c.is_zero:
            acc = acc + (pow1[i] * pow2[d - i]).scale(c)
    return acc


class UnivariatePoly:
    """Dense univariate polynomial over Scalar, ascending coefficients.

    Trailing zeros are stripped; the zero polynomial has an empty coefficient
    tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [_scal(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        _join_coeff_field(cs)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UnivariatePoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: UnivariatePoly) -> UnivariatePoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UnivariatePoly(out)

    def __neg__(self) -> UnivariatePoly:
        return UnivariatePoly([-c for c in self.coeffs])

    def __sub__(self, other: UnivariatePoly) -> UnivariatePoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UnivariatePoly):
            if self.is_zero or other.is_zero:
                return UnivariatePoly(())
            out = [ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
            return UnivariatePoly(out)
        return UnivariatePoly([_scal(other) * c for c in self.coeffs])

    __rmul__ = __mul__

    def derivative(self) -> UnivariatePoly:
        return UnivariatePoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x) -> Scalar:
        x = _scal(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> UnivariatePoly:
        if self.is_zero:
            return self
        lc = self.leading()
        return UnivariatePoly([c / lc for c in self.coeffs])

    def __repr__(self):
        if self.is_zero:
            return "UnivariatePoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            mono = "x" if i == 1 else (f"x^{i}" if i > 1 else "")
            cs = str(c)
            if mono and cs == "1":
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}{'*' if mono else ''}{mono}")
        return "UnivariatePoly(" + " + ".join(terms).replace("+ -", "- ") + ")"


def homogenize(p: UnivariatePoly, degree: int) -> BinaryForm:
    """sum c_i x^i -> sum c_i X^i Z^(degree-i); requires degree >= deg p."""
    if degree < p.degree:
        raise DegreeError(f"cannot homogenize degree-{p.degree} poly at degree {degree}")
    cs = list(p.coeffs) + [ZERO] * (degree + 1 - len(p.coeffs))
    return BinaryForm(degree, cs)


def dehomogenize(f: BinaryForm) -> UnivariatePoly:
    """Set Z = 1."""
    return UnivariatePoly(f.coeffs)


def _det(rows: list[list[Scalar]]) -> Scalar:
    """Exact determinant by Gaussian elimination with nonzero pivoting."""
    n = len(rows)
    if n == 0:
        return ONE
    m = [list(r) for r in rows]
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if not m[r][col].is_zero), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        inv = pv.inverse()
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor.is_zero:
                continue
            for c in range(col, n):
                m[r][c] = m[r][c] - factor * m[col][c]
    return det


def resultant(p: UnivariatePoly, q: UnivariatePoly) -> Scalar:
    """Determinant of the Sylvester matrix, rows of p (descending) first."""
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        return ONE
    pd = list(reversed(p.coeffs))
    qd = list(reversed(q.coeffs))
    rows = []
    for shift in range(n):
        rows.append([ZERO] * shift + pd + [ZERO] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([ZERO] * shift + qd + [ZERO] * (size - shift - n - 1))
    return _det(rows)


def discriminant(p: UnivariatePoly) -> Scalar:
    """(-1)^(d(d-1)/2) * res(p, p') / lc(p); requires deg p >= 1."""
    d = p.degree
    if d < 1:
        raise DegreeError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    dp = p.derivative()
    if dp.is_zero:
        return ZERO
    return sign * resultant(p, dp) / p.leading()


def is_squarefree(p: UnivariatePoly) -> bool:
    """True iff p has no repeated root (discriminant nonzero)."""
    return not discriminant(p).is_zero


def poly_gcd(p: UnivariatePoly, q: UnivariatePoly) -> UnivariatePoly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, _poly_mod(a, b)
    return a.monic()


def _poly_mod(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    out = list(a.coeffs)
    bl = b.leading()
    bd = b.degree
    while len(out) - 1 >= bd and out:
        if out[-1].is_zero:
            out.pop()
            continue
        factor = out[-1] / bl
        shift = len(out) - 1 - bd
        for i, c in enumerate(b.coeffs):
            out[shift + i] = out[shift + i] - factor * c
        out.pop()
    return UnivariatePoly(out)
