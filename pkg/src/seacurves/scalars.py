"""Exact scalar arithmetic over Q and quadratic extensions Q(sqrt(D)).

Every coefficient in this package is a :class:`Scalar`: a value ``a + b*sqrt(D)``
with ``a``, ``b`` rational and ``D`` a squarefree integer.  ``D == 0`` (forced
whenever ``b == 0``) marks a plain rational.  Arithmetic never rounds; the
representation is canonical, so ``==`` is exact value equality.

Scalars of different nonzero discriminants must not be mixed; doing so raises
:class:`FieldMixError` rather than silently coercing.

The rational backend is ``gmpy2.mpq`` when available (several times faster on
the big integers that transvectant chains produce) and ``fractions.Fraction``
otherwise.
"""

from __future__ import annotations

import re
from fractions import Fraction

try:  # pragma: no cover - exercised implicitly by whichever env runs the suite
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover
    _RAT = Fraction

_RAT_TYPE = type(_RAT(0))
_R0 = _RAT(0)
_R1 = _RAT(1)

__all__ = [
    "Scalar",
    "FieldMixError",
    "ScalarParseError",
    "ZERO",
    "ONE",
    "rational",
    "sqrt_ext",
    "parse_scalar",
]


class FieldMixError(ValueError):
    """Raised when scalars from distinct quadratic extensions meet."""


class ScalarParseError(ValueError):
    """Raised on malformed scalar strings."""


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 2
    return True


def _as_rat(x):
    if isinstance(x, _RAT_TYPE):
        return x
    if isinstance(x, (int, Fraction)):
        return _RAT(x)
    if isinstance(x, str):
        return _RAT(Fraction(x))
    if isinstance(x, Scalar) and x.disc == 0:
        return x.a
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Scalar:
    """An element a + b*sqrt(disc) of Q or Q(sqrt(disc)), immutable.

    ``disc`` is 0 exactly when the value is rational (``b == 0``); otherwise it
    is a squarefree integer other than 1.  Two scalars are equal iff their
    canonical components are equal.
    """

    __slots__ = ("a", "b", "disc")

    def __init__(self, a, b=0, disc: int = 0):
        a = _as_rat(a)
        b = _as_rat(b)
        if b == 0:
            disc = 0
        elif disc in (0, 1) or not _is_squarefree(disc):
            raise ValueError(f"discriminant must be squarefree and != 0, 1, got {disc}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "disc", disc)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- field bookkeeping ---------------------------------------------------

    def _join_disc(self, other: Scalar) -> int:
        d1, d2 = self.disc, other.disc
        if d1 == 0:
            return d2
        if d2 == 0 or d1 == d2:
            return d1
        raise FieldMixError(f"cannot mix sqrt({d1}) and sqrt({d2}) scalars")

    @property
    def is_rational(self) -> bool:
        return self.disc == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.disc == 0 and other.disc == 0:
            return _raw(self.a + other.a, _R0, 0)
        d = self._join_disc(other)
        return _raw(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return _raw(-self.a, -self.b, self.disc)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.disc == 0 and other.disc == 0:
            return _raw(self.a - other.a, _R0, 0)
        d = self._join_disc(other)
        return _raw(self.a - other.a, self.b - other.b, d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.disc == 0 and other.disc == 0:
            return _raw(self.a * other.a, _R0, 0)
        d = self._join_disc(other)
        # (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 D + (a1 b2 + a2 b1) s
        return _raw(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero:
            raise ZeroDivisionError("scalar division by zero")
        if self.disc == 0:
            return _raw(_R1 / self.a, _R0, 0)
        # 1/(a + b s) = (a - b s)/(a^2 - b^2 D); the norm is nonzero because
        # D is not a rational square.
        norm = self.a * self.a - self.b * self.b * self.disc
        return _raw(self.a / norm, -self.b / norm, self.disc)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.disc == other.disc

    def __hash__(self):
        if self.disc == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.disc))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- presentation ------------------------------------------------------------

    def __str__(self):
        if self.disc == 0:
            return str(self.a)
        radical = f"sqrt({self.disc})"
        b = self.b
        bpart = radical if b == 1 else (f"-{radical}" if b == -1 else f"{b}*{radical}")
        if self.a == 0:
            return bpart
        sep = "" if bpart.startswith("-") else "+"
        return f"{self.a}{sep}{bpart}"

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def to_fraction(self) -> Fraction:
        """The value as a Fraction; rational scalars only."""
        if self.disc != 0:
            raise ValueError(f"{self} is not rational")
        return Fraction(int(self.a.numerator), int(self.a.denominator))

    def to_complex(self) -> complex:
        """Floating approximation; the cross-check oracles use this, never the core."""
        val = complex(self.a.numerator / self.a.denominator)
        if self.disc != 0:
            root = complex(self.disc) ** 0.5
            val += (self.b.numerator / self.b.denominator) * root
        return val


def _raw(a, b, disc: int) -> Scalar:
    # Internal constructor: components are already backend rationals and disc
    # was validated upstream; only the b == 0 canonicalization is re-applied.
    s = Scalar.__new__(Scalar)
    object.__setattr__(s, "a", a)
    if b == 0:
        object.__setattr__(s, "b", _R0)
        object.__setattr__(s, "disc", 0)
    else:
        object.__setattr__(s, "b", b)
        object.__setattr__(s, "disc", disc)
    return s


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, _RAT_TYPE, Fraction)):
        return _raw(_as_rat(x), _R0, 0)
    return NotImplemented


ZERO = Scalar(0)
ONE = Scalar(1)


def rational(p, q=None) -> Scalar:
    """Scalar p/q (q defaults to 1)."""
    if q is None:
        return Scalar(p)
    return Scalar(_as_rat(p) / _as_rat(q))


def sqrt_ext(b, disc: int) -> Scalar:
    """Scalar b*sqrt(disc)."""
    return Scalar(0, b, disc)


_SQRT_RE = re.compile(r"sqrt\((-?\d+)\)")
_RATIONAL_RE = re.compile(r"^\d+(/\d+)?$")


def parse_scalar(text: str) -> Scalar:
    """Parse "p/q", "p/q+r/s*sqrt(D)", "sqrt(-3)", "-2*sqrt(5)", etc.

    Whitespace-insensitive; inverse of :meth:`Scalar.__str__`.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ScalarParseError("empty scalar")
    parts = []
    start = 0
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and s[i - 1] not in "+-*/(":
            parts.append(s[start:i])
            start = i
    parts.append(s[start:])
    if len(parts) > 2:
        raise ScalarParseError(f"too many terms in scalar {text!r}")

    a = _R0
    b = _R0
    disc = 0
    for part in parts:
        sign = 1
        while part and part[0] in "+-":
            if part[0] == "-":
                sign = -sign
            part = part[1:]
        if not part:
            raise ScalarParseError(f"dangling sign in {text!r}")
        m = _SQRT_RE.search(part)
        if m:
            d = int(m.group(1))
            if disc and d != disc:
                raise ScalarParseError(f"two different radicals in {text!r}")
            coeff_txt = part[: m.start()].rstrip("*")
            if part[m.end():]:
                raise ScalarParseError(f"unexpected trailing text in {text!r}")
            coeff = _R1 if not coeff_txt else _parse_rat(coeff_txt, text)
            b += sign * coeff
            disc = d
        else:
            a += sign * _parse_rat(part, text)
    try:
        return Scalar(a, b, disc)
    except ValueError as exc:
        raise ScalarParseError(str(exc)) from None


def _parse_rat(part: str, whole: str):
    if not _RATIONAL_RE.match(part):
        raise ScalarParseError(f"bad rational {part!r} in {whole!r}")
    num, _, den = part.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {whole!r}")
    return _RAT(int(num), int(den)) if den else _RAT(int(num))
