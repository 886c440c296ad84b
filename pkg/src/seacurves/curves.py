"""Superelliptic curves y^n = f(x): genus, Hurwitz bound, ramification.

The Riemann-Hurwitz helpers work with the full automorphism group order
(written ``group_order`` everywhere, since the source convention overloads a
single letter for both the covering degree and the group order).  Signatures
may be printed with their last entry omitted; :func:`complete_signature`
restores it when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .forms import UnivariatePoly, discriminant

__all__ = [
    "ReducedGroup",
    "Signature",
    "SuperellipticCurve",
    "CompletionResult",
    "NotSquarefreeError",
    "make_curve",
    "genus_formula",
    "hurwitz_bound",
    "rh_residual",
    "complete_signature",
    "full_group_order",
]


class NotSquarefreeError(ValueError):
    """f has a repeated root, so y^n = f(x) is not a smooth model."""


_REDUCED_ORDERS = {"A4": 12, "S4": 24, "A5": 60}
REDUCED_KINDS = ("Cm", "D2m", "A4", "S4", "A5")


@dataclass(frozen=True)
class ReducedGroup:
    """A finite subgroup of PGL2: C_m, D_2m (order 2m), A4, S4 or A5."""

    kind: str
    m: int | None = None

    def __post_init__(self):
        if self.kind not in REDUCED_KINDS:
            raise ValueError(f"unknown reduced group kind {self.kind!r}")
        if self.kind in ("Cm", "D2m"):
            if self.m is None or self.m < 1:
                raise ValueError(f"{self.kind} needs a positive parameter m")
        elif self.m is not None:
            raise ValueError(f"{self.kind} takes no parameter m")

    @property
    def order(self) -> int:
        if self.kind == "Cm":
            return self.m
        if self.kind == "D2m":
            return 2 * self.m
        return _REDUCED_ORDERS[self.kind]

    def label(self) -> str:
        if self.kind == "Cm":
            return f"C_{self.m}"
        if self.kind == "D2m":
            return f"D_{2 * self.m}"
        return {"A4": "A_4", "S4": "S_4", "A5": "A_5"}[self.kind]


class Signature:
    """A multiset of branch indices, kept as sorted (index, multiplicity) pairs.

    ``complete`` records whether this is the printed data (possibly missing
    its final entry) or a completed signature.
    """

    __slots__ = ("pairs", "complete")

    def __init__(self, indices, complete: bool = False):
        counts: dict[int, int] = {}
        for item in indices:
            if isinstance(item, (tuple, list)):
                e, mult = item
            else:
                e, mult = item, 1
            e = int(e)
            mult = int(mult)
            if e < 2:
                raise ValueError(f"branch index must be >= 2, got {e}")
            if mult < 1:
                raise ValueError(f"multiplicity must be >= 1, got {mult}")
            counts[e] = counts.get(e, 0) + mult
        object.__setattr__(self, "pairs", tuple(sorted(counts.items())))
        object.__setattr__(self, "complete", bool(complete))

    def __setattr__(self, name, value):
        raise AttributeError("Signature is immutable")

    def expand(self) -> tuple[int, ...]:
        out = []
        for e, mult in self.pairs:
            out.extend([e] * mult)
        return tuple(out)

    @property
    def point_count(self) -> int:
        return sum(mult for _, mult in self.pairs)

    def with_index(self, e: int) -> Signature:
        return Signature(self.pairs + ((e, 1),), complete=True)

    def marked_complete(self) -> Signature:
        return Signature(self.pairs, complete=True)

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self.pairs == other.pairs and self.complete == other.complete

    def __hash__(self):
        return hash((self.pairs, self.complete))

    def compact(self) -> str:
        bits = []
        for e, mult in self.pairs:
            bits.append(f"{e}^{mult}" if mult > 1 else str(e))
        return ",".join(bits)

    def to_json(self) -> dict:
        return {"indices": [[e, mult] for e, mult in self.pairs],
                "complete": self.complete}

    @classmethod
    def from_json(cls, doc: dict) -> Signature:
        return cls(doc["indices"], complete=doc.get("complete", False))

    def __repr__(self):
        tag = "complete" if self.complete else "as-printed"
        return f"Signature({self.compact()}; {tag})"


def genus_formula(n: int, d: int) -> int:
    """Genus of y^n = f(x) with deg f = d and f squarefree:
    (n(d-1) - d - gcd(n, d))/2 + 1.

    When gcd(n, d) = 1 this equals (n-1)(d-1)/2; the two closed forms agree
    wherever both apply.
    """
    if n < 2 or d < 2:
        raise ValueError(f"need n >= 2 and d >= 2, got n={n}, d={d}")
    num = n * (d - 1) - d - gcd(n, d)
    return num // 2 + 1


def hurwitz_bound(g: int) -> int:
    """84(g - 1), the automorphism-count bound for genus g >= 2."""
    if g < 2:
        raise ValueError(f"Hurwitz bound needs genus >= 2, got {g}")
    return 84 * (g - 1)


def rh_residual(g: int, group_order: int, sig: Signature,
                quotient_genus: int = 0) -> Fraction:
    """(2/|G|)(g-1) - [2g' - 2 + sum(1 - 1/e)] as an exact rational.

    Zero means the data satisfies Riemann-Hurwitz.  Every index must divide
    the group order.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    for e, _ in sig.pairs:
        if group_order % e:
            raise ValueError(f"index {e} does not divide group order {group_order}")
    lhs = Fraction(2 * (g - 1), group_order)
    rhs = Fraction(2 * quotient_genus - 2)
    for e, mult in sig.pairs:
        rhs += mult * (1 - Fraction(1, e))
    return lhs - rhs


@dataclass(frozen=True)
class CompletionResult:
    status: str                     # "already_complete" | "completed" | "failed"
    signature: Signature | None     # completed signature when status != failed
    added_index: int | None = None

    @property
    def ok(self) -> bool:
        return self.status != "failed"


def complete_signature(g: int, group_order: int, printed: Signature,
                       quotient_genus: int = 0) -> CompletionResult:
    """Restore the omitted final branch index, if any.

    If the printed signature already has residual 0 it is returned unchanged
    (marked complete).  Otherwise the unique candidate e with
    residual = 1 - 1/e is computed in closed form and accepted when it is an
    integer >= 2 dividing the group order; since 1 - 1/e is strictly
    monotone in e, a single omitted entry can never be ambiguous.
    """
    res = rh_residual(g, group_order, printed, quotient_genus)
    if res == 0:
        return CompletionResult("already_complete", printed.marked_complete())
    if res >= 1 or res <= 0:
        return CompletionResult("failed", None)
    e = 1 / (1 - res)
    if e.denominator != 1:
        return CompletionResult("failed", None)
    e = int(e)
    if e < 2 or group_order % e:
        return CompletionResult("failed", None)
    return CompletionResult("completed", printed.with_index(e), added_index=e)


def full_group_order(n: int, reduced: ReducedGroup) -> int:
    """|G| = n * |reduced|, the order of the full automorphism group."""
    if n < 2:
        raise ValueError(f"level must be >= 2, got {n}")
    return n * reduced.order


class SuperellipticCurve:
    """y^n = f(x) with f squarefree; genus is computed on construction."""

    __slots__ = ("n", "f", "genus")

    def __init__(self, n: int, f: UnivariatePoly):
        if n < 2:
            raise ValueError(f"level must be >= 2, got {n}")
        if f.degree < 2:
            raise ValueError(f"need deg f >= 2, got {f.degree}")
        if discriminant(f).is_zero:
            raise NotSquarefreeError("f has a repeated root (discriminant = 0)")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "genus", genus_formula(n, f.degree))

    def __setattr__(self, name, value):
        raise AttributeError("SuperellipticCurve is immutable")

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def is_low_genus(self) -> bool:
        """Genus below 2: legal to build, but outside the catalog's range."""
        return self.genus < 2

    def __eq__(self, other):
        if not isinstance(other, SuperellipticCurve):
            return NotImplemented
        return self.n == other.n and self.f == other.f

    def __hash__(self):
        return hash((self.n, self.f))

    def to_json(self) -> dict:
        from .catalog.templates import poly_to_string

        return {"n": self.n, "f": poly_to_string(self.f), "genus": self.genus}

    def __repr__(self):
        return f"SuperellipticCurve(y^{self.n} = {self.f!r}, genus {self.genus})"


def make_curve(n: int, f: UnivariatePoly) -> SuperellipticCurve:
    """Validated construction of y^n = f(x)."""
    return SuperellipticCurve(n, f)
