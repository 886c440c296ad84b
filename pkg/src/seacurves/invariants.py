"""Invariant and covariant systems of binary forms built from transvectants.

Four systems are provided, each as a chain of transvections applied exactly
as defined, with the transvection-order bookkeeping re-checked on every
invocation:

* sextics (degree 6): J2, J4, J6, J10 and absolute invariants t1..t3,
* octavics (degree 8): J2..J10 with their integer prefactors and t1..t6,
* decimics (degree 10): J2, J4, A6, C6, J8, J9, J10, J14, A14,
* general even degree d >= 6: I2, I3, I4, I4', I6, I6', I6*, I12 over the
  covariants J_{4j} = (F, F)^(d-2j), with per-entry degree availability,
* the degree-22 special quantities I6*_g10, S, I12* and v5, defined only
  when I12 vanishes.

Absolute invariants are ratios; a ratio whose denominator vanishes is
*undefined* (a first-class state, never an exception and never zero), and a
ratio whose ingredients do not exist at the given degree is *unavailable*.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import BinaryForm, DegreeError, dehomogenize, discriminant
from .scalars import Scalar, rational
from .transvection import transvect

__all__ = [
    "InvariantVector",
    "AbsoluteInvariants",
    "Genus10Result",
    "OrderBookkeepingError",
    "InconclusiveError",
    "Genus10CaseError",
    "form_is_squarefree",
    "sextic_invariants",
    "sextic_absolute",
    "genus2_isomorphic",
    "octavic_invariants",
    "octavic_absolute",
    "genus3_isomorphic",
    "decimic_invariants",
    "general_invariants",
    "general_absolute",
    "genus10_special",
    "SEXTIC_NAMES",
    "OCTAVIC_NAMES",
    "DECIMIC_NAMES",
    "GENERAL_NAMES",
]


class OrderBookkeepingError(RuntimeError):
    """An intermediate covariant came out with the wrong order: internal bug."""


class InconclusiveError(ValueError):
    """The isomorphism criterion's hypotheses fail; no verdict is possible."""


class Genus10CaseError(ValueError):
    """The degree-22 special invariants are defined only when I12 = 0."""


SEXTIC_NAMES = ("J2", "J4", "J6", "J10")
OCTAVIC_NAMES = ("J2", "J3", "J4", "J5", "J6", "J7", "J8", "J9", "J10")
DECIMIC_NAMES = ("J2", "J4", "A6", "C6", "J8", "J9", "J10", "J14", "A14", "J14_plus_A14")
GENERAL_NAMES = ("I2", "I3", "I4", "I4p", "I6", "I6p", "I6star", "I12")


def _expect_order(form: BinaryForm, order: int, what: str) -> BinaryForm:
    if form.degree != order:
        raise OrderBookkeepingError(
            f"{what} has order {form.degree}, expected {order}"
        )
    return form


def _inv(form: BinaryForm, what: str) -> Scalar:
    return _expect_order(form, 0, what).constant_value()


class InvariantVector:
    """Named invariant values of one system, with degree metadata and the
    intermediate covariants that produced them."""

    def __init__(self, kind, entries, covariants, unavailable=()):
        # entries: iterable of (name, value, coefficient-degree, definition)
        self.kind = kind
        self._entries = {name: (value, degree, definition)
                         for name, value, degree, definition in entries}
        self.covariants = dict(covariants)
        self.unavailable = frozenset(unavailable)

    def names(self):
        return tuple(self._entries)

    def available(self, name: str) -> bool:
        return name in self._entries

    def __getitem__(self, name: str) -> Scalar:
        if name in self.unavailable:
            raise KeyError(f"{name} is unavailable for this degree")
        return self._entries[name][0]

    def degree_of(self, name: str) -> int:
        return self._entries[name][1]

    def definition_of(self, name: str) -> str:
        return self._entries[name][2]

    def scalars(self) -> dict:
        return {name: v[0] for name, v in self._entries.items()}

    def items(self):
        return [(name, v[0]) for name, v in self._entries.items()]

    def __eq__(self, other):
        if not isinstance(other, InvariantVector):
            return NotImplemented
        return self.kind == other.kind and self.scalars() == other.scalars()

    def __repr__(self):
        vals = ", ".join(f"{n}={v[0]}" for n, v in self._entries.items())
        return f"InvariantVector[{self.kind}]({vals})"


class AbsoluteInvariants:
    """Ratios of invariants; entries are defined, undefined (zero
    denominator) or unavailable (ingredients missing at this degree)."""

    def __init__(self, kind, names, values, undefined=(), unavailable=()):
        self.kind = kind
        self.names = tuple(names)
        self._values = dict(values)
        self.undefined = frozenset(undefined)
        self.unavailable = frozenset(unavailable)

    def defined(self, name: str) -> bool:
        return name in self._values

    def __getitem__(self, name: str) -> Scalar:
        if name in self._values:
            return self._values[name]
        if name in self.undefined:
            raise KeyError(f"{name} is undefined (denominator vanished)")
        if name in self.unavailable:
            raise KeyError(f"{name} is unavailable for this degree")
        raise KeyError(name)

    def get(self, name: str):
        return self._values.get(name)

    def defined_items(self):
        return [(name, self._values[name]) for name in self.names if name in self._values]

    def __eq__(self, other):
        if not isinstance(other, AbsoluteInvariants):
            return NotImplemented
        return (
            self.kind == other.kind
            and self._values == other._values
            and self.undefined == other.undefined
            and self.unavailable == other.unavailable
        )

    def __repr__(self):
        bits = []
        for name in self.names:
            if name in self._values:
                bits.append(f"{name}={self._values[name]}")
            elif name in self.undefined:
                bits.append(f"{name}=undefined")
            else:
                bits.append(f"{name}=unavailable")
        return f"AbsoluteInvariants[{self.kind}](" + ", ".join(bits) + ")"


def _ratios(kind, names, parts, available=None):
    """Build AbsoluteInvariants from name -> (numerator, denominator) pairs.

    ``available``, when given, maps a name to False to mark it unavailable.
    """
    values = {}
    undefined = set()
    unavailable = set()
    for name in names:
        if available is not None and not available.get(name, True):
            unavailable.add(name)
            continue
        num, den = parts[name]
        if den.is_zero:
            undefined.add(name)
        else:
            values[name] = num / den
    return AbsoluteInvariants(kind, names, values, undefined, unavailable)


def _require_degree(f: BinaryForm, d: int):
    if f.degree != d:
        raise DegreeError(f"expected a degree-{d} form, got degree {f.degree}")


def form_is_squarefree(f: BinaryForm) -> bool:
    """No repeated projective root (the root at [1:0] included)."""
    if f.is_zero:
        return False
    d = f.degree
    if d <= 1:
        return True
    if f.coeffs[d].is_zero and f.coeffs[d - 1].is_zero:
        return False  # [1:0] is at least a double root
    p = dehomogenize(f)
    if p.degree < 1:
        return False  # pure power of Z beyond the checks above cannot happen
    return not discriminant(p).is_zero


# ---------------------------------------------------------------------------
# sextics
# ---------------------------------------------------------------------------

def sextic_invariants(f: BinaryForm) -> InvariantVector:
    """J2, J4, J6, J10 of a binary sextic.

    Covariant chain: H = (f,f)^2, i = (f,f)^4, l = (i,f)^4; then
    J2 = (f,f)^6, J4 = (i,i)^4, J6 = (l,l)^2, J10 = (f, l^3)^6.
    """
    _require_degree(f, 6)
    H = _expect_order(transvect(f, f, 2), 8, "H")
    i = _expect_order(transvect(f, f, 4), 4, "i")
    l = _expect_order(transvect(i, f, 4), 2, "l")
    J2 = _inv(transvect(f, f, 6), "J2")
    J4 = _inv(transvect(i, i, 4), "J4")
    J6 = _inv(transvect(l, l, 2), "J6")
    J10 = _inv(transvect(f, l ** 3, 6), "J10")
    return InvariantVector(
        "sextic",
        [
            ("J2", J2, 2, "(f,f)^6"),
            ("J4", J4, 4, "(i,i)^4"),
            ("J6", J6, 6, "(l,l)^2"),
            ("J10", J10, 10, "(f,l^3)^6"),
        ],
        {"H": H, "i": i, "l": l},
    )


def sextic_absolute(f) -> AbsoluteInvariants:
    """t1 = J2^5/J10, t2 = J2^3*J4/J10, t3 = J2^2*J6/J10."""
    v = f if isinstance(f, InvariantVector) else sextic_invariants(f)
    J2, J4, J6, J10 = v["J2"], v["J4"], v["J6"], v["J10"]
    return _ratios(
        "sextic",
        ("t1", "t2", "t3"),
        {
            "t1": (J2 ** 5, J10),
            "t2": (J2 ** 3 * J4, J10),
            "t3": (J2 ** 2 * J6, J10),
        },
    )


def genus2_isomorphic(f1: BinaryForm, f2: BinaryForm) -> bool:
    """Equality of the sextic absolute invariants (t1, t2, t3).

    Both forms must be squarefree sextics with J10 != 0; otherwise the
    criterion does not apply and InconclusiveError is raised.
    """
    for label, f in (("first", f1), ("second", f2)):
        _require_degree(f, 6)
        if not form_is_squarefree(f):
            raise InconclusiveError(f"{label} sextic is not squarefree")
    a1 = sextic_absolute(f1)
    a2 = sextic_absolute(f2)
    if a1.undefined or a2.undefined:
        raise InconclusiveError("J10 vanishes; absolute invariants undefined")
    return all(a1[t] == a2[t] for t in ("t1", "t2", "t3"))


# ---------------------------------------------------------------------------
# octavics
# ---------------------------------------------------------------------------

_OCT_PREF = {
    "J2": rational(2 ** 2 * 5 * 7),
    "J3": rational(2 ** 4 * 5 ** 2 * 7 ** 3, 3),
    "J4": rational(2 ** 9 * 3 * 7 ** 4),
    "J5": rational(2 ** 9 * 5 * 7 ** 5),
    "J6": rational(2 ** 14 * 3 ** 2 * 7 ** 6),
    "J7": rational(2 ** 14 * 3 * 5 * 7 ** 7),
    "J8": rational(2 ** 17 * 3 * 5 ** 2 * 7 ** 9),
    "J9": rational(2 ** 19 * 3 ** 2 * 5 * 7 ** 9),
    "J10": rational(2 ** 22 * 3 ** 2 * 5 ** 2 * 7 ** 11),
}


def octavic_invariants(f: BinaryForm) -> InvariantVector:
    """J2..J10 of a binary octavic, with their exact rational prefactors."""
    _require_degree(f, 8)
    g = _expect_order(transvect(f, f, 4), 8, "g")
    k = _expect_order(transvect(f, f, 6), 4, "k")
    h = _expect_order(transvect(k, k, 2), 4, "h")
    m = _expect_order(transvect(f, k, 4), 4, "m")
    n = _expect_order(transvect(f, h, 4), 4, "n")
    p = _expect_order(transvect(g, k, 4), 4, "p")
    q = _expect_order(transvect(g, h, 4), 4, "q")
    raw = {
        "J2": (transvect(f, f, 8), "(f,f)^8"),
        "J3": (transvect(f, g, 8), "(f,g)^8"),
        "J4": (transvect(k, k, 4), "(k,k)^4"),
        "J5": (transvect(m, k, 4), "(m,k)^4"),
        "J6": (transvect(k, h, 4), "(k,h)^4"),
        "J7": (transvect(m, h, 4), "(m,h)^4"),
        "J8": (transvect(p, h, 4), "(p,h)^4"),
        "J9": (transvect(n, h, 4), "(n,h)^4"),
        "J10": (transvect(q, h, 4), "(q,h)^4"),
    }
    entries = []
    for idx, name in enumerate(OCTAVIC_NAMES):
        form, definition = raw[name]
        value = _OCT_PREF[name] * _inv(form, name)
        entries.append((name, value, idx + 2, f"{_OCT_PREF[name]}*{definition}"))
    return InvariantVector(
        "octavic", entries,
        {"g": g, "k": k, "h": h, "m": m, "n": n, "p": p, "q": q},
    )


def octavic_absolute(f) -> AbsoluteInvariants:
    """t1 = J3^2/J2^3, t2 = J4/J2^2, t3 = J5/(J2*J3), t4 = J6/(J2*J4),
    t5 = J7/(J2*J5), t6 = J8/J2^4."""
    v = f if isinstance(f, InvariantVector) else octavic_invariants(f)
    J = v.scalars()
    return _ratios(
        "octavic",
        ("t1", "t2", "t3", "t4", "t5", "t6"),
        {
            "t1": (J["J3"] ** 2, J["J2"] ** 3),
            "t2": (J["J4"], J["J2"] ** 2),
            "t3": (J["J5"], J["J2"] * J["J3"]),
            "t4": (J["J6"], J["J2"] * J["J4"]),
            "t5": (J["J7"], J["J2"] * J["J5"]),
            "t6": (J["J8"], J["J2"] ** 4),
        },
    )


def genus3_isomorphic(f1: BinaryForm, f2: BinaryForm) -> bool:
    """Equality of t1..t6 for octavics with J2, J3, J4, J5 all nonzero.

    When the hypothesis fails for either form the comparison is inconclusive
    (raises InconclusiveError), never true or false.
    """
    vs = []
    for label, f in (("first", f1), ("second", f2)):
        _require_degree(f, 8)
        v = octavic_invariants(f)
        bad = [n for n in ("J2", "J3", "J4", "J5") if v[n].is_zero]
        if bad:
            raise InconclusiveError(
                f"{label} octavic has {', '.join(bad)} = 0; t-invariants not defined"
            )
        vs.append(v)
    a1 = octavic_absolute(vs[0])
    a2 = octavic_absolute(vs[1])
    return all(a1[t] == a2[t] for t in a1.names)


# ---------------------------------------------------------------------------
# decimics
# ---------------------------------------------------------------------------

def decimic_invariants(f: BinaryForm) -> InvariantVector:
    """J2, J4, A6, C6, J8, J9, J10, J14, A14 of a binary decimic.

    The covariant m is (f, k)^4 (order 6); with that choice every invariant
    below has transvection order exactly 0, which is re-checked on each call.
    The combined J14 + A14 is exposed as the extra entry "J14_plus_A14".
    """
    _require_degree(f, 10)
    k = _expect_order(transvect(f, f, 8), 4, "k")
    q = _expect_order(transvect(f, f, 6), 8, "q")
    m = _expect_order(transvect(f, k, 4), 6, "m")
    r = _expect_order(transvect(f, q, 8), 2, "r")
    k_q = _expect_order(transvect(q, q, 6), 4, "k_q")
    k_m = _expect_order(transvect(m, m, 4), 4, "k_m")
    m_q = _expect_order(transvect(q, k_q, 4), 4, "m_q")

    kk = k * k
    mm2 = _expect_order(transvect(m, m, 2), 8, "(m,m)^2")
    kk2 = _expect_order(transvect(k, k, 2), 4, "(k,k)^2")
    km1 = _expect_order(transvect(k, m, 1), 8, "(k,m)^1")
    kq2 = _expect_order(transvect(k_q, k_q, 2), 4, "(k_q,k_q)^2")

    J2 = _inv(transvect(f, f, 10), "J2")
    J4 = _inv(transvect(k, k, 4), "J4")
    A6 = _inv(transvect(m, m, 6), "A6")
    C6 = _inv(transvect(r, r, 2), "C6")
    J8 = _inv(transvect(k, k_m, 4), "J8")
    J9 = _inv(transvect(km1, kk, 8), "J9")
    J10 = _inv(transvect(mm2, kk, 8), "J10")
    J14 = _inv(transvect(kq2, m_q, 4), "J14")
    A14 = _inv(transvect(kk2 * kk2, mm2, 8), "A14")

    return InvariantVector(
        "decimic",
        [
            ("J2", J2, 2, "(f,f)^10"),
            ("J4", J4, 4, "(k,k)^4"),
            ("A6", A6, 6, "(m,m)^6"),
            ("C6", C6, 6, "(r,r)^2"),
            ("J8", J8, 8, "(k,k_m)^4"),
            ("J9", J9, 9, "((k,m)^1,k*k)^8"),
            ("J10", J10, 10, "((m,m)^2,k*k)^8"),
            ("J14", J14, 14, "((k_q,k_q)^2,m_q)^4"),
            ("A14", A14, 14, "((k,k)^2*(k,k)^2,(m,m)^2)^8"),
            ("J14_plus_A14", J14 + A14, 14, "J14+A14"),
        ],
        {"k": k, "q": q, "m": m, "r": r, "k_q": k_q, "k_m": k_m, "m_q": m_q},
    )


# ---------------------------------------------------------------------------
# general even degree
# ---------------------------------------------------------------------------

def general_invariants(F: BinaryForm) -> InvariantVector:
    """The even-degree system over J_{4j} = (F,F)^(d-2j), j = 1..g.

    Entries whose index arithmetic does not work out at this degree are
    marked unavailable (never silently zero): I3 needs 4 | d, I4' and I6'
    need d >= 8, I6* needs d >= 12, M and I12 need d >= 10.
    """
    d = F.degree
    if d < 6 or d % 2:
        raise DegreeError(f"general invariants need even degree >= 6, got {d}")
    g = (d - 2) // 2

    covs = {}
    J = {}
    for j in range(1, g + 1):
        order = 4 * j
        Jj = _expect_order(transvect(F, F, d - 2 * j), order, f"J{order}")
        J[order] = Jj
        covs[f"J{order}"] = Jj

    entries = []
    unavailable = set()

    entries.append(("I2", _inv(transvect(F, F, d), "I2"), 2, "(F,F)^d"))

    if d % 4 == 0:
        entries.append(("I3", _inv(transvect(F, J[d], d), "I3"), 3, "(F,J_d)^d"))
    else:
        unavailable.add("I3")

    entries.append(("I4", _inv(transvect(J[4], J[4], 4), "I4"), 4, "(J4,J4)^4"))

    if d >= 8:
        entries.append(("I4p", _inv(transvect(J[8], J[8], 8), "I4p"), 4, "(J8,J8)^8"))
    else:
        unavailable.add("I4p")

    T4 = _expect_order(transvect(F, J[4], 4), d - 4, "(F,J4)^4")
    entries.append(("I6", _inv(transvect(T4, T4, d - 4), "I6"), 6,
                    "((F,J4)^4,(F,J4)^4)^(d-4)"))

    T8 = None
    if d >= 8:
        T8 = _expect_order(transvect(F, J[8], 8), d - 8, "(F,J8)^8")
        entries.append(("I6p", _inv(transvect(T8, T8, d - 8), "I6p"), 6,
                        "((F,J8)^8,(F,J8)^8)^(d-8)"))
    else:
        unavailable.add("I6p")

    if d >= 12:
        T12 = _expect_order(transvect(F, J[12], 12), d - 12, "(F,J12)^12")
        entries.append(("I6star", _inv(transvect(T12, T12, d - 12), "I6star"), 6,
                        "((F,J12)^12,(F,J12)^12)^(d-12)"))
    else:
        unavailable.add("I6star")

    if d >= 10:
        M = _expect_order(transvect(T4, T8, d - 10), 8, "M")
        covs["M"] = M
        entries.append(("I12", _inv(transvect(M, M, 8), "I12"), 12, "(M,M)^8"))
    else:
        unavailable.add("I12")

    return InvariantVector("general", entries, covs, unavailable)


_GENERAL_ABS_NAMES = ("i1", "i2", "i3", "j1", "j2", "s1", "s2", "v1", "v2", "v3", "v4")

_GENERAL_ABS_PARTS = {
    # name -> (numerator ingredients, denominator ingredients)
    "i1": (("I4p",), ("I2",)),
    "i2": (("I3",), ("I2",)),
    "i3": (("I6star",), ("I3",)),
    "j1": (("I6p",), ("I3",)),
    "j2": (("I6",), ("I3",)),
    "s1": (("I6",), ("I12",)),
    "s2": (("I6p",), ("I12",)),
    "v1": (("I6",), ("I6star",)),
    "v2": (("I4p",), ("I3",)),
    "v3": (("I6",), ("I6p",)),
    "v4": (("I6star",), ("I3",)),
}


def general_absolute(F) -> AbsoluteInvariants:
    """i1 = I4'/I2^2, i2 = I3^2/I2^3, i3 = I6*/I3^2, j1 = I6'/I3^2,
    j2 = I6/I3^2, s1 = I6^2/I12, s2 = (I6')^2/I12, v1 = I6/I6*,
    v2 = (I4')^3/I3^4, v3 = I6/I6', v4 = (I6*)^2/I3^3.

    v4 mixes coefficient-degrees 12 and 9 as printed and is therefore not
    scaling-invariant; it is computed as printed and documented as such.
    """
    v = F if isinstance(F, InvariantVector) else general_invariants(F)

    def have(*names):
        return all(v.available(n) for n in names)

    available = {}
    parts = {}
    for name, (num_req, den_req) in _GENERAL_ABS_PARTS.items():
        ok = have(*num_req, *den_req)
        available[name] = ok
        if not ok:
            continue
        if name == "i1":
            parts[name] = (v["I4p"], v["I2"] ** 2)
        elif name == "i2":
            parts[name] = (v["I3"] ** 2, v["I2"] ** 3)
        elif name == "i3":
            parts[name] = (v["I6star"], v["I3"] ** 2)
        elif name == "j1":
            parts[name] = (v["I6p"], v["I3"] ** 2)
        elif name == "j2":
            parts[name] = (v["I6"], v["I3"] ** 2)
        elif name == "s1":
            parts[name] = (v["I6"] ** 2, v["I12"])
        elif name == "s2":
            parts[name] = (v["I6p"] ** 2, v["I12"])
        elif name == "v1":
            parts[name] = (v["I6"], v["I6star"])
        elif name == "v2":
            parts[name] = (v["I4p"] ** 3, v["I3"] ** 4)
        elif name == "v3":
            parts[name] = (v["I6"], v["I6p"])
        elif name == "v4":
            parts[name] = (v["I6star"] ** 2, v["I3"] ** 3)
    return _ratios("general", _GENERAL_ABS_NAMES, parts, available)


@dataclass(frozen=True)
class Genus10Result:
    invariants: InvariantVector       # I6star_g10, I12star (+ covariant S)
    absolute: AbsoluteInvariants      # v5 = I6star_g10 / I12star


def genus10_special(F: BinaryForm) -> Genus10Result:
    """The auxiliary degree-22 quantities, defined only when I12(F) = 0."""
    _require_degree(F, 22)
    base = general_invariants(F)
    if not base["I12"].is_zero:
        raise Genus10CaseError(
            f"I12 = {base['I12']} != 0; the special invariants are only "
            "defined on the I12 = 0 locus"
        )
    J12 = base.covariants["J12"]
    J16 = base.covariants["J16"]
    T16 = _expect_order(transvect(F, J16, 16), 6, "(F,J16)^16")
    I6s = _inv(transvect(T16, T16, 6), "I6star_g10")
    S = _expect_order(transvect(J12, J16, 12), 4, "S")
    U = _expect_order(transvect(J16, S, 4), 12, "(J16,S)^4")
    I12s = _inv(transvect(U, U, 12), "I12star")
    vec = InvariantVector(
        "genus10",
        [
            ("I6star_g10", I6s, 6, "((F,J16)^16,(F,J16)^16)^6"),
            ("I12star", I12s, 12, "((J16,S)^4,(J16,S)^4)^12"),
        ],
        {"S": S},
    )
    absolute = _ratios("genus10", ("v5",), {"v5": (I6s, I12s)})
    return Genus10Result(vec, absolute)
