"""Parametric equation templates for catalog rows.

A template is a product of factors.  Each factor is a sparse polynomial in x
whose terms carry constant coefficients (rational or quadratic-extension),
parameter symbols a1..ak with an optional constant multiplier, or a
sum-block ``sum(i=lo..hi, a_i*x^(c*i+b))`` generating one fresh parameter per
index.  Leading coefficients are always constants, so a template has a fixed
degree regardless of the parameter assignment.

The string grammar round-trips bit-exactly: ``parse_template(t.to_string())``
reproduces the template, and ``to_string`` output is canonical (terms sorted
by descending exponent, single spaces around + and -, none around *).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..forms import UnivariatePoly
from ..scalars import ONE, Scalar, ScalarParseError, parse_scalar

__all__ = [
    "EquationTemplate",
    "Factor",
    "Term",
    "SumBlock",
    "TemplateError",
    "TemplateParamError",
    "parse_template",
    "parse_poly_string",
    "poly_to_string",
]


class TemplateError(ValueError):
    """Malformed template text or structurally invalid template."""


class TemplateParamError(ValueError):
    """Parameter assignment does not match the template's parameter set."""


@dataclass(frozen=True)
class Term:
    """coefficient * x^exp; the coefficient is const or const*param."""

    const: Scalar
    param: str | None
    exp: int

    @property
    def max_exp(self) -> int:
        return self.exp


@dataclass(frozen=True)
class SumBlock:
    """sum(i=lo..hi, a_i * x^(scale*i + offset))."""

    lo: int
    hi: int
    scale: int
    offset: int

    def __post_init__(self):
        if self.lo > self.hi or self.lo < 1 or self.scale < 1 or self.offset < 0:
            raise TemplateError(f"bad sum block bounds {self!r}")

    @property
    def max_exp(self) -> int:
        return self.scale * self.hi + self.offset

    def params(self) -> list[str]:
        return [f"a{i}" for i in range(self.lo, self.hi + 1)]

    def terms(self) -> list[Term]:
        return [
            Term(ONE, f"a{i}", self.scale * i + self.offset)
            for i in range(self.lo, self.hi + 1)
        ]


@dataclass(frozen=True)
class Factor:
    items: tuple  # Term | SumBlock, sorted by descending max_exp

    @property
    def degree(self) -> int:
        return max(item.max_exp for item in self.items)

    def all_terms(self) -> list[Term]:
        out = []
        for item in self.items:
            if isinstance(item, SumBlock):
                out.extend(item.terms())
            else:
                out.append(item)
        return out


class EquationTemplate:
    """Product of factors; expands to a UnivariatePoly at a parameter map."""

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise TemplateError("template needs at least one factor")
        self._validate()

    def _validate(self):
        for factor in self.factors:
            exps = [t.exp for t in factor.all_terms()]
            if len(set(exps)) != len(exps):
                raise TemplateError("duplicate exponent inside a factor")
        lead = self.symbolic().get(self.degree, {})
        if list(lead.keys()) != [()] or lead[()].is_zero:
            raise TemplateError("template leading coefficient must be a nonzero constant")

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def param_names(self) -> tuple[str, ...]:
        names = []
        for factor in self.factors:
            for term in factor.all_terms():
                if term.param and term.param not in names:
                    names.append(term.param)
        return tuple(sorted(names, key=lambda s: int(s[1:])))

    def expand(self, params: dict | None = None) -> UnivariatePoly:
        """Substitute parameter values and multiply out, exactly."""
        params = {k: (v if isinstance(v, Scalar) else Scalar(v))
                  for k, v in (params or {}).items()}
        wanted = set(self.param_names())
        given = set(params)
        if wanted != given:
            missing = sorted(wanted - given)
            extra = sorted(given - wanted)
            raise TemplateParamError(
                f"parameter mismatch: missing {missing}, unexpected {extra}"
            )
        poly = UnivariatePoly((ONE,))
        for factor in self.factors:
            coeffs = [Scalar(0)] * (factor.degree + 1)
            for term in factor.all_terms():
                value = term.const if term.param is None else term.const * params[term.param]
                coeffs[term.exp] = coeffs[term.exp] + value
            poly = poly * UnivariatePoly(coeffs)
        return poly

    def symbolic(self) -> dict:
        """Expanded coefficients as polynomials in the parameters.

        Returns exp -> {monomial: Scalar} with monomial a sorted tuple of
        parameter names (with repetition).  Used by the inclusion DAG and by
        template validation; identically-zero coefficients are dropped.
        """
        acc = {0: {(): ONE}}
        for factor in self.factors:
            fmap = {}
            for term in factor.all_terms():
                mono = (term.param,) if term.param else ()
                slot = fmap.setdefault(term.exp, {})
                slot[mono] = slot.get(mono, Scalar(0)) + term.const
            new = {}
            for e1, poly1 in acc.items():
                for e2, poly2 in fmap.items():
                    target = new.setdefault(e1 + e2, {})
                    for m1, c1 in poly1.items():
                        for m2, c2 in poly2.items():
                            mono = tuple(sorted(m1 + m2))
                            c = target.get(mono, Scalar(0)) + c1 * c2
                            target[mono] = c
            acc = {
                e: {m: c for m, c in poly.items() if not c.is_zero}
                for e, poly in new.items()
            }
            acc = {e: poly for e, poly in acc.items() if poly}
        return acc

    def support_classification(self) -> dict:
        """exp -> ("const", Scalar) for parameter-free coefficients,
        exp -> "param" for parameter-dependent ones."""
        out = {}
        for e, poly in self.symbolic().items():
            if list(poly.keys()) == [()]:
                out[e] = ("const", poly[()])
            else:
                out[e] = "param"
        return out

    def to_string(self) -> str:
        bodies = []
        for factor in self.factors:
            body = _factor_to_string(factor)
            if len(self.factors) > 1 and len(factor.all_terms()) > 1:
                body = f"({body})"
            bodies.append(body)
        return "*".join(bodies)

    def __eq__(self, other):
        if not isinstance(other, EquationTemplate):
            return NotImplemented
        return self.factors == other.factors

    def __repr__(self):
        return f"EquationTemplate({self.to_string()!r})"


def _coeff_to_string(const: Scalar, param: str | None) -> str:
    if param is None:
        text = str(const)
        if const.disc != 0 and const.a != 0:
            text = f"({text})"
        return text
    if const == ONE:
        return param
    if const == -ONE:
        return f"-{param}"
    return f"{_coeff_to_string(const, None)}*{param}"


def _term_to_string(term: Term) -> str:
    if term.exp == 0:
        return _coeff_to_string(term.const, term.param)
    mono = "x" if term.exp == 1 else f"x^{term.exp}"
    if term.param is None and term.const == ONE:
        return mono
    if term.param is None and term.const == -ONE:
        return f"-{mono}"
    return f"{_coeff_to_string(term.const, term.param)}*{mono}"


def _sumblock_to_string(block: SumBlock) -> str:
    if block.scale == 1 and block.offset == 0:
        expo = "x^i"
    elif block.offset == 0:
        expo = f"x^({block.scale}*i)"
    else:
        expo = f"x^({block.scale}*i+{block.offset})"
    return f"sum(i={block.lo}..{block.hi}, a_i*{expo})"


def _factor_to_string(factor: Factor) -> str:
    pieces = []
    for item in factor.items:
        text = _sumblock_to_string(item) if isinstance(item, SumBlock) else _term_to_string(item)
        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append(f" - {text[1:]}")
        else:
            pieces.append(f" + {text}")
    return "".join(pieces)


# -- parsing ------------------------------------------------------------------

_SUM_RE = re.compile(
    r"^sum\(i=(\d+)\.\.(\d+),a_i\*x(?:\^(?:\((?:(\d+)\*)?i(?:\+(\d+))?\)|i))\)$"
)
_PARAM_COEFF_RE = re.compile(r"^(?:(?P<num>-?\d+(?:/\d+)?)\*)?(?P<param>a\d+)$")
_MONO_RE = re.compile(r"^x(?:\^(\d+))?$")
_TERM_RE = re.compile(r"^(?P<coeff>.+)\*(?P<mono>x(?:\^\d+)?)$")


def _split_top(s: str, seps: str) -> list[str]:
    """Split on separators at paren depth 0; keep sign separators attached."""
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise TemplateError(f"unbalanced parentheses in {s!r}")
        elif depth == 0 and ch in seps and i > start and s[i - 1] not in "+-*/^(":
            parts.append(s[start:i])
            start = i if ch in "+-" else i + 1
            if ch in "+-":
                continue
    if depth:
        raise TemplateError(f"unbalanced parentheses in {s!r}")
    parts.append(s[start:])
    return [p for p in parts if p]


def _parse_term(text: str):
    sign = 1
    while text and text[0] in "+-":
        if text[0] == "-":
            sign = -sign
        text = text[1:]
    if not text:
        raise TemplateError("empty term")
    m = _SUM_RE.match(text)
    if m:
        if sign < 0:
            raise TemplateError("sum blocks cannot be negated")
        lo, hi = int(m.group(1)), int(m.group(2))
        scale = int(m.group(3)) if m.group(3) else 1
        offset = int(m.group(4)) if m.group(4) else 0
        return SumBlock(lo, hi, scale, offset)
    mono = _MONO_RE.match(text)
    if mono:
        exp = int(mono.group(1)) if mono.group(1) else 1
        return Term(Scalar(sign), None, exp)
    tm = _TERM_RE.match(text)
    if tm:
        coeff_txt, mono_txt = tm.group("coeff"), tm.group("mono")
        exp_m = _MONO_RE.match(mono_txt)
        exp = int(exp_m.group(1)) if exp_m.group(1) else 1
    else:
        coeff_txt, exp = text, 0
    const, param = _parse_coeff(coeff_txt)
    return Term(sign * const, param, exp)


def _parse_coeff(text: str):
    pm = _PARAM_COEFF_RE.match(text)
    if pm:
        num = pm.group("num")
        const = ONE if num is None else parse_scalar(num)
        return const, pm.group("param")
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    try:
        return parse_scalar(text), None
    except ScalarParseError as exc:
        raise TemplateError(f"bad coefficient {text!r}: {exc}") from None


def _parse_factor(text: str) -> Factor:
    items = [_parse_term(t) for t in _split_top(text, "+-")]
    items.sort(key=lambda item: -item.max_exp)
    return Factor(tuple(items))


def parse_template(text: str) -> EquationTemplate:
    """Parse the canonical template grammar (whitespace-insensitive)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise TemplateError("empty template")
    if _has_top_level_sign(s):
        atoms = [s]
    else:
        atoms = _split_top(s, "*")
    factors = []
    for atom in atoms:
        if atom.startswith("(") and atom.endswith(")") and _balanced_whole(atom):
            atom = atom[1:-1]
        factors.append(_parse_factor(atom))
    return EquationTemplate(factors)


def _has_top_level_sign(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "+-*/^(":
            return True
    return False


def _balanced_whole(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(s) - 1:
                return False
    return True


def parse_poly_string(text: str) -> UnivariatePoly:
    """Parse a concrete (parameter-free) polynomial like "x^11+1"."""
    template = parse_template(text)
    if template.param_names():
        raise TemplateError(
            f"expected a concrete polynomial, got parameters {template.param_names()}"
        )
    return template.expand({})


def poly_to_string(p: UnivariatePoly) -> str:
    """Canonical descending-power string for a concrete polynomial."""
    if p.is_zero:
        return "0"
    factor = Factor(tuple(
        Term(c, None, e)
        for e, c in sorted(enumerate(p.coeffs), key=lambda t: -t[0])
        if not c.is_zero
    ))
    return _factor_to_string(factor)
