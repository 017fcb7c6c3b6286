"""Term tables for the convolution expansions.

Every expansion is a sum of terms::

    weight * a**a_power * (cf . f^phi) (x) (cg . g^psi)

where ``cf``/``cg`` are products of the roots, ``f^phi`` is a reflection and
``(x)`` is a classical convolution, a Mustard convolution or a pointwise
product of spectra depending on the expansion. The tables below are written in
a small text notation, one bracketed row per line, so they can be read side by
side with the printed formulas:

    ("1/4", "- nu f01 * mu g10 + ...")

means ``-1/4 (nu f^(0,1)) (x) (mu g^(1,0)) + ...``. ``f11`` is ``f^(1,1)``; a
bare ``f`` is ``f^(0,0)``. Weights are ``p/q``, ``a/q`` or ``a^2/q``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .field import ReflectionIndex
from .quaternion import RootPair

__all__ = [
    "Term", "parse_table", "render_term", "render_table", "corrupt",
    "collapse", "THM21", "THM31", "THM32", "THM41", "THM51", "THM52", "TABLES",
]


@dataclass(frozen=True)
class Term:
    index: int
    row: int
    weight: Fraction
    a_power: int
    f_coef: str
    f_refl: ReflectionIndex
    g_coef: str
    g_refl: ReflectionIndex

    def value(self, a: float) -> float:
        w = float(self.weight)
        if self.a_power:
            w *= a ** self.a_power
        return w


_COEF = r"((?:(?:mu|nu)\s+)*)"
_TERM_RE = re.compile(
    r"([+-])\s*" + _COEF + r"f(\d\d)?\s*\*\s*" + _COEF + r"g(\d\d)?\s*"
)
_WEIGHT_RE = re.compile(r"^\s*(?:(a)(?:\^(\d+))?|(\d+))\s*/\s*(\d+)\s*$")


def _parse_weight(text: str) -> tuple[Fraction, int]:
    m = _WEIGHT_RE.match(text)
    if not m:
        raise ValueError(f"bad weight {text!r}")
    has_a, power, num, den = m.groups()
    if has_a:
        return Fraction(1, int(den)), int(power or 1)
    return Fraction(int(num), int(den)), 0


def _refl(digits: str | None) -> ReflectionIndex:
    if not digits:
        return ReflectionIndex(0, 0)
    return ReflectionIndex(int(digits[0]), int(digits[1]))


def _coef(text: str) -> str:
    return " ".join(text.split()) or "1"


def parse_table(rows) -> tuple[Term, ...]:
    terms = []
    for row_no, (weight_text, body) in enumerate(rows):
        weight, a_power = _parse_weight(weight_text)
        pos = 0
        body = body.strip()
        while pos < len(body):
            m = _TERM_RE.match(body, pos)
            if not m:
                raise ValueError(f"cannot parse term at {body[pos:]!r}")
            sign, fc, fr, gc, gr = m.groups()
            terms.append(Term(
                index=len(terms), row=row_no,
                weight=weight if sign == "+" else -weight, a_power=a_power,
                f_coef=_coef(fc), f_refl=_refl(fr),
                g_coef=_coef(gc), g_refl=_refl(gr),
            ))
            pos = m.end()
    return tuple(terms)


def _operand(coef: str, name: str, refl: ReflectionIndex) -> str:
    var = name if refl == (0, 0) else f"{name}{refl.phi1}{refl.phi2}"
    return var if coef == "1" else f"{coef} {var}"


def render_term(term: Term) -> str:
    w = term.weight
    scale = str(abs(w)) if not term.a_power else (
        ("a" if term.a_power == 1 else f"a^{term.a_power}") + f"/{abs(w).denominator}")
    sign = "-" if w < 0 else "+"
    return (f"{sign}{scale} ({_operand(term.f_coef, 'f', term.f_refl)})"
            f" * ({_operand(term.g_coef, 'g', term.g_refl)})")


def render_table(table) -> str:
    return "\n".join(f"[{t.index:2d}] {render_term(t)}" for t in table)


def corrupt(table, index: int, factor: float = -1.0) -> tuple[Term, ...]:
    """Copy of ``table`` with term ``index`` scaled by ``factor``.

    Negative control for the verification harness.
    """
    out = list(table)
    t = out[index]
    out[index] = replace(t, weight=t.weight * Fraction(factor).limit_denominator(1 << 20))
    return tuple(out)


def _canonical(q, tol):
    arr = q.to_array()
    for c in arr:
        if abs(c) > tol:
            return (arr if c > 0 else -arr), (1.0 if c > 0 else -1.0)
    return arr, 1.0


def collapse(table, roots: RootPair, tol: float = 1e-9):
    """Merge terms that coincide once the roots are substituted.

    Coefficients are resolved to concrete quaternions and sign-normalized, so
    e.g. ``nu mu`` and ``mu nu`` merge when the roots anticommute. Returns the
    surviving ``(weight, cf, phi, cg, psi)`` tuples with nonzero weight.
    """
    merged: dict = {}
    order = []
    for t in table:
        cf, sf = _canonical(roots.coefficient(t.f_coef), tol)
        cg, sg = _canonical(roots.coefficient(t.g_coef), tol)
        key = (tuple(np.round(cf, 9)), t.f_refl, tuple(np.round(cg, 9)), t.g_refl)
        if key not in merged:
            merged[key] = 0.0
            order.append(key)
        merged[key] += t.value(roots.a) * sf * sg
    return [(merged[k],) + k for k in order if abs(merged[k]) > tol]


THM21 = parse_table([
    ("1/4", "+ f * g + f * g01 + f * g10 + f * g11"),
    ("1/4", "- nu f * nu g + nu f * nu g01 - nu f * nu g10 + nu f * nu g11"),
    ("1/4", "- mu f01 * mu g - mu f01 * mu g01 + mu f01 * mu g10 + mu f01 * mu g11"),
    ("1/8", "- mu nu f01 * mu nu g + mu nu f01 * mu nu g01"
            " + mu nu f01 * mu nu g10 - mu nu f01 * mu nu g11"),
    ("1/8", "+ nu mu f01 * mu nu g - nu mu f01 * mu nu g01"
            " - nu mu f01 * mu nu g10 + nu mu f01 * mu nu g11"),
    ("a/8", "+ f * mu nu g - f * mu nu g01 - f * mu nu g10 + f * mu nu g11"),
    ("a/8", "+ nu f * mu g + nu f * mu g01 - nu f * mu g10 - nu f * mu g11"),
    ("a/8", "- nu f01 * mu g - nu f01 * mu g01 + nu f01 * mu g10 + nu f01 * mu g11"),
])

# single root: coefficients resolve against RootPair(mu, mu)
THM31 = parse_table([
    ("1/2", "+ f * g - mu f * mu g + f * g11 + mu f * mu g11"),
])

THM32 = parse_table([
    ("1/4", "+ f * g + f * g01 + f * g10 + f * g11"),
    ("1/4", "- nu f * nu g + nu f * nu g01 - nu f * nu g10 + nu f * nu g11"),
    ("1/4", "- mu f01 * mu g - mu f01 * mu g01 + mu f01 * mu g10 + mu f01 * mu g11"),
    ("1/4", "+ nu mu f01 * mu nu g - nu mu f01 * mu nu g01"
            " - nu mu f01 * mu nu g10 + nu mu f01 * mu nu g11"),
])

THM41 = parse_table([
    ("1/4", "+ f * g + f * g01 + f * g10 + f * g11"),
    ("1/4", "- nu f * nu g + nu f * nu g01 - nu f * nu g10 + nu f * nu g11"),
    ("1/4", "- mu f01 * mu g - mu f01 * mu g01 + mu f01 * mu g10 + mu f01 * mu g11"),
    ("1/4", "+ mu nu f01 * nu mu g - mu nu f01 * nu mu g01"
            " - mu nu f01 * nu mu g10 + mu nu f01 * nu mu g11"),
    ("a/8", "- f * mu nu g + nu f * mu g + f * mu nu g01 + nu f * mu g01"),
    ("a/8", "+ f * mu nu g10 - nu f * mu g10 - f * mu nu g11 - nu f * mu g11"),
    ("a/8", "+ f01 * mu nu g - nu f01 * mu g - f01 * mu nu g01 - nu f01 * mu g01"),
    ("a/8", "- f01 * mu nu g10 + nu f01 * mu g10 + f01 * mu nu g11 + nu f01 * mu g11"),
    ("a^2/8", "+ f * g - f * g01 - f * g10 + f * g11"),
    ("a^2/8", "- f01 * g + f01 * g01 + f01 * g10 - f01 * g11"),
])

# spectrum tables: (x) is the pointwise product of transforms, overall factor C
THM51 = parse_table([
    ("1/4", "+ f * g + f * g01 + f * g10 + f * g11"),
    ("1/4", "- nu f * nu g + nu f * nu g01 - nu f * nu g10 + nu f * nu g11"),
    ("1/4", "- mu f01 * mu g - mu f01 * mu g01 + mu f01 * mu g10 + mu f01 * mu g11"),
    ("1/4", "+ nu mu f01 * mu nu g - nu mu f01 * mu nu g01"
            " - nu mu f01 * mu nu g10 + nu mu f01 * mu nu g11"),
])

THM52 = parse_table([
    ("1/4", "+ f11 * g + f11 * g01 + f11 * g10 + f11 * g11"),
    ("1/4", "- nu f11 * nu g + nu f11 * nu g01 - nu f11 * nu g10 + nu f11 * nu g11"),
    ("1/4", "- mu f10 * mu g - mu f10 * mu g01 + mu f10 * mu g10 + mu f10 * mu g11"),
    ("1/4", "+ nu mu f10 * mu nu g - nu mu f10 * mu nu g01"
            " - nu mu f10 * mu nu g10 + nu mu f10 * mu nu g11"),
])

TABLES = {
    "thm21": THM21, "thm31": THM31, "thm32": THM32,
    "thm41": THM41, "thm51": THM51, "thm52": THM52,
}
