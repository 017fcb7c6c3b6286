"""Classical and Mustard convolutions and the expansions connecting them.

The Mustard convolution is ``f *_M g = C * qft^-1(qft(f) qft(g))`` with
``C = sqrt(n1 n2)``, so ``qft(f *_M g) = C qft(f) qft(g)``. Expansions are
evaluated from the term tables in :mod:`qconv.terms`.

Expansion modes for the Mustard-based formulas:

``naive``
    one full Mustard convolution per term.
``cached``
    transform each coefficient variant of ``f`` and ``g`` once, obtain the
    reflected variants by reflecting the spectrum (``qft(h^phi) = qft(h)^phi``),
    then one pointwise product and one inverse transform per term.
``accumulated``
    like ``cached`` but the weighted spectral products are summed and a single
    inverse transform is taken.
"""
from __future__ import annotations

import math
from collections import defaultdict
from typing import Callable

import numpy as np

from . import _backend
from .errors import RootsNotPerpendicular, ShapeMismatch
from .field import QField
from .qft import qft
from .quaternion import ONE, Root, RootPair
from .terms import THM21, THM31, THM32, THM41, THM51, THM52, Term

__all__ = [
    "classical_convolve", "cross_correlate", "mustard_convolve",
    "mustard_via_classical", "classical_via_mustard_equal",
    "classical_via_mustard_perp", "classical_via_mustard_general",
    "convolution_spectrum", "correlation_spectrum",
    "expand", "term_contributions", "block_contributions",
    "MODES", "PERPENDICULAR_TOL",
]

MODES = ("naive", "cached", "accumulated")
PERPENDICULAR_TOL = 1e-12


def _check_shapes(f: QField, g: QField) -> None:
    if f.shape != g.shape:
        raise ShapeMismatch(f"field shapes differ: {f.shape} vs {g.shape}")


def _require_perpendicular(roots: RootPair) -> None:
    if abs(roots.a) > PERPENDICULAR_TOL:
        raise RootsNotPerpendicular(
            f"roots must anticommute (|a| <= {PERPENDICULAR_TOL:g}), got a = {roots.a:.3e}")


def _grid_factor(f: QField) -> float:
    return math.sqrt(f.n1 * f.n2)


def classical_convolve(f: QField, g: QField) -> QField:
    """Cyclic ``(f * g)(x) = sum_y f(y) g(x - y)``; f stays on the left."""
    _check_shapes(f, g)
    out = _backend.kernels.cyclic_convolve(f.data, g.data, _backend.num_threads())
    return QField._wrap(out)


def cross_correlate(f: QField, g: QField) -> QField:
    """Cyclic ``(f star g)(y) = sum_x f(x) g(x + y)``, no conjugation."""
    _check_shapes(f, g)
    out = _backend.kernels.cyclic_correlate(f.data, g.data, _backend.num_threads())
    return QField._wrap(out)


def mustard_convolve(f: QField, g: QField, roots: RootPair, *, fast: bool = True) -> QField:
    _check_shapes(f, g)
    spec = qft(f, roots, fast=fast).pointwise(qft(g, roots, fast=fast))
    return qft(spec, roots, inverse=True, fast=fast) * _grid_factor(f)


# -- generic expansion engine ------------------------------------------------

class _Variants:
    """Memoized ``coef . h^phi`` fields and their spectra."""

    def __init__(self, h: QField, roots: RootPair, fast: bool):
        self.h = h
        self.roots = roots
        self.fast = fast
        self._scaled: dict[str, QField] = {}
        self._spectra: dict[str, QField] = {}
        self.transforms = 0

    def scaled(self, coef: str) -> QField:
        if coef not in self._scaled:
            q = self.roots.coefficient(coef)
            self._scaled[coef] = self.h if q == ONE else q * self.h
        return self._scaled[coef]

    def field(self, coef: str, refl) -> QField:
        return self.scaled(coef).reflect(refl)

    def spectrum(self, coef: str, refl) -> QField:
        if coef not in self._spectra:
            self._spectra[coef] = qft(self.scaled(coef), self.roots, fast=self.fast)
            self.transforms += 1
        return self._spectra[coef].reflect(refl)


def _terms_classical(table, fv, gv, a):
    for t in table:
        yield t, classical_convolve(fv.field(t.f_coef, t.f_refl),
                                    gv.field(t.g_coef, t.g_refl)) * t.value(a)


def _terms_mustard(table, fv, gv, roots, mode, mustard, fast):
    a = roots.a
    if mode == "naive":
        for t in table:
            x = mustard(fv.field(t.f_coef, t.f_refl), gv.field(t.g_coef, t.g_refl), roots)
            yield t, x * t.value(a)
    elif mode == "cached":
        c = _grid_factor(fv.h)
        for t in table:
            prod = fv.spectrum(t.f_coef, t.f_refl).pointwise(gv.spectrum(t.g_coef, t.g_refl))
            yield t, qft(prod, roots, inverse=True, fast=fast) * (c * t.value(a))
    else:
        raise ValueError(f"per-term evaluation needs mode 'naive' or 'cached', not {mode!r}")


def _accumulate_spectrum(table, fv, gv, a) -> np.ndarray:
    acc = np.zeros(fv.h.data.shape)
    for t in table:
        prod = fv.spectrum(t.f_coef, t.f_refl).pointwise(gv.spectrum(t.g_coef, t.g_refl))
        acc += prod.data * t.value(a)
    return acc


def term_contributions(table, f: QField, g: QField, roots: RootPair, *,
                       product: str = "mustard", mode: str = "cached",
                       mustard: Callable | None = None,
                       fast: bool = True) -> list[tuple[Term, QField]]:
    """Weighted contribution of every term, in table order.

    ``product`` is ``"classical"``, ``"mustard"`` or ``"spectrum"``.
    """
    _check_shapes(f, g)
    fv, gv = _Variants(f, roots, fast), _Variants(g, roots, fast)
    if product == "classical":
        return list(_terms_classical(table, fv, gv, roots.a))
    if product == "mustard":
        mustard = mustard or (lambda x, y, r: mustard_convolve(x, y, r, fast=fast))
        return list(_terms_mustard(table, fv, gv, roots, mode, mustard, fast))
    if product == "spectrum":
        c = _grid_factor(f)
        return [(t, fv.spectrum(t.f_coef, t.f_refl).pointwise(gv.spectrum(t.g_coef, t.g_refl))
                 * (c * t.value(roots.a))) for t in table]
    raise ValueError(f"unknown product {product!r}")


def expand(table, f: QField, g: QField, roots: RootPair, *,
           product: str = "mustard", mode: str = "accumulated",
           mustard: Callable | None = None, fast: bool = True) -> QField:
    """Evaluate a term table; terms are summed in table order."""
    _check_shapes(f, g)
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if product in ("mustard", "spectrum") and mode == "accumulated" and mustard is None:
        fv, gv = _Variants(f, roots, fast), _Variants(g, roots, fast)
        acc = QField._wrap(_accumulate_spectrum(table, fv, gv, roots.a))
        if product == "spectrum":
            return acc * _grid_factor(f)
        return qft(acc, roots, inverse=True, fast=fast) * _grid_factor(f)
    if mode == "accumulated":
        mode = "cached" if mustard is None else "naive"
    total = np.zeros(f.data.shape)
    for _, contrib in term_contributions(table, f, g, roots, product=product,
                                         mode=mode, mustard=mustard, fast=fast):
        total += contrib.data
    return QField._wrap(total)


def block_contributions(table, f: QField, g: QField, roots: RootPair, *,
                        product: str = "mustard", by: str = "a_power",
                        fast: bool = True) -> dict:
    """Sum of weighted contributions grouped by ``Term.a_power`` or ``Term.row``."""
    out: dict = defaultdict(lambda: np.zeros(f.data.shape))
    mode = "cached" if product == "mustard" else "naive"
    for t, contrib in term_contributions(table, f, g, roots, product=product,
                                         mode=mode, fast=fast):
        out[getattr(t, by)] += contrib.data
    return {k: QField._wrap(v) for k, v in out.items()}


# -- the named expansions ----------------------------------------------------

def mustard_via_classical(f: QField, g: QField, roots: RootPair, *, table=THM21) -> QField:
    """Mustard convolution written as 32 classical convolutions."""
    return expand(table, f, g, roots, product="classical", mode="naive")


def classical_via_mustard_equal(f: QField, g: QField, mu: Root, *,
                                mode: str = "accumulated", table=THM31, **kw) -> QField:
    """Classical convolution from four single-root Mustard convolutions."""
    return expand(table, f, g, RootPair.single(mu), mode=mode, **kw)


def classical_via_mustard_perp(f: QField, g: QField, roots: RootPair, *,
                               mode: str = "accumulated", table=THM32, **kw) -> QField:
    """Classical convolution from 16 Mustard convolutions, anticommuting roots only."""
    _check_shapes(f, g)
    _require_perpendicular(roots)
    return expand(table, f, g, roots, mode=mode, **kw)


def classical_via_mustard_general(f: QField, g: QField, roots: RootPair, *,
                                  mode: str = "accumulated", table=THM41, **kw) -> QField:
    """Classical convolution from 40 Mustard convolutions, any pair of roots."""
    return expand(table, f, g, roots, mode=mode, **kw)


def convolution_spectrum(f: QField, g: QField, roots: RootPair, *, table=THM51, **kw) -> QField:
    """qft(f * g) from the transforms of reflected and root-multiplied f, g."""
    _check_shapes(f, g)
    _require_perpendicular(roots)
    return expand(table, f, g, roots, product="spectrum", **kw)


def correlation_spectrum(f: QField, g: QField, roots: RootPair, *, table=THM52, **kw) -> QField:
    """qft(f star g), same structure as :func:`convolution_spectrum`."""
    _check_shapes(f, g)
    _require_perpendicular(roots)
    return expand(table, f, g, roots, product="spectrum", **kw)
