"""Seeded property suites behind ``qconv verify``.

Each suite draws random quaternions, roots and fields from one seeded
generator and reports the worst error seen for every identity it checks.
Expansion suites that fail also name the most likely culprit term: the one
whose single-term rescaling removes the largest part of the residual.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import conv, reference, sampling
from .field import REFLECTIONS, QField
from .qft import change_of_signs, dft_left, fast_qft, idft_left
from .quaternion import (I, J, K, ONE, RootPair, anticommutator, commuting_part, exp_angle,
                         mul, vector_part)
from .terms import TABLES, collapse, render_term

SUITES = ("algebra", "qft", "thm21", "thm31", "thm32", "thm41", "thm51", "thm52")


@dataclass
class Check:
    suite: str
    name: str
    max_err: float
    suspect: str | None = None

    def passed(self, tol: float) -> bool:
        return self.max_err <= tol

    def line(self, tol: float) -> str:
        status = "PASS" if self.passed(tol) else "FAIL"
        text = f"{self.suite:8s} {self.name:44s} {self.max_err:.3e} {status}"
        if self.suspect and not self.passed(tol):
            text += f"  suspect term {self.suspect}"
        return text


@dataclass
class _Collector:
    suite: str
    checks: dict = field(default_factory=dict)

    def add(self, name: str, err: float, suspect: str | None = None) -> None:
        err = float(err)
        if math.isnan(err):
            err = math.inf
        prev = self.checks.get(name)
        if prev is None or err > prev.max_err:
            self.checks[name] = Check(self.suite, name, err, suspect)

    def results(self) -> list[Check]:
        return list(self.checks.values())


def _qerr(p, q) -> float:
    return abs(p - q)


# -- algebra -------------------------------------------------------------------

def algebra_suite(rng: np.random.Generator, instances: int = 1000) -> list[Check]:
    c = _Collector("algebra")
    c.add("basis relations i^2=j^2=k^2=ijk=-1",
          max(_qerr(mul(I, I), -1), _qerr(mul(J, J), -1), _qerr(mul(K, K), -1),
              _qerr(mul(mul(I, J), K), -1)))
    c.add("ij=-ji=k, jk=-kj=i, ki=-ik=j",
          max(_qerr(mul(I, J), K), _qerr(mul(J, I), -K), _qerr(mul(J, K), I),
              _qerr(mul(K, J), -I), _qerr(mul(K, I), J), _qerr(mul(I, K), -J)))
    for _ in range(instances):
        p, q, r = (sampling.random_quaternion(rng) for _ in range(3))
        mu, nu = sampling.random_root(rng), sampling.random_root(rng)
        perp = sampling.perpendicular_pair(rng)
        theta = float(rng.uniform(-2 * math.pi, 2 * math.pi))
        a = anticommutator(mu, nu)

        c.add("associativity", _qerr(mul(mul(p, q), r), mul(p, mul(q, r))))
        c.add("distributivity", _qerr(mul(p, q + r), mul(p, q) + mul(p, r)))
        c.add("norm multiplicativity", abs(abs(mul(p, q)) - abs(p) * abs(q)))
        c.add("conj(q) q = |q|^2", _qerr(mul(p.conj(), p), abs(p) ** 2))
        c.add("root squares to -1", _qerr(mul(mu, mu), -1))
        c.add("anticommutator is real, = -2<mu,nu>",
              max(abs(vector_part(mul(mu, nu) + mul(nu, mu))),
                  abs((mul(mu, nu) + mul(nu, mu)).w - a)))

        q_c, q_a = commuting_part(q, mu, 0), commuting_part(q, mu, 1)
        c.add("commuting split partitions q", _qerr(q_c + q_a, q))
        c.add("commuting part commutes", _qerr(mul(q_c, mu), mul(mu, q_c)))
        c.add("anticommuting part anticommutes", _qerr(mul(q_a, mu), -mul(mu, q_a)))

        mu_m, mu_p = commuting_part(mu, nu, 0), commuting_part(mu, nu, 1)
        c.add("split squares mu+^2 + mu-^2 = -1",
              _qerr(mul(mu_p, mu_p) + mul(mu_m, mu_m), -1))
        c.add("mu+ mu- + mu- mu+ = 0", abs(mul(mu_p, mu_m) + mul(mu_m, mu_p)))
        c.add("mu- = -(a/2) nu, mu+ = mu + (a/2) nu",
              max(_qerr(mu_m, nu * (-a / 2)), _qerr(mu_p, mu + nu * (a / 2))))

        e_pos, e_neg = exp_angle(mu, theta), exp_angle(mu, -theta)
        c.add("exp(mu t) exp(-mu t) = 1", _qerr(mul(e_pos, e_neg), ONE))
        c.add("exp has unit norm", abs(abs(e_pos) - 1.0))
        c.add("q- exp(t mu) = exp(t mu) q-", _qerr(mul(q_c, e_pos), mul(e_pos, q_c)))
        c.add("q+ exp(t mu) = exp(-t mu) q+", _qerr(mul(q_a, e_pos), mul(e_neg, q_a)))

        en_neg, en_pos = exp_angle(nu, -theta), exp_angle(nu, theta)
        for j in (0, 1):
            s = (-1) ** j
            lhs = commuting_part(en_neg, mu, j)
            mid = (en_neg + s * en_pos + mu * (a * s * math.sin(theta))) * 0.5
            rhs = (en_neg + s * en_pos + e_pos * (a / 2 * s) - e_neg * (a / 2 * s)) * 0.5
            c.add("commuting part of exp(-nu t), general a",
                  max(_qerr(lhs, mid), _qerr(lhs, rhs)))
        pn_neg = exp_angle(perp.nu, -theta)
        c.add("commuting part of exp(-nu t), a = 0",
              max(_qerr(commuting_part(pn_neg, perp.mu, 0), math.cos(theta)),
                  _qerr(commuting_part(pn_neg, perp.mu, 1), perp.nu * -math.sin(theta))))

        c.add("single swap",
              _qerr(mul(mu, en_neg),
                    mul(en_pos, mu + nu * (a / 2)) - mul(en_neg, nu * (a / 2))))
        lhs = mul(mul(mul(nu, mu), e_neg), en_neg)
        rhs = (mul(mul(e_pos, en_pos), mul(nu, mu) - a / 2)
               + mul(e_neg, en_neg) * (a / 2))
        c.add("double swap", _qerr(lhs, rhs))
    return c.results()


# -- transform -----------------------------------------------------------------

def _passing_general(g: QField, roots: RootPair):
    """Root-passing identities for any pair; yields (name, lhs, rhs)."""
    F = lambda h: dft_left(h, roots)  # noqa: E731
    a = roots.a
    mu, nu, munu, numu = roots.mu, roots.nu, roots.munu, roots.numu
    g01, g10, g11 = g.reflect((0, 1)), g.reflect((1, 0)), g.reflect((1, 1))
    Fg = F(g)
    yield ("mu F(g)", mu * Fg,
           F(mu * g01) + F(nu * g01) * (a / 2) - F(nu * g) * (a / 2))
    yield ("nu F(g)", nu * Fg,
           F(nu * g10) + F(mu * g11) * (a / 2) - F(mu * g01) * (a / 2)
           + (F(nu * g11) - F(nu * g10) - F(nu * g01) + F(nu * g)) * (a * a / 4))
    yield ("nu mu F(g)", numu * Fg, F(numu * g11) - F(g11) * (a / 2) + F(g) * (a / 2))
    yield ("mu nu F(g)", munu * Fg, F(munu * g11) - F(g11) * (a / 2) + F(g) * (a / 2))


def qft_suite(rng: np.random.Generator, size: int, instances: int = 3) -> list[Check]:
    c = _Collector("qft")
    small = min(size, 4)
    for _ in range(instances):
        roots = sampling.random_pair(rng)
        perp = sampling.perpendicular_pair(rng)
        f = sampling.random_field(rng, size)
        g = sampling.random_field(rng, size)

        fs = sampling.random_field(rng, small, max(1, small - 1))
        c.add("dft_left vs brute-force sum", dft_left(fs, roots).max_abs_diff(reference.dft_left(fs, roots)))
        c.add("idft_left vs brute-force sum",
              idft_left(fs, roots).max_abs_diff(reference.dft_left(fs, roots, inverse=True)))

        F = dft_left(f, roots)
        c.add("fast_qft vs dft_left", fast_qft(f, roots).max_abs_diff(F))
        c.add("idft(dft(f)) = f", idft_left(F, roots).max_abs_diff(f))
        c.add("fast round trip", fast_qft(fast_qft(f, roots), roots, "inverse").max_abs_diff(f))
        c.add("Parseval (relative)", abs(F.norm() ** 2 - f.norm() ** 2) / f.norm() ** 2)
        alpha, beta = rng.uniform(-3, 3, size=2)
        c.add("real linearity",
              dft_left(f * alpha + g * beta, roots).max_abs_diff(F * alpha + dft_left(g, roots) * beta))
        for phi in REFLECTIONS:
            c.add("change of signs",
                  dft_left(f, change_of_signs(roots, phi)).max_abs_diff(dft_left(f.reflect(phi), roots)))
        Fp = dft_left(f, perp)
        for k in (0, 1):
            for l in (0, 1):
                coef = ONE
                if k:
                    coef = mul(coef, perp.mu)
                if l:
                    coef = mul(coef, perp.nu)
                c.add("root passing, anticommuting roots",
                      (coef * Fp).max_abs_diff(dft_left(coef * f.reflect((l, k)), perp)))
        for name, lhs, rhs in _passing_general(f, roots):
            c.add(f"root passing, general a: {name}", lhs.max_abs_diff(rhs))
    return c.results()


# -- theorems --------------------------------------------------------------------

def _suspect(table, f, g, roots, expected: QField, got: QField, product: str) -> str:
    """Name the term whose rescaling best explains ``got - expected``."""
    residual = (got - expected).data.ravel()
    best, best_left = None, math.inf
    mode = "naive" if product == "classical" else "cached"
    for t, contrib in conv.term_contributions(table, f, g, roots, product=product, mode=mode):
        v = contrib.data.ravel()
        vv = float(v @ v)
        if vv == 0.0:
            continue
        alpha = float(residual @ v) / vv
        left = float(np.linalg.norm(residual - alpha * v))
        if left < best_left:
            best, best_left = t, left
    return "none" if best is None else f"[{best.index}] {render_term(best)}"


def _check_expansion(c: _Collector, name: str, table, f, g, roots, expected, got,
                     product: str, tol: float) -> None:
    err = got.max_abs_diff(expected)
    suspect = None
    if not err <= tol:
        suspect = _suspect(table, f, g, roots, expected, got, product)
    c.add(name, err, suspect)


def _fields(rng, size, count):
    return [(sampling.random_field(rng, size), sampling.random_field(rng, size))
            for _ in range(count)]


def thm21_suite(rng, size, tol, tables=TABLES, instances=2) -> list[Check]:
    c = _Collector("thm21")
    table = tables["thm21"]
    for f, g in _fields(rng, size, instances):
        pairs = {"general": sampling.random_pair(rng),
                 "perpendicular": sampling.perpendicular_pair(rng)}
        mu = sampling.random_root(rng)
        pairs["mu = nu"] = RootPair(mu, mu)
        pairs["mu = -nu"] = RootPair(mu, -mu)
        for kind, roots in pairs.items():
            got = conv.mustard_via_classical(f, g, roots, table=table)
            _check_expansion(c, f"mustard = classical expansion ({kind})", table, f, g, roots,
                             conv.mustard_convolve(f, g, roots), got, "classical", tol)
        blocks = conv.block_contributions(table, f, g, pairs["perpendicular"], product="classical")
        c.add("a-block vanishes for a = 0", blocks[1].norm())
    expected_counts = {"mu = nu": 4, "mu = -nu": 4, "perpendicular": 16}
    for kind, count in expected_counts.items():
        got = len(collapse(table, pairs[kind]))
        c.add(f"surviving terms ({kind}) = {count}", 0.0 if got == count else math.inf)
    return c.results()


def thm31_suite(rng, size, tol, tables=TABLES, instances=3) -> list[Check]:
    c = _Collector("thm31")
    table = tables["thm31"]
    for f, g in _fields(rng, size, instances):
        mu = sampling.random_root(rng)
        roots = RootPair.single(mu)
        _check_expansion(c, "f * g = equal-root Mustard expansion", table, f, g, roots,
                         conv.classical_convolve(f, g),
                         conv.classical_via_mustard_equal(f, g, mu, table=table), "mustard", tol)
    return c.results()


def thm32_suite(rng, size, tol, tables=TABLES, instances=3) -> list[Check]:
    c = _Collector("thm32")
    table = tables["thm32"]
    for f, g in _fields(rng, size, instances):
        roots = sampling.perpendicular_pair(rng)
        _check_expansion(c, "f * g = perpendicular-root expansion", table, f, g, roots,
                         conv.classical_convolve(f, g),
                         conv.classical_via_mustard_perp(f, g, roots, table=table), "mustard", tol)
    return c.results()


def thm41_suite(rng, size, tol, tables=TABLES, instances=2) -> list[Check]:
    c = _Collector("thm41")
    table = tables["thm41"]
    for f, g in _fields(rng, size, instances):
        expected = conv.classical_convolve(f, g)
        for roots in sampling.spread_pairs(rng, 6):
            got = conv.classical_via_mustard_general(f, g, roots, table=table)
            _check_expansion(c, "f * g = general expansion", table, f, g, roots,
                             expected, got, "mustard", tol)
            naive = conv.classical_via_mustard_general(f, g, roots, table=table, mode="naive")
            c.add("accumulated mode = naive mode", got.max_abs_diff(naive))
        perp = sampling.perpendicular_pair(rng)
        c.add("a = 0 reduces to the perpendicular expansion",
              conv.classical_via_mustard_general(f, g, perp, table=table).max_abs_diff(
                  conv.classical_via_mustard_perp(f, g, perp, table=tables["thm32"])))
        g_even = (g + g.reflect((0, 1))) * 0.5
        blocks = conv.block_contributions(table, f, g_even, sampling.random_pair(rng))
        c.add("a^2-block vanishes when g^(0,1) = g", blocks[2].norm())
    return c.results()


def thm51_suite(rng, size, tol, tables=TABLES, instances=3) -> list[Check]:
    c = _Collector("thm51")
    table = tables["thm51"]
    for f, g in _fields(rng, size, instances):
        roots = sampling.perpendicular_pair(rng)
        _check_expansion(c, "qft(f * g) = spectral expansion", table, f, g, roots,
                         dft_left(conv.classical_convolve(f, g), roots),
                         conv.convolution_spectrum(f, g, roots, table=table), "spectrum", tol)
    return c.results()


def thm52_suite(rng, size, tol, tables=TABLES, instances=3) -> list[Check]:
    c = _Collector("thm52")
    table = tables["thm52"]
    for f, g in _fields(rng, size, instances):
        roots = sampling.perpendicular_pair(rng)
        corr = conv.cross_correlate(f, g)
        c.add("f star g = f^(1,1) * g", corr.max_abs_diff(conv.classical_convolve(f.reflect((1, 1)), g)))
        _check_expansion(c, "qft(f star g) = spectral expansion", table, f, g, roots,
                         dft_left(corr, roots),
                         conv.correlation_spectrum(f, g, roots, table=table), "spectrum", tol)
    return c.results()


def run(suites=SUITES, *, seed: int = 0, size: int = 8, tolerance: float = 1e-9,
        tables=TABLES, algebra_instances: int = 1000) -> list[Check]:
    """Run the named suites; every suite gets its own generator derived from ``seed``."""
    results: list[Check] = []
    for name in suites:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        rng = np.random.default_rng([seed, SUITES.index(name)])
        if name == "algebra":
            results += algebra_suite(rng, algebra_instances)
        elif name == "qft":
            results += qft_suite(rng, size)
        else:
            fn = globals()[f"{name}_suite"]
            results += fn(rng, size, tolerance, tables)
    return results
