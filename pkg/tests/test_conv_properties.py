"""Worked examples and structural properties of the convolution expansions."""
import numpy as np
import pytest

from qconv import conv, sampling
from qconv.field import QField
from qconv.qft import dft_left
from qconv.quaternion import ONE, RootPair, make_root
from qconv.terms import TABLES


def _span_one_mu(rng, n, mu):
    """Field valued in span{1, mu}."""
    a, b = rng.uniform(-1, 1, (2, n, n))
    return QField(a[..., None] * ONE.to_array() + b[..., None] * mu.to_array())


def test_constant_fields(backend):
    p, q = make_root(1, 2, 0) * 1.5, make_root(0, 1, -1)
    out = conv.classical_convolve(QField.constant(3, 4, p), QField.constant(3, 4, q))
    assert out.max_abs_diff(QField.constant(3, 4, (p * q) * 12.0)) <= 1e-13


def test_real_fields_equal_roots_mustard_is_classical(rng):
    f = QField.from_components(rng.uniform(-1, 1, (8, 8)))
    g = QField.from_components(rng.uniform(-1, 1, (8, 8)))
    mu = sampling.random_root(rng)
    assert conv.mustard_convolve(f, g, RootPair(mu, mu)).max_abs_diff(conv.classical_convolve(f, g)) <= 1e-10


def test_span_one_mu_degenerates_to_complex_case(rng):
    mu = sampling.random_root(rng)
    f, g = _span_one_mu(rng, 8, mu), _span_one_mu(rng, 8, mu)
    spatial = conv.classical_convolve(f, g)
    assert conv.mustard_convolve(f, g, RootPair(mu, mu)).max_abs_diff(spatial) <= 1e-10
    assert conv.classical_via_mustard_equal(f, g, mu).max_abs_diff(spatial) <= 1e-10


def test_span_one_mu_perpendicular_expansion(rng):
    r = sampling.perpendicular_pair(rng)
    f, g = _span_one_mu(rng, 8, r.mu), _span_one_mu(rng, 8, r.mu)
    assert conv.classical_via_mustard_perp(f, g, r).max_abs_diff(conv.classical_convolve(f, g)) <= 1e-9


@pytest.mark.parametrize("name", ["mustard", "equal", "perp", "general", "spec51", "spec52", "corr"])
def test_delta_at_origin(rng, name):
    g = sampling.random_field(rng, 4, 4)
    d = QField.delta(4, 4)
    r = sampling.perpendicular_pair(rng)
    out = {
        "mustard": lambda: conv.mustard_convolve(d, g, sampling.random_pair(rng)),
        "equal": lambda: conv.classical_via_mustard_equal(d, g, r.mu),
        "perp": lambda: conv.classical_via_mustard_perp(d, g, r),
        "general": lambda: conv.classical_via_mustard_general(d, g, sampling.random_pair(rng)),
        "spec51": lambda: conv.convolution_spectrum(d, g, r),
        "spec52": lambda: conv.correlation_spectrum(d, g, r),
        "corr": lambda: conv.cross_correlate(d, g),
    }[name]()
    want = dft_left(g, r) if name.startswith("spec") else g
    assert out.max_abs_diff(want) <= 1e-10


def test_autocorrelation_of_ones():
    one = QField.constant(3, 5, ONE)
    assert conv.cross_correlate(one, one).max_abs_diff(QField.constant(3, 5, ONE * 15.0)) == 0.0


def test_correlation_spectrum_is_reflected_convolution_spectrum(rng):
    f, g = sampling.random_field(rng, 8, 8), sampling.random_field(rng, 8, 8)
    r = RootPair(make_root(0, 1, 0), make_root(0, 0, 1))
    assert conv.correlation_spectrum(f, g, r).max_abs_diff(
        conv.convolution_spectrum(f.reflect((1, 1)), g, r)) <= 1e-12


def test_even_real_f_spectrum(rng):
    base = rng.uniform(-1, 1, (8, 8))
    even = QField.from_components(base)
    even = (even + even.reflect((1, 0)) + even.reflect((0, 1)) + even.reflect((1, 1))) * 0.25
    g = sampling.random_field(rng, 8, 8)
    r = RootPair(make_root(1, 0, 0), make_root(0, 0, 1))
    assert conv.convolution_spectrum(even, g, r).max_abs_diff(
        dft_left(conv.classical_convolve(even, g), r)) <= 1e-9


def test_bidirectional_closure(rng):
    """Each Mustard term of the general expansion re-expanded as 32 classical terms."""
    f, g = sampling.random_field(rng, 4, 4), sampling.random_field(rng, 4, 4)
    r = sampling.random_pair(rng)
    out = conv.classical_via_mustard_general(f, g, r, mustard=conv.mustard_via_classical)
    assert out.max_abs_diff(conv.classical_convolve(f, g)) <= 1e-8


@pytest.mark.parametrize("which", ["f", "g"])
def test_expansions_are_real_linear(rng, which):
    f, g, h = (sampling.random_field(rng, 4, 4) for _ in range(3))
    r = sampling.perpendicular_pair(rng)
    s, t = rng.uniform(-2, 2, 2)
    fns = [lambda x, y: conv.classical_via_mustard_general(x, y, r),
           lambda x, y: conv.mustard_via_classical(x, y, r),
           lambda x, y: conv.convolution_spectrum(x, y, r),
           lambda x, y: conv.correlation_spectrum(x, y, r)]
    for fn in fns:
        if which == "f":
            lhs, rhs = fn(f * s + h * t, g), fn(f, g) * s + fn(h, g) * t
        else:
            lhs, rhs = fn(f, g * s + h * t), fn(f, g) * s + fn(f, h) * t
        assert lhs.max_abs_diff(rhs) <= 1e-10


@pytest.mark.parametrize("name", list(TABLES))
def test_weights_are_exact_dyadic_rationals(name):
    for t in TABLES[name]:
        den = t.weight.denominator
        assert den & (den - 1) == 0
        assert float(t.weight) * den == t.weight.numerator
