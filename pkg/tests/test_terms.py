from fractions import Fraction

import pytest

from qconv import sampling
from qconv.quaternion import RootPair
from qconv.terms import (TABLES, THM21, THM31, THM32, THM41, collapse, corrupt, parse_table,
                         render_table, render_term)

import numpy as np


@pytest.mark.parametrize("name,count", [("thm21", 32), ("thm31", 4), ("thm32", 16),
                                        ("thm41", 40), ("thm51", 16), ("thm52", 16)])
def test_term_counts(name, count):
    table = TABLES[name]
    assert len(table) == count
    assert [t.index for t in table] == list(range(count))


def test_block_weights():
    assert sum(1 for t in THM41 if t.a_power == 1) == 16
    assert sum(1 for t in THM41 if t.a_power == 2) == 8
    assert {abs(t.weight) for t in THM41 if t.a_power == 0} == {Fraction(1, 4)}
    assert {abs(t.weight) for t in THM21} == {Fraction(1, 4), Fraction(1, 8)}
    assert {abs(t.weight) for t in THM31} == {Fraction(1, 2)}


def test_parse_single_term():
    (t,) = parse_table([("a^2/8", "- nu mu f10 * mu g11")])
    assert t.weight == Fraction(-1, 8) and t.a_power == 2
    assert t.f_coef == "nu mu" and tuple(t.f_refl) == (1, 0)
    assert t.g_coef == "mu" and tuple(t.g_refl) == (1, 1)
    assert t.value(2.0) == pytest.approx(-0.5)


@pytest.mark.parametrize("bad", [("1/4", "+ f * h"), ("x/4", "+ f * g"), ("1/4", "f * g")])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_table([bad])


@pytest.mark.parametrize("table", list(TABLES.values()), ids=list(TABLES))
def test_render_round_trip(table):
    for t in table:
        text = render_term(t)
        sign, rest = text[0], text[1:]
        weight, body = rest.split(" ", 1)
        body = body.replace("(", "").replace(")", "")
        (back,) = parse_table([(weight, sign + " " + body)])
        assert (back.weight, back.a_power, back.f_coef, back.f_refl, back.g_coef, back.g_refl) == \
               (t.weight, t.a_power, t.f_coef, t.f_refl, t.g_coef, t.g_refl)
    assert render_table(table).count("\n") == len(table) - 1


def test_corrupt_changes_one_term():
    bad = corrupt(THM41, 17)
    diffs = [i for i, (x, y) in enumerate(zip(THM41, bad)) if x != y]
    assert diffs == [17] and bad[17].weight == -THM41[17].weight


def test_collapse_counts(rng):
    mu = sampling.random_root(rng)
    perp = sampling.perpendicular_pair(rng)
    general = sampling.random_pair(rng)
    assert len(collapse(THM21, RootPair(mu, mu))) == 4
    assert len(collapse(THM21, RootPair(mu, -mu))) == 4
    assert len(collapse(THM21, perp)) == 16
    assert len(collapse(THM21, general)) == 32
    assert len(collapse(THM41, perp)) == 16
    assert len(collapse(THM32, perp)) == 16


def test_equal_root_collapse_matches_single_root_form(rng):
    mu = sampling.random_root(rng)
    got = sorted((round(w, 12), tuple(cf), tuple(fr), tuple(cg), tuple(gr))
                 for w, cf, fr, cg, gr in collapse(THM21, RootPair(mu, mu)))
    want = sorted((round(w, 12), tuple(cf), tuple(fr), tuple(cg), tuple(gr))
                  for w, cf, fr, cg, gr in collapse(THM31, RootPair(mu, mu)))
    assert len(got) == len(want) == 4
    assert [g[0] for g in got] == [w[0] for w in want]
    assert np.allclose([g[1] + g[3] for g in got], [w[1] + w[3] for w in want])
