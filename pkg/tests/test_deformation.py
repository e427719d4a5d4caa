import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import closed_form_weights, gamma_rows_by_hand, rank_by_minors
from twistordef.deformation import (
    AssembledRep,
    Configuration,
    DegenerateConfiguration,
    alpha_image,
    assemble,
    closed_form_rep,
    cokernel_block_dimensions,
    cokernel_rep,
    dimension_audit,
    gamma_matrix,
    gamma_vectors,
    normal_bundle_rep_c0,
)
from twistordef.exact import RatMatrix, is_rref, rank
from twistordef.weights import Weight, WeightRep, negate_rep


@st.composite
def configurations(draw, min_n=2, max_n=30):
    n = draw(st.integers(min_n, max_n))
    gaps = draw(
        st.lists(
            st.fractions(min_value=F(1, 97), max_value=F(50), max_denominator=97),
            min_size=n,
            max_size=n,
        )
    )
    a, acc = [], F(0)
    for g in gaps:
        acc += g
        a.append(acc)
    return Configuration(n, tuple(a))


class TestConfiguration:
    def test_rejects_bad_parameters(self):
        for bad in [(1, (1,)), (3, (1, 2)), (2, (2, 1)), (2, (1, 1)), (2, (0, 1)), (2, (-1, 1))]:
            with pytest.raises(ValueError):
                Configuration(*bad)

    def test_parse(self):
        cfg = Configuration.parse(3, "1/2, 1, 3/2")
        assert cfg.a == (F(1, 2), F(1), F(3, 2))
        assert Configuration.parse(4, None) == Configuration(4, (1, 2, 3, 4))

    def test_random_is_valid(self):
        rng = random.Random(1)
        for _ in range(50):
            Configuration.random(rng.randint(2, 12), rng)


def test_gamma_blocks_n3():
    g = gamma_vectors(Configuration(3, (1, 2, 3)))
    assert g[2].block(0) == (F(1, 2), F(2, 5), F(3, 10))
    assert g[5].block(0) == (F(-1, 2), F(-1, 5), F(-1, 10))
    assert not any(g[2].block(1) + g[2].block(2))


def test_gamma_matches_hand_formulas():
    a = [F(1, 3), F(2), F(9, 4), F(11)]
    cfg = Configuration(4, tuple(a))
    by_hand = gamma_rows_by_hand(a)
    for k, g in enumerate(gamma_vectors(cfg), start=1):
        assert list(g.block(0)) == by_hand[k]["nu"]
        assert list(g.block(1)) == by_hand[k]["unu"]
        assert list(g.block(2)) == by_hand[k]["u2nu"]


@pytest.mark.parametrize(
    "cfg",
    [Configuration(3, (1, 2, 3)), Configuration(2, (1, 2)), Configuration(4, (F(1, 2), 1, F(3, 2), 7))],
)
def test_alpha_image_rank_5(cfg):
    image = alpha_image(cfg)
    assert image.rows == 5 and image.cols == 3 * cfg.n
    assert is_rref(image)
    assert rank_by_minors(gamma_matrix(cfg).to_rows()) == 5


def test_alpha_image_degenerate_guard():
    # Bypass the Configuration invariants: equal parameters collapse the image.
    cfg = Configuration(2, (1, 2))
    object.__setattr__(cfg, "a", (F(1), F(1)))
    with pytest.raises(DegenerateConfiguration):
        alpha_image(cfg)


def test_cokernel_examples():
    assert cokernel_rep(Configuration(3, (1, 2, 3))) == WeightRep(
        {Weight(0, 0): 2, Weight(1, 0): 1, Weight(-1, 0): 1}
    )
    two = Configuration(2, (1, 2))
    assert cokernel_rep(two) == WeightRep({Weight(0, 0): 1})
    assert [(r, d) for _, _, r, d in cokernel_block_dimensions(two)] == [(2, 0), (1, 1), (2, 0)]
    assert cokernel_rep(Configuration.default(6)) == WeightRep(
        {Weight(0, 0): 5, Weight(1, 0): 4, Weight(-1, 0): 4}
    )


def test_normal_bundle_examples():
    assert normal_bundle_rep_c0(3) == WeightRep.from_pairs([(-2, 1), (-1, 1)])
    assert normal_bundle_rep_c0(2) == WeightRep()
    assert normal_bundle_rep_c0(5) == WeightRep.from_pairs(
        [(-4, 1), (-3, 1), (-2, 1), (-3, 1), (-2, 1), (-1, 1)]
    )


def test_assemble_n3():
    total = assemble(Configuration.default(3)).total
    assert total == WeightRep.from_pairs([(0, 0), (0, 0), (1, 0), (-1, 0), (-2, 1), (-1, 1), (2, -1), (1, -1)])
    assert total.dimension == 8


def test_assemble_n10_and_n2():
    assert assemble(Configuration.default(10)).total.dimension == 57
    assert assemble(Configuration.default(2)).total == WeightRep({Weight(0, 0): 1})


def test_closed_form_examples():
    assert closed_form_rep(4).rep3 == WeightRep.from_pairs([(3, -1), (2, -1), (2, -1), (1, -1)])
    two = closed_form_rep(2)
    assert two.rep1 == WeightRep({Weight(0, 0): 1}) and two.rep2 == two.rep3 == WeightRep()
    with pytest.raises(ValueError):
        closed_form_rep(1)


@pytest.mark.parametrize("n", range(2, 20))
def test_closed_form_matches_literal_enumeration(n):
    total = closed_form_rep(n).total
    assert {(w.m, w.n): k for w, k in total.items()} == dict(closed_form_weights(n))
    assert not closed_form_rep(n).check()


def test_assembled_check_reports_violation():
    bad = AssembledRep(WeightRep(), WeightRep.from_pairs([(1, 1)]), WeightRep.from_pairs([(1, 1)]), n=3)
    problems = bad.check()
    assert any("negation" in p for p in problems)
    assert any("rep1" in p for p in problems)


@settings(max_examples=200, deadline=None)
@given(configurations())
def test_assemble_equals_closed_form(cfg):
    rep = assemble(cfg)
    assert rep == closed_form_rep(cfg.n)
    assert rep.total.dimension == 7 * cfg.n - 13
    assert negate_rep(rep.total) == rep.total


@settings(max_examples=100, deadline=None)
@given(configurations(max_n=15))
def test_gamma_structure(cfg):
    g = gamma_vectors(cfg)
    assert not any((g[0] + g[3]).coords)
    assert all(len(v.support_blocks()) == 1 for v in g)
    assert rank(gamma_matrix(cfg)) == 5


def test_default_choice_does_not_matter():
    rng = random.Random(3)
    for n in range(2, 9):
        reps = {assemble(Configuration.random(n, rng)) for _ in range(5)}
        assert reps == {assemble(Configuration.default(n))}


class TestDimensionAudit:
    def test_n4_normal_contribution(self):
        checks = {c.name: c for c in dimension_audit(4)}
        assert checks["h1_normal_summand"].computed == 2
        assert checks["h1_normal_total"].computed == 8

    def test_n3_extension(self):
        assert {c.name: c for c in dimension_audit(3)}["extension_vanishing"].computed == 0

    def test_n2_h1_theta_y(self):
        assert {c.name: c for c in dimension_audit(2)}["h1_theta_Y"].computed == 1

    @pytest.mark.parametrize("n", range(2, 13))
    def test_all_pass(self, n):
        checks = dimension_audit(n)
        assert all(c.passed for c in checks), [c for c in checks if not c.passed]
        assert all(c.statement for c in checks)

    def test_failures_are_reported_not_raised(self):
        cfg = Configuration(3, (1, 2, 3))
        object.__setattr__(cfg, "a", (F(1), F(1), F(1)))
        checks = {c.name: c for c in dimension_audit(3, cfg)}
        assert not checks["image_rank"].passed
        assert checks["extension_vanishing"].passed
