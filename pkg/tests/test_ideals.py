import numpy as np
import pytest

from algebra.components.groebner import extended_gcd, groebner as raw_groebner, symmetric_remainder
from algebra.components.witness import find_common_zero
from algebra.ideals import (
    COMMON_ZERO, CONSTANT_GCD, GROEBNER, UNIT_GENERATOR, ZERO_IDEAL, Ideal, contains, decide_triviality,
    equal, groebner, is_trivial, normal_form,
)
from algebra.polynomials import evaluate, parse_polynomial, polynomial_ring, render
from utils.config import config
from utils.errors import GroebnerBudgetExhausted


@pytest.fixture
def R():
    return polynomial_ring(("x1", "x2"))


@pytest.fixture
def no_witness(monkeypatch):
    monkeypatch.setattr(config.settings.witness, "enabled", False)


def ideal(R, *texts: str) -> Ideal:
    return Ideal(R, [parse_polynomial(R, t) for t in texts])


def test_generators_are_normalized(R):
    I = ideal(R, "x1", "-x1", "0", "x2 - 1")
    assert len(I) == 2
    assert set(I.serialize()) == {"x1", "x2 - 1"}


def test_symmetric_remainder_and_gcd():
    assert symmetric_remainder(7, 3) == (2, 1)
    assert symmetric_remainder(8, 3) == (3, -1)
    assert extended_gcd(4, 6)[2] == 2
    u, v, d = extended_gcd(-9, 6)
    assert u * -9 + v * 6 == d == 3


@pytest.mark.parametrize("texts, trivial, method", [
    ((), False, ZERO_IDEAL),
    (("x1", "-1"), True, UNIT_GENERATOR),
    (("2", "3", "x1"), True, CONSTANT_GCD),
    (("x1*x2",), False, COMMON_ZERO),
    (("2", "x1 + 1"), False, COMMON_ZERO),
    (("x1 + 1", "x1"), True, GROEBNER),
])
def test_decide_triviality(R, texts, trivial: bool, method: str):
    decision = decide_triviality(ideal(R, *texts))
    assert decision.trivial is trivial
    assert decision.method == method


def test_common_zero_reports_point(R):
    decision = decide_triviality(ideal(R, "2", "x1 + 1"))
    assert decision.modulus == 2
    assert decision.point == [1, 0]


def test_groebner_decides_without_witness(R, no_witness):
    decision = decide_triviality(ideal(R, "2", "x1 + 1"))
    assert decision.method == GROEBNER
    assert not decision.trivial
    assert is_trivial(ideal(R, "2*x1 + 1", "3*x1 + 1"))


def test_strong_groebner_basis_over_integers(R):
    # <2*x1, 3*x1> = <x1> over ZZ, which a field-style basis would miss
    gb = groebner(ideal(R, "2*x1", "3*x1"))
    assert [render(g) for g in gb] == ["x1"]
    gb = groebner(ideal(R, "2", "x1 + 1"))
    assert sorted(render(g) for g in gb) == ["2", "x1 + 1"]
    assert render(normal_form(parse_polynomial(R, "x1^2 + 3"), gb)) == "0"
    assert render(normal_form(parse_polynomial(R, "x1"), gb)) == "1"


def test_contains_and_equal(R):
    I = ideal(R, "x1", "x2")
    J = ideal(R, "x1*x2 + x1")
    assert contains(I, J)
    assert not contains(J, I)
    assert equal(ideal(R, "x1 + x2", "x2"), I)
    assert contains(I, Ideal.zero(R))
    assert not contains(Ideal.zero(R), I)
    assert contains(Ideal.unit(R), I)


def test_contains_rejects_mixed_rings(R):
    S = polynomial_ring(("y1",))
    with pytest.raises(ValueError):
        contains(ideal(R, "x1"), Ideal(S, [S.gens[0]]))


def test_budget_exhaustion(R):
    generators = [parse_polynomial(R, "x1*x2 + 1"), parse_polynomial(R, "x1^2 + x2")]
    with pytest.raises(GroebnerBudgetExhausted) as exc_info:
        raw_groebner(R, generators, budget=0)
    assert exc_info.value.budget == 0
    assert "I_4" in str(exc_info.value.at_index(4))


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("CRITID_BUDGET", "17")
    assert config.groebner_budget == 17
    monkeypatch.setenv("CRITID_BUDGET", "lots")
    assert config.groebner_budget == config.settings.groebner.pair_budget


TEST_GENERATOR_SETS = [
    ("2*x1", "3*x1"),
    ("2", "x1 + 1"),
    ("x1 + 1", "x1"),
    ("x1*x2", "x2 - 1"),
    ("2*x1 + 1", "3*x1 + 1"),
    ("x1*x2 - 1", "x1^2 + x2"),
    ("x1^2 + 1", "x1*x2 - 2*x2"),
]


def random_polynomial(R, rng, terms: int = 3, degree: int = 2):
    p = R.zero
    for _ in range(terms):
        coeff = int(rng.integers(-4, 5))
        if coeff:
            monom = tuple(int(e) for e in rng.integers(0, degree + 1, size=R.ngens))
            p += R.from_dict({monom: coeff})
    return p


@pytest.mark.parametrize("texts", TEST_GENERATOR_SETS)
def test_generators_reduce_to_zero_against_own_basis(R, texts):
    I = ideal(R, *texts)
    gb = groebner(I)
    assert all(gb.reduces_to_zero(g) for g in I.generators)


@pytest.mark.parametrize("texts", TEST_GENERATOR_SETS)
def test_normal_form_is_idempotent(R, texts):
    gb = groebner(ideal(R, *texts))
    rng = np.random.default_rng(len(texts[0]))
    for _ in range(10):
        p = random_polynomial(R, rng)
        nf = normal_form(p, gb)
        assert normal_form(nf, gb) == nf
        assert gb.reduces_to_zero(p - nf)


@pytest.mark.parametrize("texts", TEST_GENERATOR_SETS)
def test_triviality_ignores_order_and_redundancy(R, texts):
    polys = [parse_polynomial(R, t) for t in texts]
    expected = is_trivial(Ideal(R, polys))
    assert is_trivial(Ideal(R, polys[::-1])) is expected
    redundant = polys[0] * R.gens[1] + polys[-1] * 3
    assert is_trivial(Ideal(R, polys + [redundant])) is expected


@pytest.mark.parametrize("texts", TEST_GENERATOR_SETS)
def test_triviality_ignores_redundancy_without_witness(R, no_witness, texts):
    polys = [parse_polynomial(R, t) for t in texts]
    redundant = polys[-1] * R.gens[0] - polys[0]
    assert is_trivial(Ideal(R, polys + [redundant])) is is_trivial(Ideal(R, polys))


@pytest.mark.parametrize("seed", range(10))
def test_reported_common_zeros_vanish(R, seed: int):
    rng = np.random.default_rng(seed)
    a1, a2 = (int(v) for v in rng.integers(-2, 3, size=2))
    x1, x2 = R.gens
    planted = [random_polynomial(R, rng) * (x1 - a1) + random_polynomial(R, rng) * (x2 - a2) for _ in range(3)]
    free = [random_polynomial(R, rng) for _ in range(2)]
    for polys, has_zero in ((planted, True), (free, False)):
        generators = [g for g in polys if g]
        zero = find_common_zero(generators, R.ngens, [2, 3], 2, 200000)
        if has_zero and generators:
            assert zero is not None
        if zero is None:
            continue
        point = dict(enumerate(zero.point))
        for g in generators:
            value = evaluate(g, point)
            assert (value % zero.modulus if zero.modulus else value) == 0
