"""Monomial arithmetic, parsing, colon ideals, bases and Hilbert series."""

import pytest

from lefschetz import (
    HilbertSeries,
    IdealSyntaxError,
    MaciSpec,
    Monomial,
    MonomialIdeal,
    ci_series,
    colon_by_monomial,
    hilbert_series,
    hilbert_series_by_counting,
    maci_from_ideal,
    minimalize,
    parse_ideal,
    pure_power,
    render_ideal,
    standard_monomials,
)
from _util import rand_artinian_ideal, rand_maci, rand_monomial, seeded

TOGLIATTI = "x1^3, x2^3, x3^3, x1*x2*x3"
GOLDEN = "x1^2, x2^3, x3^4, x4^5, x1*x2*x3*x4"


def test_monomial_basics():
    m = Monomial((2, 0, 1))
    assert m.degree == 3
    assert m.support == (0, 2)
    assert not m.is_unit() and not m.is_pure_power()
    assert Monomial((0, 3, 0)).is_pure_power()
    assert Monomial((2, 0, 1)).divides((2, 1, 1))
    assert not Monomial((2, 0, 1)).divides((1, 5, 5))
    assert m.times((0, 1, 0)) == Monomial((2, 1, 1))
    assert m.quotient_by((1, 1, 0)) == Monomial((1, 0, 1))
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_parse_togliatti():
    ideal = parse_ideal(TOGLIATTI)
    assert ideal.n == 3
    assert len(ideal.generators) == 4
    assert Monomial((1, 1, 1)) in ideal.generators


def test_parse_minimalizes():
    ideal = parse_ideal("x1^2, x1^3")
    assert ideal.generators == frozenset({Monomial((2,))})


def test_parse_syntax_error_position():
    with pytest.raises(IdealSyntaxError) as exc:
        parse_ideal("x1^^2")
    assert exc.value.position == 3
    with pytest.raises(IdealSyntaxError):
        parse_ideal("")
    with pytest.raises(IdealSyntaxError):
        parse_ideal("   ")
    with pytest.raises(IdealSyntaxError):
        parse_ideal("x1^2,")
    with pytest.raises(IdealSyntaxError):
        parse_ideal("x1 x2")
    with pytest.raises(IdealSyntaxError):
        parse_ideal("y1^2")
    with pytest.raises(IdealSyntaxError):
        parse_ideal("x0^2")


def test_parse_exponent_overflow():
    with pytest.raises(OverflowError):
        parse_ideal("x1^99999999999999999999")


def test_parse_repeated_factors_multiply():
    ideal = parse_ideal("x1*x1*x2^2")
    assert ideal.generators == frozenset({Monomial((2, 2))})


def test_parse_declared_width():
    ideal = parse_ideal("x1^2, x2^2", n=4)
    assert ideal.n == 4
    with pytest.raises(ValueError):
        parse_ideal("x3^2", n=2)


def test_minimalize_examples():
    x2, x3, y = Monomial((2, 0)), Monomial((3, 0)), Monomial((0, 1))
    assert minimalize({x2, x3, y}) == frozenset({x2, y})
    assert minimalize({Monomial((1, 1)), Monomial((2, 2))}) == frozenset({Monomial((1, 1))})
    untouched = {Monomial((4, 0)), Monomial((0, 5)), Monomial((2, 3))}
    assert minimalize(untouched) == frozenset(untouched)


def test_minimalize_idempotent_small():
    rng = seeded(11)
    for _ in range(300):
        n = rng.randint(1, 4)
        gens = [rand_monomial(rng, n, 5) for _ in range(rng.randint(1, 7))]
        once = minimalize(gens)
        assert minimalize(once) == once
        rng.shuffle(gens)
        assert minimalize(gens) == once


def test_colon_two_variable_example():
    # (x^a, y^b, x^alpha y^beta) : x^alpha = (x^(a-alpha), y^beta)
    a, b, alpha, beta = 5, 4, 2, 2
    ideal = MonomialIdeal(2, [(a, 0), (0, b), (alpha, beta)])
    got = colon_by_monomial(ideal, Monomial((alpha, 0)))
    assert got.generators == frozenset({Monomial((a - alpha, 0)), Monomial((0, beta))})


def test_colon_pure_powers_by_full_support():
    ci = parse_ideal("x1^3, x2^3, x3^3")
    got = colon_by_monomial(ci, Monomial((1, 1, 1)))
    assert got.generators == frozenset(
        {Monomial((2, 0, 0)), Monomial((0, 2, 0)), Monomial((0, 0, 2))}
    )


def test_colon_identity_and_unit():
    ideal = parse_ideal(TOGLIATTI)
    assert colon_by_monomial(ideal, Monomial((0, 0, 0))) == ideal
    # m inside the ideal: the colon is the unit ideal
    assert colon_by_monomial(ideal, Monomial((1, 1, 1))).is_unit()


def test_standard_monomials_examples():
    ideal = parse_ideal("x1^2, x2^2, x1*x2")
    assert standard_monomials(ideal, 0) == [Monomial((0, 0))]
    assert standard_monomials(ideal, 1) == [Monomial((1, 0)), Monomial((0, 1))]
    assert standard_monomials(ideal, 2) == []
    assert standard_monomials(ideal, -1) == []


def test_standard_monomials_graded_lex_order():
    ideal = parse_ideal("x1^4, x2^4, x3^4")
    basis = standard_monomials(ideal, 2)
    assert basis[0] == Monomial((2, 0, 0))
    assert basis == sorted(basis, key=lambda m: tuple(m), reverse=True)


def test_standard_monomials_require_artinian():
    with pytest.raises(ValueError):
        standard_monomials(parse_ideal("x1^2", n=2), 1)


def test_hilbert_series_golden():
    hs = hilbert_series(parse_ideal(GOLDEN))
    assert hs.offset == 0
    assert hs.coeffs == (1, 4, 9, 15, 19, 19, 15, 9, 4, 1)


def test_hilbert_series_togliatti():
    assert hilbert_series(parse_ideal(TOGLIATTI)).coeffs == (1, 3, 6, 6, 3)


def test_hilbert_series_square_ci():
    assert hilbert_series(parse_ideal("x1^2, x2^2")).coeffs == (1, 2, 1)


def test_hilbert_series_unit_and_errors():
    unit = MonomialIdeal(2, [Monomial((0, 0))])
    assert hilbert_series(unit).is_zero()
    assert hilbert_series_by_counting(unit).is_zero()
    with pytest.raises(ValueError):
        hilbert_series(parse_ideal("x1^2", n=2))


def test_hilbert_routes_agree():
    rng = seeded(23)
    for _ in range(150):
        ideal = rand_artinian_ideal(rng, rng.randint(1, 3), max_bound=5, extra=3)
        assert hilbert_series(ideal) == hilbert_series_by_counting(ideal), ideal


def test_quotient_additivity_small():
    rng = seeded(31)
    for _ in range(300):
        n = rng.randint(1, 3)
        base = rand_artinian_ideal(rng, n, max_bound=4, extra=2)
        m = rand_monomial(rng, n, 4)
        lhs = hilbert_series(base)
        rhs = hilbert_series(base.plus_monomial(m)) + hilbert_series(
            colon_by_monomial(base, m)
        ).shifted(m.degree)
        assert lhs == rhs, (base, m)


def test_series_normalization_and_arithmetic():
    assert HilbertSeries([0, 0, 1, 2, 0]).offset == 2
    assert HilbertSeries([0, 0, 1, 2, 0]).coeffs == (1, 2)
    zero = HilbertSeries([])
    assert zero.is_zero() and zero.offset == 0
    with pytest.raises(ValueError):
        HilbertSeries([1, -1])
    s = HilbertSeries([1, 2, 1])
    assert s[0] == 1 and s[2] == 1 and s[3] == 0 and s[-1] == 0
    assert (s + zero) == s and (s - zero) == s
    assert (s + s).coeffs == (2, 4, 2)
    with pytest.raises(ValueError):
        zero - s
    shifted = s.shifted(2)
    assert shifted.offset == 2 and shifted.socle_degree == 4
    prod = HilbertSeries([1, 1]) * HilbertSeries([1, 2])
    assert prod.coeffs == (1, 3, 2)
    assert s.total == 4
    assert HilbertSeries.from_dict(s.as_dict()) == s
    assert s.to_text() == "1 + 2t + t^2"
    assert zero.to_text() == "0"


def test_ci_series():
    assert ci_series([2, 2]).coeffs == (1, 2, 1)
    assert ci_series([1, 1, 1]).coeffs == (1,)
    assert ci_series([4]).coeffs == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        ci_series([0])


def test_socle_degree_examples():
    assert MaciSpec((2, 3, 4, 5), (1, 1, 1, 1)).socle_degree() == 9
    assert MaciSpec((3, 3, 3), (1, 1, 1)).socle_degree() == 4
    # two variables: b + alpha - 2 after normalization
    assert MaciSpec((4, 6), (2, 3)).socle_degree() == 6


def test_socle_degree_with_zero_support_slack():
    # the smallest slack must be taken over the support of m only; a cheap
    # non-support variable cannot be dropped below exponent 0
    spec = MaciSpec((4, 4, 2), (1, 1, 0))
    assert spec.socle_degree() == 4
    assert spec.series().socle_degree == 4


def test_socle_degree_matches_series():
    rng = seeded(41)
    for _ in range(400):
        spec = rand_maci(rng, rng.randint(2, 4), 6)
        assert spec.socle_degree() == spec.series().socle_degree, spec


def test_total_dimension_identity():
    rng = seeded(43)
    for _ in range(200):
        spec = rand_maci(rng, rng.randint(2, 4), 6)
        assert spec.series().total == spec.total_dimension(), spec


def test_maci_series_matches_counting():
    rng = seeded(47)
    for _ in range(150):
        spec = rand_maci(rng, rng.randint(2, 4), 5)
        assert spec.series() == hilbert_series_by_counting(spec.ideal()), spec


def test_maci_spec_validation():
    with pytest.raises(ValueError):
        MaciSpec((3, 3), (0, 0))  # unit extra generator
    with pytest.raises(ValueError):
        MaciSpec((3, 3), (2, 0))  # single-variable support
    with pytest.raises(ValueError):
        MaciSpec((3, 3), (3, 1))  # m_i >= a_i
    with pytest.raises(ValueError):
        MaciSpec((3, 0), (1, 1))
    with pytest.raises(ValueError):
        MaciSpec((3,), (1,))


def test_maci_from_ideal():
    spec = maci_from_ideal(parse_ideal(TOGLIATTI))
    assert spec.a == (3, 3, 3) and tuple(spec.m) == (1, 1, 1)
    with pytest.raises(ValueError):
        maci_from_ideal(parse_ideal("x1^2, x2^2"))
    with pytest.raises(ValueError):
        maci_from_ideal(parse_ideal("x1^4, x2^4, x1*x2^2, x1^2*x2"))


def test_render_parse_roundtrip_small():
    rng = seeded(53)
    for _ in range(200):
        ideal = rand_artinian_ideal(rng, rng.randint(1, 4), max_bound=6, extra=3)
        assert parse_ideal(render_ideal(ideal)) == ideal, ideal
    with pytest.raises(ValueError):
        render_ideal(MonomialIdeal(2, [Monomial((0, 0))]))


def test_pure_power_helper():
    assert pure_power(3, 1, 4) == Monomial((0, 4, 0))
