"""Multiplication matrices, exact ranks and Lefschetz reports."""

import numpy as np
import pytest

from lefschetz import (
    HilbertSeries,
    MaciSpec,
    Monomial,
    MonomialIdeal,
    hilbert_series,
    lefschetz_report,
    matrix_rank,
    multiplication_matrix,
    parse_ideal,
    standard_monomials,
    tensor_map_full_rank,
)
from lefschetz.oracle import _rank_mod_prime
from _util import rand_artinian_ideal, rand_maci, seeded

TOGLIATTI = parse_ideal("x1^3, x2^3, x3^3, x1*x2*x3")


def test_matrix_square_of_form_on_two_squares():
    # (x + y)^2 = x^2 + 2xy + y^2 reduces to 2xy mod (x^2, y^2)
    ideal = parse_ideal("x1^2, x2^2")
    assert multiplication_matrix(ideal, 0, 2) == [[2]]


def test_matrix_beyond_socle_has_no_rows():
    ideal = parse_ideal("x1^2, x2^2")
    assert multiplication_matrix(ideal, 2, 1) == []
    assert multiplication_matrix(ideal, 0, 5) == []


def test_matrix_togliatti_middle_cell():
    mat = multiplication_matrix(TOGLIATTI, 2, 1)
    assert mat == [
        [1, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1, 1],
    ]
    assert matrix_rank(mat) == 5


def test_matrix_validation():
    with pytest.raises(ValueError):
        multiplication_matrix(TOGLIATTI, 0, 0)
    with pytest.raises(ValueError):
        multiplication_matrix(TOGLIATTI, -1, 1)
    with pytest.raises(ValueError):
        multiplication_matrix(TOGLIATTI, 0, 1, coefficients=[1, 2])


def test_matrix_column_sums_at_t_one():
    rng = seeded(101)
    for _ in range(60):
        ideal = rand_artinian_ideal(rng, rng.randint(2, 3), max_bound=4, extra=2)
        if ideal.is_unit():
            continue
        top = hilbert_series(ideal).socle_degree
        for i in range(top):
            mat = multiplication_matrix(ideal, i, 1)
            src = standard_monomials(ideal, i)
            if not mat or not src:
                continue
            sums = [sum(row[k] for row in mat) for k in range(len(src))]
            for k, v in enumerate(src):
                expected = sum(
                    1
                    for j in range(ideal.n)
                    if not ideal.contains(v.times(Monomial(int(j == w) for w in range(ideal.n))))
                )
                assert sums[k] == expected


def test_matrix_rank_basics():
    assert matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([[1, 1], [1, 1]]) == 1
    assert matrix_rank([]) == 0
    assert matrix_rank([[3]]) == 1
    assert matrix_rank([[0]]) == 0
    # known rank-2 with a zero pivot on the way
    assert matrix_rank([[0, 1, 2], [0, 0, 0], [3, 0, 1]]) == 2


def test_matrix_rank_matches_modular_on_small_integers():
    # 6x6 with entries <= 9: every minor is far below the prime, so the
    # modular rank provably equals the rank over Q
    rng = seeded(103)
    for _ in range(300):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        if rng.random() < 0.4 and rows > 1:  # force rank deficiency sometimes
            mat[-1] = [2 * x for x in mat[0]]
        exact = matrix_rank(mat)
        modular = _rank_mod_prime(np.array(mat, dtype=np.int64))
        assert exact == modular, mat


def test_rank_invariance_under_permutation_small():
    rng = seeded(107)
    for _ in range(200):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        r = matrix_rank(mat)
        rng.shuffle(mat)
        cols_order = list(range(cols))
        rng.shuffle(cols_order)
        shuffled = [[row[c] for c in cols_order] for row in mat]
        assert matrix_rank(shuffled) == r


def test_report_togliatti():
    report = lefschetz_report(TOGLIATTI)
    assert not report.wlp
    assert not report.slp
    assert report.witnesses == [(2, 1)]
    rec = report.map_at(2, 1)
    assert (rec.dim_src, rec.dim_tgt, rec.rank) == (6, 6, 5)
    assert rec.reason == "neither"
    # kernel bookkeeping for t = 1 over h = 1,3,6,6,3: kernels 0, 0, 1, 3
    assert sum(r.dim_src - r.rank for r in report.maps if r.t == 1) == 4


def test_report_golden_example_has_slp():
    report = lefschetz_report(parse_ideal("x1^2, x2^3, x3^4, x4^5, x1*x2*x3*x4"))
    assert report.slp and report.wlp and report.witnesses == []


def test_report_two_variables():
    report = lefschetz_report(parse_ideal("x1^2, x2^2, x1*x2"))
    assert report.slp


def test_report_unit_quotient_is_vacuous():
    report = lefschetz_report(MonomialIdeal(2, [Monomial((0, 0))]))
    assert report.slp and report.wlp and report.maps == []


def test_report_reason_bookkeeping():
    report = lefschetz_report(parse_ideal("x1^3, x2^4, x1*x2^2"))
    for rec in report.maps:
        assert rec.full_rank == (rec.rank == min(rec.dim_src, rec.dim_tgt))
        if rec.reason == "bijective":
            assert rec.rank == rec.dim_src == rec.dim_tgt
        if rec.reason == "neither":
            assert not rec.full_rank


def test_report_matches_python_build_path():
    # coefficients (1, ..., 1) force the generic build; the default path uses
    # the vectorized construction, so this pins the two against each other
    rng = seeded(109)
    for _ in range(10):
        spec = rand_maci(rng, rng.randint(2, 3), 4)
        ideal = spec.ideal()
        fast = lefschetz_report(ideal)
        slow = lefschetz_report(ideal, coefficients=(1,) * ideal.n)
        assert [(r.i, r.t, r.rank) for r in fast.maps] == [
            (r.i, r.t, r.rank) for r in slow.maps
        ]


def test_report_invariant_under_variable_permutation():
    rng = seeded(113)
    for _ in range(12):
        spec = rand_maci(rng, rng.randint(2, 4), 5)
        perm = list(range(spec.n))
        rng.shuffle(perm)
        other = MaciSpec([spec.a[p] for p in perm], [spec.m[p] for p in perm])
        r1 = lefschetz_report(spec.ideal())
        r2 = lefschetz_report(other.ideal())
        assert [(m.i, m.t, m.rank) for m in r1.maps] == [(m.i, m.t, m.rank) for m in r2.maps]


def test_report_random_form_matches_all_ones():
    # any form with all nonzero coefficients is diagonal-conjugate to the
    # all-ones form, so the ranks must agree exactly
    rng = seeded(127)
    for _ in range(8):
        spec = rand_maci(rng, rng.randint(2, 3), 4)
        ideal = spec.ideal()
        coeffs = [rng.randint(1, 9) for _ in range(ideal.n)]
        base = lefschetz_report(ideal)
        scaled = lefschetz_report(ideal, coefficients=coeffs)
        assert [(m.i, m.t, m.rank) for m in base.maps] == [
            (m.i, m.t, m.rank) for m in scaled.maps
        ]


def test_tensor_map_full_rank_examples():
    # base k[x,y]/(x^2, y^5, x*y): h = 1, 2, 1, 1, 1
    stairs = hilbert_series(parse_ideal("x1^2, x2^5, x1*x2"))
    assert stairs.coeffs == (1, 2, 1, 1, 1)
    # d=3, i=1, t=3: the q=0 window map is surjective-only (2 -> 1) while the
    # q=2 window map is injective-only (0 -> 1), so no common reason exists
    assert tensor_map_full_rank(stairs, 3, 1, 3) is False
    # d=1 reduces to a single base map, always fine for a strong Lefschetz base
    rng = seeded(131)
    for _ in range(50):
        spec = rand_maci(rng, 2, 6)
        h = spec.series()
        top = h.socle_degree
        for t in range(1, top + 1):
            for i in range(0, top - t + 1):
                assert tensor_map_full_rank(h, 1, i, t)
    # symmetric unimodal base: always full rank
    sym = HilbertSeries([1, 3, 5, 5, 3, 1])
    for d in range(1, 5):
        for t in range(0, 10):
            for i in range(-2, 10):
                assert tensor_map_full_rank(sym, d, i, t)


def test_tensor_map_full_rank_validation():
    h = HilbertSeries([1, 1])
    with pytest.raises(ValueError):
        tensor_map_full_rank(h, 0, 0, 1)
    with pytest.raises(ValueError):
        tensor_map_full_rank(h, 2, 0, -1)
    assert tensor_map_full_rank(h, 3, 0, 0)  # identity map, vacuous window


def test_two_variable_quotients_always_strong_lefschetz():
    # exhaustive over exponents <= 10
    for a in range(2, 11):
        for b in range(2, 11):
            for alpha in range(1, a):
                for beta in range(1, b):
                    spec = MaciSpec((a, b), (alpha, beta))
                    assert lefschetz_report(spec.ideal()).slp, spec
