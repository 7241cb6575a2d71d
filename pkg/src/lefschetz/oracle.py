"""Ground-truth Lefschetz verdicts via exact multiplication-matrix ranks.

The linear form is l = x_1 + ... + x_n.  For a monomial ideal this is as
general as it gets: rescaling the variables turns any form with all
coefficients nonzero into this one while permuting nothing, so the ranks of
the maps  l^t : A_i -> A_{i+t}  do not depend on the (nonzero) coefficients.
A randomized-coefficients mode is still provided as an empirical spot check.

Ranks are certified exactly and floating point is never used.  A fast
elimination modulo a word-size prime can only underestimate the rank over Q,
so whenever it reports min(dim) the map is proven to have full rank; every
remaining cell is recomputed by fraction-free integer elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MonomialIdeal, standard_monomial_table
from .series import HilbertSeries, hilbert_series

_PRIME = 2_147_483_647  # 2^31 - 1; products of two residues fit in int64

REASON_INJECTIVE = "injective"
REASON_SURJECTIVE = "surjective"
REASON_BIJECTIVE = "bijective"
REASON_NEITHER = "neither"


def _factorials(n):
    out = [1] * (n + 1)
    for k in range(1, n + 1):
        out[k] = out[k - 1] * k
    return out


def multiplication_matrix(ideal, i, t, coefficients=None):
    """Integer matrix of multiplication by l^t from degree i to degree i + t.

    Rows are indexed by the degree-(i+t) standard monomials, columns by the
    degree-i ones, both in graded lex order.  The (u, v) entry is the
    multinomial coefficient t! / prod((u_j - v_j)!) when u - v is
    componentwise nonnegative, else 0.  With ``coefficients`` c the entry
    carries the extra factor prod(c_j^(u_j - v_j)) coming from
    l = c_1 x_1 + ... + c_n x_n.

    Empty matrices (no rows or no columns) are fine and mean a zero space.
    """
    if t < 1:
        raise ValueError("the power t must be >= 1")
    if i < 0:
        raise ValueError("the source degree must be >= 0")
    if coefficients is not None and len(coefficients) != ideal.n:
        raise ValueError("need one linear form coefficient per variable")
    table = standard_monomial_table(ideal)
    src = table[i] if i < len(table) else ()
    tgt = table[i + t] if i + t < len(table) else ()
    fact = _factorials(t)
    rows = []
    for u in tgt:
        row = []
        for v in src:
            diff = [ue - ve for ue, ve in zip(u, v)]
            if any(d < 0 for d in diff):
                row.append(0)
                continue
            val = fact[t]
            for d in diff:
                if d > 1:
                    val //= fact[d]
            if coefficients is not None:
                for c, d in zip(coefficients, diff):
                    if d:
                        val *= c**d
            row.append(val)
        rows.append(row)
    return rows


def matrix_rank(matrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Exact for arbitrary integer entries: every intermediate value is a minor
    of the input matrix, kept as an arbitrary-precision integer.
    """
    M = [[int(x) for x in row] for row in matrix]
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    if ncols == 0:
        return 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if M[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
        pivot_row = M[rank]
        pivot = pivot_row[col]
        for r in range(rank + 1, nrows):
            row = M[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (pivot * row[c] - f * pivot_row[c]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_mod_prime(matrix, p=_PRIME) -> int:
    """Rank of an int64 matrix over F_p; never exceeds the rank over Q."""
    A = np.mod(matrix, p)
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank, col:] = A[rank, col:] * inv % p
        below = A[rank + 1 :, col]
        A[rank + 1 :, col:] = (
            A[rank + 1 :, col:] - below[:, None] * A[rank, col:][None, :]
        ) % p
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass
class MapRecord:
    """One multiplication map l^t : A_i -> A_{i+t} with its exact rank."""

    i: int
    t: int
    dim_src: int
    dim_tgt: int
    rank: int
    full_rank: bool
    reason: str

    def as_dict(self):
        return {
            "i": self.i,
            "t": self.t,
            "dim_src": self.dim_src,
            "dim_tgt": self.dim_tgt,
            "rank": self.rank,
            "full_rank": self.full_rank,
            "reason": self.reason,
        }


@dataclass
class LefschetzReport:
    """All maps with i + t <= socle degree, plus the WLP/SLP verdicts."""

    ideal: MonomialIdeal
    series: HilbertSeries
    maps: list
    wlp: bool
    slp: bool
    witnesses: list  # failing (i, t) pairs

    def map_at(self, i, t):
        for rec in self.maps:
            if rec.i == i and rec.t == t:
                return rec
        raise KeyError((i, t))

    def as_dict(self):
        return {
            "n": self.ideal.n,
            "generators": [list(g) for g in self.ideal.sorted_generators()],
            "hilbert_series": self.series.as_dict(),
            "wlp": self.wlp,
            "slp": self.slp,
            "witnesses": [list(w) for w in self.witnesses],
            "maps": [rec.as_dict() for rec in self.maps],
        }


def _reason_for(rank, dim_src, dim_tgt):
    # maps from the zero space are injective, maps onto it surjective
    if dim_src == 0 and dim_tgt == 0:
        return REASON_BIJECTIVE
    if dim_src == 0:
        return REASON_INJECTIVE
    if dim_tgt == 0:
        return REASON_SURJECTIVE
    if rank == dim_src == dim_tgt:
        return REASON_BIJECTIVE
    if rank == dim_src:
        return REASON_INJECTIVE
    if rank == dim_tgt:
        return REASON_SURJECTIVE
    return REASON_NEITHER


def _cell_matrix_int64(src, tgt, t, fact):
    """Vectorized exact build; valid only under the int64 bound checked by caller."""
    diff = tgt[:, None, :] - src[None, :, :]
    valid = (diff >= 0).all(axis=2)
    safe = np.where(valid[:, :, None], diff, 0)
    denom = fact[safe].prod(axis=2)
    return np.where(valid, fact[t] // denom, 0)


def lefschetz_report(ideal, coefficients=None) -> LefschetzReport:
    """Exact rank record of every map l^t : A_i -> A_{i+t}, i + t <= socle.

    Beyond the socle degree every target space is zero and full rank is
    automatic, so those cells are not enumerated.
    """
    series = hilbert_series(ideal)
    if series.is_zero():
        return LefschetzReport(ideal, series, [], True, True, [])
    socle = series.socle_degree
    table = standard_monomial_table(ideal)
    n = ideal.n

    # multinomial entries are bounded by n^t <= n^socle and factorials by
    # socle!; under these bounds the vectorized int64 build is exact
    fast = coefficients is None and socle <= 20 and n**socle < 2**62
    if fast:
        fact64 = np.array(_factorials(socle), dtype=np.int64)
        bases = [
            np.array([list(m) for m in bucket], dtype=np.int64).reshape(len(bucket), n)
            for bucket in table
        ]

    maps = []
    witnesses = []
    for t in range(1, socle + 1):
        for i in range(0, socle - t + 1):
            dim_src = len(table[i])
            dim_tgt = len(table[i + t])
            small = min(dim_src, dim_tgt)
            if small == 0:
                rank = 0
            elif fast:
                cell = _cell_matrix_int64(bases[i], bases[i + t], t, fact64)
                rank = _rank_mod_prime(cell)
                if rank < small:
                    exact = matrix_rank(cell.tolist())
                    assert exact >= rank  # modular rank never overshoots
                    rank = exact
            else:
                cell = multiplication_matrix(ideal, i, t, coefficients)
                reduced = np.array(
                    [[x % _PRIME for x in row] for row in cell], dtype=np.int64
                )
                rank = _rank_mod_prime(reduced)
                if rank < small:
                    exact = matrix_rank(cell)
                    assert exact >= rank
                    rank = exact
            full = rank == small
            maps.append(
                MapRecord(i, t, dim_src, dim_tgt, rank, full, _reason_for(rank, dim_src, dim_tgt))
            )
            if not full:
                witnesses.append((i, t))
    wlp = all(rec.full_rank for rec in maps if rec.t == 1)
    slp = not witnesses
    return LefschetzReport(ideal, series, maps, wlp, slp, witnesses)


def tensor_map_full_rank(base_series, d, i, t) -> bool:
    """Full rank of l^t : A_i -> A_{i+t} on A = B (x) k[z]/(z^d), from B's
    Hilbert function alone.

    B is assumed strong Lefschetz, so every base map l^e : B_j -> B_{j+e}
    has full rank and its direction is forced by the dimensions.  The tensor
    map has full rank exactly when the base maps

        l^(2q + t - (d-1)) : B_{i-q} -> B_{i+q+t-(d-1)},
        q = max(0, d - t), ..., d - 1

    can all have full rank for one common reason: all injective or all
    surjective.  Dimensions outside the support count as 0; a zero source is
    injective-capable and a zero target surjective-capable.
    """
    if d < 1:
        raise ValueError("the tensor exponent d must be >= 1")
    if t < 0:
        raise ValueError("the power t must be >= 0")
    injective_ok = True
    surjective_ok = True
    for q in range(max(0, d - t), d):
        exp = 2 * q + t - (d - 1)
        if exp < 0:
            continue  # vacuous map; cannot occur for t >= 1
        dim_src = base_series[i - q]
        dim_tgt = base_series[i + q + t - (d - 1)]
        if dim_src > dim_tgt:
            injective_ok = False
        elif dim_src < dim_tgt:
            surjective_ok = False
    return injective_ok or surjective_ok
