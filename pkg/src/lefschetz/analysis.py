"""Structural predicates on Hilbert series.

Symmetry, unimodality and almost-centeredness, plus the closed-form profile
of a two-variable almost complete intersection; the profile fields are what
the classification procedures consume.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import HilbertSeries

SHAPE_ALL_ON_TOP = "all_on_top"
SHAPE_ALL_ON_RIGHT = "all_on_right"
SHAPE_SLANT_1 = "slant_1"
SHAPE_SLANT_2 = "slant_2"
SHAPE_SLANT_3 = "slant_3"


@dataclass(frozen=True)
class ReflectingDegree:
    """Center (p+q)/2 of a symmetric series, stored doubled to stay integral."""

    twice: int

    @property
    def value(self):
        return self.twice / 2

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def is_symmetric(hs) -> bool:
    """True iff the trimmed coefficient vector is a palindrome."""
    if hs.is_zero():
        raise ValueError("symmetry is undefined for the zero series")
    return hs.coeffs == hs.coeffs[::-1]


def reflecting_degree(hs) -> ReflectingDegree:
    if not is_symmetric(hs):
        raise ValueError("series is not symmetric")
    return ReflectingDegree(hs.offset + hs.socle_degree)


def coincides(r1, r2) -> bool:
    """Equal or half an integer apart."""
    return abs(r1.twice - r2.twice) <= 1


def is_unimodal(hs) -> bool:
    if hs.is_zero():
        return True
    c = hs.coeffs
    k = 1
    while k < len(c) and c[k] >= c[k - 1]:
        k += 1
    while k < len(c) and c[k] <= c[k - 1]:
        k += 1
    return k == len(c)


def is_almost_centered(hs) -> bool:
    """Definitional check: one of the two interleaved inequality chains holds.

    With h indexed 0..D (0 outside), the series is almost centered iff

        h_{i-1} <= h_{D-i} <= h_i   for all 0 <= i <= D//2, or
        h_{D-i+1} <= h_i <= h_{D-i} for all 0 <= i <= D//2.

    Defined for standard graded algebras only, so the offset must be 0.
    """
    if hs.is_zero():
        raise ValueError("almost-centeredness is undefined for the zero series")
    if hs.offset != 0:
        raise ValueError("almost-centeredness requires a series starting in degree 0")
    top = hs.socle_degree
    first = all(
        hs[i - 1] <= hs[top - i] <= hs[i] for i in range(top // 2 + 1)
    )
    if first:
        return True
    return all(
        hs[top - i + 1] <= hs[i] <= hs[top - i] for i in range(top // 2 + 1)
    )


def is_almost_centered_noncrossing(hs) -> bool:
    """Equivalent no-crossing form of the same predicate.

    Once two coefficients compare strictly (h_i < h_j or h_i > h_j for some
    i < j), every widened pair h_{i-s}, h_{j+s} must compare the same way.
    Scanning each center i + j from narrow to wide pairs, the nonzero
    comparison signs must therefore all agree.
    """
    if hs.is_zero():
        raise ValueError("almost-centeredness is undefined for the zero series")
    if hs.offset != 0:
        raise ValueError("almost-centeredness requires a series starting in degree 0")
    top = hs.socle_degree
    for center in range(2 * top + 1):
        first_sign = 0
        lo = min(-1, center - top - 1)
        for i in range((center - 1) // 2, lo - 1, -1):
            left, right = hs[i], hs[center - i]
            sign = (left < right) - (left > right)
            if sign == 0:
                continue
            if first_sign == 0:
                first_sign = sign
            elif sign != first_sign:
                return False
    return True


@dataclass(frozen=True)
class TwoVarProfile:
    """Shape data of HS(k[x,y]/(x^a, y^b, x^alpha y^beta)), normalized."""

    a: int
    b: int
    alpha: int
    beta: int
    swapped: bool
    socle_degree: int
    max_degree: int
    symmetric: bool
    almost_centered: bool
    shape_case: str

    def as_dict(self):
        return {
            "a": self.a,
            "b": self.b,
            "alpha": self.alpha,
            "beta": self.beta,
            "swapped": self.swapped,
            "socle_degree": self.socle_degree,
            "max_degree": self.max_degree,
            "symmetric": self.symmetric,
            "almost_centered": self.almost_centered,
            "shape_case": self.shape_case,
        }


def two_var_profile(a, b, alpha, beta) -> TwoVarProfile:
    """Closed-form profile of the two-variable quotient k[x,y]/(x^a, y^b, x^alpha y^beta).

    The parameters are normalized (swapping the roles of x and y if needed)
    so that a + beta <= b + alpha; all reported facts refer to the
    normalized values.  The series increases by exactly one per degree up to
    its peak at min(a, alpha + beta) - 1, then weakly decreases in steps of
    at most two down to the socle degree b + alpha - 2; it is symmetric iff
    a + beta = b, and fails to be almost centered exactly when
    b >= a + beta + 2, or a - alpha >= 2, beta >= 2 and b <= a + beta - 2.
    """
    if not (1 <= alpha < a):
        raise ValueError("need 1 <= alpha < a")
    if not (1 <= beta < b):
        raise ValueError("need 1 <= beta < b")
    swapped = a + beta > b + alpha
    if swapped:
        a, alpha, b, beta = b, beta, a, alpha
    socle = b + alpha - 2
    peak = min(a, alpha + beta) - 1
    symmetric = a + beta == b
    not_centered = (b >= a + beta + 2) or (
        a - alpha >= 2 and beta >= 2 and b <= a + beta - 2
    )
    # informational case split mirroring the possible shapes of the sum of
    # the two complete intersection series; ties go to the first match
    if a + beta - 2 <= b - 1:
        shape = SHAPE_ALL_ON_TOP
    elif b <= alpha:
        shape = SHAPE_ALL_ON_RIGHT
    elif max(a, alpha + beta) <= b:
        shape = SHAPE_SLANT_1
    elif min(a, alpha + beta) <= b:
        shape = SHAPE_SLANT_2
    else:
        shape = SHAPE_SLANT_3
    return TwoVarProfile(
        a=a,
        b=b,
        alpha=alpha,
        beta=beta,
        swapped=swapped,
        socle_degree=socle,
        max_degree=peak,
        symmetric=symmetric,
        almost_centered=not not_centered,
        shape_case=shape,
    )


def symmetric_product_check(p, q):
    """(p symmetric, q symmetric, p*q symmetric) for nonzero series.

    Exposed for the property suite: whenever two of the three are
    palindromes, so is the third.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("factors must be nonzero")
    return (is_symmetric(p), is_symmetric(q), is_symmetric(p * q))
