"""Hilbert series of Artinian monomial quotients, computed exactly.

A series is a dense vector of nonnegative integer coefficients together with
a degree offset; the offset stays 0 for honest quotient algebras and records
the grading shift of submodule slices.  Complete intersections get the closed
product form, one extra generator is split off by ideal-quotient additivity,
and a degree-by-degree counting route is kept alongside as an independent
cross-check.
"""

from __future__ import annotations

from .core import (
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    pure_power,
    standard_monomial_table,
)


class HilbertSeries:
    """Nonnegative integer coefficients with a degree offset.

    The zero series is represented with no coefficients.  Nonzero series are
    trimmed: the first and last stored coefficients are nonzero.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs, offset=0):
        cs = [int(c) for c in coeffs]
        for c in cs:
            if c < 0:
                raise ValueError("negative coefficient in Hilbert series")
        while cs and cs[-1] == 0:
            cs.pop()
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead:
            cs = cs[lead:]
        if not cs:
            self.offset = 0
            self.coeffs = ()
        else:
            self.offset = int(offset) + lead
            self.coeffs = tuple(cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def socle_degree(self) -> int:
        if self.is_zero():
            raise ValueError("the zero series has no socle degree")
        return self.offset + len(self.coeffs) - 1

    @property
    def total(self) -> int:
        """Sum of all coefficients (the vector space dimension)."""
        return sum(self.coeffs)

    def __getitem__(self, degree):
        k = degree - self.offset
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.offset == other.offset
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def shifted(self, k) -> "HilbertSeries":
        if self.is_zero():
            return self
        return HilbertSeries(self.coeffs, self.offset + k)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.socle_degree, other.socle_degree)
        return HilbertSeries([self[d] + other[d] for d in range(lo, hi + 1)], lo)

    def __sub__(self, other):
        """Coefficientwise difference; raises if any coefficient goes negative."""
        if other.is_zero():
            return self
        if self.is_zero():
            raise ValueError("negative coefficient in Hilbert series")
        lo = min(self.offset, other.offset)
        hi = max(self.socle_degree, other.socle_degree)
        return HilbertSeries([self[d] - other[d] for d in range(lo, hi + 1)], lo)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return HilbertSeries(())
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return HilbertSeries(out, self.offset + other.offset)

    def to_text(self) -> str:
        """Render like ``1 + 3t + 6t^2``."""
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            d = self.offset + k
            if d == 0:
                parts.append(str(c))
            else:
                term = "t" if d == 1 else f"t^{d}"
                parts.append(term if c == 1 else f"{c}{term}")
        return " + ".join(parts)

    def as_dict(self):
        return {"offset": self.offset, "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["coeffs"], data.get("offset", 0))

    def __repr__(self):
        return f"HilbertSeries({list(self.coeffs)}, offset={self.offset})"


def ci_series(exponents) -> HilbertSeries:
    """Series of a monomial complete intersection: prod of (1 + t + ... + t^(a-1))."""
    series = HilbertSeries([1])
    for a in exponents:
        if a < 1:
            raise ValueError("complete intersection exponents must be >= 1")
        series = series * HilbertSeries([1] * a)
    return series


def hilbert_series(ideal) -> HilbertSeries:
    """Exact Hilbert series of R/I for an Artinian monomial ideal I.

    Complete intersections use the closed product form.  Otherwise a
    non-pure-power generator m is split off via the ideal-quotient identity

        HS(R/K) = HS(R/(K + (m))) + t^deg(m) * HS(R/(K : m)),

    which for an almost complete intersection resolves in a single step.
    """
    if not ideal.is_artinian():
        raise ValueError("Hilbert series requires an Artinian ideal")
    if ideal.is_unit():
        return HilbertSeries(())
    cross = [g for g in ideal.generators if not g.is_pure_power()]
    if not cross:
        return ci_series([ideal.pure_power_bound(i) for i in range(ideal.n)])
    m = max(cross, key=lambda g: (g.degree, tuple(g)))
    rest = MonomialIdeal(ideal.n, [g for g in ideal.generators if g != m])
    quot = colon_by_monomial(rest, m)
    return hilbert_series(rest) - hilbert_series(quot).shifted(m.degree)


def hilbert_series_by_counting(ideal) -> HilbertSeries:
    """The same series obtained by counting standard monomials per degree.

    This is the independent enumeration route; it must agree with
    hilbert_series everywhere and is kept for cross-checking.
    """
    table = standard_monomial_table(ideal)
    return HilbertSeries([len(bucket) for bucket in table])


class MaciSpec:
    """Pure powers a_1..a_n plus one extra monomial generator m.

    Constraints: every a_i >= 1, 0 <= m_i < a_i, and m involves at least two
    variables.  Together these make (x_1^{a_1}, ..., x_n^{a_n}, m) an
    Artinian ideal with exactly n + 1 minimal generators.
    """

    __slots__ = ("n", "a", "m")

    def __init__(self, a, m):
        a = tuple(int(x) for x in a)
        m = m if isinstance(m, Monomial) else Monomial(m)
        if len(a) != len(m):
            raise ValueError("exponent vectors have different lengths")
        n = len(a)
        if n < 2:
            raise ValueError("need at least two variables")
        for ai, mi in zip(a, m):
            if ai < 1:
                raise ValueError("pure power exponents must be >= 1")
            if not mi < ai:
                raise ValueError("the extra generator needs m_i < a_i for every i")
        if len(m.support) < 2:
            raise ValueError("the extra generator must involve at least two variables")
        self.n = n
        self.a = a
        self.m = m

    def __eq__(self, other):
        return (
            isinstance(other, MaciSpec)
            and self.a == other.a
            and self.m == other.m
        )

    def __hash__(self):
        return hash((self.a, self.m))

    def __repr__(self):
        return f"MaciSpec(a={self.a}, m={tuple(self.m)})"

    def ideal(self) -> MonomialIdeal:
        gens = [pure_power(self.n, i, self.a[i]) for i in range(self.n)]
        gens.append(self.m)
        return MonomialIdeal(self.n, gens)

    def series(self) -> HilbertSeries:
        """Closed form: CI(a) minus the shifted CI on the slack exponents a - m."""
        slack = [ai - mi for ai, mi in zip(self.a, self.m)]
        return ci_series(self.a) - ci_series(slack).shifted(self.m.degree)

    def socle_degree(self) -> int:
        """Top nonzero degree: sum(a_i - 1) minus the smallest slack a_i - m_i
        over the support of m.

        The box corner prod x_i^{a_i - 1} is a multiple of m, so the top
        basis element drops exactly one support variable down to m_i - 1;
        the cheapest drop wins.
        """
        slack = min(self.a[i] - self.m[i] for i in self.m.support)
        return sum(self.a) - self.n - slack

    def total_dimension(self) -> int:
        """dim_k R/I = prod a_i - prod (a_i - m_i), by inclusion-exclusion."""
        box = 1
        inner = 1
        for ai, mi in zip(self.a, self.m):
            box *= ai
            inner *= ai - mi
        return box - inner

    def as_dict(self):
        return {"n": self.n, "a": list(self.a), "m": list(self.m)}

    @classmethod
    def from_dict(cls, data):
        spec = cls(data["a"], data["m"])
        if "n" in data and int(data["n"]) != spec.n:
            raise ValueError("declared n does not match the exponent vectors")
        return spec


def maci_from_ideal(ideal) -> MaciSpec:
    """Recover the (pure powers, extra generator) presentation, or raise."""
    bounds = []
    for i in range(ideal.n):
        b = ideal.pure_power_bound(i)
        if b is None:
            raise ValueError("not Artinian: missing a pure power")
        bounds.append(b)
    extra = [g for g in ideal.generators if not g.is_pure_power()]
    if len(extra) != 1:
        raise ValueError(
            f"expected exactly one non-pure-power generator, found {len(extra)}"
        )
    return MaciSpec(bounds, extra[0])
