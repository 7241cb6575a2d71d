"""Closed-form Lefschetz classification for almost complete intersections.

Two families are decidable without any rank computation: quotients whose
extra generator involves exactly two variables (through the almost-centered
criterion for the two-variable part), and quotients with a symmetric Hilbert
series (always strong Lefschetz).  The symmetric case is not returned as a
bare constant: the central-simple-module decomposition underlying it is
rebuilt and every one of its numeric proof obligations is re-checked, so a
bug or a genuine counterexample surfaces as a loud error instead of a quiet
wrong answer.  cross_verify compares both procedures against the rank oracle
over finite grids.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .analysis import coincides, is_symmetric, reflecting_degree, two_var_profile
from .core import Monomial, MonomialIdeal, pure_power
from .oracle import lefschetz_report
from .series import HilbertSeries, MaciSpec, hilbert_series, maci_from_ideal

RULE_N_EQ_2 = "n_eq_2"
RULE_N3_CUBE_LE_2 = "n3_cube_le_2"
RULE_ALMOST_CENTERED = "almost_centered"
RULE_EXPLICIT_CONDITIONS = "explicit_conditions"
RULE_SYMMETRIC_HS = "symmetric_hs"
RULE_NOT_APPLICABLE = "not_applicable"


class HypothesisViolation(RuntimeError):
    """A runtime proof obligation failed.

    Either the implementation is wrong or the input is a genuine
    counterexample; both must be surfaced, never suppressed.
    """


@dataclass(frozen=True)
class ClassificationVerdict:
    slp: bool
    rule: str
    details: dict

    def as_dict(self):
        return {"slp": self.slp, "rule": self.rule, "details": self.details}


def classify_support_two(spec) -> ClassificationVerdict:
    """Strong Lefschetz verdict for an extra generator x_i^alpha x_j^beta.

    The support pair is relabeled to (x1, x2) and normalized so that
    a1 + beta <= a2 + alpha.  Variables whose pure power exponent is 1
    vanish in the quotient and are discarded before the case analysis.
    The quotient is strong Lefschetz iff one of:

      * only the support pair remains,
      * one extra variable remains and its exponent is at most 2,
      * the two-variable part k[x1,x2]/(x1^a1, x2^a2, x1^alpha x2^beta)
        is almost centered, or, equivalently,
      * a2 < a1 + beta + 2 and (a1 = alpha + 1 or beta = 1 or
        a2 >= a1 + beta - 1).
    """
    supp = spec.m.support
    if len(supp) != 2:
        raise ValueError("the extra generator must involve exactly two variables")
    i, j = supp
    a1, alpha = spec.a[i], spec.m[i]
    a2, beta = spec.a[j], spec.m[j]
    swapped = a1 + beta > a2 + alpha
    if swapped:
        (a1, alpha), (a2, beta) = (a2, beta), (a1, alpha)
    extras = sorted(spec.a[k] for k in range(spec.n) if k not in supp)
    active = [e for e in extras if e >= 2]
    n_eff = 2 + len(active)
    profile = two_var_profile(a1, a2, alpha, beta)
    stars = {
        "a1_eq_alpha_plus_1": a1 == alpha + 1,
        "beta_eq_1": beta == 1,
        "a2_ge_a1_plus_beta_minus_1": a2 >= a1 + beta - 1,
    }
    explicit = a2 < a1 + beta + 2 and any(stars.values())
    details = {
        "support": (i + 1, j + 1),
        "swapped": swapped,
        "a1": a1,
        "a2": a2,
        "alpha": alpha,
        "beta": beta,
        "extras": extras,
        "ignored_unit_exponents": len(extras) - len(active),
        "n_effective": n_eff,
        "two_var_almost_centered": profile.almost_centered,
        "explicit_conditions": explicit,
        "stars": stars,
    }
    if n_eff == 2:
        return ClassificationVerdict(True, RULE_N_EQ_2, details)
    if n_eff == 3 and active[0] <= 2:
        return ClassificationVerdict(True, RULE_N3_CUBE_LE_2, details)
    if profile.almost_centered:
        return ClassificationVerdict(True, RULE_ALMOST_CENTERED, details)
    if explicit:
        return ClassificationVerdict(True, RULE_EXPLICIT_CONDITIONS, details)
    return ClassificationVerdict(False, RULE_NOT_APPLICABLE, details)


def symmetric_witness(spec):
    """Ordering of the support variables certifying a symmetric series, or None.

    The Hilbert series is symmetric exactly when the support exponents a_i,
    listed in increasing order, each exceed their predecessor by the matching
    extra-generator exponent m_i.  Ties among the a_i are conclusive
    failures: consecutive climbs along a valid ordering are strictly
    positive, so a witness ordering must be the ascending sort.
    """
    order = sorted(spec.m.support, key=lambda k: spec.a[k])
    for prev, cur in zip(order, order[1:]):
        if spec.a[cur] != spec.a[prev] + spec.m[cur]:
            return None
    return tuple(order)


def is_symmetric_maci(spec) -> bool:
    return symmetric_witness(spec) is not None


def _ci_ideal(exponents) -> MonomialIdeal:
    n = len(exponents)
    return MonomialIdeal(n, [pure_power(n, i, e) for i, e in enumerate(exponents)])


@dataclass(frozen=True)
class CsmPiece:
    """A central simple module slice, presented as a quotient in n-1 variables."""

    ideal: MonomialIdeal
    shift: int
    multiplier: int

    def widened_series(self) -> HilbertSeries:
        """Series of the piece tensored with k[t]/(t^multiplier), shifted."""
        width = HilbertSeries([1] * self.multiplier)
        return hilbert_series(self.ideal).shifted(self.shift) * width

    def as_dict(self):
        return {
            "generators": [list(g) for g in self.ideal.sorted_generators()],
            "n": self.ideal.n,
            "shift": self.shift,
            "multiplier": self.multiplier,
            "widened_series": self.widened_series().as_dict(),
        }


@dataclass(frozen=True)
class CsmDecomposition:
    variable: int  # 0-based index of the variable used as the linear form
    pieces: tuple

    def total_series(self) -> HilbertSeries:
        total = HilbertSeries(())
        for piece in self.pieces:
            total = total + piece.widened_series()
        return total

    def as_dict(self):
        return {
            "variable": self.variable + 1,
            "pieces": [p.as_dict() for p in self.pieces],
        }


def csm_decomposition(spec, var=None) -> CsmDecomposition:
    """Central simple module pieces of the quotient with respect to x_var.

    Writing p for the extra exponents: when p_var >= 1 there are two pieces,

      * the (n-1)-variable quotient with the extra generator truncated at
        var, with multiplier a_var and no shift; if the truncation leaves a
        single-variable power it merges with the matching pure power and the
        piece degenerates to a complete intersection;
      * the complete intersection on the slack exponents a_k - p_k, with
        multiplier p_var, shifted by the sum of the dropped p_k.

    When p_var = 0 the quotient is a tensor product and the first piece
    stands alone.  The widened series always sum to the series of the
    quotient; slp_symmetric re-checks that identity at runtime.

    The default variable is the support variable with the largest pure power
    exponent.  For symmetric quotients that is the last entry of the witness
    ordering, which is the choice that makes the widened reflecting degrees
    line up with the ambient one.
    """
    if var is None:
        var = max(spec.m.support, key=lambda k: (spec.a[k], k))
    if not 0 <= var < spec.n:
        raise ValueError("variable index out of range")
    rest = [k for k in range(spec.n) if k != var]
    trunc = [spec.m[k] for k in rest]
    a_rest = [spec.a[k] for k in rest]
    n1 = len(rest)
    if sum(1 for e in trunc if e) >= 2:
        gens = [pure_power(n1, k, a_rest[k]) for k in range(n1)]
        gens.append(Monomial(trunc))
        head = MonomialIdeal(n1, gens)
    else:
        merged = [trunc[k] if trunc[k] else a_rest[k] for k in range(n1)]
        head = _ci_ideal(merged)
    pieces = [CsmPiece(head, 0, spec.a[var])]
    if spec.m[var] >= 1:
        slack = [a - p for a, p in zip(a_rest, trunc)]
        pieces.append(CsmPiece(_ci_ideal(slack), sum(trunc), spec.m[var]))
    return CsmDecomposition(var, tuple(pieces))


def _try_maci(ideal):
    try:
        return maci_from_ideal(ideal)
    except ValueError:
        return None


def _check_symmetric_decomposition(spec):
    series = spec.series()
    if not is_symmetric(series):
        raise HypothesisViolation(f"series {series.coeffs} is not a palindrome for {spec}")
    ambient = reflecting_degree(series)
    dec = csm_decomposition(spec)
    if dec.total_series() != series:
        raise HypothesisViolation(f"widened piece series do not sum to the quotient series for {spec}")
    for piece in dec.pieces:
        if not is_symmetric(hilbert_series(piece.ideal)):
            raise HypothesisViolation(f"piece {piece.ideal} has a non-symmetric series for {spec}")
        if not coincides(reflecting_degree(piece.widened_series()), ambient):
            raise HypothesisViolation(f"widened reflecting degree of {piece.ideal} misses that of {spec}")
    head = _try_maci(dec.pieces[0].ideal)
    if head is not None and head.n >= 3:
        _check_symmetric_decomposition(head)
    # complete intersection pieces and two-variable quotients are the base
    # cases; both are classically strong Lefschetz


def slp_symmetric(spec) -> bool:
    """Strong Lefschetz verdict for a symmetric-series spec (always True).

    Rather than returning a constant, this walks the inductive
    central-simple-module decomposition behind the statement and re-checks
    every hypothesis along the way: series additivity, symmetry of every
    piece, and the widened reflecting degrees coinciding with the ambient
    one, recursively down to complete intersections or two variables.  Any
    failed check raises HypothesisViolation.
    """
    if not is_symmetric_maci(spec):
        raise ValueError("the Hilbert series of this spec is not symmetric")
    _check_symmetric_decomposition(spec)
    return True


def classify_maci(spec):
    """Dispatch to whichever classification rule covers the input, or None."""
    if len(spec.m.support) == 2:
        return classify_support_two(spec)
    if is_symmetric_maci(spec):
        slp_symmetric(spec)
        witness = symmetric_witness(spec)
        return ClassificationVerdict(
            True, RULE_SYMMETRIC_HS, {"witness_order": [k + 1 for k in witness]}
        )
    return None


def _cross_one(key):
    spec = MaciSpec(key[0], key[1])
    verdict = classify_maci(spec)
    if verdict is None:
        return None
    oracle = lefschetz_report(spec.ideal()).slp
    if oracle == verdict.slp:
        return None
    return {
        "spec": spec.as_dict(),
        "predicted": verdict.slp,
        "oracle": oracle,
        "rule": verdict.rule,
    }


def cross_verify(specs, jobs=1):
    """Compare every applicable classification verdict against the rank oracle.

    Returns the list of disagreements, expected empty; a nonempty result is
    data worth reporting, not an error.
    """
    keys = [(spec.a, tuple(spec.m)) for spec in specs]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cross_one, keys, chunksize=64))
    else:
        results = [_cross_one(k) for k in keys]
    return [r for r in results if r is not None]


def support_two_grid(n_values, max_exp, extra_exp=None):
    """All specs with extra generator x1^alpha x2^beta (canonical placement).

    Every support-two quotient is a relabeling of one of these.  Non-support
    exponents run over 1..max_exp, or are pinned to extra_exp when given.
    """
    specs = []
    for n in n_values:
        if n < 2:
            continue
        extra_range = (extra_exp,) if extra_exp is not None else range(1, max_exp + 1)
        for a1 in range(2, max_exp + 1):
            for a2 in range(2, max_exp + 1):
                for alpha in range(1, a1):
                    for beta in range(1, a2):
                        for extras in product(extra_range, repeat=n - 2):
                            a = (a1, a2) + tuple(extras)
                            m = (alpha, beta) + (0,) * (n - 2)
                            specs.append(MaciSpec(a, m))
    return specs


def _support_chains(size, cap, max_socle):
    """Ascending support exponent chains (values, climbs) with the climb law
    values[k] = values[k-1] + climbs[k]; climbs[0] is the free first exponent."""
    chains = []

    def grow(values, climbs):
        head_socle = climbs[0] + sum(values[1:]) - size
        if head_socle > max_socle:
            return
        if len(values) == size:
            chains.append((tuple(values), tuple(climbs)))
            return
        for delta in range(1, cap - values[-1] + 1):
            grow(values + [values[-1] + delta], climbs + [delta])

    for first in range(2, cap + 1):
        for p1 in range(1, first):
            grow([first], [p1])
    return chains


def symmetric_grid(n_values, max_socle, max_exp=None):
    """Every labeled spec with a symmetric Hilbert series and socle degree
    at most max_socle.

    Support exponents form an ascending chain climbing by the matching extra
    exponents; the chain is assigned to every choice of support positions in
    every order, and non-support exponents fill in freely within the socle
    budget.
    """
    cap = max_exp if max_exp is not None else max_socle + 2
    specs = []
    for n in n_values:
        if n < 2:
            continue
        for size in range(2, n + 1):
            for supp in combinations(range(n), size):
                nonsupp = [k for k in range(n) if k not in supp]
                for values, climbs in _support_chains(size, cap, max_socle):
                    budget = max_socle - (climbs[0] + sum(values[1:]) - size)
                    free = [
                        extras
                        for extras in product(range(1, cap + 1), repeat=len(nonsupp))
                        if sum(e - 1 for e in extras) <= budget
                    ]
                    for assign in permutations(range(size)):
                        base_a = {k: values[assign[pos]] for pos, k in enumerate(supp)}
                        base_m = {k: climbs[assign[pos]] for pos, k in enumerate(supp)}
                        for extras in free:
                            a = [0] * n
                            m = [0] * n
                            for k in supp:
                                a[k] = base_a[k]
                                m[k] = base_m[k]
                            for k, e in zip(nonsupp, extras):
                                a[k] = e
                            spec = MaciSpec(a, m)
                            if spec.socle_degree() <= max_socle:
                                specs.append(spec)
    return specs


def all_maci_grid(n_values, max_exp):
    """Every spec with the given variable counts and exponents <= max_exp."""
    for n in n_values:
        if n < 2:
            continue
        for a in product(range(1, max_exp + 1), repeat=n):
            for m in product(*[range(ai) for ai in a]):
                if sum(1 for e in m if e) >= 2:
                    yield MaciSpec(a, m)


def grid_from_json(obj):
    """Materialize a grid description like
    {"n": [2, 4], "max_exp": 6, "family": "support_two"}.

    Optional keys: "extra_exp" pins non-support exponents (support_two),
    "max_socle" bounds the socle degree (symmetric).
    """
    family = obj.get("family")
    n_spec = obj.get("n", [2, 4])
    if isinstance(n_spec, int):
        ns = range(n_spec, n_spec + 1)
    else:
        lo, hi = n_spec
        ns = range(lo, hi + 1)
    if family == "support_two":
        return support_two_grid(ns, obj.get("max_exp", 6), obj.get("extra_exp"))
    if family == "symmetric":
        return symmetric_grid(ns, obj.get("max_socle", 14), obj.get("max_exp"))
    if family == "all_maci":
        return list(all_maci_grid(ns, obj.get("max_exp", 4)))
    raise ValueError(f"unknown grid family: {family!r}")
