"""Expected maximal loci and the rank-comparison inequality.

For fixed genus g and rank r the largest degree with rho < 0 is

    d_max(g, r) = r + ceil(g*r / (r+1)) - 1,

and the locus (g, r, d_max) is "expected maximal": it is not trivially
contained in any other proper locus.  Such loci exist exactly for ranks
1 <= r <= r_max_expected(g).  At d_max both rho and kappa have closed forms,
which makes large scans cheap; this module also houses the genus scans that
locate, for each rank r, the genera where the strict kappa inequality

    kappa(g, r, d_max(g, r)) > kappa(g, s, d_max(g, s))   for all s > r

fails, and the threshold G(r) past which it always holds.

Three choices of the s-range are supported.  MAXIMAL compares against the
ranks s <= r_max_expected(g) (the default).  PAPER uses the smaller bound
s <= floor(sqrt(g) - 1/2).  LEMMA uses the coarser bound s <= ceil(sqrt(g)-1),
which additionally includes, for g just above a square, a top rank whose
maximal-degree locus has d > g - 1 and is Serre-dual to a lower-rank one;
published tables of exceptional genera include those duplicate comparisons,
so reproducing them requires LEMMA (see the README).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import bn_core
from .bn_core import BNLocus, KappaResult
from .errors import DomainError, InternalError
from .exact_arith import Surd, floor_neg_2sqrt, isqrt, surd_sign

__all__ = [
    "SRange",
    "MaximalLocusRecord",
    "d_max",
    "r_max_expected",
    "is_expected_maximal",
    "enumerate_expected_maximal",
    "rho_at_dmax",
    "kappa_at_dmax",
    "kappa_bounds",
    "f_criterion",
    "genus_threshold_holds",
    "genus_threshold_min",
    "ineq_holds_all_s",
    "compute_G",
    "exceptional_genera",
    "min_genus_for_rank",
]


class SRange(Enum):
    """Which ranks s > r to compare against in the kappa inequality."""

    MAXIMAL = "maximal"  # s <= r_max_expected(g)
    PAPER = "paper"      # s <= floor(sqrt(g) - 1/2)
    LEMMA = "lemma"      # s <= ceil(sqrt(g) - 1)


@dataclass(frozen=True)
class MaximalLocusRecord:
    """An expected maximal locus with its invariants and kappa bounds."""

    locus: BNLocus
    rho: int
    kappa: KappaResult
    lower_bound: Surd  # exclusive lower bound for kappa
    upper_bound: Surd  # inclusive upper bound for kappa


def d_max(g: int, r: int) -> int:
    """Largest degree d with rho(g, r, d) < 0: r + ceil(g*r/(r+1)) - 1."""
    if g < 2 or r < 1:
        raise DomainError(f"d_max requires g >= 2 and r >= 1, got ({g}, {r})")
    return r + -(-g * r // (r + 1)) - 1


def r_max_expected(g: int) -> int:
    """Largest rank admitting an expected maximal locus at genus g.

    Equals ceil(sqrt(g) - 1) when g >= floor(sqrt(g))^2 + floor(sqrt(g)),
    and floor(sqrt(g) - 1) otherwise; both collapse to a single isqrt test.
    """
    if g < 3:
        raise DomainError(f"r_max_expected requires g >= 3, got {g}")
    s = isqrt(g)
    return s if g >= s * (s + 1) else s - 1


def is_expected_maximal(g: int, r: int, d: int) -> bool:
    """True iff (g, r, d) is a proper locus not trivially contained in one.

    Requires 2r <= d <= g - 1 and rho < 0, with both one-step specialization
    targets already improper: rho(g, r, d+1) >= 0 and rho(g, r-1, d-1) >= 0.
    """
    if g < 3 or r < 1:
        raise DomainError(f"is_expected_maximal requires g >= 3, r >= 1, got ({g}, {r})")
    if not (2 * r <= d <= g - 1):
        return False
    return (
        bn_core.rho(g, r, d) < 0
        and bn_core.rho(g, r, d + 1) >= 0
        and bn_core.rho(g, r - 1, d - 1) >= 0
    )


def rho_at_dmax(g: int, r: int) -> int:
    """rho at the maximal degree: -(r + 1 - (g mod (r+1))), always in [-(r+1), -1]."""
    if g < 2 or r < 1:
        raise DomainError(f"rho_at_dmax requires g >= 2 and r >= 1, got ({g}, {r})")
    return -(r + 1 - g % (r + 1))


def kappa_at_dmax(g: int, r: int) -> int:
    """kappa at the maximal degree, in closed form.

    For r = 1 this is ceil(g/2).  For r >= 2:

        g + r + 2 + floor(-g*r/(r+1)) + floor(-2*sqrt(r + 1 - (g mod (r+1))))

    where the floor of the negative quotient is taken toward minus infinity.
    """
    if g < 3 or r < 1:
        raise DomainError(f"kappa_at_dmax requires g >= 3 and r >= 1, got ({g}, {r})")
    if r == 1:
        return -(-g // 2)
    return g + r + 2 + (-g * r // (r + 1)) + floor_neg_2sqrt(r + 1 - g % (r + 1))


def kappa_bounds(g: int, r: int) -> tuple[Surd, Surd]:
    """Exact bracket  g/(r+1) + r - 2*sqrt(r+1)  <  kappa  <=  g/(r+1) + r.

    Returned as (exclusive lower, inclusive upper), both over denominator
    r + 1 so callers can compare against integers via Surd.sign.
    """
    if g < 3 or r < 1:
        raise DomainError(f"kappa_bounds requires g >= 3 and r >= 1, got ({g}, {r})")
    a = g + r * (r + 1)
    lower = Surd(a, -2 * (r + 1), r + 1, r + 1)
    upper = Surd(a, 0, 0, r + 1)
    return lower, upper


def enumerate_expected_maximal(g: int) -> list[MaximalLocusRecord]:
    """All expected maximal loci at genus g, one per rank 1..r_max_expected(g).

    The rank list is recomputed a second way (filtering every r <= g through
    is_expected_maximal at d_max) and the two must agree.
    """
    if g < 3:
        raise DomainError(f"enumerate_expected_maximal requires g >= 3, got {g}")
    ranks = list(range(1, r_max_expected(g) + 1))
    scanned = [r for r in range(1, g + 1) if is_expected_maximal(g, r, d_max(g, r))]
    if ranks != scanned:
        raise InternalError(
            f"rank range disagreement at g={g}: formula gives {ranks}, scan gives {scanned}"
        )
    records = []
    for r in ranks:
        d = d_max(g, r)
        lower, upper = kappa_bounds(g, r)
        records.append(
            MaximalLocusRecord(
                locus=BNLocus(g, r, d),
                rho=rho_at_dmax(g, r),
                kappa=bn_core.kappa(g, r, d),
                lower_bound=lower,
                upper_bound=upper,
            )
        )
    return records


def f_criterion(g: int, r: int, delta: int) -> bool:
    """Sufficient criterion for a kappa gap between ranks r and r + delta.

    Evaluates the sign of f = A + B*sqrt(r+1) with

        A = (r+1)*delta^2 + ((r+1)^2 - g) * delta,
        B = 2*(r+1)*delta + 2*(r+1)^2,

    exactly; f <= 0 guarantees kappa_at_dmax(g, r) > kappa_at_dmax(g, r+delta).
    """
    if r < 1 or delta < 1:
        raise DomainError(f"f_criterion requires r >= 1 and delta >= 1, got ({r}, {delta})")
    n = r + 1
    a = n * delta * delta + (n * n - g) * delta
    b = 2 * n * delta + 2 * n * n
    return surd_sign(a, b, n) <= 0


def genus_threshold_holds(g: int, r: int) -> bool:
    """True iff g >= 4(r+1)^(5/2) + (r+1)^2 + 2(r+1)^(3/2), decided exactly.

    With t = g - (r+1)^2 and c = 4(r+1)^2 + 2(r+1) the condition is
    t - c*sqrt(r+1) >= 0, i.e. t >= 0 and t^2 >= c^2 (r+1).
    """
    if r < 1:
        raise DomainError(f"genus_threshold_holds requires r >= 1, got {r}")
    n = r + 1
    t = g - n * n
    c = 4 * n * n + 2 * n
    return t >= 0 and surd_sign(t, -c, n) >= 0


def genus_threshold_min(r: int) -> int:
    """Smallest genus satisfying genus_threshold_holds(., r)."""
    n = r + 1
    c = 4 * n * n + 2 * n
    t = isqrt(c * c * n)
    if t * t < c * c * n:
        t += 1
    return n * n + t


def _paper_s_bound(g: int) -> int:
    # floor(sqrt(g) - 1/2): the largest s with (2s+1)^2 <= 4g.
    return (isqrt(4 * g) - 1) // 2


def _lemma_s_bound(g: int) -> int:
    # ceil(sqrt(g) - 1) = ceil(sqrt(g)) - 1.
    s = isqrt(g)
    return s - 1 if s * s == g else s


def _s_bound(g: int, s_range: SRange) -> int:
    if s_range is SRange.MAXIMAL:
        return r_max_expected(g)
    if s_range is SRange.PAPER:
        return _paper_s_bound(g)
    return _lemma_s_bound(g)


def ineq_holds_all_s(g: int, r: int, s_range: SRange = SRange.MAXIMAL) -> bool:
    """True iff kappa_at_dmax(g, r) > kappa_at_dmax(g, s) for every s in range.

    The range is r < s <= B(g) with B given by `s_range`; an empty range
    holds vacuously.
    """
    if g < 3 or r < 1:
        raise DomainError(f"ineq_holds_all_s requires g >= 3 and r >= 1, got ({g}, {r})")
    kr = kappa_at_dmax(g, r)
    return all(kr > kappa_at_dmax(g, s) for s in range(r + 1, _s_bound(g, s_range) + 1))


def min_genus_for_rank(r: int) -> int:
    """Smallest genus at which rank r admits an expected maximal locus."""
    if r < 1:
        raise DomainError(f"min_genus_for_rank requires r >= 1, got {r}")
    g = 3
    while r_max_expected(g) < r:
        g += 1
    return g


def compute_G(r: int, s_range: SRange = SRange.MAXIMAL) -> int:
    """Smallest genus past which the kappa inequality holds for rank r.

    Scans every genus from the first where rank r is expected maximal up to
    the exact genus threshold (beyond which the inequality is guaranteed);
    returns 1 + the largest failing genus, or the scan start if none fail.
    """
    if r < 2:
        raise DomainError(f"compute_G requires r >= 2, got {r}")
    start = min_genus_for_rank(r)
    worst = None
    for g in range(start, genus_threshold_min(r) + 1):
        if not ineq_holds_all_s(g, r, s_range):
            worst = g
    return start if worst is None else worst + 1


def exceptional_genera(r: int, s_range: SRange = SRange.MAXIMAL) -> list[int]:
    """All genera where the kappa inequality fails for rank r, in order.

    These are exactly the g < compute_G(r, s_range) in the scan range with
    ineq_holds_all_s false.
    """
    if r < 2:
        raise DomainError(f"exceptional_genera requires r >= 2, got {r}")
    start = min_genus_for_rank(r)
    return [
        g
        for g in range(start, genus_threshold_min(r) + 1)
        if not ineq_holds_all_s(g, r, s_range)
    ]
