"""The extremal family, its orbit weights, and the weight-ordering laws.

The extremal family for (n, k, s) consists of all k-subsets of [n]
meeting the base set {1,...,k} in at least s elements.  Its orbits under
permutations fixing {1,...,k} setwise are indexed by the intersection
profile i, with exact weight C(k,i) * C(n-k,k-i).
"""

from dataclasses import dataclass, field

from .errors import IndexNotMeaningful
from .sets import DEFAULT_ENUMERATION_CAP, Family, Params, binom, enumerate_ksubsets


def size_extremal_family(params: Params) -> int:
    """Closed-form size: sum of orbit weights over profiles s..k."""
    n, k, s = params.n, params.k, params.s
    return sum(binom(k, i) * binom(n - k, k - i) for i in range(s, k + 1))


def build_extremal_family(params: Params,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> Family:
    """All k-subsets meeting the base set in >= s elements, lex order."""
    base = params.base_set().mask
    sets = enumerate_ksubsets(params.n, params.k, cap=cap)
    members = [m for m in sets if (m.mask & base).bit_count() >= params.s]
    return Family(members, n=params.n, k=params.k)


def orbit_weight(i: int, params: Params) -> int:
    """Number of k-subsets whose intersection profile with the base is i."""
    if not params.s <= i <= params.k:
        raise IndexNotMeaningful(
            f"profile {i} outside {{{params.s},...,{params.k}}}")
    n, k = params.n, params.k
    return binom(k, i) * binom(n - k, k - i)


@dataclass
class OrbitWeightTable:
    """Orbit weights for profiles s..k (profile k counts the base set only)."""

    params: Params
    weights: dict = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.weights.values())


def orbit_weight_table(params: Params) -> OrbitWeightTable:
    weights = {i: orbit_weight(i, params)
               for i in range(params.s, params.k + 1)}
    return OrbitWeightTable(params, weights)


def min_pair_intersection(i: int, t: int, params: Params) -> int:
    """Minimum of |A ∩ B| over profile-i sets A and profile-t sets B.

    The overlaps inside and outside the base set minimize independently:
    max(0, i+t-k) inside a k-element universe, and
    max(0, (k-i)+(k-t)-(n-k)) outside.
    """
    n, k, s = params.n, params.k, params.s
    for x in (i, t):
        if not s <= x <= k:
            raise IndexNotMeaningful(f"profile {x} outside {{{s},...,{k}}}")
    return max(0, i + t - k) + max(0, 2 * k - i - t - (n - k))


def check_mirror_weight_ordering(params: Params):
    """For each profile i in {s..k-1}, the weight dominates the weight of
    the mirrored profile k+s-1-i exactly when 2i <= k+s-1.

    The comparison 2i <= k+s-1 is kept in integers to avoid rounding.
    Returns a LemmaReport with one instance per profile.
    """
    from .report import LemmaReport
    k, s = params.k, params.s
    report = LemmaReport(claim="weights.mirror-ordering", params=params)
    for i in range(s, k):
        j = k + s - 1 - i
        wi = orbit_weight(i, params)
        wj = orbit_weight(j, params)
        lhs = wi >= wj
        rhs = 2 * i <= k + s - 1
        ok = lhs == rhs
        report.instances.append({
            "i": i, "partner": j, "weight_i": wi, "weight_partner": wj,
            "dominates": lhs, "below_midpoint": rhs, "ok": ok,
        })
        if not ok:
            report.passed = False
    return report


def check_offset_weight_ordering(params: Params):
    """For each offset i >= 1 with both profiles meaningful, the weight at
    floor((k-l)/2) - i is at most the weight at floor((k+s-1)/2) + i.

    Vacuously passes when no offset keeps both profiles in {s..k-1}.
    Requires slack l >= 0.
    """
    from .errors import ParamsOutOfRange
    from .report import LemmaReport
    k, s, l = params.k, params.s, params.l
    if l < 0:
        raise ParamsOutOfRange(f"need slack l >= 0, got l={l}")
    a = (k - l) // 2
    b = (k + s - 1) // 2
    report = LemmaReport(claim="weights.offset-ordering", params=params)
    i = 1
    while a - i >= s and b + i <= k - 1:
        wlow = orbit_weight(a - i, params)
        whigh = orbit_weight(b + i, params)
        ok = wlow <= whigh
        report.instances.append({
            "offset": i, "low": a - i, "high": b + i,
            "weight_low": wlow, "weight_high": whigh, "ok": ok,
        })
        if not ok:
            report.passed = False
        i += 1
    return report


def extremal_pair(params: Params, cap: int = DEFAULT_ENUMERATION_CAP):
    """The witness pair (whole extremal family, {base set}).

    The pair is s-cross-intersecting by construction and its sizes sum
    to size_extremal_family + 1.
    """
    family = build_extremal_family(params, cap=cap)
    single = Family([params.base_set()], n=params.n, k=params.k)
    return family, single
