"""Deterministic generators of LCD MDS codes for five parameter families.

Each construction returns a ConstructionReport holding the GRS spec it built
plus every auxiliary choice it made (scaling element, root of unity, additive
subgroup, searched multipliers), so a report can be re-checked from its
parameters alone. verify_report then runs the generic hull and MDS oracles
over the generator matrix and refuses to return a code that fails either.

All families need an odd prime power q > 3 and a dimension 1 < k <= floor(n/2)
(larger k is covered by duality: the dual of an LCD MDS code is again one).
The families, tried in this order by construct_auto:

  ExtendedQPlus1   n = q + 1   extended code over all q elements
  DivisorOfQMinus1 n | q - 1   locators are the powers of an n-th root of unity
  PrimePowerLength n = p^l     locators are an additive subgroup of order p^l
  LargeNPlusK      n < q, n + k >= q + 1
  Window2n         n < q, 2n - k < q <= 2n
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoConstructionApplies, ParameterError, TheoremViolation
from .fields import Field
from .grs import GrsSpec, dual_multipliers
from .linear import DEFAULT_BUDGET

THEOREM_EXTENDED = "ExtendedQPlus1"
THEOREM_DIVISOR = "DivisorOfQMinus1"
THEOREM_PRIME_POWER = "PrimePowerLength"
THEOREM_LARGE_NK = "LargeNPlusK"
THEOREM_WINDOW = "Window2n"

ALL_THEOREMS = (
    THEOREM_EXTENDED,
    THEOREM_DIVISOR,
    THEOREM_PRIME_POWER,
    THEOREM_LARGE_NK,
    THEOREM_WINDOW,
)


@dataclass
class ConstructionReport:
    theorem: str
    spec: GrsSpec
    params: dict
    verified: dict | None = None

    def to_dict(self) -> dict:
        """JSON-ready report; includes the generator so it can be re-verified."""
        code = self.spec.generator()
        return {
            "theorem": self.theorem,
            "field": self.spec.field.to_dict(),
            "n": code.n,
            "k": code.k,
            "spec": self.spec.to_dict(),
            "params": self.params,
            "generator": [list(row) for row in code.gen],
            "verified": self.verified,
        }


def _require_construction_field(F: Field) -> None:
    if F.p == 2:
        raise ParameterError(
            f"q = {F.q} has even characteristic; constructions need odd q"
        )
    if F.q <= 3:
        raise ParameterError(f"q = {F.q} is too small; constructions need q > 3")


def _require_dims(n: int, k: int) -> None:
    if not 1 < k <= n // 2:
        raise ParameterError(
            f"k = {k} out of range: need 1 < k <= floor(n/2) = {n // 2} for n = {n}"
        )


def _labeling(F: Field, permutation) -> tuple[int, ...]:
    if permutation is None:
        return tuple(range(F.q))
    perm = tuple(F.check(x) for x in permutation)
    if sorted(perm) != list(range(F.q)):
        raise ParameterError("permutation must list every field element exactly once")
    return perm


def _square_free_unit(F: Field, value, what: str) -> int:
    """First canonical element c with c^2 != 1 and c != 0, or a validated override."""
    minus_one = F.neg(1)
    if value is None:
        return next(c for c in range(2, F.q) if c != minus_one)
    c = F.check(value)
    if c in (0, 1, minus_one):
        raise ParameterError(f"{what} must avoid 0, 1 and -1, got {c}")
    return c


def construct_extended(F: Field, k: int, gamma=None, permutation=None) -> ConstructionReport:
    """Extended code of length q + 1 over all q field elements.

    The scaling element is a primitive element (multiplicative order q - 1);
    since q > 3 its square is not 1. Multipliers are 1 on a leading block and
    gamma on the rest; the split point depends on whether k = (q + 1)/2
    (case 2) or k < (q + 1)/2 (case 1).
    """
    _require_construction_field(F)
    q = F.q
    _require_dims(q + 1, k)
    locators = _labeling(F, permutation)
    if gamma is None:
        gamma = F.primitive_element
    else:
        gamma = F.check(gamma)
        if F.multiplicative_order(gamma) != q - 1:
            raise ParameterError(
                f"gamma = {gamma} is not primitive (order {F.multiplicative_order(gamma)})"
            )
    if 2 * k == q + 1:
        case = 2
        ones = k - 1
    else:
        case = 1
        ones = q - k + 1
    v = (1,) * ones + (gamma,) * (q - ones)
    spec = GrsSpec(F, locators, v, k, extended=True)
    return ConstructionReport(
        THEOREM_EXTENDED, spec, {"case": case, "gamma": gamma}
    )


def construct_divisor(F: Field, n: int, k: int, tail=None) -> ConstructionReport:
    """Length-n code on the powers of a primitive n-th root of unity, n | q - 1.

    Multipliers are 1 on the first n - k + 1 coordinates; the remaining k - 1
    only need squares different from 1, chosen uniformly as the first
    canonical element outside {-1, 0, 1} unless overridden (a single value or
    one value per tail coordinate).
    """
    _require_construction_field(F)
    if n <= 1 or (F.q - 1) % n != 0:
        raise ParameterError(f"n = {n} does not divide q - 1 = {F.q - 1}")
    _require_dims(n, k)
    omega = F.nth_root_of_unity(n)
    locators = tuple(F.pow(omega, i) for i in range(n))
    if tail is None or isinstance(tail, int):
        tail_values = [_square_free_unit(F, tail, "tail multiplier")] * (k - 1)
    else:
        tail_values = [_square_free_unit(F, t, "tail multiplier") for t in tail]
        if len(tail_values) != k - 1:
            raise ParameterError(f"need {k - 1} tail multipliers, got {len(tail_values)}")
    v = (1,) * (n - k + 1) + tuple(tail_values)
    spec = GrsSpec(F, locators, v, k)
    return ConstructionReport(
        THEOREM_DIVISOR, spec, {"omega": omega, "tail_multipliers": list(tail_values)}
    )


def construct_prime_power(F: Field, level: int, k: int, gamma=None) -> ConstructionReport:
    """Length n = p^level code on an additive subgroup H of the field.

    Over H the dual multipliers are all equal to the inverse of h, the
    product of the nonzero elements of H; that identity is re-checked here
    and recorded in the report. The scaling element gamma only needs
    gamma^2 != 1.
    """
    _require_construction_field(F)
    if not 1 <= level <= F.e:
        raise ParameterError(f"subgroup degree must be in 1..{F.e}, got {level}")
    n = F.p**level
    _require_dims(n, k)
    subgroup = F.additive_subgroup(level)
    gamma = _square_free_unit(F, gamma, "gamma")
    v = (1,) * (n - k) + (gamma,) * k
    spec = GrsSpec(F, tuple(subgroup), v, k)

    h = 1
    for z in subgroup:
        if z:
            h = F.mul(h, z)
    u = dual_multipliers(F, spec.locators)
    h_inv = F.inv(h)
    if any(ui != h_inv for ui in u):
        raise TheoremViolation(
            "dual multipliers over the additive subgroup are not the constant h^-1"
        )
    params = {"subgroup": list(subgroup), "h": h, "u_constant": h_inv, "gamma": gamma}
    return ConstructionReport(THEOREM_PRIME_POWER, spec, params)


def construct_large_nk(F: Field, n: int, k: int, permutation=None) -> ConstructionReport:
    """Length n < q with n + k >= q + 1: locators are the first n labeled elements.

    The first q - k multipliers are 1. Each remaining coordinate i gets the
    first canonical nonzero c with -c^2 * prod(a_i - x over excluded x)
    different from u_i; squares take (q - 1)/2 >= 2 distinct values, so the
    search cannot fail.
    """
    _require_construction_field(F)
    q = F.q
    if not 1 < n < q:
        raise ParameterError(f"requires 1 < n < q, got n = {n}, q = {q}")
    _require_dims(n, k)
    if n + k < q + 1:
        raise ParameterError(f"requires n + k >= q + 1, got {n} + {k} < {q + 1}")
    labeling = _labeling(F, permutation)
    locators = labeling[:n]
    excluded = labeling[n:]
    u = dual_multipliers(F, locators)
    mul, sub, neg = F.mul, F.sub, F.neg
    v = [1] * n
    chosen = []
    for i in range(q - k, n):
        prod = 1
        for x in excluded:
            prod = mul(prod, sub(locators[i], x))
        c = next(
            (c for c in range(1, q) if neg(mul(mul(c, c), prod)) != u[i]), None
        )
        if c is None:
            raise TheoremViolation(
                f"no valid multiplier exists for coordinate {i + 1}"
            )
        v[i] = c
        chosen.append([i + 1, c])
    spec = GrsSpec(F, locators, tuple(v), k)
    params = {"excluded": list(excluded), "chosen_multipliers": chosen}
    return ConstructionReport(THEOREM_LARGE_NK, spec, params)


def construct_window(F: Field, n: int, k: int, permutation=None) -> ConstructionReport:
    """Length n < q with 2n - k < q <= 2n.

    Since q - n > n - k there are at least n - k excluded elements; each
    multiplier is the product of (a_i - x) over the first n - k of them,
    nonzero because locators and excluded elements are distinct.
    """
    _require_construction_field(F)
    q = F.q
    if not 1 < n < q:
        raise ParameterError(f"requires 1 < n < q, got n = {n}, q = {q}")
    _require_dims(n, k)
    if not 2 * n - k < q <= 2 * n:
        raise ParameterError(
            f"requires 2n - k < q <= 2n, got 2*{n} - {k} = {2 * n - k}, q = {q}"
        )
    labeling = _labeling(F, permutation)
    locators = labeling[:n]
    window = labeling[n : n + (n - k)]
    mul, sub = F.mul, F.sub
    v = []
    for a in locators:
        prod = 1
        for x in window:
            prod = mul(prod, sub(a, x))
        v.append(prod)
    spec = GrsSpec(F, locators, tuple(v), k)
    params = {"excluded": list(labeling[n:]), "window": list(window)}
    return ConstructionReport(THEOREM_WINDOW, spec, params)


def _prime_power_level(F: Field, n: int) -> int | None:
    m, level = n, 0
    while m % F.p == 0:
        m //= F.p
        level += 1
    return level if m == 1 and 1 <= level <= F.e else None


def applicable_conditions(F: Field, n: int, k: int) -> list[str]:
    """Tags of every family whose parameter condition holds, in dispatch order."""
    q = F.q
    out = []
    if n == q + 1:
        out.append(THEOREM_EXTENDED)
    if n > 1 and (q - 1) % n == 0:
        out.append(THEOREM_DIVISOR)
    if _prime_power_level(F, n) is not None:
        out.append(THEOREM_PRIME_POWER)
    if n < q and n + k >= q + 1:
        out.append(THEOREM_LARGE_NK)
    if n < q and 2 * n - k < q <= 2 * n:
        out.append(THEOREM_WINDOW)
    return out


def construct_auto(
    F: Field, n: int, k: int, gamma=None, tail=None, permutation=None
) -> ConstructionReport:
    """Dispatch to the first family whose condition holds, in the fixed order.

    Raises NoConstructionApplies when no family covers (n, k); that only
    means none of the five constructions applies, not that no LCD MDS code
    with these parameters exists.
    """
    _require_construction_field(F)
    q = F.q
    if n > q + 1:
        raise ParameterError(f"n = {n} exceeds q + 1 = {q + 1}")
    _require_dims(n, k)
    if n == q + 1:
        return construct_extended(F, k, gamma=gamma, permutation=permutation)
    if n > 1 and (q - 1) % n == 0:
        return construct_divisor(F, n, k, tail=tail)
    level = _prime_power_level(F, n)
    if level is not None:
        return construct_prime_power(F, level, k, gamma=gamma)
    if n < q and n + k >= q + 1:
        return construct_large_nk(F, n, k, permutation=permutation)
    if n < q and 2 * n - k < q <= 2 * n:
        return construct_window(F, n, k, permutation=permutation)
    raise NoConstructionApplies(
        f"no covered family matches q = {q}, n = {n}, k = {k}; "
        "this does not rule out an LCD MDS code with these parameters"
    )


def verify_report(report: ConstructionReport, budget: int = DEFAULT_BUDGET) -> ConstructionReport:
    """Run the hull and MDS oracles over the report's generator matrix.

    Fills report.verified and returns the report; raises TheoremViolation if
    the constructed code is not LCD or not MDS (which would be a bug, never
    an acceptable outcome). BudgetExceeded propagates from the MDS check.
    """
    code = report.spec.generator()
    hull = code.hull_dimension()
    mds, route, dist = code.mds_check(budget)
    report.verified = {
        "hull_dimension": hull,
        "is_lcd": hull == 0,
        "is_mds": mds,
        "mds_route": route,
        "min_distance": dist,
    }
    if hull != 0 or not mds:
        raise TheoremViolation(
            f"{report.theorem} produced a code with hull dimension {hull}, "
            f"MDS = {mds} over {report.spec.field!r} "
            f"(n = {code.n}, k = {code.k}); this is a bug"
        )
    return report
