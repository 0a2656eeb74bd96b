"""Moore-type ball and diameter bounds for regular complexes, and their checks.

All bounds are evaluated by exact integer series iteration. The logarithmic
closed forms are provided alongside for reporting only.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .complex import Complex, DegreeProfile
from .errors import DomainError, UndefinedBaseError
from .metric import MetricReport

__all__ = [
    "moore_ball",
    "moore_ball_statement_form",
    "moore_layer_bound",
    "diameter_lower_bound_int",
    "diameter_lower_bound_real",
    "ceil_bound",
    "theorem2_radius_bound",
    "theorem2_eccentricity_limit",
    "BoundReport",
    "check_bounds",
]


def _require_degree(r: int, least: int) -> None:
    if r < least:
        raise DomainError(f"degree {r} below the bound's domain (needs >= {least})")


def moore_layer_bound(r: int, d: int, i: int) -> int:
    """Most simplices that can sit at exact distance ``i`` in an r-regular complex."""
    if i == 0:
        return 1
    return r * d * ((r - 1) * d) ** (i - 1)


def moore_ball(r: int, d: int, D: int) -> int:
    """``1 + rd * sum_{i<D} ((r-1)d)^i``: the largest ball of radius ``D``."""
    _require_degree(r, 2)
    if d < 1 or D < 0:
        raise DomainError("need d >= 1 and D >= 0")
    q = (r - 1) * d
    if q == 1:
        return 1 + r * d * D
    return 1 + r * d * (q**D - 1) // (q - 1)


def moore_ball_statement_form(r: int, D: int) -> int:
    """The d-free variant ``1 + r * sum_{i<D} (r-1)^i``; equals :func:`moore_ball` at d=1."""
    return moore_ball(r, 1, D)


def _series_iter(r: int, d: int):
    """Yield ``(D, moore_ball(r, d, D))`` for D = 0, 1, 2, ..."""
    q = (r - 1) * d
    total, term, D = 1, r * d, 0
    while True:
        yield D, total
        total += term
        term *= q
        D += 1


def diameter_lower_bound_int(N: int, r: int, d: int) -> int:
    """Smallest ``D`` whose Moore ball holds at least ``N`` simplices."""
    _require_degree(r, 2)
    if N < 1:
        raise DomainError("N must be positive")
    for D, ball in _series_iter(r, d):
        if ball >= N:
            return D
    raise AssertionError("unreachable")


def diameter_lower_bound_real(N: int, r: int, d: int) -> float:
    q = (r - 1) * d
    if q < 2:
        raise UndefinedBaseError(f"log base (r-1)d = {q} must be at least 2")
    return math.log(1 + (N - 1) * (q - 1) / (r * d)) / math.log(q)


def ceil_bound(value: float, N: int, r: int, d: int, tol: float = 1e-9) -> int:
    """Ceiling of a real lower bound, settling near-integer values exactly.

    Within ``tol`` of an integer ``D`` the float cannot decide the side, so
    we test ``q^D * rd >= rd + (N-1)(q-1)``, the exact form of ``value <= D``.
    """
    nearest = round(value)
    if abs(value - nearest) <= tol:
        q = (r - 1) * d
        if q**nearest * r * d >= r * d + (N - 1) * (q - 1):
            return int(nearest)
        return int(nearest) + 1
    return math.ceil(value)


def theorem2_radius_bound(N: int, k: int, d: int) -> int:
    """Largest ``rho`` with ``1 + kd * sum_{i<rho} ((k-1)d)^i <= N``.

    This reads the growth series at the eccentricity itself.
    """
    _require_degree(k, 3)
    if N < 1:
        raise DomainError("N must be positive")
    best = 0
    for rho, ball in _series_iter(k, d):
        if ball > N:
            return best
        best = rho
    raise AssertionError("unreachable")


def theorem2_eccentricity_limit(N: int, k: int, d: int) -> int:
    """Eccentricity ceiling used for violation checks.

    A simplex with eccentricity ``e`` leaves at least one simplex outside its
    radius ``e - 1`` ball, so the growth series gives ``S(e - 1) <= N - 1``.
    The largest ``e`` allowed is the smallest ``rho`` with ``S(rho) >= N``.
    """
    _require_degree(k, 3)
    return diameter_lower_bound_int(N, k, d)


@dataclass
class BoundReport:
    N: int
    d: int
    r: int | None
    min_degree: int
    diameter: int | None
    theorem1_skipped: str | None = None
    moore_ball_value: int | None = None
    moore_ball_statement_value: int | None = None
    theorem1_satisfied: bool | None = None
    moore_tight: bool | None = None
    diameter_lb_int: int | None = None
    diameter_lb_real: float | None = None
    diameter_lb_satisfied: bool | None = None
    theorem2_skipped: str | None = None
    theorem2_radius_bound: int | None = None
    theorem2_eccentricity_limit: int | None = None
    theorem2_max_eccentricity: int | None = None
    theorem2_literal_exceedances: int | None = None
    theorem2_violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def theorem2_holds(self) -> bool | None:
        if self.theorem2_skipped:
            return None
        return not self.theorem2_violations

    def to_dict(self) -> dict:
        out = asdict(self)
        out["theorem2_violations"] = [
            {"rank": rank, "eccentricity": ecc} for rank, ecc in self.theorem2_violations
        ]
        out["theorem2_holds"] = self.theorem2_holds
        return out


def check_bounds(X: Complex, metric: MetricReport, degrees: DegreeProfile) -> BoundReport:
    """Evaluate both bounds on ``X`` and record verdicts or skip reasons.

    Eccentricities above the limit are reported as violation witnesses
    ``(rank, eccentricity)``; they are findings, not errors.
    """
    N, d = X.N, X.d
    rep = BoundReport(
        N=N, d=d, r=degrees.regular_r, min_degree=degrees.min_degree, diameter=metric.diameter
    )

    r = degrees.regular_r
    if not metric.connected:
        rep.theorem1_skipped = "disconnected"
    elif r is None:
        rep.theorem1_skipped = "not_regular"
    elif r < 2:
        rep.theorem1_skipped = "degree_below_2"
    else:
        D = metric.diameter
        rep.moore_ball_value = moore_ball(r, d, D)
        rep.moore_ball_statement_value = moore_ball_statement_form(r, D)
        rep.theorem1_satisfied = N <= rep.moore_ball_value
        rep.moore_tight = N == rep.moore_ball_value
        rep.diameter_lb_int = diameter_lower_bound_int(N, r, d)
        if (r - 1) * d >= 2:
            rep.diameter_lb_real = diameter_lower_bound_real(N, r, d)
        rep.diameter_lb_satisfied = D >= rep.diameter_lb_int

    k = degrees.min_degree
    if k < 3:
        rep.theorem2_skipped = "min_degree_below_3"
    elif not metric.connected:
        rep.theorem2_skipped = "disconnected"
    else:
        rep.theorem2_radius_bound = theorem2_radius_bound(N, k, d)
        limit = theorem2_eccentricity_limit(N, k, d)
        rep.theorem2_eccentricity_limit = limit
        eccs = [int(e) for e in metric.eccentricities]
        rep.theorem2_max_eccentricity = max(eccs)
        rep.theorem2_literal_exceedances = sum(e > rep.theorem2_radius_bound for e in eccs)
        rep.theorem2_violations = [(s, e) for s, e in enumerate(eccs) if e > limit]
    return rep
