"""Toric plt blow-ups of A_n surface singularities.

The A_n germ is the affine toric surface of a lattice cone of determinant
n + 1.  Every primitive ray interior to the cone gives a star subdivision
extracting a single divisor; the two subcone determinants (a, b) carry the
adjunction coefficients (1 - 1/a, 1 - 1/b), so the blow-up is delta-plt
exactly for delta below min(1/a, 1/b).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class LatticeCone2D:
    """Strictly convex cone spanned by two primitive integer vectors."""

    u1: tuple[int, int]
    u2: tuple[int, int]

    def __post_init__(self):
        for u in (self.u1, self.u2):
            if gcd(abs(u[0]), abs(u[1])) != 1:
                raise ValueError(f"generator {u} is not primitive")
        if _det(self.u1, self.u2) == 0:
            raise ValueError("generators are linearly dependent")

    def index(self) -> int:
        return abs(_det(self.u1, self.u2))


@dataclass(frozen=True)
class PltBlowupRecord:
    """One interior primitive ray with its subdivision data."""

    ray: tuple[int, int]
    a: int
    b: int
    diff: tuple[Fraction, Fraction]
    delta_threshold: Fraction


def _det(u: tuple[int, int], v: tuple[int, int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def an_cone(n: int) -> LatticeCone2D:
    """Standard cone of the A_n singularity: <(0,1), (n+1,-n)>."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return LatticeCone2D((0, 1), (n + 1, -n))


def _record(cone: LatticeCone2D, ray: tuple[int, int]) -> PltBlowupRecord:
    a = abs(_det(cone.u1, ray))
    b = abs(_det(ray, cone.u2))
    return PltBlowupRecord(
        ray=ray,
        a=a,
        b=b,
        diff=(Fraction(a - 1, a), Fraction(b - 1, b)),
        delta_threshold=min(Fraction(1, a), Fraction(1, b)),
    )


def enumerate_plt_blowups(n: int, height_bound: int) -> tuple[PltBlowupRecord, ...]:
    """All torus-invariant plt blow-ups from primitive rays strictly inside
    the A_n cone with max(|x|, |y|) <= height_bound."""
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    cone = an_cone(n)
    orientation = _det(cone.u1, cone.u2)
    records = []
    for x in range(-height_bound, height_bound + 1):
        for y in range(-height_bound, height_bound + 1):
            if (x, y) == (0, 0) or gcd(abs(x), abs(y)) != 1:
                continue
            ray = (x, y)
            s = _det(ray, cone.u2)
            t = _det(cone.u1, ray)
            # strictly interior: both barycentric coordinates positive
            if not (s * orientation > 0 and t * orientation > 0):
                continue
            records.append(_record(cone, ray))
    return tuple(sorted(records, key=lambda r: r.ray))


def minimal_resolution_rays(n: int) -> tuple[tuple[int, int], ...]:
    """Rays of the exceptional curves of the minimal resolution: (k, 1-k)."""
    return tuple((k, 1 - k) for k in range(1, n + 1))


@dataclass(frozen=True)
class AnBoundsReport:
    """Exhaustive sweep verdict for one A_n germ."""

    n: int
    height_bound: int
    ray_count: int
    sum_bound_ok: bool
    equality_rays_ok: bool
    max_threshold: Fraction
    argmax_ray: tuple[int, int]
    threshold_bound_ok: bool
    max_inside_bound: bool

    @property
    def ok(self) -> bool:
        return self.sum_bound_ok and self.equality_rays_ok and self.threshold_bound_ok


def verify_example_bounds(n: int, height_bound: int) -> AnBoundsReport:
    """Sweep all enumerated rays and check: a + b >= n + 1 with equality
    exactly on the minimal-resolution rays, and max min(1/a, 1/b) < 2/n."""
    if height_bound < n:
        raise ValueError("height_bound must be >= n to reach the minimal resolution")
    records = enumerate_plt_blowups(n, height_bound)
    sum_bound_ok = all(r.a + r.b >= n + 1 for r in records)
    equality_rays = {r.ray for r in records if r.a + r.b == n + 1}
    equality_rays_ok = equality_rays == set(minimal_resolution_rays(n))
    best = max(records, key=lambda r: (r.delta_threshold, r.ray))
    threshold_bound_ok = best.delta_threshold < Fraction(2, n)
    max_inside_bound = max(abs(best.ray[0]), abs(best.ray[1])) < height_bound
    return AnBoundsReport(
        n=n,
        height_bound=height_bound,
        ray_count=len(records),
        sum_bound_ok=sum_bound_ok,
        equality_rays_ok=equality_rays_ok,
        max_threshold=best.delta_threshold,
        argmax_ray=best.ray,
        threshold_bound_ok=threshold_bound_ok,
        max_inside_bound=max_inside_bound,
    )
