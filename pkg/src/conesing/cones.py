"""The cone-singularity model.

A surface cone singularity is encoded by its associated triple: an ample
Q-divisor on the projective line (the polarization) plus an optional
boundary divisor.  This module computes the quotient pair, the Fano angle
and its reciprocal (the log discrepancy of the vertex blow-up), isotropies,
Veronese quotients, and the combinatorial central fiber of the degeneration
induced by a plt blow-up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .divisors import INF, MARKED_POINTS, PointP1, QDivisorP1
from .errors import NotACone, NotLogFano
from .rationals import format_rational


@dataclass(frozen=True)
class ConeTriple:
    """Associated triple of a cone singularity: (polarization; boundary).

    The polarization must have positive degree; boundary coefficients live
    in [0, 1).
    """

    polarization: QDivisorP1
    boundary: QDivisorP1 = field(default_factory=QDivisorP1)

    def __post_init__(self):
        if self.polarization.degree() <= 0:
            raise NotACone(
                f"polarization degree {format_rational(self.polarization.degree())} <= 0"
            )
        for point, coeff in self.boundary.items():
            if not (0 <= coeff < 1):
                raise ValueError(f"boundary coefficient {coeff} at {point} not in [0,1)")


@dataclass(frozen=True)
class LogFanoQuotient:
    """The quotient pair (delta + boundary) of a klt cone singularity.

    Construction enforces klt-ness on the curve (all coefficients < 1) and
    positivity of the anti-log-canonical degree (degree of delta + boundary
    below 2); violations raise NotLogFano.
    """

    delta: QDivisorP1
    boundary: QDivisorP1

    def __post_init__(self):
        total = self.delta + self.boundary
        for point, coeff in total.items():
            if coeff >= 1:
                raise NotLogFano(
                    f"coefficient {format_rational(coeff)} >= 1 at {point}"
                )
        if total.degree() >= 2:
            raise NotLogFano(
                f"deg(delta + boundary) = {format_rational(total.degree())} >= 2"
            )

    def total_boundary(self) -> QDivisorP1:
        return self.delta + self.boundary


def log_fano_quotient(triple: ConeTriple) -> LogFanoQuotient:
    """Quotient pair of the cone; raises NotLogFano when the cone is not klt."""
    return LogFanoQuotient(triple.polarization.boundary_delta(), triple.boundary)


def is_klt_cone(triple: ConeTriple) -> bool:
    """Cheap filter form of log_fano_quotient."""
    try:
        log_fano_quotient(triple)
    except NotLogFano:
        return False
    return True


def fano_angle(triple: ConeTriple) -> Fraction:
    """The positive rational r with D ~ -r(K + delta + boundary).

    On the line deg K = -2, so r = deg D / (2 - deg(delta + boundary)).
    """
    quotient = log_fano_quotient(triple)
    return triple.polarization.degree() / (2 - quotient.total_boundary().degree())


def vertex_log_discrepancy(triple: ConeTriple) -> Fraction:
    """Log discrepancy of the divisor extracted by blowing up the vertex:
    the inverse of the Fano angle."""
    return 1 / fano_angle(triple)


def isotropy_at(triple: ConeTriple, point: PointP1) -> int:
    """Order of the torus stabilizer over a point: the local Cartier index
    of the polarization there (its Weil index on the line)."""
    return triple.polarization.weil_index(point)


def max_isotropy(triple: ConeTriple) -> int:
    """Largest isotropy: the global Cartier index of the polarization."""
    return triple.polarization.cartier_index()


def veronese(triple: ConeTriple, m: int) -> ConeTriple:
    """Degree-m equivariant cyclic quotient, realized on triples as D -> mD."""
    if m < 1:
        raise ValueError(f"veronese degree must be >= 1, got {m}")
    return ConeTriple(m * triple.polarization, triple.boundary)


def epsilon0_bound(epsilon: Fraction, r: Fraction) -> Fraction:
    """Lower bound min(epsilon, 1/r) for the log discrepancies of a cone with
    trivial isotropies, epsilon-lc quotient, and Fano angle at most r."""
    epsilon = Fraction(epsilon)
    r = Fraction(r)
    if epsilon <= 0 or r <= 0:
        raise ValueError("epsilon and r must be positive")
    return min(epsilon, 1 / r)


@dataclass(frozen=True)
class CentralFiber:
    """Combinatorial central fiber of the degeneration along a plt blow-up.

    ``quotient`` is the trivial-isotropy cone (polarization m * deg placed at
    the anchor point); ``degree`` is the degree m of the cyclic quotient map
    from the central fiber onto it.  The central fiber itself is recorded
    through its polarization degree and the adjunction boundary (coefficient
    1 - 1/q at marked points).
    """

    quotient: ConeTriple
    degree: int
    fiber_degree: Fraction
    fiber_diff: QDivisorP1


def central_fiber_of_plt_blowup(
    diff_qs: Sequence[int], minus_e_degree: Fraction, m: int
) -> CentralFiber:
    """Build the central fiber data of the degeneration attached to a plt
    blow-up with adjunction denominators ``diff_qs``, exceptional polarization
    degree ``minus_e_degree``, and Cartier multiple ``m``.

    The degree-m Veronese of the central fiber is the trivial-isotropy cone
    returned as ``quotient``; the fiber's own isotropies are the q's, each of
    which must divide m (otherwise m times the polarization is not integral).
    """
    minus_e_degree = Fraction(minus_e_degree)
    if m < 1:
        raise ValueError(f"quotient degree must be >= 1, got {m}")
    if len(diff_qs) > 3:
        raise ValueError(
            f"at most 3 adjunction points supported on the line, got {len(diff_qs)}"
        )
    if any(q < 2 for q in diff_qs):
        raise ValueError("adjunction denominators must be >= 2")
    if minus_e_degree <= 0:
        raise NotACone(
            f"exceptional polarization degree {format_rational(minus_e_degree)} <= 0"
        )
    quotient_degree = m * minus_e_degree
    if quotient_degree.denominator != 1:
        raise NotACone(
            f"{m} * {format_rational(minus_e_degree)} is not integral"
        )
    for q in diff_qs:
        if m % q != 0:
            raise NotACone(
                f"adjunction denominator {q} does not divide the Cartier multiple {m}"
            )
    quotient = ConeTriple(QDivisorP1({INF: quotient_degree}))
    if max_isotropy(quotient) != 1:
        raise RuntimeError("quotient cone must have trivial isotropies")
    diff = QDivisorP1(
        {point: Fraction(q - 1, q) for point, q in zip(MARKED_POINTS, diff_qs)}
    )
    return CentralFiber(quotient, m, minus_e_degree, diff)
