"""Supersingular Weil numbers and their minimal polynomials.

Every root of the Frobenius characteristic polynomial of a
supersingular abelian variety has absolute value ``sqrt(q)`` and can be
written as ``sqrt(q_star) * zeta`` where ``q_star`` is ``q`` or ``-q``
and ``zeta`` is a primitive ``4t``-th root of unity.  Depending on
``(q_star, t, p)`` the minimal polynomial of such a number has degree
``phi(4t)`` (the full degree case) or ``phi(4t)/2`` (the half degree
case).  Only the full-degree polynomial is constructed here; it is
obtained from the ``4t``-th cyclotomic polynomial by an exact integer
coefficient substitution, so no square root is ever materialized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cyclotomic import cyclotomic, is_prime, totient
from .errors import HalfDegreeUnsupported
from .intpoly import IntPoly


class DegreeCase(enum.Enum):
    FULL_DEGREE = "full"
    HALF_DEGREE = "half"


@dataclass(frozen=True)
class WeilParams:
    """The triple (p, n, g) with q = p**n.

    ``n`` must be odd: over even powers of p the parity statements
    checked by this package simply fail (already ``(X - p**m)**(2*g)``
    is a counterexample), so even ``n`` is rejected at construction.
    """

    p: int
    n: int
    g: int

    def __post_init__(self):
        if self.p < 2 or not is_prime(self.p):
            raise ValueError(f"p={self.p} must be prime")
        if self.n < 1 or self.n % 2 == 0:
            raise ValueError(f"n={self.n} must be a positive odd integer")
        if self.g < 1:
            raise ValueError(f"g={self.g} must be a positive integer")

    @property
    def q(self) -> int:
        return self.p ** self.n


@dataclass(frozen=True)
class WeilNumberSpec:
    """A Weil number ``sqrt(q_star_sign * q) * zeta_4t`` and its degree case."""

    q_star_sign: int
    t: int
    degree_case: DegreeCase

    def __post_init__(self):
        if self.q_star_sign not in (1, -1):
            raise ValueError("q_star_sign must be +1 or -1")
        if self.t < 1:
            raise ValueError("t must be a positive integer")


def is_full_degree(params: WeilParams, q_star_sign: int, t: int) -> bool:
    """Decide the full/half degree dichotomy for ``sqrt(q_star)*zeta_4t``.

    Full degree holds iff either q_star is odd and (t is even, or p does
    not divide t, or q_star = 1 mod 4), or q_star is even and
    t != 2 mod 4.
    """
    if q_star_sign not in (1, -1):
        raise ValueError("q_star_sign must be +1 or -1")
    if t < 1:
        raise ValueError("t must be a positive integer")
    q_star = q_star_sign * params.q
    if q_star % 2:  # parity of q_star equals parity of p
        return t % 2 == 0 or t % params.p != 0 or q_star % 4 == 1
    return t % 4 != 2


def classify(params: WeilParams, q_star_sign: int, t: int) -> WeilNumberSpec:
    """Build a spec whose degree case is derived, never free-floating."""
    case = (
        DegreeCase.FULL_DEGREE
        if is_full_degree(params, q_star_sign, t)
        else DegreeCase.HALF_DEGREE
    )
    return WeilNumberSpec(q_star_sign, t, case)


def weil_factor_degree(params: WeilParams, q_star_sign: int, t: int) -> int:
    """Degree of the minimal polynomial: phi(4t), halved in the half case."""
    d = totient(4 * t)
    return d if is_full_degree(params, q_star_sign, t) else d // 2


def minpoly_full_degree(params: WeilParams, q_star_sign: int, t: int) -> IntPoly:
    """Minimal polynomial of ``sqrt(q_star) * zeta_4t`` in the full degree case.

    Starting from the (even, since 4 | 4t) cyclotomic polynomial of
    index 4t with coefficients ``c_j``, the coefficient of ``X**j``
    becomes ``c_j * q_star**((phi(4t) - j)/2)``.  The exponent is a
    nonnegative integer whenever ``c_j`` is nonzero, so the result is an
    exact monic integer polynomial of degree phi(4t).
    """
    if not is_full_degree(params, q_star_sign, t):
        raise HalfDegreeUnsupported(
            f"(sign={q_star_sign:+d}, t={t}) at p={params.p}, n={params.n} is a "
            "half degree case; its minimal polynomial is not constructed"
        )
    phi = cyclotomic(4 * t)
    m = len(phi.coeffs) - 1
    q_star = q_star_sign * params.q
    out = [0] * (m + 1)
    for j, c in enumerate(phi.coeffs):
        if c == 0:
            continue
        assert (m - j) % 2 == 0  # cyclotomic(4t) is even and m is even
        out[j] = c * q_star ** ((m - j) // 2)
    return IntPoly(out)
