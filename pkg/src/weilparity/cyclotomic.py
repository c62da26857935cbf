"""Cyclotomic polynomials and the totient/Moebius arithmetic they need.

The n-th cyclotomic polynomial is computed two independent ways:

* :func:`cyclotomic` divides ``X**n - 1`` by the product of the
  cyclotomic polynomials of all proper divisors of ``n`` (recursively,
  with memoized sub-results);
* :func:`cyclotomic_mobius` assembles the Moebius inclusion-exclusion
  product of ``X**(n/d) - 1`` factors into one exact quotient.

The two must agree everywhere; the test suite enforces this.  The memo
table behind :func:`cyclotomic` is the only shared mutable state in the
package: readers only ever see fully constructed entries, and a
duplicated computation under contention is harmless.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import OutOfRange
from .intpoly import IntPoly

FACTORIZE_CAP = 10 ** 9  # trial-division scale
CYCLOTOMIC_CAP = 10 ** 6  # memoization cap


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer with its prime factorization.

    ``factors`` lists (prime, exponent) pairs with strictly increasing
    primes; their product reconstructs ``n`` (the empty product is 1).
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        acc = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError("factors must be increasing primes with positive exponents")
            prev = p
            acc *= p ** e
        if acc != self.n:
            raise ValueError(f"factorization does not multiply back to {self.n}")


@lru_cache(maxsize=None)
def factorize(n: int) -> FactoredInteger:
    """Complete prime factorization by trial division."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > FACTORIZE_CAP:
        raise OutOfRange(f"n={n} exceeds the trial-division cap {FACTORIZE_CAP}")
    factors = []
    rest = n
    d = 2
    while d <= isqrt(rest):
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return FactoredInteger(n, tuple(factors))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).factors == ((n, 1),)


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in increasing order."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p ** j for d in divs for j in range(e + 1)]
    return tuple(sorted(divs))


def totient(n: int) -> int:
    """Euler's totient via the product formula over the factorization."""
    result = 1
    for p, e in factorize(n).factors:
        result *= p ** (e - 1) * (p - 1)
    return result


def moebius(n: int) -> int:
    """0 if n is not squarefree, else (-1)**(number of prime factors)."""
    factors = factorize(n).factors
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) & 1 else 1


def _check_cap(n: int) -> None:
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > CYCLOTOMIC_CAP:
        raise OutOfRange(f"n={n} exceeds the cyclotomic cap {CYCLOTOMIC_CAP}")


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> IntPoly:
    if n == 1:
        return IntPoly((-1, 1))
    denominator = IntPoly.one()
    for d in divisors(n)[:-1]:
        denominator = denominator * _cyclotomic(d)
    return IntPoly.x_pow_minus_one(n).exact_div(denominator)


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, exactly.

    Computed by exact division of ``X**n - 1`` by the product of the
    cyclotomic polynomials of the proper divisors of ``n``.  Monic of
    degree ``totient(n)``.
    """
    _check_cap(n)
    return _cyclotomic(n)


def cyclotomic_mobius(n: int) -> IntPoly:
    """Independent construction of the n-th cyclotomic polynomial.

    Assembles ``prod_{d | n} (X**(n/d) - 1)**moebius(d)`` as a single
    exact numerator/denominator quotient.  Must equal
    ``cyclotomic(n)``; used as a cross-check oracle.
    """
    _check_cap(n)
    numerator = IntPoly.one()
    denominator = IntPoly.one()
    for d in divisors(n):
        mu = moebius(d)
        if mu == 1:
            numerator = numerator * IntPoly.x_pow_minus_one(n // d)
        elif mu == -1:
            denominator = denominator * IntPoly.x_pow_minus_one(n // d)
    return numerator.exact_div(denominator)


def prime_power_identity_check(p: int, k: int, n: int) -> bool:
    """Check the prime-power shift identity for cyclotomic polynomials.

    For prime ``p`` and ``k >= 1`` the polynomial ``Phi_{p**k * n}``
    equals ``Phi_n(X**(p**k))`` when ``p`` divides ``n``, and
    ``Phi_n(X**(p**k)) / Phi_n(X**(p**(k-1)))`` otherwise.  Returns
    whether the applicable branch holds as an exact polynomial identity.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} must be prime")
    if k < 1:
        raise ValueError("k must be a positive integer")
    if n < 1:
        raise ValueError("n must be a positive integer")
    lhs = cyclotomic(p ** k * n)
    composed = cyclotomic(n).compose_power(p ** k)
    if n % p == 0:
        rhs = composed
    else:
        rhs = composed.exact_div(cyclotomic(n).compose_power(p ** (k - 1)))
    return lhs == rhs


def is_even_cyclotomic(n: int) -> bool:
    """True iff the n-th cyclotomic polynomial is even.

    This holds exactly when 4 divides n, so the predicate is pure
    integer arithmetic; the test suite re-derives the equivalence with
    a coefficient scan of the constructed polynomials.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    return n % 4 == 0
