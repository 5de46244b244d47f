"""Parity of factorial ratios via p-adic valuations.

The number of times a prime p divides n! is Legendre's sum
floor(n/p) + floor(n/p^2) + ..., which also equals
(n - digitsum_p(n)) / (p - 1).  A multinomial coefficient
C(n; k_1, ..., k_t) is divisible by p^r exactly when the valuation of
n! exceeds the combined valuation of the k_i! by at least r.  For
p = 2 and r = 1 this gives the carry criterion: the coefficient is odd
exactly when the parts add without carries in binary.

The two partition-counting quantities at the end drive the membership
certificates elsewhere in the package: the number of ways to split
d*k items into k unordered blocks of size d is odd exactly when d is a
power of two, and the anchored variant (one free block of size d, the
remaining (d-ell)*(k-1) items in k-1 unordered blocks) obeys a similar
power-of-two rule when 2*ell <= d - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, n: int) -> "Parity":
        return cls.ODD if n % 2 else cls.EVEN

    @property
    def is_odd(self) -> bool:
        return self is Parity.ODD

    def __str__(self) -> str:
        return self.value


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n >= 0."""
    if n < 0:
        raise ValueError(f"negative n: {n}")
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    s = 0
    while n:
        s += n % p
        n //= p
    return s


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n!.

    Computed by the floor sum and cross-checked against the digit-sum
    form (n - digitsum_p(n)) / (p - 1); the two must agree.
    """
    if n < 0:
        raise ValueError(f"negative n: {n}")
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    floor_sum = 0
    q = p
    while q <= n:
        floor_sum += n // q
        q *= p
    digit_form = (n - digit_sum(n, p)) // (p - 1)
    assert floor_sum == digit_form
    return floor_sum


@dataclass(frozen=True)
class PadicProfile:
    """Valuation and digit sum of n! at a prime p, bundled together."""

    n: int
    p: int
    valuation: int
    digit_sum: int

    def __post_init__(self) -> None:
        # the Legendre identity ties the two fields together
        if self.valuation * (self.p - 1) != self.n - self.digit_sum:
            raise ValueError("inconsistent profile")


def padic_profile(n: int, p: int) -> PadicProfile:
    return PadicProfile(n=n, p=p, valuation=legendre_valuation(n, p),
                        digit_sum=digit_sum(n, p))


def multinomial_valuation(n: int, parts: list[int], p: int) -> int:
    """Exponent of p in the multinomial coefficient C(n; parts)."""
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    if any(k < 0 for k in parts):
        raise ValueError(f"negative part in {parts}")
    return legendre_valuation(n, p) - sum(legendre_valuation(k, p) for k in parts)


def multinomial_parity(n: int, parts: list[int]) -> Parity:
    """Parity of C(n; parts): odd iff the parts add carry-free in binary."""
    return Parity.EVEN if multinomial_valuation(n, parts, 2) > 0 else Parity.ODD


def is_carry_free(parts: list[int]) -> bool:
    """True when the binary additions of the parts produce no carries."""
    total = 0
    acc = 0
    for k in parts:
        if k < 0:
            raise ValueError(f"negative part in {parts}")
        total += k
        acc |= k
    return acc == total


def equal_blocks_parity(d: int, k: int) -> Parity:
    """Parity of the number of partitions of d*k items into k blocks of size d.

    The count is C(dk; d, ..., d) / k!.  Its 2-adic valuation is
    E(dk) - E(k) - k*E(d) with E the factorial valuation at 2; the
    count is odd exactly when d is a power of two.
    """
    if d < 1 or k < 1:
        raise ValueError(f"need d >= 1 and k >= 1, got d={d}, k={k}")
    v = (legendre_valuation(d * k, 2) - legendre_valuation(k, 2)
         - k * legendre_valuation(d, 2))
    assert v >= 0
    return Parity.EVEN if v > 0 else Parity.ODD


def anchored_blocks_parity(d: int, k: int, ell: int) -> Parity:
    """Parity of C((d-ell)k + ell; d) * C((d-ell)(k-1); d-ell, ...) / (k-1)!.

    This counts the candidate arrangements in the anchored construction:
    choose d of the j = (d-ell)k + ell midpoints for the free hyperplane,
    then split the rest into k-1 unordered blocks of size d-ell.  In the
    range 2*ell <= d - 1 the count is odd exactly when k is odd and
    d - ell is a power of two (with d - ell >= 2).
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if not 1 <= ell <= d - 1:
        raise ValueError(f"need 1 <= ell <= d-1, got ell={ell}, d={d}")
    j = (d - ell) * k + ell
    rest = (d - ell) * (k - 1)
    v = (legendre_valuation(j, 2) - legendre_valuation(d, 2)
         - legendre_valuation(j - d, 2))
    v += (legendre_valuation(rest, 2) - legendre_valuation(k - 1, 2)
          - (k - 1) * legendre_valuation(d - ell, 2))
    assert v >= 0
    return Parity.EVEN if v > 0 else Parity.ODD
