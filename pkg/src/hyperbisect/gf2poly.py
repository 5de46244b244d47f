"""Truncated polynomial algebra over F2.

Work happens in F2[t_1, ..., t_k] modulo the ideal generated by the
(d+1)-st powers of the variables.  Monomials with any exponent above d
die, so a polynomial is just the set of surviving exponent vectors and
addition is symmetric difference.  The quantity of interest is the j-th
power of t_1 + ... + t_k: it reduces to zero exactly when no exponent
vector (a_1, ..., a_k) with sum j and all a_i <= d has an odd
multinomial coefficient, i.e. when j admits no carry-free binary
composition into k parts each at most d.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .parity import multinomial_parity, Parity


@dataclass(frozen=True)
class F2Poly:
    """Multivariate polynomial over F2 with per-variable exponent cap.

    monomials holds exponent vectors of length num_vars; every exponent
    is between 0 and cap - 1, where cap = d + 1 encodes reduction modulo
    the ideal of (d+1)-st variable powers.
    """

    num_vars: int
    cap: int
    monomials: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError(f"need at least one variable, got {self.num_vars}")
        if self.cap < 1:
            raise ValueError(f"cap must be >= 1, got {self.cap}")
        for mono in self.monomials:
            if len(mono) != self.num_vars:
                raise ValueError(f"monomial {mono} has wrong arity")
            if any(e < 0 or e >= self.cap for e in mono):
                raise ValueError(f"monomial {mono} violates cap {self.cap}")

    @classmethod
    def zero(cls, num_vars: int, cap: int) -> "F2Poly":
        return cls(num_vars, cap, frozenset())

    @classmethod
    def one(cls, num_vars: int, cap: int) -> "F2Poly":
        return cls(num_vars, cap, frozenset({(0,) * num_vars}))

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    def __add__(self, other: "F2Poly") -> "F2Poly":
        if (self.num_vars, self.cap) != (other.num_vars, other.cap):
            raise ValueError("mixed rings")
        return F2Poly(self.num_vars, self.cap,
                      self.monomials ^ other.monomials)

    def times_variable_sum(self) -> "F2Poly":
        """Multiply by t_1 + ... + t_k, dropping capped monomials.

        Characteristic 2: a shifted copy landing on an existing monomial
        cancels it, hence the symmetric difference.  Dropping a monomial
        whose exponent hits the cap is sound because every multiple of it
        would be dropped too.
        """
        acc: set[tuple[int, ...]] = set()
        for mono in self.monomials:
            for i in range(self.num_vars):
                if mono[i] + 1 >= self.cap:
                    continue
                shifted = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                acc.symmetric_difference_update({shifted})
        return F2Poly(self.num_vars, self.cap, frozenset(acc))


def _check_args(j: int, k: int, d: int) -> None:
    if j < 0:
        raise ValueError(f"exponent j must be >= 0, got {j}")
    if k < 1:
        raise ValueError(f"need k >= 1 variables, got {k}")
    if d < 0:
        raise ValueError(f"cap parameter d must be >= 0, got {d}")


def truncated_power_of_sum(j: int, k: int, d: int) -> F2Poly:
    """(t_1 + ... + t_k)^j reduced modulo the (d+1)-st variable powers.

    The result contains exponent vector a iff sum(a) == j, all a_i <= d,
    and C(j; a_1, ..., a_k) is odd.
    """
    _check_args(j, k, d)
    acc = F2Poly.one(k, d + 1)
    for _ in range(j):
        acc = acc.times_variable_sum()
    return acc


def carry_free_composition(j: int, k: int, d: int) -> tuple[int, ...] | None:
    """A composition of j into k parts <= d whose binary digits are disjoint.

    Such a composition exists iff C(j; a) is odd for some admissible
    exponent vector, i.e. iff the truncated power above is nonzero.
    Returns one witness or None.  Search distributes the set bits of j
    over the parts, high bit first, pruning parts that exceed d.
    """
    _check_args(j, k, d)
    bits = [1 << b for b in range(j.bit_length()) if j >> b & 1]
    bits.reverse()
    parts = [0] * k

    def place(idx: int) -> bool:
        if idx == len(bits):
            return True
        bit = bits[idx]
        seen: set[int] = set()
        for i in range(k):
            if parts[i] in seen:
                continue  # identical prefixes only need one branch
            seen.add(parts[i])
            if parts[i] + bit > d:
                continue
            parts[i] += bit
            if place(idx + 1):
                return True
            parts[i] -= bit
        return False

    if j == 0:
        return tuple(parts)
    return tuple(parts) if place(0) else None


def ideal_member(j: int, k: int, d: int) -> bool:
    """Whether the j-th power of the variable sum lies in the cap ideal.

    Fast path: membership fails exactly when a carry-free composition of
    j into k parts each <= d exists.  The expansion path below decides
    the same predicate and the two are kept in agreement by tests.
    """
    _check_args(j, k, d)
    return carry_free_composition(j, k, d) is None


def ideal_member_by_expansion(j: int, k: int, d: int) -> bool:
    """Reference path: expand, reduce, test for the zero polynomial."""
    return truncated_power_of_sum(j, k, d).is_zero


def surviving_monomials(j: int, k: int, d: int) -> list[tuple[int, ...]]:
    """Sorted exponent vectors that survive the truncated expansion."""
    surv = truncated_power_of_sum(j, k, d).monomials
    for mono in surv:
        # every survivor must pass the odd-multinomial criterion
        assert multinomial_parity(j, list(mono)) is Parity.ODD
    return sorted(surv)
