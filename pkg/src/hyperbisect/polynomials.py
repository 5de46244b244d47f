"""Exact univariate polynomials over the rationals.

Coefficient tuples in ascending order, trimmed so the leading entry is
nonzero; the empty tuple is the zero polynomial.  Everything runs on
fractions.Fraction, so the Sturm-chain root counter at the bottom gives
certified answers: count_roots_open(p, a, b) is the exact number of
distinct real roots of p in the open interval (a, b).
"""

from __future__ import annotations

from fractions import Fraction

Coeffs = tuple[Fraction, ...]

ZERO: Coeffs = ()


def make(coeffs) -> Coeffs:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: Coeffs) -> int:
    return len(p) - 1


def evaluate(p: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Coeffs, q: Coeffs) -> Coeffs:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return make(out)


def scale(p: Coeffs, c) -> Coeffs:
    return make(ci * Fraction(c) for ci in p)


def multiply(p: Coeffs, q: Coeffs) -> Coeffs:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return make(out)


def from_roots(roots) -> Coeffs:
    p = make([1])
    for r in roots:
        p = multiply(p, make([-Fraction(r), 1]))
    return p


def divide(p: Coeffs, q: Coeffs) -> tuple[Coeffs, Coeffs]:
    """Quotient and remainder; exact since Fraction is a field."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq, lead = len(q) - 1, q[-1]
    while len(rem) - 1 >= dq and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
    return make(quot), make(rem)


def derivative(p: Coeffs) -> Coeffs:
    return make(i * c for i, c in enumerate(p) if i > 0)


def _monic(p: Coeffs) -> Coeffs:
    return scale(p, 1 / p[-1]) if p else ZERO


def gcd(p: Coeffs, q: Coeffs) -> Coeffs:
    while q:
        p, q = q, divide(p, q)[1]
    return _monic(p)


def squarefree_part(p: Coeffs) -> Coeffs:
    if degree(p) < 1:
        return p
    return divide(p, gcd(p, derivative(p)))[0]


def _sign_changes(values) -> int:
    changes, prev = 0, 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def count_roots_open(p: Coeffs, a, b) -> int:
    """Distinct real roots of nonzero p strictly between a and b."""
    if not p:
        raise ValueError("zero polynomial has roots everywhere")
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError(f"need a < b, got {a} >= {b}")
    p = squarefree_part(p)
    # peel off roots sitting exactly on an endpoint; they do not count
    for end in (a, b):
        while p and evaluate(p, end) == 0:
            p = divide(p, make([-end, 1]))[0]
    if degree(p) < 1:
        return 0
    chain = [p, derivative(p)]
    while chain[-1]:
        rem = divide(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(scale(rem, -1))
    va = _sign_changes(evaluate(s, a) for s in chain)
    vb = _sign_changes(evaluate(s, b) for s in chain)
    return va - vb
