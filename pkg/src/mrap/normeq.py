"""Norm equations |N(k)| = n up to associates, and the candidate sets A_1, A_2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .qfield import AlgInt, Field, canonical_associate, unit_group

# above this many v-values the real-quadratic box search hands over to sympy's
# Lagrange-Mathews-Matthews solver (large regulators make the box enormous)
BOX_LIMIT = 200_000


class Degenerate(ValueError):
    """Raised when a+c = 0 or some alpha_i * beta_i vanishes."""


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n >= 1`` in increasing order."""
    if n < 1:
        raise ValueError("divisors() needs n >= 1")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _solve_u(field: Field, v: int, target: int) -> list[int]:
    """Integers u with u^2 + wt*u*v - wc*v^2 == target."""
    wt, wc = field.wt, field.wc
    disc = wt * wt * v * v + 4 * (wc * v * v + target)
    if disc < 0:
        return []
    r = math.isqrt(disc)
    if r * r != disc:
        return []
    out = []
    for num in {-wt * v + r, -wt * v - r}:
        if num % 2 == 0:
            out.append(num // 2)
    return out


def _imaginary(field: Field, n: int) -> list[AlgInt]:
    # N(u + v w) >= |D| v^2 / 4 (or |D| v^2), so |v| <= 2 sqrt(n/|D|)
    V = math.isqrt(4 * n // abs(field.D)) + 1
    found = []
    for v in range(-V, V + 1):
        for u in _solve_u(field, v, n):
            found.append(AlgInt(u, v, field))
    return found


def _eps_upper(field: Field) -> int:
    eps = unit_group(field).fundamental
    S, T = eps.scaled_sqrt_coords()
    return (S + math.isqrt(T * T * field.D) + 1) // 2 + 1


def real_box_bound(field: Field, n: int) -> int:
    """Bound V on |v| for a representative of every class of norm +-n.

    Each class contains xi with sqrt(n/eps) <= |sigma_1(xi)| <= sqrt(n*eps), so
    both embeddings are at most sqrt(n*eps) and
    |v| = |sigma_1 - sigma_2| / sqrt(disc) <= 2 sqrt(n*eps/disc).
    """
    num = 4 * n * _eps_upper(field)
    return math.isqrt(-(-num // field.disc)) + 1


def _real_box(field: Field, n: int, V: int) -> list[AlgInt]:
    found = []
    for v in range(-V, V + 1):
        for target in (n, -n):
            for u in _solve_u(field, v, target):
                found.append(AlgInt(u, v, field))
    return found


def _real_lmm(field: Field, n: int) -> list[AlgInt]:
    from sympy.solvers.diophantine.diophantine import diop_DN

    D = field.D
    found = []
    for target in (n, -n):
        if field.wt:
            # 2k = X + Y sqrt(D) with X = Y (mod 2):  X^2 - D Y^2 = 4 N(k)
            for X, Y in diop_DN(D, 4 * target):
                for x, y in ((X, Y), (-X, -Y), (X, -Y), (-X, Y)):
                    if (x - y) % 2 == 0:
                        found.append(AlgInt((x - y) // 2, y, field))
        else:
            for X, Y in diop_DN(D, target):
                for x, y in ((X, Y), (-X, -Y), (X, -Y), (-X, Y)):
                    found.append(AlgInt(x, y, field))
    return found


@lru_cache(maxsize=4096)
def norm_eq_solutions(field: Field, n: int, method: str = "auto") -> tuple[AlgInt, ...]:
    """All k with |N(k)| = n, one canonical representative per associate class.

    ``method`` picks the real-quadratic search: ``"box"`` (bounded lattice
    enumeration), ``"lmm"`` (sympy's ``diop_DN``), or ``"auto"``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if field.D == 1:
        return (field.elt(n),)
    if field.D < 0:
        found = _imaginary(field, n)
    else:
        V = real_box_bound(field, n)
        if method == "box" or (method == "auto" and V <= BOX_LIMIT):
            found = _real_box(field, n, V)
        else:
            found = _real_lmm(field, n)
    reps = {canonical_associate(k) for k in found}
    assert all(abs(k.norm2()) == n for k in reps)
    return tuple(sorted(reps, key=lambda k: (k.u, k.v)))


@dataclass(frozen=True)
class CandidateSet:
    """Pairwise non-associate k whose norm divides |N(alpha*beta)|."""

    alpha: AlgInt
    beta: AlgInt
    target_norm: int
    members: tuple[AlgInt, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def candidate_set(field: Field, alpha: AlgInt, beta: AlgInt) -> CandidateSet:
    prod = alpha * beta
    if not prod:
        raise Degenerate(f"alpha*beta = 0 (alpha={alpha}, beta={beta})")
    target = abs(prod.norm())
    members = []
    for n in divisors(target):
        members.extend(norm_eq_solutions(field, n))
    return CandidateSet(alpha, beta, target, tuple(members))


def candidate_sets(field: Field, a: AlgInt, b: AlgInt, c: AlgInt) -> tuple[CandidateSet, CandidateSet]:
    """A_1 and A_2 for the coefficients (a, b, c)."""
    alpha = a + c
    if not alpha:
        raise Degenerate("a + c = 0")
    return candidate_set(field, alpha, b + 4 * c), candidate_set(field, alpha, b + 4 * a)
