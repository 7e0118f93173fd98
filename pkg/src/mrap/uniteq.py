"""The two-term unit equation k1*u1 + k2*u2 = c0 over fields of unit rank <= 1.

For real quadratic fields the exponent of u1 is bounded by an elementary
norm-growth argument.  Write u1 = +-eps^m and x = k1*u1, y = c0 - x.  For
m >= 0,

    |sigma_1(y)| >= |sigma_1(k1)| eps^m - |sigma_1(c0)|
    |sigma_2(y)| >= |sigma_2(c0)| - |sigma_2(k1)| eps^-m

and both right-hand sides grow with m.  Once both are positive and their
product exceeds |N(k2)| no larger m can give y = k2*u2 with a unit u2.
The m < 0 side is the same with the embeddings swapped.  Every comparison
is an exact sign test inside the field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qfield import AlgInt, Field, canonical_associate, unit_group


class ZeroInput(ValueError):
    """Raised when k1, k2 or c0 is zero."""


@dataclass(frozen=True)
class UnitSolution:
    u1: AlgInt
    u2: AlgInt
    exponents: tuple[tuple[AlgInt, int], tuple[AlgInt, int]]


def _abs1(x: AlgInt) -> AlgInt:
    return x if x.sign1() >= 0 else -x


def _abs2(x: AlgInt) -> AlgInt:
    # element whose sigma_1 equals |sigma_2(x)|
    xc = x.conj()
    return xc if xc.sign1() >= 0 else -xc


def _side_bound(field: Field, k1: AlgInt, c0: AlgInt, n2: int, direction: int) -> int:
    """Smallest m >= 0 from which direction*m admits no solution."""
    step = unit_group(field).fundamental
    if direction < 0:
        # conj(eps^-m) = +-eps^m, so m < 0 is the m > 0 case for the conjugates
        k1, c0 = k1.conj(), c0.conj()
    x = k1
    m = 0
    a1c0 = _abs1(c0)
    a2c0 = _abs2(c0)
    while True:
        lo1 = _abs1(x) - a1c0          # sigma_1 gives the lower bound of |sigma_1(y)|
        lo2 = a2c0 - _abs2(x)          # sigma_1 gives the lower bound of |sigma_2(y)|
        if lo1.sign1() > 0 and lo2.sign1() > 0 and (lo1 * lo2 - n2).sign1() > 0:
            return m
        x = x * step
        m += 1


def _exponent_bound(field: Field, k1: AlgInt, c0: AlgInt, n2: int) -> int:
    if unit_group(field).rank == 0:
        raise ValueError(f"{field} has unit rank 0; no exponent bound needed")
    if not k1 or not c0:
        raise ZeroInput("k1 and c0 must be nonzero")
    hi = _side_bound(field, k1, c0, n2, +1)
    lo = _side_bound(field, k1, c0, n2, -1)
    return max(hi, lo, 1) - 1


def exponent_bound(field: Field, k1: AlgInt, k2: AlgInt, c0: AlgInt) -> int:
    """M such that every solution has u1 = +-eps^m with |m| <= M."""
    if not k2:
        raise ZeroInput("k2 must be nonzero")
    return _exponent_bound(field, k1, c0, abs(k2.norm2()))


def _units_up_to(field: Field, M: int):
    ug = unit_group(field)
    if ug.rank == 0:
        yield from ug.torsion
        return
    for m in range(-M, M + 1):
        e = ug.power(m)
        for z in ug.torsion:
            yield z * e


def unit_eq(field: Field, k1: AlgInt, k2: AlgInt, c0: AlgInt) -> list[UnitSolution]:
    """Complete list of unit pairs (u1, u2) with k1*u1 + k2*u2 = c0."""
    if not k1 or not k2 or not c0:
        raise ZeroInput("k1, k2 and c0 must all be nonzero")
    ug = unit_group(field)
    M = exponent_bound(field, k1, k2, c0) if ug.rank else 0
    out = []
    seen = set()
    for u1 in _units_up_to(field, M):
        y = c0 - k1 * u1
        if not y:
            continue
        u2 = y.exact_div(k2)
        if u2 is None or not u2.is_unit() or (u1, u2) in seen:
            continue
        seen.add((u1, u2))
        out.append(UnitSolution(u1, u2, (ug.decompose(u1), ug.decompose(u2))))
    return out


def solve_unit_equations(
    field: Field, A1, A2, c0: AlgInt
) -> list[tuple[AlgInt, AlgInt, AlgInt, AlgInt]]:
    """All (k1, u1, k2, u2) with k_i in A_i and k1*u1 + k2*u2 = c0.

    Same solution set as running :func:`unit_eq` over A1 x A2; instead of the
    pair loop, each c0 - k1*u1 is looked up among the A2 classes.
    """
    if not c0:
        raise ZeroInput("c0 must be nonzero")
    by_class = {canonical_associate(k): k for k in A2}
    norms = {abs(k.norm2()) for k in by_class}
    n2max = max(norms, default=0)
    ug = unit_group(field)
    out = []
    for k1 in A1:
        M = _exponent_bound(field, k1, c0, n2max) if ug.rank else 0
        for u1 in _units_up_to(field, M):
            y = c0 - k1 * u1
            if not y or abs(y.norm2()) not in norms:
                continue
            k2 = by_class.get(canonical_associate(y))
            if k2 is None:
                continue
            u2 = y.exact_div(k2)
            out.append((k1, u1, k2, u2))
    return out
