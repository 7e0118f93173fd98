"""Brute-force enumeration of bounded progressions, independent of the solver.

For each first term x the equation is a quadratic in the difference e:

    (b + 4c - 2dx) e^2 + ((2b + 4c) x - 3d x^2) e + (a + b + c) x^2 - d x^3 = 0,

so only x is enumerated; e comes from an exact square root in the ring of
integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qfield import AlgInt, isqrt_int
from .solver import APTriple, MRInstance


@dataclass(frozen=True)
class HeightBound:
    """Bound on |u| and |v| of both the first term and the difference."""

    H: int

    def __post_init__(self) -> None:
        if self.H < 1:
            raise ValueError("height bound must be at least 1")


def _box(field, H: int):
    vs = range(-H, H + 1) if field.D != 1 else (0,)
    for u in range(-H, H + 1):
        for v in vs:
            yield AlgInt(u, v, field)


def _in_box(x: AlgInt, H: int) -> bool:
    return abs(x.u) <= H and abs(x.v) <= H


def brute_force_ap(inst: MRInstance, bound: HeightBound) -> frozenset[APTriple]:
    """Every progression (x, x+e, x+2e) solving the instance with x, e in the box."""
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    f = inst.field
    H = bound.H
    abc = a + b + c
    lin = 2 * b + 4 * c
    quad0 = b + 4 * c
    out = {APTriple(f.zero, f.zero)}
    for x in _box(f, H):
        dx = d * x
        A = quad0 - 2 * dx
        B = (lin - 3 * dx) * x
        C = (abc - dx) * x * x
        if not A:
            if B:
                e = (-C).exact_div(B)
                if e is not None and _in_box(e, H):
                    out.add(APTriple(x, e))
            elif not C:
                out.update(APTriple(x, e) for e in _box(f, H))
            continue
        root = isqrt_int(B * B - 4 * A * C)
        if root is None:
            continue
        den = 2 * A
        for r in (root, -root):
            e = (r - B).exact_div(den)
            if e is not None and _in_box(e, H):
                out.add(APTriple(x, e))
    return frozenset(out)
