"""Solutions in arithmetic progression of a*x^2 + b*y^2 + c*z^2 = d*x*y*z.

A progression (x, x+e, x+2e) corresponds to the affine point (X, Y) = (e, x+e)
of the cubic

    D:  d*Y^3 - (a+b+c)*Y^2 - d*X^2*Y + 2*(a-c)*X*Y - (a+c)*X^2 = 0,

and integral progressions correspond to integral points.  Integral points
have X = 0 or X = z(k1, u1), where k_i runs over the candidate sets A_i and
(u1, u2) over the solutions of k1*u1 + k2*u2 = -2(a+c).  At each candidate X
the cubic in Y has one root that is rational in the data, and two roots
+-sqrt(Delta) that are K-rational only when Delta is a square in K.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .normeq import Degenerate, candidate_sets
from .qfield import (
    QQ,
    AlgInt,
    AlgNum,
    Field,
    is_square,
    parse_element,
    render,
    squarefree_part,
)
from .uniteq import solve_unit_equations

# height used when a degenerate instance falls back to the brute-force oracle
FALLBACK_HEIGHT = 25


class ZeroD(ValueError):
    """Raised for d = 0."""


def _as_int(x, field: Field) -> AlgInt:
    if isinstance(x, AlgInt):
        return x
    if isinstance(x, int):
        return field.elt(x)
    if isinstance(x, str):
        return parse_element(x, field)
    raise TypeError(f"cannot read {x!r} as an integral element")


@dataclass(frozen=True)
class MRInstance:
    a: AlgInt
    b: AlgInt
    c: AlgInt
    d: AlgInt
    field: Field = QQ

    @classmethod
    def of(cls, a, b, c, d, field: Field = QQ) -> MRInstance:
        """Build an instance from ints, ``u+v*a`` strings or AlgInts."""
        return cls(*(_as_int(x, field) for x in (a, b, c, d)), field)

    @property
    def is_degenerate(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return not (a + c) or not (b + 4 * c) or not (b + 4 * a)

    def with_d(self, d) -> MRInstance:
        return MRInstance(self.a, self.b, self.c, _as_int(d, self.field), self.field)

    def __str__(self) -> str:
        coeffs = ",".join(render(x) for x in (self.a, self.b, self.c, self.d))
        return f"({coeffs}) over {self.field}"


@dataclass(frozen=True)
class CurvePoint:
    X: AlgNum
    Y: AlgNum

    def is_integral(self) -> bool:
        return self.X.to_int() is not None and self.Y.to_int() is not None


@dataclass(frozen=True)
class APTriple:
    """The progression (first, first + diff, first + 2*diff)."""

    first: AlgInt
    diff: AlgInt

    @property
    def terms(self) -> tuple[AlgInt, AlgInt, AlgInt]:
        return self.first, self.first + self.diff, self.first + 2 * self.diff

    def height(self) -> int:
        return max(self.first.height(), self.diff.height())

    def is_rational(self) -> bool:
        return self.first.v == 0 and self.diff.v == 0

    def is_trivial(self) -> bool:
        return not self.first and not self.diff

    def render(self) -> str:
        return f"{render(self.first)}|{render(self.diff)}"

    def sort_key(self) -> tuple:
        return (self.first.height(), self.render())

    def conj(self) -> APTriple:
        return APTriple(self.first.conj(), self.diff.conj())

    def reversed(self) -> APTriple:
        return APTriple(self.first + 2 * self.diff, -self.diff)

    def scaled(self, u: AlgInt) -> APTriple:
        return APTriple(self.first * u, self.diff * u)

    def __str__(self) -> str:
        return "(" + ", ".join(render(t) for t in self.terms) + ")"


@dataclass(frozen=True)
class CandidateRecord:
    k1: AlgInt
    k2: AlgInt
    u1: AlgInt
    u2: AlgInt
    z: AlgNum
    delta: AlgInt
    extension: str | None
    points: tuple[CurvePoint, ...] = ()

    @property
    def t(self) -> AlgInt:
        return self.k1 * self.u1


@dataclass(frozen=True)
class SolutionReport:
    instance: MRInstance
    triples: tuple[APTriple, ...]
    records: tuple[CandidateRecord, ...] = ()
    degenerate_fallback: bool = False
    fallback_height: int | None = None

    @property
    def count(self) -> int:
        return len(self.triples)

    def nonrational(self) -> tuple[APTriple, ...]:
        return tuple(t for t in self.triples if not t.is_rational())

    def nontrivial(self) -> tuple[APTriple, ...]:
        return tuple(t for t in self.triples if not t.is_trivial())

    def points(self) -> list[CurvePoint]:
        return [p for r in self.records for p in r.points]


@dataclass(frozen=True)
class ExistenceReport:
    nontrivial: bool
    clause_a: bool
    clause_b: bool
    clause_b_divisibility: bool
    witnesses: tuple[CandidateRecord, ...] = dc_field(default=(), repr=False)

    @property
    def clause(self) -> str | None:
        if self.clause_a:
            return "a"
        if self.clause_b:
            return "b"
        return None

    @property
    def disagreement(self) -> bool:
        """True when the divisibility form of clause (b) and point integrality differ."""
        return (self.clause_a or self.clause_b_divisibility) != self.nontrivial

    def __bool__(self) -> bool:
        return self.nontrivial


# ---------------------------------------------------------------------------
# curve formulas
# ---------------------------------------------------------------------------


def curve_value(inst: MRInstance, X, Y) -> AlgNum:
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    X = AlgNum.coerce(X, inst.field)
    Y = AlgNum.coerce(Y, inst.field)
    return d * Y**3 - (a + b + c) * Y**2 - d * X**2 * Y + 2 * (a - c) * X * Y - (a + c) * X**2


def on_curve(inst: MRInstance, p: CurvePoint) -> bool:
    return not curve_value(inst, p.X, p.Y)


def candidate_x(inst: MRInstance, k1, u1, k2, u2) -> AlgNum:
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    t = k1 * u1
    num = (a + c + t) * (4 * c * t + t * t + (a + c) * (b + 4 * c))
    return num / (u1 * u2 * k1 * k2 * d)


def delta(inst: MRInstance, t):
    """Branch discriminant as a polynomial in t = k1*u1."""
    a, b, c = inst.a, inst.b, inst.c
    return (
        4 * t**4
        + 8 * (a + 3 * c) * t**3
        + (4 * a * a + b * b + 8 * a * b + 56 * a * c + 8 * b * c + 52 * c * c) * t**2
        + 2 * (a + c) * (b + 4 * c) * (6 * a + b + 6 * c) * t
        + (a + c) ** 2 * (b + 4 * c) ** 2
    )


def extension_descriptor(field: Field, dlt) -> str | None:
    """``None`` when Delta is a square in K, else a label for K(sqrt(Delta))."""
    if is_square(dlt) is not None:
        return None
    x = AlgNum.coerce(dlt, field)
    if x.is_rational() and x.s.denominator == 1:
        r = squarefree_part(int(x.s))
        base = "Q" if field.D == 1 else f"Q(sqrt({field.D}))"
        return f"{base}(sqrt({r}))"
    return f"{field}(sqrt({x}))"


def points_from_candidate(inst: MRInstance, record: CandidateRecord) -> tuple[list[CurvePoint], str | None]:
    """Curve points over K with X = z(k1, u1), plus the K(sqrt(Delta)) note."""
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    z = record.z
    t = record.k1 * record.u1
    t2 = record.k2 * record.u2
    pts: list[CurvePoint] = []
    if a + c + t:
        pts.append(CurvePoint(z, (a + c) * z / (a + c + t)))
    root = is_square(record.delta)
    if root is not None:
        base = (a + c) * (b + 4 * c) + (2 * a + b + 2 * c) * t
        den = -2 * t * t2 * d
        for r in (root, -root) if root else (root,):
            pts.append(CurvePoint(z, (base + r) * (a + c + t) / den))
    uniq = list(dict.fromkeys(pts))
    for p in uniq:
        if not on_curve(inst, p):
            raise ArithmeticError(f"derived point {p} is not on the curve for {inst}")
    return uniq, (None if root is not None else record.extension)


def point_to_triple(p: CurvePoint) -> APTriple | None:
    """(Y - X, Y, Y + X) as a progression, or ``None`` if not integral."""
    X, Y = p.X.to_int(), p.Y.to_int()
    if X is None or Y is None:
        return None
    return APTriple(Y - X, X)


def triple_to_point(t: APTriple) -> CurvePoint:
    return CurvePoint(t.diff.to_num(), (t.first + t.diff).to_num())


def verify_triple(inst: MRInstance, t: APTriple) -> bool:
    if not isinstance(t.first, AlgInt) or not isinstance(t.diff, AlgInt):
        return False
    x, y, z = t.terms
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    return a * x * x + b * y * y + c * z * z == d * x * y * z


def identity_checks(inst: MRInstance, p: CurvePoint) -> bool:
    """Check f1 + f2 = -2 and the monic relations R_i, S_i at ``p``."""
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    X, Y = p.X, p.Y
    if not X or not (a + c):
        raise ValueError("identities need X != 0 and a + c != 0")
    den = (a + c) * X
    f1 = (d * Y**2 - (a + b + c) * Y - d * X**2 + (a - 3 * c) * X) / den
    f2 = (-d * Y**2 + (a + b + c) * Y + d * X**2 + (-3 * a + c) * X) / den
    alpha, beta1, beta2 = a + c, b + 4 * c, b + 4 * a

    def R1(T):
        return T**3 + (d * X + a + 5 * c) * T**2 + alpha * (2 * d * X + b + 8 * c) * T + alpha**2 * beta1

    def R2(T):
        return T**3 + (-d * X + 5 * a + c) * T**2 + alpha * (-2 * d * X + 8 * a + b) * T + alpha**2 * beta2

    def S1(T):
        return T**3 + (2 * d * X + b + 8 * c) * T**2 + beta1 * (d * X + a + 5 * c) * T + alpha * beta1**2

    def S2(T):
        return T**3 + (-2 * d * X + 8 * a + b) * T**2 + beta2 * (-d * X + 5 * a + c) * T + alpha * beta2**2

    ok = f1 + f2 == -2
    ok = ok and not R1(alpha * f1) and not R2(alpha * f2)
    if f1:
        ok = ok and not S1(beta1 / f1)
    if f2:
        ok = ok and not S2(beta2 / f2)
    return bool(ok)


# ---------------------------------------------------------------------------
# the pipeline
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1024)
def unit_solutions(field: Field, a: AlgInt, b: AlgInt, c: AlgInt) -> tuple:
    """(k1, u1, k2, u2) over A_1 x A_2; depends on (a, b, c) but not on d."""
    A1, A2 = candidate_sets(field, a, b, c)
    sols = solve_unit_equations(field, A1.members, A2.members, -2 * (a + c))
    return tuple(sols)


def candidate_records(inst: MRInstance) -> list[CandidateRecord]:
    recs = []
    for k1, u1, k2, u2 in unit_solutions(inst.field, inst.a, inst.b, inst.c):
        t = k1 * u1
        z = candidate_x(inst, k1, u1, k2, u2)
        dl = delta(inst, t)
        rec = CandidateRecord(k1, k2, u1, u2, z, dl, extension_descriptor(inst.field, dl))
        pts, _ = points_from_candidate(inst, rec)
        recs.append(CandidateRecord(k1, k2, u1, u2, z, dl, rec.extension, tuple(pts)))
    return recs


def sort_triples(triples) -> tuple[APTriple, ...]:
    return tuple(sorted(set(triples), key=APTriple.sort_key))


def solve_ap(inst: MRInstance, fallback_height: int = FALLBACK_HEIGHT) -> SolutionReport:
    """All integral progressions solving the instance.

    Degenerate coefficients (a+c, b+4c or b+4a zero) can give infinite
    families; those fall back to the brute-force oracle at
    ``fallback_height`` and set ``degenerate_fallback``.
    """
    if not inst.d:
        raise ZeroD("d must be nonzero")
    if inst.is_degenerate:
        from .oracle import HeightBound, brute_force_ap

        found = brute_force_ap(inst, HeightBound(fallback_height))
        return SolutionReport(inst, sort_triples(found), (), True, fallback_height)

    f = inst.field
    found = {APTriple(f.zero, f.zero)}
    m = (inst.a + inst.b + inst.c).to_num() / inst.d
    mi = m.to_int()
    if mi is not None:
        found.add(APTriple(mi, f.zero))
    try:
        records = candidate_records(inst)
    except Degenerate:  # pragma: no cover - excluded by is_degenerate
        raise
    for rec in records:
        for p in rec.points:
            tr = point_to_triple(p)
            if tr is not None:
                found.add(tr)
    triples = sort_triples(found)
    for tr in triples:
        if not verify_triple(inst, tr):
            raise ArithmeticError(f"{tr} fails the equation for {inst}")
    return SolutionReport(inst, triples, tuple(records))


def _divides(d: AlgInt, x: AlgInt) -> bool:
    if not x:
        return True
    return x.exact_div(d) is not None


def has_nontrivial(inst: MRInstance) -> ExistenceReport:
    """Existence of a nontrivial progression, with the clause that explains it."""
    rep = solve_ap(inst)
    a, b, c, d = inst.a, inst.b, inst.c, inst.d
    nontrivial = bool(rep.nontrivial())
    clause_a = _divides(d, a + b + c)
    witnesses = []
    divisible = False
    for rec in rep.records:
        t = rec.t
        if _divides(d, (a + c + t) * (t * t + 4 * c * t + (a + c) * (b + 4 * c))):
            divisible = True
        if any(p.is_integral() and p.X for p in rec.points):
            witnesses.append(rec)
    return ExistenceReport(nontrivial, clause_a, bool(witnesses), divisible, tuple(witnesses))


@lru_cache(maxsize=4096)
def rational_ap(a: int, b: int, c: int, d: int) -> tuple[APTriple, ...]:
    """Progressions over Q, for comparing against a quadratic field."""
    return solve_ap(MRInstance.of(a, b, c, d)).triples


def embed(t: APTriple, field: Field) -> APTriple:
    if t.first.v or t.diff.v:
        raise ValueError("only rational triples embed")
    return APTriple(field.elt(t.first.u), field.elt(t.diff.u))


def _content(x: AlgNum) -> int | None:
    w = x.to_int()
    if w is None:
        return None
    from math import gcd

    return gcd(w.u, w.v)


def admissible_d(field: Field, a, b, c) -> set[int] | None:
    """Positive rational integers d for which (a, b, c, d) can have a nontrivial progression.

    z(k1, u1) = w / d with w independent of d, so an integral candidate
    needs d to divide the content of w; the X = 0 branch needs d | (a+b+c).
    Returns ``None`` (no restriction) for degenerate coefficients.
    """
    probe = MRInstance.of(a, b, c, 1, field)
    if probe.is_degenerate:
        return None
    from .normeq import divisors

    out: set[int] = set()
    g = _content((probe.a + probe.b + probe.c).to_num())
    if g:
        out.update(divisors(g))
    for k1, u1, k2, u2 in unit_solutions(field, probe.a, probe.b, probe.c):
        g = _content(candidate_x(probe, k1, u1, k2, u2))
        if g:
            out.update(divisors(g))
    return out


def trivial_report(inst: MRInstance) -> SolutionReport:
    f = inst.field
    return SolutionReport(inst, (APTriple(f.zero, f.zero),))
