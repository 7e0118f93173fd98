"""Exact arithmetic in Q and in quadratic fields Q(sqrt(D)).

Two element types live here:

* :class:`AlgNum` -- a general field element ``s + t*sqrt(D)`` with rational
  ``s`` and ``t``.
* :class:`AlgInt` -- an element of the ring of integers written in the
  integral basis ``u + v*w`` where ``w = sqrt(D)`` for ``D = 2, 3 (mod 4)``
  and ``w = (1 + sqrt(D))/2`` for ``D = 1 (mod 4)``.

The rational field is modelled as ``D = 1`` with ``v = 0`` throughout.  It
uses the degree-one conventions ``norm(x) = x`` and ``trace(x) = x``.

No floating point value ever decides a result.  Floats only seed searches
(e.g. a first guess for an exponent) that are then settled exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Union

Rational = Union[int, Fraction]


def squarefree_part(n: int) -> int:
    """Return the squarefree part of ``n``, keeping its sign."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1 if p == 2 else 2
    return sign * out * n


def rational_sqrt(q: Rational) -> Fraction | None:
    """Exact square root of a nonnegative rational, or ``None``."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign_sqrt_comb(s: int, t: int, D: int) -> int:
    """Sign of the real number ``s + t*sqrt(D)`` for integers ``s, t``, ``D > 0``."""
    if t == 0:
        return (s > 0) - (s < 0)
    if s == 0:
        return (t > 0) - (t < 0)
    if s > 0 and t > 0:
        return 1
    if s < 0 and t < 0:
        return -1
    # opposite signs: compare s^2 with t^2 D
    lhs, rhs = s * s, t * t * D
    if lhs == rhs:
        return 0
    return (1 if s > 0 else -1) if lhs > rhs else (1 if t > 0 else -1)


def _log_abs(s: int, t: int, D: int) -> float:
    """Float estimate of ``log|s + t*sqrt(D)|``.

    Only used to seed exact searches.  Callers must handle cancellation
    (``s`` and ``t`` of opposite sign) themselves.
    """
    terms = []
    if s:
        terms.append(math.log(abs(s)))
    if t:
        terms.append(math.log(abs(t)) + 0.5 * math.log(D))
    hi = max(terms)
    return hi + math.log(sum(math.exp(x - hi) for x in terms))


@dataclass(frozen=True)
class Field:
    """The base field: Q (``D == 1``) or Q(sqrt(D)) with ``D`` squarefree.

    The integral basis generator ``w`` satisfies ``w^2 = wt*w + wc``.
    """

    D: int

    def __post_init__(self) -> None:
        if self.D == 0 or (self.D != 1 and squarefree_part(self.D) != self.D):
            raise ValueError(f"D must be squarefree and nonzero, got {self.D}")

    @property
    def kind(self) -> str:
        return "rational" if self.D == 1 else "quadratic"

    @property
    def signature(self) -> str:
        if self.D == 1:
            return "rational"
        return "real" if self.D > 0 else "imaginary"

    @property
    def is_rational(self) -> bool:
        return self.D == 1

    @property
    def is_real(self) -> bool:
        return self.D > 1

    @property
    def degree(self) -> int:
        return 1 if self.D == 1 else 2

    @property
    def disc(self) -> int:
        if self.D == 1:
            return 1
        return self.D if self.D % 4 == 1 else 4 * self.D

    @property
    def wt(self) -> int:
        """Trace of ``w``."""
        return 1 if self.D != 1 and self.D % 4 == 1 else 0

    @property
    def wc(self) -> int:
        """Constant ``c`` in ``w^2 = wt*w + c``."""
        if self.D == 1:
            return 0
        return (self.D - 1) // 4 if self.D % 4 == 1 else self.D

    @property
    def omega_text(self) -> str:
        if self.D == 1:
            return "Q (no generator)"
        if self.wt:
            return f"a = (1+sqrt({self.D}))/2"
        return f"a = sqrt({self.D})"

    def __str__(self) -> str:
        return "Q" if self.D == 1 else f"Q(sqrt({self.D}))"

    # element constructors
    def elt(self, u: int, v: int = 0) -> AlgInt:
        return AlgInt(u, v, self)

    def num(self, s: Rational, t: Rational = 0) -> AlgNum:
        return AlgNum(Fraction(s), Fraction(t), self)

    @property
    def one(self) -> AlgInt:
        return AlgInt(1, 0, self)

    @property
    def zero(self) -> AlgInt:
        return AlgInt(0, 0, self)

    @property
    def omega(self) -> AlgInt:
        if self.D == 1:
            raise ValueError("Q has no integral basis generator")
        return AlgInt(0, 1, self)


QQ = Field(1)


def mk_field(D: int) -> Field:
    """Build the field Q(sqrt(D)), reducing ``D`` to its squarefree part.

    >>> mk_field(12).D, mk_field(12).disc
    (3, 12)
    >>> mk_field(4).kind
    'rational'
    """
    if D == 0:
        raise ValueError("D = 0 does not define a field")
    return Field(squarefree_part(D))


def field_from_disc(disc: int) -> Field | None:
    """Field with discriminant ``disc``, or ``None`` if ``disc`` is not fundamental."""
    if disc in (0, 1):
        return None
    if disc % 4 == 1:
        D = disc
    elif disc % 4 == 0 and (disc // 4) % 4 in (2, 3):
        D = disc // 4
    else:
        return None
    if squarefree_part(D) != D:
        return None
    return Field(D)


class AlgInt:
    """Integral element ``u + v*w`` of the ring of integers."""

    __slots__ = ("u", "v", "field")

    def __init__(self, u: int, v: int, field: Field) -> None:
        if field.D == 1 and v:
            raise ValueError("rational integers have v = 0")
        self.u = u
        self.v = v
        self.field = field

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgInt):
            return self.u == other.u and self.v == other.v and self.field == other.field
        if isinstance(other, int):
            return self.v == 0 and self.u == other
        if isinstance(other, AlgNum):
            return self.to_num() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.u, self.v, self.field.D))

    def __repr__(self) -> str:
        return f"AlgInt({self.u}, {self.v}, D={self.field.D})"

    def __str__(self) -> str:
        return render(self)

    def __bool__(self) -> bool:
        return bool(self.u or self.v)

    # -- ring operations ------------------------------------------------
    def _coerce(self, other) -> AlgInt | None:
        if isinstance(other, AlgInt):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return AlgInt(other, 0, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_num() + other if isinstance(other, (AlgNum, Fraction)) else NotImplemented
        return AlgInt(self.u + o.u, self.v + o.v, self.field)

    __radd__ = __add__

    def __neg__(self) -> AlgInt:
        return AlgInt(-self.u, -self.v, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_num() - other if isinstance(other, (AlgNum, Fraction)) else NotImplemented
        return AlgInt(self.u - o.u, self.v - o.v, self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_num() * other if isinstance(other, (AlgNum, Fraction)) else NotImplemented
        f = self.field
        vv = self.v * o.v
        return AlgInt(self.u * o.u + f.wc * vv, self.u * o.v + self.v * o.u + f.wt * vv, f)

    __rmul__ = __mul__

    def __truediv__(self, other) -> AlgNum:
        return self.to_num() / other

    def __rtruediv__(self, other) -> AlgNum:
        return AlgNum.coerce(other, self.field) / self.to_num()

    def __pow__(self, e: int) -> AlgInt:
        if e < 0:
            inv = unit_inverse(self)
            if inv is None:
                raise ZeroDivisionError(f"{self} is not a unit")
            return inv ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- invariants -------------------------------------------------------
    def conj(self) -> AlgInt:
        return AlgInt(self.u + self.field.wt * self.v, -self.v, self.field)

    def norm2(self) -> int:
        """Product with the conjugate (equals ``u^2`` over Q)."""
        f = self.field
        return self.u * self.u + f.wt * self.u * self.v - f.wc * self.v * self.v

    def norm(self) -> int:
        if self.field.D == 1:
            return self.u
        return self.norm2()

    def trace(self) -> int:
        if self.field.D == 1:
            return self.u
        return 2 * self.u + self.field.wt * self.v

    def scaled_sqrt_coords(self) -> tuple[int, int]:
        """Integers ``(S, T)`` with ``self == (S + T*sqrt(D))/2``."""
        if self.field.wt:
            return 2 * self.u + self.v, self.v
        return 2 * self.u, 2 * self.v

    def to_num(self) -> AlgNum:
        if self.field.wt:
            return AlgNum(Fraction(2 * self.u + self.v, 2), Fraction(self.v, 2), self.field)
        return AlgNum(Fraction(self.u), Fraction(self.v), self.field)

    def exact_div(self, other: AlgInt | int) -> AlgInt | None:
        """``self / other`` if it lies in the ring of integers, else ``None``."""
        o = self._coerce(other)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        p = self * o.conj()
        if p.u % n or p.v % n:
            return None
        return AlgInt(p.u // n, p.v // n, self.field)

    def is_unit(self) -> bool:
        return abs(self.norm2()) == 1

    def sign1(self) -> int:
        """Sign under the real embedding sending sqrt(D) to the positive root."""
        if self.field.D < 0:
            raise ValueError("imaginary fields have no real embedding")
        S, T = self.scaled_sqrt_coords()
        return _sign_sqrt_comb(S, T, self.field.D) if self.field.D != 1 else (S > 0) - (S < 0)

    def sigma(self) -> tuple[complex, complex]:
        """Float embeddings, for display and plotting only."""
        x = self.to_num()
        return x.sigma()

    def height(self) -> int:
        return max(abs(self.u), abs(self.v))


class AlgNum:
    """Field element ``s + t*sqrt(D)`` with exact rational coordinates."""

    __slots__ = ("s", "t", "field")

    def __init__(self, s: Rational, t: Rational, field: Field) -> None:
        t = Fraction(t)
        if field.D == 1 and t:
            raise ValueError("rational numbers have t = 0")
        self.s = Fraction(s)
        self.t = t
        self.field = field

    @staticmethod
    def coerce(x, field: Field) -> AlgNum:
        if isinstance(x, AlgNum):
            return x
        if isinstance(x, AlgInt):
            return x.to_num()
        if isinstance(x, (int, Fraction)):
            return AlgNum(x, 0, field)
        raise TypeError(f"cannot coerce {type(x).__name__} to a field element")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (AlgNum, AlgInt, int, Fraction)):
            o = AlgNum.coerce(other, self.field)
            return self.s == o.s and self.t == o.t and self.field == o.field
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.s, self.t, self.field.D))

    def __repr__(self) -> str:
        return f"AlgNum({self.s}, {self.t}, D={self.field.D})"

    def __str__(self) -> str:
        w = self.to_int()
        if w is not None:
            return render(w)
        if self.field.D == 1:
            return str(self.s)
        return f"{self.s}{'+' if self.t >= 0 else '-'}{abs(self.t)}*sqrt({self.field.D})"

    def __bool__(self) -> bool:
        return bool(self.s or self.t)

    def __add__(self, other):
        o = AlgNum.coerce(other, self.field)
        return AlgNum(self.s + o.s, self.t + o.t, self.field)

    __radd__ = __add__

    def __neg__(self) -> AlgNum:
        return AlgNum(-self.s, -self.t, self.field)

    def __sub__(self, other):
        return self + (-AlgNum.coerce(other, self.field))

    def __rsub__(self, other):
        return AlgNum.coerce(other, self.field) - self

    def __mul__(self, other):
        o = AlgNum.coerce(other, self.field)
        D = self.field.D
        if D == 1:
            return AlgNum(self.s * o.s, 0, self.field)
        return AlgNum(self.s * o.s + D * self.t * o.t, self.s * o.t + self.t * o.s, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = AlgNum.coerce(other, self.field)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero in field")
        p = self * o.conj()
        return AlgNum(p.s / n, p.t / n, self.field)

    def __rtruediv__(self, other):
        return AlgNum.coerce(other, self.field) / self

    def __pow__(self, e: int) -> AlgNum:
        if e < 0:
            return AlgNum(1, 0, self.field) / (self ** (-e))
        result = AlgNum(1, 0, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> AlgNum:
        return AlgNum(self.s, -self.t, self.field)

    def norm2(self) -> Fraction:
        if self.field.D == 1:
            return self.s * self.s
        return self.s * self.s - self.field.D * self.t * self.t

    def norm(self) -> Fraction:
        return self.s if self.field.D == 1 else self.norm2()

    def trace(self) -> Fraction:
        return self.s if self.field.D == 1 else 2 * self.s

    def to_int(self) -> AlgInt | None:
        """Integral-basis coordinates if this element is integral."""
        f = self.field
        if f.wt:
            u, v = self.s - self.t, 2 * self.t
        else:
            u, v = self.s, self.t
        if u.denominator == 1 and v.denominator == 1:
            return AlgInt(int(u), int(v), f)
        return None

    def is_rational(self) -> bool:
        return self.t == 0

    def sign1(self) -> int:
        if self.field.D < 0:
            raise ValueError("imaginary fields have no real embedding")
        den = math.lcm(self.s.denominator, self.t.denominator)
        S, T = int(self.s * den), int(self.t * den)
        if self.field.D == 1:
            return (S > 0) - (S < 0)
        return _sign_sqrt_comb(S, T, self.field.D)

    def sigma(self) -> tuple[complex, complex]:
        D = self.field.D
        if D == 1:
            return complex(self.s), complex(self.s)
        r = math.sqrt(abs(D))
        root = complex(0, r) if D < 0 else complex(r, 0)
        return float(self.s) + float(self.t) * root, float(self.s) - float(self.t) * root


def render(x: AlgInt) -> str:
    """Canonical text ``u+v*a`` for an integral element (``a`` is the basis generator)."""
    if x.v == 0:
        return str(x.u)
    vs = {1: "a", -1: "-a"}.get(x.v, f"{x.v}*a")
    if x.u == 0:
        return vs
    return f"{x.u}{vs}" if x.v < 0 else f"{x.u}+{vs}"


def parse_element(text: str, field: Field) -> AlgInt:
    """Inverse of :func:`render`; also accepts spaces and ``v*a + u`` order."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty element")
    if s[0] not in "+-":
        s = "+" + s
    u = v = 0
    i = 0
    while i < len(s):
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        term = s[i:j]
        sign = -1 if term[0] == "-" else 1
        body = term[1:]
        if body.endswith("a"):
            coef = body[:-1]
            v += sign * (int(coef) if coef else 1)
        else:
            u += sign * int(body)
        i = j
    if field.D == 1 and v:
        raise ValueError(f"{text!r} is not a rational integer")
    return AlgInt(u, v, field)


# ---------------------------------------------------------------------------
# free functions mirroring the element methods
# ---------------------------------------------------------------------------


def norm(x: AlgNum | AlgInt) -> Fraction:
    return Fraction(x.norm())


def trace(x: AlgNum | AlgInt) -> Fraction:
    return Fraction(x.trace())


def conj(x):
    return x.conj()


def is_integral(x: AlgNum) -> AlgInt | None:
    return AlgNum.coerce(x, x.field).to_int()


def is_square(x: AlgNum | AlgInt) -> AlgNum | None:
    """A square root of ``x`` inside its field, or ``None``."""
    x = AlgNum.coerce(x, x.field)
    f = x.field
    if not x:
        return AlgNum(0, 0, f)
    if f.D == 1:
        r = rational_sqrt(x.s)
        return None if r is None else AlgNum(r, 0, f)
    # r = p + q sqrt(D):  p^2 + D q^2 = s,  2pq = t,  p^2 - D q^2 = +-sqrt(N(x))
    n = rational_sqrt(x.norm2())
    if n is None:
        return None
    for e in (n, -n):
        p = rational_sqrt((x.s + e) / 2)
        if p is None:
            continue
        if p:
            q = x.t / (2 * p)
        else:
            q2 = x.s / f.D
            q = rational_sqrt(q2)
            if q is None:
                continue
        r = AlgNum(p, q, f)
        if r * r == x:
            return r
    return None


def isqrt_int(x: AlgInt) -> AlgInt | None:
    """Integral square root of an integral element, or ``None``.

    Integer-only twin of :func:`is_square` used in the brute-force oracle.
    """
    f = x.field
    if f.D == 1:
        if x.u < 0:
            return None
        r = math.isqrt(x.u)
        return AlgInt(r, 0, f) if r * r == x.u else None
    if not x:
        return f.zero
    S, T = x.scaled_sqrt_coords()
    disc = S * S - f.D * T * T
    if disc < 0:
        return None
    R = math.isqrt(disc)
    if R * R != disc:
        return None
    for e in (R, -R):
        # r = (P + Q sqrt(D))/2 with P^2 = S + eR, D Q^2 = S - eR, PQ = T
        P2 = S + e
        if P2 < 0:
            continue
        P = math.isqrt(P2)
        if P * P != P2:
            continue
        if P:
            if T % P:
                continue
            Q = T // P
        else:
            num = S - e
            if num % f.D:
                continue
            Q2 = num // f.D
            if Q2 < 0:
                continue
            Q = math.isqrt(Q2)
            if Q * Q != Q2:
                continue
        cand = AlgNum(Fraction(P, 2), Fraction(Q, 2), f).to_int()
        if cand is not None and cand * cand == x:
            return cand
    return None


# ---------------------------------------------------------------------------
# units
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnitGroup:
    """Torsion units plus, for real quadratic fields, the fundamental unit."""

    field: Field
    torsion: tuple[AlgInt, ...]
    fundamental: AlgInt | None

    @property
    def rank(self) -> int:
        return 0 if self.fundamental is None else 1

    @cached_property
    def fundamental_inverse(self) -> AlgInt | None:
        eps = self.fundamental
        if eps is None:
            return None
        return eps.conj() * eps.norm2()

    def power(self, m: int) -> AlgInt:
        """``eps**m`` for any integer ``m`` (cached)."""
        return _eps_power(self.field, m)

    def decompose(self, u: AlgInt) -> tuple[AlgInt, int]:
        """Write the unit ``u`` as ``zeta * eps**m``; return ``(zeta, m)``."""
        if not u.is_unit():
            raise ValueError(f"{u} is not a unit")
        if self.fundamental is None:
            return u, 0
        m = _log_ratio(u, self.fundamental)
        for mm in (m, m - 1, m + 1, m - 2, m + 2):
            z = u * self.power(-mm)
            if z in self.torsion:
                return z, mm
        # floats can only be off by a little; fall back to an exact walk
        for step in range(3, 10_000):
            for mm in (m - step, m + step):
                z = u * self.power(-mm)
                if z in self.torsion:
                    return z, mm
        raise ArithmeticError(f"could not decompose unit {u}")


def _log_abs1(x: AlgInt) -> float:
    """Float estimate of ``log|sigma_1(x)|`` in a real quadratic field, cancellation-safe."""
    S, T = x.scaled_sqrt_coords()
    D = x.field.D
    if (S >= 0) == (T >= 0) or S == 0 or T == 0:
        return _log_abs(S, T, D) - math.log(2)
    # sigma_1 small: use |sigma_1| = |N| / |sigma_2|
    return math.log(abs(x.norm2())) - (_log_abs(S, -T, D) - math.log(2))


def _log_ratio(x: AlgInt, eps: AlgInt) -> int:
    return round(_log_abs1(x) / _log_abs1(eps))


@lru_cache(maxsize=None)
def _eps_power(field: Field, m: int) -> AlgInt:
    ug = unit_group(field)
    if ug.fundamental is None:
        raise ValueError(f"{field} has unit rank 0")
    base = ug.fundamental if m >= 0 else ug.fundamental_inverse
    return base ** abs(m)


def fundamental_unit(field: Field) -> AlgInt:
    """Fundamental unit ``eps > 1`` of a real quadratic field.

    Runs the continued fraction of ``w`` and stops at the first convergent
    ``p/q`` for which ``p - q*w`` is a unit; the unit returned is its
    conjugate ``p - q*w'`` which exceeds 1.
    """
    if not field.is_real:
        raise ValueError(f"{field} is not real quadratic")
    D = field.D
    sq = math.isqrt(D)
    # w = (P + sqrt(D))/Q
    P, Q = (1, 2) if field.wt else (0, 1)
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    while True:
        a = (P + sq) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        cand = AlgInt(p - q * field.wt, q, field)  # p - q*w' = p - q*(wt - w)
        if abs(cand.norm2()) == 1:
            return cand
        P = a * Q - P
        Q = (D - P * P) // Q


@lru_cache(maxsize=None)
def unit_group(field: Field) -> UnitGroup:
    if field.D == 1:
        tors = (field.one, -field.one)
        return UnitGroup(field, tors, None)
    if field.D == -1:
        i = field.omega
        return UnitGroup(field, (field.one, -field.one, i, -i), None)
    if field.D == -3:
        w = field.omega  # primitive sixth root of unity
        tors = tuple(w**k for k in range(6))
        return UnitGroup(field, tors, None)
    tors = (field.one, -field.one)
    if field.D < 0:
        return UnitGroup(field, tors, None)
    return UnitGroup(field, tors, fundamental_unit(field))


def unit_inverse(u: AlgInt) -> AlgInt | None:
    n = u.norm2()
    if abs(n) != 1:
        return None
    return u.conj() * n


# ---------------------------------------------------------------------------
# associates
# ---------------------------------------------------------------------------


def _torsion_key(x: AlgInt) -> tuple:
    # prefer the cone u > 0, v >= 0; fall back to "first nonzero coordinate positive"
    in_cone = x.u > 0 and x.v >= 0
    lex_pos = x.u > 0 or (x.u == 0 and x.v > 0)
    return (not in_cone, not lex_pos, x.u, x.v)


def canonical_associate(x: AlgInt) -> AlgInt:
    """Deterministic representative of the associate class of ``x``.

    * Q: ``|x|``.
    * imaginary fields: among the torsion multiples, the one with ``u > 0``
      and ``v >= 0`` (exactly one exists for D = -1, -3); for fields whose
      only units are +-1, the one whose first nonzero coordinate is positive.
    * real fields: the unique ``y = +-eps**m * x`` with
      ``sqrt|N(x)| <= sigma_1(y) < eps * sqrt|N(x)|``.
    """
    if not x:
        raise ValueError("0 has no associate class")
    f = x.field
    if f.D == 1:
        return x if x.u > 0 else -x
    ug = unit_group(f)
    if ug.fundamental is None:
        return min((z * x for z in ug.torsion), key=_torsion_key)
    n = abs(x.norm2())
    eps = ug.fundamental
    # want n <= sigma1(y)^2 < eps^2 n; seed m from floats, then settle exactly
    target = 0.5 * math.log(n) + 0.5 * _log_abs1(eps)
    m = round((target - _log_abs1(x)) / _log_abs1(eps))
    y = x * ug.power(m)
    eps2n = eps * eps * n
    for _ in range(10_000):
        y2 = y * y
        if (y2 - n).sign1() < 0:
            y = y * eps
        elif (eps2n - y2).sign1() <= 0:
            y = y * ug.fundamental_inverse
        else:
            break
    else:  # pragma: no cover - floats would have to be absurdly wrong
        raise ArithmeticError(f"canonical_associate did not converge for {x}")
    return y if y.sign1() > 0 else -y


def is_associate(x: AlgInt, y: AlgInt) -> bool:
    if not x or not y:
        raise ValueError("associates are defined for nonzero elements")
    q = x.exact_div(y)
    return q is not None and q.is_unit()
