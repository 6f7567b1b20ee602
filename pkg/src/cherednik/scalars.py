"""The coefficient field of the deformed algebra.

Two modes behind one arithmetic interface:

* generic -- rational functions in the deformation parameters k (the symbol
  kappa prints as ``k``), ``c0`` and ``d1``, ..., ``d{r/p-1}``, with
  coefficients in Q(zeta_r).  ``d0`` is never stored: it is eliminated via
  d0 = -(d1 + ... + d_{r/p-1}), and d-indices are folded mod r/p at every
  boundary, so arbitrary integer indices (d_{-mu_i-1} and friends) are fine.
* specialized -- plain Q(zeta_r) values attached to a :class:`ParamPoint`.

Rational functions are kept gcd-reduced with the denominator normalized to
leading coefficient 1 (graded-lex), so equality is structural.  That makes
eigenvalue comparisons decidable, which the eigenbasis construction relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cyclotomic import Cyc, Q

__all__ = [
    "MPoly", "RatFunc", "ParamRing", "param_ring",
    "GenericParameters", "SpecializedParameters", "ParamPoint",
    "PoleError", "cyc", "d_from_c", "c_from_d", "specialize",
]


def cyc(r: int, k: int) -> Cyc:
    """zeta_r^k in canonical form (periodic in k with period r)."""
    return Cyc.root(r, k)


class PoleError(ArithmeticError):
    """Specialization hit a zero of the denominator."""

    def __init__(self, factor: str, point: "ParamPoint"):
        self.factor = factor
        self.point = point
        super().__init__(f"denominator ({factor}) vanishes at {point}")


# ---------------------------------------------------------------------------
# polynomial ring over Q(zeta_r)
# ---------------------------------------------------------------------------


class ParamRing:
    """Flyweight context for polynomials in named variables over Q(zeta_r)."""

    __slots__ = ("r", "names", "nvars", "czero", "cone")

    def __init__(self, r: int, names: tuple[str, ...]):
        self.r = r
        self.names = names
        self.nvars = len(names)
        self.czero = Cyc.zero(r)
        self.cone = Cyc.one(r)

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return MPoly(self, {(0,) * self.nvars: self.cone})

    def const(self, c: Cyc) -> "MPoly":
        if not c:
            return MPoly(self, {})
        return MPoly(self, {(0,) * self.nvars: c})

    def gen(self, i: int) -> "MPoly":
        e = [0] * self.nvars
        e[i] = 1
        return MPoly(self, {tuple(e): self.cone})

    def __repr__(self):
        return f"ParamRing(r={self.r}, names={self.names})"


@lru_cache(maxsize=None)
def param_ring(r: int, names: tuple[str, ...]) -> ParamRing:
    return ParamRing(r, names)


def _key(e: tuple[int, ...]):
    return (sum(e), e)


class MPoly:
    """Sparse multivariate polynomial over Q(zeta_r); no zero terms stored."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: ParamRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # construction keeps terms canonical; internal helpers strip zeros
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        (e, c), = self.terms.items()
        return not any(e) and c == self.ring.cone

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Cyc:
        if self.is_zero():
            return self.ring.czero
        (e, c), = self.terms.items()
        if any(e):
            raise ValueError("not a constant polynomial")
        return c

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.ring is other.ring
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly(self.ring, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = -c
            else:
                s = s - c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly(self.ring, out)

    def __mul__(self, other: "MPoly") -> "MPoly":
        a, b = self.terms, other.terms
        if not a or not b:
            return MPoly(self.ring, {})
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = out.get(e)
                if s is None:
                    if c:
                        out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return MPoly(self.ring, out)

    def mul_cyc(self, c: Cyc) -> "MPoly":
        if not c:
            return MPoly(self.ring, {})
        return MPoly(self.ring, {e: v * c for e, v in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def lead(self) -> tuple[tuple[int, ...], Cyc]:
        e = max(self.terms, key=_key)
        return e, self.terms[e]

    def variables(self) -> set[int]:
        out: set[int] = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    out.add(i)
        return out

    def degree_in(self, v: int) -> int:
        return max((e[v] for e in self.terms), default=0)

    def evaluate(self, vals: Sequence[Cyc]) -> Cyc:
        out = self.ring.czero
        pows: list[dict[int, Cyc]] = [{} for _ in range(self.ring.nvars)]

        def power(i, n):
            if n == 0:
                return None
            cache = pows[i]
            p = cache.get(n)
            if p is None:
                p = vals[i] if n == 1 else power(i, n - 1) * vals[i]
                cache[n] = p
            return p

        for e, c in self.terms.items():
            v = c
            for i, x in enumerate(e):
                if x:
                    v = v * power(i, x)
            out = out + v
        return out

    def divexact(self, other: "MPoly"):
        """Quotient if ``other`` divides exactly, else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.terms)
        de, dc = other.lead()
        dcinv = dc.inverse()
        quot: dict = {}
        while rem:
            e = max(rem, key=_key)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, de))
            if any(x < 0 for x in qe):
                return None
            qc = c * dcinv
            quot[qe] = qc
            for oe, oc in other.terms.items():
                t = tuple(a + b for a, b in zip(qe, oe))
                s = rem.get(t)
                s = -qc * oc if s is None else s - qc * oc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return MPoly(self.ring, quot)

    def monic(self) -> "MPoly":
        if self.is_zero():
            return self
        _, c = self.lead()
        if c == self.ring.cone:
            return self
        return self.mul_cyc(c.inverse())

    def __str__(self) -> str:
        return _poly_str(self)

    def __repr__(self):
        return f"MPoly({self})"


def _mono_str(e: tuple[int, ...], names: tuple[str, ...]) -> str:
    parts = []
    for i, x in enumerate(e):
        if x == 1:
            parts.append(names[i])
        elif x:
            parts.append(f"{names[i]}^{x}")
    return "*".join(parts)


def _poly_str(p: MPoly) -> str:
    if not p.terms:
        return "0"
    chunks = []
    for e in sorted(p.terms, key=_key, reverse=True):
        c = p.terms[e]
        mono = _mono_str(e, p.ring.names)
        cs = str(c)
        simple = "+" not in cs[1:] and "-" not in cs[1:] and "*" not in cs
        if not mono:
            body = cs if simple else f"({cs})"
        elif c == p.ring.cone:
            body = mono
        elif c == -p.ring.cone:
            body = "-" + mono
        elif simple:
            body = f"{cs}*{mono}"
        else:
            body = f"({cs})*{mono}"
        if not chunks:
            chunks.append(body)
        elif body.startswith("-"):
            chunks.append(" - " + body[1:])
        else:
            chunks.append(" + " + body)
    return "".join(chunks)


# ---------------------------------------------------------------------------
# multivariate gcd (primitive PRS; coefficients live in the field Q(zeta_r))
# ---------------------------------------------------------------------------


def _split(p: MPoly, v: int) -> dict[int, MPoly]:
    """View p as univariate in variable v with MPoly coefficients (v-free)."""
    out: dict[int, dict] = {}
    for e, c in p.terms.items():
        d = e[v]
        e0 = e[:v] + (0,) + e[v + 1:]
        out.setdefault(d, {})[e0] = c
    return {d: MPoly(p.ring, t) for d, t in out.items()}

def _join(parts: dict[int, MPoly], v: int, ring: ParamRing) -> MPoly:
    out: dict = {}
    for d, coeff in parts.items():
        for e, c in coeff.terms.items():
            out[e[:v] + (d,) + e[v + 1:]] = c
    return MPoly(ring, out)


def _prem(f: dict[int, MPoly], g: dict[int, MPoly], ring) -> dict[int, MPoly]:
    """Pseudo-remainder of univariate-with-poly-coefficient representations."""
    dg = max(g)
    lg = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        nr: dict[int, MPoly] = {}
        for d, c in r.items():
            if d == dr:
                continue
            nr[d] = c * lg
        for d, c in g.items():
            if d == dg:
                continue
            t = nr.get(d + dr - dg, ring.zero()) - c * lr
            if t.is_zero():
                nr.pop(d + dr - dg, None)
            else:
                nr[d + dr - dg] = t
        r = nr
    return r


def mp_gcd(f: MPoly, g: MPoly) -> MPoly:
    """gcd over Q(zeta_r), normalized monic in graded-lex order."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    ring = f.ring
    vs = f.variables() | g.variables()
    if not vs:
        return ring.one()
    v = max(vs)
    fu, gu = _split(f, v), _split(g, v)
    only_v = all(c.is_constant() for c in fu.values()) and \
        all(c.is_constant() for c in gu.values())
    if only_v:
        a = {d: c.constant_value() for d, c in fu.items()}
        b = {d: c.constant_value() for d, c in gu.items()}
        while b:
            db, lb = max(b), b[max(b)]
            if max(a, default=-1) < db:
                a, b = b, a
                continue
            while a and max(a) >= db:
                da, la = max(a), a[max(a)]
                q = la / lb
                del a[da]
                for d, c in b.items():
                    if d == db:
                        continue
                    t = a.get(d + da - db, ring.czero) - q * c
                    if t:
                        a[d + da - db] = t
                    else:
                        a.pop(d + da - db, None)
            a, b = b, a
        e0 = [0] * ring.nvars
        out: dict = {}
        for d, c in a.items():
            e0v = list(e0)
            e0v[v] = d
            out[tuple(e0v)] = c
        return MPoly(ring, out).monic()

    def content(parts: dict[int, MPoly]) -> MPoly:
        c = ring.zero()
        for coeff in parts.values():
            c = mp_gcd(c, coeff)
            if c.is_one():
                break
        return c

    cf, cg = content(fu), content(gu)
    cont = mp_gcd(cf, cg)
    f1 = {d: c.divexact(cf) for d, c in fu.items()}
    g1 = {d: c.divexact(cg) for d, c in gu.items()}
    a, b = f1, g1
    if max(a) < max(b):
        a, b = b, a
    while b and max(b) > 0:
        rr = _prem(a, b, ring)
        if rr:
            cr = content(rr)
            rr = {d: c.divexact(cr) for d, c in rr.items()}
        a, b = b, rr
    if b:  # remainder of v-degree 0: gcd carries no v, only the content part
        return cont.monic()
    return (_join(a, v, ring) * cont).monic()


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """num/den over Q(zeta_r)[params], gcd-reduced, den monic (graded-lex)."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly, *, _reduced: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.num.ring is not self.num.ring:
                raise ValueError("mixed parameter rings")
            return other
        ring = self.num.ring
        if isinstance(other, Cyc):
            return RatFunc(ring.const(other), ring.one(), _reduced=True)
        if isinstance(other, (int, Fraction)) or type(other) is type(Q(0)):
            return RatFunc(ring.const(Cyc.from_rational(ring.r, other)),
                           ring.one(), _reduced=True)
        return None

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num + o.num, self.den, _reduced=True)
        g0 = mp_gcd(self.den, o.den)
        if g0.is_one():
            num = self.num * o.den + o.num * self.den
            return RatFunc(num, self.den * o.den, _reduced=not num.is_zero())
        d2r = o.den.divexact(g0)
        num = self.num * d2r + o.num * self.den.divexact(g0)
        den = self.den * d2r
        g = mp_gcd(num, g0)
        if not g.is_one():
            num, den = num.divexact(g), den.divexact(g)
        if num.is_zero():
            return RatFunc(num, den.ring.one(), _reduced=True)
        _, lc = den.lead()
        if lc != den.ring.cone:
            inv = lc.inverse()
            num, den = num.mul_cyc(inv), den.mul_cyc(inv)
        return RatFunc(num, den, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, self.den, _reduced=True)
        g1 = mp_gcd(self.num, o.den)
        g2 = mp_gcd(o.num, self.den)
        num = self.num.divexact(g1) * o.num.divexact(g2)
        den = self.den.divexact(g2) * o.den.divexact(g1)
        if num.is_zero():
            return RatFunc(num, den.ring.one(), _reduced=True)
        _, lc = den.lead()
        if lc != den.ring.cone:
            inv = lc.inverse()
            num, den = num.mul_cyc(inv), den.mul_cyc(inv)
        return RatFunc(num, den, _reduced=True)

    __rmul__ = __mul__

    def cmul(self, c: Cyc) -> "RatFunc":
        """Fast scale by a cyclotomic unit (or zero)."""
        if not c:
            return RatFunc(self.num.ring.zero(), self.num.ring.one(),
                           _reduced=True)
        return RatFunc(self.num.mul_cyc(c), self.den, _reduced=True)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        num, den = self.den, self.num
        _, lc = den.lead()
        if lc != den.ring.cone:
            inv = lc.inverse()
            num, den = num.mul_cyc(inv), den.mul_cyc(inv)
        return RatFunc(num, den, _reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        ring = self.num.ring
        out = RatFunc(ring.one(), ring.one(), _reduced=True)
        base = self.inverse() if n < 0 else self
        n = abs(n)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates ------------------------------------------------------------

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def _reduce(num: MPoly, den: MPoly) -> tuple[MPoly, MPoly]:
    if num.is_zero():
        return num, den.ring.one()
    g = mp_gcd(num, den)
    if not g.is_one():
        num, den = num.divexact(g), den.divexact(g)
    _, lc = den.lead()
    if lc != den.ring.cone:
        inv = lc.inverse()
        num, den = num.mul_cyc(inv), den.mul_cyc(inv)
    return num, den


# ---------------------------------------------------------------------------
# parameter fields
# ---------------------------------------------------------------------------


class GenericParameters:
    """Symbolic parameters k, c0, d1..d_{r/p-1} for G(r,p,n)."""

    specialized = False

    def __init__(self, r: int, p: int):
        if r < 1 or p < 1 or r % p:
            raise ValueError(f"p={p} must divide r={r}")
        self.r = r
        self.p = p
        m = r // p - 1
        names = ("k", "c0") + tuple(f"d{j}" for j in range(1, m + 1))
        self.ring = param_ring(r, names)
        one = self.ring.one()
        self.kappa = RatFunc(self.ring.gen(0), one, _reduced=True)
        self.c0 = RatFunc(self.ring.gen(1), one, _reduced=True)
        dpolys = [self.ring.gen(2 + j) for j in range(m)]
        d0 = self.ring.zero()
        for q in dpolys:
            d0 = d0 - q
        self._d = [RatFunc(q, one, _reduced=True) for q in [d0] + dpolys]
        self._c: dict[int, RatFunc] = {}

    def d(self, j: int) -> RatFunc:
        return self._d[j % (self.r // self.p)]

    def c(self, l: int) -> RatFunc:
        """c_l for 1 <= l <= r-1 (mod r); zero unless p divides l."""
        l %= self.r
        if l == 0:
            raise ValueError("c_l is defined for l != 0 mod r")
        got = self._c.get(l)
        if got is not None:
            return got
        if l % self.p:
            out = self.zero
        else:
            m = self.r // self.p
            out = self.zero
            scale = Cyc.from_rational(self.r, self.p, self.r)
            for j in range(m):
                out = out + self.d(j).cmul(scale * Cyc.root(self.r, -l * j))
        self._c[l] = out
        return out

    def zeta(self, k: int) -> RatFunc:
        return self.embed(Cyc.root(self.r, k))

    def embed(self, c: Cyc) -> RatFunc:
        return RatFunc(self.ring.const(c), self.ring.one(), _reduced=True)

    def rational(self, a, b=1) -> RatFunc:
        return self.embed(Cyc.from_rational(self.r, a, b))

    @property
    def zero(self) -> RatFunc:
        return RatFunc(self.ring.zero(), self.ring.one(), _reduced=True)

    @property
    def one(self) -> RatFunc:
        return RatFunc(self.ring.one(), self.ring.one(), _reduced=True)

    def __repr__(self):
        return f"GenericParameters(r={self.r}, p={self.p})"


@dataclass(frozen=True)
class ParamPoint:
    """An exact specialization (kappa, c0, d1..d_{r/p-1})."""

    r: int
    p: int
    kappa: Cyc
    c0: Cyc
    d: tuple[Cyc, ...]

    def __post_init__(self):
        if self.r % self.p:
            raise ValueError(f"p={self.p} must divide r={self.r}")
        if len(self.d) != self.r // self.p - 1:
            raise ValueError(
                f"expected {self.r // self.p - 1} d-values, got {len(self.d)}")

    @classmethod
    def make(cls, r: int, p: int, kappa, c0, d=()) -> "ParamPoint":
        conv = lambda v: v if isinstance(v, Cyc) else Cyc.from_rational(r, v)
        return cls(r, p, conv(kappa), conv(c0), tuple(conv(v) for v in d))

    @classmethod
    def from_c(cls, r: int, p: int, kappa, c0, cdiag: Sequence = ()) -> "ParamPoint":
        """Build from the conjugacy-class parameters c_p, c_{2p}, ..., c_{r-p}."""
        ds = d_from_c(r, p, cdiag)
        conv = lambda v: v if isinstance(v, Cyc) else Cyc.from_rational(r, v)
        return cls(r, p, conv(kappa), conv(c0), tuple(ds[1:]))

    def d_value(self, j: int) -> Cyc:
        j %= self.r // self.p
        if j == 0:
            out = Cyc.zero(self.r)
            for v in self.d:
                out = out - v
            return out
        return self.d[j - 1]

    def c_value(self, l: int) -> Cyc:
        l %= self.r
        if l == 0:
            raise ValueError("c_l is defined for l != 0 mod r")
        if l % self.p:
            return Cyc.zero(self.r)
        m = self.r // self.p
        out = Cyc.zero(self.r)
        scale = Cyc.from_rational(self.r, self.p, self.r)
        for j in range(m):
            out = out + scale * Cyc.root(self.r, -l * j) * self.d_value(j)
        return out

    def __str__(self):
        ds = ", ".join(f"d{j + 1}={v}" for j, v in enumerate(self.d))
        body = f"k={self.kappa}, c0={self.c0}"
        tail = f", {ds})" if ds else ")"
        return f"ParamPoint(r={self.r}, p={self.p}, {body}{tail}"


class SpecializedParameters:
    """Parameter interface bound to an exact point; scalars are Cyc values."""

    specialized = True

    def __init__(self, point: ParamPoint):
        self.point = point
        self.r = point.r
        self.p = point.p
        self.kappa = point.kappa
        self.c0 = point.c0

    def d(self, j: int) -> Cyc:
        return self.point.d_value(j)

    def c(self, l: int) -> Cyc:
        return self.point.c_value(l)

    def zeta(self, k: int) -> Cyc:
        return Cyc.root(self.r, k)

    def embed(self, c: Cyc) -> Cyc:
        return c

    def rational(self, a, b=1) -> Cyc:
        return Cyc.from_rational(self.r, a, b)

    @property
    def zero(self) -> Cyc:
        return Cyc.zero(self.r)

    @property
    def one(self) -> Cyc:
        return Cyc.one(self.r)

    def __repr__(self):
        return f"SpecializedParameters({self.point})"


# ---------------------------------------------------------------------------
# reparametrization d_j = sum_l zeta^{lj} c_l and friends
# ---------------------------------------------------------------------------


def _as_cyc(r: int, v) -> Cyc:
    return v if isinstance(v, Cyc) else Cyc.from_rational(r, v)


def d_from_c(r: int, p: int, cvals: Sequence) -> list[Cyc]:
    """d_j = sum_{l=1}^{r-1} zeta^{lj} c_l for j = 0..r/p-1.

    ``cvals`` lists c_p, c_{2p}, ..., c_{r-p}; all other c_l vanish.
    """
    if r % p:
        raise ValueError(f"p={p} must divide r={r}")
    m = r // p
    if len(cvals) != m - 1:
        raise ValueError(f"expected {m - 1} c-values, got {len(cvals)}")
    cs = [_as_cyc(r, v) for v in cvals]
    out = []
    for j in range(m):
        s = Cyc.zero(r)
        for t, cl in enumerate(cs, start=1):
            s = s + Cyc.root(r, t * p * j) * cl
        out.append(s)
    return out


def c_from_d(r: int, p: int, dvals: Sequence) -> list[Cyc]:
    """c_l = (1/r) sum_{j=0}^{r-1} zeta^{-lj} d_j for l = p, 2p, ..., r-p.

    ``dvals`` lists d_0..d_{r/p-1}; d is r/p-periodic in j.
    """
    if r % p:
        raise ValueError(f"p={p} must divide r={r}")
    m = r // p
    ds = [_as_cyc(r, v) for v in dvals]
    if len(ds) != m:
        raise ValueError(f"expected {m} d-values, got {len(ds)}")
    out = []
    scale = Cyc.from_rational(r, p, r)
    for t in range(1, m):
        l = t * p
        s = Cyc.zero(r)
        for j in range(m):
            s = s + Cyc.root(r, -l * j) * ds[j]
        out.append(scale * s)
    return out


def specialize(s, point: ParamPoint) -> Cyc:
    """Exact substitution of the point into a scalar; poles raise PoleError."""
    if isinstance(s, Cyc):
        if s.r != point.r:
            raise ValueError("cyclotomic order mismatch")
        return s
    vals = (point.kappa, point.c0) + point.d
    den = s.den.evaluate(vals)
    if not den:
        raise PoleError(str(s.den), point)
    num = s.num.evaluate(vals)
    return num / den
