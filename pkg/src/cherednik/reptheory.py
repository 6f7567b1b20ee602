"""Parameter loci and the finite-dimensional quotient at the Coxeter point.

With kappa = 1 the reducibility locus of the polynomial representation is cut
out by affine hyperplanes

    H_{j,k}:  d_0 - d_{-j} + r c_0 (n - k) = j      (j > 0, j != 0 mod r)
    H_x:      c_0 = x                               (x in (1/n) Z_{>0})

If the parameters lie on H_{k,1} and on no other hyperplane (and c_0 avoids
the union of (1/j) Z_{>0} for j <= n, which keeps the spectrum simple), the
radical of the polynomial representation is spanned by the eigenvectors f_mu
with some part of size >= k, the quotient has dimension k^n, and its graded
group character is det(1 - t^k w_V)/det(1 - t w) for V the span of the k-th
powers of the variables.  At c_s = (h+1)/h (h the Coxeter number) this
reproduces the diagonal coinvariant quotient and the q-Catalan series
prod (1 - t^{h+d_i})/(1 - t^{d_i}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyc, Q
from .groups import GroupElement, group_elements
from .jack import jack_by_solve, order_lt
from .operators import PolyRep
from .polynomials import Poly
from .scalars import ParamPoint, SpecializedParameters

__all__ = [
    "Hjk", "Hx", "coxeter_number", "degrees", "is_irreducible",
    "gordon_point", "on_hyperplane", "genericity_guard",
    "radical_membership", "l1_dimension_by_counting", "l1_series_by_counting",
    "singular_vector_check", "GradedChar", "graded_char_L1",
    "invariant_char_series", "catalan_series", "coinvariant_series",
    "exponents_and_freeness",
]


# ---------------------------------------------------------------------------
# numerology of G(r,p,n)
# ---------------------------------------------------------------------------


def coxeter_number(r: int, p: int, n: int) -> int:
    """r(n-1) + r/p for p < r, r(n-1) for p = r; undefined at r = 1."""
    if r % p:
        raise ValueError(f"p={p} must divide r={r}")
    if r == 1:
        raise ValueError("the Coxeter number is only used for r > 1")
    return r * (n - 1) + (r // p if p < r else 0)


def degrees(r: int, p: int, n: int) -> list[int]:
    """Degrees of the basic invariants: r, 2r, .., (n-1)r, n*r/p (p < r)
    or r, 2r, .., (n-1)r, n (p = r)."""
    if r % p:
        raise ValueError(f"p={p} must divide r={r}")
    out = [i * r for i in range(1, n)]
    out.append(n * (r // p) if p < r else n)
    return sorted(out)


def is_irreducible(r: int, p: int, n: int) -> bool:
    """Whether G(r,p,n) acts irreducibly on C^n (standard classification)."""
    if r % p:
        raise ValueError(f"p={p} must divide r={r}")
    if n == 1:
        return r > p
    return r > 1 and (r, p, n) != (2, 2, 2)


def is_well_generated(r: int, p: int, n: int) -> bool:
    """Whether the Coxeter number is the largest degree (equivalently the
    group needs only n generating reflections); the q-Catalan identity is
    asserted only in this case."""
    return coxeter_number(r, p, n) == max(degrees(r, p, n))


def gordon_point(r: int, p: int, n: int) -> ParamPoint:
    """kappa = 1 and c_s = (h+1)/h for every reflection class."""
    h = coxeter_number(r, p, n)
    c = Fraction(h + 1, h)
    return ParamPoint.from_c(r, p, 1, c, [c] * (r // p - 1))


# ---------------------------------------------------------------------------
# hyperplanes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hjk:
    j: int
    k: int

    def __post_init__(self):
        if self.j <= 0:
            raise ValueError("j must be positive")
        if self.k <= 0:
            raise ValueError("k must be in 1..n")

    def __str__(self):
        return f"H_{{{self.j},{self.k}}}"


@dataclass(frozen=True)
class Hx:
    x: Fraction

    def __str__(self):
        return f"H_{{c0={self.x}}}"


def on_hyperplane(point: ParamPoint, hid, n: int) -> bool:
    """Exact membership test (kappa = 1 assumed for the H_{j,k} family)."""
    if isinstance(hid, Hx):
        return point.c0 == Cyc.from_rational(point.r, hid.x)
    if hid.j % point.r == 0:
        raise ValueError(f"H_{{j,k}} requires j != 0 mod r, got j={hid.j}")
    if not 1 <= hid.k <= n:
        raise ValueError(f"k={hid.k} out of range 1..{n}")
    lhs = point.d_value(0) - point.d_value(-hid.j) \
        + point.c0 * Q(point.r * (n - hid.k))
    return lhs == Cyc.from_rational(point.r, hid.j)


def _simple_spectrum_violations(point: ParamPoint, n: int) -> list[str]:
    out = []
    if not point.c0.is_rational():
        return out
    c0 = point.c0.rational_value()
    for j in range(1, n + 1):
        v = c0 * j
        if v > 0 and v == int(v):
            out.append(f"c0 = {int(v)}/{j} lies in (1/{j})Z_>0")
    return out


def genericity_guard(point: ParamPoint, k: int, n: int,
                     bound: int | None = None) -> dict:
    """Certify the submodule-structure hypotheses up to a scanning bound.

    Verifies membership in H_{k,1}, absence from every other H_{l,j} with
    l <= bound, and the simple-spectrum condition on c_0.
    """
    if point.kappa != Cyc.one(point.r):
        raise ValueError("the hyperplane arrangement lives at kappa = 1")
    if k <= 0 or k % point.r == 0:
        raise ValueError("k must be positive and nonzero mod r")
    r = point.r
    if bound is None:
        h = coxeter_number(r, point.p, n) if r > 1 else 1
        bound = max(2 * k, 4 * h)
    violations = []
    if not on_hyperplane(point, Hjk(k, 1), n):
        violations.append(f"point is not on H_{{{k},1}}")
    for l in range(1, bound + 1):
        if l % r == 0:
            continue
        for j in range(1, n + 1):
            if (l, j) == (k, 1):
                continue
            if on_hyperplane(point, Hjk(l, j), n):
                violations.append(f"point lies on H_{{{l},{j}}}")
    violations.extend(_simple_spectrum_violations(point, n))
    return {"ok": not violations, "k": k, "bound": bound,
            "violations": violations}


# ---------------------------------------------------------------------------
# the radical and the quotient
# ---------------------------------------------------------------------------


def radical_membership(mu, k: int) -> bool:
    """f_mu lies in the radical iff some part of mu reaches k."""
    return max(mu) >= k


def l1_dimension_by_counting(n: int, k: int) -> int:
    """Count the quotient basis {f_mu : all parts < k} by enumeration."""
    return sum(1 for _ in itertools.product(range(k), repeat=n))


def l1_series_by_counting(n: int, k: int, truncation: int) -> list[int]:
    """Graded dimension of the quotient from the eigenbasis indexing."""
    out = [0] * (truncation + 1)
    for mu in itertools.product(range(k), repeat=n):
        d = sum(mu)
        if d <= truncation:
            out[d] += 1
    return out


def singular_vector_check(r: int, p: int, n: int, point: ParamPoint,
                          k: int) -> dict:
    """Construct the f over (0..k..0) at the point; check every Dunkl
    operator kills them and that their span is group-stable with the same
    character as the span of the k-th powers of the variables."""
    rep = PolyRep(r, p, n, SpecializedParameters(point))
    basis = []
    for i in range(n):
        mu = tuple(k if j == i else 0 for j in range(n))
        basis.append(jack_by_solve(rep, mu))
    for jv in basis:
        for j in range(n):
            img = rep.dunkl(j, jv.poly)
            if not img.is_zero():
                return {"status": "fail", "reason": "not annihilated",
                        "mu": list(jv.mu), "y_index": j,
                        "image": str(img)}
    expand_order = sorted(range(n),
                          key=lambda i: sum(1 for jdx in range(n)
                                            if jdx != i and
                                            order_lt(basis[jdx].mu, basis[i].mu)),
                          reverse=True)
    zero = rep.params.zero
    for w in group_elements(r, p, n):
        trace = zero
        trace_v = zero
        for i, jv in enumerate(basis):
            g = rep.t(w, jv.poly)
            coefs = [zero] * n
            for jdx in expand_order:
                c = g.coeff(basis[jdx].mu)
                if c:
                    coefs[jdx] = c
                    g = g - basis[jdx].poly.scaled(c)
            if not g.is_zero():
                return {"status": "fail", "reason": "span not group-stable",
                        "w": str(w), "mu": list(jv.mu),
                        "residual": str(g)}
            trace = trace + coefs[i]
        for i in range(n):
            kk, j = w.x_image(i)
            if j == i:
                trace_v = trace_v + rep.params.zeta(kk * k)
        if trace != trace_v:
            return {"status": "fail", "reason": "character mismatch",
                    "w": str(w), "span_trace": str(trace),
                    "power_trace": str(trace_v)}
    return {"status": "pass", "k": k, "dimension": n,
            "annihilated": True, "group_stable": True,
            "character_match": True}


# ---------------------------------------------------------------------------
# graded characters
# ---------------------------------------------------------------------------


def _pmul(a: list[Cyc], b: list[Cyc], r: int) -> list[Cyc]:
    out = [Cyc.zero(r)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _charpoly_factors(w: GroupElement, power: int) -> list[tuple[int, Cyc]]:
    """det(1 - T w_k) for the monomial action on the k-th powers of the
    variables, as cycle factors (length, product of entries)."""
    n = w.n
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        scal = 0
        while not seen[j]:
            seen[j] = True
            scal += w.col[j] * power
            j = w.perm[j]
            length += 1
        out.append((length, Cyc.root(w.r, scal)))
    return out


@dataclass(frozen=True)
class GradedChar:
    """A graded trace as num(t)/den(t) over Q(zeta_r), coefficients ascending."""

    r: int
    num: tuple
    den: tuple

    def series(self, truncation: int) -> list[Cyc]:
        zero = Cyc.zero(self.r)
        num = list(self.num) + [zero] * (truncation + 1)
        out = []
        for m in range(truncation + 1):
            acc = num[m]
            for j in range(1, min(m, len(self.den) - 1) + 1):
                if self.den[j]:
                    acc = acc - self.den[j] * out[m - j]
            out.append(acc)  # den[0] = 1
        return out

    def at_one(self) -> Cyc:
        """Limit at t = 1, cancelling matching powers of (1 - t)."""
        num, den = list(self.num), list(self.den)

        def try_divide(poly):
            # divide by (1 - t) if possible: p(t) = (1 - t) q(t)
            q = []
            carry = Cyc.zero(self.r)
            for c in poly[:-1]:
                carry = carry + c
                q.append(carry)
            if sum(poly, Cyc.zero(self.r)):
                return None
            return q

        while True:
            qn, qd = try_divide(num), try_divide(den)
            if qn is None or qd is None:
                break
            num, den = qn, qd
        nv = sum(num, Cyc.zero(self.r))
        dv = sum(den, Cyc.zero(self.r))
        if not dv:
            raise ZeroDivisionError("pole at t = 1")
        return nv / dv


def graded_char_L1(r: int, p: int, n: int, w: GroupElement,
                   k: int) -> GradedChar:
    """det(1 - t^k w_V)/det(1 - t w) with V spanned by the k-th powers."""
    one = [Cyc.one(r)]
    num = one
    for length, scal in _charpoly_factors(w, k):
        f = [Cyc.one(r)] + [Cyc.zero(r)] * (k * length - 1) + [-scal]
        num = _pmul(num, f, r)
    den = one
    for length, scal in _charpoly_factors(w, 1):
        f = [Cyc.one(r)] + [Cyc.zero(r)] * (length - 1) + [-scal]
        den = _pmul(den, f, r)
    return GradedChar(r, tuple(num), tuple(den))


def invariant_char_series(r: int, p: int, n: int, k: int,
                          truncation: int) -> list:
    """(1/|W|) sum_w det(1 - t^k w_V)/det(1 - t w), coefficientwise."""
    total = [Cyc.zero(r)] * (truncation + 1)
    count = 0
    for w in group_elements(r, p, n):
        s = graded_char_L1(r, p, n, w, k).series(truncation)
        total = [a + b for a, b in zip(total, s)]
        count += 1
    out = []
    for c in total:
        v = c / Q(count)
        if not v.is_rational():
            raise ArithmeticError("invariant series is not rational")
        out.append(v.rational_value())
    return out


# ---------------------------------------------------------------------------
# Catalan and coinvariant series
# ---------------------------------------------------------------------------


def _int_series(num_factors, den_factors, truncation: int) -> list[int]:
    """prod (1 - t^a)/prod (1 - t^b) as integer coefficients."""
    num = [1]
    for a in num_factors:
        nxt = [0] * (len(num) + a)
        for i, c in enumerate(num):
            nxt[i] += c
            nxt[i + a] -= c
        num = nxt
    out = []
    den = [1]
    for b in den_factors:
        nxt = [0] * (len(den) + b)
        for i, c in enumerate(den):
            nxt[i] += c
            nxt[i + b] -= c
        den = nxt
    num = num + [0] * (truncation + 1)
    for m in range(truncation + 1):
        acc = num[m]
        for j in range(1, min(m, len(den) - 1) + 1):
            acc -= den[j] * out[m - j]
        out.append(acc)
    return out


def catalan_series(r: int, p: int, n: int, truncation: int) -> dict:
    """prod_i (1 - t^{h+d_i})/(1 - t^{d_i}) to the truncation, plus its
    exact value at t = 1, prod (h + d_i)/d_i.

    The value is an integer whenever the group is well-generated (h equals
    the largest degree); otherwise the exact fraction is reported as a
    string.
    """
    if not is_irreducible(r, p, n):
        raise ValueError(f"G({r},{p},{n}) does not act irreducibly")
    h = coxeter_number(r, p, n)
    degs = degrees(r, p, n)
    coeffs = _int_series([h + d for d in degs], degs, truncation)
    val = Fraction(1)
    for d in degs:
        val *= Fraction(h + d, d)
    return {"h": h, "degrees": degs, "coefficients": coeffs,
            "at_one": int(val) if val.denominator == 1 else str(val)}


def coinvariant_series(r: int, p: int, n: int, truncation: int) -> list[int]:
    """prod (1 - t^{d_i})/(1 - t)^n: the ordinary coinvariant Hilbert series."""
    return _int_series(degrees(r, p, n), [1] * n, truncation)


# ---------------------------------------------------------------------------
# free representations spanned by power monomials
# ---------------------------------------------------------------------------


def _det(entries: list[list[Poly]], n_vars: int, one) -> Poly:
    n = len(entries)
    out = Poly.zero(n_vars)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            j = perm[i]
            length = 1
            seen[i] = True
            while j != i:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = Poly.monomial((0,) * n_vars, one)
        for i in range(n):
            term = term * entries[i][perm[i]]
        out = out + term if sign > 0 else out - term
    return out


def exponents_and_freeness(r: int, p: int, n: int, m: int) -> dict:
    """Closed-form exponents of the span of the m-th power monomials, the
    symbolic determinant identities behind freeness, and, at m = h+1, the
    multiset equality {m - e_i} = {degrees}."""
    if r % p:
        raise ValueError(f"p={p} must divide r={r}")
    if m % r == 0:
        raise ValueError(f"m={m} must not be divisible by r={r}")
    mbar = m % r
    mprime = m % (r // p)
    if p == 1:
        exps = [mbar + i * r for i in range(n)]
    else:
        exps = [mbar + i * r for i in range(n - 1)]
        exps.append((n - 1) * (r - mbar) + n * mprime)
    one = Cyc.one(r)

    def xpow(j, e):
        ev = [0] * n
        ev[j] = e
        return Poly.monomial(tuple(ev), one)

    vandermonde = Poly.monomial((0,) * n, one)
    for i in range(n):
        for j in range(i + 1, n):
            vandermonde = vandermonde * (xpow(i, r) - xpow(j, r))

    f_rows = [[xpow(j, i * r + mbar) for j in range(n)] for i in range(n)]
    det_f = _det(f_rows, n, one)
    all_m = Poly.monomial((mbar,) * n, one)
    target_f = all_m * vandermonde
    sign_f = 1 if det_f == target_f else (-1 if det_f == -target_f else 0)

    result = {
        "exponents": sorted(exps),
        "m_bar": mbar,
        "m_prime": mprime,
        "det_identity": sign_f != 0,
        "det_sign": sign_f,
    }
    if p > 1:
        rows = [[xpow(j, i * r + mbar) for j in range(n)]
                for i in range(n - 1)]
        last = []
        for j in range(n):
            ev = [r - mbar + mprime] * n
            ev[j] = mprime
            last.append(Poly.monomial(tuple(ev), one))
        rows.append(last)
        det_a = _det(rows, n, one)
        target_a = Poly.monomial((mprime,) * n, one) * vandermonde
        sign_a = 1 if det_a == target_a else (-1 if det_a == -target_a else 0)
        result["det_identity"] = result["det_identity"] and sign_a != 0
        result["det_sign_alt"] = sign_a
    if r > 1 and m == coxeter_number(r, p, n) + 1:
        degs = degrees(r, p, n)
        result["multiset_match"] = sorted(m - e for e in exps) == degs
        result["degrees"] = degs
    else:
        result["multiset_match"] = None
    return result
