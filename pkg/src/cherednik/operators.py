"""Operators on the polynomial representation of the deformed algebra.

:class:`PolyRep` bundles a group G(r,p,n) with a parameter field and applies
the standard operators to sparse polynomials:

* ``x(i, f)`` -- multiplication by x_i,
* ``t(w, f)`` -- the group action,
* ``dunkl(i, f)`` -- y_i = kappa d/dx_i - sum_s c_s <alpha_s, y_i> (f - sf)/alpha_s,
* ``z(i, f)`` -- z_i = y_i x_i + c0 phi_i with phi_i the partial class sum,
* ``h(f)`` -- sum_i x_i y_i + sum_s c_s (1 - t_s),

together with exact divided differences and a relation checker.  Divided
differences are evaluated per monomial by the geometric-series expansion along
the reflecting line, which is always an exact division.  Monomial images of
y_i and z_i are memoized; all operators are pure, so the caches are safe to
share between threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .cyclotomic import Cyc
from .groups import GroupElement, Reflection, reflections
from .polynomials import Poly
from .scalars import GenericParameters

__all__ = ["PolyRep", "act_on_poly", "monomials_of_degree", "monomials_up_to"]


def act_on_poly(w: "GroupElement", f: "Poly") -> "Poly":
    """The colored-permutation action x^mu -> zeta^{<col,mu>} x^{w.mu}.

    Works in either scalar mode: coefficients are scaled through their own
    arithmetic. This is an algebra automorphism of the polynomial ring.
    """
    out: dict = {}
    for e, c in f.terms.items():
        k, nu = w.act_on_exponents(e)
        v = c.cmul(Cyc.root(w.r, k))
        s = out.get(nu)
        s = v if s is None else s + v
        if s:
            out[nu] = s
        else:
            out.pop(nu, None)
    return Poly(f.n, out)


def monomials_of_degree(n: int, d: int):
    """All exponent vectors in Z_{>=0}^n of total degree d."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def monomials_up_to(n: int, d: int):
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)


def _dd_transposition(mu, a, b, l, r):
    """(x^mu - s x^mu)/(x_a - zeta^l x_b) for s the colored transposition.

    Returns a list of (exponents, Cyc) pairs; exact by the geometric series.
    """
    ea, eb = mu[a], mu[b]
    if ea == eb:
        return []
    out = []
    if ea > eb:
        for t in range(ea - eb):
            nu = list(mu)
            nu[a] = ea - 1 - t
            nu[b] = eb + t
            out.append((tuple(nu), Cyc.root(r, l * t)))
    else:
        for t in range(eb - ea):
            nu = list(mu)
            nu[a] = eb - 1 - t
            nu[b] = ea + t
            out.append((tuple(nu), -Cyc.root(r, l * (ea - eb + t))))
    return out


def _dd_diagonal(mu, i, l, r):
    """(x^mu - s x^mu)/(zeta^{-l-1} x_i) for s the diagonal reflection."""
    a = mu[i]
    if a == 0 or (l * a) % r == 0:
        return []
    nu = list(mu)
    nu[i] = a - 1
    coeff = Cyc.root(r, l + 1) * (Cyc.one(r) - Cyc.root(r, -l * a))
    return [(tuple(nu), coeff)]


class PolyRep:
    """The polynomial representation of the rational Cherednik algebra of
    G(r,p,n), with either generic or specialized parameters."""

    def __init__(self, r: int, p: int, n: int, params=None, *,
                 fault_dunkl_sign: bool = False,
                 max_cache_degree: int | None = None):
        if r < 1 or n < 1 or r % p:
            raise ValueError(f"invalid group parameters ({r},{p},{n})")
        self.r, self.p, self.n = r, p, n
        self.max_cache_degree = max_cache_degree
        self.params = params if params is not None else GenericParameters(r, p)
        if self.params.r != r or self.params.p != p:
            raise ValueError("parameter field does not match the group")
        self.reflections: list[Reflection] = reflections(r, p, n)
        self._fault_dunkl_sign = fault_dunkl_sign
        # reflections with <alpha_s, y_i> != 0, with their coupling constants
        self._touching: list[list[tuple[Reflection, object, Cyc]]] = []
        for i in range(n):
            lst = []
            for s in self.reflections:
                a = s.alpha[i]
                if not a:
                    continue
                cs = self.params.c0 if s.kind == "transposition" \
                    else self.params.c(s.l)
                lst.append((s, cs, a))
            self._touching.append(lst)
        self._c0r = self.params.c0 * self.params.rational(r)
        self._dunkl_memo: dict = {}
        self._z_memo: dict = {}
        self._jack_memo: dict = {}

    # -- elementary operators ------------------------------------------------

    def one(self) -> Poly:
        return Poly.monomial((0,) * self.n, self.params.one)

    def x_poly(self, i: int) -> Poly:
        e = [0] * self.n
        e[i] = 1
        return Poly.monomial(tuple(e), self.params.one)

    def x(self, i: int, f: Poly) -> Poly:
        out = {}
        for e, c in f.terms.items():
            t = list(e)
            t[i] += 1
            out[tuple(t)] = c
        return Poly(self.n, out)

    def t(self, w: GroupElement, f: Poly) -> Poly:
        """Group action: x^mu -> zeta^{<col,mu>} x^{w.mu}."""
        return act_on_poly(w, f)

    def divided_difference(self, f: Poly, s: Reflection) -> Poly:
        """(f - s f)/alpha_s, evaluated exactly term by term."""
        out: dict = {}
        for e, c in f.terms.items():
            if s.kind == "transposition":
                pairs = _dd_transposition(e, s.i, s.j, s.l, self.r)
            else:
                pairs = _dd_diagonal(e, s.i, s.l, self.r)
            for nu, cy in pairs:
                v = c.cmul(cy)
                acc = out.get(nu)
                acc = v if acc is None else acc + v
                if acc:
                    out[nu] = acc
                else:
                    out.pop(nu, None)
        return Poly(self.n, out)

    # -- Dunkl operators ------------------------------------------------------

    def _dunkl_mono(self, i: int, mu: tuple[int, ...]) -> Poly:
        key = (i, mu)
        got = self._dunkl_memo.get(key)
        if got is not None:
            return got
        out: dict = {}

        def acc(nu, v):
            if not v:
                return
            s = out.get(nu)
            s = v if s is None else s + v
            if s:
                out[nu] = s
            else:
                out.pop(nu, None)

        if mu[i]:
            nu = list(mu)
            nu[i] -= 1
            acc(tuple(nu), self.params.kappa * mu[i])
        for s, cs, a in self._touching[i]:
            if s.kind == "transposition":
                pairs = _dd_transposition(mu, s.i, s.j, s.l, self.r)
            else:
                pairs = _dd_diagonal(mu, s.i, s.l, self.r)
            if not pairs:
                continue
            if self._fault_dunkl_sign and s.kind == "transposition":
                factor = cs
            else:
                factor = -cs
            for nu, cy in pairs:
                acc(nu, factor.cmul(a * cy))
        poly = Poly(self.n, out)
        if self.max_cache_degree is None or sum(mu) <= self.max_cache_degree:
            self._dunkl_memo[key] = poly
        return poly

    def dunkl(self, i: int, f: Poly) -> Poly:
        """The commuting difference-differential action of y_i."""
        out: dict = {}
        for e, c in f.terms.items():
            for nu, v in self._dunkl_mono(i, e).terms.items():
                w = c * v
                if not w:
                    continue
                s = out.get(nu)
                s = w if s is None else s + w
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
        return Poly(self.n, out)

    def apply_y_monomial(self, nu: tuple[int, ...], f: Poly) -> Poly:
        """Apply the Dunkl monomial y^nu (the y_i commute)."""
        out = f
        for i, e in enumerate(nu):
            for _ in range(e):
                out = self.dunkl(i, out)
        return out

    # -- z operators and the grading element -----------------------------------

    def _z_mono(self, i: int, mu: tuple[int, ...]) -> Poly:
        key = (i, mu)
        got = self._z_memo.get(key)
        if got is not None:
            return got
        up = list(mu)
        up[i] += 1
        poly = self._dunkl_mono(i, tuple(up))
        # c0 * phi_i, phi_i = sum_{j<i} sum_l t_{(ij)-reflection with color l};
        # on a monomial the color sum collapses to r * [mu_j = mu_i mod r]
        extra: dict = {}
        for j in range(i):
            if (mu[j] - mu[i]) % self.r == 0:
                nu = list(mu)
                nu[i], nu[j] = nu[j], nu[i]
                t = tuple(nu)
                s = extra.get(t)
                extra[t] = self._c0r if s is None else s + self._c0r
        if extra:
            poly = poly + Poly(self.n, extra)
        if self.max_cache_degree is None or sum(mu) <= self.max_cache_degree:
            self._z_memo[key] = poly
        return poly

    def z(self, i: int, f: Poly) -> Poly:
        """z_i = y_i x_i + c0 phi_i; degree preserving, pairwise commuting."""
        out: dict = {}
        for e, c in f.terms.items():
            for nu, v in self._z_mono(i, e).terms.items():
                w = c * v
                if not w:
                    continue
                s = out.get(nu)
                s = w if s is None else s + w
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
        return Poly(self.n, out)

    def phi_class_sum(self, i: int, f: Poly) -> Poly:
        """phi_i applied literally as a sum of group elements (for tests)."""
        out = Poly.zero(self.n)
        for j in range(i):
            for l in range(self.r):
                w = (GroupElement.diagonal(self.r, self.n, i, l)
                     * GroupElement.transposition(self.r, self.n, j, i)
                     * GroupElement.diagonal(self.r, self.n, i, -l))
                out = out + self.t(w, f)
        return out

    def epsilon(self, i: int, j: int, f: Poly) -> Poly:
        """The primitive idempotent (1/r) sum_l zeta^{-lj} t_{diag(i,l)} of
        the cyclic reflection subgroup at slot i: it keeps the monomials
        whose i-th exponent is congruent to -j mod r."""
        keep = {}
        for e, c in f.terms.items():
            if (e[i] + j) % self.r == 0:
                keep[e] = c
        return Poly(self.n, keep)

    def h(self, f: Poly) -> Poly:
        """h = sum_i x_i y_i + sum_s c_s (1 - t_s); the grading element."""
        out = Poly.zero(self.n)
        for i in range(self.n):
            out = out + self.x(i, self.dunkl(i, f))
        for s in self.reflections:
            cs = self.params.c0 if s.kind == "transposition" \
                else self.params.c(s.l)
            out = out + (f - self.t(s.element, f)).scaled(cs)
        return out

    # -- divided differences in the y-variables (for the x-side commutator) ----

    def _dd_y_mono(self, nu, s: Reflection):
        """(y^nu - s^{-1} y^nu)/alpha_s^vee as (exponents, Cyc) pairs."""
        r = self.r
        if s.kind == "transposition":
            # s^{-1} = s maps y_a -> zeta^{-l} y_b, y_b -> zeta^{l} y_a and
            # alpha^vee = y_a - zeta^{-l} y_b: the x-side formulas with l -> -l
            return _dd_transposition(nu, s.i, s.j, -s.l, r)
        a = nu[s.i]
        if a == 0 or (s.l * a) % r == 0:
            return []
        out = list(nu)
        out[s.i] = a - 1
        denom = Cyc.root(r, s.l + 1) - Cyc.root(r, 1)
        coeff = (Cyc.one(r) - Cyc.root(r, -s.l * a)) / denom
        return [(tuple(out), coeff)]

    def x_side_commutator_defect(self, nu: tuple[int, ...], j: int,
                                 f: Poly) -> Poly:
        """[y^nu, x_j] f minus the dual commutator formula; zero iff it holds.

        The formula applies the divided difference in the y's first and the
        group element after it.
        """
        g_of = lambda ev: self.apply_y_monomial(ev, f)
        lhs = self.apply_y_monomial(nu, self.x(j, f)) \
            - self.x(j, self.apply_y_monomial(nu, f))
        # kappa * d(g)/d(x_j): derivative of y^nu in the j-th slot
        rhs = Poly.zero(self.n)
        if nu[j]:
            dn = list(nu)
            dn[j] -= 1
            rhs = rhs + g_of(tuple(dn)).scaled(self.params.kappa
                                               * self.params.rational(nu[j]))
        for s in self.reflections:
            b = s.alpha_check[j]
            if not b:
                continue
            cs = self.params.c0 if s.kind == "transposition" \
                else self.params.c(s.l)
            acc = Poly.zero(self.n)
            for ev, cy in self._dd_y_mono(nu, s):
                acc = acc + g_of(ev).scaled(self.params.embed(cy))
            if acc:
                rhs = rhs - self.t(s.element, acc).scaled(cs.cmul(b))
        return lhs - rhs

    # -- relation checking ------------------------------------------------------

    def _conj_transpositions(self, i: int, j: int) -> list[GroupElement]:
        """The r elements conjugating the (i j) transposition by colors at i."""
        out = []
        for l in range(self.r):
            out.append(GroupElement.diagonal(self.r, self.n, i, l)
                       * GroupElement.transposition(self.r, self.n, i, j)
                       * GroupElement.diagonal(self.r, self.n, i, -l))
        return out

    def check_relations(self, max_deg: int, *, include_x_side: bool = True,
                        workers: int = 1) -> dict:
        """Verify the defining commutation relations on all monomials of
        degree <= max_deg; report the first failure with a witness."""
        n, r = self.n, self.r
        monos = list(monomials_up_to(n, max_deg))
        gens = [s.element for s in self.reflections]
        checked = 0

        def check_mono(mu):
            m = Poly.monomial(mu, self.params.one)
            for i in range(n):
                for j in range(n):
                    lhs = self.dunkl(i, self.x(j, m)) \
                        - self.x(j, self.dunkl(i, m))
                    if i == j:
                        rhs = m.scaled(self.params.kappa)
                        for t in range(1, r):
                            if t % self.p:
                                continue
                            w = GroupElement.diagonal(r, n, i, t)
                            cf = self.params.c(t).cmul(
                                Cyc.one(r) - Cyc.root(r, -t))
                            rhs = rhs - self.t(w, m).scaled(cf)
                        for jj in range(n):
                            if jj == i:
                                continue
                            for w in self._conj_transpositions(i, jj):
                                rhs = rhs - self.t(w, m).scaled(self.params.c0)
                    else:
                        rhs = Poly.zero(n)
                        for l, w in enumerate(self._conj_transpositions(i, j)):
                            rhs = rhs + self.t(w, m).scaled(
                                self.params.c0.cmul(Cyc.root(r, -l)))
                    if lhs != rhs:
                        return {"relation": "y_i x_j commutator", "i": i,
                                "j": j, "mu": list(mu),
                                "defect": str(lhs - rhs)}
            for w in gens:
                for j in range(n):
                    k, jj = w.x_image(j)
                    wx = Poly.monomial(
                        tuple(1 if t == jj else 0 for t in range(n)),
                        self.params.zeta(k))
                    if self.t(w, self.x(j, m)) != wx * self.t(w, m):
                        return {"relation": "t_w x = (wx) t_w", "w": str(w),
                                "j": j, "mu": list(mu)}
            if include_x_side:
                for nu in monomials_up_to(n, 2):
                    if sum(nu) == 0:
                        continue
                    for j in range(n):
                        defect = self.x_side_commutator_defect(nu, j, m)
                        if defect:
                            return {"relation": "x-side commutator",
                                    "y_monomial": list(nu), "j": j,
                                    "mu": list(mu), "defect": str(defect)}
            return None

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(check_mono, monos))
        else:
            results = [check_mono(mu) for mu in monos]
        for res in results:
            checked += 1
            if res is not None:
                return {"status": "fail",
                        "group": [self.r, self.p, self.n], **res}
        return {"status": "pass", "group": [self.r, self.p, self.n],
                "max_degree": max_deg, "monomials": len(monos)}

    def commutator_report(self, max_deg: int, *, which: str = "both",
                          workers: int = 1) -> dict:
        """Check [y_i,y_j] = 0 and/or [z_i,z_j] = 0 on monomials of degree
        <= max_deg."""
        n = self.n
        monos = list(monomials_up_to(n, max_deg))

        def check_mono(mu):
            m = Poly.monomial(mu, self.params.one)
            for i in range(n):
                for j in range(i + 1, n):
                    if which in ("y", "both"):
                        d = self.dunkl(i, self.dunkl(j, m)) \
                            - self.dunkl(j, self.dunkl(i, m))
                        if d:
                            return {"commutator": "[y_i,y_j]", "i": i, "j": j,
                                    "mu": list(mu), "defect": str(d)}
                    if which in ("z", "both"):
                        d = self.z(i, self.z(j, m)) - self.z(j, self.z(i, m))
                        if d:
                            return {"commutator": "[z_i,z_j]", "i": i, "j": j,
                                    "mu": list(mu), "defect": str(d)}
            return None

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(check_mono, monos))
        else:
            results = [check_mono(mu) for mu in monos]
        for res in results:
            if res is not None:
                return {"status": "fail",
                        "group": [self.r, self.p, self.n], **res}
        return {"status": "pass", "group": [self.r, self.p, self.n],
                "max_degree": max_deg, "monomials": len(monos)}
