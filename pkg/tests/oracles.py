"""Independent oracles for the test suite.

Everything here deliberately avoids the production code paths it checks:

* ``poly_divexact`` does sparse long division (the package uses geometric
  series for divided differences);
* ``oracle_dunkl`` / ``oracle_z`` rebuild the operators from the literal
  reflection sum;
* ``dense_eigenvector`` finds simultaneous eigenvectors by Gaussian
  elimination on one whole graded piece, with no triangularity, ordering or
  character filtering;
* ``bruhat_le_cover`` computes Bruhat order by transitive closure of the
  covering relation.
"""

from __future__ import annotations

import itertools

from cherednik import GroupElement, Poly
from cherednik.operators import monomials_of_degree


def poly_divexact(f: Poly, g: Poly):
    """Long division f/g in graded-lex order; None unless exact."""
    if g.is_zero():
        raise ZeroDivisionError
    rem = dict(f.terms)
    ge = g.leading_exponent()
    gc = g.terms[ge]
    quot: dict = {}

    def key(e):
        return (sum(e), e)

    while rem:
        e = max(rem, key=key)
        c = rem[e]
        qe = tuple(a - b for a, b in zip(e, ge))
        if any(x < 0 for x in qe):
            return None
        qc = c / gc
        quot[qe] = qc
        for oe, oc in g.terms.items():
            t = tuple(a + b for a, b in zip(qe, oe))
            s = rem.get(t)
            s = -(qc * oc) if s is None else s - qc * oc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return Poly(f.n, quot)


def oracle_dunkl(rep, i: int, f: Poly) -> Poly:
    """The literal reflection-sum Dunkl operator, via long division."""
    params = rep.params
    n = rep.n
    out = Poly.zero(n)
    for mu, c in f.terms.items():
        if mu[i]:
            down = list(mu)
            down[i] -= 1
            out = out + Poly.monomial(tuple(down),
                                      c * params.kappa * params.rational(mu[i]))
    for s in rep.reflections:
        a = s.alpha[i]
        if not a:
            continue
        cs = params.c0 if s.kind == "transposition" else params.c(s.l)
        alpha_poly = Poly(n, {tuple(1 if t == m else 0 for t in range(n)):
                              params.embed(v)
                              for m, v in enumerate(s.alpha) if v})
        diff = f - rep.t(s.element, f)
        quot = poly_divexact(diff, alpha_poly)
        assert quot is not None, "reflection difference not divisible"
        out = out - quot.scaled(cs.cmul(a))
    return out


def oracle_z(rep, i: int, f: Poly) -> Poly:
    """z_i = y_i x_i + c0 * (literal group class sum)."""
    xi = rep.x(i, f)
    out = oracle_dunkl(rep, i, xi)
    acc = Poly.zero(rep.n)
    for j in range(i):
        for l in range(rep.r):
            w = (GroupElement.diagonal(rep.r, rep.n, i, l)
                 * GroupElement.transposition(rep.r, rep.n, j, i)
                 * GroupElement.diagonal(rep.r, rep.n, i, -l))
            acc = acc + rep.t(w, f)
    return out + acc.scaled(rep.params.c0)


def gaussian_kernel(rows: list[list], zero, one) -> list[list]:
    """Kernel basis of the matrix given by rows, over a duck-typed field."""
    if not rows:
        return []
    m = len(rows[0])
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(m):
        piv = None
        for rw in range(rank, len(mat)):
            if mat[rw][col]:
                piv = rw
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = one / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for rw in range(len(mat)):
            if rw != rank and mat[rw][col]:
                factor = mat[rw][col]
                mat[rw] = [v - factor * w for v, w in zip(mat[rw], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * m
        vec[fc] = one
        for rnk, pc in enumerate(pivots):
            vec[pc] = -mat[rnk][fc]
        basis.append(vec)
    return basis


def dense_eigenvector(rep, mu, z_of=None):
    """Simultaneous eigenvector for the weight of mu inside the full graded
    piece, by stacked kernels; returns (kernel dimension, monic Poly or None).
    """
    from cherednik import weight_of

    if z_of is None:
        z_of = oracle_z
    mu = tuple(mu)
    n = rep.n
    basis = list(monomials_of_degree(n, sum(mu)))
    index = {b: k for k, b in enumerate(basis)}
    wt = weight_of(mu, rep.params)
    params = rep.params
    rows = []
    for i in range(n):
        cols = []
        for b in basis:
            img = z_of(rep, i, Poly.monomial(b, params.one))
            cols.append(img)
        for ridx, target in enumerate(basis):
            row = []
            for cidx, b in enumerate(basis):
                v = cols[cidx].coeff(target)
                if v is None:
                    v = params.zero
                if cidx == ridx:
                    v = v - wt.zvals[i]
                row.append(v)
            rows.append(row)
    kern = gaussian_kernel(rows, params.zero, params.one)
    dim = len(kern)
    vec = None
    for cand in kern:
        lead = cand[index[mu]]
        if lead:
            inv = params.one / lead
            vec = Poly(n, {b: c * inv for b, c in zip(basis, cand) if c})
            break
    return dim, vec


def bruhat_le_cover(u: tuple[int, ...], w: tuple[int, ...]) -> bool:
    """Bruhat order by upward closure of the covering relation."""

    def inv(p):
        return sum(1 for a, b in itertools.combinations(p, 2) if a > b)

    if inv(u) > inv(w):
        return False
    seen = {u}
    frontier = {u}
    n = len(u)
    while frontier:
        if w in seen:
            return True
        nxt = set()
        for p in frontier:
            lp = inv(p)
            for i in range(n):
                for j in range(i + 1, n):
                    q = list(p)
                    q[i], q[j] = q[j], q[i]
                    q = tuple(q)
                    if inv(q) == lp + 1 and q not in seen:
                        nxt.add(q)
        seen |= nxt
        frontier = nxt
    return w in seen


def max_length_sorting_permutation(mu) -> tuple[int, ...]:
    """Brute force: the longest v (0-based values) with (v.mu)_{v[i]} = mu_i
    nondecreasing."""
    n = len(mu)
    minus = tuple(sorted(mu))

    def inv(p):
        return sum(1 for a, b in itertools.combinations(p, 2) if a > b)

    best = None
    for perm in itertools.permutations(range(n)):
        arranged = [0] * n
        for i in range(n):
            arranged[perm[i]] = mu[i]
        if tuple(arranged) == minus:
            if best is None or inv(perm) > inv(best):
                best = perm
    return best
