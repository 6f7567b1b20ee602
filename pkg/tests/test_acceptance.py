"""Acceptance criteria.

Every check below is exact (tolerance zero); the only numeric tolerances are
the stated wall-clock budgets.  Each criterion prints one pass/fail line
(run with ``pytest tests/test_acceptance.py -v -s`` to see them live).
"""

import sys
import time

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from oracles import dense_eigenvector, oracle_z

from cherednik import (
    Cyc, GroupElement, Poly, PolyRep, apply_phi, apply_psi, apply_sigma,
    catalan_series, check_pbw, coxeter_number, exponents_and_freeness,
    genericity_guard, gordon_point, graded_char_L1, invariant_char_series,
    jack_by_intertwiners, jack_by_solve, l1_dimension_by_counting,
    order_lt, phi_psi_scalar, psi_scalar, rca_forms,
    singular_vector_check, weight_of, SpecializedParameters,
)
from cherednik.operators import monomials_up_to

GRID = [(2, 1, 2), (3, 1, 2), (2, 2, 2), (4, 2, 2), (3, 3, 2), (2, 1, 3),
        (3, 3, 3)]

EIGEN_GROUPS = [(r, p, n)
                for r in (1, 2, 3)
                for p in (1, 2, 3) if r % p == 0 and p <= r
                for n in (1, 2, 3)]


def _announce(num: int, ok: bool, detail: str, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {num}] {status}: {detail} ({elapsed:.1f}s)", flush=True)
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_pbw_conditions():
    t0 = time.time()
    ok = True
    for (r, p, n) in GRID:
        t1 = time.time()
        report = check_pbw(rca_forms(r, p, n))
        each = time.time() - t1
        ok = ok and report["status"] == "pass" and each < 60.0
    _announce(1, ok, f"PBW flatness conditions on {len(GRID)} groups, "
              "symbolic parameters, <1 min each", time.time() - t0)


def test_criterion_2_operator_relations():
    t0 = time.time()
    ok = True
    for (r, p, n) in GRID:
        rep = PolyRep(r, p, n)
        ok = ok and rep.check_relations(6)["status"] == "pass"
        ok = ok and rep.commutator_report(6)["status"] == "pass"
    elapsed = time.time() - t0
    ok = ok and elapsed < 300.0
    _announce(2, ok, "defining relations and [y_i,y_j] = [z_i,z_j] = 0 "
              "on all monomials of degree <= 6, <5 min total", elapsed)


def test_criterion_3_eigenbasis_two_ways():
    t0 = time.time()
    ok = True
    count = 0
    for (r, p, n) in EIGEN_GROUPS:
        rep = PolyRep(r, p, n)
        for mu in monomials_up_to(n, 4):
            a = jack_by_solve(rep, mu)
            b = jack_by_intertwiners(rep, mu)
            ok = ok and a.poly == b.poly and a.weight == b.weight
            ok = ok and a.poly.coeff(mu) == rep.params.one
            for i in range(n):
                ok = ok and rep.z(i, a.poly) \
                    == a.poly.scaled(a.weight.zvals[i])
            for nu in a.poly.terms:
                if nu != tuple(mu):
                    ok = ok and sum(nu) == sum(mu) and order_lt(nu, mu)
            count += 1
    _announce(3, ok, f"{count} eigenvectors (|mu| <= 4, n <= 3, r <= 3): "
              "constructions identical, monic, exact eigen-equations, "
              "triangular support", time.time() - t0)


def test_criterion_4_intertwiner_identities():
    t0 = time.time()
    ok = True
    for (r, p, n) in EIGEN_GROUPS:
        if n == 1:
            continue
        rep = PolyRep(r, p, n)
        par = rep.params
        for mu in monomials_up_to(n, 4):
            jv = jack_by_intertwiners(rep, mu)
            # exchange operators: all closed-form cases against raw output
            for i in range(n - 1):
                res = apply_sigma(rep, i, jv)
                if mu[i] == mu[i + 1]:
                    ok = ok and res.is_zero()
                    continue
                smu = list(mu)
                smu[i], smu[i + 1] = smu[i + 1], smu[i]
                target = jack_by_intertwiners(rep, tuple(smu))
                ok = ok and res.vector.poly == target.poly
                congruent = (mu[i] - mu[i + 1]) % r == 0
                if mu[i] < mu[i + 1] or not congruent:
                    ok = ok and res.scalar == par.one
                else:
                    delta = jv.weight.zvals[i] - jv.weight.zvals[i + 1]
                    rc0 = par.c0 * par.rational(r)
                    ok = ok and res.scalar \
                        == (delta - rc0) * (delta + rc0) / (delta * delta)
                # squares: sigma_i^2 = 1 - (c0 pi/(z_i - z_{i+1}))^2
                back = apply_sigma(rep, i, res.vector)
                delta = jv.weight.zvals[i] - jv.weight.zvals[i + 1]
                pred = par.one
                if congruent:
                    q = par.c0 * par.rational(r) / delta
                    pred = pred - q * q
                ok = ok and res.scalar * back.scalar == pred
            # raising: coefficient one onto the rotated composition
            up = apply_phi(rep, jv)
            ok = ok and up.poly.coeff(up.mu) == par.one
            ok = ok and up.poly == jack_by_intertwiners(rep, up.mu).poly
            # lowering: zero iff mu_n = 0, else the closed-form scalar
            down = apply_psi(rep, jv)
            if mu[-1] == 0:
                ok = ok and down.is_zero()
            else:
                ok = ok and down.scalar == psi_scalar(rep, mu)
            # composites on the eigenvector: lower-after-raise is z_1 ...
            comp = apply_psi(rep, up)
            lhs = comp.vector.poly.scaled(comp.scalar) if comp.vector \
                else None
            ok = ok and lhs == jv.poly.scaled(jv.weight.zvals[0])
            # ... and raise-after-lower is its closed-form scalar
            lhs2 = apply_phi(rep, down.vector).poly.scaled(down.scalar) \
                if down.vector else Poly.zero(n)
            ok = ok and lhs2 == jv.poly.scaled(phi_psi_scalar(rep, jv))
    _announce(4, ok, "exchange squares, raise/lower composites and every "
              "closed-form action case match raw application exactly",
              time.time() - t0)


def test_criterion_5_gordon_g212():
    t0 = time.time()
    r, p, n = 2, 1, 2
    k = coxeter_number(r, p, n) + 1
    point = gordon_point(r, p, n)
    guard = genericity_guard(point, k, n, bound=20)
    ok = guard["ok"]
    sing = singular_vector_check(r, p, n, point, k)
    ok = ok and sing["status"] == "pass"
    # annihilation, explicitly
    rep = PolyRep(r, p, n, SpecializedParameters(point))
    for mu in [(5, 0), (0, 5)]:
        jv = jack_by_solve(rep, mu)
        for j in range(n):
            ok = ok and rep.dunkl(j, jv.poly).is_zero()
    ok = ok and l1_dimension_by_counting(n, k) == 25 == k ** n
    ident = graded_char_L1(r, p, n, GroupElement.identity(r, n), k)
    expected = [1, 2, 3, 4, 5, 4, 3, 2, 1] + [0] * 4
    ok = ok and ident.series(12) == [Cyc.from_rational(r, v)
                                     for v in expected]
    elapsed = time.time() - t0
    ok = ok and elapsed < 120.0
    _announce(5, ok, "G(2,1,2) at c = 5/4: guard, singular vectors killed "
              "by every Dunkl operator, dim L(1) = 25, identity character "
              "((1-t^5)/(1-t))^2, <2 min", elapsed)


def test_criterion_6_gordon_g332_g213():
    t0 = time.time()
    ok = True
    for (r, p, n) in [(3, 3, 2), (2, 1, 3)]:
        t1 = time.time()
        h = coxeter_number(r, p, n)
        k = h + 1
        point = gordon_point(r, p, n)
        ok = ok and genericity_guard(point, k, n)["ok"]
        ok = ok and singular_vector_check(r, p, n, point, k)["status"] \
            == "pass"
        ok = ok and l1_dimension_by_counting(n, k) == k ** n
        ident = graded_char_L1(r, p, n, GroupElement.identity(r, n), k)
        ok = ok and ident.at_one() == Cyc.from_rational(r, k ** n)
        ok = ok and time.time() - t1 < 600.0
    _announce(6, ok, "G(3,3,2) and G(2,1,3): dim L(1) = (h+1)^n with "
              "verified singular-vector annihilation, <10 min each",
              time.time() - t0)


def test_criterion_7_catalan_cross_check():
    t0 = time.time()
    ok = True
    values = {}
    for (r, p, n) in [(2, 1, 2), (3, 3, 2)]:
        h = coxeter_number(r, p, n)
        cat = catalan_series(r, p, n, 12)
        inv = invariant_char_series(r, p, n, h + 1, 12)
        ok = ok and [int(v) for v in inv] == cat["coefficients"]
        values[(r, p, n)] = cat["at_one"]
    ok = ok and values[(2, 1, 2)] == 6 and values[(3, 3, 2)] == 5
    _announce(7, ok, "group-averaged graded character equals the q-Catalan "
              "series to degree 12; values 6 and 5 at t=1",
              time.time() - t0)


def test_criterion_8_free_representations():
    t0 = time.time()
    ok = True
    for (r, p, n) in GRID:
        m = coxeter_number(r, p, n) + 1
        assert m % r != 0
        out = exponents_and_freeness(r, p, n, m)
        ok = ok and out["det_identity"] and out["multiset_match"]
    elapsed = time.time() - t0
    ok = ok and elapsed < 120.0
    _announce(8, ok, "symbolic determinant identities and the multiset "
              "equality {k - e_i} = {degrees} at m = h+1 on the full grid, "
              "<2 min", elapsed)


def test_criterion_9_symmetric_group_degeneration():
    t0 = time.time()
    rep = PolyRep(1, 1, 2)
    ok = True
    for mu in monomials_up_to(2, 3):
        # oracle first: independent Dunkl + dense simultaneous eigen-solve
        dim, oracle_vec = dense_eigenvector(rep, mu, z_of=oracle_z)
        ok = ok and dim == 1 and oracle_vec is not None
        a = jack_by_solve(rep, mu)
        b = jack_by_intertwiners(rep, mu)
        ok = ok and a.poly == oracle_vec == b.poly
    _announce(9, ok, "type-A degeneration (r=1, n=2): eigenvectors for "
              "|mu| <= 3 agree with the independent brute-force eigen-solve",
              time.time() - t0)


def test_criterion_3_weights_are_as_stated():
    # companion exactness check: the eigenvalues match the closed formula
    t0 = time.time()
    ok = True
    for (r, p, n) in [(2, 1, 2), (3, 3, 2), (3, 1, 3)]:
        rep = PolyRep(r, p, n)
        for mu in monomials_up_to(n, 3):
            jv = jack_by_solve(rep, mu)
            ok = ok and jv.weight == weight_of(mu, rep.params)
    _announce(3, ok, "weights of constructed eigenvectors match the closed "
              "formula (companion check)", time.time() - t0)
