"""The eigenbasis of non-symmetric Jack polynomials, two ways.

Each composition mu indexes a unique monic simultaneous eigenvector
f_mu = x^mu + lower-order terms of the commuting operators z_i.  We build
them by triangular back-substitution and, independently, by walking the
intertwining operators, then push vectors around with the raising and
exchange operators.
"""

from cherednik import (
    PolyRep, apply_phi, apply_psi, apply_sigma, jack_by_intertwiners,
    jack_by_solve,
)

rep = PolyRep(2, 1, 2)

print("== non-symmetric Jack polynomials for G(2,1,2), generic parameters ==")
print()
for mu in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (2, 1)]:
    a = jack_by_solve(rep, mu)
    b = jack_by_intertwiners(rep, mu)
    assert a.poly == b.poly, "the two constructions must agree"
    print(f"f_{mu} = {a.poly}")
    print(f"   z-eigenvalues: {[str(v) for v in a.weight.zvals]}")
print()

print("the raising operator walks up the degree:")
jv = jack_by_solve(rep, (0, 0))
for _ in range(3):
    jv = apply_phi(rep, jv)
    print(f"  -> f_{jv.mu} = {jv.poly}")
print()

print("the exchange operator swaps adjacent entries (unit coefficient up):")
jv = jack_by_solve(rep, (0, 2))
res = apply_sigma(rep, 0, jv)
print(f"  sigma_1 f_(0,2) = {res.scalar} * f_{res.vector.mu}")
back = apply_sigma(rep, 0, res.vector)
print(f"  sigma_1 f_(2,0) = ({back.scalar}) * f_{back.vector.mu}")
print()

print("the lowering operator drops the last entry (with a scalar):")
down = apply_psi(rep, jack_by_solve(rep, (0, 2)))
print(f"  psi f_(0,2) = ({down.scalar}) * f_{down.vector.mu}")
print("  psi f_(2,0) =", apply_psi(rep, jack_by_solve(rep, (2, 0))).scalar,
      " (last entry zero kills it)")
