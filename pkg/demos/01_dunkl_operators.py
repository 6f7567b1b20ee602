"""A first walk through the operator layer.

We build the polynomial representation for G(2,1,2) -- the hyperoctahedral
group B_2 -- with symbolic parameters k (the deformation scale), c0 (the
reflection class of transposition type) and d1 (packaging the diagonal
class), and watch the operators act.
"""

from cherednik import GroupElement, PolyRep, check_pbw, rca_forms

rep = PolyRep(2, 1, 2)
par = rep.params

print("== the polynomial representation of the G(2,1,2) deformation ==")
print()

x1, x2 = rep.x_poly(0), rep.x_poly(1)
f = x1 * x1 * x1  # x1^3

print(f"f             = {f}")
print(f"y_1 . f       = {rep.dunkl(0, f)}")
print(f"y_2 . f       = {rep.dunkl(1, f)}")
print(f"z_1 . f       = {rep.z(0, f)}")
print(f"h . f         = {rep.h(f)}   (the grading element: k * deg)")
print()

s12 = GroupElement.transposition(2, 2, 0, 1)
z1 = GroupElement.diagonal(2, 2, 0, 1)
print(f"t_(12) . f    = {rep.t(s12, f)}")
print(f"t_diag . f    = {rep.t(z1, f)}   (x1 -> -x1)")
print()

print("divided difference of x1^3 along x1 - x2 (a geometric series):")
s = next(s for s in rep.reflections if s.kind == "transposition" and s.l == 0)
print(f"  {rep.divided_difference(f, s)}")
print()

print("the defining relations, verified on every monomial of degree <= 4:")
report = rep.check_relations(4)
print(f"  {report['status']} ({report['monomials']} monomials)")
print()

print("commutativity of the Dunkl and Cherednik-Dunkl families at degree 4:")
print(f"  {rep.commutator_report(4)['status']}")
print()

print("PBW flatness of the deformation (conditions on the form family):")
print(f"  {check_pbw(rca_forms(2, 1, 2))}")
