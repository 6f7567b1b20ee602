"""The finite-dimensional quotient at the Coxeter point, for G(2,1,2).

With kappa = 1 and every coupling constant equal to (h+1)/h (h the Coxeter
number), the polynomial representation acquires a radical spanned by the
eigenvectors with a part of size h+1, and the quotient is (h+1)^n
dimensional -- the diagonal-coinvariant quotient in disguise.  This script
replays the whole story at desk scale.
"""

from cherednik import (
    GroupElement, PolyRep, SpecializedParameters, coxeter_number,
    genericity_guard, gordon_point, graded_char_L1, jack_by_solve,
    l1_dimension_by_counting, l1_series_by_counting, psi_scalar,
    radical_membership, singular_vector_check,
)

r, p, n = 2, 1, 2
h = coxeter_number(r, p, n)
k = h + 1
point = gordon_point(r, p, n)
print(f"== G(2,1,2): h = {h}, specializing every c_s to {k}/{h} ==")
print(f"point: {point}")
print()

guard = genericity_guard(point, k, n, bound=20)
print(f"hyperplane certificate (target H_{{{k},1}}, scanning bound "
      f"{guard['bound']}): {'clean' if guard['ok'] else guard['violations']}")
print()

rep = PolyRep(r, p, n, SpecializedParameters(point))
for mu in [(k, 0), (0, k)]:
    jv = jack_by_solve(rep, mu)
    images = [rep.dunkl(j, jv.poly) for j in range(n)]
    print(f"f_{mu} = {jv.poly}")
    print(f"   every Dunkl operator kills it: "
          f"{all(im.is_zero() for im in images)}")
    print(f"   lowering coefficient at this point: {psi_scalar(rep, mu)}")
print()

print("their span is group-stable with the character of the k-th powers:")
print(f"  {singular_vector_check(r, p, n, point, k)}")
print()

dim = l1_dimension_by_counting(n, k)
print(f"dim of the quotient: {dim} = (h+1)^n")
print(f"by degree: {l1_series_by_counting(n, k, n * (k - 1))}")
ident = graded_char_L1(r, p, n, GroupElement.identity(r, n), k)
print(f"graded character at the identity: {[str(c) for c in ident.series(8)]}")
print(f"its value at t = 1: {ident.at_one()}")
print()

print("membership of f_mu in the radical is reading off max(mu) >= k:")
for mu in [(0, 0), (4, 4), (5, 0), (2, 7)]:
    print(f"  mu = {mu}: {radical_membership(mu, k)}")
