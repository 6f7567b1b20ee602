"""q-Catalan series and free representations of power monomials.

The group-invariant part of the quotient at the Coxeter point has graded
dimension prod (1 - t^{h+d_i})/(1 - t^{d_i}); averaging the graded character
over the group recovers it coefficient by coefficient.  The span of the
(h+1)-st power monomials is a free representation whose exponents pair with
the degrees.
"""

from cherednik import (
    catalan_series, coxeter_number, degrees, exponents_and_freeness,
    invariant_char_series,
)

for (r, p, n) in [(2, 1, 2), (3, 3, 2), (2, 1, 3), (3, 3, 3)]:
    h = coxeter_number(r, p, n)
    cat = catalan_series(r, p, n, 12)
    print(f"G({r},{p},{n}): h = {h}, degrees {cat['degrees']}")
    print(f"  q-Catalan series  {cat['coefficients']}")
    print(f"  value at t = 1:   {cat['at_one']}")
    if n == 2:
        inv = invariant_char_series(r, p, n, h + 1, 12)
        print(f"  group average:    {[int(v) for v in inv]}  "
              f"(matches: {[int(v) for v in inv] == cat['coefficients']})")
    m = h + 1
    if m % r:
        out = exponents_and_freeness(r, p, n, m)
        print(f"  exponents of the m = {m} power span: {out['exponents']}; "
              f"multiset {{m - e_i}} = degrees: {out['multiset_match']}")
    print()

print("the n = 1 sanity case: G(r,1,1) has series 1 + t^r")
print(" ", catalan_series(4, 1, 1, 8)["coefficients"])
print()
print("G(4,2,2) is not well-generated (h = 6 exceeds both degrees 4, 4):")
print("  value at t = 1 is the honest fraction",
      catalan_series(4, 2, 2, 8)["at_one"])
print("  degrees:", degrees(4, 2, 2))
