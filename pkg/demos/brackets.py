"""A first look at the bracket.

Builds the algebra over Gamma = Z^4 with J = {0}^4 and delta = (0,0,1,0),
computes a few brackets both ways, and shows where the Lie identity breaks.
"""

from blocklie import catalog
from blocklie.algebra import Element, bracket, derived_membership, one, split_bracket
from blocklie.lattice import AlgebraSpec, GammaSpec, unit
from blocklie.notation import format_element, parse_element
from blocklie.sampling import Sampler


def show(label, u):
    print(f"  {label:<28} {format_element(u)}")


spec = catalog.get("c1")
print(spec)

x1, x2, x4 = (parse_element(spec, s) for s in ("x{1,0,0,0}", "x{0,1,0,0}", "x{0,0,0,1}"))
print("\nBrackets of basis monomials (definition path vs expanded path):")
for a, b in [(x1, x2), (one(spec), x4), (x2, x4)]:
    lhs = bracket(spec, a, b, "definition")
    rhs = bracket(spec, a, b)
    show(f"[{format_element(a)}, {format_element(b)}]", rhs)
    assert lhs == rhs
    assert rhs == split_bracket(spec, 1, a, b) + split_bracket(spec, 2, a, b)

print("\nThe derived algebra misses x^sigma but contains every bracket:")
print("  x{1,0,1,0} in [A,A]?", derived_membership(spec, parse_element(spec, "x{1,0,1,0}")))
smp = Sampler(spec, seed=1)
u, v = smp.element(), smp.element()
print("  [u, v] in [A,A]?     ", derived_membership(spec, bracket(spec, u, v)))

print("\nJacobiator of x^e1, x^e2, x^e4:")
br = lambda p, q: bracket(spec, p, q)
jac = br(br(x1, x2), x4) + br(br(x2, x4), x1) + br(br(x4, x1), x2)
show("[[x1,x2],x4] + cyclic", jac)

print("\nThe same computation with delta = 0 (not a valid spec, bracket still defined):")
flat = AlgebraSpec(GammaSpec([unit(1), unit(2), unit(3), unit(4)], 0), (0, 0, 0, 0))
br0 = lambda p, q: bracket(flat, p, q)
jac0 = br0(br0(x1, x2), x4) + br0(br0(x2, x4), x1) + br0(br0(x4, x1), x2)
show("[[x1,x2],x4] + cyclic", jac0)
assert jac0 == Element()
