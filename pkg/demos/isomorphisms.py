"""Isomorphisms between algebras and concrete realizations.

A parameter tuple (a1, a2, a3, a4) moves Gamma by tau; together with a
character chi it induces a map theta that respects the bracket.  A
character with chi(delta) != 1 does not, and random testing finds out fast.
The second half checks the Laurent-polynomial realizations.
"""

from blocklie import catalog
from blocklie.algebra import one
from blocklie.isomorphism import IsoParams, Theta, corrupted_chi, hom_verify, image_spec, iso_verify
from blocklie.notation import format_element
from blocklie.realizations import RealizationMap, crosscheck, select_reading

spec = catalog.get("c1")
p = IsoParams(1, 2, 1, 3)
dst = image_spec(spec, p)
print("source Gamma basis:", spec.gamma.basis)
print("target Gamma basis:", dst.gamma.basis)
print("iso_verify:", iso_verify(spec, dst, p))

th = Theta(spec, dst, p)
print("theta(1) =", format_element(th(one(spec))))
print("hom_verify, 300 samples:", hom_verify(spec, dst, p, samples=300)["ok"])
bad = hom_verify(spec, dst, p, corrupted_chi(spec.gamma, p), samples=300)
print(f"corrupted chi: ok={bad['ok']}, counterexample at sample {bad['checked']} ({bad['part']} bracket)")

print("\nRealizations:")
for case in (1, 2, 3):
    rep = crosscheck(RealizationMap(case, 1), samples=100, seed=3)
    print(f"  case {case}: ok={rep['ok']}")
selected, reports = select_reading(1, samples=100, seed=3)
for reading, rep in reports.items():
    print(f"  case 4 ({reading}): ok={rep['ok']}")
print("  selected reading:", selected)
