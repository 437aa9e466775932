"""Simplicity certificates.

Any nonzero element of the derived algebra generates the whole algebra as
an ideal.  reduce_to_one records a sequence of ideal-preserving steps that
ends at the scalar 1; replay re-executes it independently.
"""

from blocklie import catalog
from blocklie.algebra import one
from blocklie.notation import format_element, parse_element
from blocklie.simplicity import dumps, loads, reduce_to_one, replay, saturate_from_one

for name, text in [
    ("c1", "x{0,0,0,1}"),
    ("c1", "x{0,1,0,0} + x{1,1,0,2}"),
    ("c3", "x{1,2} t2 + 2 x{0,1} t4^2"),
    ("c6", "a x{0,1} t2 - 1/2 x{2,1} t4"),
]:
    spec = catalog.get(name)
    u = parse_element(spec, text)
    tr = reduce_to_one(spec, u)
    print(f"{name}: reduce {text}")
    print(f"  route {tr.route!r}, {len(tr.steps)} steps")
    for s in tr.steps[:6]:
        print("   ", s)
    if len(tr.steps) > 6:
        print("    ...")
    # the JSON form is what the command line writes; replay does not trust the planner
    again = loads(dumps(tr))
    assert replay(again) == one(spec)
    print("  replay of the JSON trace gives 1\n")

spec = catalog.get("c1")
target = parse_element(spec, "x{0,1,0,0}")
tr = saturate_from_one(spec, target)
print(f"Saturation from 1 to {format_element(target)}: {len(tr.steps)} steps")
assert replay(tr) == target
