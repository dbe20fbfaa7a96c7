# The lantern relation and the orbit computations behind the generating sets.

from mapclass import build_surface, run_all
from mapclass.harness import summarize

for g in (3, 4, 5):
    E = build_surface(g).catalog.evaluate
    print(f"g={g} lantern A1 A3 A5 B2 == B D1 E:", E("A1 A3 A5 B2") == E("B D1 E"))

# b_2 and e are obtained by pushing known curves around
m = build_surface(3)
cat = m.catalog
for name in ("b_2", "e", "alpha", "e_1", "e_2", "e_3", "e_4"):
    ref = cat.curve(name)
    print(f"{name:6} = {ref.definition[0]} ({ref.definition[1]})   length {len(ref.word)}")

# T = S R reverses orientation; T^-1 walks b, c_1, dbar_1, ...
Ti = cat.element("T", -1)
w = m.base_curves["b"]
path = ["b"]
for _ in range(3):
    w = Ti(w)
    path.append("/".join(cat.named_matches(w)) or "?")
print(" -> ".join(path))

# the whole catalog of checks at one genus
for g in (3, 4):
    rs = run_all(g)
    print(f"g={g}:", summarize(rs))
    for r in rs:
        if r.status == "pass":
            print(f"   {r.name:22} {r.witness}")
