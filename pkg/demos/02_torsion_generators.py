# Two elements of finite order generate the mapping class group:
# S and B S B^-1 both have order 4g+2 once the boundary twist is ignored.

import time

from mapclass import build_surface, order_mod_boundary, abelianize, matrix_order

for g in (1, 2, 3, 4, 5):
    m = build_surface(g)
    cat = m.catalog
    t = time.perf_counter()
    n_S = order_mod_boundary(cat.element("S"), m.delta, 50)
    line = f"g={g}  order(S) = {n_S}"
    if g >= 2:
        n_BSB = order_mod_boundary(cat.evaluate("B S B^-1"), m.delta, 50)
        line += f"  order(B S B^-1) = {n_BSB}"
    print(line, f"  [{time.perf_counter() - t:.3f}s]")

# low genus special cases
m1, m2 = build_surface(1), build_surface(2)
print("g=1:", order_mod_boundary(m1.catalog.evaluate("A2 A1"), m1.delta, 20),
      order_mod_boundary(m1.catalog.evaluate("A1 A2 A1"), m1.delta, 20))
print("g=2:", order_mod_boundary(m2.catalog.evaluate("A4 A3 A2 A1"), m2.delta, 20),
      order_mod_boundary(m2.catalog.evaluate("A5 A4 A3 A2 A1"), m2.delta, 20))

# S^(4g+2) is not the identity: it is the twist about the boundary,
# conjugation by delta
m = build_surface(3)
full = m.catalog.element("S", 14)
print("S^14 == Td:", full == m.catalog.element("Td"))

# on homology S^(2g+1) is the hyperelliptic involution, -I
M = abelianize(m.catalog.element("S", 7))
print(M.entries)
print("homology order of S:", matrix_order(abelianize(m.catalog.element("S")), 100))

# a twist has infinite order; the search gives up at the cap
print("order(A1) within 60:", order_mod_boundary(m.catalog.element("A1"), m.delta, 60))
