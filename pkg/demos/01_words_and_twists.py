# Dehn twists as automorphisms of the free group pi_1 of a genus 3 surface
# with one boundary circle.

from mapclass import build_surface
from mapclass.words import Word, cyclic_key

m = build_surface(3)
cat = m.catalog
print("boundary word:", m.delta)

for name, w in m.base_curves.items():
    print(f"{name:4} {w}")

# a twist is stored by the images of the generators x1..x6
A1 = cat.element("A1")
for i, img in enumerate(A1.aut.fwd, start=1):
    print(f"A1: x{i} -> {img}")

# every twist fixes the boundary word letter for letter
print("A1 fixes delta:", A1(m.delta) == m.delta)

# disjoint curves commute, curves meeting once braid
A2, A3, B, A4 = (cat.element(n) for n in ("A2", "A3", "B", "A4"))
print("A1 A3 == A3 A1:", A1 * A3 == A3 * A1)
print("A1 A2 A1 == A2 A1 A2:", A1 * A2 * A1 == A2 * A1 * A2)
print("B A4 B == A4 B A4:", B * A4 * B == A4 * B * A4)

# curves are compared as unoriented conjugacy classes
u = Word([1, 2, -1], 6)
print("x1 x2 X1 and x2 are the same curve:", cyclic_key(u) == cyclic_key(Word([2], 6)))

# S = A6 A5 ... A1 moves each a_i to a_(i-1), and S^-1 moves b to c_1
S = cat.element("S")
for i in range(2, 7):
    print(f"S(a_{i}) is", cat.named_matches(S(m.base_curves[f"a_{i}"])))
print("S^-1(b) is", cat.named_matches(cat.element("S", -1)(m.base_curves["b"])))
