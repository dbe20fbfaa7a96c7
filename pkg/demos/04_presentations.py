# Wajnryb's presentation, and its rewrite on the two generators B and U = S^-1.

from mapclass import build_surface, export, rewrite_two_generator, verify_presentation, wajnryb_presentation

g = 3
m = build_surface(g)
p = wajnryb_presentation(g)
print(len(p.generators), "generators,", len(p.relators), "relators")
for r in p.relators[-3:]:
    print("  ", r.family, r.text)

rep = verify_presentation(p, m)
print(rep.summary())

two = rewrite_two_generator(p)
print(len(two.relators), "relators on", two.generators)
for r in two.relators:
    print(f"  ({r.family:3}) {r.text:55} {r.word.letters():5} letters, stands for {len(r.sources)} relator(s)")
    if r.note:
        print("        note:", r.note)

rep = verify_presentation(two, m)
print(rep.summary())

# A_k is recovered as U^k P U^-k with P = X B X^-1
cat = m.catalog
print("A_k == S^-k X B X^-1 S^k for all k:",
      all(cat.element(f"A{k}") == cat.evaluate(f"S^{-k} X B X^-1 S^{k}") for k in range(1, 2 * g + 1)))

print(export(two, "text").decode()[:200], "...")
