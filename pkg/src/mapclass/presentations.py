"""Wajnryb's presentation and its rewrite on the two generators B, U = S^-1.

Relators are words of (generator, exponent) syllables and are kept symbolic;
they only become automorphisms inside :func:`verify_presentation`.
Conjugation follows h^F = F h F^-1 throughout, so that
P^{U^k} = U^k X B X^-1 U^-k is the twist A_k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .engine import MappingClass, mcg_equal_mod_boundary
from .surface import SurfaceModel, curve_equal, even_thm_middle, odd_thm_middle

__all__ = [
    "Syl",
    "Relator",
    "Presentation",
    "PresentationError",
    "wajnryb_presentation",
    "rewrite_two_generator",
    "verify_presentation",
    "export",
    "load_json",
    "collapse_conjugator",
    "x_word",
]


class PresentationError(ValueError):
    pass


class Syl(tuple):
    """A group word as a tuple of (name, exponent) syllables, freely reduced."""

    def __new__(cls, syllables: Iterable = ()):
        out: list = []
        for name, exp in syllables:
            if exp == 0:
                continue
            if out and out[-1][0] == name:
                e = out[-1][1] + exp
                out.pop()
                if e:
                    out.append((name, e))
            else:
                out.append((name, exp))
        return super().__new__(cls, out)

    @classmethod
    def parse(cls, text: str) -> "Syl":
        out = []
        for tok in text.split():
            name, _, e = tok.partition("^")
            out.append((name, int(e) if e else 1))
        return cls(out)

    def __mul__(self, other):
        return Syl(tuple(self) + tuple(other))

    def inv(self) -> "Syl":
        return Syl((n, -e) for n, e in reversed(self))

    def __pow__(self, k: int) -> "Syl":
        base = self if k >= 0 else self.inv()
        return Syl(tuple(base) * abs(k))

    def conj(self, by: "Syl") -> "Syl":
        """self^by = by self by^-1."""
        return by * self * by.inv()

    def substitute(self, defs: dict) -> "Syl":
        out = []
        for n, e in self:
            if n in defs:
                out.extend(defs[n] ** e)
            else:
                out.append((n, e))
        return Syl(out)

    def letters(self) -> int:
        return sum(abs(e) for _, e in self)

    def __str__(self):
        return " ".join(f"{n}^{e}" for n, e in self) or "1"


@dataclass(frozen=True)
class Relator:
    family: str
    text: str          # human-readable "lhs = rhs"
    word: Syl          # lhs * rhs^-1 over the presentation's generators
    # for rewritten relators: indices of the source relators it stands for
    sources: tuple = ()
    lhs: Syl = field(default=Syl(), compare=False)
    rhs: Syl = field(default=Syl(), compare=False)
    note: str = field(default="", compare=False)


@dataclass(frozen=True)
class Presentation:
    scheme: str
    genus: int
    generators: tuple
    relators: tuple
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def counts(self) -> dict:
        return {"generators": len(self.generators), "relators": len(self.relators)}


def _A(k):
    return Syl([(f"A{k}", 1)])


B = Syl([("B", 1)])


def _rel(family, lhs: Syl, rhs: Syl, text: str) -> Relator:
    return Relator(family, text, lhs * rhs.inv(), lhs=lhs, rhs=rhs)


def wajnryb_presentation(g: int) -> Presentation:
    if g < 3:
        raise PresentationError("Wajnryb's presentation needs genus >= 3")
    n = 2 * g
    rels = []
    for i in range(1, n + 1):
        if i != 4:
            rels.append(_rel("i", B * _A(i), _A(i) * B, f"B A{i} = A{i} B"))
    for j in range(1, n + 1):
        for k in range(j + 2, n + 1):
            rels.append(_rel("i", _A(j) * _A(k), _A(k) * _A(j), f"A{j} A{k} = A{k} A{j}"))
    rels.append(_rel("ii", B * _A(4) * B, _A(4) * B * _A(4), "B A4 B = A4 B A4"))
    for i in range(1, n):
        a, c = _A(i), _A(i + 1)
        rels.append(_rel("ii", a * c * a, c * a * c, f"A{i} A{i+1} A{i} = A{i+1} A{i} A{i+1}"))
    h = Syl.parse("A4 A3 A2 A1^2 A2 A3 A4")
    rels.append(
        _rel("iii", Syl.parse("A1 A2 A3") ** 4, B * h * B * h.inv(),
             "(A1 A2 A3)^4 = B (A4 A3 A2 A1^2 A2 A3 A4) B (A4 A3 A2 A1^2 A2 A3 A4)^-1")
    )
    t1 = Syl.parse("A2 A1 A3 A2")
    t2 = Syl.parse("A4 A3 A5 A4")
    q = t2 * Syl.parse("A6 A5")
    w = Syl.parse("A6 A5 A4 A3 A2") * q.inv() * B * q * Syl.parse("A4 A3 A2 A1").inv()
    lhs = Syl.parse("A1 A3 A5") * w * B * w.inv()
    rhs = (t2 * t1).inv() * B * (t2 * t1) * t2.inv() * B * t2 * B
    rels.append(_rel("iv", lhs, rhs, "A1 A3 A5 w B w^-1 = (t2 t1)^-1 B (t2 t1) t2^-1 B t2 B"))
    gens = ("B",) + tuple(f"A{i}" for i in range(1, n + 1))
    meta = {"t1": str(t1), "t2": str(t2), "w": str(w)}
    return Presentation("wajnryb", g, gens, tuple(rels), meta)


# ---- two generator form -------------------------------------------------

def x_word(g: int) -> Syl:
    """X over B and U: S^3 X_1 (g odd) or S^4 X_2 (g even), with S = U^-1."""
    def C(k):
        return B.conj(Syl([("U", 2 * k - 1)]))

    def D(k):
        return B.conj(Syl([("U", 2 * k)]))

    if g % 2:
        expr = f"C2 D1 B {odd_thm_middle(g)} S"
        lead = Syl([("U", -3)])
    else:
        expr = f"B D2^-1 {even_thm_middle(g)} S"
        lead = Syl([("U", -4)])
    out = Syl()
    for tok in expr.split():
        name, _, e = tok.partition("^")
        e = int(e) if e else 1
        if name == "B":
            piece = B
        elif name == "S":
            piece = Syl([("U", -1)])
        else:
            k = int(name[1:])
            piece = C(k) if name[0] == "C" else D(k)
        out = out * piece ** e
    return lead * out


def _pu(i: int) -> Syl:
    """P^{U^i} as an abbreviation-level word over P and U."""
    return Syl([("P", 1)]).conj(Syl([("U", i)]))


def _two_gen_relators(g: int):
    """Theorem-form relators over the abbreviations P, U, B (display, word)."""
    n = 2 * g
    P = Syl([("P", 1)])
    out = []
    for i in range(1, n + 1):
        if i != 4:
            out.append(("i", f"B P^{{U^{i}}} = P^{{U^{i}}} B", B * _pu(i), _pu(i) * B))
    for i in range(2, n):
        out.append(("ii", f"P P^{{U^{i}}} = P^{{U^{i}}} P", P * _pu(i), _pu(i) * P))
    out.append(("iii", "B P^{U^4} B = P^{U^4} B P^{U^4}", B * _pu(4) * B, _pu(4) * B * _pu(4)))
    out.append(("iii", "P P^U P = P^U P P^U", P * _pu(1) * P, _pu(1) * P * _pu(1)))
    V = _pu(4) * _pu(3) * _pu(2) * _pu(1) * _pu(1) * _pu(2) * _pu(3) * _pu(4)
    out.append(("iv", "(P^U P^{U^2} P^{U^3})^4 = B B^V", (_pu(1) * _pu(2) * _pu(3)) ** 4, B * B.conj(V)))
    t1 = _pu(2) * _pu(1) * _pu(3) * _pu(2)
    t2 = _pu(4) * _pu(3) * _pu(5) * _pu(4)
    q = t2 * _pu(6) * _pu(5)
    W = _pu(6) * _pu(5) * _pu(4) * _pu(3) * _pu(2) * q.inv() * B * q * (_pu(4) * _pu(3) * _pu(2) * _pu(1)).inv()
    lhs = _pu(1) * _pu(3) * _pu(5) * B.conj(W)
    rhs = B * B.conj(t1.inv() * t2.inv()) * B.conj(t2.inv())
    out.append(("v", "P^U P^{U^3} P^{U^5} B^W = B B^{t1^-1 t2^-1} B^{t2^-1}", lhs, rhs))
    return out


def two_generator_defs(g: int) -> dict:
    x = x_word(g)
    return {"P": B.conj(x), "X": x}


def _substituted(word: Syl) -> Syl:
    """Replace every A_k by P^{U^k}."""
    out = Syl()
    for name, e in word:
        if name.startswith("A"):
            out = out * _pu(int(name[1:])) ** e
        else:
            out = out * Syl([(name, e)])
    return out


def rewrite_two_generator(p: Presentation) -> Presentation:
    """Substitute A_k = P^{U^k} and collapse relators that are U-conjugates.

    Each output relator records (in ``sources``) the Wajnryb relators it
    represents: source relator j is recovered, as words over B, U, P, as
    U^s r U^-s for the representative r.  The lantern relator is the one
    exception: its right hand side comes out cyclically rotated, which is
    harmless because its left hand side commutes with B (and this is noted).
    """
    if p.scheme != "wajnryb":
        raise PresentationError(f"expected a wajnryb presentation, got {p.scheme!r}")
    g = p.genus
    reps = _two_gen_relators(g)
    sources: list = [[] for _ in reps]
    notes = ["" for _ in reps]
    for j, rel in enumerate(p.relators):
        hit = _match_conjugate(_substituted(rel.lhs), _substituted(rel.rhs), reps, 2 * g)
        if hit is None:
            raise PresentationError(f"relator {rel.text!r} does not collapse onto the two generator form")
        i, s, rotated = hit
        sources[i].append(j)
        if rotated:
            notes[i] = "right hand side rotated cyclically; valid since the left hand side commutes with B"
    defs = two_generator_defs(g)
    rels = []
    for (family, text, lhs, rhs), src, note in zip(reps, sources, notes):
        word = (lhs * rhs.inv()).substitute({"P": defs["P"]})
        rels.append(Relator(family, text, word, tuple(src), lhs=lhs, rhs=rhs, note=note))
    meta = {"X": str(defs["X"]), "P": "X B X^-1"}
    return Presentation("two-generator", g, ("B", "U"), tuple(rels), meta)


def _rotations(w: Syl):
    for k in range(len(w)):
        yield Syl(tuple(w[k:]) + tuple(w[:k]))


def _match_conjugate(lhs: Syl, rhs: Syl, reps, n: int) -> Optional[tuple]:
    """Find (index, s, rotated) with both sides equal to U^s (rep side) U^-s."""
    for s in range(0, n + 1):
        c = Syl([("U", -s)])
        L, R = lhs.conj(c), rhs.conj(c)
        for i, (_, _, rl, rr) in enumerate(reps):
            if (L * R.inv()) == (rl * rr.inv()):
                return i, s, False
    for i, (_, _, rl, rr) in enumerate(reps):
        if lhs == rl and any(r == rr for r in _rotations(rhs)):
            return i, 0, True
    return None


def collapse_conjugator(p: Presentation, j: int) -> tuple:
    """(representative index, s) such that Wajnryb relator j is U^s rep U^-s."""
    rel = p.relators[j]
    hit = _match_conjugate(_substituted(rel.lhs), _substituted(rel.rhs), _two_gen_relators(p.genus), 2 * p.genus)
    if hit is None:
        raise PresentationError(f"relator {j} does not collapse")
    return hit


# ---- verification --------------------------------------------------------

@dataclass(frozen=True)
class RelatorCheck:
    index: int
    text: str
    status: str            # "identity" | "boundary" | "fail"
    delta_power: Optional[int]
    witness: Optional[str]


@dataclass(frozen=True)
class VerificationReport:
    scheme: str
    genus: int
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.status == "identity" for c in self.checks)

    def summary(self) -> str:
        n = len(self.checks)
        good = sum(c.status == "identity" for c in self.checks)
        return f"{self.scheme} g={self.genus}: {good}/{n} relators are exact identities"


def evaluate_word(m: SurfaceModel, word: Syl) -> MappingClass:
    cat = m.catalog
    out = cat.identity()
    for name, e in word:
        out = out * cat.element(name, e)
    return out


def distinguishing_witness(m: SurfaceModel, phi: MappingClass) -> str:
    """A base curve moved by phi, or failing that a generator it moves."""
    for name, w in m.base_curves.items():
        img = phi(w)
        if not curve_equal(m, img, w):
            return f"{name} -> {img}"
    for i, img in enumerate(phi.aut.fwd, start=1):
        if img.letters != (i,):
            return f"x{i} -> {img}"
    return "orientation"


def verify_presentation(p: Presentation, m: SurfaceModel) -> VerificationReport:
    if p.genus != m.genus:
        raise PresentationError(f"presentation genus {p.genus} but model genus {m.genus}")
    ident = m.catalog.identity()
    results = []
    for idx, rel in enumerate(p.relators):
        for name, _ in rel.word:
            if name not in p.generators:
                raise PresentationError(f"unresolvable name {name!r} in relator {idx}")
        phi = evaluate_word(m, rel.word)
        if phi == ident:
            results.append(RelatorCheck(idx, rel.text, "identity", 0, None))
            continue
        k = mcg_equal_mod_boundary(phi, ident, m.delta)
        if k is not None:
            results.append(RelatorCheck(idx, rel.text, "boundary", k, f"delta^{k}"))
        else:
            results.append(RelatorCheck(idx, rel.text, "fail", None, distinguishing_witness(m, phi)))
    return VerificationReport(p.scheme, p.genus, tuple(results))


# ---- export ---------------------------------------------------------------

def export(p: Presentation, format: str = "text") -> bytes:
    if format == "text":
        lines = [f"# {p.scheme} {p.genus} {len(p.generators)} {len(p.relators)}"]
        for rel in p.relators:
            lines.append(" ".join(f"{n}^{e}" for n, e in rel.word))
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        obj = {
            "scheme": p.scheme,
            "genus": p.genus,
            "generators": list(p.generators),
            "relators": [[{"gen": n, "exp": e} for n, e in rel.word] for rel in p.relators],
            "counts": p.counts,
        }
        return (json.dumps(obj, indent=1) + "\n").encode()
    raise PresentationError(f"unknown export format {format!r}")


def load_json(data: bytes) -> Presentation:
    obj = json.loads(data)
    rels = tuple(
        Relator("", "", Syl((s["gen"], s["exp"]) for s in r)) for r in obj["relators"]
    )
    p = Presentation(obj["scheme"], obj["genus"], tuple(obj["generators"]), rels)
    if p.counts != obj["counts"]:
        raise PresentationError("counts do not match the relator list")
    return p
