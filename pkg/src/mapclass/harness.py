"""Named checks of the displayed identities and orbit claims.

Every check is a list of claims written as element expressions, so a check
is data: ``Eq(lhs, rhs)`` is exact equality of mapping classes (boundary
fixed pointwise), ``Curve(expr, src, dst)`` says expr(src) is freely
homotopic to dst, ``Order(expr, n)`` is the order modulo the boundary twist.
Status "pass" is only ever given after exact word comparison.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .engine import ExpressionError, mcg_equal_mod_boundary, order_mod_boundary
from .homology import abelianize, identity_matrix
from .presentations import (
    distinguishing_witness,
    rewrite_two_generator,
    verify_presentation,
    wajnryb_presentation,
)
from .surface import (
    DEFAULT_CALIBRATION,
    CurveError,
    build_surface,
    curve_equal,
    even_thm_middle,
    odd_thm_middle,
)

PASS, FAIL, SKIP = "pass", "fail", "skipped"


class UnknownCheck(KeyError):
    pass


class Skip(Exception):
    """Raised by a check whose genus is not admissible."""


@dataclass(frozen=True)
class Eq:
    lhs: str
    rhs: str

    def __str__(self):
        return f"{self.lhs} == {self.rhs}"


@dataclass(frozen=True)
class Curve:
    expr: str
    src: str
    dst: str

    def __str__(self):
        return f"{self.expr} ({self.src}) ~ {self.dst}"


@dataclass(frozen=True)
class Order:
    expr: str
    n: int

    def __str__(self):
        return f"order({self.expr}) == {self.n}"


@dataclass(frozen=True)
class CheckResult:
    name: str
    genus: int
    status: str
    witness: Optional[str]
    ms: int
    calibration: str = DEFAULT_CALIBRATION

    @property
    def passed(self):
        return self.status == PASS

    def as_dict(self):
        return {"name": self.name, "status": self.status, "witness": self.witness, "ms": self.ms}


def inv(expr: str) -> str:
    """Inverse of an element expression, token by token."""
    out = []
    for tok in reversed(expr.split()):
        name, _, e = tok.partition("^")
        e = -(int(e) if e else 1)
        out.append(name if e == 1 else f"{name}^{e}")
    return " ".join(out)


def conj(F: str, h: str) -> str:
    """F h F^-1 as an expression."""
    return f"{F} {h} {inv(F)}"


def _squash(expr: str) -> str:
    return " ".join(expr.split())


# ---- check definitions -----------------------------------------------------
# each returns (claims, note); raise Skip(reason) when the genus is out of range

def _need(cond, reason):
    if not cond:
        raise Skip(reason)


def chain_action(g):
    _need(g >= 1, "genus >= 1")
    return [Eq(f"S A{i} S^-1", f"A{i - 1}") for i in range(2, 2 * g + 1)], None


def thm3_odd(g):
    _need(g >= 3 and g % 2 == 1, "odd genus >= 3 only")
    mid = odd_thm_middle(g)
    note = "middle product D3^-1 ... C_{g-1}^-1 is empty at g=3" if not mid else None
    return [Curve(_squash(f"C2 D1 B {mid} S"), "b", "a_3")], note


def thm3_even(g):
    _need(g >= 4 and g % 2 == 0, "even genus >= 4 only")
    return [Curve(_squash(f"B D2^-1 {even_thm_middle(g)} S"), "b", "a_4")], None


def ext_T_orbit(g):
    _need(g >= 2, "b needs genus >= 2")
    claims = [Curve("T^-1", "b", "c_1")]
    for i in range(1, g - 1):
        claims += [
            Curve("T^-1", f"c_{i}", f"dbar_{i}"),
            Curve("T^-1", f"cbar_{i}", f"d_{i}"),
            Curve("T^-1", f"d_{i}", f"c_{i + 1}"),
            Curve("T^-1", f"dbar_{i}", f"cbar_{i + 1}"),
        ]
    claims += [Curve("T", f"a_{i}", f"a_{i - 1}") for i in range(2, 2 * g)]
    return claims, None


def ext_even(g):
    _need(g % 2 == 0, "even genus only")
    pairs = " ".join(f"C{k} Dbar{k}" for k in range(1, g - 2, 2))
    return [Curve(_squash(f"{pairs} C{g - 1} T^-1"), f"c_{g - 1}", "a_1")], None


def ext_odd_e_chain(g):
    _need(g >= 3 and g % 2 == 1, "odd genus >= 3 only")
    return [Curve("C1^-1 E4", "e_2", "a_1")], None


def lantern(g):
    _need(g >= 3, "the lantern needs a_5, a_6 (genus >= 3)")
    return [Eq("A1 A3 A5 B2", "B D1 E")], None


def lantern_rewrite(g):
    _need(g >= 3, "genus >= 3")
    return [Eq("A1", "B A3^-1 D1 A5^-1 E B2^-1")], None


def b2_consistency(g):
    _need(g == 3, "C2^-1 S(b) ~ b_2 is asserted for genus 3 only; at higher genus it is a different curve")
    return [Curve("C2^-1 S", "b", "b_2"), Curve("C2^-1 A6 A5 A4", "b", "b_2")], None


def _v_word(g):
    return even_thm_middle(g) if g % 2 == 0 else odd_thm_middle(g)


def cbar_commute(g):
    _need(g >= 3, "genus >= 3")
    claims = [Eq(f"Cbar1 C{i}", f"C{i} Cbar1") for i in range(1, g)]
    claims += [Eq(f"Cbar1 D{j}", f"D{j} Cbar1") for j in range(3, g - 1)]
    note = None
    if g >= 4:
        V = _v_word(g)
        claims.append(Eq(f"Cbar1 {V}", f"{V} Cbar1"))
        lhs = conj(f"Cbar1^{g - 3} {V}", "S B S^-1 Cbar1^-1")
        claims.append(Eq(_squash(lhs), "T[x] Cbar1^-1"))
    if g == 4:
        note = "V = C3^-1 (the alternating pattern has a single factor at g=4)"
    return claims, note


def tor_even(g):
    _need(g >= 4 and g % 2 == 0, "even genus >= 4 only")
    return [Eq(conj("B D2^-1", "T[x]"), "A4")], "V read with the alternating pattern C3^-1 D4^-1 C5^-1 ..."


def tor_odd(g):
    _need(g >= 5 and g % 2 == 1, "odd genus >= 5 only")
    F = "C2 D1 B C4^-3"
    return [Eq(conj(F, "T[x] C4^-1"), "A3 C4^-1")], None


def tor_g3_chain(g):
    _need(g == 3, "genus 3 only")
    claims = [
        Curve("C1^-1 D1^-1 S^2 B S", "b", "a_5"),
        Eq(conj("Cbar1 C2^-1", "S B S^-1 C2^-1"), "C2^-1 S B S^-1 C2 C2^-1"),
        Eq("C2^-1 S B S^-1 C2 C2^-1", "B2 C2^-1"),
        Eq(conj("B Cbar1^-1", "S B S^-1 B2^-1"), "T[y] B2^-1"),
        Curve("S^2 B S", "b", "z"),
        Eq(conj("C1^-1 D1^-1 B2^2", "T[z] B2^-1"), "A5 B2^-1"),
    ]
    return claims, None


def tor_b2_e(g):
    _need(g >= 3, "genus >= 3")
    F1 = "A1^-2 C2^-1 A6 A5 A4"
    F2 = "B2^-2 A2 A1 A4^-1 C1"
    return [Eq(conj(F1, "B A1^-1"), "B2 A1^-1"), Eq(conj(F2, "A5 B2^-1"), "E B2^-1")], None


def tor_final(g):
    _need(g >= 3, "genus >= 3")
    return [Curve("C1^-1 A1^-1 A4 A3", "a_2", "b")], None


def orders(g):
    if g == 1:
        return [Order("A2 A1", 6), Order("A1 A2 A1", 4)], None
    if g == 2:
        return [Order("A4 A3 A2 A1", 10), Order("A5 A4 A3 A2 A1", 6)], "A5 at genus 2 is the twist about b"
    return [Order("S", 4 * g + 2), Order("B S B^-1", 4 * g + 2)], None


def rotation(g):
    return [Eq(f"S^{4 * g + 2}", "Td")], None


CHECKS: dict = {}


def _register(fn: Callable, name: Optional[str] = None):
    CHECKS[name or fn.__name__] = fn


for _fn in (
    chain_action, thm3_odd, thm3_even, ext_T_orbit, ext_even, ext_odd_e_chain,
    lantern, lantern_rewrite, b2_consistency, cbar_commute, tor_even, tor_odd,
    tor_g3_chain, tor_b2_e, tor_final, orders, rotation,
):
    _register(_fn)
CHECK_NAMES = tuple(CHECKS) + ("presentation_wajnryb", "presentation_two_gen")


# ---- evaluation ------------------------------------------------------------

def claim_failure(m, claim) -> Optional[str]:
    """None when the claim holds exactly, else a distinguishing witness."""
    cat = m.catalog
    if isinstance(claim, Eq):
        phi, psi = cat.evaluate(claim.lhs), cat.evaluate(claim.rhs)
        if phi == psi:
            return None
        if phi.sign != psi.sign:
            return f"{claim}: orientation signs differ"
        k = mcg_equal_mod_boundary(phi, psi, m.delta)
        extra = f" (equal up to delta^{k})" if k is not None else ""
        return f"{claim}: {distinguishing_witness(m, phi * psi.inverse())}{extra}"
    if isinstance(claim, Curve):
        img = cat.evaluate(claim.expr)(cat.curve(claim.src).word)
        if curve_equal(m, img, cat.curve(claim.dst).word):
            return None
        hits = cat.named_matches(img)
        named = f" (that is {', '.join(hits)})" if hits else ""
        return f"{claim}: image is {img}{named}"
    if isinstance(claim, Order):
        n = order_mod_boundary(cat.evaluate(claim.expr), m.delta, 4 * claim.n + 4)
        return None if n == claim.n else f"{claim}: got {n}"
    raise TypeError(claim)


def _rotation_extra(m) -> Optional[str]:
    g = m.genus
    M = abelianize(m.catalog.element("S", 2 * g + 1))
    if (M.entries == -identity_matrix(2 * g)).all():
        return None
    return f"abelianize(S^{2 * g + 1}) is not -I"


def _presentation_check(name, g, m):
    if g < 3:
        raise Skip("presentations need genus >= 3")
    p = wajnryb_presentation(g)
    if name == "presentation_two_gen":
        p = rewrite_two_generator(p)
    rep = verify_presentation(p, m)
    bad = [c for c in rep.checks if c.status != "identity"]
    if bad:
        c = bad[0]
        return f"relator {c.index} ({c.text}): {c.status} {c.witness}", None
    extra = None
    if name == "presentation_two_gen":
        # A_k = S^-k X B X^-1 S^k = U^k P U^-k
        for k in range(1, 2 * g + 1):
            lhs = m.catalog.element(f"A{k}")
            rhs = m.catalog.evaluate(f"S^{-k} X B X^-1 S^{k}")
            if lhs != rhs:
                return f"substitution fails at A{k}: {distinguishing_witness(m, lhs * rhs.inverse())}", None
        extra = f"substitution A_k = S^-k X B X^-1 S^k exact for k=1..{2 * g}"
    return None, f"{rep.summary()}" + (f"; {extra}" if extra else "")


def _info_t_last(m) -> str:
    # the stated range stops at 2g-1; the last case is only reported
    g = m.genus
    c = Curve("T", f"a_{2 * g}", f"a_{2 * g - 1}")
    return f"informational: {c} {'holds' if claim_failure(m, c) is None else 'does not hold'}"


INFO = {"ext_T_orbit": _info_t_last}


def run_claims(m, claims) -> Optional[str]:
    for c in claims:
        w = claim_failure(m, c)
        if w is not None:
            return w
    return None


def run_check(name: str, g: int, calibration: str = DEFAULT_CALIBRATION, claims=None) -> CheckResult:
    """Run one named check.  ``claims`` overrides the built-in claim list
    (used for negative controls)."""
    if name not in CHECK_NAMES:
        raise UnknownCheck(name)
    t0 = time.perf_counter()
    m = build_surface(g, calibration)

    def done(status, witness):
        ms = int(round((time.perf_counter() - t0) * 1000))
        return CheckResult(name, g, status, witness, ms, calibration)

    try:
        if name.startswith("presentation_"):
            fail, note = _presentation_check(name, g, m)
            return done(FAIL, fail) if fail else done(PASS, note)
        default, note = CHECKS[name](g)
    except Skip as exc:
        return done(SKIP, str(exc))
    claims = default if claims is None else claims
    try:
        fail = run_claims(m, claims)
        if fail is None and name == "rotation" and claims is default:
            fail = _rotation_extra(m)
    except (ExpressionError, CurveError) as exc:
        return done(FAIL, f"could not evaluate: {exc}")
    if fail is not None:
        return done(FAIL, fail)
    summary = f"{len(claims)} claim{'s' if len(claims) != 1 else ''} exact"
    if name in INFO:
        info = INFO[name](m)
        note = f"{note}; {info}" if note else info
    return done(PASS, f"{summary}; {note}" if note else summary)


def run_all(g: int, calibration: str = DEFAULT_CALIBRATION, workers: int = 1) -> list:
    if g < 1:
        raise ValueError("genus must be >= 1")
    build_surface(g, calibration)
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            return list(ex.map(lambda n: run_check(n, g, calibration), CHECK_NAMES))
    return [run_check(n, g, calibration) for n in CHECK_NAMES]


def report(results, g: int, calibration: str = DEFAULT_CALIBRATION) -> dict:
    return {"genus": g, "calibration": calibration, "results": [r.as_dict() for r in results]}


def report_json(results, g, calibration=DEFAULT_CALIBRATION, timings=True) -> str:
    rep = report(results, g, calibration)
    if not timings:
        for r in rep["results"]:
            r["ms"] = 0
    return json.dumps(rep, indent=1)


def summarize(results) -> str:
    n = {s: sum(r.status == s for r in results) for s in (PASS, FAIL, SKIP)}
    return f"{n[PASS]} passed, {n[FAIL]} failed, {n[SKIP]} skipped"


def corrupt(expr: str, position: int = 0, mode: str = "flip") -> str:
    """A one-letter corruption of an expression, for negative controls.

    ``flip`` negates the exponent of the token at ``position``, ``drop``
    removes it.
    """
    toks = expr.split()
    if not toks:
        raise ValueError("empty expression")
    i = position % len(toks)
    if mode == "drop":
        del toks[i]
        return " ".join(toks)
    name, _, e = toks[i].partition("^")
    e = -(int(e) if e else 1)
    toks[i] = name if e == 1 else f"{name}^{e}"
    return " ".join(toks)
