"""Mapping classes acting on pi_1 of the bounded surface.

A :class:`MappingClass` is an automorphism of F_2g together with an
orientation sign.  Orientation preserving classes fix the boundary word
exactly; reversing ones send it to its inverse.  Since the basepoint lies on
the boundary, the action is faithful on the group where the boundary is fixed
pointwise; equality in the quotient by the boundary twist is equality up to
conjugation by a power of delta.

Element expressions are whitespace separated catalog tokens, each optionally
raised to an integer power with ``^``; they compose like functions, so the
rightmost token acts first::

    "A4 A3 A2 A1"      S at genus 2
    "C2^-1 A6 A5 A4"   the map taking b to b_2
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Optional

from .surface import (
    CurveError,
    boundary_twist_exponent,
    CurveRef,
    SurfaceModel,
    curve_definition,
    curve_equal,
)
from .words import Automorphism, Word, aut_compose, conjugate, inner_witness, invert, power

__all__ = [
    "ExpressionError",
    "MappingClass",
    "Catalog",
    "parse_expression",
    "twist_about",
    "conjugate_twist",
    "transported_twist",
    "resolve_name",
    "reflection",
    "mcg_equal",
    "mcg_equal_mod_boundary",
    "order_mod_boundary",
]


class ExpressionError(ValueError):
    """An element expression or catalog name could not be resolved."""


class MappingClass:
    __slots__ = ("aut", "sign", "expr")

    def __init__(self, aut: Automorphism, sign: int = 1, expr: str = "?"):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.aut = aut
        self.sign = sign
        self.expr = expr

    @property
    def rank(self):
        return self.aut.rank

    @classmethod
    def identity(cls, rank: int) -> "MappingClass":
        return cls(Automorphism.identity(rank), 1, "1")

    def __call__(self, w: Word) -> Word:
        return self.aut(w)

    def apply(self, w: Word) -> Word:
        return self.aut(w)

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        return MappingClass(
            aut_compose(self.aut, other.aut), self.sign * other.sign, f"{self.expr} {other.expr}"
        )

    def inverse(self) -> "MappingClass":
        return MappingClass(self.aut.inverse(), self.sign, f"({self.expr})^-1")

    def __pow__(self, n: int) -> "MappingClass":
        base = self if n >= 0 else self.inverse()
        out = MappingClass.identity(self.rank)
        sq = base
        k = abs(n)
        # square and multiply
        while k:
            if k & 1:
                out = out * sq
            k >>= 1
            if k:
                sq = sq * sq
        out.expr = f"({self.expr})^{n}"
        return out

    def __eq__(self, other):
        if isinstance(other, MappingClass):
            return mcg_equal(self, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.sign, self.aut.fwd))

    def __repr__(self):
        return f"MappingClass({self.expr!r}, sign={self.sign:+d})"


def mcg_equal(phi: MappingClass, psi: MappingClass) -> bool:
    """Exact equality of mapping classes (boundary fixed pointwise)."""
    if phi.rank != psi.rank or phi.sign != psi.sign:
        return False
    return phi.aut.fwd == psi.aut.fwd


def _delta_exponent(w: Word, delta: Word) -> Optional[int]:
    if not w:
        return 0
    n = len(w) // len(delta)
    if n * len(delta) != len(w):
        return None
    if power(delta, n) == w:
        return n
    if power(delta, -n) == w:
        return -n
    return None


def _boundary_power(phi: MappingClass, delta: Word) -> Optional[int]:
    w = inner_witness(phi.aut)
    if w is None:
        return None
    # phi(x) = w^-1 x w, so phi is conjugation by delta^m with w = delta^-m
    m = _delta_exponent(w, delta)
    return None if m is None else -m


def mcg_equal_mod_boundary(phi: MappingClass, psi: MappingClass, delta: Word) -> Optional[int]:
    """Return m with phi psi^-1 = conjugation by delta^m, or None."""
    if phi.sign != psi.sign or phi.rank != psi.rank:
        return None
    return _boundary_power(phi * psi.inverse(), delta)


def order_mod_boundary(phi: MappingClass, delta: Word, cap: int) -> Optional[int]:
    """Least n <= cap with phi^n a power of the boundary twist, else None."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    cur = phi
    for n in range(1, cap + 1):
        if cur.sign == 1 and _boundary_power(cur, delta) is not None:
            return n
        if n < cap:
            cur = cur * phi
    return None


_TOKEN = re.compile(r"^([A-Za-z]+\d*|T\[\w+\])(?:\^\{?(-?\d+)\}?)?$")


def parse_expression(expr: str) -> list:
    """Split an element expression into (name, exponent) pairs.

    ``T[name]`` is the positive twist about a named curve.

    >>> parse_expression("S^-1 A4 Cbar2^3 T[e_1]")
    [('S', -1), ('A4', 1), ('Cbar2', 3), ('T[e_1]', 1)]
    """
    out = []
    for tok in expr.split():
        mt = _TOKEN.match(tok)
        if not mt:
            raise ExpressionError(f"cannot parse token {tok!r}")
        name = mt.group(1)
        exp = int(mt.group(2)) if mt.group(2) is not None else 1
        out.append((name, exp))
    return out


def transported_twist(F: MappingClass, C: MappingClass) -> MappingClass:
    """Positive twist about F(c) for a twist C about c: (F C F^-1)^(sign F)."""
    out = conjugate_twist(F, C)
    if F.sign < 0:
        out = out.inverse()
    out.expr = f"twist[{F.expr} ({C.expr})]"
    return out


def conjugate_twist(F: MappingClass, C: MappingClass) -> MappingClass:
    """F C F^-1.  When F reverses orientation this is the inverse twist about F(c)."""
    out = F * C * F.inverse()
    out.expr = f"{F.expr} {C.expr} ({F.expr})^-1"
    return out


class Catalog:
    """Named elements and curves of one surface model, memoized.

    Lookups may happen from several threads; the cache only ever maps a key
    to values that compare equal, so a lost race is harmless.
    """

    def __init__(self, model: SurfaceModel):
        self.model = model
        self.g = model.genus
        self.rank = model.rank
        self._cache: dict = {}
        self._curves: dict = {}
        self._lock = threading.RLock()

    # ---- base elements -------------------------------------------------
    def _base(self, name: str) -> MappingClass:
        cover = self.model.cover
        if name == "B":
            if self.g < 2:
                raise ExpressionError("B needs genus >= 2")
            return MappingClass(cover.twist_b(), 1, "B")
        if name == "R":
            # conjugation of the disk lifted through *, followed by the
            # hyperelliptic rotation S^(2g+1): fixes every a_i, swaps b with
            # the other lift of its circle, and squares to the identity
            flip = MappingClass(cover.reflection(), -1, "R0")
            return self.element("S", 2 * self.g + 1) * flip
        k = int(name[1:])
        if self.g == 2 and k == 5:
            # the five-curve chain at genus 2 is a_1, a_2, a_3, a_4, b
            return MappingClass(cover.twist_b(), 1, "A5")
        if not 1 <= k <= self.rank:
            raise ExpressionError(f"{name} out of range at genus {self.g}")
        return MappingClass(cover.twist_a(k), 1, name)

    def identity(self) -> MappingClass:
        return MappingClass.identity(self.rank)

    def element(self, name: str, exp: int = 1) -> MappingClass:
        key = (name, exp)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if exp == 1:
            val = self._resolve(name)
        elif exp == 0:
            val = self.identity()
        elif exp == -1:
            val = self.element(name).inverse()
        elif name == "S":
            # successive powers of S are reused heavily
            step = self.element("S", 1 if exp > 0 else -1)
            prev = self.element("S", exp - 1 if exp > 0 else exp + 1)
            val = prev * step
        else:
            val = self.element(name) ** exp
        val = MappingClass(val.aut, val.sign, name if exp == 1 else f"{name}^{exp}")
        with self._lock:
            return self._cache.setdefault(key, val)

    def evaluate(self, expr) -> MappingClass:
        """Compose the tokens of an expression (string or (name, exp) list)."""
        tokens = parse_expression(expr) if isinstance(expr, str) else list(expr)
        out = self.identity()
        for name, exp in tokens:
            out = out * self.element(name, exp)
        label = expr if isinstance(expr, str) else " ".join(
            n if e == 1 else f"{n}^{e}" for n, e in tokens
        )
        return MappingClass(out.aut, out.sign, label)

    def _prod(self, expr: str) -> MappingClass:
        return self.evaluate(expr) if expr.strip() else self.identity()

    def _need(self, cond, name, why):
        if not cond:
            raise ExpressionError(f"{name} is not defined at genus {self.g}: {why}")

    def _resolve(self, name: str) -> MappingClass:
        g = self.g
        if name == "B" or name == "R" or re.fullmatch(r"A\d+", name):
            return self._base(name)
        if name == "S":
            return self._prod(" ".join(f"A{i}" for i in range(2 * g, 0, -1)))
        if name == "U":
            return self.element("S", -1)
        if name == "T":
            return self.element("S") * self.element("R")
        if name == "Td":
            m = boundary_twist_exponent(self.model.calibration)
            return MappingClass(Automorphism.inner(power(self.model.delta, m)), 1, "Td")
        mt = re.fullmatch(r"(Cbar|Dbar|C|D)(\d+)", name)
        if mt:
            kind, k = mt.group(1), int(mt.group(2))
            top = g - 1 if kind in ("C", "Cbar") else g - 2
            self._need(1 <= k <= top, name, f"index must lie in 1..{top}")
            if kind == "C":
                return self.element("S", -(2 * k - 1)) * self.element("B") * self.element("S", 2 * k - 1)
            if kind == "D":
                return self.element("S", -2 * k) * self.element("B") * self.element("S", 2 * k)
            base = self.element(kind[0] + str(k))
            return self.element("S", 2 * g + 1) * base * self.element("S", -(2 * g + 1))
        mt = re.fullmatch(r"U(\d+)", name)
        if mt:
            i = int(mt.group(1))
            return self._prod(f"Cbar{i}^-1 Dbar{i + 1}^-1")
        mt = re.fullmatch(r"T\[(\w+)\]", name)
        if mt:
            try:
                return self.twist_about_curve(mt.group(1))
            except CurveError as exc:
                raise ExpressionError(str(exc)) from None
        if name in ("B2", "E", "X", "P", "V", "W", "t1", "t2") or re.fullmatch(r"E\d", name):
            return self._composite(name)
        raise ExpressionError(f"unknown catalog name {name!r}")

    def _composite(self, name: str) -> MappingClass:
        g = self.g
        if name == "B2":
            self._need(g >= 3, name, "genus >= 3")
            return self.twist_about_curve("b_2")
        if name == "E":
            self._need(g >= 3, name, "genus >= 3")
            return self.twist_about_curve("e")
        if re.fullmatch(r"E\d", name):
            try:
                return self.twist_about_curve("e_" + name[1:])
            except CurveError as exc:
                raise ExpressionError(str(exc)) from None
        if name in ("t1", "V"):
            self._need(g >= 2, name, "needs a_4")
        if name == "t1":
            return self._prod("A2 A1 A3 A2")
        if name == "t2":
            self._need(g >= 3, name, "genus >= 3")
            return self._prod("A4 A3 A5 A4")
        if name == "V":
            return self._prod("A4 A3 A2 A1 A1 A2 A3 A4")
        if name == "W":
            self._need(g >= 3, name, "genus >= 3")
            q = self._prod("t2 A6 A5")
            return (
                self._prod("A6 A5 A4 A3 A2")
                * q.inverse()
                * self.element("B")
                * q
                * self._prod("A4 A3 A2 A1").inverse()
            )
        if name == "X":
            self._need(g >= 3, name, "genus >= 3")
            from .surface import even_thm_middle, odd_thm_middle

            if g % 2:
                x1 = f"C2 D1 B {odd_thm_middle(g)} S"
                return self._prod(f"S^3 {x1}")
            x2 = f"B D2^-1 {even_thm_middle(g)} S"
            return self._prod(f"S^4 {x2}")
        if name == "P":
            x = self.element("X")
            return x * self.element("B") * x.inverse()
        raise ExpressionError(name)

    def names(self) -> list:
        """Every catalog name that resolves at this genus, in a fixed order."""
        g = self.g
        cands = [f"A{i}" for i in range(1, 2 * g + 1)]
        cands += ["B", "S", "U", "T", "R", "Td"]
        for kind, top in (("C", g - 1), ("D", g - 2), ("Cbar", g - 1), ("Dbar", g - 2)):
            cands += [f"{kind}{k}" for k in range(1, top + 1)]
        cands += [f"U{i}" for i in range(1, g - 2)]
        cands += ["B2", "E", "E1", "E2", "E3", "E4", "X", "P", "V", "W", "t1", "t2"]
        out = []
        for n in cands:
            try:
                self.element(n)
            except (ExpressionError, CurveError):
                continue
            out.append(n)
        return out

    # ---- curves --------------------------------------------------------
    def curve(self, name: str) -> CurveRef:
        hit = self._curves.get(name)
        if hit is not None:
            return hit
        try:
            definition = curve_definition(name, self.g)
        except CurveError:
            raise
        if definition is None:
            ref = CurveRef(name, self.model.base_curves[name], None)
        else:
            expr, src = definition
            word = self.evaluate(expr)(self.curve(src).word)
            ref = CurveRef(name, word, definition)
        with self._lock:
            return self._curves.setdefault(name, ref)

    def twist_about_curve(self, name: str) -> MappingClass:
        """Positive twist about a named curve, built by transport from a base twist."""
        definition = curve_definition(name, self.g)
        if definition is None:
            if name == "b":
                return self.element("B")
            return self.element("A" + name[2:])
        expr, src = definition
        out = transported_twist(self.evaluate(expr), self.twist_about_curve(src))
        out.expr = f"twist({name})"
        return out

    def named_matches(self, word: Word) -> list:
        """Names of catalog curves freely homotopic to ``word`` (unoriented)."""
        from .surface import curve_names

        hits = []
        for n in curve_names(self.g):
            if curve_equal(self.model, self.curve(n).word, word):
                hits.append(n)
        return hits


# ---- module-level operations ------------------------------------------

def twist_about(m: SurfaceModel, c) -> MappingClass:
    """Twist about a base curve (a_1..a_2g or b)."""
    name = c.name if isinstance(c, CurveRef) else c
    if name not in m.base_curves:
        raise ExpressionError(f"{name} is not a base curve; use conjugate_twist")
    return m.catalog.twist_about_curve(name)


def resolve_name(m: SurfaceModel, name: str) -> MappingClass:
    toks = parse_expression(name)
    if len(toks) != 1:
        raise ExpressionError(f"expected a single catalog name, got {name!r}")
    return m.catalog.element(*toks[0])


def reflection(m: SurfaceModel) -> MappingClass:
    R = m.catalog.element("R")
    ident = m.catalog.identity()
    ok = (
        R.sign == -1
        and R * R == ident
        and R(m.delta) == invert(m.delta)
    )
    if not ok:
        raise AssertionError("reflection failed its certification")
    return R


@dataclass(frozen=True)
class ModBoundary:
    """Convenience wrapper binding the boundary word of a model."""

    model: SurfaceModel

    def equal(self, phi, psi):
        return mcg_equal_mod_boundary(phi, psi, self.model.delta)

    def order(self, phi, cap):
        return order_mod_boundary(phi, self.model.delta, cap)
