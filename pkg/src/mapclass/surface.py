"""Combinatorial model of the genus g surface with one boundary component.

pi_1 is free on x_1..x_2g with the boundary word

    delta = [x1, x2][x3, x4] ... [x_{2g-1}, x_{2g}],   [u, v] = u v u^-1 v^-1.

The Humphries curves a_1..a_2g, b come out of the hyperelliptic construction
in ``_cover``; everything else (c_k, d_k, barred curves, b_2, e, e_i, ...)
is defined by applying catalog elements to these.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _cover
from .words import Word, abelianize_word, cyclic_key

CALIBRATIONS = {
    # name: (half twist handedness, flip delta orientation, boundary twist = conj by delta^m)
    "standard": (-1, False, 1),
    "mirror": (1, False, -1),
}
DEFAULT_CALIBRATION = "standard"


class CurveError(KeyError):
    """Unknown curve name, or a name that does not exist at this genus."""


def boundary_word(g: int) -> Word:
    rank = 2 * g
    letters = []
    for i in range(1, rank, 2):
        letters += [i, i + 1, -i, -(i + 1)]
    return Word(letters, rank)


def boundary_twist_exponent(calibration: str) -> int:
    """m such that the right twist about a boundary-parallel curve is conjugation by delta^m."""
    return CALIBRATIONS[calibration][2]


def symplectic_form(g: int) -> np.ndarray:
    J = np.zeros((2 * g, 2 * g), dtype=object)
    for i in range(g):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    return J


@dataclass(frozen=True, eq=False)
class SurfaceModel:
    genus: int
    calibration: str
    delta: Word
    base_curves: dict
    homology_form: np.ndarray = field(repr=False)
    cover: _cover.CoverModel = field(repr=False)

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def curve(self, name: str) -> Word:
        return resolve_curve(self, name).word

    @property
    def catalog(self):
        # one catalog per model; created on first use
        cat = self.__dict__.get("_catalog")
        if cat is None:
            from .engine import Catalog

            cat = Catalog(self)
            object.__setattr__(self, "_catalog", cat)
        return cat

    def pairing(self, u, v) -> int:
        """Algebraic intersection of two homology vectors under the model's form."""
        u = np.asarray(u, dtype=object)
        v = np.asarray(v, dtype=object)
        return int(u @ self.homology_form @ v)


_surfaces: dict = {}


def build_surface(g: int, calibration: str = DEFAULT_CALIBRATION) -> SurfaceModel:
    if not isinstance(g, int) or g < 1:
        raise ValueError(f"genus must be a positive integer, got {g!r}")
    if calibration not in CALIBRATIONS:
        raise ValueError(f"unknown calibration {calibration!r}; choose from {sorted(CALIBRATIONS)}")
    key = (g, calibration)
    if key in _surfaces:
        return _surfaces[key]
    hand, flip, _ = CALIBRATIONS[calibration]
    cover = _cover.CoverModel(g, hand, flip)
    delta = boundary_word(g)
    if cover.boundary() != delta:
        raise AssertionError("boundary word of the cover does not match delta")
    curves = {f"a_{i}": cover.curve_a(i) for i in range(1, 2 * g + 1)}
    if g >= 2:
        curves["b"] = cover.curve_b()
    model = SurfaceModel(g, calibration, delta, curves, symplectic_form(g), cover)
    return _surfaces.setdefault(key, model)


def curve_equal(m: SurfaceModel, u: Word, v: Word) -> bool:
    """Unoriented free homotopy: equal up to conjugacy and inversion."""
    return cyclic_key(u) == cyclic_key(v)


def homology_class(m: SurfaceModel, u: Word) -> list:
    return abelianize_word(u)


@dataclass(frozen=True)
class CurveRef:
    name: str
    word: Word
    # (element expression, name of the curve it is applied to); None for base curves
    definition: Optional[tuple]

    def __str__(self):
        if self.definition is None:
            return f"{self.name} = {self.word}"
        expr, src = self.definition
        return f"{self.name} = {expr} ({src})"


def _chain(pattern_pairs) -> str:
    return " ".join(t for pair in pattern_pairs for t in pair)


def odd_thm_middle(g: int) -> str:
    """D3^-1 C4^-1 D5^-1 C6^-1 ... D_{g-2}^-1 C_{g-1}^-1 (empty at g = 3)."""
    return _chain((f"D{2 * j + 1}^-1", f"C{2 * j + 2}^-1") for j in range(1, (g - 1) // 2))


def even_thm_middle(g: int) -> str:
    """C3^-1 D4^-1 C5^-1 ... D_{g-2}^-1 C_{g-1}^-1 (just C3^-1 at g = 4)."""
    toks = [f"C{2 * j + 1}^-1 D{2 * j + 2}^-1" for j in range(1, (g - 2) // 2)]
    toks.append(f"C{g - 1}^-1")
    return " ".join(toks)


def curve_definition(name: str, g: int) -> Optional[tuple]:
    """Defining expression of a named curve, or None for base curves.

    Raises CurveError when the name does not exist at genus ``g``.
    """
    rank = 2 * g

    def need(cond, why):
        if not cond:
            raise CurveError(f"{name} is not defined at genus {g}: {why}")

    if name.startswith("a_"):
        k = _index(name, "a_")
        if k == 0:
            return ("S", "a_1")
        need(1 <= k <= rank, "index out of range")
        return None
    if name == "b":
        need(g >= 2, "b needs genus >= 2")
        return None
    for prefix, lo_hi in (("cbar_", g - 1), ("dbar_", g - 2), ("c_", g - 1), ("d_", g - 2)):
        if name.startswith(prefix):
            k = _index(name, prefix)
            need(1 <= k <= lo_hi, f"index must lie in 1..{lo_hi}")
            if prefix == "c_":
                return (f"S^{-(2 * k - 1)}", "b")
            if prefix == "d_":
                return (f"S^{-2 * k}", "b")
            return (f"S^{2 * g + 1}", f"{prefix[0]}_{k}")
    if name == "b_2":
        need(g >= 3, "needs a_6")
        return ("C2^-1 A6 A5 A4", "b")
    if name == "e":
        need(g >= 3, "needs a_5 and c_1")
        return ("A2 A1 A4^-1 C1", "a_5")
    if name == "alpha":
        need(g >= 3 and g % 2 == 1, "odd genus >= 3 only")
        return (f"B {odd_thm_middle(g)} S".replace("  ", " "), "b")
    if name.startswith("e_"):
        k = _index(name, "e_")
        need(g >= 3 and g % 2 == 1 and 1 <= k <= 4, "odd genus >= 3, index 1..4")
        if k == 1:
            us = " ".join(f"U{i}" for i in range(2, g - 2, 2))
            return (f"{us} Cbar{g - 1}^-1 T".strip(), "b")
        if k == 2:
            ubar = " ".join(f"Cbar{i} D{i}" for i in range(2, g - 2, 2))
            return (f"C1 {ubar} Cbar{g - 1} T^-1".replace("  ", " "), f"cbar_{g - 1}")
        if k == 3:
            return ("E1^-1 Cbar2^-1", "e_2")
        return ("T^3", "e_3")
    if name == "x":
        need(g >= 4, "x = V S(b) needs genus >= 4")
        middle = even_thm_middle(g) if g % 2 == 0 else odd_thm_middle(g)
        return (f"{middle} S", "b")
    if name == "y":
        need(g >= 3, "genus >= 3")
        return ("B S", "b")
    if name == "z":
        need(g >= 3, "genus >= 3")
        return ("S^2", "y")
    raise CurveError(f"unknown curve name {name!r}")


def _index(name: str, prefix: str) -> int:
    try:
        return int(name[len(prefix):])
    except ValueError:
        raise CurveError(f"bad curve name {name!r}") from None


def curve_names(g: int) -> list:
    """Every curve name that exists at genus g, in a fixed order."""
    names = [f"a_{i}" for i in range(0, 2 * g + 1)] + ["b"]
    names += [f"c_{k}" for k in range(1, g)] + [f"d_{k}" for k in range(1, g - 1)]
    names += [f"cbar_{k}" for k in range(1, g)] + [f"dbar_{k}" for k in range(1, g - 1)]
    names += ["b_2", "e", "alpha"] + [f"e_{i}" for i in range(1, 5)] + ["x", "y", "z"]
    out = []
    for n in names:
        try:
            curve_definition(n, g)
        except CurveError:
            continue
        out.append(n)
    return out


def resolve_curve(m: SurfaceModel, name: str, g: Optional[int] = None) -> CurveRef:
    if g is not None and g != m.genus:
        raise CurveError(f"genus {g} does not match the model (genus {m.genus})")
    return m.catalog.curve(name)
