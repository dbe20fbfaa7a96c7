"""Action on first homology.

Matrices are numpy arrays of Python ints (dtype=object) so that powers never
overflow.  The representation is only a certificate: two mapping classes with
the same matrix can still differ (Torelli group), so nothing here decides
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .words import Automorphism, abelianize_word


def aut_matrix(aut: Automorphism) -> np.ndarray:
    """Column i is the exponent-sum vector of the image of x_{i+1}."""
    cols = [abelianize_word(w) for w in aut.fwd]
    return np.array(cols, dtype=object).T


@dataclass(frozen=True, eq=False)
class SympMatrix:
    entries: np.ndarray
    genus: int
    sign: int = 1

    def __matmul__(self, other: "SympMatrix") -> "SympMatrix":
        return SympMatrix(self.entries.dot(other.entries), self.genus, self.sign * other.sign)

    def __eq__(self, other):
        if isinstance(other, SympMatrix):
            return np.array_equal(self.entries, other.entries)
        return NotImplemented

    def is_identity(self) -> bool:
        return np.array_equal(self.entries, identity_matrix(2 * self.genus))

    def preserves_form(self, J: np.ndarray) -> bool:
        """M^T J M == sign * J."""
        M = self.entries
        return np.array_equal(M.T.dot(J).dot(M), self.sign * J)


def identity_matrix(n: int) -> np.ndarray:
    return np.identity(n, dtype=int).astype(object)


def abelianize(phi) -> SympMatrix:
    """Homology matrix of a MappingClass."""
    return SympMatrix(aut_matrix(phi.aut), phi.rank // 2, phi.sign)


def matrix_order(M: SympMatrix, cap: int) -> Optional[int]:
    if cap < 1:
        raise ValueError("cap must be >= 1")
    ident = identity_matrix(M.entries.shape[0])
    P = M.entries
    for n in range(1, cap + 1):
        if np.array_equal(P, ident):
            return n
        P = P.dot(M.entries)
    return None


def transvection(c, J: np.ndarray, eps: int) -> np.ndarray:
    """Matrix of v -> v + eps * <v, c> c, with <u, v> = u^T J v."""
    c = np.asarray(c, dtype=object).reshape(-1, 1)
    n = c.shape[0]
    # <v, c> = v^T J c, as a row functional applied to v
    functional = (J.dot(c)).T
    return identity_matrix(n) + eps * c.dot(functional)
