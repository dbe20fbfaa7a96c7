"""Hyperelliptic construction of the base twists.

The surface of genus g with one boundary circle is the branched double cover
of a disk D with 2g+1 branch points p_1..p_n laid out left to right, the
basepoint * sitting on the boundary of D to the left of them.  Writing s_k
for the loop that runs below the points to p_k and turns counterclockwise
round it, pi_1 of the orbifold is the free product of n copies of Z/2 on the
s_k, and pi_1 of the cover is the index-two subgroup of even words, free on
y_i = s_i s_{i+1}.

* the twist about a_i is the lift of the half twist exchanging p_i, p_{i+1};
* b is the lift (through the sheet containing *) of a circle C around
  p_1..p_4; its twist inserts a loop around C at every crossing in that
  sheet;
* the reflection fixing * is complex conjugation of D.

Everything is finally transported to a basis x_1..x_2g in which the boundary
reads [x_1,x_2]...[x_{2g-1},x_{2g}].
"""

from __future__ import annotations

from functools import lru_cache

from .words import Automorphism, Word, conjugate, invert


def orb_reduce(letters) -> list:
    out: list = []
    for a in letters:
        if out and out[-1] == a:
            out.pop()
        else:
            out.append(a)
    return out


def orb_to_y(letters, rank: int) -> Word:
    """Rewrite an even orbifold word in the y basis."""
    w = orb_reduce(letters)
    if len(w) % 2:
        raise ValueError("odd orbifold word does not lift to a closed loop")
    out = []
    for a, b in zip(w[0::2], w[1::2]):
        if a < b:
            out.extend(range(a, b))
        else:
            out.extend(-j for j in range(a - 1, b - 1, -1))
    return Word(out, rank)


def _y_letters(j: int):
    return (j, j + 1) if j > 0 else (-j + 1, -j)


def _orb_aut_on_y(images: dict, rank: int) -> list:
    """Images of y_1..y_rank under an orbifold automorphism s_k -> images[k]."""
    out = []
    for j in range(1, rank + 1):
        out.append(orb_to_y(list(images[j]) + list(images[j + 1]), rank))
    return out


def half_twist_images(i: int, n: int, hand: int) -> dict:
    """Artin half twist on s_i, s_{i+1}; both choices fix s_n ... s_1."""
    img = {k: (k,) for k in range(1, n + 1)}
    if hand > 0:
        img[i] = (i, i + 1, i)
        img[i + 1] = (i,)
    else:
        img[i] = (i + 1,)
        img[i + 1] = (i + 1, i, i + 1)
    return img


def reflection_images(n: int) -> dict:
    return {k: tuple(range(1, k)) + (k,) + tuple(range(k - 1, 0, -1)) for k in range(1, n + 1)}


def _loop_c(eps: int) -> tuple:
    # counterclockwise round p_1..p_4 is s_4 s_3 s_2 s_1
    return (4, 3, 2, 1) if eps > 0 else (1, 2, 3, 4)


def b_twist_orbifold(word, eps: int) -> list:
    """Insert the loop round C at each crossing lying in sheet 0."""
    out = []
    sheet = 0
    for k in word:
        if k <= 4:
            if sheet == 0:
                out.extend(_loop_c(eps))
            out.append(k)
            sheet ^= 1
            if sheet == 0:
                out.extend(_loop_c(-eps))
        else:
            out.append(k)
            sheet ^= 1
    return out


def b_twist_on_y(rank: int, eps: int) -> list:
    return [orb_to_y(b_twist_orbifold(_y_letters(j), eps), rank) for j in range(1, rank + 1)]


@lru_cache(maxsize=None)
def basis_change(g: int):
    """Images of x_j in the y basis, and of y_j in the x basis (as letter tuples)."""
    rank = 2 * g
    if g == 0:
        return (), ()
    prev_x, prev_y = basis_change(g - 1)
    yl = Word((rank,), rank)
    ylinv = invert(yl)
    x_in_y = [conjugate(Word(w, rank), ylinv) for w in prev_x]
    x_in_y.append(ylinv)
    x_in_y.append(Word(tuple(range(1, rank, 2)), rank))
    # inverse map
    xa = Word((rank - 1,), rank)
    xainv = invert(xa)
    y_in_x = [conjugate(Word(w, rank), xainv) for w in prev_y]
    odd = Word((), rank)
    for j in range(1, rank - 2, 2):
        odd = odd * y_in_x[j - 1]
    y_in_x.append(invert(odd) * Word((rank,), rank))
    y_in_x.append(xainv)
    return tuple(w.letters for w in x_in_y), tuple(w.letters for w in y_in_x)


def handle_flip(g: int):
    """Automorphism taking [x1,x2]...[x_{2g-1},x_{2g}] to its inverse; an involution."""
    rank = 2 * g
    imgs = []
    for j in range(1, rank + 1):
        i = (j + 1) // 2
        target = 2 * (g - i) + 2 if j % 2 else 2 * (g - i) + 1
        imgs.append(Word((target,), rank))
    return Automorphism(imgs, imgs)


class CoverModel:
    """Base twists, base curves and the reflection for one calibration."""

    def __init__(self, g: int, hand: int = 1, flip: bool = False):
        self.g = g
        self.rank = 2 * g
        self.n = 2 * g + 1
        self.hand = hand
        self.flip = flip
        x_in_y, y_in_x = basis_change(g)
        rank = self.rank
        self._x_in_y = [Word(w, rank) for w in x_in_y]
        self._y_to_x = Automorphism([Word(w, rank) for w in y_in_x], [Word(w, rank) for w in x_in_y])
        if flip:
            self._flip = handle_flip(g)

    def _to_x(self, w: Word) -> Word:
        w = self._y_to_x(w)
        return self._flip(w) if self.flip else w

    def _from_x(self, w: Word) -> Word:
        if self.flip:
            w = self._flip(w)
        return self._y_to_x.apply_inverse(w)

    def transport(self, fwd_y, bwd_y) -> Automorphism:
        """Conjugate an automorphism given on the y basis into the x basis."""
        rank = self.rank
        ay = Automorphism(fwd_y, bwd_y)
        fwd = [self._to_x(ay(self._from_x(Word.generator(j, rank)))) for j in range(1, rank + 1)]
        bwd = [self._to_x(ay.apply_inverse(self._from_x(Word.generator(j, rank)))) for j in range(1, rank + 1)]
        return Automorphism(fwd, bwd)

    def twist_a(self, i: int) -> Automorphism:
        fwd = _orb_aut_on_y(half_twist_images(i, self.n, self.hand), self.rank)
        bwd = _orb_aut_on_y(half_twist_images(i, self.n, -self.hand), self.rank)
        return self.transport(fwd, bwd)

    def twist_b(self) -> Automorphism:
        fwd = b_twist_on_y(self.rank, -self.hand)
        bwd = b_twist_on_y(self.rank, self.hand)
        return self.transport(fwd, bwd)

    def reflection(self) -> Automorphism:
        imgs = _orb_aut_on_y(reflection_images(self.n), self.rank)
        return self.transport(imgs, imgs)

    def curve_a(self, i: int) -> Word:
        return self._to_x(Word((i,), self.rank))

    def curve_b(self) -> Word:
        return self._to_x(orb_to_y(_loop_c(1), self.rank))

    def boundary(self) -> Word:
        return self._to_x(orb_to_y(list(range(self.n, 0, -1)) * 2, self.rank))
