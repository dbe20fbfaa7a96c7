"""Free group words and automorphisms.

A word over the free group of rank ``n`` is a tuple of nonzero ints; ``i``
stands for the generator x_i and ``-i`` for its inverse.  Every word held by a
:class:`Word` is freely reduced.

>>> w = reduce([1, 2, -2, 3], rank=3)
>>> w.letters
(1, 3)
>>> str(conjugate(Word((1,), 2), Word((2,), 2)))
'x2 x1 X2'
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

__all__ = [
    "DEFAULT_MAX_LENGTH",
    "RankError",
    "WordTooLong",
    "Word",
    "reduce",
    "concat",
    "invert",
    "conjugate",
    "power",
    "cyclic_reduce",
    "cyclic_key",
    "Automorphism",
    "aut_apply",
    "aut_compose",
    "aut_equal",
    "inner_witness",
    "abelianize_word",
]

DEFAULT_MAX_LENGTH = 10**7

# module level so callers can tighten it (tests do)
max_length = DEFAULT_MAX_LENGTH


class RankError(ValueError):
    """A letter index or rank does not fit the ambient free group."""


class WordTooLong(RuntimeError):
    """Raised when a word would exceed the configured length cap."""


def _stack_reduce(letters: Iterable[int], out: Optional[list] = None) -> list:
    stack = [] if out is None else out
    push = stack.append
    pop = stack.pop
    cap = max_length
    for a in letters:
        if stack and stack[-1] == -a:
            pop()
        else:
            push(a)
            if len(stack) > cap:
                raise WordTooLong(f"word exceeds {cap} letters")
    return stack


class Word:
    """A freely reduced word in F_rank.  Immutable and hashable."""

    __slots__ = ("letters", "rank")

    def __init__(self, letters: Sequence[int] = (), rank: int = 0, *, _trusted=False):
        letters = tuple(letters)
        if not _trusted:
            for a in letters:
                if a == 0 or abs(a) > rank:
                    raise RankError(f"letter {a} out of range for rank {rank}")
            letters = tuple(_stack_reduce(letters))
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.rank == other.rank and self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __repr__(self):
        return f"Word({list(self.letters)!r}, rank={self.rank})"

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"X{-a}" for a in self.letters)

    @classmethod
    def identity(cls, rank: int) -> "Word":
        return cls((), rank, _trusted=True)

    @classmethod
    def generator(cls, i: int, rank: int) -> "Word":
        return cls((i,), rank)


def reduce(letters: Sequence[int], rank: int) -> Word:
    """Freely reduce a raw letter sequence."""
    return Word(letters, rank)


def _check_rank(*words: Word) -> int:
    rank = words[0].rank
    for w in words[1:]:
        if w.rank != rank:
            raise RankError(f"rank mismatch: {rank} vs {w.rank}")
    return rank


def concat(u: Word, v: Word) -> Word:
    rank = _check_rank(u, v)
    return Word(_stack_reduce(v.letters, list(u.letters)), rank, _trusted=True)


def invert(u: Word) -> Word:
    return Word(tuple(-a for a in reversed(u.letters)), u.rank, _trusted=True)


def conjugate(u: Word, by: Word) -> Word:
    """Return ``by * u * by^-1``."""
    rank = _check_rank(u, by)
    out = _stack_reduce(u.letters, list(by.letters))
    _stack_reduce((-a for a in reversed(by.letters)), out)
    return Word(out, rank, _trusted=True)


def power(u: Word, n: int) -> Word:
    base = u if n >= 0 else invert(u)
    out: list = []
    for _ in range(abs(n)):
        _stack_reduce(base.letters, out)
    return Word(out, u.rank, _trusted=True)


def cyclic_reduce(u: Word) -> Word:
    w = u.letters
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return Word(w[i : j + 1], u.rank, _trusted=True)


def _least_rotation(s: tuple) -> tuple:
    # Booth's algorithm
    n = len(s)
    if n == 0:
        return s
    ss = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = ss[j]
        i = f[j - k - 1]
        while i != -1 and sj != ss[k + i + 1]:
            if sj < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ss[k + i + 1]:
            if sj < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return ss[k : k + n]


def cyclic_key(u: Word) -> tuple:
    """Canonical representative of the conjugacy class of ``u`` up to inversion.

    Two words get the same key exactly when one is conjugate to the other or
    to its inverse, i.e. when they represent the same unoriented free homotopy
    class of closed curves.
    """
    c = cyclic_reduce(u).letters
    if not c:
        return ()
    inv = tuple(-a for a in reversed(c))
    return min(_least_rotation(c), _least_rotation(inv))


def abelianize_word(u: Word) -> list:
    """Exponent-sum vector of ``u`` (length = rank)."""
    v = [0] * u.rank
    for a in u.letters:
        if a > 0:
            v[a - 1] += 1
        else:
            v[-a - 1] -= 1
    return v


class Automorphism:
    """An automorphism of F_rank, stored with the images of its inverse.

    ``fwd[i]`` is the image of x_{i+1}; ``bwd[i]`` is the image of x_{i+1}
    under the inverse automorphism.  Inverses are never computed by a generic
    routine: every constructor has to supply them.
    """

    __slots__ = ("rank", "fwd", "bwd", "_table", "_inv_table")

    def __init__(self, fwd: Sequence[Word], bwd: Sequence[Word]):
        fwd = tuple(fwd)
        bwd = tuple(bwd)
        if len(fwd) != len(bwd) or not fwd:
            raise RankError("forward and backward images must cover every generator")
        rank = len(fwd)
        for w in fwd + bwd:
            if w.rank != rank:
                raise RankError(f"image of rank {w.rank} in automorphism of rank {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "fwd", fwd)
        object.__setattr__(self, "bwd", bwd)
        object.__setattr__(self, "_table", None)
        object.__setattr__(self, "_inv_table", None)

    def __setattr__(self, name, value):
        raise AttributeError("Automorphism is immutable")

    @classmethod
    def identity(cls, rank: int) -> "Automorphism":
        gens = tuple(Word.generator(i, rank) for i in range(1, rank + 1))
        return cls(gens, gens)

    @classmethod
    def inner(cls, w: Word) -> "Automorphism":
        """Conjugation u -> w u w^-1."""
        rank = w.rank
        winv = invert(w)
        fwd = tuple(conjugate(Word.generator(i, rank), w) for i in range(1, rank + 1))
        bwd = tuple(conjugate(Word.generator(i, rank), winv) for i in range(1, rank + 1))
        return cls(fwd, bwd)

    @classmethod
    def from_images(cls, fwd_letters, bwd_letters, rank: int) -> "Automorphism":
        return cls(
            [Word(w, rank) for w in fwd_letters],
            [Word(w, rank) for w in bwd_letters],
        )

    def _letter_table(self, inverse=False):
        attr = "_inv_table" if inverse else "_table"
        table = getattr(self, attr)
        if table is None:
            imgs = self.bwd if inverse else self.fwd
            table = {}
            for i, w in enumerate(imgs, start=1):
                table[i] = w.letters
                table[-i] = tuple(-a for a in reversed(w.letters))
            object.__setattr__(self, attr, table)
        return table

    def apply(self, u: Word) -> Word:
        return aut_apply(self, u)

    def apply_inverse(self, u: Word) -> Word:
        return _apply_table(self._letter_table(inverse=True), u)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.bwd, self.fwd)

    def __call__(self, u: Word) -> Word:
        return aut_apply(self, u)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return aut_compose(self, other)

    def __eq__(self, other):
        if isinstance(other, Automorphism):
            return aut_equal(self, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.fwd)

    def __repr__(self):
        imgs = ", ".join(f"x{i}->{w}" for i, w in enumerate(self.fwd, start=1))
        return f"Automorphism({imgs})"

    def total_length(self) -> int:
        return sum(len(w) for w in self.fwd)


def _apply_table(table, u: Word) -> Word:
    out: list = []
    for a in u.letters:
        _stack_reduce(table[a], out)
    return Word(out, u.rank, _trusted=True)


def aut_apply(phi: Automorphism, u: Word) -> Word:
    if u.rank != phi.rank:
        raise RankError(f"rank mismatch: word {u.rank}, automorphism {phi.rank}")
    return _apply_table(phi._letter_table(), u)


def aut_compose(phi: Automorphism, psi: Automorphism) -> Automorphism:
    """Functional composition: ``psi`` is applied first."""
    if phi.rank != psi.rank:
        raise RankError(f"rank mismatch: {phi.rank} vs {psi.rank}")
    fwd = tuple(aut_apply(phi, w) for w in psi.fwd)
    bwd = tuple(psi.apply_inverse(w) for w in phi.bwd)
    return Automorphism(fwd, bwd)


def aut_equal(phi: Automorphism, psi: Automorphism) -> bool:
    return phi.rank == psi.rank and phi.fwd == psi.fwd


def _strip_power(w: tuple, letter: int) -> tuple:
    i = 0
    while i < len(w) and abs(w[i]) == letter:
        i += 1
    return w[i:]


def _candidate(image: tuple, letter: int) -> Optional[tuple]:
    # image == v^-1 x v with v not starting with x^{+-1}; recover v
    n = len(image)
    if n % 2 == 0:
        return None
    mid = n // 2
    if image[mid] != letter:
        return None
    v = image[mid + 1 :]
    if v and abs(v[0]) == letter:
        return None
    return v


def inner_witness(phi: Automorphism) -> Optional[Word]:
    """Find ``w`` with ``phi(x_i) == w^-1 x_i w`` for every generator.

    Returns None when ``phi`` is not inner.  The answer is unique for rank at
    least 2 and is always verified before being returned.
    """
    rank = phi.rank
    if rank < 2:
        raise RankError("inner_witness needs rank >= 2")
    for i, img in enumerate(phi.fwd, start=1):
        if abelianize_word(img) != [int(j == i) for j in range(1, rank + 1)]:
            return None
    v1 = _candidate(phi.fwd[0].letters, 1)
    v2 = _candidate(phi.fwd[1].letters, 2)
    if v1 is None or v2 is None:
        return None
    # w = x1^j v1 = x2^k v2, so one of the powers is zero
    candidates = []
    if _strip_power(v1, 2) == v2:
        candidates.append(v1)
    if _strip_power(v2, 1) == v1:
        candidates.append(v2)
    for c in candidates:
        w = Word(c, rank, _trusted=True)
        winv = invert(w)
        if all(
            conjugate(Word.generator(i, rank), winv) == phi.fwd[i - 1]
            for i in range(1, rank + 1)
        ):
            return w
    return None
