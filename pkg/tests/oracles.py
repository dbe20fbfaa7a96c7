"""Brute-force reference implementations, deliberately naive."""

import itertools
import re

ALPHA = "aAbBcC"
_PAIRS = re.compile("aA|Aa|bB|Bb|cC|Cc")


def to_str(letters):
    return "".join(ALPHA[2 * (abs(a) - 1) + (a < 0)] for a in letters)


def from_str(s):
    return tuple((ALPHA.index(ch) // 2 + 1) * (-1 if ch.isupper() else 1) for ch in s)


def rewrite_reduce(s):
    """Confluent rewriting: delete cancelling pairs until none are left."""
    while True:
        t = _PAIRS.sub("", s)
        if t == s:
            return s
        s = t


_TO_ORD = str.maketrans("CBAabc", "012345")
_FROM_ORD = str.maketrans("012345", "CBAabc")
_SWAP = str.maketrans("012345", "543210")


def invert_str(s):
    return s[::-1].swapcase()


def cyclic_rewrite(s):
    s = rewrite_reduce(s)
    while len(s) >= 2 and s[0] == s[-1].swapcase():
        s = s[1:-1]
    return s


def conjugacy_class_min(s):
    """Least rotation among all rotations of the word and of its inverse."""
    c = cyclic_rewrite(s)
    if not c:
        return ""
    # translate so that string order is the order of the signed indices
    c = c.translate(_TO_ORD)
    cands = []
    for w in (c, c[::-1].translate(_SWAP)):
        cands += [w[k:] + w[:k] for k in range(len(w))]
    return min(cands).translate(_FROM_ORD)


def all_words(rank, max_len, reduced=False):
    letters = ALPHA[: 2 * rank]
    for n in range(max_len + 1):
        for tup in itertools.product(letters, repeat=n):
            s = "".join(tup)
            if reduced and _PAIRS.search(s):
                continue
            yield s
