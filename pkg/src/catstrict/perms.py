"""Permutations in 1-indexed one-line notation.

A permutation of {1..n} is the tuple (σ(1), ..., σ(n)).  Products compose
right to left: (στ)(i) = σ(τ(i)).
"""
from functools import lru_cache
from itertools import permutations

from .errors import ArityError


def identity_perm(n):
    return tuple(range(1, n + 1))


def is_perm(p):
    return isinstance(p, tuple) and sorted(p) == list(range(1, len(p) + 1))


def perm_compose(s, t):
    if len(s) != len(t):
        raise ArityError(f"cannot compose permutations of sizes {len(s)} and {len(t)}")
    return tuple(s[t[i] - 1] for i in range(len(t)))


def perm_inverse(s):
    inv = [0] * len(s)
    for i, v in enumerate(s, 1):
        inv[v - 1] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def all_perms(n):
    """Every permutation of {1..n}, lexicographic, so the identity comes first."""
    return tuple(permutations(range(1, n + 1)))


def act(s, xs):
    """Left action on tuples: the entry in position i moves to position s(i)."""
    xs = tuple(xs)
    if len(s) != len(xs):
        raise ArityError(f"permutation of size {len(s)} acting on {len(xs)} entries")
    out = [None] * len(xs)
    for i, v in enumerate(s):
        out[v - 1] = xs[i]
    return tuple(out)


def block_sum(*taus):
    out = []
    offset = 0
    for t in taus:
        out.extend(v + offset for v in t)
        offset += len(t)
    return tuple(out)


def block_permutation(s, js):
    """Permute consecutive blocks of sizes js the way s permutes letters.

    Block r (of size js[r-1]) ends up in position s(r) of the new layout; the
    letters inside a block keep their relative order.
    """
    js = tuple(js)
    if len(s) != len(js):
        raise ArityError(f"{len(js)} blocks for a permutation of size {len(s)}")
    k = len(s)
    inv = perm_inverse(s)
    new_start = {}
    pos = 0
    for slot in range(1, k + 1):
        r = inv[slot - 1]
        new_start[r] = pos
        pos += js[r - 1]
    out = []
    for r in range(1, k + 1):
        out.extend(new_start[r] + i + 1 for i in range(js[r - 1]))
    return tuple(out)


def transposition(n, i):
    """The adjacent transposition swapping i and i+1 (1-indexed)."""
    if not 1 <= i < n:
        raise ArityError(f"no adjacent transposition s_{i} in Σ_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def reduced_word(p):
    """Indices i_1..i_l with p = s_{i_1} ... s_{i_l}, found by bubble sort."""
    p = list(p)
    word = []
    # sorting by swaps on the right gives p s_{j_1}...s_{j_l} = e
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return tuple(reversed(word))


def all_reduced_words(p):
    """Every reduced word of p (small n only)."""
    n = len(p)
    length = len(reduced_word(p))
    out = []

    def walk(q, acc):
        if len(acc) == length:
            if q == identity_perm(n):
                out.append(tuple(reversed(acc)))
            return
        for i in range(1, n):
            if q[i - 1] > q[i]:
                q2 = list(q)
                q2[i - 1], q2[i] = q2[i], q2[i - 1]
                walk(tuple(q2), acc + [i])

    walk(tuple(p), [])
    return tuple(sorted(set(out)))


def word_to_perm(n, word):
    p = identity_perm(n)
    for i in word:
        p = perm_compose(p, transposition(n, i))
    return p
