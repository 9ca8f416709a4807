"""Permutations and the two stack-sorting operators.

Permutations are words over {1..n} in one-line notation, held as tuples of
ints. Positions are 1-based throughout the public API, matching the usual
convention that ``position(v)`` is the slot of value ``v`` in the word.

Two sorting operators act on words:

- stack sort ``S``, defined by the recursion S(LnR) = S(L)S(R)n where n is
  the largest value of the word, or equivalently by one pass through a
  stack that keeps smaller elements above larger ones;
- revstack sort ``T``, defined by T(LnR) = T(R)T(L)n, equivalently
  T = S o rev (feed the word into the stack from the right end).

Both implementations of S are kept: the recursion is the reference, the
stack-machine simulation is the operational witness, and the test suite
cross-checks them exhaustively.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def is_permutation(word: Sequence[int]) -> bool:
    """Check that word is a permutation of {1..n} in one-line notation.

    >>> is_permutation((4, 2, 5, 1, 3))
    True
    >>> is_permutation((1, 1, 2))
    False
    """
    return sorted(word) == list(range(1, len(word) + 1))


def check_permutation(word: Iterable[int]) -> Word:
    """Return word as a tuple, raising ValueError if it is not a permutation."""
    w = tuple(word)
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def is_identity(word: Sequence[int]) -> bool:
    return all(v == i for i, v in enumerate(word, start=1))


def positions(word: Sequence[int]) -> dict[int, int]:
    """Map each value to its 1-based position in the word."""
    return {v: i for i, v in enumerate(word, start=1)}


def parse_permutation(text: str) -> Word:
    """Parse a permutation from text.

    Accepts space-separated values ("4 2 5 1 3") always, and a compact
    digit string ("42513") when n <= 9.

    >>> parse_permutation("4 2 5 1 3")
    (4, 2, 5, 1, 3)
    >>> parse_permutation("42513")
    (4, 2, 5, 1, 3)
    """
    text = text.strip()
    if not text:
        return ()
    parts = text.split()
    if len(parts) == 1 and len(parts[0]) > 1:
        if not parts[0].isdigit():
            raise ValueError(f"cannot parse permutation from {text!r}")
        word = tuple(int(ch) for ch in parts[0])
        if len(word) > 9:
            raise ValueError("compact digit form only supports n <= 9")
    else:
        try:
            word = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
    return check_permutation(word)


def format_permutation(word: Sequence[int]) -> str:
    """One-line output form: space-separated values."""
    return " ".join(str(v) for v in word)


def reverse(word: Sequence[int]) -> Word:
    """Reverse the word.  An involution; des(w) + des(reverse(w)) = n - 1."""
    return tuple(reversed(word))


def stack_sort(word: Sequence[int]) -> Word:
    """Stack sort by the reference recursion S(LnR) = S(L)S(R)n.

    >>> stack_sort((4, 2, 5, 1, 3))
    (2, 4, 1, 3, 5)
    """
    w = tuple(word)
    if len(w) <= 1:
        return w
    i = w.index(max(w))
    return stack_sort(w[:i]) + stack_sort(w[i + 1:]) + (w[i],)


def stack_sort_sim(word: Sequence[int]) -> Word:
    """Stack sort by simulating the physical stack.

    An element may sit above another in the stack only if it is smaller,
    so the stack is popped while its top is less than the incoming value.

    >>> stack_sort_sim((4, 2, 5, 1, 3))
    (2, 4, 1, 3, 5)
    """
    out: list[int] = []
    stack: list[int] = []
    for x in word:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def revstack_sort(word: Sequence[int]) -> Word:
    """Revstack sort T = S o rev, computed by the recursion T(LnR) = T(R)T(L)n.

    >>> revstack_sort((4, 2, 5, 1, 3))
    (1, 3, 2, 4, 5)
    """
    w = tuple(word)
    if len(w) <= 1:
        return w
    i = w.index(max(w))
    return revstack_sort(w[i + 1:]) + revstack_sort(w[:i]) + (w[i],)


def revstack_sort_sim(word: Sequence[int]) -> Word:
    """Revstack sort by feeding the word into the stack from its right end."""
    out: list[int] = []
    stack: list[int] = []
    for x in reversed(word):
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def descents(word: Sequence[int]) -> int:
    """Number of positions i with w_i > w_{i+1}.  Undefined for the empty word.

    >>> descents((4, 2, 5, 1, 3))
    2
    """
    if len(word) == 0:
        raise ValueError("descent count is undefined for the empty permutation")
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def inversions(word: Sequence[int]) -> set[tuple[int, int]]:
    """The set of value pairs (b, a) with b > a and b preceding a.

    >>> sorted(inversions((2, 1, 3)))
    [(2, 1)]
    """
    out = set()
    for i, b in enumerate(word):
        for a in word[i + 1:]:
            if b > a:
                out.add((b, a))
    return out


def iterate_revstack(word: Sequence[int], t: int) -> Word:
    """Apply T exactly t times."""
    if t < 0:
        raise ValueError("iteration count must be non-negative")
    w = tuple(word)
    for _ in range(t):
        w = revstack_sort_sim(w)
    return w


def iterate_stack(word: Sequence[int], t: int) -> Word:
    """Apply S exactly t times."""
    if t < 0:
        raise ValueError("iteration count must be non-negative")
    w = tuple(word)
    for _ in range(t):
        w = stack_sort_sim(w)
    return w


def deg_revstack(word: Sequence[int]) -> int:
    """Minimal t with T^t(word) = identity.  Always <= n - 1.

    >>> deg_revstack((2, 4, 1, 3, 5))
    3
    """
    w = tuple(word)
    d = 0
    while not is_identity(w):
        w = revstack_sort_sim(w)
        d += 1
    return d


def deg_stack(word: Sequence[int]) -> int:
    """Minimal t with S^t(word) = identity.  Always <= n - 1."""
    w = tuple(word)
    d = 0
    while not is_identity(w):
        w = stack_sort_sim(w)
        d += 1
    return d
