"""Binary words avoiding k consecutive 1's, and the counts that go with them.

A word of length n is valid for a parameter k >= 2 when no run of 1's
reaches length k.  The number of valid words of length n is the
generalized Fibonacci number F(n+2, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def _as_bits(bits: Iterable[int] | str) -> tuple[int, ...]:
    if isinstance(bits, str):
        out = []
        for ch in bits:
            if ch not in "01":
                raise ValueError(f"invalid character {ch!r} in word")
            out.append(int(ch))
        return tuple(out)
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError("word letters must be 0 or 1")
    return out


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"avoidance parameter k must be >= 2, got {k}")


def is_kbonacci(bits: Iterable[int] | str, k: int) -> bool:
    """True iff no run of 1's in `bits` has length >= k."""
    _check_k(k)
    run = 0
    for b in _as_bits(bits):
        run = run + 1 if b else 0
        if run >= k:
            return False
    return True


@dataclass(frozen=True)
class Word:
    """An immutable binary word together with the k it was validated against."""

    bits: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", _as_bits(self.bits))
        if not is_kbonacci(self.bits, self.k):
            raise ValueError(f"word {self.text!r} contains {self.k} consecutive 1's")

    @classmethod
    def from_text(cls, text: str, k: int) -> "Word":
        return cls(_as_bits(text), k)

    @property
    def text(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.text

    def ones_runs(self) -> list[int]:
        """Lengths of the maximal runs of 1's, left to right."""
        runs = []
        run = 0
        for b in self.bits:
            if b:
                run += 1
            elif run:
                runs.append(run)
                run = 0
        if run:
            runs.append(run)
        return runs


def reverse(w: Word) -> Word:
    """The reversed word; validity under the same k is preserved."""
    return Word(w.bits[::-1], w.k)


def generalized_fibonacci(n: int, k: int) -> int:
    """F(n, k) with F(n, k) = sum of the previous k values, F(1, k) = 1
    and F(n, k) = 0 for n <= 0.  Exact for any n (arbitrary precision)."""
    _check_k(k)
    if n <= 0:
        return 0
    # sliding window over the last k values, oldest first
    window = [0] * (k - 1) + [1]  # F(2-k..0) = 0, F(1) = 1
    for _ in range(n - 1):
        window.append(sum(window))
        window.pop(0)
    return window[-1]


def count_words(n: int, k: int) -> int:
    """Number of valid words of length n, i.e. F(n+2, k)."""
    _check_k(k)
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    return generalized_fibonacci(n + 2, k)


def iter_words(n: int, k: int) -> Iterator[Word]:
    """Yield all valid words of length n in lexicographic order (0 < 1).

    Backtracking never extends a prefix whose trailing run of 1's has
    already reached k-1, so invalid words are not materialized.
    """
    _check_k(k)
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    prefix: list[int] = []

    def rec(run: int) -> Iterator[Word]:
        if len(prefix) == n:
            yield Word(tuple(prefix), k)
            return
        prefix.append(0)
        yield from rec(0)
        prefix.pop()
        if run + 1 < k:
            prefix.append(1)
            yield from rec(run + 1)
            prefix.pop()

    yield from rec(0)


def enumerate_words(n: int, k: int) -> list[Word]:
    """All valid words of length n, lexicographically sorted."""
    return list(iter_words(n, k))
