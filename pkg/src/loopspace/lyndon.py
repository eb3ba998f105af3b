"""
Lyndon words, their standard bracketing, and Witt counts.

Letters are 1-based: the alphabet is x_1 < x_2 < ... < x_m. A word is a
Lyndon word when it is strictly smaller than each of its proper rotations;
Lyndon words index a basis of the free Lie algebra.
"""

import math
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple, Union

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from src.errors import PolyflagError

Word = Tuple[int, ...]
Bracket = Union[int, Tuple["Bracket", "Bracket"]]


class FactorLimitError(PolyflagError):
    """Enumeration would produce more basis elements than allowed."""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"more than {limit} Lie basis elements below the cutoff; lower the cutoff")


@dataclass(frozen=True)
class LieBasisElement:
    word: Word
    multidegree: Tuple[int, ...]

    @classmethod
    def from_word(cls, word: Sequence[int], m: int) -> "LieBasisElement":
        alpha = [0] * m
        for letter in word:
            alpha[letter - 1] += 1
        return cls(tuple(word), tuple(alpha))

    @property
    def length(self) -> int:
        return len(self.word)

    def weight(self, weights: Sequence[int]) -> int:
        return sum(a * w for a, w in zip(self.multidegree, weights))

    def __str__(self) -> str:
        return "".join(f"x{letter}" for letter in self.word)


def is_lyndon(word: Sequence[int]) -> bool:
    """Rotation-minimality check (quadratic; for testing and validation)."""
    word = tuple(word)
    if not word:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_words(m: int, max_weight: int, weights: Optional[Sequence[int]] = None,
                 limit: Optional[int] = None) -> List[LieBasisElement]:
    """
    All Lyndon words on m letters with Σ α_i w_i <= max_weight, in lexicographic order.

    Depth-first over prenecklaces: a prefix with period p extends by the
    letter p positions back (period kept) or by any larger letter (period
    becomes the new length); it is a Lyndon word when its period equals its
    length. Weights must be positive.
    """
    if m < 1 or max_weight < 1:
        raise ValueError(f"need m >= 1 and max_weight >= 1, got m={m}, max_weight={max_weight}")
    weights = tuple(weights) if weights is not None else (1,) * m
    if len(weights) != m or any(w < 1 for w in weights):
        raise ValueError(f"need {m} positive letter weights, got {list(weights)}")

    found: List[LieBasisElement] = []
    word: List[int] = []

    def extend(period: int, weight: int) -> None:
        t = len(word)
        if t and period == t:
            if limit is not None and len(found) >= limit:
                raise FactorLimitError(limit)
            found.append(LieBasisElement.from_word([letter + 1 for letter in word], m))
        start = word[t - period] if t else 0
        for letter in range(start, m):
            total = weight + weights[letter]
            if total > max_weight:
                continue
            word.append(letter)
            extend(period if t and letter == start else t + 1, total)
            word.pop()

    extend(0, 0)
    return found


def standard_factorization(word: Sequence[int]) -> Tuple[Word, Word]:
    """w = uv with v the longest proper suffix that is a Lyndon word."""
    word = tuple(word)
    if len(word) < 2:
        raise ValueError("a single letter has no standard factorization")
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError(f"{word} has no proper Lyndon suffix")


def lyndon_bracket(word: Sequence[int]) -> Bracket:
    """Nested pairs [u, v] from the standard factorization; letters are leaves."""
    word = tuple(word)
    if not is_lyndon(word):
        raise ValueError(f"{list(word)} is not a Lyndon word")
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return lyndon_bracket(u), lyndon_bracket(v)


def format_bracket(bracket: Bracket, symbol: str = "x") -> str:
    if isinstance(bracket, int):
        return f"{symbol}{bracket}"
    left, right = bracket
    return f"[{format_bracket(left, symbol)},{format_bracket(right, symbol)}]"


def _multinomial(parts: Sequence[int]) -> int:
    return math.factorial(sum(parts)) // math.prod(math.factorial(p) for p in parts)


def witt_count(m: int, alpha: Sequence[int]) -> int:
    """
    Number of Lyndon words with multidegree α:
        (1/|α|) Σ_{d | gcd α} μ(d) · multinomial(|α|/d; α/d)
    """
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise ValueError(f"multidegree {list(alpha)} does not have {m} entries")
    if any(a < 0 for a in alpha) or not any(alpha):
        raise ValueError(f"multidegree must be non-negative and non-zero, got {list(alpha)}")
    n = sum(alpha)
    g = reduce(math.gcd, alpha)
    total = sum(mobius(d) * _multinomial([a // d for a in alpha]) for d in divisors(g))
    return int(total) // n


def witt_number(m: int, length: int) -> int:
    """Number of Lyndon words of a given length on m letters."""
    return int(sum(mobius(length // d) * m ** d for d in divisors(length))) // length
