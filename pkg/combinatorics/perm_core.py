"""
Permutations, descents, the splitting decomposition and the recursive weight.

Words are handled internally as tuples of distinct positive integers. The
public functions accept a `Permutation`, a tuple/list of ints, or text in
either of the two exchange forms ("839562147" or "10,2,1,...").
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, List, Sequence, Tuple, Union

from core.config import config
from core.errors import DomainError, PermutationError

Word = Tuple[int, ...]
PermLike = Union['Permutation', Sequence[int], str]

_SEPARATORS = re.compile(r"[,\s]+")


def format_word(word: Sequence[int]) -> str:
    """Digit string when every entry is a single digit and n <= 9, comma list otherwise."""
    if len(word) <= 9 and all(1 <= a <= 9 for a in word):
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    if _SEPARATORS.search(text):
        tokens = [t for t in _SEPARATORS.split(text) if t]
    else:
        tokens = list(text)
    try:
        word = tuple(int(t) for t in tokens)
    except ValueError:
        raise PermutationError(f"cannot parse permutation from {text!r}")
    return word


@dataclass(frozen=True)
class Permutation:
    """A word of distinct positive integers; canonical when its entries are exactly 1..n."""
    word: Word

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, 'word', word)
        if any(not isinstance(a, int) or a < 1 for a in word):
            raise PermutationError(f"entries must be positive integers: {word}")
        if len(set(word)) != len(word):
            raise PermutationError(f"duplicate entries in {word}")

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def is_canonical(self) -> bool:
        return sorted(self.word) == list(range(1, len(self.word) + 1))

    @property
    def ends_in_one(self) -> bool:
        """Membership in S'_n: canonical and ending in 1."""
        return bool(self.word) and self.word[-1] == 1 and self.is_canonical

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, index):
        return self.word[index]

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class SplitDecomposition:
    """Pieces of a word split around its minimum; `min_index` locates the singleton minimum."""
    pieces: Tuple[Word, ...]
    min_index: int

    @property
    def left(self) -> Tuple[Word, ...]:
        return self.pieces[:self.min_index]

    @property
    def minimum(self) -> int:
        return self.pieces[self.min_index][0]

    @property
    def right(self) -> Word:
        rest = self.pieces[self.min_index + 1:]
        return rest[0] if rest else ()

    def __str__(self) -> str:
        return " · ".join(format_word(piece) for piece in self.pieces)


@dataclass(frozen=True)
class PermStats:
    length: int
    descents: int
    weight: int
    disparity: int


@dataclass(frozen=True)
class TraceStep:
    """One level of the weight recursion, as in a worked hand computation."""
    depth: int
    word: Word
    completed: Word
    pieces: Tuple[Word, ...]
    weight: int

    def render(self) -> str:
        pieces = " · ".join(format_word(p) for p in self.pieces)
        return f"{'  ' * self.depth}{format_word(self.word)} -> {format_word(self.completed)} -> {pieces}  (w={self.weight})"


def as_word(p: PermLike) -> Word:
    if isinstance(p, Permutation):
        return p.word
    if isinstance(p, str):
        return Permutation.parse(p).word
    return Permutation(tuple(p)).word


def _descents(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def _flatten(word: Sequence[int]) -> Word:
    ranks = {value: rank for rank, value in enumerate(sorted(word), start=1)}
    return tuple(ranks[a] for a in word)


def _is_identity(word: Word) -> bool:
    return all(a == i for i, a in enumerate(word, start=1))


def _split(word: Word) -> SplitDecomposition:
    m = word.index(min(word))
    pieces: List[Word] = []
    left = word[:m]
    while left:
        k = left.index(max(left))
        pieces.append(left[:k + 1])
        left = left[k + 1:]
    min_index = len(pieces)
    pieces.append((word[m],))
    if m + 1 < len(word):
        pieces.append(word[m + 1:])
    return SplitDecomposition(tuple(pieces), min_index)


def descents(p: PermLike) -> int:
    """Number of positions i with a_i > a_{i+1}."""
    return _descents(as_word(p))


def flatten(w: PermLike) -> Permutation:
    """Order-isomorphic relabelling of a word of distinct integers onto 1..len(w)."""
    return Permutation(_flatten(as_word(w)))


def split(p: PermLike) -> SplitDecomposition:
    """
    Splits a word around its minimum.

    The part left of the minimum is cut repeatedly just after its running
    maximum; the minimum is its own piece; whatever is right of it is one piece.
    """
    word = as_word(p)
    if not word:
        raise PermutationError("empty permutation")
    return _split(word)


def _weight_uncached(word: Word) -> int:
    # Recursing on 1·π revisits a word of the same length, but the number of
    # entries outside the maximal ascending suffix drops by one each time.
    n = len(word)
    if n <= 1 or _is_identity(word):
        return 0
    completed = word + (n + 1,)
    total = 0
    for piece in _split(completed).pieces:
        total += _descents(piece) + _cached_weight(_flatten(piece))
    return total


_cached_weight = lru_cache(maxsize=config.weight_cache_size)(_weight_uncached)


def _weight_shortcut(word: Word) -> int:
    n = len(word)
    if n <= 1 or _is_identity(word):
        return 0
    if word[0] == 1:
        rest = tuple(a - 1 for a in word[1:])
        return _descents(rest) + _weight_shortcut(rest)
    completed = word + (n + 1,)
    total = 0
    for piece in _split(completed).pieces:
        total += _descents(piece) + _weight_shortcut(_flatten(piece))
    return total


def canonical_weight(word: Word, shortcut: bool = False) -> int:
    """Weight of an already canonical tuple; the hot path of brute-force enumeration."""
    if shortcut:
        return _weight_shortcut(word)
    return _cached_weight(word)


def weight(p: PermLike, shortcut: bool = False) -> int:
    """
    The recursive weight w(σ).

    Identity and words of length <= 1 weigh 0. Otherwise n+1 is appended, the
    result is split, and each piece contributes its descents plus the weight
    of its flattening. With `shortcut=True`, w(1·π) = w(π) + des(π) is used
    instead of the literal recursion for words starting with 1.
    """
    return canonical_weight(_flatten(as_word(p)), shortcut=shortcut)


def weight_cache_info():
    return _cached_weight.cache_info()


def clear_weight_cache():
    _cached_weight.cache_clear()


def weight_trace(p: PermLike) -> List[TraceStep]:
    """Every recursion level of the weight computation, depth-first, without the memo."""
    steps: List[TraceStep] = []

    def visit(word: Word, depth: int) -> int:
        n = len(word)
        if n <= 1 or _is_identity(word):
            return 0
        completed = word + (n + 1,)
        pieces = _split(completed).pieces
        index = len(steps)
        steps.append(TraceStep(depth, word, completed, pieces, 0))
        total = 0
        for piece in pieces:
            total += _descents(piece) + visit(_flatten(piece), depth + 1)
        steps[index] = TraceStep(depth, word, completed, pieces, total)
        return total

    visit(_flatten(as_word(p)), 0)
    return steps


def maxwt(n: int, d: int) -> int:
    """Maximum weight of a length-n permutation with d descents: d(n-d-1)."""
    if n < 1 or not 0 <= d <= n - 1:
        raise DomainError(f"descent count d={d} out of range for n={n}")
    return d * (n - d - 1)


def disparity(p: PermLike) -> int:
    word = _flatten(as_word(p))
    if not word:
        raise PermutationError("empty permutation")
    return maxwt(len(word), _descents(word)) - _cached_weight(word)


def stats(p: PermLike) -> PermStats:
    word = _flatten(as_word(p))
    if not word:
        return PermStats(0, 0, 0, 0)
    d = _descents(word)
    w = _cached_weight(word)
    return PermStats(len(word), d, w, maxwt(len(word), d) - w)


def _require_canonical(word: Word):
    if sorted(word) != list(range(1, len(word) + 1)):
        raise PermutationError(f"{format_word(word)} is not a permutation of 1..{len(word)}")


def bij_f(p: PermLike) -> Permutation:
    """π_L·1·π_R in S_n maps to π_R·(n+1)·π_L·1 in S'_{n+1}."""
    word = as_word(p)
    _require_canonical(word)
    if not word:
        raise PermutationError("empty permutation")
    n = len(word)
    i = word.index(1)
    return Permutation(word[i + 1:] + (n + 1,) + word[:i] + (1,))


def bij_g(p: PermLike) -> Permutation:
    """α_L·(n+1)·α_R·1 in S'_{n+1} maps back to α_R·1·α_L in S_n."""
    word = as_word(p)
    _require_canonical(word)
    if not word or word[-1] != 1:
        raise PermutationError(f"not in S': {format_word(word)} does not end in 1")
    body = word[:-1]
    if not body:
        return Permutation(())
    top = len(word)
    j = body.index(top)
    return Permutation(body[j + 1:] + (1,) + body[:j])


def permutations_of(n: int) -> Iterable[Word]:
    """All of S_n in lexicographic order."""
    return permutations(range(1, n + 1))
