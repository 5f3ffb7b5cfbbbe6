"""Run structure of paperfolding words and factors of their run-length words.

A run is a maximal block of consecutive equal symbols.  For a code with
t >= 1 effective instructions the word splits into exactly 2**(t-1) runs,
each of length 1, 2, or 3; the run-length word (values in {1,2,3}) is the
object analyzed by the factor operations in the second half of this module.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterator, Sequence

import numpy as np

from .foldcore import (
    FoldCode,
    InvalidCodeError,
    PaperfoldingWord,
    as_code,
    paperfolding_term,
    paperfolding_word,
)

WordLike = "PaperfoldingWord | Sequence[int] | np.ndarray"


def _word_array(w) -> np.ndarray:
    if isinstance(w, PaperfoldingWord):
        return w.array
    if isinstance(w, np.ndarray):
        return w
    return np.asarray(list(w), dtype=np.int64)


class RunDecomposition:
    """Lengths, starts, and ends of the maximal runs of a word, 1-indexed.

    Backed by numpy arrays so family-wide sweeps stay cheap; the accessor
    methods hand out plain ints.  Run k is the k-th maximal block, k >= 1.
    """

    __slots__ = ("_lengths", "_starts", "_ends")

    def __init__(self, lengths: np.ndarray, starts: np.ndarray, ends: np.ndarray):
        if not (len(lengths) == len(starts) == len(ends)):
            raise ValueError("component sequences must have equal length")
        self._lengths = lengths
        self._starts = starts
        self._ends = ends
        for a in (lengths, starts, ends):
            a.setflags(write=False)

    @property
    def lengths(self) -> np.ndarray:
        return self._lengths

    @property
    def starts(self) -> np.ndarray:
        return self._starts

    @property
    def ends(self) -> np.ndarray:
        return self._ends

    @property
    def count(self) -> int:
        return int(len(self._lengths))

    def length(self, k: int) -> int:
        self._check(k)
        return int(self._lengths[k - 1])

    def start(self, k: int) -> int:
        self._check(k)
        return int(self._starts[k - 1])

    def end(self, k: int) -> int:
        self._check(k)
        return int(self._ends[k - 1])

    def _check(self, k: int) -> None:
        if not 1 <= k <= len(self._lengths):
            raise IndexError(f"run index {k} outside 1..{len(self._lengths)}")

    def rows(self) -> Iterator[tuple[int, int, int, int]]:
        """(k, length, start, end) per run, for table output."""
        for k in range(len(self._lengths)):
            yield (
                k + 1,
                int(self._lengths[k]),
                int(self._starts[k]),
                int(self._ends[k]),
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RunDecomposition):
            return NotImplemented
        return (
            np.array_equal(self._lengths, other._lengths)
            and np.array_equal(self._starts, other._starts)
            and np.array_equal(self._ends, other._ends)
        )

    def __repr__(self) -> str:
        return f"<RunDecomposition of {self.count} runs>"


def run_decompose(w) -> RunDecomposition:
    """Split a word into maximal runs of equal symbols.

    Accepts a PaperfoldingWord, any int sequence, or a numpy array; the
    empty word is rejected (a decomposition must partition something).
    """
    arr = _word_array(w)
    if arr.size == 0:
        raise ValueError("cannot decompose the empty word into runs")
    boundaries = np.flatnonzero(arr[1:] != arr[:-1])  # 0-indexed last-of-run
    ends = np.concatenate([boundaries + 1, [arr.size]]).astype(np.int64)
    starts = np.concatenate([[1], boundaries + 2]).astype(np.int64)
    return RunDecomposition(ends - starts + 1, starts, ends)


def run_length_word(code) -> np.ndarray:
    """The run-length word of the paperfolding word of `code`."""
    return run_decompose(paperfolding_word(code)).lengths


def assoc_code(f) -> FoldCode:
    """The associated code g with |g| = |f| - 1 governing run endings.

    Case rule on the first two instructions, with x the remainder:
    (1,1)x -> 1,(-x); (1,-1)x -> -1,(-x); (-1,1)x -> -1,x; (-1,-1)x -> 1,x.
    """
    c = as_code(f)
    eff = c.effective
    if len(eff) < 2:
        raise InvalidCodeError(
            f"associated code needs >= 2 effective instructions, got {len(eff)}"
        )
    f0, f1, rest = eff[0], eff[1], eff[2:]
    if f0 == 1:
        head = 1 if f1 == 1 else -1
        tail = tuple(-s for s in rest)
    else:
        head = -1 if f1 == 1 else 1
        tail = rest
    return FoldCode((head,) + tail)


def predicted_end_positions(f) -> np.ndarray:
    """Predicted run ends 2n - eps_n for 1 <= n < 2**(t-1).

    eps_n is 0 when the associated code's word has +1 at position n, else 1.
    The associated word has exactly 2**(t-1) - 1 terms, one per predicted
    index, so the whole range is a single vector expression.
    """
    g = assoc_code(f)
    pg = paperfolding_word(g).array
    n = np.arange(1, pg.size + 1, dtype=np.int64)
    return 2 * n - (pg == -1)


def run_span(code, n: int) -> tuple[int, int]:
    """(start, end) of run n without materializing the word.

    Peels one instruction per step: appending instruction a to code g maps
    P_g to P_g . a . (-P_g reversed), whose runs are those of P_g with the
    mirror-image runs appended, glued at the middle depending on whether a
    equals the last symbol of P_g.  O(t) arithmetic per query.
    """
    c = as_code(code)
    eff = c.effective
    t = len(eff)
    if t < 1:
        raise InvalidCodeError("run queries need at least one instruction")
    if not 1 <= n <= 2 ** (t - 1):
        raise IndexError(f"run index {n} outside 1..{2 ** (t - 1)}")
    return _span(eff, n)


def _span(f: tuple[int, ...], n: int) -> tuple[int, int]:
    t = len(f)
    if t == 1:
        return (1, 1)
    g = f[:-1]
    a = f[-1]
    m = 2 ** (t - 1) - 1  # length of the word of g
    half = 2 ** (t - 2)  # run count of the word of g
    last = paperfolding_term(FoldCode(g), m)
    if a == last:
        # middle symbol extends the last run of P_g up to position m+1
        if n < half:
            return _span(g, n)
        if n == half:
            return (_span(g, half)[0], m + 1)
        s, e = _span(g, 2 * half + 1 - n)
        return (2 * m + 2 - e, 2 * m + 2 - s)
    # middle symbol opens a run that merges with the mirrored last run
    if n <= half:
        return _span(g, n)
    if n == half + 1:
        return (m + 1, 2 * m + 2 - _span(g, half)[0])
    s, e = _span(g, 2 * half + 1 - n)
    return (2 * m + 2 - e, 2 * m + 2 - s)


def run_start(code, n: int) -> int:
    return run_span(code, n)[0]


def run_end(code, n: int) -> int:
    return run_span(code, n)[1]


def run_length(code, n: int) -> int:
    s, e = run_span(code, n)
    return e - s + 1


def _regular_span(k: int, n: int) -> tuple[int, int]:
    # run n of the all-ones code of length k; the word of (1,)*j ends in +1
    # only for j = 1, so every level with k >= 3 takes the merge branch
    if k == 1:
        return (1, 1)
    m = 2 ** (k - 1) - 1
    half = 2 ** (k - 2)
    if k == 2:
        return (1, 2) if n == 1 else (3, 3)
    if n <= half:
        return _regular_span(k - 1, n)
    if n == half + 1:
        return (m + 1, 2 * m + 2 - _regular_span(k - 1, half)[0])
    s, e = _regular_span(k - 1, 2 * half + 1 - n)
    return (2 * m + 2 - e, 2 * m + 2 - s)


def regular_run_span(n: int) -> tuple[int, int]:
    """(start, end) of run n of the regular (all +1 instructions) sequence.

    Any all-ones code with more than n runs in its first half pins run n,
    so the value is independent of the truncation; O(log n) arithmetic.
    """
    if n < 1:
        raise IndexError("run index must be >= 1")
    return _regular_span(n.bit_length() + 2, n)


def regular_run_start(n: int) -> int:
    return regular_run_span(n)[0]


def regular_run_end(n: int) -> int:
    return regular_run_span(n)[1]


def regular_run_length(n: int) -> int:
    s, e = regular_run_span(n)
    return e - s + 1


class FactorInventory:
    """A set of factors of a run-length word, stored as int tuples."""

    __slots__ = ("_factors", "_max_length")

    def __init__(self, factors, max_length: "int | None" = None):
        self._factors = frozenset(tuple(int(s) for s in w) for w in factors)
        self._max_length = max_length

    @property
    def factors(self) -> frozenset:
        return self._factors

    @property
    def max_length(self) -> "int | None":
        """Length cap the inventory was collected under, None if unbounded."""
        return self._max_length

    def render(self) -> list[str]:
        """Factors as digit strings, sorted by length then lexicographically."""
        return [
            "".join(str(s) for s in w)
            for w in sorted(self._factors, key=lambda w: (len(w), w))
        ]

    def __contains__(self, w) -> bool:
        return tuple(int(s) for s in w) in self._factors

    def __iter__(self):
        return iter(sorted(self._factors, key=lambda w: (len(w), w)))

    def __len__(self) -> int:
        return len(self._factors)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactorInventory):
            return self._factors == other._factors
        if isinstance(other, (set, frozenset)):
            return self._factors == {tuple(int(s) for s in w) for w in other}
        return NotImplemented

    def __repr__(self) -> str:
        return f"FactorInventory({self.render()})"


def _window_all_true_positions(eq: np.ndarray, size: int) -> np.ndarray:
    """0-indexed i where eq[i:i+size] is all True."""
    if eq.size < size:
        return np.empty(0, dtype=np.int64)
    cs = np.concatenate([[0], np.cumsum(eq, dtype=np.int64)])
    return np.flatnonzero(cs[size:] - cs[:-size] == size)


def find_overlaps(w) -> list[tuple[int, int]]:
    """All overlap witnesses (start, period), 1-indexed, sorted.

    An overlap of period p at position i is w[i..i+2p] with w[i+j] equal to
    w[i+j+p] for 0 <= j <= p, i.e. the shape a.x.a.x.a with |a.x| = p.
    """
    arr = _word_array(w)
    m = arr.size
    hits = []
    for p in range(1, (m - 1) // 2 + 1):
        eq = arr[p:] == arr[:-p]
        for i in _window_all_true_positions(eq, p + 1):
            hits.append((int(i) + 1, p))
    hits.sort()
    return hits


def find_squares(w) -> FactorInventory:
    """The distinct square factors (words of shape zz, z nonempty) of w."""
    arr = _word_array(w)
    m = arr.size
    found = set()
    for q in range(1, m // 2 + 1):
        eq = arr[q:] == arr[:-q]
        for i in _window_all_true_positions(eq, q):
            found.add(tuple(int(v) for v in arr[i : i + 2 * q]))
    return FactorInventory(found)


def square_occurrences(w, z) -> list[int]:
    """1-indexed positions where the square z.z occurs in w."""
    arr = _word_array(w)
    zz = np.asarray(list(z) + list(z), dtype=arr.dtype)
    if zz.size == 0:
        raise ValueError("square root must be nonempty")
    if zz.size > arr.size:
        return []
    wins = np.lib.stride_tricks.sliding_window_view(arr, zz.size)
    return [int(i) + 1 for i in np.flatnonzero((wins == zz).all(axis=1))]


def find_palindromes(w, max_len: int) -> FactorInventory:
    """The distinct palindromic factors of w with length <= max_len."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    arr = _word_array(w)
    found = set()
    for size in range(1, min(max_len, arr.size) + 1):
        wins = np.lib.stride_tricks.sliding_window_view(arr, size)
        pal = (wins == wins[:, ::-1]).all(axis=1)
        for i in np.flatnonzero(pal):
            found.add(tuple(int(v) for v in wins[i]))
    return FactorInventory(found, max_length=max_len)


# Factor scans must stay inside the prefix window where every factor of the
# infinite extension is guaranteed to appear: a run factor of length n spans
# at most 3n+2 word symbols, every length-m block of word symbols shows up
# within the first 13m, and the word itself must strictly contain the window.
def window_bound(n: int) -> int:
    """Paperfolding-prefix length guaranteed to expose all length-n run factors."""
    if n < 1:
        raise ValueError("factor length must be >= 1")
    return 13 * (3 * n + 2)


def min_code_length(n: int) -> int:
    """Smallest effective code length accepted by the windowed factor scans."""
    return math.ceil(math.log2(window_bound(n) + 1)) + 1


def _windowed_run_prefix(code, n: int) -> np.ndarray:
    c = as_code(code)
    need = min_code_length(n)
    if c.effective_length < need:
        raise ValueError(
            f"code with {c.effective_length} effective instructions is too short "
            f"for factor length {n}: minimum required length is {need}"
        )
    runs = run_decompose(paperfolding_word(c))
    bound = window_bound(n)
    k = int(np.searchsorted(runs.ends, bound, side="right"))
    assert k < runs.count  # window strictly inside the word by the length check
    return runs.lengths[:k]


def subword_complexity(f, n: int) -> int:
    """Number of distinct length-n factors of the run-length word of f.

    Scans only runs that end inside the guaranteed window, so the answer
    is a property of paperfolding sequences at large, not of the truncation.
    """
    prefix = _windowed_run_prefix(f, n)
    return len({tuple(prefix[i : i + n]) for i in range(len(prefix) - n + 1)})


def right_extension_map(f, n: int) -> dict[tuple[int, ...], frozenset[int]]:
    """Each windowed length-n factor mapped to its observed right extensions."""
    prefix = _windowed_run_prefix(f, n + 1)
    ext = defaultdict(set)
    for i in range(len(prefix) - n):
        ext[tuple(prefix[i : i + n])].add(int(prefix[i + n]))
    return {w: frozenset(s) for w, s in ext.items()}


def right_special_count(f, n: int) -> int:
    """Count of length-n factors with at least two distinct right extensions."""
    return sum(1 for s in right_extension_map(f, n).values() if len(s) >= 2)
