"""
A_n(x), E_n(x, q) and E*_n(x, q): by exhaustive enumeration and by recurrence.

Brute force walks S_n split into independent work units by first letter, one
private coefficient map per unit, merged by addition; the result does not
depend on scheduling. The recurrence engine fills an `EulerianTable` bottom-up
from E_0 = 1 and memoizes every intermediate E_i.
"""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, repeat
from math import factorial
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from combinatorics import golden
from combinatorics.perm_core import _descents, canonical_weight, weight_cache_info
from combinatorics.poly import (BivariatePolynomial, UnivariatePolynomial, coeff_x, coeff_xq, mul,
                                parse, parse_with_notes, shift_x, substitute_x_qx)
from core.config import config
from core.errors import DomainError, EnumerationCeilingError, InvariantError

log = logging.getLogger(__name__)

BRUTE = "brute"
RECURRENCE = "recurrence"
CACHE_FILE = "cache-file"

# Below this size a process pool costs more than it saves.
PARALLEL_MIN_N = 8


# --- Binomials ---

@lru_cache(maxsize=None)
def pascal_row(n: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = pascal_row(n - 1)
    return (1,) + tuple(a + b for a, b in zip(prev, prev[1:])) + (1,)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return pascal_row(n)[k]


# --- Invariants ---

def en_problems(n: int, poly: BivariatePolynomial) -> List[str]:
    """Every way `poly` fails to look like E_n: mass n!, degree bounds, unit leading terms."""
    problems: List[str] = []
    if poly.mass != factorial(n):
        problems.append(f"coefficient mass {poly.mass} != {n}! = {factorial(n)}")
    top = max(n - 1, 0)
    for (d, m), c in poly.items():
        if c < 0:
            problems.append(f"negative coefficient {c} at x^{d}q^{m}")
        if d > top:
            problems.append(f"x-degree {d} exceeds {top}")
        elif m > d * (n - d - 1) and n > 0:
            problems.append(f"q-degree {m} at x^{d} exceeds maxwt({n},{d}) = {d * (n - d - 1)}")
    for d in range(n):
        if coeff_xq(poly, d, d * (n - d - 1)) != 1:
            problems.append(f"leading coefficient of x^{d} is not 1")
    return problems


@lru_cache(maxsize=None)
def _golden_polynomial(n: int) -> BivariatePolynomial:
    return parse(golden.EN_TEXT[n])


class EulerianTable:
    """
    Validated E_n by n, with where each one came from.

    Reads are lock-free dictionary lookups; insertion is serialized.
    """

    def __init__(self):
        self._entries: Dict[int, BivariatePolynomial] = {}
        self._provenance: Dict[int, str] = {}
        self._lock = threading.Lock()

    def __contains__(self, n: int) -> bool:
        return n in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, n: int) -> BivariatePolynomial:
        return self._entries[n]

    def get(self, n: int) -> Optional[BivariatePolynomial]:
        return self._entries.get(n)

    def provenance(self, n: int) -> Optional[str]:
        return self._provenance.get(n)

    def ns(self) -> List[int]:
        return sorted(self._entries)

    def items(self) -> Iterator[Tuple[int, BivariatePolynomial]]:
        for n in self.ns():
            yield n, self._entries[n]

    def insert(self, n: int, poly: BivariatePolynomial, provenance: str):
        problems = en_problems(n, poly)
        if n <= golden.AUTHORITATIVE_MAX_N and poly != _golden_polynomial(n):
            problems.append("differs from the golden transcription")
        if problems:
            log.error(f"Rejecting E_{n} from {provenance}: {problems}")
            raise InvariantError(n, problems)
        with self._lock:
            existing = self._entries.get(n)
            if existing is not None and existing != poly:
                raise InvariantError(n, [f"{provenance} result disagrees with stored {self._provenance[n]} entry"])
            if existing is None:
                self._entries[n] = poly
                self._provenance[n] = provenance

    def clear(self):
        with self._lock:
            self._entries.clear()
            self._provenance.clear()


# Process-wide memo shared by every caller that does not pass its own table.
default_table = EulerianTable()


# --- Brute force ---

def _enumerate_unit(n: int, first: int, star: bool, shortcut: bool) -> Dict[Tuple[int, int], int]:
    """Coefficient counts of the permutations starting with `first` (and ending in 1 when `star`)."""
    counts: Dict[Tuple[int, int], int] = {}
    if star:
        rest = [v for v in range(2, n + 1) if v != first]
        words = ((first,) + tail + (1,) for tail in permutations(rest))
    else:
        rest = [v for v in range(1, n + 1) if v != first]
        words = ((first,) + tail for tail in permutations(rest))
    for word in words:
        key = (_descents(word), canonical_weight(word, shortcut=shortcut))
        counts[key] = counts.get(key, 0) + 1
    return counts


def _brute(n: int, star: bool, jobs: Optional[int], ceiling: Optional[int], shortcut: bool) -> BivariatePolynomial:
    ceiling = config.enumeration_ceiling if ceiling is None else ceiling
    if n > ceiling:
        raise EnumerationCeilingError(n, ceiling)
    firsts = list(range(2, n + 1)) if star else list(range(1, n + 1))
    jobs = config.jobs if jobs is None else jobs
    jobs = max(1, min(jobs, len(firsts)))

    start = time.perf_counter()
    totals: Dict[Tuple[int, int], int] = {}
    if jobs == 1 or n < PARALLEL_MIN_N:
        unit_results = map(_enumerate_unit, repeat(n), firsts, repeat(star), repeat(shortcut))
        for counts in unit_results:
            _merge_counts(totals, counts)
        log.debug(f"Weight memo after n={n}: {weight_cache_info()}")
    else:
        family = "S'" if star else "S"
        log.info(f"Enumerating {family}_{n} with {jobs} worker processes...")
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            for counts in executor.map(_enumerate_unit, repeat(n), firsts, repeat(star), repeat(shortcut)):
                _merge_counts(totals, counts)
    log.debug(f"Brute force n={n} star={star} took {time.perf_counter() - start:.2f}s")
    return BivariatePolynomial(totals)


def _merge_counts(totals: Dict[Tuple[int, int], int], counts: Dict[Tuple[int, int], int]):
    for key, c in counts.items():
        totals[key] = totals.get(key, 0) + c


def en_brute(n: int, jobs: Optional[int] = None, ceiling: Optional[int] = None,
             shortcut: bool = False) -> BivariatePolynomial:
    """E_n(x, q) summed over all n! permutations."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n <= 1:
        return BivariatePolynomial.constant(1)
    return _brute(n, star=False, jobs=jobs, ceiling=ceiling, shortcut=shortcut)


def en_star_brute(n: int, jobs: Optional[int] = None, ceiling: Optional[int] = None,
                  shortcut: bool = False) -> BivariatePolynomial:
    """E*_n(x, q) summed over the permutations ending in 1; the word "1" counts, so E*_1 = 1."""
    if n < 1:
        raise DomainError(f"E*_n needs n >= 1, got {n}")
    if n == 1:
        return BivariatePolynomial.constant(1)
    return _brute(n, star=True, jobs=jobs, ceiling=ceiling, shortcut=shortcut)


def eulerian_numbers_by_enumeration(n: int, ceiling: Optional[int] = None) -> UnivariatePolynomial:
    """A_n(x) by counting descents over an array of all of S_n at once."""
    ceiling = config.enumeration_ceiling if ceiling is None else ceiling
    if n > ceiling:
        raise EnumerationCeilingError(n, ceiling)
    if n <= 1:
        return UnivariatePolynomial([1])
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    des = np.count_nonzero(perms[:, 1:] < perms[:, :-1], axis=1)
    return UnivariatePolynomial(int(c) for c in np.bincount(des, minlength=n))


# --- Recurrences ---

def _recurrence_step(n: int, table: EulerianTable) -> BivariatePolynomial:
    if n == 0:
        return BivariatePolynomial.constant(1)
    total = substitute_x_qx(table[n - 1])
    for i in range(1, n):
        product = mul(table[i], substitute_x_qx(table[n - i - 1]))
        total = total + shift_x(product) * binomial(n - 1, i)
    return total


def en_recur(n: int, table: Optional[EulerianTable] = None) -> BivariatePolynomial:
    """
    E_n(x, q) = sum_{i=1}^{n-1} C(n-1, i) E_i(x, q) E_{n-i-1}(qx, q) x + E_{n-1}(qx, q),
    with E_0 = 1, filling `table` with every E_i on the way.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    table = default_table if table is None else table
    for k in range(n + 1):
        if k not in table:
            table.insert(k, _recurrence_step(k, table), RECURRENCE)
            log.debug(f"E_{k} computed by recurrence ({len(table[k])} terms)")
    return table[n]


def en_star_recur(n: int, table: Optional[EulerianTable] = None) -> BivariatePolynomial:
    """E*_n = x E_{n-1} for n >= 2, from the weight-preserving bijection S_{n-1} -> S'_n."""
    if n < 1:
        raise DomainError(f"E*_n needs n >= 1, got {n}")
    if n == 1:
        return BivariatePolynomial.constant(1)
    return shift_x(en_recur(n - 1, table))


def coeff_recur(n: int, d: int, m: int, table: Optional[EulerianTable] = None) -> int:
    """
    A single coefficient E_n[x^d q^m] from the triple sum over i, k, j plus
    E_{n-1}[x^d q^(m-d)], reading E_i for i < n from the table.
    """
    if n < 1:
        raise DomainError(f"coeff_recur needs n >= 1, got {n}")
    if d < 0 or m < 0:
        return 0
    table = default_table if table is None else table
    en_recur(n - 1, table)
    total = 0
    for i in range(1, n):
        outer = table[n - i - 1]
        inner_poly = table[i]
        inner = 0
        for k in range(1, i + 1):
            for j in range(m + 1):
                a = coeff_xq(outer, d - k, m - j)
                if a:
                    inner += a * coeff_xq(inner_poly, k - 1, k + j - d)
        total += binomial(n - 1, i) * inner
    return total + coeff_xq(table[n - 1], d, m - d)


def coeff_x_recur(n: int, d: int, table: Optional[EulerianTable] = None) -> UnivariatePolynomial:
    """E_n[x^d] as a q-polynomial, one x-row at a time."""
    if n < 1:
        raise DomainError(f"coeff_x_recur needs n >= 1, got {n}")
    table = default_table if table is None else table
    en_recur(n - 1, table)
    total = coeff_x(table[n - 1], d).shift(d) if d >= 0 else UnivariatePolynomial()
    for i in range(1, n):
        row = UnivariatePolynomial()
        for k in range(1, i + 1):
            if d - k < 0:
                break
            row = row + (coeff_x(table[i], k - 1) * coeff_x(table[n - i - 1], d - k)).shift(d - k)
        total = total + row * binomial(n - 1, i)
    return total


@lru_cache(maxsize=None)
def an_classical(n: int) -> UnivariatePolynomial:
    """
    Classical Eulerian polynomial A_n(x) = A_{n-1}(x) + sum_{i=1}^{n-1} C(n-1, i) A_i(x) A_{n-i-1}(x) x.

    The A_{n-1} term is the q = 1 image of E_{n-1}(qx, q); without it A_1 would vanish.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        return UnivariatePolynomial([1])
    total = an_classical(n - 1)
    x = UnivariatePolynomial([0, 1])
    for i in range(1, n):
        total = total + an_classical(i) * an_classical(n - i - 1) * x * binomial(n - 1, i)
    return total


# --- Golden data ---

@dataclass(frozen=True)
class TermDiff:
    d: int
    m: int
    values: Tuple[Optional[int], ...]


@dataclass
class GoldenTranscription:
    """A printed E_n together with how it compares to the computed one."""
    n: int
    text: str
    polynomial: BivariatePolynomial
    authoritative: bool
    parse_notes: List[str] = field(default_factory=list)
    discrepancies: List[TermDiff] = field(default_factory=list)


def diff_polynomials(*polys: Optional[BivariatePolynomial]) -> List[TermDiff]:
    """Terms on which the given polynomials disagree; `None` entries are skipped in the comparison."""
    present = [p for p in polys if p is not None]
    keys = sorted({key for p in present for key in p.terms})
    rows: List[TermDiff] = []
    for d, m in keys:
        values = tuple(None if p is None else coeff_xq(p, d, m) for p in polys)
        if len({v for v in values if v is not None}) > 1:
            rows.append(TermDiff(d, m, values))
    return rows


def golden_en(n: int, table: Optional[EulerianTable] = None) -> GoldenTranscription:
    """The printed E_n, n <= 10, annotated with every term where it disagrees with the recurrence."""
    if not 0 <= n <= 10:
        raise DomainError(f"transcriptions exist for 0 <= n <= 10, got {n}")
    text = golden.EN_TEXT[n]
    poly, notes = parse_with_notes(text)
    computed = en_recur(n, table)
    diffs = diff_polynomials(poly, computed)
    if n <= golden.AUTHORITATIVE_MAX_N and diffs:
        log.error(f"Golden E_{n} disagrees with the recurrence on {len(diffs)} terms")
    return GoldenTranscription(n, text, poly, n <= golden.AUTHORITATIVE_MAX_N, notes, diffs)


def golden_diff(n: int, table: Optional[EulerianTable] = None, brute: Optional[BivariatePolynomial] = None
                ) -> List[TermDiff]:
    """Three-way comparison: values are (brute | recurrence | transcription); brute may be absent."""
    transcription = golden_en(n, table)
    return diff_polynomials(brute, en_recur(n, table), transcription.polynomial)
