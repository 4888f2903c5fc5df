"""
Partitions of n with exactly k parts of a second (primed) type.

Among equal part values every arrangement of primes is a distinct object,
so 1'11, 11'1 and 111' are three partitions of 3 with one prime. Counting
therefore multiplies C(multiplicity, primes) per part value.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from combinatorics import golden
from combinatorics.eulerian import EulerianTable, binomial, en_recur
from combinatorics.stabilization import stabilized_coeff
from core.errors import DomainError
from core.reports import CONJECTURE, VerificationReport

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoTypePartition:
    parts: Tuple[int, ...]
    primed: Tuple[bool, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.primed):
            raise ValueError("one primed flag is needed per part")
        if any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"parts must be positive and weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return sum(self.primed)

    def render(self) -> str:
        """E.g. "2'1"; parts are comma separated once any part exceeds 9."""
        sep = "," if any(p > 9 for p in self.parts) else ""
        return sep.join(f"{p}'" if primed else str(p) for p, primed in zip(self.parts, self.primed))

    def __str__(self) -> str:
        return self.render()


def _partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def ordinary_partitions(n: int) -> List[Tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, in increasing lexicographic order."""
    if n < 0:
        return []
    return sorted(_partitions(n, n))


def enumerate_ttp(n: int, k: int) -> List[TwoTypePartition]:
    """
    Every partition of n with k primed parts, each exactly once.

    Order: underlying partitions in increasing lexicographic order
    (111, 21, 3), then primed positions as a binary string, decreasing
    (100, 010, 001).
    """
    if n < 0 or k < 0:
        return []
    result: List[TwoTypePartition] = []
    for parts in ordinary_partitions(n):
        if len(parts) < k:
            continue
        for positions in combinations(range(len(parts)), k):
            chosen = set(positions)
            result.append(TwoTypePartition(parts, tuple(i in chosen for i in range(len(parts)))))
    return result


@lru_cache(maxsize=None)
def _count(remaining: int, largest: int, primes: int) -> int:
    if remaining == 0:
        return 1 if primes == 0 else 0
    if largest == 0:
        return 0
    total = 0
    for mult in range(remaining // largest + 1):
        rest = remaining - mult * largest
        for j in range(min(mult, primes) + 1):
            total += binomial(mult, j) * _count(rest, largest - 1, primes - j)
    return total


def count_T(n: int, k: int) -> int:
    """T(n, k); zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _count(n, n, k)


def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > i:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[i - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            j += 1
        p[i] = total
    return p[n]


@dataclass(frozen=True)
class PartitionTable:
    """T(n, k) for 0 <= k <= n <= N, one tuple per row."""
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: Tuple[int, int]) -> int:
        n, k = nk
        if n < 0 or k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> Tuple[int, ...]:
        return self.rows[n]

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield n, k, value


def build_table(N: int) -> PartitionTable:
    if N < 0:
        raise DomainError(f"table size must be nonnegative, got {N}")
    return PartitionTable(tuple(tuple(count_T(n, k) for k in range(n + 1)) for n in range(N + 1)))


# --- Identities ---

def check_append_lemma(n: int, k: int, b: int) -> VerificationReport:
    """T(n, k) = sum_{j=0}^{b} C(b, j) T(n-b, k-j) whenever 0 <= b <= 2k-n."""
    if n < 0 or k < 0 or b < 0 or b > 2 * k - n:
        raise DomainError(f"outside lemma domain: n={n}, k={k}, b={b} (need 0 <= b <= 2k-n)")
    report = VerificationReport("append-lemma", {"n": n, "k": k, "b": b}, coordinate_names=("n", "k", "b"))
    rhs = sum(binomial(b, j) * count_T(n - b, k - j) for j in range(b + 1))
    report.record("append-lemma", {"n": n, "k": k, "b": b}, count_T(n, k), rhs)
    return report


def _alternating_sum(k: int, term) -> int:
    return sum((-1) ** (i + 1) * binomial(k, i) * term(i) for i in range(1, k + 1)) + 1


def check_thm_T(k: int, d: int) -> VerificationReport:
    """T(d+k, d) = sum_{i=1}^{k} (-1)^(i+1) C(k, i) T(d+k-i, d-i) + 1 for d >= 2k."""
    if k < 1 or d < 2 * k:
        raise DomainError(f"outside theorem domain: k={k}, d={d} (need k >= 1, d >= 2k)")
    report = VerificationReport("T-recurrence", {"k": k, "d": d}, coordinate_names=("k", "d"))
    rhs = _alternating_sum(k, lambda i: count_T(d + k - i, d - i))
    report.record("T-recurrence", {"k": k, "d": d}, count_T(d + k, d), rhs)
    return report


def check_conjecture_W(k: int, d: int, table: Optional[EulerianTable] = None) -> VerificationReport:
    """The same alternating identity for W_d[t^k]; evidence only, reported with conjecture severity."""
    if k < 1 or d < 2 * k:
        raise DomainError(f"outside conjecture domain: k={k}, d={d} (need k >= 1, d >= 2k)")
    report = VerificationReport("W-recurrence", {"k": k, "d": d}, severity=CONJECTURE, coordinate_names=("k", "d"))
    rhs = _alternating_sum(k, lambda i: stabilized_coeff(d - i, k, table))
    report.record("W-recurrence", {"k": k, "d": d}, stabilized_coeff(d, k, table), rhs)
    return report


def check_W_T_correspondence(d: int, k: int, table: Optional[EulerianTable] = None) -> VerificationReport:
    """W_d[t^k] = T(d+k, d), checked on the bold cells of the printed triangle (k <= d)."""
    if d < 1 or not 0 <= k <= d:
        raise DomainError(f"correspondence is checked for d >= 1 and 0 <= k <= d, got d={d}, k={k}")
    report = VerificationReport("W-T-correspondence", {"d": d, "k": k}, coordinate_names=("d", "k"))
    report.record("W-T-correspondence", {"d": d, "k": k}, count_T(d + k, d), stabilized_coeff(d, k, table))
    return report


# --- Sweeps ---

def sweep_append_lemma(n_max: int) -> VerificationReport:
    report = VerificationReport("append-lemma", {"n_max": n_max}, coordinate_names=("n", "k", "b"))
    for n in range(n_max + 1):
        for k in range(n + 1):
            for b in range(max(2 * k - n, -1) + 1):
                report.merge(check_append_lemma(n, k, b))
    report.violations = report.sorted_violations()
    return report


def sweep_thm_T(k_max: int, d_max: int) -> VerificationReport:
    report = VerificationReport("T-recurrence", {"k_max": k_max, "d_max": d_max}, coordinate_names=("k", "d"))
    for k in range(1, k_max + 1):
        for d in range(2 * k, d_max + 1):
            report.merge(check_thm_T(k, d))
    report.violations = report.sorted_violations()
    return report


def sweep_conjecture_W(k_max: int, d_max: int, table: Optional[EulerianTable] = None) -> VerificationReport:
    report = VerificationReport("W-recurrence", {"k_max": k_max, "d_max": d_max}, severity=CONJECTURE,
                                coordinate_names=("k", "d"))
    if k_max >= 1 and d_max >= 2:
        log.info(f"Computing E_n up to n={d_max + k_max + 1} for the W_d conjecture sweep...")
        en_recur(d_max + k_max + 1, table)
    for k in range(1, k_max + 1):
        for d in range(2 * k, d_max + 1):
            report.merge(check_conjecture_W(k, d, table))
    report.violations = report.sorted_violations()
    if not report.passed:
        report.notes.append("a failed conjecture check is a finding, not a defect")
    return report


def sweep_W_T_correspondence(d_max: int, table: Optional[EulerianTable] = None) -> VerificationReport:
    report = VerificationReport("W-T-correspondence", {"d_max": d_max}, coordinate_names=("d", "k"))
    for d in range(1, d_max + 1):
        for k in range(d + 1):
            report.merge(check_W_T_correspondence(d, k, table))
        # Printed prefixes of W_d against the bold cells of the printed table.
        for k, value in enumerate(golden.WD_PREFIXES.get(d, ())):
            if d + k < len(golden.T_TABLE) and golden.is_bold(d + k, d):
                report.record("printed-W-vs-printed-T", {"d": d, "k": k}, golden.T_TABLE[d + k][d], value)
    report.violations = report.sorted_violations()
    return report


def verify_table(N: int) -> VerificationReport:
    """
    Structural checks of T(n, k) for n <= N: agreement with the printed table,
    with direct enumeration (n <= 12), and the row boundaries.
    """
    report = VerificationReport("partition-table", {"N": N}, coordinate_names=("n", "k"))
    table = build_table(N)
    for n, k, value in table.cells():
        if n < len(golden.T_TABLE):
            report.record("printed-table", {"n": n, "k": k}, golden.T_TABLE[n][k], value)
        if n <= 12:
            report.record("enumeration", {"n": n, "k": k}, len(enumerate_ttp(n, k)), value)
    for n in range(N + 1):
        report.record("row-start", {"n": n, "k": 0}, partition_count(n), table[n, 0])
        report.record("row-end", {"n": n, "k": n}, 1, table[n, n])
        report.record("beyond-row", {"n": n, "k": n + 1}, 0, count_T(n, n + 1))
    report.violations = report.sorted_violations()
    return report
