"""
Stabilization of the top q-coefficients of E_n and the series W_d(t).

For n >= d+k+1 the coefficient E_n[x^d q^(maxwt(n,d)-k)] no longer depends
on n; its stable value is the k-th coefficient of W_d(t). The shift identity
E_n[x^d q^m] = E_{n-1}[x^d q^(m-d)] holds exactly from m = (d-1)(n-d-1)+1
upwards. Everything here reads E_n from the recurrence engine except the
disparity checks, which enumerate S_n directly.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from combinatorics.eulerian import EulerianTable, en_recur
from combinatorics.perm_core import _descents, canonical_weight, format_word, permutations_of
from combinatorics.poly import UnivariatePolynomial, coeff_xq
from core.config import config
from core.errors import DomainError, EnumerationCeilingError
from core.reports import VerificationReport

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesPrefix:
    """a_0..a_K of W_d(t) = 1 + a_1 t + a_2 t^2 + ..."""
    d: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[0] != 1:
            raise ValueError(f"W_{self.d} must start with 1, got {self.coeffs[0]}")

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def render(self) -> str:
        return UnivariatePolynomial(self.coeffs).render("t", spaced=True) + " + ..."

    def to_csv(self) -> str:
        return ",".join(str(a) for a in self.coeffs)


def stabilized_coeff(d: int, k: int, table: Optional[EulerianTable] = None) -> int:
    """W_d[t^k] = E_{d+k+1}[x^d q^((d-1)k)]."""
    if d < 1 or k < 0:
        raise DomainError(f"W_d[t^k] needs d >= 1 and k >= 0, got d={d}, k={k}")
    return coeff_xq(en_recur(d + k + 1, table), d, (d - 1) * k)


def wd_prefix(d: int, K: int, table: Optional[EulerianTable] = None) -> SeriesPrefix:
    if K < 0:
        raise DomainError(f"number of terms must be nonnegative, got {K}")
    # One call fills the table up to the largest E_n needed.
    if d >= 1:
        en_recur(d + K + 1, table)
    return SeriesPrefix(d, tuple(stabilized_coeff(d, k, table) for k in range(K + 1)))


def _check_d(n: int, d: int):
    if n < 1 or not 0 <= d <= n - 1:
        raise DomainError(f"descent count d={d} out of range for n={n}")


def is_stabilized(n: int, d: int, m: int) -> bool:
    """
    Whether E_n[x^d q^m] = E_{n-1}[x^d q^(m-d)] is guaranteed.

    True iff m >= (d-1)(n-d-1)+1 for 1 <= d <= n-2. At the edges, x^0 is
    always stabilized and x^(n-1) never is.
    """
    _check_d(n, d)
    if m < 0:
        raise DomainError(f"q-exponent must be nonnegative, got {m}")
    if d == 0:
        return True
    if d == n - 1:
        return False
    return m >= (d - 1) * (n - d - 1) + 1


def _shifted_pair(n: int, d: int, m: int, table: Optional[EulerianTable]) -> Tuple[int, int]:
    current = coeff_xq(en_recur(n, table), d, m)
    previous = coeff_xq(en_recur(n - 1, table), d, m - d) if m >= d else 0
    return current, previous


def shift_frontier(n: int, d: int, table: Optional[EulerianTable] = None) -> int:
    """Least m0 such that the shift identity holds for every m >= m0."""
    if n < 3 or not 1 <= d <= n - 2:
        raise DomainError(f"shift frontier needs 1 <= d <= n-2, got n={n}, d={d}")
    m = d * (n - d - 1)
    while m >= 0:
        current, previous = _shifted_pair(n, d, m, table)
        if current != previous:
            return m + 1
        m -= 1
    return 0


def verify_shift(n_max: int, table: Optional[EulerianTable] = None) -> VerificationReport:
    """
    The shift identity above the threshold, its failure at and below it, and
    the two edge claims: x^0 q^0 stabilizes, x^(n-1) q^0 does not.
    """
    if n_max < 2:
        raise DomainError(f"verify_shift needs n_max >= 2, got {n_max}")
    report = VerificationReport("shift", {"n_max": n_max})
    en_recur(n_max, table)
    for n in range(2, n_max + 1):
        current, previous = _shifted_pair(n, 0, 0, table)
        report.record("shift-edge-x0", {"n": n, "d": 0, "m": 0}, previous, current)
        current, previous = _shifted_pair(n, n - 1, 0, table)
        report.record_differs("shift-edge-top", {"n": n, "d": n - 1, "m": 0}, current, previous)
        for d in range(1, n - 1):
            threshold = (d - 1) * (n - d - 1) + 1
            for m in range(d * (n - d - 1) + 1):
                current, previous = _shifted_pair(n, d, m, table)
                coords = {"n": n, "d": d, "m": m}
                if m >= threshold:
                    report.record("shift-equal", coords, previous, current)
                else:
                    report.record_differs("shift-differs", coords, current, previous)
    log.info(f"Shift identity: {report.checked} coefficients checked, {len(report.violations)} violations")
    report.violations = report.sorted_violations()
    return report


def verify_stabilization(n_max: int, table: Optional[EulerianTable] = None) -> VerificationReport:
    """For every d >= 1, k >= 0 with d+k+1 <= n_max: E_n[x^d q^(maxwt(n,d)-k)] is the same for all n in range."""
    if n_max < 2:
        raise DomainError(f"verify_stabilization needs n_max >= 2, got {n_max}")
    report = VerificationReport("stabilization", {"n_max": n_max}, coordinate_names=("d", "k", "n"))
    en_recur(n_max, table)
    for d in range(1, n_max - 1):
        for k in range(0, n_max - d):
            stable = stabilized_coeff(d, k, table)
            for n in range(d + k + 2, n_max + 1):
                value = coeff_xq(en_recur(n, table), d, d * (n - d - 1) - k)
                report.record("stabilization", {"d": d, "k": k, "n": n}, stable, value)
    report.violations = report.sorted_violations()
    return report


def verify_disparity(n_max: int, ceiling: Optional[int] = None) -> VerificationReport:
    """
    Exhaustive check over S_n, n <= n_max: a permutation not starting with 1 has
    disparity at least n-d-1; among permutations ending in 1 the weight never
    exceeds (d-1)(n-d-1) and reaches it; over all of S_n, maxwt(n,d) is reached.
    """
    ceiling = config.enumeration_ceiling if ceiling is None else ceiling
    if n_max > ceiling:
        raise EnumerationCeilingError(n_max, ceiling)
    report = VerificationReport("disparity", {"n_max": n_max}, coordinate_names=("n", "d", "perm"))
    for n in range(1, n_max + 1):
        best_all: Dict[int, int] = {}
        best_star: Dict[int, int] = {}
        for word in permutations_of(n):
            d = _descents(word)
            w = canonical_weight(word)
            maxwt = d * (n - d - 1)
            best_all[d] = max(best_all.get(d, -1), w)
            if word[0] != 1:
                delta = maxwt - w
                report.checked += 1
                if delta < n - d - 1:
                    report.fail("disparity-bound", {"n": n, "d": d, "perm": format_word(word)},
                                f">= {n - d - 1}", delta)
            if n >= 2 and word[-1] == 1:
                best_star[d] = max(best_star.get(d, -1), w)
        for d in range(n):
            report.record("maxwt-attained", {"n": n, "d": d, "perm": ""}, d * (n - d - 1), best_all.get(d))
        if n >= 2:
            for d in range(1, n):
                report.record("star-maximum", {"n": n, "d": d, "perm": ""}, (d - 1) * (n - d - 1),
                              best_star.get(d))
        log.debug(f"Disparity checks done for n={n}")
    report.violations = report.sorted_violations()
    return report
