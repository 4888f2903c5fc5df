import logging

from combinatorics import golden
from combinatorics.eulerian import coeff_recur, coeff_x_recur, en_brute, en_recur, golden_en
from combinatorics.poly import coeff_x, coeff_xq
from core.config import config
from core.reports import VerificationReport
from suites.base_suite import BaseSuite

log = logging.getLogger(__name__)


class RecurrenceSuite(BaseSuite):
    """
    The recurrence engine against brute force and against itself.

    - E_n by enumeration equals E_n by recurrence, n <= max_n (capped at the enumeration ceiling).
    - Both equal the printed E_n where the printed data is authoritative (n <= 7).
    - Every coefficient from the single-coefficient sum and every x^d row from
      the row recurrence agree with the full polynomial, n <= max_n.
    - Transcription mismatches for larger printed E_n are listed as notes.
    """

    name = "recurrence"
    description = "brute force = recurrence; coefficient and row recurrences agree"
    default_bounds = {"max_n": 8, "jobs": 0}

    def run(self, max_n: int, jobs: int = 0, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n})
        en_recur(max_n, self.table)

        brute_max = min(max_n, config.enumeration_ceiling)
        if brute_max < max_n:
            report.notes.append(f"brute force capped at n={brute_max} by the enumeration ceiling")
        for n in range(brute_max + 1):
            brute = en_brute(n, jobs=jobs or None)
            recur = self.table[n]
            for d, m in sorted(set(brute.terms) | set(recur.terms)):
                report.record("brute-vs-recurrence", {"n": n, "d": d, "m": m},
                              coeff_xq(brute, d, m), coeff_xq(recur, d, m))
            log.info(f"E_{n}: brute force and recurrence compared")

        for n in range(min(max_n, golden.AUTHORITATIVE_MAX_N) + 1):
            printed = golden_en(n, self.table)
            for row in printed.discrepancies:
                report.fail("printed-table", {"n": n, "d": row.d, "m": row.m}, row.values[0], row.values[1])
            report.checked += 1

        for n in range(1, max_n + 1):
            full = self.table[n]
            for d, m in full.terms:
                report.record("coefficient-sum", {"n": n, "d": d, "m": m},
                              coeff_xq(full, d, m), coeff_recur(n, d, m, self.table))
            for d in range(n):
                report.record("row-recurrence", {"n": n, "d": d},
                              coeff_x(full, d), coeff_x_recur(n, d, self.table))

        for n in range(golden.AUTHORITATIVE_MAX_N + 1, min(max_n, 10) + 1):
            printed = golden_en(n, self.table)
            if printed.parse_notes or printed.discrepancies:
                report.notes.append(f"printed E_{n}: {len(printed.discrepancies)} terms differ from the "
                                    f"recurrence ({'; '.join(printed.parse_notes) or 'clean parse'})")
        report.violations = report.sorted_violations()
        return report
