from combinatorics.partitions import sweep_append_lemma, sweep_thm_T, verify_table
from core.reports import VerificationReport
from suites.base_suite import BaseSuite


class PartitionsSuite(BaseSuite):
    """
    T(n, k): the printed table, enumeration against the counting DP, row
    boundaries against p(n), the append lemma for n <= max_n and the
    alternating recurrence for k <= max_k, 2k <= d <= max_d.
    """

    name = "partitions"
    description = "two-type partition numbers T(n,k) and their identities"
    default_bounds = {"max_n": 15, "max_k": 5, "max_d": 20}

    def run(self, max_n: int, max_k: int = 5, max_d: int = 20, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n, "max_k": max_k, "max_d": max_d})
        report.coordinate_names = ("n", "k")
        report.merge(verify_table(max_n))
        report.merge(sweep_append_lemma(max_n))
        report.merge(sweep_thm_T(max_k, max_d))
        report.violations = report.sorted_violations()
        return report
