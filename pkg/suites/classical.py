from combinatorics.eulerian import an_classical, en_recur, eulerian_numbers_by_enumeration
from combinatorics.poly import eval_q1
from core.config import config
from core.reports import VerificationReport
from suites.base_suite import BaseSuite


class ClassicalSuite(BaseSuite):
    """
    At q = 1, E_n collapses to the classical Eulerian polynomial A_n: checked
    against the classical recurrence for n <= max_n, against direct descent
    counting while enumeration is allowed (and n <= 9), and for the symmetry
    A(n, d) = A(n, n-1-d).
    """

    name = "classical"
    description = "q = 1 collapse to A_n(x)"
    default_bounds = {"max_n": 15}

    def run(self, max_n: int, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n})
        report.coordinate_names = ("n", "d")
        en_recur(max_n, self.table)
        counted_max = min(max_n, 9, config.enumeration_ceiling)
        for n in range(max_n + 1):
            collapsed = eval_q1(self.table[n])
            classical = an_classical(n)
            report.record("q1-collapse", {"n": n}, classical, collapsed)
            if n <= counted_max:
                report.record("descent-count", {"n": n}, eulerian_numbers_by_enumeration(n), collapsed)
            for d in range(n):
                report.record("symmetry", {"n": n, "d": d}, collapsed[d], collapsed[n - 1 - d])
        report.violations = report.sorted_violations()
        return report
