from combinatorics.stabilization import shift_frontier, verify_shift
from core.reports import VerificationReport
from suites.base_suite import BaseSuite


class ShiftSuite(BaseSuite):
    """
    E_n[x^d q^m] = E_{n-1}[x^d q^(m-d)] exactly when m >= (d-1)(n-d-1)+1, plus
    the least such m computed directly for every (n, d).
    """

    name = "shift"
    description = "shift identity threshold and the x^0 / x^(n-1) edge claims"
    default_bounds = {"max_n": 10}

    def run(self, max_n: int, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n})
        report.merge(verify_shift(max_n, self.table))
        for n in range(3, max_n + 1):
            for d in range(1, n - 1):
                report.record("shift-frontier", {"n": n, "d": d}, (d - 1) * (n - d - 1) + 1,
                              shift_frontier(n, d, self.table))
        report.violations = report.sorted_violations()
        return report
