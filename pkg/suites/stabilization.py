from combinatorics import golden
from combinatorics.stabilization import verify_stabilization, wd_prefix
from core.reports import VerificationReport
from suites.base_suite import BaseSuite


class StabilizationSuite(BaseSuite):
    """Top q-coefficients are independent of n, and the printed W_d prefixes are reproduced."""

    name = "stabilization"
    description = "E_n[x^d q^(maxwt-k)] is constant in n; W_1..W_5 prefixes"
    default_bounds = {"max_n": 10, "max_d": 5}

    def run(self, max_n: int, max_d: int = 5, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n, "max_d": max_d})
        report.merge(verify_stabilization(max_n, self.table))
        for d in range(1, max_d + 1):
            printed = golden.WD_PREFIXES.get(d)
            if printed is None:
                continue
            computed = wd_prefix(d, len(printed) - 1, self.table)
            for k, value in enumerate(printed):
                report.record("printed-W", {"d": d, "k": k}, value, computed[k])
        report.violations = report.sorted_violations()
        return report
