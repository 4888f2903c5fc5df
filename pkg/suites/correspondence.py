from combinatorics.partitions import sweep_W_T_correspondence
from core.reports import VerificationReport
from suites.base_suite import BaseSuite


class CorrespondenceSuite(BaseSuite):
    name = "correspondence"
    description = "W_d[t^k] = T(d+k, d) for k <= d"
    default_bounds = {"max_d": 5}

    def run(self, max_d: int, **_) -> VerificationReport:
        report = self.new_report({"max_d": max_d})
        report.coordinate_names = ("d", "k")
        return report.merge(sweep_W_T_correspondence(max_d, self.table))
