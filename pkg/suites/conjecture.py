from combinatorics.partitions import sweep_conjecture_W
from core.reports import CONJECTURE, VerificationReport
from suites.base_suite import BaseSuite


class ConjectureSuite(BaseSuite):
    """The alternating recurrence for W_d[t^k]. A pass is evidence; a failure is a finding."""

    name = "conjecture"
    description = "W_d[t^k] alternating recurrence (evidence, not proof)"
    severity = CONJECTURE
    default_bounds = {"max_k": 3, "max_d": 10}

    def run(self, max_k: int, max_d: int, **_) -> VerificationReport:
        report = self.new_report({"max_k": max_k, "max_d": max_d})
        report.coordinate_names = ("k", "d")
        return report.merge(sweep_conjecture_W(max_k, max_d, self.table))
