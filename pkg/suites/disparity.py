from combinatorics.stabilization import verify_disparity
from core.reports import VerificationReport
from suites.base_suite import BaseSuite


class DisparitySuite(BaseSuite):
    name = "disparity"
    description = "disparity lower bound off 1-initial permutations; maximum weight on S'_n"
    default_bounds = {"max_n": 8}

    def run(self, max_n: int, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n})
        report.coordinate_names = ("n", "d", "perm")
        return report.merge(verify_disparity(max_n))
