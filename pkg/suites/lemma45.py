from combinatorics.eulerian import en_recur, en_star_brute, en_star_recur
from combinatorics.poly import coeff_x
from core.config import config
from core.reports import VerificationReport
from suites.base_suite import BaseSuite


class Lemma45Suite(BaseSuite):
    """E_k[x^d] = E*_{k+1}[x^(d+1)] with E* enumerated directly, and E*_n = x E_{n-1}."""

    name = "lemma45"
    description = "x-rows of E_k against enumerated E*_(k+1)"
    default_bounds = {"max_n": 8, "jobs": 0}

    def run(self, max_n: int, jobs: int = 0, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n})
        report.coordinate_names = ("k", "d")
        top = min(max_n, config.enumeration_ceiling - 1)
        if top < max_n:
            report.notes.append(f"k capped at {top}: E*_(k+1) is enumerated")
        for k in range(1, top + 1):
            star = en_star_brute(k + 1, jobs=jobs or None)
            ek = en_recur(k, self.table)
            for d in range(k):
                report.record("row-shift", {"k": k, "d": d}, coeff_x(ek, d), coeff_x(star, d + 1))
            report.record("star-recurrence", {"n": k + 1}, star, en_star_recur(k + 1, self.table))
        report.violations = report.sorted_violations()
        return report
