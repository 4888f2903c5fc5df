import logging
from math import factorial

from combinatorics.perm_core import _descents, bij_f, bij_g, canonical_weight, format_word, permutations_of
from core.reports import VerificationReport
from suites.base_suite import BaseSuite

log = logging.getLogger(__name__)


class BijectionSuite(BaseSuite):
    """
    f: S_n -> S'_{n+1} keeps the weight, adds one descent, is inverted by g,
    and hits every permutation ending in 1 exactly once.
    """

    name = "bijection"
    description = "the map pi_L 1 pi_R -> pi_R (n+1) pi_L 1 onto S'_(n+1)"
    default_bounds = {"max_n": 8}

    def run(self, max_n: int, **_) -> VerificationReport:
        report = self.new_report({"max_n": max_n})
        report.coordinate_names = ("n", "perm")
        for n in range(1, max_n + 1):
            images = set()
            for word in permutations_of(n):
                image = bij_f(word).word
                coords = {"n": n, "perm": format_word(word)}
                report.record("ends-in-one", coords, 1, image[-1])
                report.record("weight-preserved", coords, canonical_weight(word), canonical_weight(image))
                report.record("descent-added", coords, _descents(word) + 1, _descents(image))
                report.record("inverse", coords, word, bij_g(image).word)
                images.add(image)
            # |S'_{n+1}| = n!, so n! distinct images ending in 1 is a bijection.
            report.record("image-size", {"n": n, "perm": ""}, factorial(n), len(images))
            log.debug(f"Bijection checked for n={n}")
        report.violations = report.sorted_violations()
        return report
