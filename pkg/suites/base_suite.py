from abc import ABC, abstractmethod
from typing import Dict, Optional

from combinatorics.eulerian import EulerianTable, default_table
from core.reports import THEOREM, VerificationReport


class BaseSuite(ABC):
    """
    Abstract base class for all verification suites.

    A suite sweeps one family of identities over a finite range and returns a
    single VerificationReport. Subclasses are discovered by the
    VerificationEngine from the `suites` package; `name` is what the user
    types after `qeuler verify`.

    Attributes:
        name (str): The suite name used on the command line.
        description (str): One line shown in the suite listing.
        severity (str): `theorem`, or `conjecture` when failures are findings.
        default_bounds (Dict[str, int]): Every bound the suite accepts, with its default.
    """

    name: str = ""
    description: str = ""
    severity: str = THEOREM
    default_bounds: Dict[str, int] = {}

    def __init__(self, table: Optional[EulerianTable] = None):
        self.table = default_table if table is None else table

    @abstractmethod
    def run(self, **bounds: int) -> VerificationReport:
        """
        Runs the sweep.

        Args:
            **bounds: Values for the keys of `default_bounds`, already merged
                      with the defaults by the engine.

        Returns:
            VerificationReport: The merged outcome of every check in the sweep.
        """
        pass

    def new_report(self, bounds: Dict[str, int]) -> VerificationReport:
        return VerificationReport(self.name, dict(bounds), severity=self.severity)

    def __str__(self) -> str:
        return f"{self.name} (bounds: {self.default_bounds})"
