"""Structured pass/fail records for identities checked over a finite range."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

PASS = "pass"
FAIL = "fail"
ERROR = "error"

THEOREM = "theorem"
CONJECTURE = "conjecture"


@dataclass(frozen=True)
class Violation:
    """One failed check: where it failed and what was expected there."""
    check: str
    coordinates: Tuple[Tuple[str, int], ...]
    expected: Any
    actual: Any

    @property
    def coordinate_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.coordinates)

    def describe(self) -> str:
        where = ", ".join(f"{name}={value}" for name, value in self.coordinates)
        return f"{self.check}[{where}]: expected {self.expected}, got {self.actual}"


@dataclass
class VerificationReport:
    """
    Outcome of sweeping one identity over a parameter range.

    The status is derived: `pass` iff there are no violations, unless the run
    itself raised, in which case the engine marks it `error`.
    """
    check: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    severity: str = THEOREM
    coordinate_names: Tuple[str, ...] = ("n", "d", "m")
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def status(self) -> str:
        if self.error is not None:
            return ERROR
        return PASS if not self.violations else FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def record(self, check: str, coordinates: Dict[str, int], expected: Any, actual: Any) -> bool:
        """Counts one check; stores a violation when expected != actual."""
        self.checked += 1
        if expected == actual:
            return True
        self.violations.append(Violation(check, tuple(coordinates.items()), expected, actual))
        return False

    def record_differs(self, check: str, coordinates: Dict[str, int], left: Any, right: Any) -> bool:
        """Counts one check that `left` and `right` must differ."""
        self.checked += 1
        if left != right:
            return True
        self.violations.append(Violation(check, tuple(coordinates.items()), f"!= {right}", left))
        return False

    def fail(self, check: str, coordinates: Dict[str, int], expected: Any, actual: Any):
        """Counts one check that is known to have failed."""
        self.checked += 1
        self.violations.append(Violation(check, tuple(coordinates.items()), expected, actual))

    def merge(self, other: 'VerificationReport') -> 'VerificationReport':
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        if other.error is not None and self.error is None:
            self.error = other.error
        return self

    def sorted_violations(self) -> List[Violation]:
        return sorted(self.violations, key=lambda v: (v.check, tuple(value for _, value in v.coordinates)))

    def render_text(self) -> str:
        params = " ".join(f"{key}={value}" for key, value in self.parameters.items())
        lines = [f"{self.check} ({self.severity}) {params}".rstrip(),
                 f"status: {self.status}",
                 f"checked: {self.checked}",
                 f"violations: {len(self.violations)}"]
        if self.error is not None:
            lines.append(f"error: {self.error}")
        lines.extend(f"  {violation.describe()}" for violation in self.sorted_violations())
        lines.extend(f"note: {note}" for note in self.notes)
        return "\n".join(lines) + "\n"

    def render_csv(self) -> str:
        """Rows `check,<coordinate names>,expected,actual,status`."""
        violations = self.sorted_violations()
        names = list(self.coordinate_names)
        for violation in violations:
            for name in violation.coordinate_names:
                if name not in names:
                    names.append(name)

        rows = []
        for violation in violations:
            coords = dict(violation.coordinates)
            rows.append([violation.check, *(coords.get(name, "") for name in names),
                         violation.expected, violation.actual, FAIL])
        if not violations:
            rows.append([self.check, *("" for _ in names), "", "", self.status])
        frame = pd.DataFrame(rows, columns=["check", *names, "expected", "actual", "status"], dtype=object)
        return frame.to_csv(index=False, lineterminator="\n")
