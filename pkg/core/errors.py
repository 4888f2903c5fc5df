"""Exception hierarchy shared by every package of the project."""


class QEulerError(ValueError):
    """Base class for all domain errors raised by qeulerian."""


class PermutationError(QEulerError):
    """A word could not be parsed or is not a valid permutation for the operation."""


class DomainError(QEulerError):
    """Arguments lie outside the domain where an operation or identity is defined."""


class EnumerationCeilingError(QEulerError):
    """Brute-force enumeration was refused because n exceeds the configured ceiling."""

    def __init__(self, n: int, ceiling: int):
        self.n = n
        self.ceiling = ceiling
        super().__init__(
            f"n={n} exceeds the enumeration ceiling ({ceiling}); "
            f"use the recurrence engine (--method recur) or raise QEULER_ENUM_CEILING"
        )


class CacheFormatError(QEulerError):
    """A coefficient cache file is malformed or fails the E_n invariants."""

    def __init__(self, message: str, n: int | None = None):
        self.n = n
        super().__init__(message if n is None else f"E_{n}: {message}")


class InvariantError(QEulerError):
    """A computed or loaded E_n violates a structural invariant (mass, degree bounds, golden data)."""

    def __init__(self, n: int, problems):
        self.n = n
        self.problems = list(problems)
        super().__init__(f"E_{n} fails invariants: " + "; ".join(self.problems))


class UnknownSuiteError(QEulerError):
    """No verification suite is registered under the requested name."""
