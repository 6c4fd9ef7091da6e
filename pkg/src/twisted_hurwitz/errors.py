"""Exception types shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(RuntimeError):
    """A requested computation exceeds its configured work budget."""

    def __init__(self, message: str, workload: int | None = None):
        super().__init__(message)
        self.workload = workload


class DegeneracyError(ArithmeticError):
    """An eigenvalue collision or broken triangularity makes a Jack polynomial ill-defined."""
