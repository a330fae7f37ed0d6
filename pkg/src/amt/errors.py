"""Exception hierarchy shared across the package.

The CLI maps subclasses of :class:`ValidationFailure` to exit code 1 and
:class:`InputError` to exit code 2.
"""


class AmtError(Exception):
    pass


class InputError(AmtError):
    """Malformed input: bad element strings, schema errors, inconsistent shapes."""


class ValidationFailure(AmtError):
    """A mathematical check failed on well-formed input."""


class RingError(InputError, ValueError):
    pass


class NotInvertibleError(ValidationFailure, ArithmeticError):
    pass


class StructureError(InputError):
    """Duplicate cells, unknown cells, dimension or degree mismatches."""


class FormatError(InputError):
    pass


class DSquaredError(ValidationFailure):
    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0]
        super().__init__(
            f"d^2 != 0: {len(self.violations)} nonzero entries, first at "
            f"({first.target}, {first.source}) [{first.row}, {first.col}] = {first.value}"
        )


class CycleError(ValidationFailure):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("directed cycle: " + " -> ".join(self.cycle + self.cycle[:1]))


class InvalidMatchingError(ValidationFailure):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("invalid matching: " + "; ".join(str(e) for e in self.errors))


class NilpotenceError(ValidationFailure):
    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"perturbation not locally nilpotent within bound {bound}")


class ContractionError(ValidationFailure):
    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class EngineDisagreement(ValidationFailure):
    def __init__(self, differences):
        self.differences = list(differences)
        super().__init__("engines disagree:\n" + "\n".join(self.differences))
