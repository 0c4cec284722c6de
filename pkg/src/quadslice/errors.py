"""Shared exception types and the report object returned by verification runs."""


class StructureError(ValueError):
    """Operands do not fit together (cap or variable mismatch, non-square matrix)."""


class NonInvertibleError(ArithmeticError):
    """Inversion or exact division requested where none exists."""


class VerificationError(AssertionError):
    """A mathematical identity that must hold exactly failed to hold."""


class ResourceGuardError(RuntimeError):
    """A search was asked to exceed its configured size guard."""


class CheckReport:
    """Outcome of a verification routine: a named list of checks that all passed.

    Routines raise VerificationError on the first failing identity, so a
    returned report always has passed=True; the lines record what was checked.
    """

    def __init__(self, name, lines=None):
        self.name = name
        self.lines = list(lines or [])
        self.passed = True

    def add(self, line):
        self.lines.append(line)

    def __repr__(self):
        return f"CheckReport({self.name!r}, {len(self.lines)} checks, passed={self.passed})"
