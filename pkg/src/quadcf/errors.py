"""Exception types shared across the package."""


class QuadCFError(Exception):
    """Base class for all errors raised by quadcf."""


class InputOutOfRange(QuadCFError, ValueError):
    """Input would leave the admissible 64-bit integer range."""


class NotAnIrrational(QuadCFError, ValueError):
    """The point does not give a quadratic irrational (non-real or rational root)."""


class NotNormalized(QuadCFError, ValueError):
    pass


class PeriodOverflow(QuadCFError, RuntimeError):
    """Period search ran past its step cap; periods are finite, so this is a bug."""


class CycleOverflow(QuadCFError, RuntimeError):
    pass


class DegenerateForm(QuadCFError, ValueError):
    """A river step hit a zero face value, which only happens for square discriminants."""


class SieveTooSmall(QuadCFError, ValueError):
    pass


class InvalidDiscriminant(QuadCFError, ValueError):
    pass


class ResourceLimit(QuadCFError, MemoryError):
    pass


class EmptyOmega(QuadCFError, ValueError):
    """No quadratic-irrational points in the requested disc."""


class InvalidWeight(QuadCFError, ValueError):
    pass


class PrePeriodFound(QuadCFError, RuntimeError):
    """Expansion of a fractional part repeated a state other than its first one."""
