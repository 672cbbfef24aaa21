"""Error taxonomy shared by the library and the CLI."""

from __future__ import annotations


class PolymodError(Exception):
    """Base class for all domain errors (CLI exit code 1)."""

    code = "error"

    def payload(self) -> dict:
        return {"type": self.code, "message": str(self)}


class ParseError(PolymodError):
    code = "parse-error"


class ArityMismatch(PolymodError):
    code = "arity-mismatch"


class UnsupportedExpr(PolymodError):
    code = "unsupported-expr"


class NotAnLModule(PolymodError):
    """Raised when a span has a nonzero element vanishing in its first s coordinates."""

    code = "not-an-l-module"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Underdetermined(PolymodError):
    """Raised when operator inference leaves coefficient slots unpinned."""

    code = "underdetermined"

    def __init__(self, message, free_slots=()):
        super().__init__(message)
        self.free_slots = tuple(free_slots)

    def payload(self) -> dict:
        out = super().payload()
        out["free_slots"] = [{"i": i, "j": j} for (i, j) in self.free_slots]
        return out


class NotNilpotent(PolymodError):
    code = "not-nilpotent"


class RangeExceeded(PolymodError):
    code = "range-exceeded"


class ThresholdUnmet(PolymodError):
    """A per-n side condition of the certified bound chain failed."""

    code = "threshold-unmet"

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = tuple(failures)

    def payload(self) -> dict:
        out = super().payload()
        out["failures"] = list(self.failures)
        return out


class Cancelled(PolymodError):
    code = "cancelled"
