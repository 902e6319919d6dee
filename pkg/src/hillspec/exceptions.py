"""Exception hierarchy shared by every module."""


class HillSpecError(Exception):
    """Base class; ``kind`` is what the CLI reports in its error envelope."""

    kind = "error"


class ValidationError(HillSpecError, ValueError):
    kind = "validation"


class ParseError(ValidationError):
    """Malformed serialized input. ``field`` names the offending entry."""

    kind = "parse"

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class DomainError(ValidationError):
    """Input outside the one-sided potential class (e.g. a coefficient at index <= 0)."""

    kind = "domain"


class ResonantDenominator(HillSpecError, ArithmeticError):
    """A coefficient denominator vanishes: (n, t) sits on a double eigenvalue."""

    kind = "resonant_denominator"

    def __init__(self, n, p, t, detail=""):
        self.n = n
        self.p = p
        self.t = t
        msg = f"vanishing denominator at n={n}, p={p}, t={t!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ComplexityGuard(HillSpecError, ValueError):
    """Refuses an exponential enumeration that would be too large."""

    kind = "complexity_guard"
