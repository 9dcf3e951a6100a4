"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any


class PolyContractError(Exception):
    """Base class for all errors raised by ``polycontract``."""


class IncompatibleFields(PolyContractError):
    """Two values carry radical parts over different quadratic fields."""


class DivisionByZero(PolyContractError, ZeroDivisionError):
    pass


class ParseError(PolyContractError, ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class DimensionMismatch(PolyContractError, ValueError):
    pass


class DegenerateSpace(PolyContractError, ValueError):
    pass


class DuplicateGenerator(PolyContractError, ValueError):
    pass


class RedundantGenerator(PolyContractError, ValueError):
    """A listed generator is not an extreme point.

    ``witness`` maps the indices of the signed points used (see
    :func:`polycontract.space.signed_points`) to convex weights.
    """

    def __init__(self, message: str, index: int, witness: dict[int, Any]) -> None:
        super().__init__(message)
        self.index = index
        self.witness = witness


class WrongExtremeCount(PolyContractError, ValueError):
    pass


class InvalidDependency(PolyContractError, ValueError):
    pass


class ZeroOperator(PolyContractError, ValueError):
    pass


class NormExceedsOne(PolyContractError, ValueError):
    pass


class NormNotOne(PolyContractError, ValueError):
    pass


class InternalGeometry(PolyContractError, RuntimeError):
    pass


class UnboundedRegion(PolyContractError, ValueError):
    pass


class TooLarge(PolyContractError, ValueError):
    pass


class PreconditionViolated(PolyContractError, ValueError):
    pass


class UnknownName(PolyContractError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class TheoremViolation(PolyContractError, AssertionError):
    """An audit contradicted a theorem whose hypotheses were verified.

    Carries the full report so the offending certificates can be inspected.
    """

    def __init__(self, message: str, report: Any) -> None:
        super().__init__(message)
        self.report = report
