# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
from typing import Any, Optional


class TowerkitError(Exception):
    """
    Base class for all errors raised by towerkit. Carries the message separately so
    reports can embed it without the exception type prefix.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message}


class LimitExceeded(TowerkitError):
    """
    A configured resource limit would be exceeded. Records which limit, its value and
    what was attempted, plus an optional description of where it happened (for example
    the tower step at which a wreath cover blows up).
    """

    def __init__(self, limit_name: str, limit: int, attempted: Optional[int] = None,
                 where: str = ""):
        msg = f"Limit '{limit_name}' = {limit} exceeded"
        if attempted is not None:
            msg += f" (attempted {attempted})"
        if where:
            msg += f" in {where}"
        super().__init__(msg)
        self.limit_name = limit_name
        self.limit = limit
        self.attempted = attempted
        self.where = where

    def to_dict(self) -> dict[str, Any]:
        res = super().to_dict()
        res.update({"limit_name": self.limit_name, "limit": self.limit,
                    "attempted": self.attempted, "where": self.where})
        return res


class DegreeMismatch(TowerkitError):
    pass


class NotNormal(TowerkitError):
    pass


class NotAHomomorphism(TowerkitError):
    pass


class NotAbelian(TowerkitError):
    pass


class NotAnAction(TowerkitError):
    pass


class NotClassTwo(TowerkitError):
    pass


class NotMonomial(TowerkitError):
    pass


class NotInvertible(TowerkitError):
    pass


class DimensionMismatch(TowerkitError):
    pass


class VerificationFailed(TowerkitError):
    pass


class ParseError(TowerkitError):
    """
    A group literal could not be parsed. Records the character position and the
    set of tokens that would have been accepted there.
    """

    def __init__(self, message: str, position: int, expected: Optional[list[str]] = None):
        expected = sorted(set(expected or []))
        msg = f"{message} at position {position}"
        if expected:
            msg += f" (expected one of: {', '.join(expected)})"
        super().__init__(msg)
        self.position = position
        self.expected = expected

    def to_dict(self) -> dict[str, Any]:
        res = super().to_dict()
        res.update({"position": self.position, "expected": self.expected})
        return res


class VerificationResult:
    """
    Outcome of an independent re-verification. Truthy when every check passed,
    otherwise carries the first failure.
    """

    def __init__(self, ok: bool, failure: Optional[str] = None, checks: int = 0):
        super().__init__()
        self.ok = ok
        self.failure = failure
        self.checks = checks

    @staticmethod
    def success(checks: int) -> 'VerificationResult':
        return VerificationResult(True, None, checks)

    @staticmethod
    def failed(failure: str, checks: int = 0) -> 'VerificationResult':
        return VerificationResult(False, failure, checks)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return f"VerificationResult(ok, checks={self.checks})"
        return f"VerificationResult(failed: {self.failure})"

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "failure": self.failure, "checks": self.checks}
