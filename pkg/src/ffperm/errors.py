"""Exception hierarchy.  Every library error derives from ``FFPermError``."""


class FFPermError(Exception):
    pass


class NotPrime(FFPermError, ValueError):
    pass


class ReducibleModulus(FFPermError, ValueError):
    pass


class DegreeMismatch(FFPermError, ValueError):
    pass


class CtxMismatch(FFPermError, ValueError):
    pass


class DivisionByZero(FFPermError, ZeroDivisionError):
    pass


class BadSubfieldDegree(FFPermError, ValueError):
    pass


class FieldTooLarge(FFPermError, ValueError):
    pass


class TermBlowup(FFPermError, ValueError):
    pass


class NotAPermutation(FFPermError, ValueError):
    pass


class CombinedMapNotBijective(FFPermError, ValueError):
    pass


class CoefficientNotInSubfield(FFPermError, ValueError):
    pass


class ResultLeftSubfield(FFPermError, ArithmeticError):
    pass


class ZeroParameter(FFPermError, ValueError):
    pass


class WrongField(FFPermError, ValueError):
    pass


class BadR(FFPermError, ValueError):
    pass


class HypothesisViolated(FFPermError, ValueError):
    """A family hypothesis failed; ``condition`` names it."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = condition if not detail else f"{condition}: {detail}"
        super().__init__(msg)


class CaseNotCovered(FFPermError, ValueError):
    pass


class ParseError(FFPermError, ValueError):
    pass
