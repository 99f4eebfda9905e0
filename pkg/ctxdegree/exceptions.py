class ContextualityError(Exception):
    def __init__(self, message=None, errors=None, path=None):
        if errors:
            message = ', '.join(errors)

        self.errors = errors
        self.path = path

        super(ContextualityError, self).__init__(message)

    def __str__(self):
        if self.path is None:
            return str(self.args[0])
        return "{0}, at {1}".format(self.args[0], self.path)


class ParamValidationError(ContextualityError):
    pass


class InvalidTable(ContextualityError):
    pass


class InvalidObservables(ContextualityError):
    pass


class InvalidDocument(ContextualityError):
    pass


class UnknownPair(ContextualityError):
    pass


class DegenerateInput(ContextualityError):
    pass


class Infeasible(ContextualityError):
    def __init__(self, message=None, errors=None, path=None, certificate=None):
        self.certificate = certificate
        super(Infeasible, self).__init__(message, errors=errors, path=path)


class Unbounded(ContextualityError):
    pass


class MismatchError(ContextualityError):
    """Base class for disagreements between two independent computations."""
    pass


class FacetMismatch(MismatchError):
    def __init__(self, message=None, errors=None, path=None, unmatched=None, missing=None):
        self.unmatched = list(unmatched or [])
        self.missing = list(missing or [])
        super(FacetMismatch, self).__init__(message, errors=errors, path=path)


class OracleMismatch(MismatchError):
    def __init__(self, message=None, errors=None, path=None, counterexample=None):
        self.counterexample = counterexample
        super(OracleMismatch, self).__init__(message, errors=errors, path=path)
