"""Exception hierarchy shared by every module."""


class FormagraphError(Exception):
    """Base class for all library errors."""


class OrderCapExceeded(FormagraphError):
    pass


class LatticeCapExceeded(FormagraphError):
    pass


class InvalidPermutation(FormagraphError):
    pass


class InvalidTable(FormagraphError):
    pass


class NotAnAutomorphism(FormagraphError):
    pass


class NotAHomomorphism(FormagraphError):
    pass


class NotNormal(FormagraphError):
    pass


class NotPrime(FormagraphError):
    pass


class NoResidual(FormagraphError):
    pass


class UnsupportedFormation(FormagraphError):
    pass


class UnknownBuiltin(FormagraphError):
    pass


class ParseError(FormagraphError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)
