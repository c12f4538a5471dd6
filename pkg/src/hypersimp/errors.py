"""Exception hierarchy shared by the library, CLI, and HTTP service."""


class HypersimpError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(HypersimpError):
    """A parameter is out of its documented domain (e.g. s < 1, unknown bar id)."""


class ValidationError(HypersimpError):
    """Input data violates a structural invariant (dangling references, duplicate ids)."""


class ParseError(HypersimpError):
    """Input bytes are not well-formed for the requested format."""
