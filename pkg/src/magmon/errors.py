"""Exception types shared across the package.

Everything derives from MagmonError so callers (notably the CLI) can map
library failures to exit codes without enumerating modules. All concrete
errors are also ValueErrors, so generic code keeps working.
"""


class MagmonError(Exception):
    """Base class for all errors raised by this package."""


class InvalidElementError(MagmonError, ValueError):
    """An element index or table entry lies outside the carrier."""


class ArityError(MagmonError, ValueError):
    """Wrong number of inputs, or a nonpositive arity."""


class PathError(MagmonError, ValueError):
    """An occurrence path does not describe a node of the given tree."""


class CarrierMismatchError(MagmonError, ValueError):
    """Two objects live over carriers of different sizes."""


class SizeCapError(MagmonError, ValueError):
    """A requested computation would exceed the configured size cap."""


class MembershipError(MagmonError, ValueError):
    """A transformation is not an element of the given monoid."""


class SpecError(MagmonError, ValueError):
    """A context specification is malformed."""


class RankRangeError(MagmonError, ValueError):
    """A rank bound lies outside [1, m]."""


class ParseError(MagmonError, ValueError):
    """A text input (algebra file, map string, check list) failed to parse."""
