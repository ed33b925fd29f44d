class McgPicError(ValueError):
    """Base class for rejected inputs."""


class SpecParseError(McgPicError):
    pass


class NotAdmissibleError(McgPicError):
    pass


class GenusRangeError(McgPicError):
    """The cover's genus is below 2, where none of the mapping class group results apply."""


class RouteDisagreement(RuntimeError):
    """Two independent computations of the same group differ. Always a bug."""
