from typing import Optional, Union

Degree = Union[int, tuple[int, int]]

EXIT_INPUT_ERROR = 1
EXIT_CRITERIA_FAILURE = 2
EXIT_USAGE = 64


def format_degree(degree: Degree) -> str:
    """
    Render a degree the way every report prints it: `3` for Z, `(1,2)` for Z^2.

    Args:
        degree (Degree): An integer or an integer pair.

    Returns:
        str: The rendered degree.
    """
    if isinstance(degree, tuple):
        return "({},{})".format(*degree)
    return str(degree)


class PmodError(Exception):
    """
    Base class of every error raised by the toolkit.

    Attributes:
        exit_code (int): Process exit code used by the command line surface.
        status_code (int): HTTP status code used by the API surface.
    """

    exit_code: int = EXIT_INPUT_ERROR
    status_code: int = 422


class ParseError(PmodError):
    """Raised when a document is not well-formed or does not follow the file format."""

    def __init__(self, message: str, location: Optional[str] = None) -> None:
        """Keep the JSON location of the fault, when known, and append it to the message."""
        self.location = location
        super().__init__(f"{message} (at {location})" if location else message)


class ValidationError(PmodError):
    """Raised when a parsed module breaks a shape invariant; the offending index is part of the message."""


class ShapeMismatch(PmodError):
    """Raised by matrix kernels on incompatible operand shapes."""


class SingularMatrix(PmodError):
    """Raised when inverting a matrix whose rank is below its size."""


class DegreeOutOfWindow(PmodError):
    """Raised when a degree does not lie inside the stored window."""


class BasisInvalid(PmodError):
    """Raised when a graded basis fails verification where a valid basis is required."""

    exit_code = EXIT_CRITERIA_FAILURE
    status_code = 409


class CriteriaError(PmodError):
    """
    A freeness criterion failed at a degree.

    Attributes:
        degree (Degree): The degree the failure is reported at.
    """

    exit_code = EXIT_CRITERIA_FAILURE
    status_code = 409

    def __init__(self, degree: Degree, detail: str = "") -> None:
        """Record the failing degree and an optional detail."""
        self.degree = degree
        self.detail = detail
        message = f"{type(self).__name__} {format_degree(degree)}"
        super().__init__(f"{message}: {detail}" if detail else message)


class NotInjectiveAt(CriteriaError):
    """A structure map out of `degree` has rank below the source dimension."""

    def __init__(self, degree: Degree, direction: Optional[str] = None, detail: str = "") -> None:
        """Record the direction of the map that is not injective."""
        self.direction = direction
        super().__init__(degree, f"{direction} map; {detail}" if direction else detail)


class NotCommutativeAt(CriteriaError):
    """The unit square ending at `degree` does not commute."""


class IntersectionFailAt(CriteriaError):
    """The images of the horizontal and vertical maps into `degree` meet in more than the diagonal image."""


class UsageError(PmodError):
    """Raised when generator flags are malformed or name degrees outside the requested window."""

    exit_code = EXIT_USAGE
    status_code = 400
