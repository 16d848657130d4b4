"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Raised when the input polygon or side pairing is not usable.

    Examples: a pairing matrix that does not map its side onto its partner,
    a vertex angle sum that is not an integer submultiple of 2*pi, or a
    matrix with the wrong determinant.
    """


class CodingError(RuntimeError):
    """Raised when construction of the Markov coding breaks down.

    This signals a genuine failure of the expected combinatorial structure
    (an interval image that is not a union of partition intervals, a cut
    point whose orbit leaves the cut point set, and so on), not a numerical
    tolerance issue.
    """


class VerificationError(AssertionError):
    """Raised by explicit verification entry points when a hypothesis fails."""
