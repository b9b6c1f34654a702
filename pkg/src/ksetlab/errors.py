"""Exception types shared across the package."""


class GeneralPositionError(ValueError):
    """A point set has coincident points or a collinear triple."""


class OracleSizeError(ValueError):
    """A brute-force oracle was asked to handle more points than its cap."""


class UndefinedWindowError(ValueError):
    """A bound was requested at k = (n-1)/2, where the valid window
    n - 2k - 1 is empty and the closed forms are undefined."""


class LabelingError(ValueError):
    """Class labels are missing, malformed, or not usable for the
    requested operation."""
