#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Custom exception and warning classes.
"""


class FscharException(Exception):
    """Base for all fschar exceptions"""

    def __init__(self, value):
        # pylint: disable=super-init-not-called
        self.value = value

    def __str__(self):  # pragma: no cover
        return repr(self.value)


class SeriesException(FscharException):
    """Custom TriGradedSeries exception"""
    pass


class QueryBeyondCutoff(SeriesException):
    """A coefficient or comparison was requested above the series cutoff.
    The answer there is unknown, not zero."""
    pass


class WeightException(FscharException):
    """Custom Weight/Configuration exception"""
    pass


class DimensionMismatch(WeightException):
    """Weight, configuration or profile sizes do not fit together."""
    pass


class UnsupportedWeight(WeightException):
    """Weight outside the k0*L0 + k1*L1 and k1*L1 + k2*L2 families."""
    pass


class ChargeOutOfRange(WeightException):
    """Quasi-particle charge outside 1..level."""
    pass


class CacheException(FscharException):
    """Custom series cache exception"""
    pass


class CacheMiss(CacheException):
    """No usable cache entry for the key."""
    pass


class CacheCorrupt(CacheException):
    """Cache entry failed digest validation."""
    pass


class CacheUnusable(CacheException):
    """The cache directory or an entry path cannot be read or written."""
    pass


class CacheWarning(Warning):
    """Custom series cache warning"""
    pass


class CliException(FscharException):
    """Usage error on the command line."""
    pass


class FormException(FscharException):
    """Custom QuadraticForm/LinearForm/TransitionMatrix exception"""
    pass
