#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Logging setup and the base class every fschar domain object derives from.
"""

import logging
import os
import time
import warnings

LOG_ENV = 'FSCHAR_LOG'


def setup_log(log_path=None):  # pragma: no cover
    """Create the package logger. Records are key=value lines::

        ts=2016-10-16 12:00:00,000 event=verify.done id=1476644400 agree=True

    Parameters
    ----------
    log_path : str, optional
        Directory for fschar.log. Without it records go to stderr.

    Returns
    -------
    logging.Logger
        The 'fschar' logger.
    """
    logger = logging.getLogger('fschar')

    if log_path:
        # caller owns the directory
        handler = logging.FileHandler(os.path.join(log_path, 'fschar.log'))
    else:
        handler = logging.StreamHandler()

    handler.setFormatter(logging.Formatter('ts=%(asctime)s %(message)s'))
    logger.addHandler(handler)
    logger.setLevel(logging.INFO)

    return logger


log = setup_log()  # pylint: disable=invalid-name


def _emit(event, msg):  # pragma: no cover
    log.info('event=%s id=%s %s', event, int(time.time()), msg)


def log_enabled():
    """True when the FSCHAR_LOG environment variable is set."""
    return LOG_ENV in os.environ


def log_event(event, msg='', format_args=tuple()):  # pragma: no cover
    """FscharBase._log() for module level functions.

    Parameters
    ----------
    event : str
        Dotted event name, ie: 'configs.start'.
    msg : str
        Message with str.format() placeholders.
    format_args : tuple
        Placeholder values, only formatted when logging is on.
    """
    if log_enabled():
        _emit(event, msg.format(*format_args))


class FscharBase(object):  # pylint: disable=too-few-public-methods
    """
    Base class giving every domain object the gated logger and the
    warning helper.
    """
    __slots__ = ('_logger',)

    def __init__(self):
        self._logger = _emit

    def _log(self, event, msg='', format_args=tuple()):  # pragma: no cover
        """Emit a record when FSCHAR_LOG is set.

        Parameters
        ----------
        event : str
            Dotted event name, ie: 'series.mul'.
        msg : str
            Message with str.format() placeholders.
        format_args : tuple
            Placeholder values. Series and monomial lists can be large, so
            they are not stringified unless logging is on.
        """
        if log_enabled():
            self._logger(event, msg.format(*format_args))

    def _warn(self, msg, warn_type):  # pylint: disable=no-self-use
        """Issue a python warning of one of the fschar warning classes.

        Parameters
        ----------
        msg : str
            Warning text.
        warn_type : type
            CacheWarning, ...
        """
        warnings.warn(msg, warn_type, stacklevel=2)
