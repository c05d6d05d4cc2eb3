#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
On-disk cache of computed characters.

One file per (method, weight) holding the series of the largest cutoff
computed so far::

    {
    "format": 1,
    "method": "qp",
    "weight": [2, 0, 0],
    "cutoff": 20,
    "series": {...},
    "digest": "<sha256 of the canonical method/weight/cutoff/series>",
    "stored_at": 1476615600000
    }

A request with a smaller cutoff is served by truncation. stored_at is
informational and not covered by the digest.
"""

import json
import os

from ..admissible import Weight
from ..bases import FscharBase
from ..exceptions import (
    CacheCorrupt,
    CacheException,
    CacheMiss,
    CacheUnusable,
    CacheWarning,
    SeriesException,
)
from ..series import TriGradedSeries
from ..util import (
    aware_utcnow,
    canonical_json,
    dt_from_ms,
    format_local,
    is_nonneg_int,
    ms_from_dt,
    stable_digest,
)

CACHE_FORMAT = 1

CACHE_ENV = 'FSCHAR_CACHE_DIR'


def resolve_cache_dir(flag=None):
    """
    The --cache-dir flag wins over the FSCHAR_CACHE_DIR environment
    variable; with neither, caching is off.

    Returns
    -------
    str or None
        Directory path.
    """
    if flag:
        return flag
    return os.environ.get(CACHE_ENV) or None


class SeriesCache(FscharBase):
    """
    Cache rooted at a directory, created on first store.

    Parameters
    ----------
    path : str
        Cache directory.
    """
    __slots__ = ('_path',)

    def __init__(self, path):
        super(SeriesCache, self).__init__()

        if not path:
            raise CacheException('cache directory must be given')

        if os.path.exists(path) and not os.path.isdir(path):
            raise CacheUnusable('cache path {0} is not a directory'.format(path))

        self._path = path

    @property
    def path(self):  # pylint: disable=missing-docstring
        return self._path

    def entry_path(self, weight, method):
        """File holding the (method, weight) entry."""
        weight = Weight(weight)
        name = '{0}-{1}.json'.format(method, '_'.join(str(i) for i in weight.components()))
        return os.path.join(self._path, name)

    @staticmethod
    def _payload(weight, method, series):
        return dict(
            method=method,
            weight=weight.to_json(),
            cutoff=series.cutoff,
            series=series.to_json(),
        )

    def store(self, weight, method, series):
        """
        Write an entry unless one with a larger cutoff is already there.

        Parameters
        ----------
        weight : Weight
            Key part.
        method : str
            Key part.
        series : TriGradedSeries
            Value.

        Returns
        -------
        bool
            True if written.

        Raises
        ------
        CacheUnusable
            The directory or entry file cannot be created or written.
        """
        weight = Weight(weight)
        path = self.entry_path(weight, method)

        try:
            # succeeds only when the stored cutoff is larger
            self.load(weight, method, series.cutoff + 1)
            self._log('cache.keep', 'path={0} cutoff={1}', (path, series.cutoff))
            return False
        except CacheUnusable:
            raise
        except CacheException:
            pass

        payload = self._payload(weight, method, series)
        entry = dict(payload)
        entry['format'] = CACHE_FORMAT
        entry['digest'] = stable_digest(payload)
        entry['stored_at'] = ms_from_dt(aware_utcnow())

        tmp = '{0}.tmp'.format(path)

        try:
            if not os.path.isdir(self._path):
                os.makedirs(self._path)
            with open(tmp, 'w') as fhandle:
                fhandle.write(canonical_json(entry))
            os.replace(tmp, path)
        except OSError as err:
            raise CacheUnusable('cannot write {0}: {1}'.format(path, err))

        self._log('cache.store', 'path={0} cutoff={1}', (path, series.cutoff))

        return True

    def load(self, weight, method, cutoff):
        """
        Read an entry and truncate it to cutoff.

        Parameters
        ----------
        weight : Weight
            Key part.
        method : str
            Key part.
        cutoff : int
            Requested cutoff.

        Returns
        -------
        TriGradedSeries
            Cached series with the requested cutoff.

        Raises
        ------
        CacheMiss
            No entry, an entry of an older format, or one with a smaller
            cutoff.
        CacheCorrupt
            The entry does not parse or fails its digest.
        CacheUnusable
            The entry path cannot be opened, e.g. it is a directory.
        """
        weight = Weight(weight)
        path = self.entry_path(weight, method)

        if not is_nonneg_int(cutoff):
            raise CacheException('cutoff must be a nonnegative integer, got {0}'.format(cutoff))

        if not os.path.exists(path):
            raise CacheMiss('no entry at {0}'.format(path))

        try:
            with open(path) as fhandle:
                entry = json.load(fhandle)
        except ValueError as err:
            raise CacheCorrupt('unreadable entry {0}: {1}'.format(path, err))
        except (IOError, OSError) as err:
            raise CacheUnusable('cannot read {0}: {1}'.format(path, err))

        if not isinstance(entry, dict):
            raise CacheCorrupt('unreadable entry {0}'.format(path))

        if entry.get('format') != CACHE_FORMAT:
            self._warn('ignoring cache entry {0} of format {1}'.format(
                path, entry.get('format')), CacheWarning)
            raise CacheMiss('entry {0} has format {1}'.format(path, entry.get('format')))

        try:
            series = TriGradedSeries.from_json(entry['series'])
        except (KeyError, SeriesException) as err:
            raise CacheCorrupt('bad series in {0}: {1}'.format(path, err))

        payload = self._payload(weight, method, series)

        if entry.get('digest') != stable_digest(payload) or \
                entry.get('cutoff') != series.cutoff:
            raise CacheCorrupt('digest mismatch in {0}'.format(path))

        if series.cutoff < cutoff:
            raise CacheMiss('entry {0} has cutoff {1} < {2}'.format(path, series.cutoff, cutoff))

        if is_nonneg_int(entry.get('stored_at')):
            self._log('cache.load', 'path={0} stored_at={1}',
                      (path, format_local(dt_from_ms(entry['stored_at']))))

        return series.truncate(cutoff)


def cache_store(cache_dir, weight, method, series):
    """Store series under (weight, method); see SeriesCache.store()."""
    return SeriesCache(cache_dir).store(weight, method, series)


def cache_load(cache_dir, weight, method, cutoff):
    """Load the (weight, method) series at cutoff; see SeriesCache.load()."""
    return SeriesCache(cache_dir).load(weight, method, cutoff)
