#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Various utilities for the fschar code. JSON encoding and digests used by
the cache and writers, the Options bag used for run configuration, time
helpers for cache timestamps and timings, integer checks, and the worker
pool reduction used by the --jobs option.
"""

import datetime
import hashlib
import json
import multiprocessing

from functools import reduce

import humanize
import pytz
import six
import tzlocal

from pyrsistent import PVector

# cache entries are stamped in aware UTC, shown in local time

EPOCH = datetime.datetime.utcfromtimestamp(0).replace(tzinfo=pytz.UTC)
LOCAL_TZ = tzlocal.get_localzone()
STAMP_FORMAT = '%Y-%m-%d %H:%M:%S %Z'


def aware_utcnow():
    """The current time as an aware UTC datetime, whole seconds only.

    Returns
    -------
    datetime.datetime
        Aware datetime with tzinfo pytz.UTC.
    """
    return datetime.datetime.utcnow().replace(tzinfo=pytz.UTC, microsecond=0)


def ms_from_dt(dtime):
    """Milliseconds since the epoch for an aware datetime. This is what
    goes into the stored_at field of a cache entry.

    Parameters
    ----------
    dtime : datetime.datetime
        Aware datetime.

    Returns
    -------
    int
        Milliseconds since 1970-01-01 UTC.
    """
    return int((dtime - EPOCH).total_seconds() * 1000)


def dt_from_ms(msec):
    """Inverse of ms_from_dt().

    Parameters
    ----------
    msec : int
        Milliseconds since 1970-01-01 UTC.

    Returns
    -------
    datetime.datetime
        Aware UTC datetime.
    """
    return EPOCH + datetime.timedelta(milliseconds=msec)


def format_local(dtime):
    """Render an aware datetime in the local timezone for the log.

    Parameters
    ----------
    dtime : datetime.datetime
        Aware datetime.

    Returns
    -------
    str
        Text like 2016-10-16 12:00:00 PDT.
    """
    return dtime.astimezone(LOCAL_TZ).strftime(STAMP_FORMAT)


def humanize_duration(seconds):
    """Wall clock seconds as words, ie: 'a minute'.

    Parameters
    ----------
    seconds : float
        Elapsed seconds.

    Returns
    -------
    str
        Humanized duration.
    """
    return humanize.naturaldelta(datetime.timedelta(seconds=seconds))

# json and digests


def canonical_json(value):
    """Serialize plain data with sorted keys and compact separators so
    equal values always produce identical text.

    Parameters
    ----------
    value : obj
        Plain (json-able) data, or objects with a to_json() method.

    Returns
    -------
    str
        Canonical JSON text.
    """
    return json.dumps(value, sort_keys=True, separators=(',', ':'), cls=ObjectEncoder)


def stable_digest(value):
    """SHA-256 hex digest of the canonical JSON form of value.

    Parameters
    ----------
    value : obj
        Plain (json-able) data.

    Returns
    -------
    str
        Hex digest.
    """
    return hashlib.sha256(canonical_json(value).encode('utf-8')).hexdigest()


class ObjectEncoder(json.JSONEncoder):
    """
    JSON encoder that falls back on the to_json() method every fschar
    domain object has, so lists of Configuration or QPMonomial objects
    can go straight to json.dumps(..., cls=ObjectEncoder).
    """

    def default(self, obj):  # pylint: disable=method-hidden
        to_json = getattr(obj, 'to_json', None)
        if to_json is not None:
            return to_json()

        return super(ObjectEncoder, self).default(obj)

# run configuration


class Options(object):  # pylint: disable=too-few-public-methods
    """
    Attribute bag for run configuration (weight, ell, cutoff, format,
    cache_dir, jobs). Attributes that were never set read as None::

        opts = Options(cutoff=20)
        opts.jobs         # None
        opts.jobs = 4

    Parameters
    ----------
    **kwargs
        Initial values.
    """

    def __init__(self, **kwargs):
        self.__dict__['_values'] = dict(kwargs)

    def __getattr__(self, name):
        return self.__dict__['_values'].get(name)

    def __setattr__(self, name, value):
        self.__dict__['_values'][name] = value

    def __str__(self):
        return canonical_json(self._values)

    def to_dict(self):  # pylint: disable=missing-docstring
        return dict(self._values)

# type checks


def is_pvector(val):
    """True for a pyrsistent PVector (pvector() is the factory, PVector
    the type).

    Parameters
    ----------
    val : obj
        Any value.

    Returns
    -------
    bool
    """
    return isinstance(val, PVector)


def is_int(val):
    """Test if a value is an integer (bools excluded).

    Parameters
    ----------
    val : obj
        A value

    Returns
    -------
    bool
        Is it an integer?
    """
    return isinstance(val, six.integer_types) and not isinstance(val, bool)


def is_nonneg_int(val):
    """Test if a value is an integer >= 0.

    Parameters
    ----------
    val : obj
        A value

    Returns
    -------
    bool
        Is it a nonnegative integer?
    """
    return is_int(val) and val >= 0

# worker pool


def split_tasks(tasks, parts):
    """Deal tasks round-robin into at most parts non-empty lists.

    Parameters
    ----------
    tasks : list
        Work items.
    parts : int
        Number of buckets.

    Returns
    -------
    list
        List of lists of work items.
    """
    parts = max(1, min(parts, len(tasks)))
    buckets = [list() for _ in range(parts)]
    for i, task in enumerate(tasks):
        buckets[i % parts].append(task)
    return buckets


def pool_reduce(func, tasks, jobs, combine, initial):
    """
    Map func over tasks, in a multiprocessing.Pool when jobs > 1, and
    fold the results with combine starting from initial.

    combine must be associative and commutative (exact series addition
    is) so the answer never depends on the schedule. func and the tasks
    must be picklable: module level functions and plain tuples.

    Parameters
    ----------
    func : function
        Module level function of one task.
    tasks : list
        Work items.
    jobs : int
        Worker count; 1 or less runs in process.
    combine : function
        Binary reduction.
    initial : obj
        Identity for combine.

    Returns
    -------
    obj
        The reduced value.
    """
    tasks = list(tasks)

    if jobs is None or jobs <= 1 or len(tasks) <= 1:
        results = [func(i) for i in tasks]
    else:
        pool = multiprocessing.Pool(min(jobs, len(tasks)))
        try:
            results = pool.map(func, tasks)
        finally:
            pool.close()
            pool.join()

    return reduce(combine, results, initial)
