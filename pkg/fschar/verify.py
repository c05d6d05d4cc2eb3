#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Run the independent character computations and check they agree.
"""

import time
import warnings

from .admissible import Weight, char_configs
from .bases import FscharBase, log_event
from .exceptions import (
    CacheCorrupt,
    CacheMiss,
    CacheUnusable,
    CacheWarning,
    FscharException,
    UnsupportedWeight,
)
from .fermionic import (
    char_fermionic_M,
    char_fermionic_N,
    char_fermionic_georgiev,
    summation_size,
)
from .io.cache import SeriesCache
from .quasiparticle import char_qp
from .util import Options, humanize_duration, is_nonneg_int

# name -> (character function, counter of the objects it works through)
METHODS = {
    'configs': (char_configs, lambda w, d, s: sum(s.degree_counts())),
    'qp': (char_qp, lambda w, d, s: sum(s.degree_counts())),
    'fermionic-m': (char_fermionic_M, lambda w, d, s: summation_size(w, d, 'm')),
    'fermionic-n': (char_fermionic_N, lambda w, d, s: summation_size(w, d, 'n')),
    'georgiev': (char_fermionic_georgiev, lambda w, d, s: summation_size(w, d, 'georgiev')),
}

METHOD_ORDER = ('configs', 'qp', 'fermionic-m', 'fermionic-n', 'georgiev')


def _check_methods(methods):
    methods = list(METHOD_ORDER if methods is None else methods)
    for i in methods:
        if i not in METHODS:
            raise FscharException('unknown method {0!r}, expected one of {1}'.format(
                i, METHOD_ORDER))
    return methods


def run_characters(weight, cutoff, methods=None, options=None, timings=None):
    """
    Compute the character by each requested method, independently.

    A method that fails (e.g. UnsupportedWeight) has the exception
    object as its value; the other methods still run. A cache that
    cannot be read or written fails the whole run.

    Parameters
    ----------
    weight : Weight
        The weight.
    cutoff : int
        Inclusive q-degree cutoff.
    methods : list, optional
        Subset of METHOD_ORDER; all of them by default.
    options : Options, optional
        jobs and cache_dir.
    timings : dict, optional
        Filled with method -> wall clock seconds.

    Returns
    -------
    dict
        method -> TriGradedSeries or FscharException

    Raises
    ------
    CacheUnusable
        The cache directory or one of its entries is not usable.
    """
    weight = Weight(weight)
    methods = _check_methods(methods)
    options = options or Options()
    cache = SeriesCache(options.cache_dir) if options.cache_dir else None

    results = dict()

    for method in methods:
        start = time.time()
        try:
            results[method] = _compute(method, weight, cutoff, options, cache)
        except CacheUnusable:
            raise
        except FscharException as err:
            results[method] = err
        if timings is not None:
            timings[method] = time.time() - start

    return results


def _compute(method, weight, cutoff, options, cache):
    func = METHODS[method][0]

    if cache is not None:
        try:
            return cache.load(weight, method, cutoff)
        except CacheMiss:
            pass
        except CacheCorrupt as err:
            log_event('cache.corrupt', 'method={0} err={1}', (method, err))
            warnings.warn('recomputing {0}: {1}'.format(method, err), CacheWarning)

    series = func(weight, cutoff, jobs=options.jobs or 1)

    if cache is not None:
        cache.store(weight, method, series)

    return series


class VerificationReport(FscharBase):
    """
    Outcome of verify().

    Parameters
    ----------
    weight : Weight
        The weight checked.
    cutoff : int
        Degrees compared: 0..cutoff.
    methods : list
        Methods that produced a series.
    first_discrepancy : dict or None
        {"key": {n1, n2, d}, "coefficients": {method: coeff}} for the
        smallest disagreeing key in (d, n1, n2) order.
    timings : dict
        method -> seconds.
    counts : dict
        method -> objects enumerated or summed.
    errors : dict
        method -> message, for methods that could not run.
    """
    __slots__ = ('_weight', '_cutoff', '_methods', '_first', '_timings', '_counts',
                 '_errors')

    def __init__(self, weight, cutoff, methods, first_discrepancy=None,  # pylint: disable=too-many-arguments
                 timings=None, counts=None, errors=None):
        super(VerificationReport, self).__init__()

        self._weight = Weight(weight)
        self._cutoff = cutoff
        self._methods = list(methods)
        self._first = first_discrepancy
        self._timings = dict(timings or {})
        self._counts = dict(counts or {})
        self._errors = dict(errors or {})

    @property
    def weight(self):  # pylint: disable=missing-docstring
        return self._weight

    @property
    def cutoff(self):  # pylint: disable=missing-docstring
        return self._cutoff

    @property
    def methods(self):  # pylint: disable=missing-docstring
        return list(self._methods)

    @property
    def agree(self):
        """True iff no discrepancy was found."""
        return self._first is None

    @property
    def first_discrepancy(self):  # pylint: disable=missing-docstring
        return self._first

    @property
    def timings(self):  # pylint: disable=missing-docstring
        return dict(self._timings)

    @property
    def counts(self):  # pylint: disable=missing-docstring
        return dict(self._counts)

    @property
    def errors(self):  # pylint: disable=missing-docstring
        return dict(self._errors)

    def exit_code(self):
        """0 on agreement, 1 on a discrepancy."""
        return 0 if self.agree else 1

    def timing_lines(self):
        """Human readable timings for the diagnostic stream."""
        return ['{0}: {1} ({2:.3f}s)'.format(m, humanize_duration(s), s)
                for m, s in sorted(self._timings.items())]

    def to_json(self, with_timings=False):
        """
        Report as plain data. Timings are left out by default since they
        differ between runs.

        Returns
        -------
        dict
            The report.
        """
        data = dict(
            weight=self._weight.to_json(),
            cutoff=self._cutoff,
            methods=self._methods,
            agree=self.agree,
            first_discrepancy=self._first,
            counts=self._counts,
            errors=self._errors,
        )
        if with_timings:
            data['timings'] = self._timings
        return data


def verify(weight, cutoff, methods=None, options=None):
    """
    Run every method that supports the weight and compare the series
    coefficient by coefficient through the cutoff.

    Parameters
    ----------
    weight : Weight
        The weight.
    cutoff : int
        Inclusive q-degree cutoff.
    methods : list, optional
        Subset of METHOD_ORDER; all of them by default.
    options : Options, optional
        jobs and cache_dir.

    Returns
    -------
    VerificationReport
        The outcome.

    Raises
    ------
    UnsupportedWeight
        Raised when fewer than two methods can handle the weight, so
        there is nothing to compare.
    """
    weight = Weight(weight)

    if not is_nonneg_int(cutoff):
        raise FscharException('cutoff must be a nonnegative integer, got {0}'.format(cutoff))

    methods = _check_methods(methods)
    timings = dict()
    results = run_characters(weight, cutoff, methods, options, timings)

    series = [(m, results[m]) for m in methods if not isinstance(results[m], FscharException)]
    errors = {m: str(results[m]) for m in methods if isinstance(results[m], FscharException)}

    if len(series) < 2:
        raise UnsupportedWeight('weight {0}: only {1} could run, errors {2}'.format(
            weight.label(), [m for m, _ in series], errors))

    reference_name, reference = series[0]
    first = None

    for _, other in series[1:]:
        key = reference.first_difference(other, cutoff)
        if key is not None and (first is None or key.order_key() < first.order_key()):
            first = key

    discrepancy = None
    if first is not None:
        discrepancy = dict(
            key=first.to_json(),
            coefficients={m: str(s.coeff(first)) for m, s in series},
        )

    counts = dict()
    for name, result in series:
        try:
            counts[name] = METHODS[name][1](weight, cutoff, result)
        except FscharException:
            counts[name] = None

    report = VerificationReport(
        weight, cutoff, [m for m, _ in series], discrepancy, timings, counts, errors)

    log_event('verify.done', 'weight={0} cutoff={1} agree={2} reference={3}',
              (weight, cutoff, report.agree, reference_name))

    return report
