#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Exact tri-graded truncated power series in q (degree) and z1, z2 (the two
color charges) over python integers. Every character computation in the
package produces one of these and they are compared coefficient by
coefficient.

Wire format::

    {
    "cutoff": 3,
    "terms": [
        {"n1": 0, "n2": 0, "d": 0, "c": "1"},
        {"n1": 1, "n2": 0, "d": 1, "c": "1"},
        ...
     ]
    }

Terms are sorted by (d, n1, n2) and coefficients are decimal strings.
"""

import collections
import json

from functools import total_ordering

from pyrsistent import pmap

from .bases import FscharBase
from .exceptions import QueryBeyondCutoff, SeriesException
from .util import is_int, is_nonneg_int


class GradeKey(collections.namedtuple('GradeKey', ['n1', 'n2', 'd'])):
    """
    Exponent triple of a term z1^n1 z2^n2 q^d. All components are >= 0.

    Raises
    ------
    SeriesException
        Raised on negative or non-integer components.
    """
    __slots__ = ()

    def __new__(cls, n1, n2, d):
        for i in (n1, n2, d):
            if not is_nonneg_int(i):
                msg = 'GradeKey components must be nonnegative integers, got {0}'.format(
                    (n1, n2, d))
                raise SeriesException(msg)
        return super(GradeKey, cls).__new__(cls, n1, n2, d)

    def order_key(self):
        """Serialization order: degree first, then the two charges."""
        return (self.d, self.n1, self.n2)

    def to_json(self):  # pylint: disable=missing-docstring
        return dict(n1=self.n1, n2=self.n2, d=self.d)


def _key(n1, n2, d):
    """Build a GradeKey without re-validating - hot paths only."""
    return GradeKey._make((n1, n2, d))


@total_ordering
class TriGradedSeries(FscharBase):
    """
    A finite map GradeKey -> integer, truncated at an inclusive q-degree
    cutoff. Values are immutable; every operation returns a new series.

    Normalized on construction: zero coefficients and keys with d above the
    cutoff are dropped.

    Parameters
    ----------
    terms : dict, pyrsistent.pmap or iterable of (key, coeff), optional
        Keys may be GradeKey or plain (n1, n2, d) tuples.
    cutoff : int
        Inclusive maximum q-degree.

    Raises
    ------
    SeriesException
        Raised on a bad cutoff, key or coefficient.
    """
    __slots__ = ('_cutoff', '_terms')

    def __init__(self, terms=None, cutoff=0):
        """create the series"""
        super(TriGradedSeries, self).__init__()

        if not is_nonneg_int(cutoff):
            raise SeriesException('cutoff must be a nonnegative integer, got {0}'.format(cutoff))

        self._cutoff = cutoff

        if terms is None:
            items = []
        elif hasattr(terms, 'items'):
            items = terms.items()
        else:
            items = terms

        data = dict()

        for key, coeff in items:
            if not is_int(coeff):
                raise SeriesException('coefficients must be integers, got {0}'.format(coeff))
            key = key if isinstance(key, GradeKey) else GradeKey(*key)
            if key.d > cutoff:
                continue
            data[key] = data.get(key, 0) + coeff

        self._terms = pmap({k: v for k, v in data.items() if v != 0})

    @classmethod
    def _normalized(cls, data, cutoff):
        """Wrap a dict that is already normalized - internal fast path."""
        obj = cls.__new__(cls)
        FscharBase.__init__(obj)
        obj._cutoff = cutoff  # pylint: disable=protected-access
        obj._terms = pmap(data)  # pylint: disable=protected-access
        return obj

    # accessors

    @property
    def cutoff(self):
        """Inclusive maximum q-degree."""
        return self._cutoff

    def terms(self):
        """The underlying immutable map.

        Returns
        -------
        pyrsistent.pmap
            GradeKey -> int
        """
        return self._terms

    def sorted_terms(self):
        """Terms in canonical (d, n1, n2) order.

        Returns
        -------
        list
            List of (GradeKey, int) tuples.
        """
        return sorted(self._terms.items(), key=lambda kv: kv[0].order_key())

    def size(self):
        """Number of stored (nonzero) terms."""
        return len(self._terms)

    def is_zero(self):
        """True when no term is stored."""
        return len(self._terms) == 0

    def coeff(self, key):
        """
        Coefficient of a single term.

        Parameters
        ----------
        key : GradeKey or tuple
            (n1, n2, d)

        Returns
        -------
        int
            Stored coefficient or 0.

        Raises
        ------
        QueryBeyondCutoff
            The degree is above the cutoff, where the value is unknown.
        """
        key = key if isinstance(key, GradeKey) else GradeKey(*key)

        if key.d > self._cutoff:
            msg = 'coefficient at degree {0} requested from series with cutoff {1}'.format(
                key.d, self._cutoff)
            raise QueryBeyondCutoff(msg)

        return self._terms.get(key, 0)

    def coefficients_at(self, degree):
        """
        The q^degree coefficient as a polynomial in z1, z2.

        Parameters
        ----------
        degree : int
            q-degree

        Returns
        -------
        dict
            (n1, n2) -> int for the nonzero coefficients.

        Raises
        ------
        QueryBeyondCutoff
            Raised if degree is above the cutoff.
        """
        if degree > self._cutoff:
            msg = 'degree {0} requested from series with cutoff {1}'.format(
                degree, self._cutoff)
            raise QueryBeyondCutoff(msg)

        return {(k.n1, k.n2): v for k, v in self._terms.items() if k.d == degree}

    def degree_counts(self):
        """Coefficients summed over the charges (z1 = z2 = 1).

        Returns
        -------
        list
            Entry d is the total coefficient of q^d, for d = 0..cutoff.
        """
        counts = [0] * (self._cutoff + 1)
        for key, val in self._terms.items():
            counts[key.d] += val
        return counts

    # arithmetic

    def add(self, other):
        """
        Coefficient-wise sum. The result cutoff is the smaller of the two.

        Parameters
        ----------
        other : TriGradedSeries
            The other summand.

        Returns
        -------
        TriGradedSeries
            New series.
        """
        cutoff = min(self._cutoff, other.cutoff)
        data = {k: v for k, v in self._terms.items() if k.d <= cutoff}

        for key, val in other.terms().items():
            if key.d > cutoff:
                continue
            total = data.get(key, 0) + val
            if total:
                data[key] = total
            else:
                data.pop(key, None)

        return TriGradedSeries._normalized(data, cutoff)

    def neg(self):
        """Additive inverse."""
        return TriGradedSeries._normalized(
            {k: -v for k, v in self._terms.items()}, self._cutoff)

    def sub(self, other):
        """Coefficient-wise difference."""
        return self.add(other.neg())

    def mul(self, other):
        """
        Convolution product. Keys add component-wise and products above
        the (smaller) cutoff are discarded.

        Parameters
        ----------
        other : TriGradedSeries
            The other factor.

        Returns
        -------
        TriGradedSeries
            New series.
        """
        cutoff = min(self._cutoff, other.cutoff)
        right = sorted(other.terms().items(), key=lambda kv: kv[0].d)
        data = dict()

        for lkey, lval in self._terms.items():
            budget = cutoff - lkey.d
            if budget < 0:
                continue
            for rkey, rval in right:
                if rkey.d > budget:
                    break
                key = _key(lkey.n1 + rkey.n1, lkey.n2 + rkey.n2, lkey.d + rkey.d)
                data[key] = data.get(key, 0) + lval * rval

        return TriGradedSeries._normalized({k: v for k, v in data.items() if v}, cutoff)

    def mul_monomial(self, shift, c=1):
        """
        Multiply by c * z1^n1 z2^n2 q^d.

        Parameters
        ----------
        shift : GradeKey or tuple
            (n1, n2, d) exponents of the monomial.
        c : int, optional
            Scalar factor.

        Returns
        -------
        TriGradedSeries
            New series, truncated at the same cutoff.
        """
        shift = shift if isinstance(shift, GradeKey) else GradeKey(*shift)

        if not is_int(c):
            raise SeriesException('scalar must be an integer, got {0}'.format(c))

        if c == 0:
            return TriGradedSeries._normalized({}, self._cutoff)

        data = dict()

        for key, val in self._terms.items():
            d = key.d + shift.d
            if d > self._cutoff:
                continue
            data[_key(key.n1 + shift.n1, key.n2 + shift.n2, d)] = val * c

        return TriGradedSeries._normalized(data, self._cutoff)

    def truncate(self, cutoff):
        """
        Lower the cutoff. A larger request leaves the series unchanged
        since the missing degrees are unknown.

        Parameters
        ----------
        cutoff : int
            New cutoff.

        Returns
        -------
        TriGradedSeries
            New series.
        """
        cutoff = min(cutoff, self._cutoff)
        return TriGradedSeries._normalized(
            {k: v for k, v in self._terms.items() if k.d <= cutoff}, cutoff)

    # comparison

    def equal_up_to(self, other, degree):
        """
        Exact agreement of all coefficients with d <= degree.

        Parameters
        ----------
        other : TriGradedSeries
            Series to compare with.
        degree : int
            Last q-degree compared.

        Returns
        -------
        bool
            True when every such coefficient matches.

        Raises
        ------
        QueryBeyondCutoff
            Raised if degree exceeds either cutoff.
        """
        return self.first_difference(other, degree) is None

    def first_difference(self, other, degree):
        """
        The smallest key in (d, n1, n2) order where the two series differ.

        Parameters
        ----------
        other : TriGradedSeries
            Series to compare with.
        degree : int
            Last q-degree compared.

        Returns
        -------
        GradeKey or None
            None when they agree through degree.

        Raises
        ------
        QueryBeyondCutoff
            Raised if degree exceeds either cutoff.
        """
        if degree > min(self._cutoff, other.cutoff):
            msg = 'comparison through degree {0} but cutoffs are {1} and {2}'.format(
                degree, self._cutoff, other.cutoff)
            raise QueryBeyondCutoff(msg)

        keys = set(k for k in self._terms if k.d <= degree)
        keys.update(k for k in other.terms() if k.d <= degree)

        for key in sorted(keys, key=GradeKey.order_key):
            if self._terms.get(key, 0) != other.terms().get(key, 0):
                return key

        return None

    def is_nonnegative(self):
        """True if no coefficient is negative."""
        return all(v > 0 for v in self._terms.values())

    def is_charge_bounded(self):
        """True if every stored key has n1 + n2 <= d."""
        return all(k.n1 + k.n2 <= k.d for k in self._terms)

    # serialization

    def to_json(self):
        """
        Returns the series as plain data in the wire format.

        Returns
        -------
        dict
            cutoff and sorted term list.
        """
        return dict(
            cutoff=self._cutoff,
            terms=[dict(n1=k.n1, n2=k.n2, d=k.d, c=str(v)) for k, v in self.sorted_terms()],
        )

    def to_string(self):
        """Returns the series as a JSON string.

        Returns
        -------
        str
            String representation of this object.
        """
        return json.dumps(self.to_json())

    @staticmethod
    def from_json(wire):
        """
        Build a series from the wire format.

        Parameters
        ----------
        wire : dict
            As produced by to_json()

        Returns
        -------
        TriGradedSeries
            New series.

        Raises
        ------
        SeriesException
            Raised if the payload is malformed.
        """
        try:
            terms = [((t['n1'], t['n2'], t['d']), int(t['c'])) for t in wire['terms']]
            return TriGradedSeries(terms, wire['cutoff'])
        except (KeyError, TypeError, ValueError) as err:
            raise SeriesException('malformed series payload: {0}'.format(err))

    def __str__(self):
        """call to_string()"""
        return self.to_string()

    def __repr__(self):
        return 'TriGradedSeries(cutoff={0}, size={1})'.format(self._cutoff, self.size())

    def __eq__(self, other):
        """Same cutoff and same terms."""
        if not isinstance(other, TriGradedSeries):
            return NotImplemented
        return self._cutoff == other.cutoff and self._terms == other.terms()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        # only here so lists of series sort deterministically
        return (self._cutoff, self.sorted_terms()) < (other.cutoff, other.sorted_terms())

    def __hash__(self):
        return hash((self._cutoff, self._terms))

    __add__ = add
    __mul__ = mul
    __neg__ = neg
    __sub__ = sub


def make_constant(c, cutoff):
    """
    The constant series c.

    Parameters
    ----------
    c : int
        The constant.
    cutoff : int
        Cutoff of the new series.

    Returns
    -------
    TriGradedSeries
        {(0,0,0): c}, or empty when c == 0.
    """
    return TriGradedSeries({(0, 0, 0): c}, cutoff)


def make_monomial(shift, cutoff, c=1):
    """c * z1^n1 z2^n2 q^d as a series (empty if d is above cutoff)."""
    return make_constant(c, cutoff).mul_monomial(shift)


def q_series(counts, cutoff, charges=(0, 0)):
    """
    Build z1^n1 z2^n2 * sum_d counts[d] q^d.

    Parameters
    ----------
    counts : list
        Coefficient of q^d at position d.
    cutoff : int
        Cutoff of the new series.
    charges : tuple, optional
        (n1, n2) attached to every term.

    Returns
    -------
    TriGradedSeries
        New series.
    """
    n1, n2 = charges
    return TriGradedSeries(
        [((n1, n2, d), c) for d, c in enumerate(counts) if c and d <= cutoff], cutoff)


_POCHHAMMER_CACHE = dict()


def inv_pochhammer(M, cutoff):
    """
    1/(q)_M = prod_{i=1..M} 1/(1 - q^i), truncated. The coefficient of q^d
    is the number of partitions of d into parts <= M.

    Parameters
    ----------
    M : int
        Largest part.
    cutoff : int
        Cutoff of the new series.

    Returns
    -------
    TriGradedSeries
        q-only series.
    """
    if not is_nonneg_int(M) or not is_nonneg_int(cutoff):
        raise SeriesException('inv_pochhammer needs nonnegative integers, got {0}'.format(
            (M, cutoff)))

    # parts above the cutoff never contribute
    key = (min(M, cutoff), cutoff)

    if key not in _POCHHAMMER_CACHE:
        counts = [1] + [0] * cutoff
        for part in range(1, key[0] + 1):
            for n in range(part, cutoff + 1):
                counts[n] += counts[n - part]
        _POCHHAMMER_CACHE[key] = q_series(counts, cutoff)

    return _POCHHAMMER_CACHE[key]


def pochhammer(M, cutoff):
    """
    (q)_M = prod_{i=1..M} (1 - q^i), truncated.

    Parameters
    ----------
    M : int
        Number of factors.
    cutoff : int
        Cutoff of the new series.

    Returns
    -------
    TriGradedSeries
        q-only series.
    """
    result = make_constant(1, cutoff)
    for i in range(1, M + 1):
        result = result.mul(TriGradedSeries({(0, 0, 0): 1, (0, 0, i): -1}, cutoff))
    return result


def series_sum(items, cutoff):
    """
    Sum many series through one mutable accumulator instead of a chain
    of immutable add() calls.

    Parameters
    ----------
    items : iterable
        TriGradedSeries values, each with cutoff >= cutoff.
    cutoff : int
        Cutoff of the result.

    Returns
    -------
    TriGradedSeries
        The sum.
    """
    data = collections.defaultdict(int)

    for item in items:
        if item.cutoff < cutoff:
            msg = 'summand cutoff {0} below requested {1}'.format(item.cutoff, cutoff)
            raise QueryBeyondCutoff(msg)
        for key, val in item.terms().items():
            if key.d <= cutoff:
                data[key] += val

    return TriGradedSeries._normalized(  # pylint: disable=protected-access
        {k: v for k, v in data.items() if v}, cutoff)
