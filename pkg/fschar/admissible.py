#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Weights, (k, ell+1)-admissible configurations and the configuration count
of the character.

A configuration (a_0, a_1, ...) labels the monomial in which position i
carries a particle of color (i mod ell) + 1 and degree (i // ell) + 1. It
is admissible for the weight (k_0, ..., k_ell) of level k when

* a_0 + ... + a_j <= k_0 + ... + k_j for j = 0..ell-1, and
* a_i + ... + a_{i+ell} <= k for every i >= 0.

Counting these by charge and degree is the reference character every
other method in the package is checked against.
"""

import json

from pyrsistent import pmap, pvector

from .bases import FscharBase, log_event
from .exceptions import DimensionMismatch, UnsupportedWeight, WeightException
from .series import TriGradedSeries
from .util import is_nonneg_int, is_int, is_pvector, pool_reduce


class Weight(FscharBase):
    """
    Integral dominant weight k_0*L_0 + ... + k_ell*L_ell.

    Accepted constructor args:

    - Another Weight (copy constructor).
    - A list, tuple or pvector of nonnegative integers.
    - A string "k0,k1,k2" (see parse()).

    Parameters
    ----------
    components : Weight, list, tuple, pvector or str
        See above.

    Raises
    ------
    WeightException
        Raised on empty input or negative/non-integer components.
    """
    __slots__ = ('_components',)

    def __init__(self, components):
        """create the weight"""
        super(Weight, self).__init__()

        if isinstance(components, Weight):
            self._components = components.components()
            return

        if isinstance(components, str):
            self._components = Weight.parse(components).components()
            return

        if not isinstance(components, (list, tuple)) and not is_pvector(components):
            raise WeightException('weight must be a list/tuple/str, got {0}'.format(components))

        if not components:
            raise WeightException('weight needs at least one component')

        for i in components:
            if not is_nonneg_int(i):
                msg = 'weight components must be nonnegative integers, got {0}'.format(
                    list(components))
                raise WeightException(msg)

        self._components = pvector(components)

    @staticmethod
    def parse(text):
        """
        Parse the command line form "k0,k1,k2".

        Parameters
        ----------
        text : str
            Comma separated nonnegative integers.

        Returns
        -------
        Weight
            New weight.

        Raises
        ------
        WeightException
            Raised if text is malformed.
        """
        try:
            parts = [int(i.strip()) for i in text.split(',')]
        except (AttributeError, ValueError):
            raise WeightException('malformed weight {0!r}, expected k0,k1,k2'.format(text))

        return Weight(parts)

    @staticmethod
    def fundamental(j, ell=2):
        """
        The fundamental weight L_j of the ell+1 component family.

        Parameters
        ----------
        j : int
            Index 0..ell
        ell : int, optional
            Rank, defaults to 2.

        Returns
        -------
        Weight
            Level one weight.
        """
        if not is_int(j) or not 0 <= j <= ell:
            raise WeightException('fundamental index {0} outside 0..{1}'.format(j, ell))

        comps = [0] * (ell + 1)
        comps[j] = 1
        return Weight(comps)

    def components(self):
        """The components as an immutable vector.

        Returns
        -------
        pyrsistent.pvector
            (k_0, ..., k_ell)
        """
        return self._components

    def component(self, i):
        """k_i"""
        return self._components[i]

    @property
    def ell(self):
        """Rank ell; the weight has ell + 1 components."""
        return len(self._components) - 1

    @property
    def level(self):
        """Level k, the component sum."""
        return sum(self._components)

    def shape(self):
        """
        Which of the two supported families the weight belongs to.

        Returns
        -------
        str or None
            'k0k1' for (k0, k1, 0), 'k1k2' for (0, k1, k2) with k2 > 0,
            None otherwise (including every ell != 2 weight).
        """
        if len(self._components) != 3:
            return None

        k0, _, k2 = self._components

        if k2 == 0:
            return 'k0k1'
        if k0 == 0:
            return 'k1k2'
        return None

    def formula_supported(self):
        """True for (k0, k1, 0) and (0, k1, k2)."""
        return self.shape() is not None

    def require_dimension(self, ell):
        """
        Check this weight has ell + 1 components.

        Raises
        ------
        DimensionMismatch
            Raised when it does not.
        """
        if not is_int(ell) or ell < 1:
            raise WeightException('ell must be a positive integer, got {0}'.format(ell))

        if len(self._components) != ell + 1:
            msg = 'weight {0} has {1} components, ell={2} needs {3}'.format(
                self.label(), len(self._components), ell, ell + 1)
            raise DimensionMismatch(msg)

    def require_supported(self):
        """
        Check the weight is one the quasi-particle and fermionic
        computations handle.

        Raises
        ------
        DimensionMismatch
            Raised for weights that are not three component.
        UnsupportedWeight
            Raised when both k0 and k2 are positive.
        """
        self.require_dimension(2)

        if not self.formula_supported():
            msg = 'weight {0} has k0 > 0 and k2 > 0, no basis/formula for it'.format(
                self.label())
            raise UnsupportedWeight(msg)

    def label(self):
        """Comma separated components, the inverse of parse()."""
        return ','.join(str(i) for i in self._components)

    def to_json(self):  # pylint: disable=missing-docstring
        return list(self._components)

    def to_string(self):  # pylint: disable=missing-docstring
        return json.dumps(self.to_json())

    def __eq__(self, other):
        return isinstance(other, Weight) and self._components == other.components()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._components)

    def __str__(self):
        return self.label()

    def __repr__(self):
        return 'Weight({0})'.format(self.label())


class Configuration(FscharBase):
    """
    Finite sequence of nonnegative integers with trailing zeros trimmed.

    Parameters
    ----------
    entries : list, tuple or pvector, optional
        (a_0, a_1, ...)

    Raises
    ------
    WeightException
        Raised on negative or non-integer entries.
    """
    __slots__ = ('_entries',)

    def __init__(self, entries=None):
        """create the configuration"""
        super(Configuration, self).__init__()

        entries = list(entries) if entries is not None else list()

        for i in entries:
            if not is_nonneg_int(i):
                raise WeightException(
                    'configuration entries must be nonnegative integers, got {0}'.format(entries))

        while entries and entries[-1] == 0:
            entries.pop()

        self._entries = pvector(entries)

    def entries(self):
        """Trimmed entries.

        Returns
        -------
        pyrsistent.pvector
            (a_0, ..., a_N) with a_N != 0, or empty.
        """
        return self._entries

    def grade(self, ell=2):
        """See admissible.grade()"""
        return grade(self, ell)

    def degree(self, ell=2):
        """Total q-degree."""
        return grade(self, ell)[1]

    def charges(self, ell=2):
        """Per color charges."""
        return grade(self, ell)[0]

    def to_json(self):
        """
        Returns
        -------
        dict
            {"entries": [...]}
        """
        return dict(entries=list(self._entries))

    def to_string(self):  # pylint: disable=missing-docstring
        return json.dumps(self.to_json())

    @staticmethod
    def from_json(wire):
        """Inverse of to_json()."""
        try:
            return Configuration(wire['entries'])
        except (KeyError, TypeError):
            raise WeightException('malformed configuration payload {0}'.format(wire))

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return isinstance(other, Configuration) and self._entries == other.entries()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return 'Configuration({0})'.format(list(self._entries))


def _entries_of(config):
    if isinstance(config, Configuration):
        return config.entries()
    return Configuration(config).entries()


def _prefix_bounds(weight):
    """k_0 + ... + k_j for j = 0..ell-1"""
    bounds = list()
    total = 0
    for i in weight.components()[:-1]:
        total += i
        bounds.append(total)
    return bounds


def is_admissible(config, weight, ell):
    """
    Check the initial and windowed inequalities. Entries past the stored
    length count as zero, so only windows starting inside it matter.

    Parameters
    ----------
    config : Configuration or sequence
        The configuration.
    weight : Weight
        Must have ell + 1 components.
    ell : int
        Window length is ell + 1.

    Returns
    -------
    bool
        True if admissible.

    Raises
    ------
    DimensionMismatch
        Raised if the weight has the wrong number of components.
    """
    weight = Weight(weight)
    weight.require_dimension(ell)
    entries = _entries_of(config)
    level = weight.level

    total = 0
    for j, bound in enumerate(_prefix_bounds(weight)):
        total += entries[j] if j < len(entries) else 0
        if total > bound:
            return False

    for i in range(len(entries)):
        if sum(entries[i:i + ell + 1]) > level:
            return False

    return True


def grade(config, ell=2):
    """
    Charges and degree of a configuration. Position i carries color
    (i mod ell) + 1 and degree (i // ell) + 1.

    Parameters
    ----------
    config : Configuration or sequence
        The configuration.
    ell : int, optional
        Number of colors.

    Returns
    -------
    tuple
        (charges, degree) where charges is a tuple of ell integers.
    """
    if not is_int(ell) or ell < 1:
        raise WeightException('ell must be a positive integer, got {0}'.format(ell))

    charges = [0] * ell
    degree = 0

    for i, val in enumerate(_entries_of(config)):
        charges[i % ell] += val
        degree += val * (i // ell + 1)

    return tuple(charges), degree


def enumerate_admissible(weight, ell, dmax):
    """
    Generate every admissible configuration of degree <= dmax exactly
    once, by increasing degree and lexicographically within a degree.

    Parameters
    ----------
    weight : Weight
        ell + 1 components.
    ell : int
        Number of colors.
    dmax : int
        Largest degree emitted.

    Returns
    -------
    generator
        Configuration objects.

    Raises
    ------
    DimensionMismatch
        Raised if the weight has the wrong number of components.
    """
    weight = Weight(weight)
    weight.require_dimension(ell)

    if not is_nonneg_int(dmax):
        raise WeightException('degree bound must be a nonnegative integer, got {0}'.format(dmax))

    return _enumerate(weight, ell, dmax)


def _enumerate(weight, ell, dmax):
    level = weight.level
    bounds = _prefix_bounds(weight)

    def walk(prefix, remaining):
        if remaining == 0:
            yield Configuration(prefix)
            return

        i = len(prefix)
        deg = i // ell + 1

        if deg > remaining:
            return

        # largest value allowed at position i by the window ending here
        cap = level - sum(prefix[max(0, i - ell):])
        if i < ell:
            cap = min(cap, bounds[i] - sum(prefix))

        for val in range(0, min(cap, remaining // deg) + 1):
            prefix.append(val)
            for config in walk(prefix, remaining - val * deg):
                yield config
            prefix.pop()

    for degree in range(dmax + 1):
        for config in walk(list(), degree):
            yield config


def _count_task(task):
    """
    Transfer count over positions 0..ell*dmax-1. The state is the last ell
    entries; each maps to {(charges..., degree): count}.
    """
    comps, ell, dmax, first = task

    level = sum(comps)
    bounds = _prefix_bounds(Weight(list(comps)))
    start = (0,) * ell
    zero = (0,) * ell + (0,)

    states = {start: {zero: 1}}

    for i in range(ell * dmax):
        color = i % ell
        deg = i // ell + 1
        nxt = dict()

        for state, grades in states.items():
            cap = level - sum(state)
            if i < ell:
                cap = min(cap, bounds[i] - sum(state))
            values = range(0, cap + 1) if (i > 0 or first is None) else (
                [first] if first <= cap else [])

            for val in values:
                key = state[1:] + (val,)
                target = nxt.setdefault(key, dict())
                add = val * deg
                for grd, count in grades.items():
                    d = grd[-1] + add
                    if d > dmax:
                        continue
                    if val:
                        grd = grd[:color] + (grd[color] + val,) + grd[color + 1:-1] + (d,)
                    target[grd] = target.get(grd, 0) + count

        states = {k: v for k, v in nxt.items() if v}

    result = dict()
    for grades in states.values():
        for grd, count in grades.items():
            result[grd] = result.get(grd, 0) + count
    return result


def _merge_counts(left, right):
    merged = dict(left)
    for key, val in right.items():
        merged[key] = merged.get(key, 0) + val
    return merged


def count_admissible(weight, ell, dmax, jobs=1):
    """
    Number of admissible configurations per (charges, degree) for every
    degree <= dmax, without listing them.

    With jobs > 1 the count is split by the value of a_0 across a worker
    pool.

    Parameters
    ----------
    weight : Weight
        ell + 1 components.
    ell : int
        Number of colors.
    dmax : int
        Largest degree counted.
    jobs : int, optional
        Worker processes.

    Returns
    -------
    pyrsistent.pmap
        ((c_1, ..., c_ell), degree) -> count

    Raises
    ------
    DimensionMismatch
        Raised if the weight has the wrong number of components.
    """
    weight = Weight(weight)
    weight.require_dimension(ell)

    if not is_nonneg_int(dmax):
        raise WeightException('degree bound must be a nonnegative integer, got {0}'.format(dmax))

    comps = tuple(weight.components())

    if dmax == 0:
        tasks = [(comps, ell, dmax, None)]
    else:
        tasks = [(comps, ell, dmax, i) for i in range(min(comps[0], dmax) + 1)]

    counts = pool_reduce(_count_task, tasks, jobs, _merge_counts, dict())

    return pmap({(k[:-1], k[-1]): v for k, v in counts.items()})


def char_configs(weight, cutoff, jobs=1):
    """
    Character of W(weight) from the configuration count: the coefficient
    at (n1, n2, d) is the number of admissible configurations with those
    charges and degree.

    Parameters
    ----------
    weight : Weight
        Three components.
    cutoff : int
        Inclusive q-degree cutoff.
    jobs : int, optional
        Worker processes.

    Returns
    -------
    TriGradedSeries
        The character.

    Raises
    ------
    DimensionMismatch
        Raised for weights that are not three component.
    """
    weight = Weight(weight)
    weight.require_dimension(2)

    log_event('configs.start', 'weight={0} cutoff={1} jobs={2}', (weight, cutoff, jobs))

    counts = count_admissible(weight, 2, cutoff, jobs=jobs)
    terms = {(c[0], c[1], d): v for (c, d), v in counts.items()}

    log_event('configs.done', 'weight={0} terms={1}', (weight, len(terms)))

    return TriGradedSeries(terms, cutoff)
