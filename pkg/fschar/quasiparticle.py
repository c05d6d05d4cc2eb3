#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Quasi-particles x_{n gamma_i}(m), quasi-particle monomials and the basis
of W(Lambda) they describe.

Storage convention: each color keeps a list of (charge, degree) pairs
sorted ascending by (charge, degree). Position p of a list of length a is
basis index j = a - p, so index 1 is the rightmost pair, the one of
largest charge. Degrees are negative, d(b) negates them.

For a weight (k0, k1, 0) or (0, k1, k2) of level k a monomial is in the
basis when, with j counted from the right,

1. m_{1,j+1} <= m_{1,j} - 2 n_{1,j} whenever n_{1,j+1} = n_{1,j}
2. the same for color 2
3. m_{1,j} <= dmax(n_{1,j}, 1) - 2 (j - 1) n_{1,j}
4. m_{2,j} <= dmax(n_{2,j}, 2) - 2 (j - 1) n_{2,j}
   - sum over all color 1 pairs j' of max(0, n_{2,j} + n_{1,j'} - k)
"""

import json

from functools import total_ordering

from pyrsistent import pvector

from .admissible import Weight
from .bases import FscharBase, log_event
from .exceptions import ChargeOutOfRange, WeightException
from .series import TriGradedSeries, q_series, series_sum
from .util import is_int, is_nonneg_int, pool_reduce, split_tasks

COLORS = (1, 2)

# compare() ranks gamma_2 below gamma_1
COLOR_RANK = {2: 0, 1: 1}


def _check_color(color):
    if color not in COLORS:
        raise WeightException('color must be 1 or 2, got {0}'.format(color))


@total_ordering
class QuasiParticle(FscharBase):
    """
    Quasi-particle of color gamma_1 or gamma_2, charge n and degree m.

    Parameters
    ----------
    color : int
        1 or 2
    charge : int
        n >= 1
    degree : int
        m, negative in basis monomials.

    Raises
    ------
    WeightException
        Raised on a bad color or non-integer values.
    ChargeOutOfRange
        Raised when the charge is below 1.
    """
    __slots__ = ('_color', '_charge', '_degree')

    def __init__(self, color, charge, degree):
        super(QuasiParticle, self).__init__()

        _check_color(color)

        if not is_int(charge) or not is_int(degree):
            raise WeightException('charge and degree must be integers, got {0}'.format(
                (charge, degree)))

        if charge < 1:
            raise ChargeOutOfRange('charge must be >= 1, got {0}'.format(charge))

        self._color = color
        self._charge = charge
        self._degree = degree

    @property
    def color(self):  # pylint: disable=missing-docstring
        return self._color

    @property
    def charge(self):  # pylint: disable=missing-docstring
        return self._charge

    @property
    def degree(self):  # pylint: disable=missing-docstring
        return self._degree

    def order_key(self):
        """Color (gamma_2 first), then charge, then degree."""
        return (COLOR_RANK[self._color], self._charge, self._degree)

    def to_json(self):  # pylint: disable=missing-docstring
        return dict(color=self._color, n=self._charge, m=self._degree)

    def __eq__(self, other):
        return isinstance(other, QuasiParticle) and self.order_key() == other.order_key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.order_key() < other.order_key()

    def __hash__(self):
        return hash(self.order_key())

    def __repr__(self):
        return 'x_{0}g{1}({2})'.format(self._charge, self._color, self._degree)


def _pairs(pairs):
    """Validate and sort a color list of (n, m) pairs into storage order."""
    out = list()
    for pair in pairs:
        if isinstance(pair, dict):
            pair = (pair.get('n'), pair.get('m'))
        n, m = pair
        if not is_int(n) or not is_int(m):
            raise WeightException('(charge, degree) must be integers, got {0}'.format(pair))
        if n < 1:
            raise ChargeOutOfRange('charge must be >= 1, got {0}'.format(n))
        out.append((n, m))
    return pvector(sorted(out))


@total_ordering
class QPMonomial(FscharBase):
    """
    A quasi-particle monomial: one (charge, degree) list per color, kept
    sorted ascending so every monomial has one representation.

    Parameters
    ----------
    gamma1 : iterable, optional
        (n, m) pairs or {"n": .., "m": ..} dicts of color 1.
    gamma2 : iterable, optional
        Same for color 2.

    Raises
    ------
    WeightException
        Raised on malformed pairs.
    """
    __slots__ = ('_gamma1', '_gamma2')

    def __init__(self, gamma1=None, gamma2=None):
        super(QPMonomial, self).__init__()

        self._gamma1 = _pairs(gamma1 or [])
        self._gamma2 = _pairs(gamma2 or [])

    def gamma1(self):
        """Color 1 pairs in storage order.

        Returns
        -------
        pyrsistent.pvector
            (n, m) tuples, ascending.
        """
        return self._gamma1

    def gamma2(self):
        """Color 2 pairs in storage order."""
        return self._gamma2

    def color(self, color):
        """Pairs of the given color."""
        _check_color(color)
        return self._gamma1 if color == 1 else self._gamma2

    def particles(self):
        """All factors as QuasiParticle objects.

        Returns
        -------
        list
            Color 2 factors then color 1 factors, each ascending.
        """
        return [QuasiParticle(2, n, m) for n, m in self._gamma2] + \
            [QuasiParticle(1, n, m) for n, m in self._gamma1]

    def charge(self):
        """(n1, n2) total charge per color."""
        return (sum(n for n, _ in self._gamma1), sum(n for n, _ in self._gamma2))

    def degree(self):
        """d(b), the negated degree sum."""
        return -sum(m for _, m in self._gamma1) - sum(m for _, m in self._gamma2)

    def color_charge_type(self):
        """
        The charges (n_{2,b}, ..., n_{2,1}; n_{1,a}, ..., n_{1,1}).

        Returns
        -------
        tuple
            (color 2 charges, color 1 charges), each ascending.
        """
        return (tuple(n for n, _ in self._gamma2), tuple(n for n, _ in self._gamma1))

    def color_dual_charge_type(self, k):
        """
        r_i^(s) = number of color i factors with charge >= s, s = 1..k.

        Parameters
        ----------
        k : int
            Level.

        Returns
        -------
        tuple
            ((r_2^(1), ..., r_2^(k)), (r_1^(1), ..., r_1^(k)))
        """
        self._check_level(k)

        def dual(pairs):
            return tuple(sum(1 for n, _ in pairs if n >= s) for s in range(1, k + 1))

        return (dual(self._gamma2), dual(self._gamma1))

    def profile(self, k):
        """
        The charge profile M of this monomial.

        Parameters
        ----------
        k : int
            Level.

        Returns
        -------
        ChargeProfile
            M[i][j] = number of color i factors of charge j.

        Raises
        ------
        ChargeOutOfRange
            Raised if a charge exceeds k.
        """
        self._check_level(k)

        rows = [[0] * k, [0] * k]
        for row, pairs in ((0, self._gamma1), (1, self._gamma2)):
            for n, _ in pairs:
                rows[row][n - 1] += 1
        return ChargeProfile(rows)

    def _check_level(self, k):
        if not is_nonneg_int(k):
            raise WeightException('level must be a nonnegative integer, got {0}'.format(k))
        for n, _ in list(self._gamma1) + list(self._gamma2):
            if n > k:
                raise ChargeOutOfRange('charge {0} exceeds level {1}'.format(n, k))

    def mul(self, other):
        """Product of monomials: the union of the factors."""
        return QPMonomial(list(self._gamma1) + list(other.gamma1()),
                          list(self._gamma2) + list(other.gamma2()))

    def order_keys(self):
        """Factor keys sorted largest first, as compare() reads them."""
        return sorted((p.order_key() for p in self.particles()), reverse=True)

    def to_json(self):
        """
        Returns
        -------
        dict
            {"gamma1": [{"n": .., "m": ..}, ...], "gamma2": [...]}
        """
        return dict(
            gamma1=[dict(n=n, m=m) for n, m in self._gamma1],
            gamma2=[dict(n=n, m=m) for n, m in self._gamma2],
        )

    def to_string(self):  # pylint: disable=missing-docstring
        return json.dumps(self.to_json())

    @staticmethod
    def from_json(wire):
        """Inverse of to_json()."""
        try:
            return QPMonomial(wire['gamma1'], wire['gamma2'])
        except (KeyError, TypeError, ValueError):
            raise WeightException('malformed monomial payload {0}'.format(wire))

    def __len__(self):
        return len(self._gamma1) + len(self._gamma2)

    def __eq__(self, other):
        return isinstance(other, QPMonomial) and \
            self._gamma1 == other.gamma1() and self._gamma2 == other.gamma2()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return compare(self, other) < 0

    def __hash__(self):
        return hash((self._gamma1, self._gamma2))

    def __repr__(self):
        return 'QPMonomial(gamma1={0}, gamma2={1})'.format(
            list(self._gamma1), list(self._gamma2))

    __mul__ = mul


class ChargeProfile(FscharBase):
    """
    M[i][j]: number of quasi-particles of color i + 1 and charge j + 1.

    Parameters
    ----------
    rows : list
        Two equal length lists of nonnegative integers; the length is the
        level k.

    Raises
    ------
    DimensionMismatch
        Not raised here; WeightException covers malformed rows.
    """
    __slots__ = ('_rows',)

    def __init__(self, rows):
        super(ChargeProfile, self).__init__()

        rows = [list(i) for i in rows]

        if len(rows) != 2 or len(rows[0]) != len(rows[1]):
            raise WeightException('profile needs two equal length rows, got {0}'.format(rows))

        for row in rows:
            for i in row:
                if not is_nonneg_int(i):
                    raise WeightException(
                        'profile entries must be nonnegative integers, got {0}'.format(rows))

        self._rows = pvector([pvector(rows[0]), pvector(rows[1])])

    @staticmethod
    def from_dual(n1, n2):
        """
        Rebuild a profile from dual charges, the inverse of dual_charges():
        M_{1,j} = N_{1,j} - N_{1,j+1} and M_{2,k-j+1} = N_{2,j} - N_{2,j-1}.

        Parameters
        ----------
        n1 : sequence
            N_{1,1} >= ... >= N_{1,k} >= 0
        n2 : sequence
            0 <= N_{2,1} <= ... <= N_{2,k}

        Returns
        -------
        ChargeProfile
            The profile.

        Raises
        ------
        WeightException
            Raised if the sequences are not monotone or differ in length.
        """
        n1 = list(n1)
        n2 = list(n2)

        if len(n1) != len(n2):
            raise WeightException('dual charges differ in length: {0} {1}'.format(n1, n2))

        k = len(n1)
        row1 = [n1[j] - (n1[j + 1] if j + 1 < k else 0) for j in range(k)]
        row2 = [0] * k
        for j in range(k):
            row2[k - j - 1] = n2[j] - (n2[j - 1] if j > 0 else 0)

        if any(i < 0 for i in row1 + row2):
            raise WeightException('dual charges are not monotone: {0} {1}'.format(n1, n2))

        return ChargeProfile([row1, row2])

    @staticmethod
    def iterate(k, budget):
        """
        Every profile of level k with n1 + n2 <= budget, in a fixed order:
        slots (1,1) .. (1,k), (2,1) .. (2,k), counts ascending, last slot
        varying fastest.

        Parameters
        ----------
        k : int
            Level.
        budget : int
            Bound on the total charge.

        Returns
        -------
        generator
            ChargeProfile objects.
        """
        if not is_nonneg_int(k) or not is_nonneg_int(budget):
            raise WeightException('iterate needs nonnegative integers, got {0}'.format(
                (k, budget)))

        flat = [0] * (2 * k)

        def walk(slot, remaining):
            if slot == 2 * k:
                yield ChargeProfile([flat[:k], flat[k:]])
                return
            charge = slot % k + 1
            for count in range(remaining // charge + 1):
                flat[slot] = count
                for i in walk(slot + 1, remaining - count * charge):
                    yield i
            flat[slot] = 0

        return walk(0, budget)

    @property
    def k(self):
        """Level (row length)."""
        return len(self._rows[0])

    def rows(self):
        """The two rows.

        Returns
        -------
        pyrsistent.pvector
            pvector of two pvectors.
        """
        return self._rows

    def row(self, color):
        """Row of the given color."""
        _check_color(color)
        return self._rows[color - 1]

    def count(self, color, charge):
        """M_{color, charge}, 1-based."""
        return self._rows[color - 1][charge - 1]

    def flat(self):
        """(M_{1,1}, ..., M_{1,k}, M_{2,1}, ..., M_{2,k})"""
        return list(self._rows[0]) + list(self._rows[1])

    def charges(self):
        """(n1, n2) with n_i = sum_j j M_{i,j}."""
        return tuple(sum((j + 1) * c for j, c in enumerate(row)) for row in self._rows)

    def particles(self, color):
        """
        Charges of one color in basis index order, largest first.

        Returns
        -------
        list
            n_{i,1} >= n_{i,2} >= ...
        """
        out = list()
        for j in range(self.k, 0, -1):
            out.extend([j] * self.count(color, j))
        return out

    def is_zero(self):
        """True for the empty profile."""
        return not any(self.flat())

    def to_json(self):  # pylint: disable=missing-docstring
        return dict(M=[list(self._rows[0]), list(self._rows[1])])

    def to_string(self):  # pylint: disable=missing-docstring
        return json.dumps(self.to_json())

    def __eq__(self, other):
        return isinstance(other, ChargeProfile) and self._rows == other.rows()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return 'ChargeProfile({0})'.format(self.to_json()['M'])


def dmax_level1(color, fundamental):
    """
    Maximal degree of a charge one quasi-particle on a level one module.

    Parameters
    ----------
    color : int
        1 or 2
    fundamental : int
        j of Lambda_j, 0..2

    Returns
    -------
    int
        -2 when color <= j, else -1.
    """
    _check_color(color)

    if fundamental not in (0, 1, 2):
        raise WeightException('fundamental index must be 0, 1 or 2, got {0}'.format(fundamental))

    return -2 if color <= fundamental else -1


def dmax(charge, color, weight):
    """
    Maximal degree of a charge n quasi-particle acting on the highest
    weight vector:

    color 1: -min(n, k0) - 2 max(n - k0, 0)
    color 2: -min(n, k0 + k1) - 2 max(n - k0 - k1, 0)

    Parameters
    ----------
    charge : int
        1..k
    color : int
        1 or 2
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)

    Returns
    -------
    int
        Negative degree.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    ChargeOutOfRange
        Raised when the charge is outside 1..k.
    """
    weight = Weight(weight)
    weight.require_supported()
    _check_color(color)

    if not is_int(charge) or not 1 <= charge <= weight.level:
        raise ChargeOutOfRange('charge {0} outside 1..{1}'.format(charge, weight.level))

    return _dmax(charge, color, tuple(weight.components()))


def _dmax(charge, color, comps):
    free = comps[0] if color == 1 else comps[0] + comps[1]
    return -min(charge, free) - 2 * max(charge - free, 0)


def _upper_bounds(gamma1, gamma2, comps):
    """
    Largest degree each factor may take, before the run spacing, with
    both lists given largest charge first.
    """
    level = sum(comps)
    ub1 = [_dmax(n, 1, comps) - 2 * j * n for j, n in enumerate(gamma1)]
    ub2 = [_dmax(n, 2, comps) - 2 * j * n - sum(max(0, n + i - level) for i in gamma1)
           for j, n in enumerate(gamma2)]
    return ub1, ub2


def _check_charges(monomial, weight):
    for n, _ in list(monomial.gamma1()) + list(monomial.gamma2()):
        if n > weight.level:
            raise ChargeOutOfRange('charge {0} exceeds level {1}'.format(n, weight.level))


def satisfies_basis(monomial, weight):
    """
    Test the four basis inequalities.

    Parameters
    ----------
    monomial : QPMonomial
        The candidate.
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)

    Returns
    -------
    bool
        True when the monomial is a basis element.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    ChargeOutOfRange
        Raised if a charge exceeds the level.
    """
    weight = Weight(weight)
    weight.require_supported()
    _check_charges(monomial, weight)

    comps = tuple(weight.components())

    # index j = 1 first
    col1 = list(reversed(monomial.gamma1()))
    col2 = list(reversed(monomial.gamma2()))

    ub1, ub2 = _upper_bounds([n for n, _ in col1], [n for n, _ in col2], comps)

    for col, ubs in ((col1, ub1), (col2, ub2)):
        for j, (n, m) in enumerate(col):
            if m > ubs[j]:
                return False
            if j > 0 and col[j - 1][0] == n and m > col[j - 1][1] - 2 * n:
                return False

    return True


def _minimal_degrees(profile, comps):
    col1 = profile.particles(1)
    col2 = profile.particles(2)
    ub1, ub2 = _upper_bounds(col1, col2, comps)
    return col1, col2, ub1, ub2


def minimal_degree(profile, weight):
    """
    d(b) of the minimal monomial of a profile without building it.

    Returns
    -------
    int
        Smallest degree of a basis monomial with this profile.
    """
    weight = Weight(weight)
    _check_profile(profile, weight)
    _, _, ub1, ub2 = _minimal_degrees(profile, tuple(weight.components()))
    return -sum(ub1) - sum(ub2)


def _check_profile(profile, weight):
    weight.require_supported()
    for color in COLORS:
        for j in range(weight.level + 1, profile.k + 1):
            if profile.count(color, j):
                raise ChargeOutOfRange('charge {0} exceeds level {1}'.format(j, weight.level))


def minimal_monomial(profile, weight):
    """
    The basis monomial of the given profile with every degree as large as
    the basis inequalities allow; its degree is the smallest among the
    basis monomials of that profile.

    Parameters
    ----------
    profile : ChargeProfile
        Counts per color and charge.
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)

    Returns
    -------
    QPMonomial
        The minimal monomial.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    ChargeOutOfRange
        Raised if the profile uses a charge above the level.
    """
    weight = Weight(weight)
    _check_profile(profile, weight)

    col1, col2, ub1, ub2 = _minimal_degrees(profile, tuple(weight.components()))

    # equal charge neighbours sit exactly 2n apart, which is what the
    # run spacing asks for
    return QPMonomial(list(zip(col1, ub1)), list(zip(col2, ub2)))


def compare(left, right):
    """
    The linear order on quasi-particles and monomials.

    Quasi-particles compare by color (gamma_2 < gamma_1), then charge,
    then degree. Monomials compare their factors largest first; the first
    difference decides, and when one monomial runs out first the longer
    one is the smaller.

    Parameters
    ----------
    left : QuasiParticle or QPMonomial
        Left operand.
    right : QuasiParticle or QPMonomial
        Right operand of the same kind.

    Returns
    -------
    int
        -1, 0 or 1.
    """
    if isinstance(left, QuasiParticle) and isinstance(right, QuasiParticle):
        lkey, rkey = left.order_key(), right.order_key()
        return (lkey > rkey) - (lkey < rkey)

    if not isinstance(left, QPMonomial) or not isinstance(right, QPMonomial):
        raise WeightException('cannot compare {0!r} and {1!r}'.format(left, right))

    lkeys = left.order_keys()
    rkeys = right.order_keys()

    for lkey, rkey in zip(lkeys, rkeys):
        if lkey != rkey:
            return -1 if lkey < rkey else 1

    if len(lkeys) == len(rkeys):
        return 0

    return -1 if len(lkeys) > len(rkeys) else 1


def dual_charges(profile):
    """
    N_{1,j} = M_{1,j} + ... + M_{1,k} and N_{2,j} = M_{2,k-j+1} + ... + M_{2,k}.

    Parameters
    ----------
    profile : ChargeProfile
        Profile of level k.

    Returns
    -------
    tuple
        (N1, N2) tuples of length k; N1 non-increasing, N2 non-decreasing.
    """
    k = profile.k
    row1 = profile.row(1)
    row2 = profile.row(2)

    n1 = tuple(sum(row1[j:]) for j in range(k))
    n2 = tuple(sum(row2[k - j - 1:]) for j in range(k))

    return n1, n2


def enumerate_basis(weight, cutoff):
    """
    Generate every basis monomial with d(b) <= cutoff exactly once.

    Profiles are visited in ChargeProfile.iterate() order and skipped when
    their minimal degree is above the cutoff; inside a profile the degrees
    are walked factor by factor from their upper bound down.

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)
    cutoff : int
        Largest degree emitted.

    Returns
    -------
    generator
        QPMonomial objects.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    """
    weight = Weight(weight)
    weight.require_supported()

    if not is_nonneg_int(cutoff):
        raise WeightException('cutoff must be a nonnegative integer, got {0}'.format(cutoff))

    return _enumerate_basis(weight, cutoff)


def _enumerate_basis(weight, cutoff):
    comps = tuple(weight.components())

    for profile in ChargeProfile.iterate(weight.level, cutoff):
        col1, col2, ub1, ub2 = _minimal_degrees(profile, comps)

        if -sum(ub1) - sum(ub2) > cutoff:
            continue

        charges = col1 + col2
        ubs = ub1 + ub2
        # factor i is spaced from factor i - 1 when both are the same run
        linked = [i > 0 and i != len(col1) and charges[i] == charges[i - 1]
                  for i in range(len(charges))]
        # least degree the factors after i can still add
        rest = [0] * (len(charges) + 1)
        for i in range(len(charges) - 1, -1, -1):
            rest[i] = rest[i + 1] - ubs[i]

        degrees = [0] * len(charges)

        def walk(i, used):
            if i == len(charges):
                yield QPMonomial(list(zip(col1, degrees[:len(col1)])),
                                 list(zip(col2, degrees[len(col1):])))
                return
            hi = ubs[i]
            if linked[i]:
                hi = min(hi, degrees[i - 1] - 2 * charges[i])
            lo = -(cutoff - used - rest[i + 1])
            for m in range(hi, lo - 1, -1):
                degrees[i] = m
                for mono in walk(i + 1, used - m):
                    yield mono

        for mono in walk(0, 0):
            yield mono


_RUN_CACHE = dict()


def _run_counts(charge, count, upper, cutoff):
    """
    Number of degree tuples (m_0, ..., m_{count-1}) of one run of equal
    charge with m_t <= upper - 2 n t and m_t <= m_{t-1} - 2 n, by total
    degree -sum(m) up to cutoff.

    Returns
    -------
    list
        Entry d is the number of tuples of degree d.
    """
    key = (charge, count, upper, cutoff)

    if key not in _RUN_CACHE:
        # (last degree, degree so far) -> tuples
        states = {(None, 0): 1}
        for t in range(count):
            nxt = dict()
            bound = upper - 2 * charge * t
            for (last, used), num in states.items():
                hi = bound if last is None else min(bound, last - 2 * charge)
                for m in range(hi, used - cutoff - 1, -1):
                    state = (m, used - m)
                    nxt[state] = nxt.get(state, 0) + num
            states = nxt

        counts = [0] * (cutoff + 1)
        for (_, used), num in states.items():
            if 0 <= used <= cutoff:
                counts[used] += num
        _RUN_CACHE[key] = counts

    return _RUN_CACHE[key]


def _convolve(left, right, cutoff):
    out = [0] * (cutoff + 1)
    for i, a in enumerate(left):
        if not a:
            continue
        for j in range(cutoff - i + 1):
            if right[j]:
                out[i + j] += a * right[j]
    return out


def _profile_counts(profile, comps, cutoff):
    """q-degree counts of the basis monomials of one profile."""
    col1, col2, ub1, ub2 = _minimal_degrees(profile, comps)

    if -sum(ub1) - sum(ub2) > cutoff:
        return None

    counts = [1] + [0] * cutoff

    for col, ubs in ((col1, ub1), (col2, ub2)):
        start = 0
        while start < len(col):
            end = start
            while end < len(col) and col[end] == col[start]:
                end += 1
            run = _run_counts(col[start], end - start, ubs[start], cutoff)
            counts = _convolve(counts, run, cutoff)
            start = end

    return counts


def _qp_task(task):
    comps, cutoff, profiles = task
    items = list()
    for rows in profiles:
        profile = ChargeProfile(rows)
        counts = _profile_counts(profile, comps, cutoff)
        if counts is not None:
            items.append(q_series(counts, cutoff, profile.charges()))
    return series_sum(items, cutoff)


def char_qp(weight, cutoff, jobs=1):
    """
    Character of W(weight) from the quasi-particle basis: the coefficient
    at (n1, n2, d) is the number of basis monomials with those charges and
    degree.

    Each profile is counted run by run straight from the inequalities, so
    nothing is shared with the fermionic sums.

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)
    cutoff : int
        Inclusive q-degree cutoff.
    jobs : int, optional
        Worker processes; profiles are dealt round robin.

    Returns
    -------
    TriGradedSeries
        The character.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    """
    weight = Weight(weight)
    weight.require_supported()

    if not is_nonneg_int(cutoff):
        raise WeightException('cutoff must be a nonnegative integer, got {0}'.format(cutoff))

    log_event('qp.start', 'weight={0} cutoff={1} jobs={2}', (weight, cutoff, jobs))

    comps = tuple(weight.components())
    profiles = [[list(i) for i in p.rows()]
                for p in ChargeProfile.iterate(weight.level, cutoff)]
    tasks = [(comps, cutoff, chunk) for chunk in split_tasks(profiles, max(1, jobs or 1))]

    result = pool_reduce(_qp_task, tasks, jobs, lambda a, b: a.add(b),
                         TriGradedSeries(None, cutoff))

    log_event('qp.done', 'weight={0} profiles={1} terms={2}',
              (weight, len(profiles), result.size()))

    return result
