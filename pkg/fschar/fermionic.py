#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Fermionic sums for the character of W(Lambda).

The M-form sums over charge profiles M (flattened to the 2k vector
(M_{1,1}, ..., M_{1,k}, M_{2,1}, ..., M_{2,k})):

    sum_M q^(tM Q M + L M) z1^n1 z2^n2 / prod_{i,j} (q)_{M_{i,j}}

with Q = [[A, B], [0, A]], A_ij = min(i, j), B_ij = max(0, i + j - k).

The N-form substitutes M = R N for the dual charges N and sums over
monotone N with Q' = tR Q R and L' = tR L. The Georgiev form writes the
same sum in the color-dual-charge variables r directly.

Also here: the binomial matrix determinant check.
"""

import json

from pyrsistent import freeze, thaw

from .admissible import Weight
from .bases import FscharBase, log_event
from .exceptions import DimensionMismatch, FormException, WeightException
from .quasiparticle import ChargeProfile
from .series import TriGradedSeries, inv_pochhammer, make_constant, series_sum
from .util import is_int, is_nonneg_int, pool_reduce, split_tasks

FORMS = ('m', 'n', 'georgiev')

# integer matrix helpers, matrices are lists of rows


def _transpose(mat):
    return [list(i) for i in zip(*mat)]


def _matmul(left, right):
    cols = _transpose(right)
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in left]


def _matvec(mat, vec):
    return [sum(a * b for a, b in zip(row, vec)) for row in mat]


def _dot(left, right):
    return sum(a * b for a, b in zip(left, right))


def _quadratic(mat, vec):
    return _dot(vec, _matvec(mat, vec))


class FormBase(FscharBase):
    """Common parts of the matrix and vector holders."""
    __slots__ = ('_k', '_data')

    def __init__(self, k, data):
        super(FormBase, self).__init__()
        self._k = k
        self._data = freeze(data)

    @property
    def k(self):
        """Level."""
        return self._k

    def data(self):
        """The entries as plain lists."""
        return thaw(self._data)

    def to_json(self):  # pylint: disable=missing-docstring
        return dict(k=self._k, data=self.data())

    def to_string(self):  # pylint: disable=missing-docstring
        return json.dumps(self.to_json())

    def __eq__(self, other):
        return type(self) is type(other) and self._k == other.k and self._data == other._data  # pylint: disable=protected-access

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._k, self._data))


class QuadraticForm(FormBase):
    """
    The 2k x 2k matrix Q of level k.
    """
    __slots__ = ()

    def value(self, vec):
        """tv Q v"""
        return _quadratic(self.data(), vec)

    def block(self, row, col):
        """
        One of the four k x k blocks.

        Parameters
        ----------
        row : int
            0 or 1
        col : int
            0 or 1

        Returns
        -------
        list
            Rows of the block.
        """
        k = self._k
        return [r[col * k:(col + 1) * k] for r in self.data()[row * k:(row + 1) * k]]


class LinearForm(FormBase):
    """
    The length 2k vector L of a weight.
    """
    __slots__ = ()

    def value(self, vec):
        """L v"""
        return _dot(self.data(), vec)


class TransitionMatrix(FormBase):
    """
    R = diag(C, D) with C: 1 on the diagonal and -1 above it, D: 1 at
    (i, k-i+1) and -1 at (i, k-i). M = R N turns dual charges into a
    profile.
    """
    __slots__ = ()

    def apply(self, vec):
        """R v"""
        return _matvec(self.data(), vec)


def build_Q(k):  # pylint: disable=invalid-name
    """
    Parameters
    ----------
    k : int
        Level, >= 1.

    Returns
    -------
    QuadraticForm
        [[A, B], [0, A]]

    Raises
    ------
    FormException
        Raised if k < 1.
    """
    if not is_int(k) or k < 1:
        raise FormException('level must be a positive integer, got {0}'.format(k))

    mat = [[0] * (2 * k) for _ in range(2 * k)]

    for i in range(1, k + 1):
        for j in range(1, k + 1):
            mat[i - 1][j - 1] = min(i, j)
            mat[k + i - 1][k + j - 1] = min(i, j)
            mat[i - 1][k + j - 1] = max(0, i + j - k)

    return QuadraticForm(k, mat)


def build_L(weight):  # pylint: disable=invalid-name
    """
    (0 x k0, 1, ..., k - k0, 0 x (k0 + k1), 1, ..., k2)

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)

    Returns
    -------
    LinearForm
        Length 2k.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    """
    weight = Weight(weight)
    weight.require_supported()

    k0, k1, k2 = weight.components()
    k = weight.level

    vec = [0] * k0 + list(range(1, k - k0 + 1)) + [0] * (k0 + k1) + list(range(1, k2 + 1))

    return LinearForm(k, vec)


def build_R(k):  # pylint: disable=invalid-name
    """
    Parameters
    ----------
    k : int
        Level, >= 1.

    Returns
    -------
    TransitionMatrix
        diag(C, D)
    """
    if not is_int(k) or k < 1:
        raise FormException('level must be a positive integer, got {0}'.format(k))

    mat = [[0] * (2 * k) for _ in range(2 * k)]

    for i in range(1, k + 1):
        mat[i - 1][i - 1] = 1
        if i < k:
            mat[i - 1][i] = -1
        mat[k + i - 1][k + (k - i + 1) - 1] = 1
        if k - i >= 1:
            mat[k + i - 1][k + (k - i) - 1] = -1

    return TransitionMatrix(k, mat)


def transformed_forms(weight):
    """
    Q' = tR Q R and L' = tR L, so that for M = R N

        tM Q M + L M = tN Q' N + L' N

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2) of level >= 1.

    Returns
    -------
    tuple
        (QuadraticForm, LinearForm)
    """
    weight = Weight(weight)
    k = weight.level

    q_mat = build_Q(k).data()
    l_vec = build_L(weight).data()
    r_mat = build_R(k).data()
    r_t = _transpose(r_mat)

    return (QuadraticForm(k, _matmul(_matmul(r_t, q_mat), r_mat)),
            LinearForm(k, _matvec(r_t, l_vec)))


def _flat(profile, weight):
    if isinstance(profile, ChargeProfile):
        vec = profile.flat()
    else:
        vec = list(profile)

    if len(vec) != 2 * weight.level:
        msg = 'profile of length {0} does not fit weight {1} of level {2}'.format(
            len(vec), weight.label(), weight.level)
        raise DimensionMismatch(msg)

    return vec


def exponent(profile, weight):
    """
    tM Q M + L M, the q-power of the profile's term and the degree of its
    minimal monomial.

    Parameters
    ----------
    profile : ChargeProfile or sequence
        M, or its flattened 2k vector.
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)

    Returns
    -------
    int
        Nonnegative exponent.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    DimensionMismatch
        Raised if the profile level differs from the weight level.
    """
    weight = Weight(weight)
    weight.require_supported()

    vec = _flat(profile, weight)

    if weight.level == 0:
        return 0

    return build_Q(weight.level).value(vec) + build_L(weight).value(vec)


def profiles_within(weight, budget):
    """
    Every charge profile whose exponent is at most budget, with that
    exponent.

    Q and L have nonnegative entries and Q a positive diagonal, so the
    exponent only grows as slots are filled in; a partial profile already
    over budget is cut off with everything below it.

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)
    budget : int
        Largest exponent kept.

    Returns
    -------
    generator
        (ChargeProfile, exponent) pairs, last slot varying fastest.

    Raises
    ------
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    """
    weight = _prepare(weight, budget)
    k = weight.level

    if k == 0:
        return iter([(ChargeProfile([[], []]), 0)])

    return _profiles_within(build_Q(k).data(), build_L(weight).data(), k, budget)


def _profiles_within(q_mat, l_vec, k, budget):
    size = 2 * k
    flat = [0] * size
    # value of slot s against the slots before it, both orders of Q
    cross = [[q_mat[s][t] + q_mat[t][s] for t in range(size)] for s in range(size)]

    def walk(slot, value):
        if slot == size:
            yield ChargeProfile([flat[:k], flat[k:]]), value
            return

        diag = q_mat[slot][slot]
        linear = l_vec[slot] + sum(cross[slot][t] * flat[t] for t in range(slot))
        count = 0

        while True:
            step = count * count * diag + count * linear
            if value + step > budget:
                break
            flat[slot] = count
            for item in walk(slot + 1, value + step):
                yield item
            count += 1

        flat[slot] = 0

    return walk(0, 0)


def generalized_binomial(p, i):
    """
    p (p - 1) ... (p - i + 1) / i! for any integer p.

    Parameters
    ----------
    p : int
        Top, any sign.
    i : int
        Bottom, >= 0.

    Returns
    -------
    int
        Exact value.
    """
    if not is_int(p) or not is_nonneg_int(i):
        raise FormException('binomial needs integer p and i >= 0, got {0}'.format((p, i)))

    num = 1
    den = 1
    for t in range(i):
        num *= p - t
        den *= t + 1

    return num // den


def _bareiss(mat):
    """Fraction free elimination, exact over the integers."""
    mat = [list(i) for i in mat]
    size = len(mat)

    if size == 0:
        return 1

    sign = 1
    prev = 1

    for k in range(size - 1):
        if not mat[k][k]:
            for i in range(k + 1, size):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0

        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0

        prev = mat[k][k]

    return sign * mat[size - 1][size - 1]


def binom_matrix(p, r):
    """(r+1) x (r+1) matrix with entry (i, j) = binomial(p + j, i)."""
    return [[generalized_binomial(p + j, i) for j in range(r + 1)] for i in range(r + 1)]


def binom_matrix_det(p, r):
    """
    Determinant of binom_matrix(p, r), by fraction free elimination.
    It is 1 for every p and r.

    Parameters
    ----------
    p : int
        Any integer.
    r : int
        >= 0

    Returns
    -------
    int
        The determinant.
    """
    if not is_int(p) or not is_nonneg_int(r):
        raise FormException('det needs integer p and r >= 0, got {0}'.format((p, r)))

    return _bareiss(binom_matrix(p, r))


def matrices_json(weight):
    """
    Q, L, R, Q' and L' of a weight as plain data.

    Returns
    -------
    dict
        {"k", "Q", "L", "R", "Qprime", "Lprime"}
    """
    weight = Weight(weight)
    weight.require_supported()
    k = weight.level

    if k == 0:
        return dict(k=0, Q=[], L=[], R=[], Qprime=[], Lprime=[])

    q_prime, l_prime = transformed_forms(weight)

    return dict(
        k=k,
        Q=build_Q(k).data(),
        L=build_L(weight).data(),
        R=build_R(k).data(),
        Qprime=q_prime.data(),
        Lprime=l_prime.data(),
    )

# summation


def _term(counts, charges, power, cutoff):
    """z1^n1 z2^n2 q^power / prod (q)_c"""
    budget = cutoff - power
    factor = make_constant(1, budget)
    for count in counts:
        if count:
            factor = factor.mul(inv_pochhammer(count, budget))
    # terms of factor above budget would land above cutoff after the shift
    return TriGradedSeries(factor.terms(), cutoff).mul_monomial(
        (charges[0], charges[1], power))


def _add(left, right):
    return left.add(right)


def _monotone(k, budget):
    """Non-increasing k-tuples of nonnegative integers with sum <= budget."""
    def walk(prefix, cap, remaining):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        slots = k - len(prefix)
        for val in range(min(cap, remaining // slots) + 1):
            prefix.append(val)
            for i in walk(prefix, val, remaining - val):
                yield i
            prefix.pop()

    return walk(list(), budget, budget)


def _m_task(task):
    comps, cutoff, profiles = task
    weight = Weight(list(comps))
    k = weight.level
    q_mat = build_Q(k).data()
    l_vec = build_L(weight).data()
    items = list()

    for flat in profiles:
        power = _quadratic(q_mat, flat) + _dot(l_vec, flat)
        if power > cutoff:
            continue
        charges = (sum((j + 1) * c for j, c in enumerate(flat[:k])),
                   sum((j + 1) * c for j, c in enumerate(flat[k:])))
        # the pruning above relies on this
        assert power >= charges[0] + charges[1]
        items.append(_term(flat, charges, power, cutoff))

    return series_sum(items, cutoff)


def _n_task(task):
    comps, cutoff, pairs = task
    weight = Weight(list(comps))
    q_prime, l_prime = transformed_forms(weight)
    q_mat = q_prime.data()
    l_vec = l_prime.data()
    items = list()

    for n1, n2 in pairs:
        vec = list(n1) + list(n2)
        power = _quadratic(q_mat, vec) + _dot(l_vec, vec)
        if power > cutoff:
            continue
        k = len(n1)
        counts = [n1[j] - (n1[j + 1] if j + 1 < k else 0) for j in range(k)] + \
            [n2[j] - (n2[j - 1] if j > 0 else 0) for j in range(k)]
        items.append(_term(counts, (sum(n1), sum(n2)), power, cutoff))

    return series_sum(items, cutoff)


def _georgiev_power(weight, r1, r2):
    k0, k1, _ = weight.components()
    k = weight.level

    power = sum(i * i for i in r1) + sum(i * i for i in r2) + \
        sum(r2[a] * r1[k - 1 - a] for a in range(k))

    if weight.shape() == 'k0k1':
        return power + sum(r1[k0:])
    # r_1^(1) + ... + r_1^(k) + r_2^(k1+1) + ... + r_2^(k)
    return power + sum(r1) + sum(r2[k1:])


def _g_task(task):
    comps, cutoff, pairs = task
    weight = Weight(list(comps))
    k = weight.level
    items = list()

    for r1, r2 in pairs:
        power = _georgiev_power(weight, r1, r2)
        if power > cutoff:
            continue
        counts = [r1[j] - (r1[j + 1] if j + 1 < k else 0) for j in range(k)] + \
            [r2[j] - (r2[j + 1] if j + 1 < k else 0) for j in range(k)]
        items.append(_term(counts, (sum(r1), sum(r2)), power, cutoff))

    return series_sum(items, cutoff)


def _dual_pairs(k, cutoff, ascending_second):
    """(first, second) monotone pairs with total <= cutoff."""
    pairs = list()
    for first in _monotone(k, cutoff):
        for second in _monotone(k, cutoff - sum(first)):
            pairs.append((first, tuple(reversed(second)) if ascending_second else second))
    return pairs


def _prepare(weight, cutoff):
    weight = Weight(weight)
    weight.require_supported()

    if not is_nonneg_int(cutoff):
        raise WeightException('cutoff must be a nonnegative integer, got {0}'.format(cutoff))

    return weight


def _run(name, task_func, weight, cutoff, items, jobs):
    log_event('fermionic.start', 'form={0} weight={1} cutoff={2} terms={3} jobs={4}',
              (name, weight, cutoff, len(items), jobs))

    comps = tuple(weight.components())
    tasks = [(comps, cutoff, chunk) for chunk in split_tasks(items, max(1, jobs or 1))]
    result = pool_reduce(task_func, tasks, jobs, _add, TriGradedSeries(None, cutoff))

    log_event('fermionic.done', 'form={0} weight={1} size={2}', (name, weight, result.size()))

    return result


def char_fermionic_M(weight, cutoff, jobs=1):  # pylint: disable=invalid-name
    """
    The M-form sum over charge profiles, truncated at cutoff. Profiles
    with exponent above the cutoff are skipped; the exponent is the least
    q-power of their term.

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)
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
    UnsupportedWeight
        Raised for weights with k0 > 0 and k2 > 0.
    """
    weight = _prepare(weight, cutoff)

    if weight.level == 0:
        return make_constant(1, cutoff)

    profiles = [p.flat() for p, _ in profiles_within(weight, cutoff)]

    return _run('m', _m_task, weight, cutoff, profiles, jobs)


def char_fermionic_N(weight, cutoff, jobs=1):  # pylint: disable=invalid-name
    """
    The dual charge form: sum over N_{1,1} >= ... >= N_{1,k} >= 0 and
    0 <= N_{2,1} <= ... <= N_{2,k} of q^(tN Q' N + L' N) z1^n1 z2^n2 over
    prod (q)_{N_{1,j} - N_{1,j+1}} prod (q)_{N_{2,j} - N_{2,j-1}}.

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)
    cutoff : int
        Inclusive q-degree cutoff.
    jobs : int, optional
        Worker processes.

    Returns
    -------
    TriGradedSeries
        The character.
    """
    weight = _prepare(weight, cutoff)

    if weight.level == 0:
        return make_constant(1, cutoff)

    # n1 + n2 = sum(N1) + sum(N2) never exceeds the exponent
    pairs = _dual_pairs(weight.level, cutoff, True)

    return _run('n', _n_task, weight, cutoff, pairs, jobs)


def char_fermionic_georgiev(weight, cutoff, jobs=1):
    """
    The color-dual-charge form: sum over r_i^(1) >= ... >= r_i^(k) >= 0 of

        q^(sum (r_1^(j))^2 + sum (r_2^(j))^2 + sum_a r_2^(a) r_1^(k+1-a) + linear)

    with linear = r_1^(k0+1) + ... + r_1^(k) for k0 L0 + k1 L1 and
    r_1^(1) + ... + r_1^(k) + r_2^(k+1-k2) + ... + r_2^(k) for k1 L1 + k2 L2.

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)
    cutoff : int
        Inclusive q-degree cutoff.
    jobs : int, optional
        Worker processes.

    Returns
    -------
    TriGradedSeries
        The character.
    """
    weight = _prepare(weight, cutoff)

    if weight.level == 0:
        return make_constant(1, cutoff)

    pairs = _dual_pairs(weight.level, cutoff, False)

    return _run('georgiev', _g_task, weight, cutoff, pairs, jobs)


def summation_size(weight, cutoff, form='m'):
    """
    Number of summation indices (profiles, or dual charge tuples) whose
    term starts at or below the cutoff.

    Parameters
    ----------
    weight : Weight
        (k0, k1, 0) or (0, k1, k2)
    cutoff : int
        Inclusive q-degree cutoff.
    form : str, optional
        'm', 'n' or 'georgiev'; all three give the same number.

    Returns
    -------
    int
        Contributing terms.
    """
    weight = _prepare(weight, cutoff)

    if form not in FORMS:
        raise FormException('unknown form {0!r}, expected one of {1}'.format(form, FORMS))

    if weight.level == 0:
        return 1

    if form == 'm':
        return sum(1 for _ in profiles_within(weight, cutoff))

    if form == 'georgiev':
        return sum(1 for r1, r2 in _dual_pairs(weight.level, cutoff, False)
                   if _georgiev_power(weight, r1, r2) <= cutoff)

    q_prime, l_prime = transformed_forms(weight)
    size = 0
    for n1, n2 in _dual_pairs(weight.level, cutoff, True):
        vec = list(n1) + list(n2)
        if q_prime.value(vec) + l_prime.value(vec) <= cutoff:
            size += 1
    return size


CHARACTER_FORMS = {
    'm': char_fermionic_M,
    'n': char_fermionic_N,
    'georgiev': char_fermionic_georgiev,
}
