# -*- coding: utf-8 -*-
""" Chain complexes over small additive categories of matrices.

A summand is a pair (label, qshift). A morphism between direct sums is a numpy object matrix whose
rows are indexed by the target summands and whose columns are indexed by the source summands. The
differential d^i of a complex maps degree i to degree i+1.
"""

from __future__ import absolute_import, division, unicode_literals

import logging
import math
from fractions import Fraction

import numpy as np

from resources.lib.spider.exceptions import (InvalidArgumentException, NotAComplexException, NotChainMapException, NotUnitException,
                                             SupportViolationException)
from resources.lib.spider.qring import LaurentPoly, TruncatedSeries

_LOGGER = logging.getLogger(__name__)


class RationalCategory:
    """ Ungraded matrices over Q. Every nonzero entry is invertible. """

    name = 'rational'

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    @staticmethod
    def coerce(value):
        """ Parse an entry: Fraction, int or an "a/b" string """
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError('Can not use %r as a rational entry' % (value,))

    @staticmethod
    def check_entry(entry, source, target):  # pylint: disable=unused-argument
        """ Any rational number is allowed between any summands """
        return True

    @staticmethod
    def is_unit(entry, source, target):  # pylint: disable=unused-argument
        """ Nonzero entries are units """
        return entry != 0

    @staticmethod
    def inverse(entry):
        """ Inverse of a unit """
        return 1 / entry

    @staticmethod
    def entry_to_json(entry):
        """ Integers stay integers, other values become "a/b" """
        if entry.denominator == 1:
            return entry.numerator
        return str(entry)

    def __eq__(self, other):
        return isinstance(other, RationalCategory)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'RationalCategory()'


class GradedCategory:
    """ q-graded matrices over Z[q, q^-1].

    An entry from (a, s) to (b, t) is zero or a monomial of degree t - s. It is a unit when it is +-1
    between equal summands.
    """

    name = 'graded'

    def __init__(self):
        self.zero = LaurentPoly()
        self.one = LaurentPoly(1)

    @staticmethod
    def coerce(value):
        """ Parse an entry: LaurentPoly, int or an {"exp": coeff} map """
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, dict)):
            return LaurentPoly.from_json(value)
        raise TypeError('Can not use %r as a graded entry' % (value,))

    @staticmethod
    def check_entry(entry, source, target):
        """ Zero, or a monomial of the degree separating the two summands """
        if entry.is_zero():
            return True
        return entry.is_monomial() and entry.min_degree() == target[1] - source[1]

    @staticmethod
    def is_unit(entry, source, target):
        """ +-1 between equal summands """
        return tuple(source) == tuple(target) and (entry == 1 or entry == -1)

    @staticmethod
    def inverse(entry):
        """ Inverse of a unit """
        return entry ** -1

    @staticmethod
    def entry_to_json(entry):
        """ {"exp": coeff} map """
        return entry.to_json()

    def __eq__(self, other):
        return isinstance(other, GradedCategory)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'GradedCategory()'


RATIONAL_CATEGORY = RationalCategory()
GRADED_CATEGORY = GradedCategory()
CATEGORIES = {RATIONAL_CATEGORY.name: RATIONAL_CATEGORY, GRADED_CATEGORY.name: GRADED_CATEGORY}


def zeros(category, rows, cols):
    """ A zero matrix """
    return np.full((rows, cols), category.zero, dtype=object)


def identity_matrix(category, size):
    """ An identity matrix """
    result = zeros(category, size, size)
    for index in range(size):
        result[index, index] = category.one
    return result


def matmul(category, left, right):
    """ Matrix product that also handles an empty inner dimension """
    if left.shape[1] != right.shape[0]:
        raise ValueError('Can not multiply %s by %s matrices' % (left.shape, right.shape))
    if left.shape[1] == 0:
        return zeros(category, left.shape[0], right.shape[1])
    return np.dot(left, right)


def scale_matrix(scalar, matrix):
    """ Multiply every entry by a scalar """
    result = np.empty(matrix.shape, dtype=object)
    for index, entry in np.ndenumerate(matrix):
        result[index] = scalar * entry
    return result


def as_matrix(category, data, shape):
    """ An object matrix of the given shape with every entry coerced into the category """
    source = np.asarray(data, dtype=object)
    result = zeros(category, *shape)
    if source.size == 0:
        if shape[0] * shape[1]:
            raise ValueError('Expected a %dx%d matrix, got an empty one' % shape)
        return result
    if source.shape != tuple(shape):
        raise ValueError('Expected a %dx%d matrix, got shape %s' % (shape[0], shape[1], source.shape))
    for index, entry in np.ndenumerate(source):
        result[index] = category.coerce(entry)
    return result


def is_zero_matrix(matrix):
    """ True when all entries vanish """
    return not any(bool(entry) for entry in matrix.flat)


def matrices_equal(first, second):
    """ Entrywise equality """
    return first.shape == second.shape and all(one == other for one, other in zip(first.flat, second.flat))


def block(category, grid, row_sizes, col_sizes):
    """ Assemble a block matrix, None standing for a zero block """
    result = zeros(category, sum(row_sizes), sum(col_sizes))
    row_start = 0
    for row_blocks, rows in zip(grid, row_sizes):
        col_start = 0
        for piece, cols in zip(row_blocks, col_sizes):
            if piece is not None and rows and cols:
                result[row_start:row_start + rows, col_start:col_start + cols] = piece
            col_start += cols
        row_start += rows
    return result


def invert_matrix(category, matrix, sources, targets):
    """ Gauss-Jordan inversion using unit pivots only.

    :param category:        The category the entries live in.
    :param matrix:          A square matrix from the source summands to the target summands.
    :param list sources:    Source summands (columns).
    :param list targets:    Target summands (rows).
    :returns:               The inverse, from the target summands to the source summands.
    :raises NotUnitException: when no unit pivot is available.
    """
    size = len(sources)
    if matrix.shape != (len(targets), size) or len(targets) != size:
        raise NotUnitException('A %s matrix can not be inverted' % (matrix.shape,))
    work = matrix.copy()
    inverse = identity_matrix(category, size)
    rows = list(targets)
    for column in range(size):
        pivot = next((row for row in range(column, size) if category.is_unit(work[row, column], sources[column], rows[row])), None)
        if pivot is None:
            raise NotUnitException('No unit pivot in column %d' % column)
        if pivot != column:
            work[[column, pivot]] = work[[pivot, column]]
            inverse[[column, pivot]] = inverse[[pivot, column]]
            rows[column], rows[pivot] = rows[pivot], rows[column]
        factor = category.inverse(work[column, column])
        work[column] = scale_matrix(factor, work[column:column + 1])[0]
        inverse[column] = scale_matrix(factor, inverse[column:column + 1])[0]
        for row in range(size):
            if row != column and work[row, column]:
                factor = work[row, column]
                work[row] = work[row] - scale_matrix(factor, work[column:column + 1])[0]
                inverse[row] = inverse[row] - scale_matrix(factor, inverse[column:column + 1])[0]
    return inverse


def is_isomorphism(category, matrix, sources, targets):
    """ True when the matrix can be inverted with unit pivots """
    try:
        invert_matrix(category, matrix, sources, targets)
    except NotUnitException:
        return False
    return True


def _as_summands(objects):
    return tuple((str(label), int(shift)) for label, shift in objects)


class Complex:
    """ A bounded complex of direct sums of summands """

    def __init__(self, category, objects, differentials=None, check=True):
        """
        :type category: RationalCategory | GradedCategory
        :type objects: dict[int, list[tuple[str, int]]]
        :type differentials: dict[int, numpy.ndarray]
        :type check: bool
        """
        self.category = category
        self.objects = {int(degree): _as_summands(summands) for degree, summands in objects.items() if summands}
        self.differentials = {}
        for degree, matrix in (differentials or {}).items():
            degree = int(degree)
            try:
                matrix = as_matrix(category, matrix, (len(self.at(degree + 1)), len(self.at(degree))))
            except (TypeError, ValueError) as exc:
                _LOGGER.debug('Differential d^%d: %s', degree, exc)
                raise NotAComplexException(degree)
            if not is_zero_matrix(matrix):
                self.differentials[degree] = matrix
        if check:
            self.check()

    @classmethod
    def zero(cls, category):
        """ The zero complex """
        return cls(category, {})

    def at(self, degree):
        """ Summands in a degree """
        return self.objects.get(degree, ())

    def d(self, degree):
        """ The differential leaving a degree """
        if degree in self.differentials:
            return self.differentials[degree]
        return zeros(self.category, len(self.at(degree + 1)), len(self.at(degree)))

    def degrees(self):
        """ Sorted degrees with nonzero objects """
        return sorted(self.objects)

    def min_degree(self):
        """ Lowest nonzero degree, None for the zero complex """
        return min(self.objects) if self.objects else None

    def max_degree(self):
        """ Highest nonzero degree, None for the zero complex """
        return max(self.objects) if self.objects else None

    def is_zero(self):
        """ True when all objects are zero """
        return not self.objects

    def check(self):
        """ Verify entry degrees and d^2 = 0 """
        for degree, matrix in self.differentials.items():
            sources, targets = self.at(degree), self.at(degree + 1)
            for (row, col), entry in np.ndenumerate(matrix):
                if not self.category.check_entry(entry, sources[col], targets[row]):
                    _LOGGER.debug('Entry %s from %s to %s is not allowed', entry, sources[col], targets[row])
                    raise NotAComplexException(degree)
        for degree in self.differentials:
            if degree + 1 in self.differentials:
                if not is_zero_matrix(matmul(self.category, self.differentials[degree + 1], self.differentials[degree])):
                    raise NotAComplexException(degree)

    def to_json(self):
        """ Serializable form """
        return {
            'category': self.category.name,
            'objects': {str(degree): [list(summand) for summand in summands] for degree, summands in sorted(self.objects.items())},
            'differentials': {str(degree): [[self.category.entry_to_json(entry) for entry in row] for row in matrix]
                              for degree, matrix in sorted(self.differentials.items())},
        }

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        if self.category != other.category or self.objects != other.objects:
            return False
        return all(matrices_equal(self.d(degree), other.d(degree)) for degree in set(self.differentials) | set(other.differentials))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return "%r" % self.__dict__


class LazyComplex:
    """ A bounded below complex whose degrees are produced on request """

    def __init__(self, category, start, generator):
        """
        :param category:        The category the entries live in.
        :param int start:       The lowest degree.
        :param generator:       Function of a degree n returning (summands of degree n, d^n).
        """
        self.category = category
        self.start = start
        self._generator = generator
        self._cache = {}

    @classmethod
    def periodic(cls, category, objects, differentials, start, period, qstep):
        """ Repeat the degrees start .. start+period-1 forever, shifting q by qstep every period.

        :param dict objects:        Summands of the degrees below start+period.
        :param dict differentials:  Matrices d^n for the degrees below start+period.
        """
        objects = {int(degree): _as_summands(summands) for degree, summands in objects.items()}
        differentials = {int(degree): matrix for degree, matrix in differentials.items()}
        lowest = min(objects)
        if period < 1 or start < lowest:
            raise InvalidArgumentException('A periodic block needs period >= 1 and start >= %d' % lowest)

        def base_of(degree):
            turns = max(0, (degree - start) // period)
            return degree - turns * period, turns

        matrices = {}
        for degree in range(lowest, start + period):
            shape = (len(objects.get(base_of(degree + 1)[0], ())), len(objects.get(degree, ())))
            try:
                data = differentials.get(degree)
                matrices[degree] = zeros(category, *shape) if data is None else as_matrix(category, data, shape)
            except (TypeError, ValueError) as exc:
                _LOGGER.debug('Differential d^%d: %s', degree, exc)
                raise NotAComplexException(degree)

        def generator(degree):
            base, turns = base_of(degree)
            summands = tuple((label, shift + turns * qstep) for label, shift in objects.get(base, ()))
            return summands, matrices[base]

        return cls(category, lowest, generator)

    def _get(self, degree):
        if degree not in self._cache:
            self._cache[degree] = self._generator(degree)
        return self._cache[degree]

    def at(self, degree):
        """ Summands in a degree """
        if degree < self.start:
            return ()
        return self._get(degree)[0]

    def d(self, degree):
        """ The differential leaving a degree """
        if degree < self.start:
            return zeros(self.category, len(self.at(degree + 1)), 0)
        return self._get(degree)[1]

    def through(self, degree):
        """ The brutal truncation to degrees <= degree, as a bounded Complex """
        objects = {n: self.at(n) for n in range(self.start, degree + 1)}
        differentials = {n: self.d(n) for n in range(self.start, degree)}
        return Complex(self.category, objects, differentials)

    def __repr__(self):
        return 'LazyComplex(%r, start=%d)' % (self.category, self.start)


class ChainMap:
    """ A family of matrices f^i from source^i to target^i """

    def __init__(self, source, target, components=None, check=True):
        """
        :type source: Complex
        :type target: Complex
        :type components: dict[int, numpy.ndarray]
        :type check: bool
        """
        self.source = source
        self.target = target
        self.category = source.category
        self.components = {}
        for degree, matrix in (components or {}).items():
            try:
                matrix = as_matrix(self.category, matrix, (len(target.at(degree)), len(source.at(degree))))
            except (TypeError, ValueError) as exc:
                _LOGGER.debug('Component f^%d: %s', degree, exc)
                raise NotChainMapException(degree)
            if not is_zero_matrix(matrix):
                self.components[int(degree)] = matrix
        if check:
            self.check()

    @classmethod
    def identity(cls, complex_):
        """ The identity chain map """
        return cls(complex_, complex_, {degree: identity_matrix(complex_.category, len(summands))
                                        for degree, summands in complex_.objects.items()}, check=False)

    @classmethod
    def zero(cls, source, target):
        """ The zero chain map """
        return cls(source, target, check=False)

    def at(self, degree):
        """ The component in a degree """
        if degree in self.components:
            return self.components[degree]
        return zeros(self.category, len(self.target.at(degree)), len(self.source.at(degree)))

    def span(self):
        """ Degrees where either complex can be nonzero, padded by one on each side """
        degrees = self.source.degrees() + self.target.degrees()
        if not degrees:
            return []
        return list(range(min(degrees) - 1, max(degrees) + 1))

    def is_chain_map(self):
        """ True when f d = d f in every degree """
        for degree in self.span():
            left = matmul(self.category, self.at(degree + 1), self.source.d(degree))
            right = matmul(self.category, self.target.d(degree), self.at(degree))
            if not matrices_equal(left, right):
                return False
        return True

    def check(self):
        """ Raise NotChainMapException at the first degree where f d != d f """
        for degree in self.span():
            left = matmul(self.category, self.at(degree + 1), self.source.d(degree))
            right = matmul(self.category, self.target.d(degree), self.at(degree))
            if not matrices_equal(left, right):
                raise NotChainMapException(degree)

    def __add__(self, other):
        components = {degree: self.at(degree) + other.at(degree) for degree in set(self.components) | set(other.components)}
        return ChainMap(self.source, self.target, components, check=False)

    def __neg__(self):
        return ChainMap(self.source, self.target, {degree: scale_matrix(-1, matrix) for degree, matrix in self.components.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        return all(matrices_equal(self.at(degree), other.at(degree)) for degree in set(self.components) | set(other.components))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return "%r" % self.__dict__


def compose_maps(second, first):
    """ The chain map second . first """
    components = {}
    for degree in set(first.components) & set(second.components):
        components[degree] = matmul(first.category, second.at(degree), first.at(degree))
    return ChainMap(first.source, second.target, components, check=False)


def shift(complex_, n):
    """ A[n]^i = A^(i-n), with differential (-1)^n d """
    sign = -1 if n % 2 else 1
    objects = {degree + n: summands for degree, summands in complex_.objects.items()}
    differentials = {degree + n: scale_matrix(sign, matrix) for degree, matrix in complex_.differentials.items()}
    return Complex(complex_.category, objects, differentials, check=False)


def shift_map(chain_map, n):
    """ The same components between the shifted complexes """
    return ChainMap(shift(chain_map.source, n), shift(chain_map.target, n),
                    {degree + n: matrix for degree, matrix in chain_map.components.items()}, check=False)


def cone(chain_map):
    """ cone(f)^i = A^(i+1) + B^i with differential ((-d_A, 0), (-f, d_B))

    :type chain_map: ChainMap
    :rtype: Complex
    """
    chain_map.check()
    first, second = chain_map.source, chain_map.target
    category = chain_map.category
    degrees = [degree - 1 for degree in first.degrees()] + second.degrees()
    if not degrees:
        return Complex.zero(category)
    objects, differentials = {}, {}
    for degree in range(min(degrees), max(degrees) + 1):
        objects[degree] = first.at(degree + 1) + second.at(degree)
    for degree in range(min(degrees) - 1, max(degrees) + 1):
        rows = [len(first.at(degree + 2)), len(second.at(degree + 1))]
        cols = [len(first.at(degree + 1)), len(second.at(degree))]
        grid = [[scale_matrix(-1, first.d(degree + 1)), None],
                [scale_matrix(-1, chain_map.at(degree + 1)), second.d(degree)]]
        differentials[degree] = block(category, grid, rows, cols)
    return Complex(category, objects, differentials)


def cone_maps(chain_map):
    """ The inclusion B -> cone(f) and the connecting map cone(f) -> A[-1]

    :rtype: tuple[ChainMap, ChainMap]
    """
    result = cone(chain_map)
    first, second = chain_map.source, chain_map.target
    category = chain_map.category
    inclusion, connecting = {}, {}
    for degree in result.degrees():
        size_a, size_b = len(first.at(degree + 1)), len(second.at(degree))
        inclusion[degree] = block(category, [[None], [identity_matrix(category, size_b)]], [size_a, size_b], [size_b])
        connecting[degree] = block(category, [[identity_matrix(category, size_a), None]], [size_a], [size_a, size_b])
    return (ChainMap(second, result, inclusion, check=False),
            ChainMap(result, shift(first, -1), connecting, check=False))


def truncate(complex_, k):
    """ Drop every degree above k

    :type complex_: Complex | LazyComplex
    """
    if isinstance(complex_, LazyComplex):
        return complex_.through(k)
    objects = {degree: summands for degree, summands in complex_.objects.items() if degree <= k}
    differentials = {degree: matrix for degree, matrix in complex_.differentials.items() if degree < k}
    return Complex(complex_.category, objects, differentials, check=False)


def truncate_map(chain_map, k):
    """ The induced map between the truncations """
    return ChainMap(truncate(chain_map.source, k), truncate(chain_map.target, k),
                    {degree: matrix for degree, matrix in chain_map.components.items() if degree <= k}, check=False)


class Elimination:
    """ A simplified complex with the maps relating it to the original """

    def __init__(self, original, result, forward, backward, homotopy):
        """
        :type original: Complex
        :type result: Complex
        :type forward: ChainMap
        :type backward: ChainMap
        :type homotopy: dict[int, numpy.ndarray]
        """
        self.original = original
        self.complex = result
        self.forward = forward
        self.backward = backward
        self.homotopy = homotopy

    def __repr__(self):
        return "%r" % self.__dict__


def gauss_eliminate(complex_, degree, entry):
    """ Remove a unit entry of d^degree together with its source and target summands.

    :param Complex complex_:    The complex.
    :param int degree:          Degree of the differential holding the entry.
    :param tuple entry:         (row, col) of the entry.
    :rtype: Elimination
    """
    category = complex_.category
    row, col = entry
    matrix = complex_.d(degree)
    sources, targets = complex_.at(degree), complex_.at(degree + 1)
    pivot = matrix[row, col]
    if not category.is_unit(pivot, sources[col], targets[row]):
        raise NotUnitException('Entry %s of d^%d is not a unit' % (pivot, degree))
    inverse = category.inverse(pivot)
    keep_source = [index for index in range(len(sources)) if index != col]
    keep_target = [index for index in range(len(targets)) if index != row]

    objects = dict(complex_.objects)
    objects[degree] = tuple(sources[index] for index in keep_source)
    objects[degree + 1] = tuple(targets[index] for index in keep_target)

    differentials = dict(complex_.differentials)
    corrected = zeros(category, len(keep_target), len(keep_source))
    for new_row, old_row in enumerate(keep_target):
        for new_col, old_col in enumerate(keep_source):
            corrected[new_row, new_col] = matrix[old_row, old_col] - matrix[old_row, col] * inverse * matrix[row, old_col]
    differentials[degree] = corrected
    differentials[degree - 1] = complex_.d(degree - 1)[keep_source, :]
    differentials[degree + 1] = complex_.d(degree + 1)[:, keep_target]
    result = Complex(category, objects, differentials, check=False)

    forward, backward = {}, {}
    for other in complex_.degrees():
        if other not in (degree, degree + 1):
            size = len(complex_.at(other))
            forward[other] = backward[other] = identity_matrix(category, size)

    forward[degree] = zeros(category, len(keep_source), len(sources))
    backward[degree] = zeros(category, len(sources), len(keep_source))
    for new_col, old_col in enumerate(keep_source):
        forward[degree][new_col, old_col] = category.one
        backward[degree][old_col, new_col] = category.one
        backward[degree][col, new_col] = -inverse * matrix[row, old_col]

    forward[degree + 1] = zeros(category, len(keep_target), len(targets))
    backward[degree + 1] = zeros(category, len(targets), len(keep_target))
    for new_row, old_row in enumerate(keep_target):
        forward[degree + 1][new_row, old_row] = category.one
        forward[degree + 1][new_row, row] = -matrix[old_row, col] * inverse
        backward[degree + 1][old_row, new_row] = category.one

    homotopy = {degree + 1: zeros(category, len(sources), len(targets))}
    homotopy[degree + 1][col, row] = inverse

    _LOGGER.debug('Eliminated %s -> %s in degree %d', sources[col], targets[row], degree)
    return Elimination(complex_, result, ChainMap(complex_, result, forward, check=False),
                       ChainMap(result, complex_, backward, check=False), homotopy)


def find_unit(complex_, through=None):
    """ The first unit entry (degree, (row, col)) of a differential d^i with i < through """
    for degree in sorted(complex_.differentials):
        if through is not None and degree >= through:
            break
        matrix = complex_.differentials[degree]
        sources, targets = complex_.at(degree), complex_.at(degree + 1)
        for (row, col), entry in np.ndenumerate(matrix):
            if entry and complex_.category.is_unit(entry, sources[col], targets[row]):
                return degree, (row, col)
    return None


def _homotopy_at(homotopy, category, complex_, degree):
    if degree in homotopy:
        return homotopy[degree]
    return zeros(category, len(complex_.at(degree - 1)), len(complex_.at(degree)))


def eliminate_all(complex_, through=None):
    """ Eliminate unit entries until none is left below the given degree, composing the maps

    :rtype: Elimination
    """
    category = complex_.category
    current = complex_
    forward = ChainMap.identity(complex_)
    backward = ChainMap.identity(complex_)
    homotopy = {}
    steps = 0
    while True:
        found = find_unit(current, through)
        if found is None:
            break
        step = gauss_eliminate(current, *found)
        for degree in step.homotopy:
            extra = matmul(category, matmul(category, backward.at(degree - 1), step.homotopy[degree]), forward.at(degree))
            homotopy[degree] = _homotopy_at(homotopy, category, complex_, degree) + extra
        forward = compose_maps(step.forward, forward)
        backward = compose_maps(backward, step.backward)
        current = step.complex
        steps += 1
    _LOGGER.debug('Simplified with %d eliminations', steps)
    return Elimination(complex_, current, forward, backward, homotopy)


def simplify(complex_, through=None):
    """ Repeated Gaussian elimination below a degree

    :type complex_: Complex
    :rtype: Complex
    """
    return eliminate_all(complex_, through).complex


def homotopy_check(elimination):
    """ True when forward . backward = id and id - backward . forward = d h + h d """
    original, result = elimination.original, elimination.complex
    category = original.category
    if compose_maps(elimination.forward, elimination.backward) != ChainMap.identity(result):
        return False
    round_trip = compose_maps(elimination.backward, elimination.forward)
    for degree in original.degrees():
        size = len(original.at(degree))
        left = identity_matrix(category, size) - round_trip.at(degree)
        right = (matmul(category, original.d(degree - 1), _homotopy_at(elimination.homotopy, category, original, degree))
                 + matmul(category, _homotopy_at(elimination.homotopy, category, original, degree + 1), original.d(degree)))
        if not matrices_equal(left, right):
            return False
    return True


def is_degree_isomorphism(chain_map, degree):
    """ True when the component in a degree is invertible """
    return is_isomorphism(chain_map.category, chain_map.at(degree), chain_map.source.at(degree), chain_map.target.at(degree))


def iso_order(chain_map, probe):
    """ The largest k with every component up to k invertible, or math.inf when that holds up to the probe

    :type chain_map: ChainMap
    :param int probe:       Highest degree to look at.
    """
    degrees = chain_map.source.degrees() + chain_map.target.degrees()
    if not degrees:
        return math.inf
    for degree in range(min(degrees), probe + 1):
        if not is_degree_isomorphism(chain_map, degree):
            return degree - 1
    return math.inf


def totalize(rows, verticals):
    """ The total complex of a double complex with finitely many rows.

    :param list rows:           Complexes R_0 .. R_m, the horizontal rows.
    :param list verticals:      Dicts degree -> matrix for the maps v_r from R_r^i to R_(r+1)^i.
    :rtype: Complex
    """
    category = rows[0].category
    verticals = [ChainMap(rows[index], rows[index + 1], maps, check=False) for index, maps in enumerate(verticals)]
    for index, vertical in enumerate(verticals):
        source, target = rows[index], rows[index + 1]
        for degree in vertical.span():
            left = matmul(category, vertical.at(degree + 1), source.d(degree))
            right = matmul(category, target.d(degree), vertical.at(degree))
            if not is_zero_matrix(left + right):
                raise NotAComplexException(degree + index)
        if index + 1 < len(verticals):
            following = verticals[index + 1]
            for degree in vertical.span():
                if not is_zero_matrix(matmul(category, following.at(degree), vertical.at(degree))):
                    raise NotAComplexException(degree + index)

    degrees = [degree + index for index, row in enumerate(rows) for degree in row.degrees()]
    if not degrees:
        return Complex.zero(category)
    objects, differentials = {}, {}
    for total in range(min(degrees), max(degrees) + 1):
        objects[total] = tuple(summand for index, row in enumerate(rows) for summand in row.at(total - index))
    for total in range(min(degrees) - 1, max(degrees) + 1):
        row_sizes = [len(row.at(total + 1 - index)) for index, row in enumerate(rows)]
        col_sizes = [len(row.at(total - index)) for index, row in enumerate(rows)]
        grid = [[None] * len(rows) for _ in rows]
        for index, row in enumerate(rows):
            grid[index][index] = row.d(total - index)
            if index + 1 < len(rows):
                grid[index + 1][index] = verticals[index].at(total - index)
        differentials[total] = block(category, grid, row_sizes, col_sizes)
    return Complex(category, objects, differentials)


def euler_char_exact(complex_):
    """ Alternating sum of the summands of a bounded complex, per label

    :rtype: dict[str, LaurentPoly]
    """
    result = {}
    for degree, summands in complex_.objects.items():
        sign = -1 if degree % 2 else 1
        for label, qshift in summands:
            result[label] = result.get(label, LaurentPoly()) + LaurentPoly.monomial(qshift, sign)
    return {label: value for label, value in result.items() if not value.is_zero()}


def euler_char(complex_, through, slope, a=0, b=0):
    """ Alternating sum of a bounded below complex, exact below the order its support allows.

    Every summand (h, q) must satisfy h >= a and q >= slope (h - a) + b. Degrees above ``through``
    then only contribute from q-degree ceil(slope (through + 1 - a) + b) on.

    :param complex_:        A Complex or LazyComplex.
    :param int through:     Highest homological degree to sum.
    :param slope:           Positive slope of the support region.
    :rtype: dict[str, TruncatedSeries]
    """
    try:
        slope, a, b = Fraction(slope), Fraction(a), Fraction(b)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidArgumentException('Invalid support region: %s' % exc)
    if slope <= 0:
        raise InvalidArgumentException('The support slope must be positive, got %s' % slope)
    part = truncate(complex_, through)
    for degree, summands in part.objects.items():
        for _, qshift in summands:
            if degree < a or qshift < slope * (degree - a) + b:
                raise SupportViolationException(degree, qshift)
    order = int(math.ceil(slope * (through + 1 - a) + b))
    _LOGGER.debug('Euler characteristic through degree %d is exact below q^%d', through, order)
    return {label: TruncatedSeries.from_laurent(value, order) for label, value in euler_char_exact(part).items()}
