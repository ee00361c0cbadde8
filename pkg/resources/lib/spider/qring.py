# -*- coding: utf-8 -*-
""" Coefficient rings: Laurent polynomials, rational functions and truncated series in q """

from __future__ import absolute_import, division, unicode_literals

import logging
from functools import reduce
from math import gcd

import sympy

_LOGGER = logging.getLogger(__name__)

_Q = sympy.Symbol('q')


class LaurentPoly:
    """ An element of Z[q, q^-1], stored as a map from exponent to a nonzero integer coefficient.

    Values are immutable. The class deliberately has no __len__, __iter__ or __getitem__, so numpy
    treats instances as scalars inside object arrays.
    """

    __slots__ = ('_coeffs', '_hash')

    def __init__(self, coeffs=None):
        """
        :type coeffs: dict[int, int] | int | None
        """
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._coeffs = {int(exp): int(coeff) for exp, coeff in coeffs.items() if coeff}
        self._hash = None

    @classmethod
    def monomial(cls, exp, coeff=1):
        """ Return coeff * q^exp """
        return cls({exp: coeff})

    @classmethod
    def from_json(cls, data):
        """ Parse the {"exp": coeff} map produced by to_json, or a plain integer """
        if isinstance(data, int):
            return cls(data)
        return cls({int(exp): int(coeff) for exp, coeff in data.items()})

    @property
    def coeffs(self):
        """ A copy of the exponent to coefficient map """
        return dict(self._coeffs)

    def items(self):
        """ Sorted (exponent, coefficient) pairs """
        return sorted(self._coeffs.items())

    def coefficient(self, exp):
        """ Coefficient of q^exp """
        return self._coeffs.get(exp, 0)

    def is_zero(self):
        """ True for the zero polynomial """
        return not self._coeffs

    def is_monomial(self):
        """ True when exactly one term is present """
        return len(self._coeffs) == 1

    def is_unit(self):
        """ Units of Z[q, q^-1] are +-q^k """
        return self.is_monomial() and abs(next(iter(self._coeffs.values()))) == 1

    def min_degree(self):
        """ Lowest exponent, None for zero """
        return min(self._coeffs) if self._coeffs else None

    def max_degree(self):
        """ Highest exponent, None for zero """
        return max(self._coeffs) if self._coeffs else None

    def shift(self, n):
        """ Multiply by q^n """
        return LaurentPoly({exp + n: coeff for exp, coeff in self._coeffs.items()})

    def bar(self):
        """ Substitute q -> q^-1 """
        return LaurentPoly({-exp: coeff for exp, coeff in self._coeffs.items()})

    def content(self):
        """ Greatest common divisor of the coefficients """
        return reduce(gcd, self._coeffs.values(), 0)

    def to_json(self):
        """ {"exp": coeff} with string keys """
        return {str(exp): coeff for exp, coeff in self.items()}

    def to_sympy(self):
        """ Convert a polynomial without negative exponents to a sympy Poly over ZZ """
        if self._coeffs and self.min_degree() < 0:
            raise ValueError('Negative exponents can not be converted to a polynomial')
        if not self._coeffs:
            return sympy.Poly(0, _Q, domain='ZZ')
        return sympy.Poly.from_dict({(exp,): coeff for exp, coeff in self._coeffs.items()}, _Q, domain='ZZ')

    @classmethod
    def from_sympy(cls, poly):
        """ Convert a univariate sympy Poly back """
        return cls({monom[0]: int(coeff) for monom, coeff in poly.terms()})

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():  # pylint: disable=protected-access
            result[exp] = result.get(exp, 0) + coeff
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({exp: -coeff for exp, coeff in self._coeffs.items()})

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        result = {}
        for exp1, coeff1 in self._coeffs.items():
            for exp2, coeff2 in other._coeffs.items():  # pylint: disable=protected-access
                result[exp1 + exp2] = result.get(exp1 + exp2, 0) + coeff1 * coeff2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError('Only units have negative powers in Z[q, q^-1]')
            (exp, coeff), = self._coeffs.items()
            return LaurentPoly({-exp * -n: coeff ** -n})
        result = LaurentPoly(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs  # pylint: disable=protected-access

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            if not self._coeffs:
                self._hash = hash(0)
            elif list(self._coeffs) == [0]:
                self._hash = hash(self._coeffs[0])
            else:
                self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return '0'
        parts = []
        for exp, coeff in sorted(self._coeffs.items(), reverse=True):
            if exp == 0:
                term = str(abs(coeff))
            else:
                power = 'q' if exp == 1 else 'q^%d' % exp
                term = power if abs(coeff) == 1 else '%d*%s' % (abs(coeff), power)
            if not parts:
                parts.append(term if coeff > 0 else '-' + term)
            else:
                parts.append(('+ ' if coeff > 0 else '- ') + term)
        return ' '.join(parts)

    def __repr__(self):
        return 'LaurentPoly(%r)' % dict(self.items())


def _as_laurent(value):
    """ Coerce ints to LaurentPoly, leave other types to their own operators """
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly(value)
    return NotImplemented


Q = LaurentPoly.monomial(1)


def qint(n):
    """ The quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    :param int n:           A nonnegative integer.
    :rtype: LaurentPoly
    """
    if n < 0:
        raise ValueError('Quantum integers are only defined for n >= 0, got %d' % n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def qfact(n):
    """ The quantum factorial [1][2]...[n] """
    if n < 0:
        raise ValueError('Quantum factorials are only defined for n >= 0, got %d' % n)
    result = LaurentPoly(1)
    for i in range(2, n + 1):
        result = result * qint(i)
    return result


def quantum_dimension(m, n):
    """ Graded dimension [m+1][n+1][m+n+2]/[2] of the sl3 module with highest weight (m, n) """
    if m < 0 or n < 0:
        raise ValueError('Highest weights are nonnegative, got (%d, %d)' % (m, n))
    return RationalFunc(qint(m + 1) * qint(n + 1) * qint(m + n + 2), qint(2)).to_laurent()


class RationalFunc:
    """ An element of Q(q) kept in canonical form.

    The denominator has lowest exponent 0 with a positive constant term, numerator and denominator
    are coprime in Q[q] and their integer coefficients have no common factor. Two canonical values
    are equal exactly when their numerators and denominators are.
    """

    __slots__ = ('_num', '_den')

    def __init__(self, numerator, denominator=1):
        """
        :type numerator: LaurentPoly | int
        :type denominator: LaurentPoly | int
        """
        num = _as_laurent(numerator)
        den = _as_laurent(denominator)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError('Rational functions are built from Laurent polynomials')
        if den.is_zero():
            raise ZeroDivisionError('Denominator of a rational function is zero')
        self._num, self._den = _canonicalize(num, den)

    @property
    def numerator(self):
        """ Canonical numerator """
        return self._num

    @property
    def denominator(self):
        """ Canonical denominator """
        return self._den

    @classmethod
    def from_json(cls, data):
        """ Parse a numerator/denominator map or a plain Laurent polynomial map """
        if isinstance(data, dict) and 'numerator' in data:
            return cls(LaurentPoly.from_json(data['numerator']), LaurentPoly.from_json(data['denominator']))
        return cls(LaurentPoly.from_json(data))

    def is_zero(self):
        """ True for zero """
        return self._num.is_zero()

    def is_unit(self):
        """ Every nonzero element of a field is a unit """
        return not self._num.is_zero()

    def is_laurent(self):
        """ True when the value lies in Z[q, q^-1] """
        return self._den == 1

    def to_laurent(self):
        """ Return the value as a LaurentPoly, or raise ValueError """
        if not self.is_laurent():
            raise ValueError('%s is not a Laurent polynomial' % self)
        return self._num

    def bar(self):
        """ Substitute q -> q^-1 """
        return RationalFunc(self._num.bar(), self._den.bar())

    def to_json(self):
        """ Plain exponent map for Laurent values, numerator/denominator maps otherwise """
        if self.is_laurent():
            return self._num.to_json()
        return {'numerator': self._num.to_json(), 'denominator': self._den.to_json()}

    def __add__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunc(self._num * other._den + other._num * self._den, self._den * other._den)  # pylint: disable=protected-access

    __radd__ = __add__

    def __neg__(self):
        result = RationalFunc.__new__(RationalFunc)
        result._num = -self._num  # pylint: disable=protected-access
        result._den = self._den  # pylint: disable=protected-access
        return result

    def __sub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunc(self._num * other._num, self._den * other._den)  # pylint: disable=protected-access

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError('Division by the zero rational function')
        return RationalFunc(self._num * other._den, self._den * other._num)  # pylint: disable=protected-access

    def __rtruediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError('Zero has no negative powers')
            return RationalFunc(self._den ** -n, self._num ** -n)
        return RationalFunc(self._num ** n, self._den ** n)

    def __eq__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den  # pylint: disable=protected-access

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.is_laurent():
            return hash(self._num)
        return hash((self._num, self._den))

    def __bool__(self):
        return not self._num.is_zero()

    def __str__(self):
        if self.is_laurent():
            return str(self._num)
        return '(%s)/(%s)' % (self._num, self._den)

    def __repr__(self):
        return 'RationalFunc(%r, %r)' % (self._num, self._den)


def _as_rational(value):
    if isinstance(value, RationalFunc):
        return value
    if isinstance(value, (int, LaurentPoly)):
        return RationalFunc(value)
    return NotImplemented


def _canonicalize(num, den):
    """ Bring a fraction of Laurent polynomials into canonical form """
    if num.is_zero():
        return LaurentPoly(), LaurentPoly(1)

    # Clear q-powers so the denominator starts at q^0
    offset = -den.min_degree()
    num, den = num.shift(offset), den.shift(offset)

    if not den.is_monomial():
        low = min(0, num.min_degree())
        top = num.shift(-low).to_sympy()
        bottom = den.to_sympy()
        common = top.gcd(bottom)
        if common.degree() > 0:
            num = LaurentPoly.from_sympy(top.exquo(common)).shift(low)
            den = LaurentPoly.from_sympy(bottom.exquo(common))

    content = gcd(num.content(), den.content())
    if den.coefficient(0) < 0:
        content = -content
    if content != 1:
        num = LaurentPoly({exp: coeff // content for exp, coeff in num.coeffs.items()})
        den = LaurentPoly({exp: coeff // content for exp, coeff in den.coeffs.items()})
    return num, den


def proj_coeff(m, n, k):
    """ The coefficient (-1)^k [m]![n]![m+n-k+1]! / ([m-k]![n-k]![m+n+1]![k]!) of the mixed clasp.

    :param int m:           Number of + strands.
    :param int n:           Number of - strands.
    :param int k:           Number of nested turnbacks.
    :rtype: RationalFunc
    """
    if k < 0 or k > min(m, n):
        raise ValueError('k=%d out of range for (m, n) = (%d, %d)' % (k, m, n))
    sign = -1 if k % 2 else 1
    return RationalFunc(sign * qfact(m) * qfact(n) * qfact(m + n - k + 1),
                        qfact(m - k) * qfact(n - k) * qfact(m + n + 1) * qfact(k))


class TruncatedSeries:
    """ A bounded-below series in q known exactly for all exponents below its truncation order """

    __slots__ = ('_coeffs', '_order')

    def __init__(self, coeffs, order):
        """
        :type coeffs: dict[int, int]
        :type order: int
        """
        self._order = int(order)
        self._coeffs = {int(exp): int(coeff) for exp, coeff in coeffs.items() if coeff and exp < self._order}

    @classmethod
    def from_laurent(cls, poly, order):
        """ Truncate a Laurent polynomial """
        return cls(_as_laurent(poly).coeffs, order)

    @classmethod
    def from_json(cls, data):
        """ Parse the map produced by to_json """
        order = data['truncation']
        return cls({int(exp): int(coeff) for exp, coeff in data.items() if exp != 'truncation'}, order)

    @property
    def order(self):
        """ Exponents below the order are exact """
        return self._order

    @property
    def coeffs(self):
        """ A copy of the stored coefficients """
        return dict(self._coeffs)

    def min_degree(self):
        """ Lowest exponent with a nonzero coefficient, None for zero """
        return min(self._coeffs) if self._coeffs else None

    def valuation(self):
        """ Lowest known nonzero exponent, or the order when nothing is known to be nonzero """
        return min(self._coeffs) if self._coeffs else self._order

    def coefficient(self, exp):
        """ Coefficient of q^exp, only defined below the order """
        if exp >= self._order:
            raise ValueError('Coefficient of q^%d is beyond the truncation order %d' % (exp, self._order))
        return self._coeffs.get(exp, 0)

    def is_zero(self):
        """ True when every known coefficient vanishes """
        return not self._coeffs

    def is_unit(self):
        """ Units among bounded-below series start with +-q^k """
        return bool(self._coeffs) and abs(self._coeffs[min(self._coeffs)]) == 1

    def truncate(self, order):
        """ Forget coefficients from the given order on """
        return TruncatedSeries(self._coeffs, min(order, self._order))

    def shift(self, n):
        """ Multiply by q^n """
        return TruncatedSeries({exp + n: coeff for exp, coeff in self._coeffs.items()}, self._order + n)

    def agreement(self, other):
        """ Highest degree through which both series are known to agree """
        order = min(self._order, other.order)
        other_coeffs = other.coeffs
        for exp in sorted(set(self._coeffs) | set(other_coeffs)):
            if exp >= order:
                break
            if self._coeffs.get(exp, 0) != other_coeffs.get(exp, 0):
                return exp - 1
        return order - 1

    def to_json(self):
        """ {"exp": coeff, ..., "truncation": order} """
        result = {str(exp): coeff for exp, coeff in sorted(self._coeffs.items())}
        result['truncation'] = self._order
        return result

    def __add__(self, other):
        other = _as_series(other, self._order)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():  # pylint: disable=protected-access
            result[exp] = result.get(exp, 0) + coeff
        return TruncatedSeries(result, min(self._order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries({exp: -coeff for exp, coeff in self._coeffs.items()}, self._order)

    def __sub__(self, other):
        other = _as_series(other, self._order)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_series(other, self._order)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            # Exact factors only move the truncation order by their lowest exponent
            poly = _as_laurent(other)
            if poly.is_zero():
                return TruncatedSeries({}, self._order)
            result = {}
            for exp, coeff in poly.items():
                for exp2, coeff2 in self._coeffs.items():
                    result[exp + exp2] = result.get(exp + exp2, 0) + coeff * coeff2
            return TruncatedSeries(result, self._order + poly.min_degree())
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self._order + other.valuation(), other.order + self.valuation())
        result = {}
        for exp1, coeff1 in self._coeffs.items():
            for exp2, coeff2 in other._coeffs.items():  # pylint: disable=protected-access
                if exp1 + exp2 < order:
                    result[exp1 + exp2] = result.get(exp1 + exp2, 0) + coeff1 * coeff2
        return TruncatedSeries(result, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError('Negative powers of truncated series are not supported')
        if n == 0:
            return TruncatedSeries({0: 1}, self._order)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = TruncatedSeries.from_laurent(other, self._order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other.order and self._coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((frozenset(self._coeffs.items()), self._order))

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        return '%s + O(q^%d)' % (LaurentPoly(self._coeffs), self._order)

    def __repr__(self):
        return 'TruncatedSeries(%r, %d)' % (dict(sorted(self._coeffs.items())), self._order)


def _as_series(value, order):
    if isinstance(value, TruncatedSeries):
        return value
    if isinstance(value, (int, LaurentPoly)):
        return TruncatedSeries.from_laurent(value, order)
    return NotImplemented


def expand(value, order):
    """ Expand a rational function around q = 0 into a series exact below the given order.

    :param RationalFunc value:  The function to expand. Its denominator must have a lowest coefficient of +-1.
    :param int order:           Truncation order of the result.
    :rtype: TruncatedSeries
    """
    if isinstance(value, (int, LaurentPoly)):
        return TruncatedSeries.from_laurent(value, order)
    num, den = value.numerator, value.denominator
    if num.is_zero():
        return TruncatedSeries({}, order)
    low = den.min_degree()
    lead = den.coefficient(low)
    if lead not in (1, -1):
        raise ValueError('Denominator %s has no inverse over Z[q^-1, q]]' % den)

    # Invert the normalized denominator as a power series up to the needed length
    num = num.shift(-low)
    den = den.shift(-low)
    length = order - num.min_degree()
    inverse = []
    for k in range(max(length, 0)):
        total = 1 if k == 0 else 0
        for j in range(1, min(k, den.max_degree()) + 1):
            total -= den.coefficient(j) * inverse[k - j]
        inverse.append(total * lead)

    result = {}
    for exp, coeff in num.items():
        for k, inv in enumerate(inverse):
            if exp + k >= order:
                break
            if inv:
                result[exp + k] = result.get(exp + k, 0) + coeff * inv
    _LOGGER.debug('Expanded %s below q^%d', value, order)
    return TruncatedSeries(result, order)


class LaurentRing:
    """ Coefficients in Z[q, q^-1] """

    name = 'laurent'

    def __init__(self):
        self.zero = LaurentPoly()
        self.one = LaurentPoly(1)

    def coerce(self, value):
        """ Bring a value into the ring """
        if isinstance(value, RationalFunc):
            return value.to_laurent()
        if isinstance(value, (int, LaurentPoly)):
            return _as_laurent(value)
        raise TypeError('Can not coerce %r into %s' % (value, self.name))

    @staticmethod
    def to_json(value):
        """ Serialize an element """
        return value.to_json()

    def __eq__(self, other):
        return isinstance(other, LaurentRing)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'LaurentRing()'


class RationalRing:
    """ Coefficients in Q(q) """

    name = 'rational'

    def __init__(self):
        self.zero = RationalFunc(0)
        self.one = RationalFunc(1)

    def coerce(self, value):
        """ Bring a value into the ring """
        if isinstance(value, RationalFunc):
            return value
        if isinstance(value, (int, LaurentPoly)):
            return RationalFunc(value)
        raise TypeError('Can not coerce %r into %s' % (value, self.name))

    @staticmethod
    def to_json(value):
        """ Serialize an element """
        return value.to_json()

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'RationalRing()'


class SeriesRing:
    """ Coefficients in Z[q^-1, q]] truncated at a fixed order """

    name = 'series'

    def __init__(self, order):
        """
        :type order: int
        """
        self.order = order
        self.zero = TruncatedSeries({}, order)
        self.one = TruncatedSeries({0: 1}, order)

    def coerce(self, value):
        """ Bring a value into the ring, expanding rational functions """
        if isinstance(value, TruncatedSeries):
            return value.truncate(self.order)
        if isinstance(value, RationalFunc):
            return expand(value, self.order)
        if isinstance(value, (int, LaurentPoly)):
            return TruncatedSeries.from_laurent(value, self.order)
        raise TypeError('Can not coerce %r into %s' % (value, self.name))

    @staticmethod
    def to_json(value):
        """ Serialize an element """
        return value.to_json()

    def __eq__(self, other):
        return isinstance(other, SeriesRing) and other.order == self.order

    def __hash__(self):
        return hash((self.name, self.order))

    def __repr__(self):
        return 'SeriesRing(%d)' % self.order


LAURENT = LaurentRing()
RATIONAL = RationalRing()
