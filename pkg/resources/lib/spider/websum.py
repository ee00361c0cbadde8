# -*- coding: utf-8 -*-
""" Formal linear combinations of non-elliptic webs """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib.spider import web as webs
from resources.lib.spider.exceptions import WordMismatchException
from resources.lib.spider.qring import LAURENT, SeriesRing
from resources.lib.spider.web import EMPTY_KEY, STRATEGY_SMALLEST, Word

_LOGGER = logging.getLogger(__name__)


def reduce(web, ring=LAURENT, strategy=STRATEGY_SMALLEST):  # pylint: disable=redefined-builtin
    """ Reduce a single web to a WebSum over the given ring.

    :type web: resources.lib.spider.web.Web
    :rtype: WebSum
    """
    return WebSum.from_webs(ring, web.domain, web.codomain, [(web, ring.one)], strategy=strategy)


class WebSum:
    """ A linear combination of non-elliptic webs in Hom(domain, codomain) """

    def __init__(self, ring, domain, codomain, terms=None):
        """ Wrap already reduced terms.

        :type ring: LaurentRing | RationalRing | SeriesRing
        :type domain: Word
        :type codomain: Word
        :type terms: dict[str, tuple[resources.lib.spider.web.Web, object]]
        """
        self.ring = ring
        self.domain = Word(domain)
        self.codomain = Word(codomain)
        self.terms = {}
        for key, (web, coeff) in (terms or {}).items():
            coeff = ring.coerce(coeff)
            if not coeff.is_zero():
                self.terms[key] = (web, coeff)

    @classmethod
    def from_webs(cls, ring, domain, codomain, pairs, strategy=STRATEGY_SMALLEST):
        """ Reduce and collect (web, coefficient) pairs """
        terms = {}
        for web, coeff in pairs:
            if web.domain != Word(domain):
                raise WordMismatchException(Word(domain), web.domain)
            if web.codomain != Word(codomain):
                raise WordMismatchException(Word(codomain), web.codomain)
            coeff = ring.coerce(coeff)
            for key, (term, term_coeff) in webs.reduce_web(web, strategy).items():
                _add_term(terms, key, term, ring.coerce(coeff * term_coeff))
        return cls(ring, domain, codomain, terms)

    @classmethod
    def from_web(cls, web, ring=LAURENT, coeff=None):
        """ A single web with a coefficient, reduced """
        return cls.from_webs(ring, web.domain, web.codomain, [(web, ring.one if coeff is None else coeff)])

    @classmethod
    def identity(cls, word, ring=LAURENT):
        """ The identity web with coefficient one """
        word = Word(word)
        return cls.from_web(webs.identity(word), ring)

    @classmethod
    def zero(cls, ring, domain, codomain):
        """ The empty sum """
        return cls(ring, domain, codomain)

    def items(self):
        """ (web, coefficient) pairs sorted by canonical encoding """
        return [self.terms[key] for key in sorted(self.terms)]

    def keys(self):
        """ Sorted canonical encodings of the support """
        return sorted(self.terms)

    def coefficient(self, web):
        """ Coefficient of a web (or an encoding) in this sum """
        key = web if isinstance(web, str) else web.key()
        if key in self.terms:
            return self.terms[key][1]
        return self.ring.zero

    def is_zero(self):
        """ True for the empty sum """
        return not self.terms

    def _check_same(self, other):
        if self.domain != other.domain:
            raise WordMismatchException(self.domain, other.domain)
        if self.codomain != other.codomain:
            raise WordMismatchException(self.codomain, other.codomain)

    def __add__(self, other):
        self._check_same(other)
        terms = dict(self.terms)
        for key, (web, coeff) in other.terms.items():
            _add_term(terms, key, web, self.ring.coerce(coeff))
        return WebSum(self.ring, self.domain, self.codomain, terms)

    def __neg__(self):
        return self.scale(-self.ring.one)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        """ Multiply every coefficient by a scalar """
        scalar = self.ring.coerce(scalar)
        return WebSum(self.ring, self.domain, self.codomain,
                      {key: (web, coeff * scalar) for key, (web, coeff) in self.terms.items()})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def compose(self, other, strategy=STRATEGY_SMALLEST):
        """ Bilinear diagrammatic composition self . other, reduced

        :type other: WebSum
        :rtype: WebSum
        """
        if self.codomain != other.domain:
            raise WordMismatchException(self.codomain, other.domain)
        terms = {}
        for web_a, coeff_a in self.terms.values():
            for web_b, coeff_b in other.terms.values():
                coeff = coeff_a * self.ring.coerce(coeff_b)
                for key, (term, term_coeff) in webs.reduce_web(webs.compose(web_a, web_b), strategy).items():
                    _add_term(terms, key, term, self.ring.coerce(coeff * term_coeff))
        return WebSum(self.ring, self.domain, other.codomain, terms)

    def tensor(self, other, strategy=STRATEGY_SMALLEST):
        """ Bilinear stacking, self on top, reduced

        :type other: WebSum
        :rtype: WebSum
        """
        terms = {}
        for web_a, coeff_a in self.terms.values():
            for web_b, coeff_b in other.terms.values():
                coeff = coeff_a * self.ring.coerce(coeff_b)
                for key, (term, term_coeff) in webs.reduce_web(webs.tensor(web_a, web_b), strategy).items():
                    _add_term(terms, key, term, self.ring.coerce(coeff * term_coeff))
        return WebSum(self.ring, self.domain + other.domain, self.codomain + other.codomain, terms)

    def dual(self):
        """ Rotate every web by 180 degrees """
        terms = {}
        for web, coeff in self.terms.values():
            rotated = webs.dual(web)
            terms[rotated.key()] = (rotated, coeff)
        return WebSum(self.ring, self.codomain.dual(), self.domain.dual(), terms)

    def reduce(self, strategy=STRATEGY_SMALLEST):
        """ Reduce every term again, which leaves an already reduced sum unchanged """
        return WebSum.from_webs(self.ring, self.domain, self.codomain, self.items(), strategy=strategy)

    def coerce(self, ring):
        """ Move all coefficients into another ring """
        return WebSum(ring, self.domain, self.codomain,
                      {key: (web, ring.coerce(coeff)) for key, (web, coeff) in self.terms.items()})

    def map_coefficients(self, function):
        """ Apply a function to every coefficient """
        return WebSum(self.ring, self.domain, self.codomain,
                      {key: (web, function(coeff)) for key, (web, coeff) in self.terms.items()})

    def evaluate_closed(self):
        """ The coefficient of the empty web of a sum with empty boundary """
        if self.domain or self.codomain:
            raise WordMismatchException(Word(), self.domain + self.codomain)
        return self.coefficient(EMPTY_KEY)

    def agreement(self, other):
        """ Highest degree through which two series-valued sums agree on the union of their supports """
        if not isinstance(self.ring, SeriesRing) or not isinstance(other.ring, SeriesRing):
            raise TypeError('Agreement is only defined for series coefficients')
        self._check_same(other)
        result = min(self.ring.order, other.ring.order) - 1
        for key in set(self.terms) | set(other.terms):
            result = min(result, self.coefficient(key).agreement(other.coefficient(key)))
        return result

    def to_json(self):
        """ A list of {"web": encoding, "coefficient": ...} sorted by encoding """
        return [{'web': key, 'coefficient': self.ring.to_json(self.terms[key][1])} for key in sorted(self.terms)]

    def __eq__(self, other):
        if not isinstance(other, WebSum):
            return NotImplemented
        if self.domain != other.domain or self.codomain != other.codomain or set(self.terms) != set(other.terms):
            return False
        return all(coeff == other.terms[key][1] for key, (_, coeff) in self.terms.items())

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join('(%s)*[%s]' % (coeff, key) for key, (_, coeff) in sorted(self.terms.items()))

    def __repr__(self):
        return "%r" % self.__dict__


def _add_term(terms, key, web, coeff):
    if key in terms:
        coeff = terms[key][1] + coeff
    if coeff.is_zero():
        terms.pop(key, None)
    else:
        terms[key] = (web, coeff)
