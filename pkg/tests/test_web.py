# -*- coding: utf-8 -*-
""" Tests for webs and sums of webs """

# pylint: disable=missing-docstring,no-self-use

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import unittest

import mock
import numpy as np

from resources.lib.spider import web as webs
from resources.lib.spider import websum
from resources.lib.spider.exceptions import InvalidArgumentException, InvalidWebException, InvalidWordException, WordMismatchException
from resources.lib.spider.qring import LAURENT, RATIONAL, LaurentPoly, RationalFunc, SeriesRing, TruncatedSeries, qint
from resources.lib.spider.web import EMPTY_KEY, MINUS, PLUS, STRATEGY_LEFTMOST, STRATEGY_SMALLEST, Web, Word, weight_lower
from resources.lib.spider.websum import WebSum

_LOGGER = logging.getLogger(__name__)


def circle():
    return webs.compose(webs.cup(PLUS), webs.cap(PLUS))


def theta():
    """ The closure of a digon on a single strand """
    digon = webs.compose(webs.ysplit(PLUS), webs.ymerge(MINUS))
    body = webs.padded(digon, Word(), Word('-'))
    return webs.compose(webs.compose(webs.cup(PLUS), body), webs.cap(PLUS))


def random_web(rng, word=None, max_vertices=12, steps=10):
    """ A random composite of padded turnbacks, vertices and H-webs, starting from a word """
    if word is None:
        word = Word(int(rng.choice([PLUS, MINUS])) for _ in range(int(rng.randint(1, 5))))
    web = webs.identity(word)
    for _ in range(int(rng.randint(2, steps + 1))):
        word = web.codomain
        i = int(rng.randint(0, len(word) + 1))
        choices = ['cup']
        if i < len(word):
            choices.append('ysplit')
        if i + 1 < len(word):
            choices.append('hweb')
            choices.append('ymerge' if word[i] == word[i + 1] else 'cap')
        kind = choices[int(rng.randint(len(choices)))]
        if kind == 'cup':
            piece, width = webs.cup(int(rng.choice([PLUS, MINUS]))), 0
        elif kind == 'ysplit':
            piece, width = webs.ysplit(word[i]), 1
        elif kind == 'ymerge':
            piece, width = webs.ymerge(word[i]), 2
        elif kind == 'cap':
            piece, width = webs.cap(word[i]), 2
        else:
            piece, width = webs.hweb(word[i], word[i + 1]), 2
        if web.num_vertices + piece.num_vertices > max_vertices:
            continue
        web = webs.compose(web, webs.padded(piece, word[:i], word[i + width:]))
    return web


def random_reducible_webs(rng, count, max_vertices=12):
    """ Random webs with at least one circle, digon or square """
    result = []
    while len(result) < count:
        web = random_web(rng, max_vertices=max_vertices)
        if not web.is_non_elliptic():
            result.append(web)
    return result


def coefficients(result):
    return {key: coeff for key, (_, coeff) in result.items()}


class TestWord(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(Word('+-'), Word((PLUS, MINUS)))
        self.assertEqual(str(Word('++-')), '++-')
        self.assertEqual(Word(''), Word())
        with self.assertRaises(InvalidWordException):
            Word('+x')
        with self.assertRaises(InvalidWordException):
            Word((1, 0))

    def test_dual(self):
        self.assertEqual(Word('++-').dual(), Word('+--'))
        self.assertEqual(Word('+-').dual(), Word('+-'))

    def test_weight(self):
        self.assertEqual(Word('+-+').weight(), (2, 1))
        self.assertTrue(Word('++-').is_segregated())
        self.assertFalse(Word('-+').is_segregated())
        self.assertEqual(Word('-+-+').segregated(), Word('++--'))

    def test_slices(self):
        word = Word('+-+')
        self.assertIsInstance(word[1:], Word)
        self.assertEqual(word[0], PLUS)
        self.assertEqual(word[:1] + word[2:], Word('++'))

    def test_weight_lower(self):
        self.assertTrue(weight_lower(Word(), Word('+-')))
        self.assertTrue(weight_lower(Word('+'), Word('--')))
        self.assertFalse(weight_lower(Word('--'), Word('+')))
        self.assertFalse(weight_lower(Word('+-'), Word('+-')))
        self.assertFalse(weight_lower(Word('+'), Word('++')))


class TestWeb(unittest.TestCase):

    def test_identity(self):
        web = webs.identity(Word('+-'))
        self.assertEqual(web.domain, Word('+-'))
        self.assertEqual(web.codomain, Word('+-'))
        self.assertEqual(web.num_vertices, 0)
        self.assertTrue(web.is_non_elliptic())

    def test_empty(self):
        self.assertEqual(webs.empty().key(), EMPTY_KEY)

    def test_validate_orientation(self):
        Web('+', '+', (), (1, 0))
        with self.assertRaises(InvalidWebException):
            Web('+', '-', (), (1, 0))

    def test_validate_pairing(self):
        with self.assertRaises(InvalidWebException):
            Web('+', '+', (), (0, 0))
        with self.assertRaises(InvalidWebException):
            Web('+', '+', (), (1,))

    def test_key_round_trip(self):
        for web in (webs.hweb(PLUS, MINUS), webs.hweb(PLUS, PLUS), theta()):
            rebuilt = Web.from_key(web.key())
            self.assertEqual(rebuilt, web)
            self.assertEqual(rebuilt.key(), web.key())

    def test_key_malformed(self):
        with self.assertRaises(InvalidWebException):
            Web.from_key('nonsense')

    def test_key_isotopy(self):
        # A turnback followed by its opposite turnback is isotopic to a straight strand
        zigzag = webs.compose(webs.tensor(webs.cup(PLUS), webs.identity(Word('+'))),
                              webs.tensor(webs.identity(Word('+')), webs.cap(MINUS)))
        self.assertEqual(zigzag.key(), webs.identity(Word('+')).key())

    def test_compose_mismatch(self):
        with self.assertRaises(WordMismatchException):
            webs.compose(webs.cup(PLUS), webs.cap(MINUS))

    def test_tensor(self):
        self.assertEqual(webs.tensor(webs.identity(Word('+')), webs.identity(Word('-'))), webs.identity(Word('+-')))

    def test_dual(self):
        self.assertEqual(webs.dual(webs.cup(PLUS)), webs.cap(PLUS))
        web = webs.hweb(PLUS, MINUS)
        self.assertEqual(webs.dual(webs.dual(web)), web)

    def test_hweb(self):
        web = webs.hweb(PLUS, MINUS)
        self.assertEqual(web.domain, Word('+-'))
        self.assertEqual(web.codomain, Word('-+'))
        self.assertEqual(web.num_vertices, 2)
        self.assertTrue(web.is_non_elliptic())
        self.assertEqual(webs.hweb(PLUS, PLUS).codomain, Word('++'))

    def test_faces(self):
        self.assertEqual([size for size, _ in circle().faces()], [0])
        digon = webs.compose(webs.ysplit(PLUS), webs.ymerge(MINUS))
        self.assertEqual([size for size, _ in digon.faces()], [2])
        self.assertFalse(digon.is_non_elliptic())


class TestReduce(unittest.TestCase):

    def test_circle(self):
        result = webs.reduce_web(circle())
        self.assertEqual(list(result), [EMPTY_KEY])
        self.assertEqual(result[EMPTY_KEY][1], qint(3))

    def test_two_circles(self):
        result = webs.reduce_web(webs.tensor(circle(), circle()))
        self.assertEqual(result[EMPTY_KEY][1], qint(3) * qint(3))

    def test_digon(self):
        for sign in (PLUS, MINUS):
            digon = webs.compose(webs.ysplit(sign), webs.ymerge(-sign))
            result = webs.reduce_web(digon)
            strand = webs.identity(Word((sign,)))
            self.assertEqual(list(result), [strand.key()])
            self.assertEqual(result[strand.key()][1], qint(2))

    def test_square(self):
        for first in (PLUS, MINUS):
            square = webs.compose(webs.hweb(first, -first), webs.hweb(-first, first))
            result = webs.reduce_web(square)
            word = Word((first, -first))
            expected = {webs.identity(word).key(), webs.compose(webs.cap(first), webs.cup(first)).key()}
            self.assertEqual(set(result), expected)
            self.assertTrue(all(coeff == LaurentPoly(1) for _, coeff in result.values()))

    def test_theta(self):
        result = webs.reduce_web(theta())
        self.assertEqual(result[EMPTY_KEY][1], qint(2) * qint(3))

    def test_strategies_agree(self):
        web = webs.compose(webs.compose(webs.hweb(PLUS, MINUS), webs.hweb(MINUS, PLUS)), webs.hweb(PLUS, MINUS))
        first = webs.reduce_web(web)
        second = webs.reduce_web(web, STRATEGY_LEFTMOST)
        self.assertEqual({key: coeff for key, (_, coeff) in first.items()},
                         {key: coeff for key, (_, coeff) in second.items()})

    def test_unknown_strategy(self):
        with self.assertRaises(InvalidArgumentException):
            webs.reduce_web(circle(), 'largest')

    def test_normal_forms_are_fixed(self):
        web = webs.hweb(PLUS, MINUS)
        result = webs.reduce_web(web)
        self.assertEqual(list(result), [web.key()])
        self.assertEqual(result[web.key()][1], LaurentPoly(1))


class TestWebSum(unittest.TestCase):

    def test_hweb_square(self):
        hweb = WebSum.from_web(webs.hweb(PLUS, PLUS))
        self.assertEqual(hweb.compose(hweb), hweb.scale(qint(2)))

    def test_linear(self):
        hweb = WebSum.from_web(webs.hweb(PLUS, PLUS))
        identity = WebSum.identity(Word('++'))
        total = identity + hweb
        self.assertEqual(total - hweb, identity)
        self.assertTrue((hweb - hweb).is_zero())
        self.assertEqual(-(-total), total)
        self.assertEqual(total.coefficient(webs.hweb(PLUS, PLUS)), LaurentPoly(1))
        self.assertEqual(total.coefficient(webs.identity(Word('+-'))), LaurentPoly())

    def test_mismatch(self):
        with self.assertRaises(WordMismatchException):
            _ = WebSum.identity(Word('++')) + WebSum.identity(Word('+-'))
        with self.assertRaises(WordMismatchException):
            WebSum.identity(Word('++')).compose(WebSum.identity(Word('+')))

    def test_tensor(self):
        result = WebSum.identity(Word('+')).tensor(WebSum.identity(Word('-')))
        self.assertEqual(result, WebSum.identity(Word('+-')))

    def test_dual(self):
        result = WebSum.from_web(webs.cup(PLUS)).dual()
        self.assertEqual(result, WebSum.from_web(webs.cap(PLUS)))

    def test_evaluate_closed(self):
        self.assertEqual(WebSum.from_web(theta()).evaluate_closed(), qint(2) * qint(3))
        with self.assertRaises(WordMismatchException):
            WebSum.identity(Word('+')).evaluate_closed()

    def test_coerce_and_agreement(self):
        hweb = WebSum.from_web(webs.hweb(PLUS, PLUS), RATIONAL, RationalFunc(1, qint(2)))
        first = hweb.coerce(SeriesRing(9))
        self.assertEqual(first.coefficient(webs.hweb(PLUS, PLUS)), TruncatedSeries({1: 1, 3: -1, 5: 1, 7: -1}, 9))
        self.assertEqual(first.agreement(first), 8)
        second = WebSum.from_web(webs.hweb(PLUS, PLUS), SeriesRing(9), TruncatedSeries({1: 1, 3: -1}, 9))
        self.assertEqual(first.agreement(second), 4)
        with self.assertRaises(TypeError):
            hweb.agreement(hweb)

    def test_to_json(self):
        total = WebSum.identity(Word('+-')) + WebSum.from_web(webs.compose(webs.cap(PLUS), webs.cup(PLUS)))
        data = total.to_json()
        self.assertEqual([item['web'] for item in data], sorted(item['web'] for item in data))
        self.assertTrue(all(item['coefficient'] == {'0': 1} for item in data))


class TestWebAlgebra(unittest.TestCase):

    def test_confluence(self):
        rng = np.random.RandomState(1729)
        for web in random_reducible_webs(rng, 200):
            self.assertEqual(coefficients(webs.reduce_web(web, STRATEGY_SMALLEST)),
                             coefficients(webs.reduce_web(web, STRATEGY_LEFTMOST)), msg=web.key())

    def test_dual_reverses_composition(self):
        rng = np.random.RandomState(3)
        for _ in range(50):
            first = random_web(rng)
            second = random_web(rng, first.codomain)
            self.assertEqual(webs.dual(webs.compose(first, second)).key(),
                             webs.compose(webs.dual(second), webs.dual(first)).key())
            self.assertEqual(webs.dual(webs.dual(first)).key(), first.key())

    def test_associative(self):
        rng = np.random.RandomState(4)
        for _ in range(50):
            first = random_web(rng, max_vertices=6)
            second = random_web(rng, first.codomain, max_vertices=6)
            third = random_web(rng, second.codomain, max_vertices=6)
            self.assertEqual(webs.compose(webs.compose(first, second), third).key(),
                             webs.compose(first, webs.compose(second, third)).key())

    def test_identity_is_a_unit(self):
        rng = np.random.RandomState(5)
        for _ in range(50):
            web = random_web(rng)
            self.assertEqual(webs.compose(webs.identity(web.domain), web).key(), web.key())
            self.assertEqual(webs.compose(web, webs.identity(web.codomain)).key(), web.key())

    def test_normal_forms_are_idempotent(self):
        rng = np.random.RandomState(6)
        for web in random_reducible_webs(rng, 30):
            for key, (term, _) in webs.reduce_web(web).items():
                self.assertTrue(term.is_non_elliptic())
                self.assertEqual(coefficients(webs.reduce_web(term, STRATEGY_LEFTMOST)), {key: LaurentPoly(1)})
            total = websum.reduce(web)
            self.assertEqual(total.reduce(STRATEGY_LEFTMOST), total)

    def test_compose_is_reduced_composition(self):
        rng = np.random.RandomState(7)
        scalar = LaurentPoly({-1: 2, 3: -1})
        for _ in range(30):
            first = random_web(rng, max_vertices=6)
            second = random_web(rng, first.codomain, max_vertices=6)
            expected = websum.reduce(webs.compose(first, second))
            for strategy in (STRATEGY_SMALLEST, STRATEGY_LEFTMOST):
                self.assertEqual(websum.reduce(first).compose(websum.reduce(second), strategy), expected)
            self.assertEqual(websum.reduce(first).scale(scalar).compose(websum.reduce(second)), expected.scale(scalar))

    def test_tensor_is_reduced_stacking(self):
        rng = np.random.RandomState(8)
        for _ in range(20):
            top, bottom = random_web(rng, max_vertices=6), random_web(rng, max_vertices=6)
            result = websum.reduce(top).tensor(websum.reduce(bottom), STRATEGY_LEFTMOST)
            self.assertEqual(result, websum.reduce(webs.tensor(top, bottom)))

    def test_tensor_uses_strategy(self):
        with mock.patch.object(webs, 'reduce_web', wraps=webs.reduce_web) as reduce_web:
            WebSum.from_web(theta()).tensor(WebSum.identity(Word('-'), LAURENT), STRATEGY_LEFTMOST)
        reduce_web.assert_called_with(mock.ANY, STRATEGY_LEFTMOST)


class TestCaches(unittest.TestCase):

    def tearDown(self):
        webs.clear_caches()

    def test_clear_keeps_normal_forms(self):
        web = webs.hweb(PLUS, MINUS)
        webs.reduce_web(theta())
        self.assertGreater(webs.cache_size(), 0)
        webs.clear_caches(keep=[web])
        self.assertEqual(webs.cache_size(), 1)
        self.assertEqual(coefficients(webs.reduce_web(web)), {web.key(): LaurentPoly(1)})
        webs.clear_caches()
        self.assertEqual(webs.cache_size(), 0)


if __name__ == '__main__':
    unittest.main()
