# -*- coding: utf-8 -*-
""" Tests for tangle diagrams and their evaluation """

# pylint: disable=missing-docstring,no-self-use

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import unittest

from resources.lib.spider import projector, util
from resources.lib.spider import web as webs
from resources.lib.spider.exceptions import BudgetExceededException, InvalidArgumentException, InvalidWordException, ParseException, SliceException
from resources.lib.spider.qring import LaurentPoly, RationalFunc, qint
from resources.lib.spider.tangle import (Evaluator, TangleDiagram, cable, colored_invariant, components, crossing_counts, evaluate, format_diagram,
                                         insertion_points, mirror, parse, validate, writhe, writhe_correction_check)
from resources.lib.spider.web import PLUS, Word
from resources.lib.spider.websum import WebSum
from tests import data_path

_LOGGER = logging.getLogger(__name__)

Q3 = qint(3)

LEFT_TREFOIL = LaurentPoly({-2: 1, -4: 1, -6: 2, -8: 1, -12: -1, -14: -1})


def closure(braid, strands=2, sign='+'):
    """ Closure of a braid word on co-oriented strands """
    cups = ['cup%s %d' % (sign, i) for i in range(1, strands + 1)]
    caps = ['cap %d' % i for i in range(strands, 0, -1)]
    return TangleDiagram.build('', *(cups + list(braid) + caps))


class TestParse(unittest.TestCase):

    def test_round_trip(self):
        text = 'word: +-\ncup+ 2\nx+ 1\nid\nysplit 3\ncap 1\n'
        diagram = parse(text)
        self.assertEqual(format_diagram(diagram), text)
        self.assertEqual(parse(format_diagram(diagram)), diagram)

    def test_format_short_words(self):
        self.assertEqual(format_diagram(TangleDiagram.build('+', 'id')), 'word: +\nid\n')
        self.assertEqual(format_diagram(TangleDiagram.build('++', 'x+ 1')), 'word: ++\nx+ 1\n')
        diagram = TangleDiagram.build('-+-', 'cap 2', 'ysplit 1')
        self.assertEqual(parse(format_diagram(diagram)), diagram)

    def test_comments(self):
        diagram = util.load_diagram(data_path('unknot.tangle'))
        self.assertEqual(diagram, TangleDiagram.build('', 'cup+ 1', 'cap 1'))

    def test_missing_header(self):
        with self.assertRaises(ParseException) as context:
            parse('cup+ 1\n')
        self.assertEqual(context.exception.line, 1)

    def test_unknown_slice(self):
        with self.assertRaises(ParseException) as context:
            parse('word: ++\n\nswap 1\n')
        self.assertEqual(context.exception.line, 3)

    def test_bad_position(self):
        with self.assertRaises(ParseException):
            parse('word: ++\nx+ a\n')
        with self.assertRaises(ParseException):
            parse('word: ++\nx+ 0\n')
        with self.assertRaises(ParseException):
            parse('word: ++\nid 1\n')

    def test_bad_word(self):
        with self.assertRaises(ParseException):
            parse('word: +x\n')

    def test_missing_file(self):
        with self.assertRaises(ParseException):
            util.load_diagram(data_path('missing.tangle'))


class TestValidate(unittest.TestCase):

    def test_codomain(self):
        self.assertEqual(validate(TangleDiagram.build('+', 'cup+ 2', 'ymerge 1')), Word('--'))
        self.assertEqual(validate(TangleDiagram.build('+-', 'x+ 1')), Word('-+'))
        self.assertEqual(validate(TangleDiagram.build('-', 'ysplit 1')), Word('++'))

    def test_bad_cap(self):
        with self.assertRaises(SliceException) as context:
            validate(util.load_diagram(data_path('bad_slice.tangle')))
        self.assertEqual(context.exception.index, 2)
        self.assertEqual(context.exception.reason, 'cap needs opposite orientations, got ++')

    def test_bad_position(self):
        with self.assertRaises(SliceException):
            validate(TangleDiagram.build('++', 'x+ 2'))
        with self.assertRaises(SliceException) as context:
            validate(TangleDiagram.build('+-', 'ymerge 1'))
        self.assertEqual(str(context.exception), 'Slice 1: ymerge needs equal orientations, got +-')
        with self.assertRaises(SliceException):
            validate(TangleDiagram.build('+', 'cup+ 3'))


class TestCounts(unittest.TestCase):

    def test_crossing_counts(self):
        self.assertEqual(crossing_counts(util.load_diagram(data_path('hopf.tangle'))), (2, 0))
        self.assertEqual(crossing_counts(util.load_diagram(data_path('trefoil_left.tangle'))), (0, 3))
        # x+ between oppositely oriented strands is a negative crossing
        self.assertEqual(crossing_counts(TangleDiagram.build('+-', 'x+ 1', 'x+ 1')), (0, 2))

    def test_writhe(self):
        self.assertEqual(writhe(util.load_diagram(data_path('hopf.tangle'))), 2)
        self.assertEqual(writhe(util.load_diagram(data_path('trefoil_left.tangle'))), -3)

    def test_mirror(self):
        left = util.load_diagram(data_path('trefoil_left.tangle'))
        self.assertEqual(mirror(left), util.load_diagram(data_path('trefoil_right.tangle')))
        self.assertEqual(mirror(mirror(left)), left)

    def test_components(self):
        self.assertEqual(components(util.load_diagram(data_path('hopf.tangle')))[0], 2)
        self.assertEqual(components(util.load_diagram(data_path('trefoil_left.tangle')))[0], 1)
        self.assertEqual(components(util.load_diagram(data_path('two_unknots.tangle')))[0], 2)
        count, layout = components(TangleDiagram.build('+-', 'x+ 1'))
        self.assertEqual(count, 2)
        self.assertEqual(layout, [[0, 1], [1, 0]])

    def test_insertion_points(self):
        self.assertEqual(insertion_points(util.load_diagram(data_path('hopf.tangle'))), {0: 1, 1: 2})
        self.assertEqual(insertion_points(TangleDiagram.build('++', 'x+ 1')), {0: 0, 1: 0})


class TestEvaluate(unittest.TestCase):

    def test_unknot(self):
        result = evaluate(util.load_diagram(data_path('unknot.tangle')))
        self.assertEqual(result.evaluate_closed(), Q3)

    def test_two_unknots(self):
        result = evaluate(util.load_diagram(data_path('two_unknots.tangle')))
        self.assertEqual(result.evaluate_closed(), Q3 * Q3)

    def test_crossing(self):
        result = evaluate(TangleDiagram.build('++', 'x+ 1'))
        expected = WebSum.identity(Word('++')).scale(LaurentPoly.monomial(2)) \
            - WebSum.from_web(webs.hweb(PLUS, PLUS)).scale(LaurentPoly.monomial(3))
        self.assertEqual(result, expected)

    def test_braid_closures(self):
        # The closure of the n-th power of a positive generator is q^2n ([3]^2 + ((-q^2)^n - 1) [3])
        for n in range(1, 4):
            value = evaluate(closure(['x+ 1'] * n)).evaluate_closed()
            expected = LaurentPoly.monomial(2 * n) * (Q3 * Q3 + (LaurentPoly.monomial(2 * n, (-1) ** n) - 1) * Q3)
            self.assertEqual(value, expected)

    def test_hopf(self):
        value = evaluate(util.load_diagram(data_path('hopf.tangle'))).evaluate_closed()
        self.assertEqual(value, LaurentPoly.monomial(4) * (Q3 * Q3 + (LaurentPoly.monomial(4) - 1) * Q3))

    def test_trefoils(self):
        left = evaluate(util.load_diagram(data_path('trefoil_left.tangle'))).evaluate_closed()
        right = evaluate(util.load_diagram(data_path('trefoil_right.tangle'))).evaluate_closed()
        self.assertEqual(left, LEFT_TREFOIL)
        self.assertEqual(right, LEFT_TREFOIL.bar())

    def test_mirror_conjugates(self):
        diagram = TangleDiagram.build('+-', 'x+ 1', 'x- 1', 'x+ 1')
        self.assertEqual(evaluate(mirror(diagram)), evaluate(diagram).map_coefficients(lambda coeff: coeff.bar()))

    def test_budget(self):
        diagram = util.load_diagram(data_path('trefoil_left.tangle'))
        with self.assertRaises(BudgetExceededException) as context:
            evaluate(diagram, budget=4)
        self.assertEqual(context.exception.branches, 8)
        self.assertEqual(evaluate(diagram, budget=4, force=True).evaluate_closed(), LEFT_TREFOIL)

    def test_evaluator_counts_branches(self):
        evaluator = Evaluator()
        evaluate(util.load_diagram(data_path('hopf.tangle')), evaluator=evaluator)
        self.assertEqual(evaluator.resolved, 4)

    def test_caches_hold_only_the_result(self):
        result = evaluate(TangleDiagram.build('+++', 'x+ 1', 'x+ 2', 'x- 1'))
        self.assertGreater(len(result.terms), 1)
        self.assertEqual(webs.cache_size(), len(result.terms))
        evaluate(util.load_diagram(data_path('trefoil_left.tangle')))
        self.assertEqual(webs.cache_size(), 1)



class TestReidemeister(unittest.TestCase):

    PAIRS = [
        # Second move on all orientations
        (TangleDiagram.build('++', 'x+ 1', 'x- 1'), TangleDiagram.build('++')),
        (TangleDiagram.build('++', 'x- 1', 'x+ 1'), TangleDiagram.build('++')),
        (TangleDiagram.build('+-', 'x+ 1', 'x- 1'), TangleDiagram.build('+-')),
        (TangleDiagram.build('-+', 'x+ 1', 'x- 1'), TangleDiagram.build('-+')),
        (TangleDiagram.build('--', 'x- 1', 'x+ 1'), TangleDiagram.build('--')),
        # Third move
        (TangleDiagram.build('+++', 'x+ 1', 'x+ 2', 'x+ 1'), TangleDiagram.build('+++', 'x+ 2', 'x+ 1', 'x+ 2')),
        (TangleDiagram.build('++-', 'x+ 1', 'x+ 2', 'x+ 1'), TangleDiagram.build('++-', 'x+ 2', 'x+ 1', 'x+ 2')),
        (TangleDiagram.build('+-+', 'x- 1', 'x- 2', 'x- 1'), TangleDiagram.build('+-+', 'x- 2', 'x- 1', 'x- 2')),
        # First move, both kinks
        (TangleDiagram.build('+', 'cup+ 2', 'x+ 1', 'cap 2'), TangleDiagram.build('+')),
        (TangleDiagram.build('+', 'cup+ 2', 'x- 1', 'cap 2'), TangleDiagram.build('+')),
        # Three presentations of the trefoil
        (closure(['x- 1'] * 3), closure(['x- 1', 'x- 2', 'x- 1', 'x- 2'], strands=3)),
        (closure(['x- 1'] * 3), closure(['x- 1', 'x- 1', 'x- 1', 'x- 2'], strands=3)),
    ]

    def test_pairs(self):
        for index, (first, second) in enumerate(self.PAIRS):
            with self.subTest(pair=index):
                self.assertEqual(evaluate(first), evaluate(second))

    def test_writhe_correction(self):
        self.assertTrue(writhe_correction_check(TangleDiagram.build('+++', 'ymerge 1', 'x- 1'),
                                                TangleDiagram.build('+++', 'x- 2', 'x- 1', 'ymerge 2')))
        self.assertTrue(writhe_correction_check(TangleDiagram.build('+++', 'x+ 2', 'x+ 1', 'ymerge 2'),
                                                TangleDiagram.build('+++', 'ymerge 1', 'x+ 1')))
        self.assertFalse(writhe_correction_check(TangleDiagram.build('+++', 'ymerge 1', 'x- 1'),
                                                 TangleDiagram.build('+++', 'ymerge 1', 'x- 1')))


class TestColored(unittest.TestCase):

    def test_cable(self):
        unknot = util.load_diagram(data_path('unknot.tangle'))
        self.assertEqual(cable(unknot, ['+-']), TangleDiagram.build('', 'cup+ 1', 'cup- 2', 'cap 2', 'cap 1'))

    def test_unknot(self):
        unknot = util.load_diagram(data_path('unknot.tangle'))
        self.assertEqual(colored_invariant(unknot, ['+']).evaluate_closed(), RationalFunc(Q3))
        self.assertEqual(colored_invariant(unknot, ['+-']).evaluate_closed(), RationalFunc(Q3 * Q3 - 1))
        self.assertEqual(colored_invariant(unknot, ['++']).evaluate_closed(), RationalFunc(Q3 * Q3 - Q3))

    def test_trivial_labels(self):
        hopf = util.load_diagram(data_path('hopf.tangle'))
        self.assertEqual(colored_invariant(hopf, ['+', '+']).evaluate_closed(), evaluate(hopf).evaluate_closed())

    def test_insertion_independence(self):
        hopf = util.load_diagram(data_path('hopf.tangle'))
        default = colored_invariant(hopf, ['++', '+']).evaluate_closed()
        moved = colored_invariant(hopf, ['++', '+'], insertion={0: 3}).evaluate_closed()
        self.assertEqual(default, moved)

    def test_caches_hold_only_the_result(self):
        hopf = util.load_diagram(data_path('hopf.tangle'))
        result = colored_invariant(hopf, ['++', '+'])
        self.assertEqual(projector.cache_size(), 0)
        self.assertEqual(webs.cache_size(), len(result.terms))

    def test_insertion_out_of_range(self):
        hopf = util.load_diagram(data_path('hopf.tangle'))
        with self.assertRaises(InvalidArgumentException):
            colored_invariant(hopf, ['+', '+'], insertion={0: 99})
        with self.assertRaises(InvalidArgumentException):
            colored_invariant(hopf, ['+', '+'], insertion={0: -1})


    def test_labels(self):
        hopf = util.load_diagram(data_path('hopf.tangle'))
        with self.assertRaises(InvalidWordException):
            colored_invariant(hopf, ['+'])
        with self.assertRaises(InvalidWordException):
            colored_invariant(hopf, ['+', ''])

    def test_vertices_need_trivial_labels(self):
        diagram = TangleDiagram.build('', 'cup+ 1', 'ysplit 1', 'ymerge 1', 'cap 1')
        self.assertEqual(colored_invariant(diagram, ['+']).evaluate_closed(), RationalFunc(qint(2) * Q3))
        with self.assertRaises(SliceException):
            colored_invariant(diagram, ['++'])


if __name__ == '__main__':
    unittest.main()
