# -*- coding: utf-8 -*-
""" Exceptions """

from __future__ import absolute_import, division, unicode_literals


class SpiderException(Exception):
    """ Base class for everything the spider calculus raises on bad input. """


class InvalidArgumentException(SpiderException, ValueError):
    """ Is thrown when an option or parameter is outside its allowed range. """


class InvalidWordException(SpiderException):
    """ Is thrown when a word contains something else than + and - signs. """


class InvalidWebException(SpiderException):
    """ Is thrown when a web is not a valid oriented planar trivalent graph. """


class WordMismatchException(SpiderException):
    """ Is thrown when two morphisms are glued along different words. """

    def __init__(self, expected, actual):
        super(WordMismatchException, self).__init__('Expected word %s, got %s' % (expected, actual))
        self.expected = expected
        self.actual = actual


class SliceException(SpiderException):
    """ Is thrown when a slice can not be applied to the current word. """

    def __init__(self, index, reason):
        super(SliceException, self).__init__('Slice %d: %s' % (index, reason))
        self.index = index
        self.reason = reason


class ParseException(SpiderException):
    """ Is thrown when an input file can not be parsed. """

    def __init__(self, line, reason):
        super(ParseException, self).__init__('Line %s: %s' % (line, reason))
        self.line = line
        self.reason = reason


class BudgetExceededException(SpiderException):
    """ Is thrown when an evaluation needs more resolution branches than allowed. """

    def __init__(self, branches, budget):
        super(BudgetExceededException, self).__init__('%d resolution branches exceed the budget of %d' % (branches, budget))
        self.branches = branches
        self.budget = budget


class NotChainMapException(SpiderException):
    """ Is thrown when a family of matrices does not commute with the differentials. """

    def __init__(self, degree):
        super(NotChainMapException, self).__init__('Not a chain map in degree %d' % degree)
        self.degree = degree


class NotAComplexException(SpiderException):
    """ Is thrown when differentials are malformed or do not form a complex. """

    def __init__(self, degree):
        super(NotAComplexException, self).__init__('Differentials fail in degree %d' % degree)
        self.degree = degree


class NotUnitException(SpiderException):
    """ Is thrown when an elimination or inversion hits an entry that is not a unit. """


class NotStabilizingException(SpiderException):
    """ Is thrown when an inverse system does not stabilize within the probed range. """

    def __init__(self, degree):
        super(NotStabilizingException, self).__init__('No stable index found for degree %d' % degree)
        self.degree = degree


class SupportViolationException(SpiderException):
    """ Is thrown when a summand of a complex lies outside the declared support region. """

    def __init__(self, h, q):
        super(SupportViolationException, self).__init__('Summand at homological degree %d has q-degree %d outside the support' % (h, q))
        self.h = h
        self.q = q
