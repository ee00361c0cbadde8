# -*- coding: utf-8 -*-
""" sl3 spider calculus """

from __future__ import absolute_import, division, unicode_literals

DEFAULT_TRUNCATION = 40
DEFAULT_BUDGET = 2 ** 24

# Desk-scale defaults for the twist experiments
DEFAULT_TWIST_KMAX = 4
DEFAULT_TWIST_ORDER = 20


class CrossingCounts:
    """ Defines the number of positive and negative crossings of a diagram. """

    def __init__(self, plus=0, minus=0):
        """
        :type plus: int
        :type minus: int
        """
        self.plus = plus
        self.minus = minus

    @property
    def total(self):
        """ Number of crossings """
        return self.plus + self.minus

    def __eq__(self, other):
        if isinstance(other, tuple):
            return (self.plus, self.minus) == other
        if not isinstance(other, CrossingCounts):
            return NotImplemented
        return (self.plus, self.minus) == (other.plus, other.minus)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.plus, self.minus))

    def __repr__(self):
        return "%r" % self.__dict__


class StabilizationReport:
    """ Defines the outcome of a twist stabilization experiment. """

    def __init__(self, word=None, order=None, per_k=None, agreement=None, projector_agreement=None):
        """
        :type word: resources.lib.spider.web.Word
        :type order: int
        :type per_k: list[tuple[int, resources.lib.spider.websum.WebSum]]
        :type agreement: list[int]
        :type projector_agreement: int
        """
        self.word = word
        self.order = order
        self.per_k = per_k or []
        self.agreement = agreement or []
        self.projector_agreement = projector_agreement

    def is_monotone(self):
        """ True when the pairwise agreement degrees never decrease """
        return all(first <= second for first, second in zip(self.agreement, self.agreement[1:]))

    def to_json(self):
        """ Serializable form """
        return {
            'word': str(self.word),
            'truncation': self.order,
            'evaluations': [{'k': k, 'sum': evaluation.to_json()} for k, evaluation in self.per_k],
            'agreement': self.agreement,
            'projector_agreement': self.projector_agreement,
        }

    def __repr__(self):
        return "%r" % self.__dict__
