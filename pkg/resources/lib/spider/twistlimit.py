# -*- coding: utf-8 -*-
""" Full twists and the convergence of their shifted evaluations to the projectors """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib.spider import DEFAULT_BUDGET, StabilizationReport
from resources.lib.spider import web as webs
from resources.lib.spider.exceptions import InvalidArgumentException
from resources.lib.spider.projector import clear_cache, projector_for_word
from resources.lib.spider.qring import LaurentPoly, SeriesRing
from resources.lib.spider.tangle import SLICE_CROSS_PLUS, Slice, TangleDiagram, crossing_counts, evaluate
from resources.lib.spider.web import Word

_LOGGER = logging.getLogger(__name__)


def full_twist(word, k):
    """ The braid (x+ 1 ... x+ n-1)^(n k) on the word

    :param Word word:       Orientations of the strands.
    :param int k:           Number of full twists, k >= 0.
    :rtype: TangleDiagram
    """
    word = Word(word)
    if k < 0:
        raise InvalidArgumentException('Number of twists must be nonnegative, got %d' % k)
    size = len(word)
    generators = [Slice(SLICE_CROSS_PLUS, position) for position in range(1, size)]
    return TangleDiagram(word, generators * (size * k))


def twist_shift(word):
    """ The exponent 3c- - 2c+ of one full twist """
    counts = crossing_counts(full_twist(word, 1))
    return 3 * counts.minus - 2 * counts.plus


def shifted_eval(word, k, order, budget=DEFAULT_BUDGET, force=False):
    """ q^(k(3c- - 2c+)) times the evaluation of k full twists, as truncated series

    :rtype: resources.lib.spider.websum.WebSum
    """
    word = Word(word)
    evaluation = evaluate(full_twist(word, k), budget=budget, force=force)
    shifted = evaluation.scale(LaurentPoly.monomial(k * twist_shift(word)))
    return shifted.coerce(SeriesRing(order))


def stabilization_report(word, kmax, order, budget=DEFAULT_BUDGET, force=False):
    """ Compare the shifted twist evaluations for k = 1..kmax with each other and with the projector

    :param Word word:       Orientations of the strands.
    :param int kmax:        Largest number of twists, at least 1.
    :param int order:       Truncation order of the series.
    :rtype: StabilizationReport
    """
    word = Word(word)
    if kmax < 1:
        raise InvalidArgumentException('At least one twist is needed, got kmax=%d' % kmax)
    per_k = []
    for k in range(1, kmax + 1):
        per_k.append((k, shifted_eval(word, k, order, budget=budget, force=force)))
        _LOGGER.debug('Evaluated %d full twists on %s', k, word)

    agreement = [first.agreement(second) for (_, first), (_, second) in zip(per_k, per_k[1:])]
    limit = projector_for_word(word).coerce(SeriesRing(order))
    report = StabilizationReport(word=word, order=order, per_k=per_k, agreement=agreement,
                                 projector_agreement=per_k[-1][1].agreement(limit))
    if not report.is_monotone():
        _LOGGER.warning('Agreement degrees %s for %s are not monotone', agreement, word)
    clear_cache()
    webs.clear_caches()
    return report
