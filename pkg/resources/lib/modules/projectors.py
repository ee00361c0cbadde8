# -*- coding: utf-8 -*-
""" Projectors module """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib import spiderutils
from resources.lib.spider.projector import check_annihilation, check_idempotent, check_identity_coefficient, projector_for_word, trace
from resources.lib.spider.qring import SeriesRing, quantum_dimension
from resources.lib.spider.web import Word

_LOGGER = logging.getLogger(__name__)


class Projectors:
    """ Commands that build and check projectors """

    def __init__(self):
        """ Initialise object """

    @staticmethod
    def show_projector(word, series=None):
        """ Show the projector of a word, with rational or series coefficients.

        :type word: str
        :param int series:      Expand the coefficients below this order.
        """
        result = projector_for_word(Word(word))
        if series is not None:
            result = result.coerce(SeriesRing(series))
        spiderutils.show_result({'word': str(Word(word)), 'sum': result.to_json()}, str(result))

    @staticmethod
    def check_projector(word):
        """ Check the defining properties of the projector of a word.

        :type word: str
        """
        word = Word(word)
        result = projector_for_word(word)
        plus, minus = word.weight()
        closure = trace(result)
        checks = {
            'identity_coefficient': check_identity_coefficient(result, word),
            'idempotent': check_idempotent(result, word),
            'annihilation': check_annihilation(result, word),
            'trace': closure == quantum_dimension(plus, minus),
        }
        if not all(checks.values()):
            _LOGGER.warning('Projector of %s fails %s', word, ', '.join(sorted(key for key, value in checks.items() if not value)))
        text = '\n'.join('%-22s %s' % (key, 'ok' if value else 'FAILED') for key, value in sorted(checks.items()))
        spiderutils.show_result({'word': str(word), 'checks': checks, 'trace': closure.to_json()}, text)
