# -*- coding: utf-8 -*-
""" Invariants module """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib import spiderutils
from resources.lib.spider import util
from resources.lib.spider.tangle import Evaluator, colored_invariant, components, crossing_counts, evaluate, validate, writhe
from resources.lib.spider.web import Word

_LOGGER = logging.getLogger(__name__)


class Invariants:
    """ Commands that evaluate tangle diagrams """

    def __init__(self):
        """ Initialise object """
        self._evaluator = Evaluator(budget=spiderutils.get_budget(),
                                    force=spiderutils.get_setting_bool('force', False),
                                    strategy=spiderutils.get_strategy())

    @staticmethod
    def _emit(result):
        """ Show a closed evaluation as a single value, anything else as a sum of webs """
        if not result.domain and not result.codomain:
            value = result.evaluate_closed()
            spiderutils.show_result({'invariant': result.ring.to_json(value)}, str(value))
            return
        data = {
            'domain': str(result.domain),
            'codomain': str(result.codomain),
            'sum': result.to_json(),
        }
        spiderutils.show_result(data, str(result))

    def evaluate(self, path):
        """ Evaluate a diagram with the skein relations.

        :type path: str
        """
        diagram = util.load_diagram(path)
        result = evaluate(diagram, evaluator=self._evaluator)
        _LOGGER.debug('Reduced %d resolution branches of %s', self._evaluator.resolved, path)
        self._emit(result)

    def colored(self, path, labels, insertion=None):
        """ Evaluate a diagram colored by one word per component.

        :type path: str
        :type labels: list[str]
        :param dict insertion:  Optional component -> slice after which its projector sits.
        """
        diagram = util.load_diagram(path)
        result = colored_invariant(diagram, [Word(label) for label in labels], insertion=insertion, evaluator=self._evaluator)
        self._emit(result)

    @staticmethod
    def describe(path):
        """ Show the codomain, crossing counts, writhe and component numbering of a diagram.

        :type path: str
        """
        diagram = util.load_diagram(path)
        codomain = validate(diagram)
        counts = crossing_counts(diagram)
        count, layout = components(diagram)
        data = {
            'domain': str(diagram.word),
            'codomain': str(codomain),
            'crossings': {'plus': counts.plus, 'minus': counts.minus},
            'writhe': writhe(diagram),
            'components': count,
            'layout': layout,
        }
        text = '%s -> %s, %d components, crossings +%d -%d, writhe %d' % (
            diagram.word, codomain, count, counts.plus, counts.minus, writhe(diagram))
        spiderutils.show_result(data, text)
