# -*- coding: utf-8 -*-
""" Twisting module """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib import spiderutils
from resources.lib.spider.twistlimit import stabilization_report
from resources.lib.spider.web import Word

_LOGGER = logging.getLogger(__name__)


class Twisting:
    """ Commands about full twists """

    def __init__(self):
        """ Initialise object """
        self._budget = spiderutils.get_budget()
        self._force = spiderutils.get_setting_bool('force', False)

    def twist_limit(self, word, kmax, order):
        """ Show how the shifted twist evaluations approach the projector.

        :type word: str
        :type kmax: int
        :type order: int
        """
        report = stabilization_report(Word(word), kmax, order, budget=self._budget, force=self._force)
        lines = ['k  agreement with k+1', '-  -------------------']
        for (k, _), degree in zip(report.per_k, report.agreement):
            lines.append('%d  %d' % (k, degree))
        lines.append('projector agreement at k=%d: %d' % (kmax, report.projector_agreement))
        spiderutils.show_report(report.to_json(), '\n'.join(lines))
