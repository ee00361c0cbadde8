# -*- coding: utf-8 -*-
""" Complexes module """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib import spiderutils
from resources.lib.spider import util
from resources.lib.spider.exceptions import InvalidArgumentException
from resources.lib.spider.homocalc import LazyComplex, euler_char, euler_char_exact, simplify, truncate

_LOGGER = logging.getLogger(__name__)


class Complexes:
    """ Commands on chain complexes read from JSON files """

    def __init__(self):
        """ Initialise object """

    @staticmethod
    def simplify(path, through=None):
        """ Gaussian elimination of every unit entry.

        :type path: str
        :param int through:     Highest degree to look at, required for periodic complexes.
        """
        complex_ = util.load_complex(path)
        if isinstance(complex_, LazyComplex):
            if through is None:
                raise InvalidArgumentException('A periodic complex needs --through')
            complex_ = complex_.through(through)
        elif through is not None:
            complex_ = truncate(complex_, through)
        result = simplify(complex_)
        text = '\n'.join('%d: %s' % (degree, ' + '.join('q^%d %s' % (shift, label) for label, shift in result.at(degree)))
                         for degree in result.degrees()) or '0'
        spiderutils.show_result(result.to_json(), text)

    @staticmethod
    def euler(path, through=None, slope=None, a=0, b=0):
        """ Euler characteristic per label, exact for bounded complexes and truncated otherwise.

        :type path: str
        """
        complex_ = util.load_complex(path)
        lazy = isinstance(complex_, LazyComplex)
        if slope is None:
            if lazy:
                raise InvalidArgumentException('A periodic complex needs --slope')
            if through is not None:
                complex_ = truncate(complex_, through)
            values = euler_char_exact(complex_)
        else:
            if through is None:
                if lazy:
                    raise InvalidArgumentException('A periodic complex needs --through')
                through = complex_.max_degree() or 0
            values = euler_char(complex_, through, slope, a, b)
        data = {label: value.to_json() for label, value in values.items()}
        text = '\n'.join('%s: %s' % (label, values[label]) for label in sorted(values))
        spiderutils.show_result(data, text)
