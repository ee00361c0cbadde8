# -*- coding: utf-8 -*-
""" Spider utility functions """

from __future__ import absolute_import, division, unicode_literals

import json
import logging
from io import open  # pylint: disable=redefined-builtin

from resources.lib.spider.exceptions import NotAComplexException, ParseException
from resources.lib.spider.homocalc import CATEGORIES, Complex, LazyComplex
from resources.lib.spider.tangle import parse

_LOGGER = logging.getLogger(__name__)


def read_text(path):
    """ Read a file, reporting problems as ParseException.

    :param str path:        The file to read.
    :rtype: str
    """
    try:
        with open(path, 'r', encoding='utf-8') as fdesc:
            return fdesc.read()
    except (IOError, OSError) as exc:
        _LOGGER.debug('Could not read %s: %s', path, exc)
        raise ParseException(0, 'Could not read %s: %s' % (path, exc))


def load_diagram(path):
    """ Load a tangle diagram in the slice format

    :rtype: resources.lib.spider.tangle.TangleDiagram
    """
    return parse(read_text(path))


def load_json(path):
    """ Load a JSON document """
    text = read_text(path)
    try:
        return json.loads(text)
    except ValueError as exc:
        raise ParseException(getattr(exc, 'lineno', 0), 'Invalid JSON: %s' % exc)


def complex_from_json(data):
    """ Build a Complex, or a LazyComplex when a periodic block is declared.

    :param dict data:       {"category", "objects", "differentials", "periodic"?}
    :rtype: Complex | LazyComplex
    """
    try:
        category = CATEGORIES[data.get('category', 'graded')]
        objects = {int(degree): [(label, int(shift)) for label, shift in summands]
                   for degree, summands in data['objects'].items()}
        differentials = {int(degree): rows for degree, rows in data.get('differentials', {}).items()}
        periodic = data.get('periodic')
        if periodic:
            return LazyComplex.periodic(category, objects, differentials, int(periodic['from']),
                                        int(periodic['period']), int(periodic['qstep']))
        return Complex(category, objects, differentials)
    except NotAComplexException:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseException(0, 'Invalid complex: %s' % exc)


def load_complex(path):
    """ Load a complex from a JSON file """
    return complex_from_json(load_json(path))
