# -*- coding: utf-8 -*-
""" Tests """

# pylint: disable=missing-docstring,no-self-use,wrong-import-order,wrong-import-position

from __future__ import absolute_import, division, unicode_literals

import os

from resources.lib import spiderlogging

spiderlogging.config()

DATA_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'data')


def data_path(name):
    """ Path of a fixture in tests/data """
    return os.path.join(DATA_DIR, name)
