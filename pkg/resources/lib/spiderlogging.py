# -*- coding: utf-8 -*-
"""Log handler for the command line"""

from __future__ import absolute_import, division, unicode_literals

import logging
import sys

from resources.lib import spiderutils


class SpiderLogHandler(logging.StreamHandler):
    """ A log handler writing to stderr, so results on stdout stay parseable """

    def __init__(self, stream=None):
        logging.StreamHandler.__init__(self, stream or sys.stderr)
        formatter = logging.Formatter("[{}] [%(name)s] %(message)s".format(spiderutils.PROJECT_ID))
        self.setFormatter(formatter)

    def emit(self, record):
        """ Emit a log message """
        # Debug messages only pass when the debug logging setting has been activated
        threshold = logging.DEBUG if spiderutils.get_setting_bool('debug_logging', False) else logging.WARNING
        if record.levelno < threshold:
            return
        logging.StreamHandler.emit(self, record)


def config():
    """ Setup the logger with this handler """
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)  # Make sure we pass all messages, the handler does the filtering.
    if not any(isinstance(handler, SpiderLogHandler) for handler in logger.handlers):
        logger.addHandler(SpiderLogHandler())
