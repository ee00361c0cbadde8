# -*- coding: utf-8 -*-
"""Settings and output for the command line"""

from __future__ import absolute_import, division, unicode_literals

import json
import logging
import os
import sys

PROJECT_ID = 'sl3spider'

OUTPUT_JSON = 'json'
OUTPUT_PRETTY = 'pretty'

_LOGGER = logging.getLogger(__name__)

# Values set during this process win over the environment
_OVERRIDES = {}


def to_unicode(text, encoding='utf-8', errors='strict'):
    """Force text to unicode"""
    if isinstance(text, bytes):
        return text.decode(encoding, errors=errors)
    return text


def _environment_key(key):
    return 'SPIDER_' + key.upper()


def get_setting(key, default=None):
    """Get a setting as string"""
    if key in _OVERRIDES:
        value = _OVERRIDES[key]
    else:
        value = to_unicode(os.environ.get(_environment_key(key), ''))
    if value == '' and default is not None:
        return default
    return value


def get_setting_bool(key, default=None):
    """Get a setting as boolean"""
    value = get_setting(key, default)
    if isinstance(value, bool):
        return value
    if value not in ('false', 'true'):
        return default
    return bool(value == 'true')


def get_setting_int(key, default=None):
    """Get a setting as integer"""
    value = get_setting(key, default)
    try:
        return int(value)
    except (TypeError, ValueError):
        return default


def set_setting(key, value):
    """Set a setting for the rest of this process"""
    if isinstance(value, bool):
        value = 'true' if value else 'false'
    _OVERRIDES[key] = to_unicode(str(value))


def reset_settings():
    """Forget every setting made with set_setting"""
    _OVERRIDES.clear()


def get_truncation():
    """Truncation order for series output"""
    from resources.lib.spider import DEFAULT_TRUNCATION
    return get_setting_int('truncation', DEFAULT_TRUNCATION)


def get_budget():
    """Number of resolution branches an evaluation may expand"""
    from resources.lib.spider import DEFAULT_BUDGET
    return get_setting_int('budget', DEFAULT_BUDGET)


def get_strategy():
    """Order in which web faces are rewritten"""
    from resources.lib.spider.web import STRATEGIES, STRATEGY_SMALLEST
    value = get_setting('strategy', STRATEGY_SMALLEST)
    if value not in STRATEGIES:
        _LOGGER.warning('Unknown rewrite strategy %s, using %s', value, STRATEGY_SMALLEST)
        return STRATEGY_SMALLEST
    return value


def show_result(data, text=None, stream=None):
    """Print a result as JSON, or as text when pretty output was requested

    :param data:            A JSON serializable result.
    :param str text:        A human readable rendering of the same result.
    """
    stream = stream or sys.stdout
    if get_setting('output', OUTPUT_JSON) == OUTPUT_PRETTY:
        if text is None:
            text = json.dumps(data, sort_keys=True, indent=2)
        stream.write(text + '\n')
    else:
        stream.write(json.dumps(data, sort_keys=True) + '\n')


def show_report(data, table, stream=None, table_stream=None):
    """Print a result as JSON together with a human readable table.

    With JSON output the table goes to stderr, with pretty output both go to stdout, table first.
    """
    stream = stream or sys.stdout
    if get_setting('output', OUTPUT_JSON) == OUTPUT_PRETTY:
        stream.write(table + '\n' + json.dumps(data, sort_keys=True, indent=2) + '\n')
    else:
        stream.write(json.dumps(data, sort_keys=True) + '\n')
        (table_stream or sys.stderr).write(table + '\n')


def show_error(message, stream=None):
    """Print an error message on stderr"""
    stream = stream or sys.stderr
    stream.write('{}: {}\n'.format(PROJECT_ID, message))
