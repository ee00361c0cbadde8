# -*- coding: utf-8 -*-
"""Command line entry point"""

from __future__ import absolute_import, division, unicode_literals

if __name__ == '__main__':
    from sys import argv, exit  # pylint: disable=redefined-builtin

    from resources.lib.cli import run

    exit(run(argv[1:]))
