# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        __main__
# Purpose:     Entry point for python -m adder2d
#
# Author:      Michael Amrhein (michael@adrhinum.de)
#
# Copyright:   (c) 2024 Michael Amrhein
# License:     This program is part of a larger application. For license
#              details please read the file LICENSE.TXT provided together
#              with the application.
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


"""Entry point for `python -m adder2d`."""

import sys

from .cli import main


sys.exit(main())
