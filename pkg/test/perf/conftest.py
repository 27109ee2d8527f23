# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        conftest
# Purpose:     Shared pytest fixtures (for performance tests)
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


"""Shared pytest fixtures (for performance tests)."""


# standard library imports

from collections import namedtuple

# third-party imports

import pytest

# local imports
from adder2d import AdderParams, Variant, assemble, random_pairs


Widths = namedtuple('Widths', "small, medium, large")
widths = Widths(4, 16, 49)


@pytest.fixture(scope="session",
                params=list(Variant),
                ids=[v.key for v in Variant])
def variant(request):
    return request.param


@pytest.fixture(scope="session",
                params=widths,
                ids=widths._fields)
def width(request):
    return request.param


@pytest.fixture(scope="session")
def adder(variant, width):
    return assemble(AdderParams(width, variant))


@pytest.fixture(scope="session")
def pairs(width):
    return random_pairs(width, 4096, seed=width)
