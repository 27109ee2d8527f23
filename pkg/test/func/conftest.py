# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        conftest
# Purpose:     Shared pytest fixtures
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


"""Shared pytest fixtures."""

# standard library imports

# third-party imports

import pytest

# local imports
from adder2d import AdderParams, Variant, assemble, set_max_threads
from adder2d.decompose import DecompositionScheme

WIDTHS = (4, 9, 16)
NN_SCHEMES = (DecompositionScheme.STANDARD_6CNOT,
              DecompositionScheme.PERES_BASED)


@pytest.fixture(scope="session",
                params=list(Variant),
                ids=[v.key for v in Variant])
def variant(request):
    return request.param


@pytest.fixture(scope="session",
                params=WIDTHS,
                ids=[f"n{n}" for n in WIDTHS])
def width(request):
    return request.param


@pytest.fixture(scope="session",
                params=list(DecompositionScheme),
                ids=[s.key for s in DecompositionScheme])
def scheme(request):
    return request.param


@pytest.fixture(scope="session",
                params=NN_SCHEMES,
                ids=[s.key for s in NN_SCHEMES])
def nn_scheme(request):
    return request.param


@pytest.fixture(scope="session")
def adder(variant, width):
    return assemble(AdderParams(width, variant))


@pytest.fixture(scope="session")
def adder4(variant):
    return assemble(AdderParams(4, variant))


@pytest.fixture(autouse=True)
def single_thread():
    set_max_threads(1)
    yield
    set_max_threads(None)
