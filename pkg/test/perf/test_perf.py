# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        test_perf
# Purpose:     Measure assembly, simulation and depth accounting
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


"""Measure assembly, simulation and depth accounting."""


from adder2d import AdderParams, CostModel, asap_depth, assemble, sweep
from adder2d.adder import cross_check, run_adder
from adder2d.blocks import Variant


def test_assemble(benchmark, variant, width):
    # bypass the cache
    benchmark(assemble.__wrapped__, AdderParams(width, variant))


def test_assemble_expanded(benchmark, variant, width):
    benchmark(assemble.__wrapped__, AdderParams(width, variant, expand=True))


def test_run_adder(benchmark, adder):
    benchmark(run_adder, adder, 1, 2 ** adder.params.n - 1)


def test_sweep(benchmark, adder, pairs):
    benchmark(sweep, adder, *pairs)


def test_asap_depth(benchmark, adder):
    benchmark(asap_depth, adder.circuit, CostModel.preset())


def test_statevector(benchmark):
    adder = assemble(AdderParams(4, Variant.OPTIMIZED, expand=True))
    benchmark(cross_check, adder, 11, 6)
