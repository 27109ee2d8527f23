# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        adder2d (package)
# Purpose:     Quantum adder on a 2D nearest-neighbour grid
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


"""
The package `adder2d` builds a carry-lookahead quantum adder of depth
O(sqrt(n)) for qubits placed on a 2D grid, where two-qubit gates may only
act on neighbouring cells.

Usage
=====

An adder is described by :class:`AdderParams` and built by
:func:`assemble`. The width `n` must be a perfect square >= 4.

    >>> adder = assemble(AdderParams(4))
    >>> adder.layout.n_qubits
    13
    >>> assemble(AdderParams(5))
    ValueError: n must be a perfect square >= 4, got 5.

Two variants are available: the baseline blocks and the optimized blocks
with reduced SWAP overhead.

    >>> baseline = assemble(AdderParams(9, Variant.BASELINE))

The block-level circuit contains unexpanded Toffoli gates. With `expand`
set, every Toffoli is replaced by a Clifford+T sequence on a line of
neighbouring cells:

    >>> expanded = assemble(AdderParams(4, expand=True))
    >>> check_adjacency(expanded.circuit, expanded.layout)
    []

Simulation
==========

Block-level circuits are classical and can be simulated on basis states:

    >>> state = run_adder(adder, 5, 12)
    >>> read_register(adder, state, 'b')
    1

Many input pairs are checked at once by :func:`sweep`, which also checks
that the a wires are preserved and all ancillae are clean:

    >>> sweep(adder, *exhaustive_pairs(4)).passed
    True

Depth
=====

:func:`check_depths` schedules the phases of the assembled adder and
compares the result with the closed-form depth:

    >>> report = check_depths(9, Variant.OPTIMIZED)
    >>> report.formula_expected
    266
    >>> report.total_asap <= report.total_sequential
    True

Durations of gates are given by a :class:`CostModel`; named presets are
t14s1 (the default), t14s3, t12s3 and t12s1.
"""

__version__ = 0, 1, 0


from .adder import (
    AdderCircuit, AdderParams, arithmetic_oracle, assemble, read_register,
    run_adder, trace_values,
)
from .blocks import BlockInstance, BlockKind, Variant, block_semantics, \
    build_block
from .config import get_dflt_cost_model, get_max_threads, \
    set_dflt_cost_model, set_max_threads
from .decompose import DecompositionScheme, LinePlacement, expand_toffoli, \
    unitary_of, verify_toffoli
from .gates import Circuit, Gate, GateKind, concat, reverse
from .layout import AdjacencyError, GridLayout, WireRole, build_layout, \
    check_adjacency, is_adjacent
from .qec import QecParams, adder_reduction_ratio, physical_gate_count
from .schedule import CostModel, DepthReport, asap_depth, check_depths, \
    formula_depth
from .sim import BasisState, StateVector, exhaustive_pairs, random_pairs, \
    run_classical, run_statevector, sweep


# define public namespace
__all__ = [
    'AdderCircuit',
    'AdderParams',
    'AdjacencyError',
    'BasisState',
    'BlockInstance',
    'BlockKind',
    'Circuit',
    'CostModel',
    'DecompositionScheme',
    'DepthReport',
    'Gate',
    'GateKind',
    'GridLayout',
    'LinePlacement',
    'QecParams',
    'StateVector',
    'Variant',
    'WireRole',
    'adder_reduction_ratio',
    'arithmetic_oracle',
    'asap_depth',
    'assemble',
    'block_semantics',
    'build_block',
    'build_layout',
    'check_adjacency',
    'check_depths',
    'concat',
    'exhaustive_pairs',
    'expand_toffoli',
    'formula_depth',
    'get_dflt_cost_model',
    'get_max_threads',
    'is_adjacent',
    'physical_gate_count',
    'random_pairs',
    'read_register',
    'reverse',
    'run_adder',
    'run_classical',
    'run_statevector',
    'set_dflt_cost_model',
    'set_max_threads',
    'sweep',
    'trace_values',
    'unitary_of',
    'verify_toffoli',
]
