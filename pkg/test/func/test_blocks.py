#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        test_blocks
# Purpose:     Test driver for package 'adder2d' (building blocks)
#
# Author:      Michael Amrhein (michael@adrhinum.de)
#
# Copyright:   (c) 2024 Michael Amrhein
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


"""Test driver for package 'adder2d' (building blocks)."""


from itertools import product

import pytest

from adder2d.blocks import (
    BlockKind, Variant, block_ports, block_semantics, build_block,
    canonical_block, has_block, swap_discrepancies,
)
from adder2d.gates import GateKind
from adder2d.layout import AdjacencyError, build_layout
from adder2d.sim import BasisState, run_classical

ALL_BLOCKS = [(kind, variant) for variant in Variant for kind in BlockKind
              if has_block(kind, variant)]


@pytest.mark.parametrize(("kind", "variant"), ALL_BLOCKS,
                         ids=[f"{k.name}-{v.key}" for k, v in ALL_BLOCKS])
def test_block_matches_semantics(kind, variant):
    block = canonical_block(kind, variant)
    ports = block_ports(kind, variant)
    for bits in product((0, 1), repeat=len(ports)):
        inputs = dict(zip(ports, bits))
        out = run_classical(block.circuit, BasisState(bits))
        expected = block_semantics(kind, variant, inputs)
        assert {port: out[q] for q, port in enumerate(ports)} == expected


@pytest.mark.parametrize(("kind", "variant"), ALL_BLOCKS,
                         ids=[f"{k.name}-{v.key}" for k, v in ALL_BLOCKS])
def test_block_props(kind, variant):
    block = canonical_block(kind, variant)
    assert block.kind is kind
    assert block.variant is variant
    assert len(block.overlap) == len(block.circuit)
    assert block.circuit.label == kind.title
    assert block.circuit.is_classical
    for before, after in block.order:
        assert 0 <= before < after < len(block.circuit)


@pytest.mark.parametrize(("kind", "variant"),
                         ((BlockKind.SUM1, Variant.OPTIMIZED),
                          (BlockKind.SUM2, Variant.OPTIMIZED),
                          (BlockKind.SCRUB_LAST, Variant.OPTIMIZED),
                          (BlockKind.SCRUB_SECOND, Variant.BASELINE),
                          (BlockKind.GP_FIRST, Variant.BASELINE),
                          (BlockKind.BIGGP_FIRST, Variant.BASELINE)),
                         ids=("SUM1", "SUM2", "SCRUB_LAST", "SCRUB_SECOND",
                              "GP_FIRST", "BIGGP_FIRST"))
def test_missing_block(kind, variant):
    assert not has_block(kind, variant)
    with pytest.raises(ValueError):
        block_ports(kind, variant)
    with pytest.raises(ValueError):
        canonical_block(kind, variant)


def test_block_ports():
    assert block_ports(BlockKind.FULL_ADDER, Variant.BASELINE) == \
        ('c', 'a', 'b', '0')
    assert block_ports(BlockKind.COLUMN_CARRY, Variant.BASELINE) == \
        ('P', 'G', 'C')
    assert block_ports(BlockKind.COLUMN_CARRY, Variant.OPTIMIZED) == \
        ('P', 'G', 'c')


@pytest.mark.parametrize("wires",
                         ({'a': 0, 'b': 1},
                          {'a': 0, 'b': 1, 'g': 2, 'x': 3},
                          {'a': 0, 'b': 1, 'g': 1}),
                         ids=("missing", "surplus", "shared"))
def test_build_block_wrong_wires(wires):
    with pytest.raises(ValueError):
        build_block(BlockKind.GP, Variant.BASELINE, wires)


def test_build_block_on_layout():
    layout = build_layout(4)
    # column 1: rows 0 to 2 are a3, b3 and an ancilla
    wires = {'a': layout.index_of(0, 1), 'b': layout.index_of(1, 1),
             'g': layout.index_of(2, 1)}
    block = build_block(BlockKind.GP_FIRST, Variant.OPTIMIZED, wires,
                        layout=layout)
    assert block.circuit.n_qubits == layout.n_qubits
    assert block.wires == wires
    assert block.circuit.count(GateKind.TOFFOLI) == 1
    assert 'GP_FIRST' in repr(block)


def test_build_block_not_adjacent():
    layout = build_layout(4)
    wires = {'a': layout.index_of(0, 1), 'b': layout.index_of(1, 1),
             'g': layout.index_of(5, 1)}
    with pytest.raises(AdjacencyError):
        build_block(BlockKind.GP, Variant.BASELINE, wires, layout=layout)


def test_build_block_n_qubits():
    block = build_block(BlockKind.TRANSPORT, Variant.BASELINE,
                        {'x': 4, 'y': 2})
    assert block.circuit.n_qubits == 5
    block = build_block(BlockKind.TRANSPORT, Variant.BASELINE,
                        {'x': 4, 'y': 2}, n_qubits=8)
    assert block.circuit.n_qubits == 8


@pytest.mark.parametrize(("kind", "inputs", "outputs"),
                         ((BlockKind.HALF_ADDER,
                           {'a': 1, 'b': 1, '0': 0},
                           {'a': 1, 'b': 0, '0': 1}),
                          (BlockKind.FULL_ADDER,
                           {'c': 1, 'a': 0, 'b': 1, '0': 0},
                           {'c': 1, 'a': 0, 'b': 0, '0': 1}),
                          (BlockKind.COLUMN_CARRY,
                           {'P': 1, 'G': 0, 'C': 1},
                           {'P': 1, 'G': 1, 'C': 1}),
                          (BlockKind.CARRY1,
                           {'p': 1, 'g': 0, 'c': 1},
                           {'p': 1, 'g': 1, 'c': 1})),
                         ids=("HA", "FA", "CC", "CARRY1"))
def test_block_semantics(kind, inputs, outputs):
    assert block_semantics(kind, Variant.BASELINE, inputs) == outputs


def test_biggp_semantics():
    inputs = {'P': 1, 'G': 1, 'a': 0, 'p': 1, 'g': 0, '0': 0}
    for variant in Variant:
        outputs = block_semantics(BlockKind.BIGGP, variant, inputs)
        # P[i,j] on the g port, G[i,j] on the 0 port
        assert (outputs['g'], outputs['0']) == (1, 1)
    outputs = block_semantics(BlockKind.BIGGP, Variant.OPTIMIZED, inputs)
    # a and P trade places
    assert (outputs['P'], outputs['G'], outputs['a']) == (0, 1, 1)


@pytest.mark.parametrize("kind", (BlockKind.BIGGP, BlockKind.BIGGP_FIRST),
                         ids=("BIGGP", "BIGGP_FIRST"))
def test_optimized_biggp_sequence(kind):
    block = canonical_block(kind, Variant.OPTIMIZED)
    kinds = [gate.kind for gate in block.circuit]
    # G Toffoli third, P Toffoli last
    assert [pos for pos, gk in enumerate(kinds)
            if gk is GateKind.TOFFOLI] == [2, 9]
    assert kinds.count(GateKind.SWAP) == 8
    assert block.order == ()


def test_overlap_flags():
    flagged = {kind: [pos for pos, flag in
                      enumerate(canonical_block(kind,
                                                Variant.OPTIMIZED).overlap)
                      if flag]
               for kind in (BlockKind.BIGGP, BlockKind.BIGGP_FIRST,
                            BlockKind.CARRY, BlockKind.CARRY1,
                            BlockKind.FULL_ADDER)}
    assert flagged == {BlockKind.BIGGP: [0, 3, 5, 7, 8, 9],
                       BlockKind.BIGGP_FIRST: [0, 1, 3, 5, 7, 8],
                       BlockKind.CARRY: [0],
                       BlockKind.CARRY1: [0],
                       BlockKind.FULL_ADDER: [0, 1]}
    assert not any(canonical_block(BlockKind.BIGGP,
                                   Variant.BASELINE).overlap)


@pytest.mark.parametrize(("kind", "outputs"),
                         ((BlockKind.CARRY,
                           {'P': 1, 'G': 1, 'a': 0, 'p': 1, 'c': 1}),
                          (BlockKind.CARRY1,
                           {'P': 1, 'G': 1, 'a': 0, 'p': 1, 'c': 1})),
                         ids=("CARRY", "CARRY1"))
def test_optimized_carry_takes_biggp_output(kind, outputs):
    # propagate prefix 1, generate prefix 0, bit a = 0
    biggp = block_semantics(BlockKind.BIGGP, Variant.OPTIMIZED,
                            {'P': 1, 'G': 0, 'a': 0, 'p': 1, 'g': 0,
                             '0': 0})
    assert (biggp['P'], biggp['G'], biggp['a']) == (0, 0, 1)
    inputs = {'P': biggp['P'], 'G': biggp['G'], 'a': biggp['a'], 'p': 1,
              'c': 1}
    # carry = G xor (P and c) with P taken from the a port
    assert block_semantics(kind, Variant.OPTIMIZED, inputs) == outputs


@pytest.mark.parametrize("kind", (BlockKind.SCRUB, BlockKind.SCRUB_SECOND),
                         ids=("SCRUB", "SCRUB_SECOND"))
def test_optimized_scrub_clears_prefix(kind):
    ports = block_ports(kind, Variant.OPTIMIZED)
    for q_bit, p_bit in product((0, 1), repeat=2):
        inputs = dict.fromkeys(ports, 1)
        inputs.update(Q=q_bit, p=p_bit, P=q_bit & p_bit)
        outputs = block_semantics(kind, Variant.OPTIMIZED, inputs)
        assert outputs['P'] == 0
        assert {port: outputs[port] for port in ports if port != 'P'} == \
            {port: inputs[port] for port in ports if port != 'P'}


def test_swap_discrepancies():
    assert swap_discrepancies() == {
        (BlockKind.CARRY, Variant.OPTIMIZED): (7, 5)}
    block = canonical_block(BlockKind.CARRY, Variant.OPTIMIZED)
    assert block.circuit.count(GateKind.SWAP) == 7
