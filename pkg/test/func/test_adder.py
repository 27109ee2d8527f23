#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        test_adder
# Purpose:     Test driver for package 'adder2d' (adder assembly)
#
# Author:      Michael Amrhein (michael@adrhinum.de)
#
# Copyright:   (c) 2024 Michael Amrhein
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


"""Test driver for package 'adder2d' (adder assembly)."""


import json
from math import isqrt

from hypothesis import given, settings, strategies as st
import pytest

from adder2d.adder import (
    AdderCircuit, AdderParams, DASHED_BOX, PHASES, arithmetic_oracle,
    assemble, check_labels, cross_check, find_block, label_value,
    read_register, run_adder, trace_values,
)
from adder2d.blocks import BlockKind, Variant
from adder2d.decompose import DecompositionScheme
from adder2d.gates import GateKind, reverse
from adder2d.sim import (
    NonClassicalGateError, exhaustive_pairs, random_pairs, sweep,
)

BK = BlockKind


@pytest.mark.parametrize("n", (5, 8, 0), ids=lambda n: f"n{n}")
def test_assemble_invalid_width(n):
    with pytest.raises(ValueError):
        assemble(AdderParams(n))


def test_assemble_is_cached():
    assert assemble(AdderParams(4)) is assemble(AdderParams(4))


def test_default_params():
    params = AdderParams(9)
    assert params.variant is Variant.OPTIMIZED
    assert params.scheme is DecompositionScheme.STANDARD_6CNOT
    assert not params.expand


def test_io_map():
    adder = assemble(AdderParams(4))
    assert adder.io_map == {'a': [1, 7, 0, 6], 'b': [3, 9, 2, 8],
                            'ancilla': [4, 5, 10, 11, 12]}
    assert json.loads(adder.io_map_json()) == adder.io_map


def test_phase_marks(adder):
    marks = adder.phase_marks
    assert list(marks) == list(PHASES)
    stop = 0
    for phase in PHASES:
        start, end = marks[phase]
        assert start == stop
        assert end >= start
        stop = end
    assert stop == len(adder.circuit)


def test_uncompute_reverses_dashed_box(adder):
    box = adder.dashed_box()
    assert DASHED_BOX == ('phase1', 'phase2', 'phase3')
    assert list(adder.phase('uncompute')) == list(reverse(box))


def test_finalize_negates_b(adder):
    finalize = adder.phase('finalize')
    assert len(finalize) == adder.params.n
    assert all(gate.kind is GateKind.X for gate in finalize)
    assert sorted(gate.qubits[0] for gate in finalize) == \
        sorted(adder.io_map['b'])


@pytest.mark.parametrize(("variant", "counts"),
                         ((Variant.OPTIMIZED,
                           {BK.HALF_ADDER: 1, BK.FULL_ADDER: 1,
                            BK.GP_FIRST: 1, BK.GP: 1, BK.BIGGP_FIRST: 1,
                            BK.COLUMN_CARRY: 1, BK.CARRY1: 1,
                            BK.SCRUB_SECOND: 1, BK.TRANSPORT: 3,
                            BK.SUM: 3}),
                          (Variant.BASELINE,
                           {BK.HALF_ADDER: 1, BK.FULL_ADDER: 1, BK.GP: 2,
                            BK.BIGGP: 1, BK.COLUMN_CARRY: 1, BK.CARRY1: 1,
                            BK.SCRUB_LAST: 1, BK.TRANSPORT: 7,
                            BK.SUM2: 2, BK.SUM1: 1})),
                         ids=("optimized", "baseline"))
def test_count_blocks_n4(variant, counts):
    adder = assemble(AdderParams(4, variant))
    assert adder.count_blocks() == counts


def test_blocks_in_order(adder):
    pos = 0
    for placed in adder.blocks:
        assert placed.start >= pos
        assert placed.phase in PHASES
        assert list(adder.circuit[placed.start:placed.stop]) == \
            list(placed.instance.circuit)
        pos = placed.stop


def test_variants_share_toffolis(width):
    n_toffolis = []
    for variant in Variant:
        circuit = assemble(AdderParams(width, variant)).circuit
        assert len(circuit.gates) == len(circuit)
        n_toffolis.append(sum(1 for gate in circuit
                              if gate.kind is GateKind.TOFFOLI))
    # 5m - 3 per lookahead column, 2m - 1 in the ripple column, twice
    m = isqrt(width)
    assert n_toffolis == [2 * ((m - 1) * (5 * m - 3) + 2 * m - 1)] * 2


def test_find_block():
    adder = assemble(AdderParams(9))
    first = find_block(adder, BK.BIGGP_FIRST)
    assert first.instance.kind is BK.BIGGP_FIRST
    assert first.phase == 'phase1'
    assert find_block(adder, BK.BIGGP_FIRST, 2) is None
    assert find_block(adder, BK.SUM1) is None


def test_repr():
    adder = assemble(AdderParams(4))
    assert repr(adder) == (f"AdderCircuit(n=4, variant=optimized, "
                           f"expand=False, gates={len(adder.circuit)})")


@pytest.mark.parametrize(("a", "b", "n", "s"),
                         ((5, 12, 4, 1),
                          (0, 0, 4, 0),
                          (15, 15, 4, 14),
                          (3, 5, 4, 8),
                          (15, 1, 4, 0),
                          (511, 1, 9, 0),
                          (170, 85, 9, 255)),
                         ids=("wrap", "zero", "max", "plain", "overflow",
                              "n9", "n9_alternating"))
def test_arithmetic_oracle(a, b, n, s):
    assert arithmetic_oracle(a, b, n) == s


def test_arithmetic_oracle_range():
    with pytest.raises(ValueError):
        arithmetic_oracle(16, 0, 4)
    with pytest.raises(ValueError):
        arithmetic_oracle(0, -1, 4)


def test_run_adder(adder4):
    state = run_adder(adder4, 5, 12)
    assert read_register(adder4, state, 'b') == 1
    assert read_register(adder4, state, 'a') == 5
    assert all(state[q] == 0 for q in adder4.io_map['ancilla'])


def test_sweep_exhaustive_n4(adder4):
    result = sweep(adder4, *exhaustive_pairs(4))
    assert result.n_checked == 256
    assert result.passed


def test_sweep_random(adder):
    n = adder.params.n
    result = sweep(adder, *random_pairs(n, 500, seed=n),
                   chunk_size=128, max_threads=2)
    assert result.n_checked == 500
    assert result.passed, result.failures[:3]


def test_sweep_detects_broken_adder():
    adder = assemble(AdderParams(4))
    # drop the final negation of one b wire
    broken = AdderCircuit(adder.params, adder.layout, adder.circuit[:-1],
                          adder.phase_marks, adder.blocks, {})
    result = sweep(broken, *exhaustive_pairs(4))
    assert not result.passed
    assert len(result.failures) == 256
    failure = result.failures[0]
    assert set(failure) == {'a', 'b', 'expected', 'got', 'a_out',
                            'ancillae_clean'}
    assert failure['ancillae_clean']


def test_sweep_expanded_adder():
    adder = assemble(AdderParams(4, expand=True))
    with pytest.raises(NonClassicalGateError):
        sweep(adder, *random_pairs(4, 10, seed=1))


def test_sweep_shape_mismatch(adder4):
    a, b = random_pairs(4, 10, seed=3)
    with pytest.raises(ValueError):
        sweep(adder4, a, b[:5])


@pytest.mark.parametrize(("label", "a", "b", "val"),
                         (("a1", 1, 0, 1),
                          ("~a1", 1, 0, 0),
                          ("b2", 0, 2, 1),
                          ("p1", 1, 1, 0),
                          ("g1", 1, 1, 1),
                          ("c1", 15, 15, 0),
                          ("c2", 1, 1, 1),
                          ("c5", 8, 8, 1),
                          ("s2", 1, 1, 1),
                          ("~s2", 1, 1, 0),
                          ("G[1,2]", 3, 1, 1),
                          ("P[1,2]", 3, 1, 0),
                          ("P[2,4]", 14, 0, 1),
                          ("0", 15, 15, 0)),
                         ids=lambda x: x if isinstance(x, str) else None)
def test_label_value(label, a, b, val):
    assert label_value(label, a, b, 4) == val


@pytest.mark.parametrize("label",
                         ("x1", "a5", "c6", "P[3,2]", "G[1,5]", "a", ""),
                         ids=("symbol", "bit", "carry", "empty_range",
                              "range", "no_index", "blank"))
def test_label_value_invalid(label):
    with pytest.raises(ValueError):
        label_value(label, 0, 0, 4)


def test_labels_cover_phases(adder):
    labels = adder.labels
    assert set(labels) == set(PHASES) - {'prepare'}
    n_qubits = adder.layout.n_qubits
    for phase in ('uncompute', 'finalize'):
        assert len(labels[phase]) == n_qubits


@pytest.mark.parametrize(("a", "b"),
                         ((0, 0), (5, 12), (15, 15), (9, 6), (7, 1)),
                         ids=lambda x: str(x))
def test_check_labels_n4(adder4, a, b):
    assert check_labels(adder4, a, b) == []


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_check_labels(data):
    n = data.draw(st.sampled_from((4, 9, 16)))
    variant = data.draw(st.sampled_from(list(Variant)))
    a = data.draw(st.integers(0, 2 ** n - 1))
    b = data.draw(st.integers(0, 2 ** n - 1))
    adder = assemble(AdderParams(n, variant))
    assert check_labels(adder, a, b) == []


def test_trace_values(adder4):
    trace = trace_values(adder4, 5, 12)
    n_qubits = adder4.layout.n_qubits
    assert len(trace) == n_qubits * len(PHASES)
    b_wires = adder4.io_map['b']
    assert sum(trace[(q, 'finalize')] << i
               for i, q in enumerate(b_wires)) == 1


def test_trace_values_expanded():
    adder = assemble(AdderParams(4, expand=True))
    with pytest.raises(NonClassicalGateError):
        trace_values(adder, 1, 2)


@pytest.mark.parametrize(("a", "b"),
                         ((0, 0), (5, 12), (15, 15), (10, 3)),
                         ids=lambda x: str(x))
def test_cross_check(variant, nn_scheme, a, b):
    adder = assemble(AdderParams(4, variant, nn_scheme, expand=True))
    assert cross_check(adder, a, b) < 1e-8


def test_sweep_width_limit():
    adder = assemble(AdderParams(64))
    with pytest.raises(ValueError):
        sweep(adder, [0], [0])


def test_sweep_exhaustive_n9(variant):
    adder = assemble(AdderParams(9, variant))
    result = sweep(adder, *exhaustive_pairs(9))
    assert result.n_checked == 2 ** 18
    assert result.passed


def test_run_adder_n9_overflow():
    adder = assemble(AdderParams(9))
    state = run_adder(adder, 511, 1)
    assert read_register(adder, state, 'b') == 0
    assert read_register(adder, state, 'a') == 511


def test_count_blocks_n9_baseline():
    counts = assemble(AdderParams(9, Variant.BASELINE)).count_blocks()
    assert counts == {BK.HALF_ADDER: 1, BK.FULL_ADDER: 2, BK.GP: 6,
                      BK.BIGGP: 4, BK.COLUMN_CARRY: 2, BK.CARRY: 2,
                      BK.CARRY1: 2, BK.SUM2: 6, BK.SUM1: 2,
                      BK.SCRUB_LAST: 2, BK.SCRUB: 2, BK.TRANSPORT: 14}


def test_phase3_carries_follow_variant(variant):
    adder = assemble(AdderParams(9, variant))
    carries = [placed.instance for placed in adder.blocks
               if placed.phase == 'phase3'
               and placed.instance.kind in (BK.CARRY, BK.CARRY1)]
    assert [block.kind for block in carries] == [BK.CARRY, BK.CARRY1] * 2
    assert all(block.variant is variant for block in carries)


def test_count_blocks_n9_optimized():
    counts = assemble(AdderParams(9, Variant.OPTIMIZED)).count_blocks()
    assert counts == {BK.HALF_ADDER: 1, BK.FULL_ADDER: 2, BK.GP_FIRST: 2,
                      BK.GP: 4, BK.BIGGP_FIRST: 2, BK.BIGGP: 2,
                      BK.COLUMN_CARRY: 2, BK.CARRY: 2, BK.CARRY1: 2,
                      BK.SCRUB: 2, BK.SCRUB_SECOND: 2, BK.SUM: 8,
                      BK.TRANSPORT: 6}


def test_cross_check_all_inputs():
    adder = assemble(AdderParams(4, Variant.OPTIMIZED,
                                 DecompositionScheme.STANDARD_6CNOT,
                                 expand=True))
    worst = max(cross_check(adder, a, b)
                for a in range(16) for b in range(16))
    assert worst < 1e-8
