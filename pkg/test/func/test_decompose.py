#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        test_decompose
# Purpose:     Test driver for package 'adder2d' (Toffoli expansions)
#
# Author:      Michael Amrhein (michael@adrhinum.de)
#
# Copyright:   (c) 2024 Michael Amrhein
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


"""Test driver for package 'adder2d' (Toffoli expansions)."""


import numpy as np
import pytest

from adder2d.adder import AdderParams, assemble
from adder2d.decompose import (
    DecompositionScheme, LinePlacement, equal_up_to_phase, expand_circuit,
    expand_toffoli, gate_counts, toffoli_matrix, unitary_of, verify_toffoli,
)
from adder2d.gates import Circuit, Gate, GateKind, concat, reverse
from adder2d.layout import AdjacencyError, build_layout, check_adjacency
from adder2d.schedule import CostModel, asap_depth
from adder2d.sim import BasisState, CapacityError, run_statevector

UNIT_COST = CostModel(1, 1, 1, 1)


@pytest.mark.parametrize("target_middle", (False, True),
                         ids=("target_tail", "target_mid"))
def test_verify_toffoli(scheme, target_middle):
    passed, err = verify_toffoli(scheme, target_middle)
    assert passed
    assert err < 1e-10


@pytest.mark.parametrize(("scheme", "counts"),
                         ((DecompositionScheme.STANDARD_6CNOT, (6, 2, 2, 7)),
                          (DecompositionScheme.DEPTH8_6CNOT, (6, 0, 2, 7)),
                          (DecompositionScheme.PERES_BASED, (6, 2, 2, 7))),
                         ids=("standard", "depth8", "peres"))
def test_gate_counts(scheme, counts):
    assert tuple(gate_counts(scheme)) == counts


@pytest.mark.parametrize(("scheme", "depth"),
                         ((DecompositionScheme.STANDARD_6CNOT, 14),
                          (DecompositionScheme.DEPTH8_6CNOT, 8),
                          (DecompositionScheme.PERES_BASED, 12)),
                         ids=("standard", "depth8", "peres"))
def test_unit_depth(scheme, depth):
    circuit = expand_toffoli(scheme, LinePlacement(0, 1, 2))
    assert asap_depth(circuit, UNIT_COST) == depth


def test_expansion_is_nearest_neighbour(nn_scheme):
    for target_middle in (False, True):
        circuit = expand_toffoli(nn_scheme,
                                 LinePlacement(5, 6, 7, target_middle))
        for gate in circuit:
            if len(gate.qubits) == 2:
                assert abs(gate.qubits[0] - gate.qubits[1]) == 1


def test_depth8_needs_triangle():
    circuit = expand_toffoli(DecompositionScheme.DEPTH8_6CNOT,
                             LinePlacement(0, 1, 2))
    pairs = {frozenset(g.qubits) for g in circuit if len(g.qubits) == 2}
    assert frozenset((0, 2)) in pairs


def test_expand_toffoli_n_qubits():
    placement = LinePlacement(3, 1, 2)
    circuit = expand_toffoli(DecompositionScheme.PERES_BASED, placement)
    assert circuit.n_qubits == 4
    assert placement.line == (3, 1, 2)
    assert placement.target == 2
    assert LinePlacement(3, 1, 2, True).target == 1
    circuit = expand_toffoli(DecompositionScheme.PERES_BASED, placement, 9)
    assert circuit.n_qubits == 9


@pytest.mark.parametrize("key",
                         ("standard", "depth8", "peres"))
def test_scheme_from_key(key):
    assert DecompositionScheme.from_key(key).key == key


def test_scheme_from_key_unknown():
    with pytest.raises(ValueError):
        DecompositionScheme.from_key('ccz')


def test_unitary_of_cnot():
    # little-endian: basis index bit 0 is qubit 0
    u = unitary_of(Circuit(2, [Gate(GateKind.CNOT, 0, 1)]))
    expected = np.zeros((4, 4))
    for src, dst in ((0, 0), (1, 3), (2, 2), (3, 1)):
        expected[dst, src] = 1
    assert np.allclose(u, expected)


def test_unitary_of_toffoli():
    u = unitary_of(Circuit(3, [Gate(GateKind.TOFFOLI, 2, 0, 1)]))
    assert np.allclose(u, toffoli_matrix(3, (2, 0), 1))


def test_unitary_of_capacity():
    with pytest.raises(CapacityError):
        unitary_of(Circuit(13))


def test_equal_up_to_phase():
    u = unitary_of(Circuit(1, [Gate(GateKind.H, 0)]))
    equal, err = equal_up_to_phase(u, 1j * u)
    assert equal
    assert err < 1e-12
    equal, err = equal_up_to_phase(u, np.eye(2))
    assert not equal
    assert err > 0.1


def test_expand_circuit_replaces_toffolis():
    layout = build_layout(4)
    circuit = Circuit(13, [Gate(GateKind.X, 1),
                           Gate(GateKind.TOFFOLI, 1, 3, 5),
                           Gate(GateKind.TOFFOLI, 0, 2, 1)])
    expanded = expand_circuit(circuit, layout,
                              DecompositionScheme.STANDARD_6CNOT)
    assert expanded.count(GateKind.TOFFOLI) == 0
    assert len(expanded) == 1 + 2 * 17
    assert expanded[0] == Gate(GateKind.X, 1)
    assert check_adjacency(expanded, layout) == []


def test_expand_circuit_not_on_line():
    layout = build_layout(4)
    circuit = Circuit(13, [Gate(GateKind.TOFFOLI, 1, 5, 9)])
    with pytest.raises(AdjacencyError):
        expand_circuit(circuit, layout, DecompositionScheme.STANDARD_6CNOT)


def test_expand_circuit_depth8_rejected():
    layout = build_layout(4)
    circuit = Circuit(13, [Gate(GateKind.TOFFOLI, 1, 3, 5)])
    with pytest.raises(AdjacencyError):
        expand_circuit(circuit, layout, DecompositionScheme.DEPTH8_6CNOT)
    with pytest.raises(AdjacencyError):
        assemble(AdderParams(4, scheme=DecompositionScheme.DEPTH8_6CNOT,
                             expand=True))


def test_expanded_adder_adjacency(variant, width, nn_scheme):
    adder = assemble(AdderParams(width, variant, nn_scheme, expand=True))
    assert adder.circuit.count(GateKind.TOFFOLI) == 0
    assert check_adjacency(adder.circuit, adder.layout) == []


def test_expansion_then_reverse_is_identity(scheme):
    circuit = expand_toffoli(scheme, LinePlacement(0, 1, 2))
    both = concat([circuit, reverse(circuit)])
    equal, _ = equal_up_to_phase(unitary_of(both), np.eye(8))
    assert equal


def test_expanded_toffoli_on_basis_state(nn_scheme):
    circuit = expand_toffoli(nn_scheme, LinePlacement(0, 1, 2))
    out = run_statevector(circuit, BasisState([1, 1, 0]))
    assert abs(out.amplitudes[BasisState([1, 1, 1]).index]) == \
        pytest.approx(1, abs=1e-10)


def test_peres_mid_phase_is_tdg():
    circuit = expand_toffoli(DecompositionScheme.PERES_BASED,
                             LinePlacement(0, 1, 2))
    gates = list(circuit.gates)
    assert gates[7] == Gate(GateKind.Tdg, 1)
    reference = toffoli_matrix(3, (0, 1), 2)
    equal, _ = equal_up_to_phase(unitary_of(circuit), reference)
    assert equal
    # T instead of Tdg on the middle cell is no Toffoli
    gates[7] = Gate(GateKind.T, 1)
    equal, err = equal_up_to_phase(unitary_of(Circuit(3, gates)),
                                   reference)
    assert not equal
    assert err > 0.1
