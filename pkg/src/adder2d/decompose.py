# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        decompose
# Purpose:     Clifford+T expansion of Toffoli gates
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


"""Clifford+T expansion of Toffoli gates.

Each scheme is given as a gate sequence on three collinear cells, called
head, mid and tail. In the standard arrangement the controls sit on head
and mid, the target on tail. SWAPs inside a sequence exchange the contents
of two cells, so later gates refer to cells, not to logical wires.
"""

from __future__ import annotations

from enum import Enum
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .gates import Circuit, Gate, GateKind
from .layout import AdjacencyError, GridLayout, is_adjacent
from .sim import CapacityError, apply_gate


#: Maximum number of qubits accepted by :func:`unitary_of`.
MAX_UNITARY_QUBITS = 12

_H, _T, _TD, _C, _S = (GateKind.H, GateKind.T, GateKind.Tdg, GateKind.CNOT,
                       GateKind.SWAP)

# sequences on cells 0 (head), 1 (mid), 2 (tail)
_STANDARD_SEQ = (
    (_H, 2), (_C, 1, 2), (_TD, 2), (_S, 1, 2), (_C, 0, 1), (_T, 1),
    (_C, 2, 1), (_TD, 1), (_C, 0, 1), (_S, 1, 2), (_T, 1), (_T, 2),
    (_C, 0, 1), (_H, 2), (_T, 0), (_TD, 1), (_C, 0, 1),
)
_DEPTH8_SEQ = (
    (_TD, 0), (_TD, 1), (_H, 2), (_C, 2, 0), (_C, 1, 2), (_T, 0),
    (_C, 1, 0), (_T, 2), (_TD, 0), (_C, 1, 2), (_C, 2, 0), (_T, 0),
    (_TD, 2), (_C, 1, 0), (_H, 2),
)
_PERES_SEQ = (
    (_T, 0), (_T, 1), (_H, 2), (_C, 2, 1), (_S, 1, 2), (_C, 0, 1),
    (_TD, 2), (_TD, 1), (_C, 0, 1), (_S, 1, 2), (_C, 0, 1), (_T, 1),
    (_T, 2), (_C, 2, 1), (_TD, 1), (_H, 2), (_C, 0, 1),
)


class DecompositionScheme(Enum):

    """Enumeration of Toffoli expansions."""

    __next_value__ = 1

    def __new__(cls, key: str, seq: Tuple[Tuple, ...],
                doc: str) -> 'DecompositionScheme':
        """Return new member of the Enum."""
        member = object.__new__(cls)
        member._value_ = cls.__next_value__
        cls.__next_value__ += 1
        member.key = key
        member.seq = seq
        member.__doc__ = doc
        return member

    #: Six CNOTs on a line of neighbours, two SWAPs.
    STANDARD_6CNOT = ('standard', _STANDARD_SEQ,
                      'Six CNOTs on a line of neighbours, two SWAPs.')
    #: Six CNOTs in eight layers; needs all three pairs to interact.
    DEPTH8_6CNOT = ('depth8', _DEPTH8_SEQ,
                    'Six CNOTs in eight layers; needs all three pairs to '
                    'interact.')
    #: Peres based, two SWAPs, depth 6C+2S+4.
    PERES_BASED = ('peres', _PERES_SEQ,
                   'Peres based, two SWAPs, depth 6C+2S+4.')

    @classmethod
    def from_key(cls, key: str) -> DecompositionScheme:
        """Return scheme with given short name (standard, depth8, peres).

        Raises:
            ValueError: unknown key
        """
        for scheme in cls:
            if scheme.key == key:
                return scheme
        raise ValueError(f"Unknown scheme: {key!r}; supported: "
                         f"{', '.join(s.key for s in cls)}.")


class LinePlacement(NamedTuple):
    """Three collinear neighbouring cells (qubit indices) head, mid, tail.

    Without `target_middle` the controls are on head and mid and the target
    is on tail. With `target_middle` the target is on mid and the controls
    on head and tail.
    """

    head: int
    mid: int
    tail: int
    target_middle: bool = False

    @property
    def line(self) -> Tuple[int, int, int]:
        """Qubits in line order."""
        return self.head, self.mid, self.tail

    @property
    def target(self) -> int:
        """Qubit holding the target."""
        return self.mid if self.target_middle else self.tail


def _sequence(scheme: DecompositionScheme,
              target_middle: bool) -> List[Tuple]:
    seq = list(scheme.seq)
    if not target_middle:
        return seq
    exchange = {0: 0, 1: 2, 2: 1}
    swaps = [i for i, (kind, *_) in enumerate(seq) if kind is _S]
    if not swaps:
        return [(kind, *(exchange[c] for c in cells))
                for kind, *cells in seq]
    # gates before the first SWAP see mid and tail exchanged; the SWAP
    # itself is dropped and one SWAP restores the placement at the end
    first = swaps[0]
    prefix = [(kind, *(exchange[c] for c in cells))
              for kind, *cells in seq[:first]]
    return prefix + seq[first + 1:] + [(_S, 1, 2)]


def expand_toffoli(scheme: DecompositionScheme, placement: LinePlacement,
                   n_qubits: int = None) -> Circuit:
    """Return the gate sequence of `scheme` on the cells of `placement`.

    Args:
        scheme: decomposition to use
        placement: cells and position of the target
        n_qubits: size of the returned circuit (default: largest index + 1)

    Returns:
        circuit whose net effect is a Toffoli with the target on
        `placement.target`; every data movement by SWAPs is undone
    """
    line = placement.line
    if n_qubits is None:
        n_qubits = max(line) + 1
    gates = [Gate(kind, *(line[c] for c in cells))
             for kind, *cells in _sequence(scheme, placement.target_middle)]
    return Circuit(n_qubits, gates, f"toffoli-{scheme.key}")


class GateCounts(NamedTuple):
    """Gate counts of a Toffoli expansion."""

    cnot: int
    swap: int
    h: int
    t_count: int


def gate_counts(scheme: DecompositionScheme) -> GateCounts:
    """Return CNOT, SWAP, H and T/Tdg counts of `scheme`'s expansion."""
    circuit = expand_toffoli(scheme, LinePlacement(0, 1, 2))
    return GateCounts(circuit.count(_C), circuit.count(_S),
                      circuit.count(_H),
                      circuit.count(_T) + circuit.count(_TD))


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Return the dense unitary of `circuit` (little-endian basis).

    Raises:
        CapacityError: more than MAX_UNITARY_QUBITS qubits.
    """
    n_qubits = circuit.n_qubits
    if n_qubits > MAX_UNITARY_QUBITS:
        raise CapacityError(f"Unitary is limited to {MAX_UNITARY_QUBITS} "
                            f"qubits, got {n_qubits}.")
    dim = 2 ** n_qubits
    tensor = np.eye(dim, dtype=complex).reshape((2,) * n_qubits + (dim,))
    for gate in circuit.gates:
        tensor = apply_gate(tensor, gate, n_qubits)
    return tensor.reshape(dim, dim)


def toffoli_matrix(n_qubits: int, controls: Sequence[int],
                   target: int) -> np.ndarray:
    """Return the permutation matrix of a Toffoli on `n_qubits`."""
    dim = 2 ** n_qubits
    mat = np.zeros((dim, dim))
    c1, c2 = controls
    for idx in range(dim):
        out = idx ^ (((idx >> c1) & (idx >> c2) & 1) << target)
        mat[out, idx] = 1
    return mat


def equal_up_to_phase(u: np.ndarray, v: np.ndarray) -> Tuple[bool, float]:
    """Compare two unitaries up to global phase.

    Returns:
        (equal, max elementwise error after removing the phase)
    """
    overlap = np.trace(u.conj().T @ v)
    dim = u.shape[0]
    if abs(abs(overlap) - dim) > 1e-10:
        phase = 1.0
    else:
        phase = overlap / abs(overlap)
    err = float(np.max(np.abs(u * phase - v)))
    return err < 1e-10, err


def verify_toffoli(scheme: DecompositionScheme,
                   target_middle: bool = False) -> Tuple[bool, float]:
    """Check the expansion of `scheme` against the Toffoli permutation.

    Any net permutation of the cells left by the expansion's SWAPs is
    folded into the reference before comparing.

    Returns:
        (passed, max elementwise error), passed iff error < 1e-10
    """
    placement = LinePlacement(0, 1, 2, target_middle)
    circuit = expand_toffoli(scheme, placement)
    controls = [q for q in placement.line if q != placement.target]
    reference = toffoli_matrix(3, controls, placement.target)
    # the SWAPs of the expansion, taken alone, give its net cell permutation
    swaps = Circuit(3, (g for g in circuit.gates if g.kind is _S))
    reference = unitary_of(swaps) @ reference
    return equal_up_to_phase(unitary_of(circuit), reference)


def _line_for(layout: GridLayout, gate: Gate) -> LinePlacement:
    c1, c2, t = gate.qubits

    def adj(q1: int, q2: int) -> bool:
        return is_adjacent(layout, q1, q2)

    if adj(c2, t) and adj(c1, c2):
        return LinePlacement(c1, c2, t)
    if adj(c1, t) and adj(c2, c1):
        return LinePlacement(c2, c1, t)
    if adj(t, c1) and adj(t, c2):
        return LinePlacement(c1, t, c2, target_middle=True)
    raise AdjacencyError(f"{gate!r} does not act on a line of neighbours.")


def expand_circuit(circuit: Circuit, layout: GridLayout,
                   scheme: DecompositionScheme) -> Circuit:
    """Replace every Toffoli of `circuit` by its expansion under `scheme`.

    The line placement of each Toffoli is derived from the grid.

    Raises:
        AdjacencyError: a Toffoli's cells do not form a path of neighbours,
            or the expansion under `scheme` needs an interaction between
            non-neighbouring cells.
    """
    n_qubits = circuit.n_qubits
    gates = []
    for gate in circuit.gates:
        if gate.kind is not GateKind.TOFFOLI:
            gates.append(gate)
            continue
        expansion = expand_toffoli(scheme, _line_for(layout, gate), n_qubits)
        for sub in expansion.gates:
            if len(sub.qubits) == 2 and not is_adjacent(layout, *sub.qubits):
                raise AdjacencyError(
                    f"Scheme {scheme.key} places {sub!r} on non-neighbouring "
                    f"cells when expanding {gate!r}.")
        gates.extend(expansion.gates)
    return Circuit(n_qubits, gates, circuit.label)


__all__ = [
    'DecompositionScheme',
    'GateCounts',
    'LinePlacement',
    'MAX_UNITARY_QUBITS',
    'equal_up_to_phase',
    'expand_circuit',
    'expand_toffoli',
    'gate_counts',
    'toffoli_matrix',
    'unitary_of',
    'verify_toffoli',
]
