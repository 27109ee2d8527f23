# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        sim
# Purpose:     Basis-state and statevector simulation
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


"""Basis-state and statevector simulation.

Basis ordering is little-endian: qubit 0 is the least significant bit of a
basis index.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import (
    TYPE_CHECKING, Any, Dict, Iterable, List, NamedTuple, Optional,
    Sequence, Tuple, Union,
)

import numpy as np

from .config import get_max_threads
from .gates import Circuit, Gate, GateKind

if TYPE_CHECKING:  # pragma: no cover
    from .adder import AdderCircuit


LOGGER = logging.getLogger(__name__)

#: Maximum number of qubits accepted by the statevector simulator.
MAX_STATEVECTOR_QUBITS = 14

#: Largest adder width accepted by :func:`sweep` (summands held as int64).
MAX_SWEEP_WIDTH = 62

_SQRT2_INV = 1 / np.sqrt(2)
_T = np.exp(1j * np.pi / 4)
_H = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
_PHASE = {GateKind.T: _T, GateKind.Tdg: np.conj(_T)}


class NonClassicalGateError(ValueError):
    """Circuit holds a gate which does not map basis states to basis
    states."""


class CapacityError(ValueError):
    """Dense simulation would exceed the qubit cap."""


class BasisState:

    """Classical assignment of one bit per qubit.

    Args:
        bits: sequence of 0/1 values, bits[q] is the value of qubit q

    Raises:
        ValueError: a value is neither 0 nor 1.

    :class:`BasisState` instances are immutable.
    """

    __slots__ = ('_bits',)

    def __init__(self, bits: Iterable[int]) -> None:
        bits = tuple(int(bit) for bit in bits)
        if any(bit not in (0, 1) for bit in bits):
            raise ValueError("Bits must be 0 or 1.")
        self._bits = bits

    @classmethod
    def from_assignment(cls, n_qubits: int,
                        assignment: Dict[int, int]) -> BasisState:
        """Return state with given qubits set, all others 0."""
        bits = [0] * n_qubits
        for q, bit in assignment.items():
            bits[q] = bit
        return cls(bits)

    @classmethod
    def from_index(cls, n_qubits: int, index: int) -> BasisState:
        """Return state for basis `index` (little-endian)."""
        return cls((index >> q) & 1 for q in range(n_qubits))

    @property
    def bits(self) -> Tuple[int, ...]:
        """Bit values, indexed by qubit."""
        return self._bits

    @property
    def index(self) -> int:
        """Basis index (little-endian)."""
        return sum(bit << q for q, bit in enumerate(self._bits))

    def __len__(self) -> int:
        return len(self._bits)

    def __getitem__(self, q: int) -> int:
        return self._bits[q]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BasisState):
            return self._bits == other._bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        return f"BasisState('{''.join(str(b) for b in self._bits)}')"


class StateVector:

    """Dense vector of 2**n complex amplitudes.

    :class:`StateVector` instances are immutable.
    """

    __slots__ = ('_n_qubits', '_amplitudes')

    def __init__(self, n_qubits: int, amplitudes: np.ndarray) -> None:
        amplitudes = np.array(amplitudes, dtype=complex).reshape(-1)
        if amplitudes.size != 2 ** n_qubits:
            raise ValueError(f"Need {2 ** n_qubits} amplitudes for "
                             f"{n_qubits} qubits, got {amplitudes.size}.")
        amplitudes.flags.writeable = False
        self._n_qubits = n_qubits
        self._amplitudes = amplitudes

    @classmethod
    def from_basis_state(cls, state: BasisState) -> StateVector:
        """Return statevector of the classical `state`."""
        amplitudes = np.zeros(2 ** len(state), dtype=complex)
        amplitudes[state.index] = 1
        return cls(len(state), amplitudes)

    @property
    def n_qubits(self) -> int:
        """Number of qubits."""
        return self._n_qubits

    @property
    def amplitudes(self) -> np.ndarray:
        """Read-only array of amplitudes."""
        return self._amplitudes

    def norm(self) -> float:
        """Return L2 norm."""
        return float(np.linalg.norm(self._amplitudes))

    def probability(self, index: int) -> float:
        """Return probability of basis `index`."""
        return float(abs(self._amplitudes[index]) ** 2)

    def most_likely(self) -> BasisState:
        """Return basis state with the largest amplitude magnitude."""
        index = int(np.argmax(np.abs(self._amplitudes)))
        return BasisState.from_index(self._n_qubits, index)

    def off_target_mass(self, state: BasisState) -> float:
        """Return total probability outside of basis `state`."""
        return max(0.0, 1.0 - self.probability(state.index))

    def __repr__(self) -> str:
        return f"StateVector(n_qubits={self._n_qubits})"


def _axis(q: int, n_qubits: int) -> int:
    return n_qubits - 1 - q


def apply_gate(tensor: np.ndarray, gate: Gate, n_qubits: int) -> np.ndarray:
    """Apply `gate` to `tensor` of shape (2,) * n_qubits + extra.

    Leading axes index the qubits (axis 0 = qubit n_qubits - 1), trailing
    axes are carried along unchanged. Returns a new array.
    """
    kind = gate.kind
    axes = [_axis(q, n_qubits) for q in gate.qubits]
    if kind is GateKind.SWAP:
        return np.swapaxes(tensor, *axes).copy()
    if kind is GateKind.H:
        moved = np.moveaxis(tensor, axes[0], 0)
        moved = np.tensordot(_H, moved, axes=([1], [0]))
        return np.moveaxis(moved, 0, axes[0])
    res = tensor.copy()
    idx = [slice(None)] * tensor.ndim
    if kind in _PHASE:
        idx[axes[0]] = 1
        res[tuple(idx)] *= _PHASE[kind]
        return res
    # X, CNOT, TOFFOLI: controls set, flip target
    for ax in axes[:-1]:
        idx[ax] = 1
    lo, hi = list(idx), list(idx)
    lo[axes[-1]], hi[axes[-1]] = 0, 1
    lo, hi = tuple(lo), tuple(hi)
    res[lo], res[hi] = tensor[hi], tensor[lo]
    return res


def _check_capacity(n_qubits: int, cap: int) -> None:
    if n_qubits > cap:
        raise CapacityError(f"Dense simulation is limited to {cap} qubits, "
                            f"got {n_qubits}.")


def _check_classical(circuit: Circuit) -> None:
    for pos, gate in enumerate(circuit.gates):
        if not gate.kind.classical:
            raise NonClassicalGateError(
                f"Gate #{pos} {gate!r} is not classical; use "
                "run_statevector instead.")


def run_classical(circuit: Circuit, state: BasisState) -> BasisState:
    """Apply the permutation gates of `circuit` to basis `state`.

    Raises:
        ValueError: `state` does not match the circuit's qubit count.
        NonClassicalGateError: circuit holds H, T or Tdg.
    """
    if len(state) != circuit.n_qubits:
        raise ValueError(f"State has {len(state)} bits, circuit "
                         f"{circuit.n_qubits} qubits.")
    _check_classical(circuit)
    bits = list(state.bits)
    for gate in circuit.gates:
        kind, qubits = gate.kind, gate.qubits
        if kind is GateKind.X:
            bits[qubits[0]] ^= 1
        elif kind is GateKind.CNOT:
            bits[qubits[1]] ^= bits[qubits[0]]
        elif kind is GateKind.SWAP:
            q1, q2 = qubits
            bits[q1], bits[q2] = bits[q2], bits[q1]
        else:
            bits[qubits[2]] ^= bits[qubits[0]] & bits[qubits[1]]
    return BasisState(bits)


def run_classical_batch(circuit: Circuit, bits: np.ndarray) -> np.ndarray:
    """Apply `circuit` to a batch of basis states.

    Args:
        circuit: classical circuit
        bits: boolean array of shape (batch, n_qubits)

    Returns:
        new boolean array of the same shape

    Raises:
        ValueError: shape of `bits` does not match the circuit.
        NonClassicalGateError: circuit holds H, T or Tdg.
    """
    bits = np.array(bits, dtype=bool)
    if bits.ndim != 2 or bits.shape[1] != circuit.n_qubits:
        raise ValueError(f"Expected array of shape (batch, "
                         f"{circuit.n_qubits}), got {bits.shape}.")
    _check_classical(circuit)
    for gate in circuit.gates:
        kind, qubits = gate.kind, gate.qubits
        if kind is GateKind.X:
            bits[:, qubits[0]] ^= True
        elif kind is GateKind.CNOT:
            bits[:, qubits[1]] ^= bits[:, qubits[0]]
        elif kind is GateKind.SWAP:
            bits[:, list(qubits)] = bits[:, list(reversed(qubits))]
        else:
            bits[:, qubits[2]] ^= bits[:, qubits[0]] & bits[:, qubits[1]]
    return bits


def run_statevector(circuit: Circuit,
                    state: Union[BasisState, StateVector]) -> StateVector:
    """Evolve `state` through `circuit` densely.

    Raises:
        CapacityError: circuit has more than MAX_STATEVECTOR_QUBITS qubits.
        ValueError: `state` does not match the circuit's qubit count.
    """
    n_qubits = circuit.n_qubits
    _check_capacity(n_qubits, MAX_STATEVECTOR_QUBITS)
    if isinstance(state, BasisState):
        state = StateVector.from_basis_state(state)
    if state.n_qubits != n_qubits:
        raise ValueError(f"State has {state.n_qubits} qubits, circuit "
                         f"{n_qubits}.")
    tensor = state.amplitudes.reshape((2,) * n_qubits)
    for gate in circuit.gates:
        tensor = apply_gate(tensor, gate, n_qubits)
    return StateVector(n_qubits, tensor)


# sweeps over adder inputs

class SweepResult(NamedTuple):
    """Outcome of checking an adder on many input pairs."""

    n_checked: int
    failures: List[Dict[str, Any]]

    @property
    def passed(self) -> bool:
        """True if no failures were recorded."""
        return not self.failures


def exhaustive_pairs(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Return all 4**n input pairs (a, b) as two arrays."""
    a, b = np.meshgrid(np.arange(2 ** n, dtype=np.int64),
                       np.arange(2 ** n, dtype=np.int64), indexing='ij')
    return a.reshape(-1), b.reshape(-1)


def random_pairs(n: int, samples: int,
                 seed: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Return `samples` uniformly drawn input pairs (a, b)."""
    rng = np.random.default_rng(seed)
    return (rng.integers(0, 2 ** n, size=samples, dtype=np.int64),
            rng.integers(0, 2 ** n, size=samples, dtype=np.int64))


def _encode(values: np.ndarray, wires: Sequence[int],
            bits: np.ndarray) -> None:
    for i, q in enumerate(wires):
        bits[:, q] = (values >> i) & 1


def _decode(bits: np.ndarray, wires: Sequence[int]) -> np.ndarray:
    values = np.zeros(bits.shape[0], dtype=np.int64)
    for i, q in enumerate(wires):
        values |= bits[:, q].astype(np.int64) << i
    return values


def _check_chunk(adder: AdderCircuit, a: np.ndarray,
                 b: np.ndarray) -> List[Dict[str, Any]]:
    io_map = adder.io_map
    a_wires, b_wires = io_map['a'], io_map['b']
    n = len(a_wires)
    bits = np.zeros((a.size, adder.circuit.n_qubits), dtype=bool)
    _encode(a, a_wires, bits)
    _encode(b, b_wires, bits)
    out = run_classical_batch(adder.circuit, bits)
    s = _decode(out, b_wires)
    a_out = _decode(out, a_wires)
    expected = (a + b) & ((1 << n) - 1)
    anc_clean = ~out[:, io_map['ancilla']].any(axis=1)
    bad = np.flatnonzero((s != expected) | (a_out != a) | ~anc_clean)
    return [{'a': int(a[i]), 'b': int(b[i]), 'expected': int(expected[i]),
             'got': int(s[i]), 'a_out': int(a_out[i]),
             'ancillae_clean': bool(anc_clean[i])}
            for i in bad]


def sweep(adder: AdderCircuit, a: np.ndarray, b: np.ndarray,
          chunk_size: int = 1 << 14,
          max_threads: Optional[int] = None) -> SweepResult:
    """Check `adder` on the input pairs (a[i], b[i]).

    Each pair must give s = (a + b) mod 2**n on the b wires, leave the a
    wires unchanged and return every ancilla to 0. Chunks of pairs are
    checked in parallel on up to `max_threads` threads (default: see
    :func:`adder2d.config.get_max_threads`).

    Raises:
        ValueError: adder is wider than MAX_SWEEP_WIDTH, or `a` and `b`
            differ in shape.
        NonClassicalGateError: adder circuit is fully decomposed.
    """
    if adder.params.n > MAX_SWEEP_WIDTH:
        raise ValueError(f"Sweeps are limited to n <= {MAX_SWEEP_WIDTH}, "
                         f"got {adder.params.n}.")
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError("Input arrays must have equal shape.")
    _check_classical(adder.circuit)
    if max_threads is None:
        max_threads = get_max_threads()
    starts = range(0, a.size, chunk_size)
    LOGGER.info("Checking %d input pairs in %d chunk(s) on up to %d "
                "thread(s).", a.size, len(starts), max_threads)
    with ThreadPoolExecutor(max_workers=max_threads) as pool:
        results = pool.map(lambda start: _check_chunk(
            adder, a[start:start + chunk_size], b[start:start + chunk_size]),
            starts)
        failures = [failure for chunk in results for failure in chunk]
    if failures:
        LOGGER.warning("%d of %d input pairs failed.", len(failures), a.size)
    return SweepResult(int(a.size), failures)


__all__ = [
    'BasisState',
    'CapacityError',
    'MAX_STATEVECTOR_QUBITS',
    'MAX_SWEEP_WIDTH',
    'NonClassicalGateError',
    'StateVector',
    'SweepResult',
    'apply_gate',
    'exhaustive_pairs',
    'random_pairs',
    'run_classical',
    'run_classical_batch',
    'run_statevector',
    'sweep',
]
