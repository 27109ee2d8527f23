# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        gates
# Purpose:     Gate and circuit representation
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


"""Gate and circuit representation."""

from __future__ import annotations

from enum import Enum
from typing import (
    Iterable, Iterator, Mapping, Sequence, Tuple, Union, overload,
)


class GateKind(Enum):

    """Enumeration of primitive gates."""

    __next_value__ = 1

    def __new__(cls, arity: int, classical: bool, doc: str) -> 'GateKind':
        """Return new member of the Enum."""
        member = object.__new__(cls)
        member._value_ = cls.__next_value__
        cls.__next_value__ += 1
        member.arity = arity
        member.classical = classical
        member.__doc__ = doc
        return member

    #: Pauli X (NOT).
    X = 1, True, 'Pauli X (NOT).'
    #: Hadamard.
    H = 1, False, 'Hadamard.'
    #: Phase gate diag(1, exp(i pi/4)).
    T = 1, False, 'Phase gate diag(1, exp(i pi/4)).'
    #: Inverse of T.
    Tdg = 1, False, 'Inverse of T.'
    #: Controlled NOT, qubits (control, target).
    CNOT = 2, True, 'Controlled NOT, qubits (control, target).'
    #: Exchange of two qubits.
    SWAP = 2, True, 'Exchange of two qubits.'
    #: Doubly controlled NOT, qubits (control, control, target).
    TOFFOLI = 3, True, \
        'Doubly controlled NOT, qubits (control, control, target).'

    @property
    def inverse(self) -> GateKind:
        """Kind of the inverse gate."""
        if self is GateKind.T:
            return GateKind.Tdg
        if self is GateKind.Tdg:
            return GateKind.T
        return self


class Gate:

    """Primitive gate applied to qubit indices.

    Args:
        kind: kind of the gate
        qubits: qubit indices; for CNOT and TOFFOLI the last index is the
            target

    Raises:
        TypeError: `kind` is not a :class:`GateKind`.
        ValueError: number of qubits does not match the arity of `kind`.
        ValueError: qubit indices are not pairwise distinct or negative.

    :class:`Gate` instances are immutable.
    """

    __slots__ = ('_kind', '_qubits')

    def __init__(self, kind: GateKind, *qubits: int) -> None:
        if not isinstance(kind, GateKind):
            raise TypeError(f"Gate kind must be a GateKind, not "
                            f"{type(kind).__name__}.")
        if len(qubits) != kind.arity:
            raise ValueError(f"{kind.name} needs {kind.arity} qubit(s), "
                             f"got {len(qubits)}.")
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"Qubits of {kind.name} must be distinct.")
        if any(q < 0 for q in qubits):
            raise ValueError("Qubit indices must be >= 0.")
        self._kind = kind
        self._qubits = tuple(int(q) for q in qubits)

    @property
    def kind(self) -> GateKind:
        """Kind of the gate."""
        return self._kind

    @property
    def qubits(self) -> Tuple[int, ...]:
        """Qubit indices the gate acts on."""
        return self._qubits

    @property
    def target(self) -> int:
        """Last qubit index."""
        return self._qubits[-1]

    def inverse(self) -> Gate:
        """Return the inverse gate."""
        if self._kind.inverse is self._kind:
            return self
        return Gate(self._kind.inverse, *self._qubits)

    def remap(self, mapping: Union[Sequence[int], Mapping[int, int]]) -> Gate:
        """Return copy of `self` with qubit q replaced by mapping[q]."""
        return Gate(self._kind, *(mapping[q] for q in self._qubits))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Gate):
            return (self._kind is other._kind
                    and self._qubits == other._qubits)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._kind, self._qubits))

    def __repr__(self) -> str:
        args = ', '.join(str(q) for q in self._qubits)
        return f"{self._kind.name}({args})"

    def __str__(self) -> str:
        return ' '.join([self._kind.name] + [str(q) for q in self._qubits])


class Circuit:

    """Ordered sequence of gates on a fixed number of qubits.

    Args:
        n_qubits: number of qubits
        gates: gates in application order
        label: free text

    Raises:
        ValueError: `n_qubits` < 0 or a gate uses an index >= `n_qubits`.

    :class:`Circuit` instances are immutable.
    """

    __slots__ = ('_n_qubits', '_gates', '_label')

    def __init__(self, n_qubits: int, gates: Iterable[Gate] = (),
                 label: str = '') -> None:
        if n_qubits < 0:
            raise ValueError("Number of qubits must be >= 0.")
        gates = tuple(gates)
        for gate in gates:
            if max(gate.qubits) >= n_qubits:
                raise ValueError(f"{gate!r} exceeds circuit of {n_qubits} "
                                 "qubits.")
        self._n_qubits = n_qubits
        self._gates = gates
        self._label = label

    @property
    def n_qubits(self) -> int:
        """Number of qubits."""
        return self._n_qubits

    @property
    def gates(self) -> Tuple[Gate, ...]:
        """Gates in application order."""
        return self._gates

    @property
    def label(self) -> str:
        """Free text label."""
        return self._label

    def count(self, kind: GateKind) -> int:
        """Return number of gates of given `kind`."""
        return sum(1 for gate in self._gates if gate.kind is kind)

    @property
    def is_classical(self) -> bool:
        """True if all gates are permutations of basis states."""
        return all(gate.kind.classical for gate in self._gates)

    def remap(self, mapping: Union[Sequence[int], Mapping[int, int]],
              n_qubits: int, label: str = None) -> Circuit:
        """Return circuit on `n_qubits` with qubit q mapped to mapping[q]."""
        return Circuit(n_qubits, (g.remap(mapping) for g in self._gates),
                       self._label if label is None else label)

    def with_label(self, label: str) -> Circuit:
        """Return copy of `self` with a different label."""
        return Circuit(self._n_qubits, self._gates, label)

    def __len__(self) -> int:
        return len(self._gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self._gates)

    @overload
    def __getitem__(self, key: int) -> Gate:
        ...

    @overload
    def __getitem__(self, key: slice) -> Circuit:
        ...

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Circuit(self._n_qubits, self._gates[key], self._label)
        return self._gates[key]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Circuit):
            return (self._n_qubits == other._n_qubits
                    and self._gates == other._gates)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n_qubits, self._gates))

    def __repr__(self) -> str:
        return (f"Circuit({self._n_qubits}, <{len(self._gates)} gates>, "
                f"label={self._label!r})")


def reverse(circuit: Circuit) -> Circuit:
    """Return the inverse of `circuit`.

    Gates are applied in reverse order, each replaced by its inverse (T and
    Tdg are exchanged, all other gates are self-inverse).
    """
    return Circuit(circuit.n_qubits,
                   (gate.inverse() for gate in reversed(circuit.gates)),
                   circuit.label)


def concat(circuits: Sequence[Circuit], label: str = None) -> Circuit:
    """Return concatenation of `circuits`.

    Raises:
        ValueError: `circuits` is empty or the circuits differ in their
            number of qubits.
    """
    if not circuits:
        raise ValueError("Need at least one circuit to concatenate.")
    n_qubits = circuits[0].n_qubits
    if any(c.n_qubits != n_qubits for c in circuits):
        raise ValueError("Circuits to concatenate must have the same number "
                         "of qubits.")
    if label is None:
        label = circuits[0].label
    return Circuit(n_qubits, (g for c in circuits for g in c.gates), label)


def format_gate_list(circuit: Circuit) -> str:
    """Return `circuit` in gate-list text format (one gate per line)."""
    lines = [f"# {circuit.label}" if circuit.label else "#",
             f"# qubits: {circuit.n_qubits}"]
    lines.extend(str(gate) for gate in circuit.gates)
    return '\n'.join(lines) + '\n'


def parse_gate_list(text: str, n_qubits: int = None) -> Circuit:
    """Parse gate-list text format.

    Lines of the form `KIND q0 [q1 [q2]]`; empty lines and lines starting
    with `#` are ignored, except for a `# qubits: <n>` line which gives the
    number of qubits when `n_qubits` is None.

    Raises:
        ValueError: unknown gate kind or malformed line.
    """
    gates = []
    declared = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith('#'):
            key, _, val = line[1:].partition(':')
            if key.strip() == 'qubits' and val.strip().isdigit():
                declared = int(val)
            continue
        kind_name, *args = line.split()
        try:
            kind = GateKind[kind_name]
        except KeyError:
            raise ValueError(f"Line {lineno}: unknown gate kind "
                             f"'{kind_name}'.") from None
        try:
            qubits = [int(arg) for arg in args]
        except ValueError:
            raise ValueError(f"Line {lineno}: qubit indices must be "
                             "integers.") from None
        gates.append(Gate(kind, *qubits))
    if n_qubits is None:
        if declared is not None:
            n_qubits = declared
        else:
            n_qubits = 1 + max((max(g.qubits) for g in gates), default=-1)
    return Circuit(n_qubits, gates)


__all__ = [
    'GateKind',
    'Gate',
    'Circuit',
    'reverse',
    'concat',
    'format_gate_list',
    'parse_gate_list',
]
