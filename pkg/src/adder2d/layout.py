# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        layout
# Purpose:     Qubit placement on the 2D nearest-neighbour grid
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


"""Qubit placement on the 2D nearest-neighbour grid.

The grid has 4m-1 rows and m columns for an adder of width n = m*m. Column 0
holds bits 1..m as triples (a, b, ancilla) below m-1 unused cells. Every
other column k holds bits km+1..km+m: one triple (a, b, ancilla) followed by
m-1 quadruples (a, b, ancilla, ancilla). Qubit indices enumerate the used
cells row by row.
"""

from __future__ import annotations

import json
from enum import Enum
from functools import lru_cache
from math import isqrt
from typing import Dict, List, NamedTuple, Optional, Tuple

from .gates import Circuit, Gate, GateKind


Cell = Tuple[int, int]


class AdjacencyError(ValueError):
    """Gate acts on qubits which are not neighbours on the grid."""


class RoleKind(Enum):

    """Semantic identity of a grid cell."""

    __next_value__ = 1

    def __new__(cls, tag: str) -> 'RoleKind':
        """Return new member of the Enum."""
        member = object.__new__(cls)
        member._value_ = cls.__next_value__
        cls.__next_value__ += 1
        member.tag = tag
        return member

    #: Input bit of the first summand.
    A = 'a'
    #: Input bit of the second summand (receives the sum bit).
    B = 'b'
    #: Helper qubit, 0 before and after the addition.
    ANCILLA = 'anc'
    #: Cell without a qubit.
    UNUSED = '-'


class WireRole(NamedTuple):
    """Role of a grid cell, tagged with a 1-based index (0 for UNUSED)."""

    kind: RoleKind
    index: int = 0

    def __str__(self) -> str:
        if self.kind is RoleKind.UNUSED:
            return self.kind.tag
        return f"{self.kind.tag}{self.index}"


UNUSED = WireRole(RoleKind.UNUSED)


def _check_width(n: int) -> int:
    if not isinstance(n, int):
        raise TypeError("n must be of type 'int'.")
    m = isqrt(n) if n >= 0 else 0
    if n < 4 or m * m != n:
        raise ValueError(f"n must be a perfect square >= 4, got {n}.")
    return m


class GridLayout:

    """Placement of the adder's wires on the grid.

    Use :func:`build_layout` to get an instance.

    :class:`GridLayout` instances are immutable.
    """

    __slots__ = ('_n', '_m', '_placement', '_cells', '_index',
                 '_wire_index')

    def __init__(self, n: int) -> None:
        m = _check_width(n)
        rows = 4 * m - 1
        placement: Dict[Cell, WireRole] = {}
        bit = 0
        for row in range(m - 1):
            placement[(row, 0)] = UNUSED
        for j in range(m):
            bit += 1
            row = m - 1 + 3 * j
            placement[(row, 0)] = WireRole(RoleKind.A, bit)
            placement[(row + 1, 0)] = WireRole(RoleKind.B, bit)
            placement[(row + 2, 0)] = WireRole(RoleKind.ANCILLA)
        for col in range(1, m):
            for j in range(m):
                bit += 1
                row = 0 if j == 0 else 3 + 4 * (j - 1)
                placement[(row, col)] = WireRole(RoleKind.A, bit)
                placement[(row + 1, col)] = WireRole(RoleKind.B, bit)
                placement[(row + 2, col)] = WireRole(RoleKind.ANCILLA)
                if j > 0:
                    placement[(row + 3, col)] = WireRole(RoleKind.ANCILLA)
        cells = [(row, col) for row in range(rows) for col in range(m)
                 if placement[(row, col)] is not UNUSED]
        # number the ancillae in qubit order
        n_anc = 0
        for cell in cells:
            if placement[cell].kind is RoleKind.ANCILLA:
                n_anc += 1
                placement[cell] = WireRole(RoleKind.ANCILLA, n_anc)
        self._n = n
        self._m = m
        self._placement = placement
        self._cells = tuple(cells)
        self._index = {cell: q for q, cell in enumerate(cells)}
        self._wire_index = {placement[cell]: q
                            for q, cell in enumerate(cells)}

    @property
    def n(self) -> int:
        """Width of the adder."""
        return self._n

    @property
    def m(self) -> int:
        """Square root of the width (number of columns)."""
        return self._m

    @property
    def rows(self) -> int:
        """Number of grid rows."""
        return 4 * self._m - 1

    @property
    def cols(self) -> int:
        """Number of grid columns."""
        return self._m

    @property
    def n_qubits(self) -> int:
        """Number of used cells."""
        return len(self._cells)

    @property
    def placement(self) -> Dict[Cell, WireRole]:
        """Map from (row, col) to the role of the cell."""
        return dict(self._placement)

    @property
    def wire_index(self) -> Dict[WireRole, int]:
        """Map from role of a used cell to its qubit index."""
        return dict(self._wire_index)

    def cell_of(self, q: int) -> Cell:
        """Return (row, col) of qubit `q`."""
        if not 0 <= q < len(self._cells):
            raise ValueError(f"Qubit index {q} out of range.")
        return self._cells[q]

    def index_of(self, row: int, col: int) -> int:
        """Return qubit index of used cell (row, col)."""
        try:
            return self._index[(row, col)]
        except KeyError:
            raise ValueError(f"Cell ({row}, {col}) holds no qubit.") \
                from None

    def role_of(self, q: int) -> WireRole:
        """Return role of qubit `q`."""
        return self._placement[self.cell_of(q)]

    def _role_index(self, role: WireRole) -> int:
        try:
            return self._wire_index[role]
        except KeyError:
            raise ValueError(f"No bit {role.index} in an adder of width "
                             f"{self._n}.") from None

    def a_wire(self, i: int) -> int:
        """Qubit index of input bit a_i (1-based)."""
        return self._role_index(WireRole(RoleKind.A, i))

    def b_wire(self, i: int) -> int:
        """Qubit index of input bit b_i (1-based)."""
        return self._role_index(WireRole(RoleKind.B, i))

    @property
    def ancillae(self) -> List[int]:
        """Qubit indices of all ancillae."""
        return [q for q, cell in enumerate(self._cells)
                if self._placement[cell].kind is RoleKind.ANCILLA]

    def bit_rows(self, col: int, j: int) -> Tuple[int, ...]:
        """Rows of bit `j` (1-based) within column `col`.

        Returns (a, b, anc) for column 0 and for the first bit of the
        other columns, (a, b, anc, anc) otherwise.
        """
        m = self._m
        if not (0 <= col < m and 1 <= j <= m):
            raise ValueError(f"No bit {j} in column {col}.")
        if col == 0:
            row = m - 1 + 3 * (j - 1)
            return row, row + 1, row + 2
        if j == 1:
            return 0, 1, 2
        row = 3 + 4 * (j - 2)
        return row, row + 1, row + 2, row + 3

    def to_json(self) -> str:
        """Return layout as JSON document {n, rows, cols, cells}."""
        cells = [{'row': row, 'col': col, 'role': str(role)}
                 for (row, col), role in sorted(self._placement.items())]
        return json.dumps({'n': self._n, 'rows': self.rows,
                           'cols': self.cols, 'cells': cells})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GridLayout):
            return self._placement == other._placement
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._n)

    def __repr__(self) -> str:
        return f"GridLayout(n={self._n})"


@lru_cache(maxsize=16)
def build_layout(n: int) -> GridLayout:
    """Return the grid layout for an adder of width `n`.

    Raises:
        TypeError: `n` is not an int.
        ValueError: `n` is not a perfect square >= 4.
    """
    return GridLayout(n)


def _distance(layout: GridLayout, q1: int, q2: int) -> int:
    (r1, c1), (r2, c2) = layout.cell_of(q1), layout.cell_of(q2)
    return abs(r1 - r2) + abs(c1 - c2)


def is_adjacent(layout: GridLayout, q1: int, q2: int) -> bool:
    """Return True if the cells of `q1` and `q2` are grid neighbours.

    Raises:
        ValueError: invalid qubit index.
    """
    return _distance(layout, q1, q2) == 1


def toffoli_path(layout: GridLayout, gate: Gate) -> Optional[Tuple[int, ...]]:
    """Return the qubits of a Toffoli ordered as a path of neighbours.

    The middle element is the qubit adjacent to both others. Returns None
    if the three cells do not form such a path.
    """
    c1, c2, t = gate.qubits
    for mid, ends in ((c2, (c1, t)), (c1, (c2, t)), (t, (c1, c2))):
        if all(is_adjacent(layout, mid, q) for q in ends):
            return ends[0], mid, ends[1]
    return None


class Violation(NamedTuple):
    """Gate of a circuit acting on non-neighbouring cells."""

    position: int
    gate: Gate
    cells: Tuple[Cell, ...]

    def __str__(self) -> str:
        return f"gate #{self.position} {self.gate!r} on cells {self.cells}"


def check_adjacency(circuit: Circuit, layout: GridLayout) -> List[Violation]:
    """Return all gates of `circuit` which violate nearest-neighbour rules.

    CNOT and SWAP must act on neighbouring cells, a (block-level) TOFFOLI
    on three cells forming a straight or L-shaped path.

    Raises:
        ValueError: `circuit` does not match the number of used cells.
    """
    if circuit.n_qubits != layout.n_qubits:
        raise ValueError(f"Circuit has {circuit.n_qubits} qubits, layout "
                         f"{layout.n_qubits}.")
    violations = []
    for pos, gate in enumerate(circuit.gates):
        kind = gate.kind
        if kind is GateKind.TOFFOLI:
            valid = toffoli_path(layout, gate) is not None
        elif kind.arity == 2:
            valid = is_adjacent(layout, *gate.qubits)
        else:
            valid = True
        if not valid:
            violations.append(
                Violation(pos, gate,
                          tuple(layout.cell_of(q) for q in gate.qubits)))
    return violations


__all__ = [
    'AdjacencyError',
    'Cell',
    'GridLayout',
    'RoleKind',
    'Violation',
    'WireRole',
    'build_layout',
    'check_adjacency',
    'is_adjacent',
    'toffoli_path',
]
