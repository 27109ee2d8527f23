# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        adder
# Purpose:     Assembly of the complete 2D adder
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


"""Assembly of the complete 2D adder.

The circuit computes s = (a + b) mod 2**n in place of b. It is built from
the following phases:

phase1
    Ripple carry through the first column (half adder and full adders).
    In every other column g,p of each bit and the column prefixes
    G[i,j], P[i,j].

phase2
    Carry propagation from column to column.

phase3
    Carries inside the columns. Afterwards the propagate prefixes are
    erased, so that the grid holds nothing but inputs, propagates and
    carries.

sum
    Sum bits on the b wires.

prepare
    Turns the sums into the state phases 1 to 3 would have produced from
    the inputs (a, not s). Both input pairs have the same carries.

uncompute
    Reverse of phases 1 to 3, clearing every ancilla.

finalize
    NOT on every b wire.
"""

from __future__ import annotations

import json
import logging
import re
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .blocks import BlockInstance, BlockKind, Variant, build_block
from .decompose import DecompositionScheme, expand_circuit
from .gates import Circuit, Gate, GateKind, reverse
from .layout import GridLayout, RoleKind, build_layout
from .sim import BasisState, run_classical, run_statevector


LOGGER = logging.getLogger(__name__)

#: Phase names in circuit order.
PHASES = ('phase1', 'phase2', 'phase3', 'sum', 'prepare', 'uncompute',
          'finalize')

#: Phases forming the region which is reversed to clear the ancillae.
DASHED_BOX = ('phase1', 'phase2', 'phase3')


class AdderParams(NamedTuple):
    """Parameters of an adder.

    Attributes:
        n: width, a perfect square >= 4
        variant: baseline or optimized blocks
        scheme: Toffoli expansion used when `expand` is True
        expand: if True, Toffolis are expanded into 1- and 2-qubit gates
    """

    n: int
    variant: Variant = Variant.OPTIMIZED
    scheme: DecompositionScheme = DecompositionScheme.STANDARD_6CNOT
    expand: bool = False


class PlacedBlock(NamedTuple):
    """Block instance together with its position in the adder circuit."""

    phase: str
    start: int
    instance: BlockInstance

    @property
    def stop(self) -> int:
        """Index behind the block's last gate (block-level circuit)."""
        return self.start + len(self.instance.circuit)


class AdderCircuit:

    """Assembled adder.

    Use :func:`assemble` to get an instance.

    :class:`AdderCircuit` instances are immutable.
    """

    __slots__ = ('_params', '_layout', '_circuit', '_phase_marks',
                 '_blocks', '_labels')

    def __init__(self, params: AdderParams, layout: GridLayout,
                 circuit: Circuit, phase_marks: Dict[str, Tuple[int, int]],
                 blocks: Sequence[PlacedBlock],
                 labels: Dict[str, Dict[int, str]]) -> None:
        self._params = params
        self._layout = layout
        self._circuit = circuit
        self._phase_marks = phase_marks
        self._blocks = tuple(blocks)
        self._labels = labels

    @property
    def params(self) -> AdderParams:
        """Parameters the adder was built from."""
        return self._params

    @property
    def layout(self) -> GridLayout:
        """Grid layout."""
        return self._layout

    @property
    def circuit(self) -> Circuit:
        """Complete circuit."""
        return self._circuit

    @property
    def phase_marks(self) -> Dict[str, Tuple[int, int]]:
        """Map from phase name to (start, stop) gate index."""
        return dict(self._phase_marks)

    @property
    def blocks(self) -> Tuple[PlacedBlock, ...]:
        """Blocks of the phases before uncompute, in circuit order.

        Block positions refer to the block-level circuit.
        """
        return self._blocks

    @property
    def labels(self) -> Dict[str, Dict[int, str]]:
        """Expected value label per qubit at the end of each phase.

        Only phases with a fixed data placement are present (see
        :func:`label_value`).
        """
        return {phase: dict(lbl) for phase, lbl in self._labels.items()}

    @property
    def io_map(self) -> Dict[str, List[int]]:
        """Qubit indices of the inputs a and b and of the ancillae.

        The sum s_i is produced on the wire of b_i.
        """
        layout = self._layout
        n = self._params.n
        return {'a': [layout.a_wire(i) for i in range(1, n + 1)],
                'b': [layout.b_wire(i) for i in range(1, n + 1)],
                'ancilla': layout.ancillae}

    def io_map_json(self) -> str:
        """Return :attr:`io_map` as JSON document."""
        return json.dumps(self.io_map)

    def phase(self, name: str) -> Circuit:
        """Return the sub-circuit of phase `name`."""
        start, stop = self._phase_marks[name]
        return self._circuit[start:stop].with_label(name)

    def dashed_box(self) -> Circuit:
        """Return the sub-circuit which is reversed by uncompute."""
        start = self._phase_marks[DASHED_BOX[0]][0]
        stop = self._phase_marks[DASHED_BOX[-1]][1]
        return self._circuit[start:stop].with_label('dashed box')

    def count_blocks(self) -> Dict[BlockKind, int]:
        """Return number of blocks per kind (uncompute not included)."""
        counts: Dict[BlockKind, int] = {}
        for placed in self._blocks:
            kind = placed.instance.kind
            counts[kind] = counts.get(kind, 0) + 1
        return counts

    def __repr__(self) -> str:
        p = self._params
        return (f"AdderCircuit(n={p.n}, variant={p.variant.key}, "
                f"expand={p.expand}, gates={len(self._circuit)})")


class _Assembler:

    def __init__(self, layout: GridLayout, variant: Variant) -> None:
        self.layout = layout
        self.variant = variant
        self.gates: List[Gate] = []
        self.blocks: List[PlacedBlock] = []
        self.marks: Dict[str, Tuple[int, int]] = {}
        self.phase = ''

    def q(self, row: int, col: int) -> int:
        return self.layout.index_of(row, col)

    def rows(self, col: int, j: int) -> Tuple[int, ...]:
        return self.layout.bit_rows(col, j)

    def begin(self, phase: str) -> None:
        self.phase = phase
        self.marks[phase] = (len(self.gates), len(self.gates))

    def end(self) -> None:
        start, _ = self.marks[self.phase]
        self.marks[self.phase] = (start, len(self.gates))

    def add(self, kind: BlockKind, col: int, variant: Variant = None,
            **rows: int) -> None:
        # ports named 'zero' stand for the block port '0'
        wires = {('0' if port == 'zero' else port): self.q(row, col)
                 for port, row in rows.items()}
        self.add_wires(kind, wires, variant)

    def add_wires(self, kind: BlockKind, wires: Dict[str, int],
                  variant: Variant = None) -> None:
        instance = build_block(kind, variant or self.variant, wires,
                               layout=self.layout)
        self.blocks.append(PlacedBlock(self.phase, len(self.gates),
                                       instance))
        self.gates.extend(instance.circuit.gates)

    def gate(self, kind: GateKind, *qubits: int) -> None:
        self.gates.append(Gate(kind, *qubits))

    # phases

    def phase1(self) -> None:
        m = self.layout.m
        optimized = self.variant is Variant.OPTIMIZED
        a, b, z = self.rows(0, 1)
        self.add(BlockKind.HALF_ADDER, 0, a=a, b=b, zero=z)
        for j in range(2, m + 1):
            a, b, z = self.rows(0, j)
            self.add(BlockKind.FULL_ADDER, 0, c=a - 1, a=a, b=b, zero=z)
        for k in range(1, m):
            r0, r1, r2 = self.rows(k, 1)
            self.add(BlockKind.GP_FIRST if optimized else BlockKind.GP, k,
                     a=r0, b=r1, g=r2)
            for j in range(2, m + 1):
                a, b, x, _ = self.rows(k, j)
                self.add(BlockKind.GP, k, a=a, b=b, g=x)
            big_p, big_g = r1, r2
            for j in range(2, m + 1):
                a, b, x, y = self.rows(k, j)
                kind = (BlockKind.BIGGP_FIRST if optimized and j == 2
                        else BlockKind.BIGGP)
                self.add(kind, k, P=big_p, G=big_g, a=a, p=b, g=x, zero=y)
                big_p, big_g = x, y

    def phase2(self) -> None:
        m, last = self.layout.m, self.layout.rows - 1
        for k in range(1, m):
            p_cell, g_cell = self.q(last - 1, k), self.q(last, k)
            c_cell = self.q(last, k - 1)
            if self.variant is Variant.OPTIMIZED:
                self.add_wires(BlockKind.COLUMN_CARRY,
                               {'P': p_cell, 'G': g_cell, 'c': c_cell})
            else:
                self.add_wires(BlockKind.COLUMN_CARRY,
                               {'P': p_cell, 'G': g_cell, 'C': c_cell})
                # carry-out to the G cell, column propagate one left
                self.add_wires(BlockKind.TRANSPORT,
                               {'x': g_cell, 'y': c_cell})

    def phase3(self) -> None:
        m, last = self.layout.m, self.layout.rows - 1
        # move every column propagate back into its own column
        for k in range(m - 1, 0, -1):
            self.add_wires(BlockKind.TRANSPORT,
                           {'x': self.q(last, k - 1), 'y': self.q(last, k)})
        for k in range(1, m):
            if self.variant is Variant.OPTIMIZED:
                self._carries_optimized(k)
            else:
                self._carries_baseline(k)

    def _carries_baseline(self, k: int) -> None:
        m = self.layout.m
        r0, r1, r2 = self.rows(k, 1)
        for j in range(m - 1, 1, -1):
            big_p, big_g = self.rows(k, j)[2:]
            a, b, x, _ = self.rows(k, j + 1)
            self.add(BlockKind.CARRY, k, P=big_p, G=big_g, a=a, p=b, C=x)
        a, b, x, _ = self.rows(k, 2)
        # column carry-in next to g of the first bit
        self.add(BlockKind.TRANSPORT, k, x=b, y=x)
        self.add(BlockKind.TRANSPORT, k, x=a, y=b)
        self.add(BlockKind.CARRY1, k, p=r1, g=r2, c=a)
        self.add(BlockKind.TRANSPORT, k, x=r2, y=a)
        a, b, x, y = self.rows(k, m)
        self.add(BlockKind.SCRUB_LAST, k, Q=a, a=b, p=x, c=y)
        for j in range(m - 1, 1, -1):
            a, b, x, y = self.rows(k, j)
            self.add(BlockKind.SCRUB, k, Q=a, a=b, p=x, c=y,
                     P=self.rows(k, j + 1)[0])
        self.add(BlockKind.TRANSPORT, k, x=r2, y=r2 + 1)
        self.add(BlockKind.TRANSPORT, k, x=r1, y=r2)

    def _carries_optimized(self, k: int) -> None:
        m = self.layout.m
        r0, r1, r2 = self.rows(k, 1)
        for j in range(m - 1, 1, -1):
            big_p, big_g = self.rows(k, j)[2:]
            a, b, x, _ = self.rows(k, j + 1)
            self.add(BlockKind.CARRY, k, P=big_p, G=big_g, a=a, p=b, c=x)
        a, b, x, _ = self.rows(k, 2)
        self.add(BlockKind.CARRY1, k, P=r1, G=r2, a=a, p=b, c=x)
        # P[f,j] on row Y_j is cleared with P[f,j-1] from the row above
        for j in range(m, 2, -1):
            prev = self.rows(k, j - 1)[3]
            a, b, x, y = self.rows(k, j)
            self.add(BlockKind.SCRUB, k, Q=prev, a=a, p=b, c=x, P=y)
        a, b, x, y = self.rows(k, 2)
        self.add(BlockKind.SCRUB_SECOND, k, Q=r1, x=r2, a=a, p=b, c=x, P=y)

    def sum_(self) -> None:
        m = self.layout.m
        optimized = self.variant is Variant.OPTIMIZED
        kind = BlockKind.SUM if optimized else BlockKind.SUM2
        for k in range(1, m):
            r0, r1, r2 = self.rows(k, 1)
            self.add(kind, k, c=r2, p=r1)
            for j in range(2, m + 1):
                a, b, x, _ = self.rows(k, j)
                self.add(kind, k, c=x if optimized else a, p=b)

    def prepare(self) -> None:
        m = self.layout.m
        optimized = self.variant is Variant.OPTIMIZED
        for j in range(1, m + 1):
            a, b, _ = self.rows(0, j)
            self.gate(GateKind.CNOT, self.q(a, 0), self.q(b, 0))
            if j > 1:
                # fold in the carry held by the cell above
                if optimized:
                    self.add(BlockKind.TRANSPORT, 0, x=a - 1, y=a)
                    self.add(BlockKind.SUM, 0, c=a, p=b)
                    self.add(BlockKind.TRANSPORT, 0, x=a - 1, y=a)
                else:
                    self.add(BlockKind.SUM1, 0, c=a - 1, a=a, p=b)
            self.gate(GateKind.X, self.q(b, 0))
        for k in range(1, m):
            r0, r1, _ = self.rows(k, 1)
            self.gate(GateKind.CNOT, self.q(r0, k), self.q(r1, k))
            self.gate(GateKind.X, self.q(r1, k))
            for j in range(2, m + 1):
                a, b, x, _ = self.rows(k, j)
                src = a if optimized else x
                self.gate(GateKind.CNOT, self.q(src, k), self.q(b, k))
                self.gate(GateKind.X, self.q(b, k))

    def uncompute(self) -> None:
        start = self.marks[DASHED_BOX[0]][0]
        stop = self.marks[DASHED_BOX[-1]][1]
        box = Circuit(self.layout.n_qubits, self.gates[start:stop])
        self.gates.extend(reverse(box).gates)

    def finalize(self) -> None:
        for i in range(1, self.layout.n + 1):
            self.gate(GateKind.X, self.layout.b_wire(i))

    def run(self) -> None:
        for phase in PHASES:
            self.begin(phase)
            getattr(self, 'sum_' if phase == 'sum' else phase)()
            self.end()


def _boundary_labels(layout: GridLayout,
                     variant: Variant) -> Dict[str, Dict[int, str]]:
    m, n, last = layout.m, layout.n, layout.rows - 1
    optimized = variant is Variant.OPTIMIZED
    res: Dict[str, Dict[int, str]] = {}

    def gi(k: int, j: int) -> int:
        return k * m + j

    for phase in ('phase1', 'phase2', 'phase3', 'sum'):
        lbl: Dict[int, str] = {}

        def put(row: int, col: int, label: str) -> None:
            lbl[layout.index_of(row, col)] = label

        for j in range(1, m + 1):
            a, b, z = layout.bit_rows(0, j)
            put(a, 0, f"a{j}")
            put(b, 0, f"s{j}")
            put(z, 0, f"c{j + 1}")
        if phase == 'phase2':
            put(last, 0, f"P[{gi(1, 1)},{gi(1, m)}]")
        elif phase in ('phase3', 'sum'):
            put(last, 0, f"c{n + 1}")
        for k in range(1, m):
            first = gi(k, 1)
            if phase in ('phase1', 'phase2'):
                put(0, k, f"a{first}")
                put(2, k, f"g{first}")
                if optimized:
                    put(1, k, f"a{first + 1}")
                for j in range(2, m + 1):
                    i = gi(k, j)
                    a, b, x, y = layout.bit_rows(k, j)
                    put(b, k, f"p{i}")
                    put(y, k, f"G[{first},{i}]")
                    if not optimized:
                        put(a, k, f"a{i}")
                        put(x, k, f"P[{first},{i}]")
                        continue
                    # a and P of neighbouring bits trade places
                    put(a, k, f"p{first}" if j == 2
                        else f"P[{first},{i - 1}]")
                    put(x, k, f"a{i + 1}" if j < m else f"P[{first},{i}]")
                if not optimized:
                    put(1, k, f"p{first}")
                if phase == 'phase2':
                    put(last - 1, k, f"c{first}")
                    if k == m - 1:
                        put(last, k, f"c{n + 1}")
                    else:
                        put(last, k, f"P[{gi(k + 1, 1)},{gi(k + 1, m)}]")
            else:
                sp = 's' if phase == 'sum' else 'p'
                put(0, k, f"a{first}")
                put(1, k, f"{sp}{first}")
                put(2, k, f"c{first}")
                for j in range(2, m + 1):
                    i = gi(k, j)
                    a, b, x, y = layout.bit_rows(k, j)
                    put(a, k, f"a{i}" if optimized else f"c{i}")
                    put(b, k, f"{sp}{i}")
                    put(x, k, f"c{i}" if optimized else f"a{i}")
                    put(y, k, '0')
        res[phase] = lbl
    for phase, b_label in (('uncompute', '~s'), ('finalize', 's')):
        lbl = {}
        for q in range(layout.n_qubits):
            role = layout.role_of(q)
            if role.kind is RoleKind.A:
                lbl[q] = f"a{role.index}"
            elif role.kind is RoleKind.B:
                lbl[q] = f"{b_label}{role.index}"
            else:
                lbl[q] = '0'
        res[phase] = lbl
    return res


def _expand(circuit: Circuit, marks: Dict[str, Tuple[int, int]],
            layout: GridLayout, scheme: DecompositionScheme
            ) -> Tuple[Circuit, Dict[str, Tuple[int, int]]]:
    gates: List[Gate] = []
    new_marks = {}
    for phase in PHASES:
        start, stop = marks[phase]
        expanded = expand_circuit(circuit[start:stop], layout, scheme)
        new_marks[phase] = (len(gates), len(gates) + len(expanded))
        gates.extend(expanded.gates)
    return Circuit(circuit.n_qubits, gates, circuit.label), new_marks


@lru_cache(maxsize=32)
def assemble(params: AdderParams) -> AdderCircuit:
    """Assemble the adder described by `params`.

    Raises:
        TypeError: n is not an int.
        ValueError: n is not a perfect square >= 4.
        AdjacencyError: `params.expand` is True and the scheme does not
            fit onto a line of neighbours.
    """
    layout = build_layout(params.n)
    asm = _Assembler(layout, params.variant)
    asm.run()
    label = f"adder n={params.n} {params.variant.key}"
    circuit = Circuit(layout.n_qubits, asm.gates, label)
    marks = dict(asm.marks)
    if params.expand:
        circuit, marks = _expand(circuit, marks, layout, params.scheme)
    LOGGER.info("Assembled %s adder for n=%d: %d blocks, %d gates.",
                params.variant.key, params.n, len(asm.blocks), len(circuit))
    return AdderCircuit(params, layout, circuit, marks, asm.blocks,
                        _boundary_labels(layout, params.variant))


def arithmetic_oracle(a: int, b: int, n: int) -> int:
    """Return (a + b) mod 2**n.

    Raises:
        ValueError: `a` or `b` is not in range(2**n).
    """
    if not (0 <= a < 2 ** n and 0 <= b < 2 ** n):
        raise ValueError(f"Summands must be in range(0, {2 ** n}).")
    return (a + b) % (2 ** n)


def input_state(adder: AdderCircuit, a: int, b: int) -> BasisState:
    """Return basis state holding `a` and `b` on their wires."""
    io_map = adder.io_map
    assignment = {}
    for i, q in enumerate(io_map['a']):
        assignment[q] = (a >> i) & 1
    for i, q in enumerate(io_map['b']):
        assignment[q] = (b >> i) & 1
    return BasisState.from_assignment(adder.circuit.n_qubits, assignment)


def read_register(adder: AdderCircuit, state: BasisState,
                  register: str) -> int:
    """Return the integer held by `register` ('a' or 'b') in `state`."""
    return sum(state[q] << i for i, q in enumerate(adder.io_map[register]))


def run_adder(adder: AdderCircuit, a: int, b: int) -> BasisState:
    """Simulate the block-level `adder` on inputs `a` and `b`."""
    return run_classical(adder.circuit, input_state(adder, a, b))


def cross_check(adder: AdderCircuit, a: int, b: int) -> float:
    """Run the expanded `adder` on the statevector simulator.

    The result is compared with the block-level adder of the same width
    and variant on inputs `a` and `b`.

    Returns:
        probability mass outside the block-level result

    Raises:
        CapacityError: circuit has more qubits than the statevector
            simulator accepts.
    """
    block_level = assemble(adder.params._replace(expand=False))
    expected = run_adder(block_level, a, b)
    out = run_statevector(adder.circuit, input_state(adder, a, b))
    return out.off_target_mass(expected)


def trace_values(adder: AdderCircuit, a: int,
                 b: int) -> Dict[Tuple[int, str], int]:
    """Return the value of every qubit at the end of every phase.

    Returns:
        map from (qubit index, phase name) to bit

    Raises:
        NonClassicalGateError: `adder` is fully decomposed.
    """
    circuit = adder.circuit
    state = input_state(adder, a, b)
    res = {}
    for phase in PHASES:
        start, stop = adder.phase_marks[phase]
        state = run_classical(circuit[start:stop], state)
        for q, bit in enumerate(state.bits):
            res[(q, phase)] = bit
    return res


_LABEL_RE = re.compile(r'(?P<neg>~?)(?:(?P<sym>[abpgsc])(?P<idx>\d+)|'
                       r'(?P<big>[GP])\[(?P<lo>\d+),(?P<hi>\d+)\]|'
                       r'(?P<zero>0))$')


def label_value(label: str, a: int, b: int, n: int) -> int:
    """Evaluate a value label on inputs `a` and `b` of an `n`-bit adder.

    Labels (bit indices are 1-based): `a4`, `b4`, `p4` = a4 xor b4,
    `g4` = a4 and b4, `c7` = carry into bit 7 (`c1` = 0, up to c(n+1)),
    `s4` = sum bit, `G[4,6]` / `P[4,6]` = generate / propagate of bits 4
    to 6, `0`; a leading `~` negates.

    Raises:
        ValueError: malformed label or index out of range.
    """
    match = _LABEL_RE.match(label)
    if match is None:
        raise ValueError(f"Malformed label: {label!r}.")

    def bit(x: int, i: int) -> int:
        if not 1 <= i <= n:
            raise ValueError(f"Bit index {i} out of range in {label!r}.")
        return (x >> (i - 1)) & 1

    def carry(i: int) -> int:
        if not 1 <= i <= n + 1:
            raise ValueError(f"Carry index {i} out of range in {label!r}.")
        c = 0
        for t in range(1, i):
            ai, bi = bit(a, t), bit(b, t)
            c = (ai & bi) | (c & (ai ^ bi))
        return c

    if match['zero']:
        val = 0
    elif match['big']:
        lo, hi = int(match['lo']), int(match['hi'])
        if lo > hi:
            raise ValueError(f"Empty range in {label!r}.")
        if match['big'] == 'P':
            val = 1
            for t in range(lo, hi + 1):
                val &= bit(a, t) ^ bit(b, t)
        else:
            val = 0
            for t in range(lo, hi + 1):
                ai, bi = bit(a, t), bit(b, t)
                val = (ai & bi) ^ ((ai ^ bi) & val)
    else:
        sym, i = match['sym'], int(match['idx'])
        if sym == 'c':
            val = carry(i)
        elif sym == 'a':
            val = bit(a, i)
        elif sym == 'b':
            val = bit(b, i)
        elif sym == 'p':
            val = bit(a, i) ^ bit(b, i)
        elif sym == 'g':
            val = bit(a, i) & bit(b, i)
        else:
            val = bit(a, i) ^ bit(b, i) ^ carry(i)
    return val ^ 1 if match['neg'] else val


def check_labels(adder: AdderCircuit, a: int,
                 b: int) -> List[Tuple[str, int, str, int, int]]:
    """Compare traced values with the expected labels.

    Returns:
        list of mismatches (phase, qubit, label, expected, traced)
    """
    trace = trace_values(adder, a, b)
    n = adder.params.n
    mismatches = []
    for phase, labels in adder.labels.items():
        for q, label in labels.items():
            expected = label_value(label, a, b, n)
            if trace[(q, phase)] != expected:
                mismatches.append((phase, q, label, expected,
                                   trace[(q, phase)]))
    return mismatches


def find_block(adder: AdderCircuit, kind: BlockKind,
               occurrence: int = 0) -> Optional[PlacedBlock]:
    """Return the `occurrence`-th placed block of `kind` (or None)."""
    found = [pb for pb in adder.blocks if pb.instance.kind is kind]
    return found[occurrence] if occurrence < len(found) else None


__all__ = [
    'AdderCircuit',
    'AdderParams',
    'DASHED_BOX',
    'PHASES',
    'PlacedBlock',
    'arithmetic_oracle',
    'assemble',
    'check_labels',
    'cross_check',
    'find_block',
    'input_state',
    'label_value',
    'read_register',
    'run_adder',
    'trace_values',
]
