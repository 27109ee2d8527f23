# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        qasm
# Purpose:     OpenQASM 2.0 export
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


"""OpenQASM 2.0 export."""

from __future__ import annotations

from typing import List

from .gates import Circuit, GateKind
from .layout import GridLayout


_QASM_NAMES = {
    GateKind.X: 'x',
    GateKind.H: 'h',
    GateKind.T: 't',
    GateKind.Tdg: 'tdg',
    GateKind.CNOT: 'cx',
    GateKind.SWAP: 'swap',
    GateKind.TOFFOLI: 'ccx',
}


def _add_mapping(lines: List[str], layout: GridLayout) -> None:
    lines.append('// qubit -> (row, col) role')
    for q in range(layout.n_qubits):
        row, col = layout.cell_of(q)
        lines.append(f"// q[{q}] -> ({row}, {col}) {layout.role_of(q)}")


def to_openqasm2(circuit: Circuit, layout: GridLayout = None,
                 register: str = 'q') -> str:
    """Return `circuit` as OpenQASM 2.0 text.

    Args:
        circuit: circuit to export
        layout: if given, a comment block maps every qubit to its cell and
            role
        register: name of the quantum register

    TOFFOLI is emitted as `ccx`, SWAP as `swap`; both are part of
    qelib1.inc.
    """
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";']
    if circuit.label:
        lines.append(f"// {circuit.label}")
    if layout is not None:
        _add_mapping(lines, layout)
    lines.append(f"qreg {register}[{circuit.n_qubits}];")
    for gate in circuit.gates:
        args = ', '.join(f"{register}[{q}]" for q in gate.qubits)
        lines.append(f"{_QASM_NAMES[gate.kind]} {args};")
    return '\n'.join(lines) + '\n'


__all__ = [
    'to_openqasm2',
]
