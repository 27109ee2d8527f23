# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        schedule
# Purpose:     Depth of circuits and of the 2D adder
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


"""Depth of circuits and of the 2D adder.

Depth is measured by ASAP layering: every gate starts as soon as all of its
qubits are free and occupies them for the cost of its kind.

Two accounting modes are supported for the adder:

paper
    Every block of the assembled circuit is an indivisible unit which
    occupies all of its qubits for its full depth. The units of each phase
    are scheduled ASAP, one phase after the other. Phase 1 is split into
    the ripple column and the lookahead columns, the uncompute into the
    reversed phases 3, 2 and 1.

free
    Gates flagged as running beside a neighbouring block cost nothing when
    a single block is measured. Every phase of the assembled circuit is
    scheduled ASAP, all gates at full cost.

In both modes the ASAP depth of the complete circuit never exceeds the
sequential total. The closed-form depth composes block depths per phase
and does not include erasing the propagate prefixes.
"""

from __future__ import annotations

import json
import logging
from math import isqrt
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, \
    Tuple

from .adder import AdderCircuit, AdderParams, DASHED_BOX, PHASES, \
    assemble
from .blocks import BlockInstance, BlockKind, Variant, canonical_block, \
    has_block
from .config import COST_MODEL_PRESETS, get_dflt_cost_model
from .gates import Circuit, Gate, GateKind


LOGGER = logging.getLogger(__name__)

PAPER = 'paper'
FREE = 'free'
MODES = (PAPER, FREE)

# published (leading coefficient, constant); None where not printed
_PRINTED = {
    (Variant.BASELINE, 't14s1'): (140, -72),
    (Variant.BASELINE, 't14s3'): (176, None),
    (Variant.BASELINE, 't12s3'): (160, None),
    (Variant.BASELINE, 't12s1'): (124, None),
    (Variant.OPTIMIZED, 't14s1'): (104, -46),
    (Variant.OPTIMIZED, 't14s3'): (144, None),
    (Variant.OPTIMIZED, 't12s3'): (132, None),
    (Variant.OPTIMIZED, 't12s1'): (92, None),
}

#: Constant obtained by adding up the published optimized phase rows.
OPTIMIZED_ROW_SUM_CONSTANT = -45


class CostModel:

    """Duration of gates in unit time steps.

    Args:
        cnot: duration of a CNOT
        swap: duration of a SWAP
        one_qubit: duration of X, H, T and Tdg
        toffoli_block: duration of an unexpanded Toffoli

    Raises:
        TypeError: a duration is not an int.
        ValueError: a duration is < 1.

    :class:`CostModel` instances are immutable.
    """

    __slots__ = ('_cnot', '_swap', '_one_qubit', '_toffoli_block')

    def __init__(self, cnot: int = 1, swap: int = 1, one_qubit: int = 1,
                 toffoli_block: int = 14) -> None:
        for name, val in (('cnot', cnot), ('swap', swap),
                          ('one_qubit', one_qubit),
                          ('toffoli_block', toffoli_block)):
            if not isinstance(val, int):
                raise TypeError(f"{name} must be of type 'int'.")
            if val < 1:
                raise ValueError(f"{name} must be >= 1.")
        self._cnot = cnot
        self._swap = swap
        self._one_qubit = one_qubit
        self._toffoli_block = toffoli_block

    @classmethod
    def preset(cls, name: str = None) -> CostModel:
        """Return named cost model (default: the configured default).

        Raises:
            ValueError: unknown name
        """
        if name is None:
            name = get_dflt_cost_model()
        try:
            return cls(*COST_MODEL_PRESETS[name])
        except KeyError:
            raise ValueError(f"Unknown cost model: {name!r}; supported: "
                             f"{', '.join(COST_MODEL_PRESETS)}.") from None

    @property
    def cnot(self) -> int:
        """Duration of a CNOT."""
        return self._cnot

    @property
    def swap(self) -> int:
        """Duration of a SWAP."""
        return self._swap

    @property
    def one_qubit(self) -> int:
        """Duration of a one-qubit gate."""
        return self._one_qubit

    @property
    def toffoli_block(self) -> int:
        """Duration of an unexpanded Toffoli."""
        return self._toffoli_block

    @property
    def name(self) -> Optional[str]:
        """Name of the equal preset, None if there is none."""
        for name, fields in COST_MODEL_PRESETS.items():
            if fields == self._fields():
                return name
        return None

    def cost_of(self, kind: GateKind) -> int:
        """Return duration of a gate of `kind`."""
        if kind is GateKind.CNOT:
            return self._cnot
        if kind is GateKind.SWAP:
            return self._swap
        if kind is GateKind.TOFFOLI:
            return self._toffoli_block
        return self._one_qubit

    def _fields(self) -> Tuple[int, int, int, int]:
        return (self._cnot, self._swap, self._one_qubit,
                self._toffoli_block)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CostModel):
            return self._fields() == other._fields()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._fields())

    def __repr__(self) -> str:
        return (f"CostModel(cnot={self._cnot}, swap={self._swap}, "
                f"one_qubit={self._one_qubit}, "
                f"toffoli_block={self._toffoli_block})")


def _asap(gates: Iterable[Gate], cost: CostModel,
          free: Iterable[int] = (),
          order: Iterable[Tuple[int, int]] = ()) -> int:
    free = set(free)
    waits: Dict[int, List[int]] = {}
    for before, after in order:
        waits.setdefault(after, []).append(before)
    ready: Dict[int, int] = {}
    finish: Dict[int, int] = {}
    depth = 0
    for pos, gate in enumerate(gates):
        start = max(max(ready.get(q, 0) for q in gate.qubits),
                    *(finish[b] for b in waits.get(pos, ())), 0)
        end = start + (0 if pos in free else cost.cost_of(gate.kind))
        finish[pos] = end
        for q in gate.qubits:
            ready[q] = end
        depth = max(depth, end)
    return depth


def asap_depth(circuit: Circuit, cost: CostModel = None) -> int:
    """Return the ASAP depth of `circuit` under `cost`.

    Args:
        circuit: circuit to schedule
        cost: gate durations (default: the configured default preset)
    """
    if cost is None:
        cost = CostModel.preset()
    return _asap(circuit.gates, cost)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"Unknown mode: {mode!r}; supported: "
                         f"{', '.join(MODES)}.")


def block_depth(block: BlockInstance, cost: CostModel = None,
                mode: str = PAPER) -> int:
    """Return the depth of `block`.

    The block's ordering constraints are honoured in both modes. In free
    mode the gates flagged as overlapping cost nothing.
    """
    _check_mode(mode)
    if cost is None:
        cost = CostModel.preset()
    free = ([pos for pos, flag in enumerate(block.overlap) if flag]
            if mode == FREE else ())
    return _asap(block.circuit.gates, cost, free, block.order)


def _width_root(n: int) -> int:
    m = isqrt(n) if isinstance(n, int) and n >= 0 else 0
    if n < 4 or m * m != n:
        raise ValueError(f"n must be a perfect square >= 4, got {n}.")
    return m


def _recipe(m: int, variant: Variant, d: Dict[BlockKind, int],
            cost: CostModel) -> Dict[str, int]:
    bk = BlockKind
    if variant is Variant.BASELINE:
        p11 = d[bk.HALF_ADDER] + (m - 1) * d[bk.FULL_ADDER]
        p12 = d[bk.GP] + (m - 1) * d[bk.BIGGP]
        p3 = (m - 1) * d[bk.CARRY] + d[bk.CARRY1] + d[bk.SUM1]
        last_sum = d[bk.SUM1]
    else:
        p11 = d[bk.HALF_ADDER] + (m - 1) * d[bk.FULL_ADDER]
        p12 = d[bk.GP_FIRST] + d[bk.BIGGP_FIRST] + (m - 2) * d[bk.BIGGP]
        p3 = (m - 2) * d[bk.CARRY] + d[bk.CARRY1] + d[bk.SUM]
        last_sum = d[bk.SUM]
    p1 = max(p11, p12)
    p2 = (m - 1) * d[bk.COLUMN_CARRY]
    # clearing replays phases 1 to 3 without the final sum
    clear = p1 + p2 + p3 - last_sum
    finalize = 2 * cost.one_qubit + cost.cnot
    return {'phase1-1': p11, 'phase1-2': p12, 'phase1': p1, 'phase2': p2,
            'phase3': p3, 'clear': clear, 'finalize': finalize}


def _recipe_total(phases: Dict[str, int]) -> int:
    return sum(phases[p] for p in ('phase1', 'phase2', 'phase3', 'clear',
                                   'finalize'))


def measured_block_depths(variant: Variant, cost: CostModel = None,
                          mode: str = PAPER) -> Dict[BlockKind, int]:
    """Return the depth of every block `variant` defines."""
    return {kind: block_depth(canonical_block(kind, variant), cost, mode)
            for kind in BlockKind if has_block(kind, variant)}


def _closed_form_blocks(variant: Variant,
                        cost: CostModel) -> Dict[BlockKind, int]:
    t, s, c = cost.toffoli_block, cost.swap, cost.cnot
    bk = BlockKind
    if variant is Variant.BASELINE:
        return {bk.HALF_ADDER: t + c, bk.FULL_ADDER: 2 * t + 2 * c + 2 * s,
                bk.GP: t + c, bk.BIGGP: 2 * t + 6 * s,
                bk.COLUMN_CARRY: t + 4 * s, bk.CARRY: t + 4 * s,
                bk.CARRY1: t + 2 * s, bk.SUM1: 2 * s + c}
    return {bk.HALF_ADDER: t + c, bk.FULL_ADDER: t + 2 * s + c,
            bk.GP_FIRST: t + c, bk.BIGGP_FIRST: 2 * t + 2 * s,
            bk.BIGGP: t + 3 * s, bk.COLUMN_CARRY: t + 3 * s,
            bk.CARRY: t + 4 * s, bk.CARRY1: t + 3 * s, bk.SUM: c}


class _Unit(NamedTuple):
    qubits: FrozenSet[int]
    depth: int


def _block_asap(units: Iterable[_Unit]) -> int:
    ready: Dict[int, int] = {}
    depth = 0
    for unit in units:
        start = max((ready.get(q, 0) for q in unit.qubits), default=0)
        end = start + unit.depth
        for q in unit.qubits:
            ready[q] = end
        depth = max(depth, end)
    return depth


def _phase_units(adder: AdderCircuit, cost: CostModel
                 ) -> Dict[str, List[_Unit]]:
    # every block is one unit, a gate outside any block is a unit of its own
    circuit = adder.circuit
    covering: Dict[int, Tuple[int, _Unit]] = {}
    for placed in adder.blocks:
        qubits = frozenset(placed.instance.wires.values())
        depth = block_depth(placed.instance, cost, PAPER)
        covering[placed.start] = (placed.stop, _Unit(qubits, depth))
    box_start = adder.phase_marks[DASHED_BOX[0]][0]
    box_stop = adder.phase_marks[DASHED_BOX[-1]][1]
    un_start = adder.phase_marks['uncompute'][0]
    for start, (stop, unit) in list(covering.items()):
        if box_start <= start < box_stop:
            # mirror image of the block inside uncompute
            mirrored = un_start + box_stop - stop
            covering[mirrored] = (un_start + box_stop - start, unit)
    res: Dict[str, List[_Unit]] = {}
    for phase in PHASES:
        pos, stop = adder.phase_marks[phase]
        units = []
        while pos < stop:
            if pos in covering:
                pos, unit = covering[pos]
            else:
                gate = circuit.gates[pos]
                unit = _Unit(frozenset(gate.qubits),
                             cost.cost_of(gate.kind))
                pos += 1
            units.append(unit)
        res[phase] = units
    return res


def _scheduled_phases(adder: AdderCircuit,
                      cost: CostModel) -> Dict[str, int]:
    layout = adder.layout
    units = _phase_units(adder, cost)
    ripple, lookahead = [], []
    for unit in units['phase1']:
        if layout.cell_of(min(unit.qubits))[1] == 0:
            ripple.append(unit)
        else:
            lookahead.append(unit)
    res = {'phase1-1': _block_asap(ripple),
           'phase1-2': _block_asap(lookahead)}
    for phase in ('phase1', 'phase2', 'phase3', 'sum', 'prepare'):
        res[phase] = _block_asap(units[phase])
    # uncompute holds the reversed phases 3, 2 and 1 back to back
    clear, pos = 0, 0
    for phase in reversed(DASHED_BOX):
        n_units = len(units[phase])
        clear += _block_asap(units['uncompute'][pos:pos + n_units])
        pos += n_units
    res['clear'] = clear
    res['finalize'] = _block_asap(units['finalize'])
    return res


def _scheduled_total(phases: Dict[str, int]) -> int:
    return sum(phases[p] for p in ('phase1', 'phase2', 'phase3', 'sum',
                                   'prepare', 'clear', 'finalize'))


def paper_phases(n: int, variant: Variant,
                 cost: CostModel = None) -> Dict[str, int]:
    """Return paper-mode phase depths of the assembled adder.

    Every block is scheduled as one unit, every phase ASAP on its own.

    Returns:
        map with keys phase1-1 (ripple column), phase1-2 (lookahead
        columns), phase1, phase2, phase3, sum, prepare, clear and finalize

    Raises:
        ValueError: n is not a perfect square >= 4.
    """
    if cost is None:
        cost = CostModel.preset()
    _width_root(n)
    return _scheduled_phases(assemble(AdderParams(n, variant)), cost)


def _closed_form_total(m: int, variant: Variant, cost: CostModel) -> int:
    return _recipe_total(_recipe(m, variant,
                                 _closed_form_blocks(variant, cost), cost))


def formula_coefficients(variant: Variant,
                         cost: CostModel = None) -> Tuple[int, int]:
    """Return (leading coefficient, constant) of the depth in sqrt(n).

    The coefficient is 2 (3T + 10S) for the optimized and 8T + 28S for
    the baseline adder, T and S being the Toffoli and SWAP durations.
    """
    if cost is None:
        cost = CostModel.preset()
    d2 = _closed_form_total(2, variant, cost)
    lead = _closed_form_total(3, variant, cost) - d2
    return lead, d2 - 2 * lead


def formula_depth(n: int, variant: Variant, cost: CostModel = None) -> int:
    """Return the closed-form depth of the adder.

    Raises:
        ValueError: n is not a perfect square >= 4, or `cost` is not one
            of the preset cost models.
    """
    if cost is None:
        cost = CostModel.preset()
    if cost.name is None:
        raise ValueError(f"No formula for {cost!r}; supported: "
                         f"{', '.join(COST_MODEL_PRESETS)}.")
    m = _width_root(n)
    lead, const = formula_coefficients(variant, cost)
    return lead * m + const


def printed_formula(variant: Variant,
                    cost: CostModel) -> Tuple[Optional[int], Optional[int]]:
    """Return the published (coefficient, constant), None where absent."""
    return _PRINTED.get((variant, cost.name), (None, None))


class DepthReport:

    """Depths of an adder.

    Attributes:
        n: width of the adder
        variant: adder variant
        cost: cost model
        mode: accounting mode
        per_block: depth per block kind
        per_phase: depth per phase
        total_sequential: sum of the phase depths
        total_segmented: sum of the ASAP depths of the assembled phases
        total_asap: ASAP depth of the complete assembled circuit
        formula_expected: closed-form depth (None without a formula)

    :class:`DepthReport` instances are immutable.
    """

    __slots__ = ('_n', '_variant', '_cost', '_mode', '_per_block',
                 '_per_phase', '_total_sequential', '_total_segmented',
                 '_total_asap', '_formula_expected')

    def __init__(self, n: int, variant: Variant, cost: CostModel, mode: str,
                 per_block: Dict[BlockKind, int], per_phase: Dict[str, int],
                 total_sequential: int, total_segmented: int,
                 total_asap: int, formula_expected: Optional[int]) -> None:
        self._n = n
        self._variant = variant
        self._cost = cost
        self._mode = mode
        self._per_block = dict(per_block)
        self._per_phase = dict(per_phase)
        self._total_sequential = total_sequential
        self._total_segmented = total_segmented
        self._total_asap = total_asap
        self._formula_expected = formula_expected

    @property
    def n(self) -> int:
        """Width of the adder."""
        return self._n

    @property
    def variant(self) -> Variant:
        """Adder variant."""
        return self._variant

    @property
    def cost(self) -> CostModel:
        """Cost model."""
        return self._cost

    @property
    def mode(self) -> str:
        """Accounting mode."""
        return self._mode

    @property
    def per_block(self) -> Dict[BlockKind, int]:
        """Depth per block kind."""
        return dict(self._per_block)

    @property
    def per_phase(self) -> Dict[str, int]:
        """Depth per phase."""
        return dict(self._per_phase)

    @property
    def total_sequential(self) -> int:
        """Sum of the phase depths."""
        return self._total_sequential

    @property
    def total_segmented(self) -> int:
        """Sum of the ASAP depths of the assembled phases."""
        return self._total_segmented

    @property
    def total_asap(self) -> int:
        """ASAP depth of the complete assembled circuit."""
        return self._total_asap

    @property
    def formula_expected(self) -> Optional[int]:
        """Closed-form depth, None without a formula."""
        return self._formula_expected

    @property
    def delta(self) -> Optional[int]:
        """total_sequential - formula_expected."""
        if self._formula_expected is None:
            return None
        return self._total_sequential - self._formula_expected

    def as_dict(self) -> dict:
        """Return report as dict of JSON-compatible values."""
        lead, const = printed_formula(self._variant, self._cost)
        return {
            'n': self._n,
            'variant': self._variant.key,
            'cost_model': self._cost.name or repr(self._cost),
            'mode': self._mode,
            'per_block': {kind.title: depth
                          for kind, depth in self._per_block.items()},
            'per_phase': self._per_phase,
            'total_sequential': self._total_sequential,
            'total_segmented': self._total_segmented,
            'total_asap': self._total_asap,
            'formula_expected': self._formula_expected,
            'delta': self.delta,
            'printed_formula': {'coefficient': lead, 'constant': const},
        }

    def to_json(self) -> str:
        """Return report as JSON document."""
        return json.dumps(self.as_dict())

    def to_text(self) -> str:
        """Return report as aligned plain-text table."""
        rows = [('Block', 'Depth')]
        rows.extend((kind.title, str(depth))
                    for kind, depth in self._per_block.items())
        rows.append(('', ''))
        rows.append(('Phase', 'Depth'))
        rows.extend((phase, str(depth))
                    for phase, depth in self._per_phase.items())
        rows.append(('', ''))
        rows.append(('Total (sequential)', str(self._total_sequential)))
        rows.append(('Total (segmented)', str(self._total_segmented)))
        rows.append(('Total (ASAP)', str(self._total_asap)))
        if self._formula_expected is not None:
            rows.append(('Formula', f"{self._formula_expected} "
                                    f"(delta {self.delta})"))
        width = max(len(left) for left, _ in rows)
        title = (f"2D adder n={self._n} {self._variant.key} "
                 f"({self._cost.name or self._cost!r}, {self._mode} mode)")
        lines = [title, '']
        lines.extend(f"{left:<{width}}  {right:>6}" if left else ''
                     for left, right in rows)
        return '\n'.join(lines) + '\n'

    def __repr__(self) -> str:
        return (f"DepthReport(n={self._n}, variant={self._variant.key}, "
                f"mode={self._mode}, total={self._total_sequential})")


def check_depths(n: int, variant: Variant, cost: CostModel = None,
                 mode: str = PAPER) -> DepthReport:
    """Compute the depths of the block-level adder of width `n`.

    Raises:
        ValueError: n is not a perfect square >= 4, or unknown `mode`.
    """
    _check_mode(mode)
    if cost is None:
        cost = CostModel.preset()
    _width_root(n)
    adder = assemble(AdderParams(n, variant))
    per_block = measured_block_depths(variant, cost, mode)
    segments = {phase: asap_depth(adder.phase(phase), cost)
                for phase in PHASES}
    total_segmented = sum(segments.values())
    if mode == PAPER:
        per_phase = _scheduled_phases(adder, cost)
        total_sequential = _scheduled_total(per_phase)
    else:
        per_phase = segments
        total_sequential = total_segmented
    total_asap = asap_depth(adder.circuit, cost)
    formula = formula_depth(n, variant, cost) if cost.name else None
    report = DepthReport(n, variant, cost, mode, per_block, per_phase,
                         total_sequential, total_segmented, total_asap,
                         formula)
    if report.delta:
        LOGGER.info("n=%d %s: sequential depth %d differs from formula %d.",
                    n, variant.key, total_sequential, formula)
    lead, const = printed_formula(variant, cost)
    if lead is not None:
        own_lead, own_const = formula_coefficients(variant, cost)
        if lead != own_lead or const not in (None, own_const):
            LOGGER.info("%s/%s: computed %d*sqrt(n)%+d, published %d%s.",
                        variant.key, cost.name, own_lead, own_const, lead,
                        '' if const is None else f"{const:+d}")
    return report


__all__ = [
    'CostModel',
    'DepthReport',
    'FREE',
    'MODES',
    'OPTIMIZED_ROW_SUM_CONSTANT',
    'PAPER',
    'asap_depth',
    'block_depth',
    'check_depths',
    'formula_coefficients',
    'formula_depth',
    'measured_block_depths',
    'paper_phases',
    'printed_formula',
]
