# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        blocks
# Purpose:     Building blocks of the 2D adder
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


"""Building blocks of the 2D adder.

Every block is a gate sequence over named ports. `T(x,y,z)` denotes a
block-level Toffoli with target z, `C(x,y)` a CNOT with target y and
`S(x,y)` a SWAP. SWAPs move data, so a result may land on a port different
from the one it started on; :func:`block_semantics` states where.

Baseline sequences:

    ============= ========================================================
    HALF_ADDER    T(a,b,0) C(a,b)
    FULL_ADDER    T(a,b,0) C(a,b) S(c,a) T(a,b,0) C(a,b) S(c,a)
    GP            T(a,b,g) C(a,b)
    BIGGP         S(G,a) S(P,G) T(a,p,g) S(G,a) S(g,0) T(a,p,g) S(G,a)
                  S(P,G) S(G,a)
    COLUMN_CARRY  S(P,G) T(C,G,P) S(G,C) S(P,G) S(G,C)
    CARRY         S(P,G) S(p,C) S(a,p) T(a,G,P) S(G,a) S(P,G)
    CARRY1        S(g,c) T(p,g,c) S(p,g)
    SUM           S(c,P) S(P,a) C(a,p) S(P,a) S(c,P)
    SUM1          S(c,a) C(a,p) S(c,a)
    SUM2          C(c,p)
    ============= ========================================================

Optimized sequences:

    ============= ========================================================
    FULL_ADDER    as baseline, the first T and C run beside the previous
                  block
    BIGGP         S(a,p) S(p,g) T(G,a,p) S(P,G) S(p,g) S(a,p) S(g,0)
                  S(G,a) S(P,G) T(a,p,g)
    COLUMN_CARRY  T(P,c,G) S(G,c) S(P,G) S(G,c)
    CARRY         S(p,c) T(a,p,G) S(a,p) S(G,a) S(P,G) S(a,p) S(G,a)
                  S(p,c)
    CARRY1        S(p,c) T(a,p,G) S(G,a) S(P,G) S(a,p) S(G,a) S(p,c)
    SUM           C(c,p)
    ============= ========================================================

The optimized BIGGP leaves its first three ports permuted: P holds the
old `a`, `a` the old P. The optimized CARRY and CARRY1 take their inputs
in exactly this arrangement, i.e. they complete the transport the G,P
block left undone.

Gates which run beside a neighbouring block are flagged (see
:attr:`BlockInstance.overlap`); they do not count when the depth of a
block is taken in free mode.

SCRUB, SCRUB_SECOND, SCRUB_LAST and TRANSPORT are helpers of the adder
rather than arithmetic blocks. They erase the propagate prefixes
after the carries are known and move single values between cells.

Helper sequences:

    ============= ========================================================
    SCRUB         baseline: S(c,P) S(a,p) S(p,c) T(Q,a,p) S(p,c)
                  optimized: S(Q,a) S(c,P) T(a,p,c) S(c,P) S(Q,a)
    SCRUB_SECOND  S(Q,x) S(c,P) S(x,a) T(a,p,c) S(x,a) S(Q,x) S(c,P)
    SCRUB_LAST    S(a,p) S(p,c) T(Q,a,p) S(p,c)
    TRANSPORT     S(x,y)
    ============= ========================================================
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Callable, Dict, Mapping, Sequence, Tuple

from .gates import Circuit, Gate, GateKind
from .layout import AdjacencyError, GridLayout, is_adjacent, toffoli_path


LOGGER = logging.getLogger(__name__)


class Variant(Enum):

    """Adder variant."""

    __next_value__ = 1

    def __new__(cls, key: str, doc: str) -> 'Variant':
        """Return new member of the Enum."""
        member = object.__new__(cls)
        member._value_ = cls.__next_value__
        cls.__next_value__ += 1
        member.key = key
        member.__doc__ = doc
        return member

    #: Blocks as listed in the baseline gate table.
    BASELINE = 'baseline', 'Blocks as listed in the baseline gate table.'
    #: Blocks with reduced SWAP overhead.
    OPTIMIZED = 'optimized', 'Blocks with reduced SWAP overhead.'

    @classmethod
    def from_key(cls, key: str) -> Variant:
        """Return variant with given name (baseline or optimized)."""
        for variant in cls:
            if variant.key == key:
                return variant
        raise ValueError(f"Unknown variant: {key!r}; supported: "
                         f"{', '.join(v.key for v in cls)}.")


class BlockKind(Enum):

    """Enumeration of building blocks."""

    __next_value__ = 1

    def __new__(cls, title: str) -> 'BlockKind':
        """Return new member of the Enum."""
        member = object.__new__(cls)
        member._value_ = cls.__next_value__
        cls.__next_value__ += 1
        member.title = title
        return member

    #: Ripple half adder of the first bit in the first column.
    HALF_ADDER = 'Half-adder'
    #: Ripple full adder.
    FULL_ADDER = 'Full-adder'
    #: Generate and propagate of one bit.
    GP = 'g,p'
    #: Generate and propagate of the first bit of a column.
    GP_FIRST = 'g,p (first)'
    #: Column prefix of generate and propagate.
    BIGGP = 'G,P'
    #: First column prefix step.
    BIGGP_FIRST = 'G,P (first)'
    #: Carry from one column to the next.
    COLUMN_CARRY = 'Column_carry'
    #: Carry into a bit inside a column.
    CARRY = 'Carry'
    #: Carry into the second bit of a column.
    CARRY1 = 'Carry1'
    #: Sum bit.
    SUM = 'SUM'
    #: Sum bit, carry one cell away.
    SUM1 = 'SUM1'
    #: Sum bit, carry adjacent.
    SUM2 = 'SUM2'
    #: Erase a column prefix of propagate values.
    SCRUB = 'Scrub'
    #: Erase the last column prefix of propagate values.
    SCRUB_LAST = 'Scrub (last)'
    #: Erase the prefix of the second bit of a column.
    SCRUB_SECOND = 'Scrub (second bit)'
    #: Data movement by a single SWAP.
    TRANSPORT = 'Transport'


_T, _C, _S = GateKind.TOFFOLI, GateKind.CNOT, GateKind.SWAP

_Seq = Tuple[Tuple, ...]

_HA_SEQ = ((_T, 'a', 'b', '0'), (_C, 'a', 'b'))
_FA_SEQ = ((_T, 'a', 'b', '0'), (_C, 'a', 'b'), (_S, 'c', 'a'),
           (_T, 'a', 'b', '0'), (_C, 'a', 'b'), (_S, 'c', 'a'))
_GP_SEQ = ((_T, 'a', 'b', 'g'), (_C, 'a', 'b'))
_BIGGP_SEQ = ((_S, 'G', 'a'), (_S, 'P', 'G'), (_T, 'a', 'p', 'g'),
              (_S, 'G', 'a'), (_S, 'g', '0'), (_T, 'a', 'p', 'g'),
              (_S, 'G', 'a'), (_S, 'P', 'G'), (_S, 'G', 'a'))
# G Toffoli first, P Toffoli last; the final S(G,a) S(P,G) S(G,a) of the
# baseline block is left to the carry blocks
_BIGGP_OPT_SEQ = ((_S, 'a', 'p'), (_S, 'p', 'g'), (_T, 'G', 'a', 'p'),
                  (_S, 'P', 'G'), (_S, 'p', 'g'), (_S, 'a', 'p'),
                  (_S, 'g', '0'), (_S, 'G', 'a'), (_S, 'P', 'G'),
                  (_T, 'a', 'p', 'g'))
_CC_SEQ = ((_S, 'P', 'G'), (_T, 'C', 'G', 'P'), (_S, 'G', 'C'),
           (_S, 'P', 'G'), (_S, 'G', 'C'))
_CC_OPT_SEQ = ((_T, 'P', 'c', 'G'), (_S, 'G', 'c'), (_S, 'P', 'G'),
               (_S, 'G', 'c'))
_CARRY_SEQ = ((_S, 'P', 'G'), (_S, 'p', 'C'), (_S, 'a', 'p'),
              (_T, 'a', 'G', 'P'), (_S, 'G', 'a'), (_S, 'P', 'G'))
_CARRY_OPT_SEQ = ((_S, 'p', 'c'), (_T, 'a', 'p', 'G'), (_S, 'a', 'p'),
                  (_S, 'G', 'a'), (_S, 'P', 'G'), (_S, 'a', 'p'),
                  (_S, 'G', 'a'), (_S, 'p', 'c'))
_CARRY1_SEQ = ((_S, 'g', 'c'), (_T, 'p', 'g', 'c'), (_S, 'p', 'g'))
_CARRY1_OPT_SEQ = ((_S, 'p', 'c'), (_T, 'a', 'p', 'G'), (_S, 'G', 'a'),
                   (_S, 'P', 'G'), (_S, 'a', 'p'), (_S, 'G', 'a'),
                   (_S, 'p', 'c'))
_SUM_SEQ = ((_S, 'c', 'P'), (_S, 'P', 'a'), (_C, 'a', 'p'), (_S, 'P', 'a'),
            (_S, 'c', 'P'))
_SUM1_SEQ = ((_S, 'c', 'a'), (_C, 'a', 'p'), (_S, 'c', 'a'))
_SUM2_SEQ = ((_C, 'c', 'p'),)
_SCRUB_SEQ = ((_S, 'c', 'P'), (_S, 'a', 'p'), (_S, 'p', 'c'),
              (_T, 'Q', 'a', 'p'), (_S, 'p', 'c'))
_SCRUB_LAST_SEQ = ((_S, 'a', 'p'), (_S, 'p', 'c'), (_T, 'Q', 'a', 'p'),
                   (_S, 'p', 'c'))
_SCRUB_OPT_SEQ = ((_S, 'Q', 'a'), (_S, 'c', 'P'), (_T, 'a', 'p', 'c'),
                  (_S, 'c', 'P'), (_S, 'Q', 'a'))
_SCRUB_SECOND_SEQ = ((_S, 'Q', 'x'), (_S, 'c', 'P'), (_S, 'x', 'a'),
                     (_T, 'a', 'p', 'c'), (_S, 'x', 'a'), (_S, 'Q', 'x'),
                     (_S, 'c', 'P'))
_TRANSPORT_SEQ = ((_S, 'x', 'y'),)


def _ha(v: Mapping[str, int]) -> Dict[str, int]:
    a, b, z = v['a'], v['b'], v['0']
    return {'a': a, 'b': a ^ b, '0': z ^ (a & b)}


def _fa(v: Mapping[str, int]) -> Dict[str, int]:
    c, a, b, z = v['c'], v['a'], v['b'], v['0']
    return {'c': c, 'a': a, 'b': a ^ b ^ c,
            '0': z ^ (a & b) ^ (c & (a ^ b))}


def _gp(v: Mapping[str, int]) -> Dict[str, int]:
    a, b, g = v['a'], v['b'], v['g']
    return {'a': a, 'b': a ^ b, 'g': g ^ (a & b)}


def _biggp(v: Mapping[str, int]) -> Dict[str, int]:
    big_p, big_g, a, p, g, z = (v['P'], v['G'], v['a'], v['p'], v['g'],
                                v['0'])
    # g port receives P[i,j], 0 port receives G[i,j]
    return {'P': big_p, 'G': big_g, 'a': a, 'p': p,
            'g': z ^ (big_p & p), '0': g ^ (big_g & p)}


def _biggp_opt(v: Mapping[str, int]) -> Dict[str, int]:
    res = _biggp(v)
    res['P'], res['a'] = v['a'], v['P']
    return res


def _cc(v: Mapping[str, int]) -> Dict[str, int]:
    x, y, z = v['P'], v['G'], v['C']
    return {'P': z, 'G': x, 'C': y ^ (x & z)}


def _cc_opt(v: Mapping[str, int]) -> Dict[str, int]:
    x, y, z = v['P'], v['G'], v['c']
    return {'P': z, 'G': y ^ (x & z), 'c': x}


def _carry(v: Mapping[str, int]) -> Dict[str, int]:
    u1, u2, u3, u4, u5 = v['P'], v['G'], v['a'], v['p'], v['C']
    return {'P': u5, 'G': u2 ^ (u1 & u5), 'a': u1, 'p': u3, 'C': u4}


# inputs of the optimized carries: P port holds a, a port holds P
def _carry_opt(v: Mapping[str, int]) -> Dict[str, int]:
    u1, u2, u3, u4, u5 = v['P'], v['G'], v['a'], v['p'], v['c']
    return {'P': u5, 'G': u3, 'a': u1, 'p': u4, 'c': u2 ^ (u3 & u5)}


def _carry1(v: Mapping[str, int]) -> Dict[str, int]:
    x, y, z = v['p'], v['g'], v['c']
    return {'p': z, 'g': x, 'c': y ^ (x & z)}


def _carry1_opt(v: Mapping[str, int]) -> Dict[str, int]:
    u1, u2, u3, u4, u5 = v['P'], v['G'], v['a'], v['p'], v['c']
    return {'P': u3, 'G': u5, 'a': u1, 'p': u4, 'c': u2 ^ (u3 & u5)}


def _sum(v: Mapping[str, int]) -> Dict[str, int]:
    res = dict(v)
    res['p'] = v['p'] ^ v['c']
    return res


def _scrub(v: Mapping[str, int]) -> Dict[str, int]:
    q, a, p, c, big_p = v['Q'], v['a'], v['p'], v['c'], v['P']
    return {'Q': q, 'a': p, 'p': a, 'c': big_p ^ (q & p), 'P': c}


def _scrub_last(v: Mapping[str, int]) -> Dict[str, int]:
    q, a, p, c = v['Q'], v['a'], v['p'], v['c']
    return {'Q': q, 'a': p, 'p': a, 'c': c ^ (q & p)}


def _scrub_opt(v: Mapping[str, int]) -> Dict[str, int]:
    res = dict(v)
    res['P'] = v['P'] ^ (v['Q'] & v['p'])
    return res


def _transport(v: Mapping[str, int]) -> Dict[str, int]:
    return {'x': v['y'], 'y': v['x']}


class _Def:

    __slots__ = ('ports', 'seq', 'overlap', 'semantics', 'order')

    def __init__(self, ports: str, seq: _Seq,
                 semantics: Callable[[Mapping[str, int]], Dict[str, int]],
                 overlap: Sequence[int] = (),
                 order: Sequence[Tuple[int, int]] = ()) -> None:
        self.ports = tuple(ports.split())
        self.seq = seq
        self.overlap = frozenset(overlap)
        self.semantics = semantics
        self.order = tuple(order)


_B, _O = Variant.BASELINE, Variant.OPTIMIZED
_K = BlockKind

# the G Toffoli starts after P has been moved aside
_BIGGP_ORDER = ((1, 2),)

_DEFS: Dict[Tuple[BlockKind, Variant], _Def] = {
    (_K.HALF_ADDER, _B): _Def('a b 0', _HA_SEQ, _ha),
    (_K.HALF_ADDER, _O): _Def('a b 0', _HA_SEQ, _ha),
    (_K.FULL_ADDER, _B): _Def('c a b 0', _FA_SEQ, _fa),
    # the bit's own Toffoli and CNOT run beside the previous full adder
    (_K.FULL_ADDER, _O): _Def('c a b 0', _FA_SEQ, _fa, (0, 1)),
    (_K.GP, _B): _Def('a b g', _GP_SEQ, _gp),
    (_K.GP, _O): _Def('a b g', _GP_SEQ, _gp),
    (_K.GP_FIRST, _O): _Def('a b g', _GP_SEQ, _gp),
    (_K.BIGGP, _B): _Def('P G a p g 0', _BIGGP_SEQ, _biggp,
                         order=_BIGGP_ORDER),
    # leading SWAP beside the previous block, P Toffoli beside the next
    (_K.BIGGP, _O): _Def('P G a p g 0', _BIGGP_OPT_SEQ, _biggp_opt,
                         (0, 3, 5, 7, 8, 9)),
    # both Toffolis on the critical path, SWAPs into place beside g,p
    (_K.BIGGP_FIRST, _O): _Def('P G a p g 0', _BIGGP_OPT_SEQ, _biggp_opt,
                               (0, 1, 3, 5, 7, 8)),
    (_K.COLUMN_CARRY, _B): _Def('P G C', _CC_SEQ, _cc),
    (_K.COLUMN_CARRY, _O): _Def('P G c', _CC_OPT_SEQ, _cc_opt),
    (_K.CARRY, _B): _Def('P G a p C', _CARRY_SEQ, _carry),
    (_K.CARRY, _O): _Def('P G a p c', _CARRY_OPT_SEQ, _carry_opt, (0,)),
    (_K.CARRY1, _B): _Def('p g c', _CARRY1_SEQ, _carry1),
    (_K.CARRY1, _O): _Def('P G a p c', _CARRY1_OPT_SEQ, _carry1_opt,
                          (0,)),
    (_K.SUM, _B): _Def('c P a p', _SUM_SEQ, _sum),
    (_K.SUM, _O): _Def('c p', _SUM2_SEQ, _sum),
    (_K.SUM1, _B): _Def('c a p', _SUM1_SEQ, _sum),
    (_K.SUM2, _B): _Def('p c', _SUM2_SEQ, _sum),
    (_K.SCRUB, _B): _Def('Q a p c P', _SCRUB_SEQ, _scrub),
    (_K.SCRUB, _O): _Def('Q a p c P', _SCRUB_OPT_SEQ, _scrub_opt),
    (_K.SCRUB_SECOND, _O): _Def('Q x a p c P', _SCRUB_SECOND_SEQ,
                                _scrub_opt),
    (_K.SCRUB_LAST, _B): _Def('Q a p c', _SCRUB_LAST_SEQ, _scrub_last),
    (_K.TRANSPORT, _B): _Def('x y', _TRANSPORT_SEQ, _transport),
    (_K.TRANSPORT, _O): _Def('x y', _TRANSPORT_SEQ, _transport),
}

# drawn SWAPs vs. SWAPs named in the accompanying text
_CAPTION_SWAPS = {(_K.CARRY, _O): 5}


def _lookup(kind: BlockKind, variant: Variant) -> _Def:
    try:
        return _DEFS[(kind, variant)]
    except KeyError:
        raise ValueError(f"{variant.key} variant has no {kind.name} "
                         "block.") from None


def has_block(kind: BlockKind, variant: Variant) -> bool:
    """Return True if `variant` defines a block of `kind`."""
    return (kind, variant) in _DEFS


def block_ports(kind: BlockKind, variant: Variant) -> Tuple[str, ...]:
    """Return the formal ports of a block in signature order."""
    return _lookup(kind, variant).ports


class BlockInstance:

    """Block bound to qubits.

    Attributes:
        kind: kind of the block
        variant: variant the block belongs to
        wires: map from formal port to qubit index
        circuit: block-level circuit (Toffolis not expanded)
        overlap: per gate of `circuit`, True if the gate is hidden under
            the neighbouring block; honored in free mode only
        order: pairs (before, after) of gate positions; the gate at
            `after` does not start before the gate at `before` has ended

    :class:`BlockInstance` instances are immutable.
    """

    __slots__ = ('_kind', '_variant', '_wires', '_circuit', '_overlap',
                 '_order')

    def __init__(self, kind: BlockKind, variant: Variant,
                 wires: Mapping[str, int], circuit: Circuit,
                 overlap: Sequence[bool],
                 order: Sequence[Tuple[int, int]] = ()) -> None:
        self._kind = kind
        self._variant = variant
        self._wires = dict(wires)
        self._circuit = circuit
        self._overlap = tuple(overlap)
        self._order = tuple(order)

    @property
    def kind(self) -> BlockKind:
        """Kind of the block."""
        return self._kind

    @property
    def variant(self) -> Variant:
        """Variant the block belongs to."""
        return self._variant

    @property
    def wires(self) -> Dict[str, int]:
        """Map from formal port to qubit index."""
        return dict(self._wires)

    @property
    def circuit(self) -> Circuit:
        """Block-level circuit."""
        return self._circuit

    @property
    def overlap(self) -> Tuple[bool, ...]:
        """Overlap flags, one per gate."""
        return self._overlap

    @property
    def order(self) -> Tuple[Tuple[int, int], ...]:
        """Extra ordering constraints between gates."""
        return self._order

    def __repr__(self) -> str:
        wires = ', '.join(f"{p}={q}" for p, q in self._wires.items())
        return (f"BlockInstance({self._kind.name}, {self._variant.key}, "
                f"{wires})")


def _check_gate(gate: Gate, layout: GridLayout, kind: BlockKind) -> None:
    if gate.kind is GateKind.TOFFOLI:
        valid = toffoli_path(layout, gate) is not None
    else:
        valid = len(gate.qubits) < 2 or is_adjacent(layout, *gate.qubits)
    if not valid:
        cells = [layout.cell_of(q) for q in gate.qubits]
        raise AdjacencyError(f"{kind.name}: {gate!r} acts on "
                             f"non-neighbouring cells {cells}.")


def build_block(kind: BlockKind, variant: Variant, wires: Mapping[str, int],
                n_qubits: int = None,
                layout: GridLayout = None) -> BlockInstance:
    """Bind a block's gate sequence to qubits.

    Args:
        kind: kind of the block
        variant: variant of the block
        wires: map from every formal port to a qubit index
        n_qubits: size of the circuit (default: layout's qubit count or
            largest index + 1)
        layout: grid to check adjacency against

    Raises:
        ValueError: `variant` has no block of `kind`, or `wires` does not
            match the block's ports.
        AdjacencyError: with `layout` given, a gate acts on cells which are
            not neighbours.
    """
    definition = _lookup(kind, variant)
    if set(wires) != set(definition.ports):
        raise ValueError(f"{kind.name} needs ports "
                         f"{', '.join(definition.ports)}, got "
                         f"{', '.join(wires)}.")
    if len(set(wires.values())) != len(wires):
        raise ValueError(f"{kind.name}: ports must be bound to distinct "
                         "qubits.")
    if n_qubits is None:
        n_qubits = (layout.n_qubits if layout is not None
                    else max(wires.values()) + 1)
    gates = [Gate(gk, *(wires[port] for port in ports))
             for gk, *ports in definition.seq]
    if layout is not None:
        for gate in gates:
            _check_gate(gate, layout, kind)
    overlap = [pos in definition.overlap for pos in range(len(gates))]
    return BlockInstance(kind, variant, wires,
                         Circuit(n_qubits, gates, kind.title), overlap,
                         definition.order)


def canonical_block(kind: BlockKind, variant: Variant) -> BlockInstance:
    """Return block with its ports bound to qubits 0, 1, ... in order."""
    ports = block_ports(kind, variant)
    return build_block(kind, variant,
                       {port: q for q, port in enumerate(ports)})


def block_semantics(kind: BlockKind, variant: Variant,
                    inputs: Mapping[str, int]) -> Dict[str, int]:
    """Return the classical outputs of a block, per port.

    Args:
        kind: kind of the block
        variant: variant of the block
        inputs: bit per formal port

    Returns:
        bit per formal port after the block has been applied
    """
    definition = _lookup(kind, variant)
    return definition.semantics(inputs)


def swap_discrepancies() -> Dict[Tuple[BlockKind, Variant], Tuple[int, int]]:
    """Return blocks whose drawn SWAP count differs from the stated one.

    Returns:
        map (kind, variant) -> (drawn, stated)
    """
    res = {}
    for key, stated in _CAPTION_SWAPS.items():
        drawn = sum(1 for gk, *_ in _DEFS[key].seq if gk is _S)
        if drawn != stated:
            LOGGER.info("%s (%s): %d SWAPs drawn, %d stated.",
                        key[0].title, key[1].key, drawn, stated)
            res[key] = (drawn, stated)
    return res


__all__ = [
    'BlockInstance',
    'BlockKind',
    'Variant',
    'block_ports',
    'block_semantics',
    'build_block',
    'canonical_block',
    'has_block',
    'swap_discrepancies',
]
