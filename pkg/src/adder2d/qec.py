# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        qec
# Purpose:     Gate-count overhead under concatenated error correction
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


"""Gate-count overhead under concatenated error correction.

A computation with N_U fault-tolerant logical operations, each of which
needs N_E physical instructions for its error correction (worst case,
transport SWAPs included), needs

    N_L = N_{L-1} + N_{L-1} * N_E,   N_0 = N_U

physical gates at concatenation level L. The usual estimate drops the
first term, giving N_L = N_U * N_E ** L.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, NamedTuple

from .adder import AdderParams, assemble
from .blocks import Variant
from .decompose import DecompositionScheme
from .schedule import CostModel, formula_coefficients


class QecParams(NamedTuple):
    """Parameters of a concatenated code estimate.

    Use :func:`qec_params` to get a validated instance.
    """

    n_u: int
    n_e: int
    level: int


def qec_params(n_u: int, n_e: int, level: int) -> QecParams:
    """Return validated :class:`QecParams`.

    Raises:
        TypeError: an argument is not an int.
        ValueError: n_u < 0, n_e < 1 or level < 0.
    """
    for name, value in (('n_u', n_u), ('n_e', n_e), ('level', level)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must be an int, not "
                            f"{type(value).__name__}.")
    if n_u < 0:
        raise ValueError("n_u must be >= 0.")
    if n_e < 1:
        raise ValueError("n_e must be >= 1.")
    if level < 0:
        raise ValueError("level must be >= 0.")
    return QecParams(n_u, n_e, level)


def physical_gate_count(params: QecParams, exact: bool = False) -> int:
    """Return the physical gate count at the parameters' level.

    Args:
        params: logical operation count, instructions per gate and level
        exact: use N_{L-1} (1 + N_E) per level instead of N_{L-1} N_E

    Returns:
        exact integer count
    """
    n_u, n_e, level = qec_params(*params)
    factor = n_e + 1 if exact else n_e
    return n_u * factor ** level


def physical_counts_by_level(params: QecParams,
                             exact: bool = False) -> List[int]:
    """Return the physical gate counts for levels 0 to `params.level`."""
    n_u, n_e, level = qec_params(*params)
    return [physical_gate_count(QecParams(n_u, n_e, lvl), exact)
            for lvl in range(level + 1)]


class ReductionRatio(NamedTuple):
    """Optimized over baseline adder."""

    #: ratio of the leading depth coefficients
    depth: Fraction
    #: ratio of the total gate counts at the given width
    gates: Fraction


def _gate_total(n: int, variant: Variant) -> int:
    adder = assemble(AdderParams(n, variant,
                                 DecompositionScheme.STANDARD_6CNOT,
                                 expand=True))
    return len(adder.circuit)


def adder_reduction_ratio(n: int, cost: CostModel = None) -> ReductionRatio:
    """Return optimized / baseline ratios of depth and gate count.

    The gate counts are taken from both adders of width `n`, with every
    Toffoli expanded by the standard scheme.

    Raises:
        ValueError: n is not a perfect square >= 4.
    """
    if cost is None:
        cost = CostModel.preset()
    opt_lead, _ = formula_coefficients(Variant.OPTIMIZED, cost)
    base_lead, _ = formula_coefficients(Variant.BASELINE, cost)
    return ReductionRatio(
        Fraction(opt_lead, base_lead),
        Fraction(_gate_total(n, Variant.OPTIMIZED),
                 _gate_total(n, Variant.BASELINE)))


def reported_ratios() -> Dict[str, Fraction]:
    """Return the published reduction factors.

    The depth improvement (26/35) and the stated gate-count reduction
    (24/35) disagree with each other and with the ratio of the leading
    coefficients in the Peres cost model over the baseline (92/140).
    All three are returned as published.
    """
    return {
        'depth': Fraction(26, 35),
        'gates': Fraction(24, 35),
        'peres_over_baseline': Fraction(92, 140),
    }


__all__ = [
    'QecParams',
    'ReductionRatio',
    'adder_reduction_ratio',
    'physical_counts_by_level',
    'physical_gate_count',
    'qec_params',
    'reported_ratios',
]
