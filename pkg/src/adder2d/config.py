# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        config
# Purpose:     Process-wide defaults
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


"""Process-wide defaults."""

from __future__ import annotations

import os
from typing import Dict, Tuple


#: Environment variable capping the number of sweep worker threads.
THREADS_ENV_VAR = 'ADDER2D_THREADS'

#: Named cost models: (cnot, swap, one_qubit, toffoli_block).
COST_MODEL_PRESETS: Dict[str, Tuple[int, int, int, int]] = {
    't14s1': (1, 1, 1, 14),
    't14s3': (1, 3, 1, 14),
    't12s3': (1, 3, 1, 12),
    't12s1': (1, 1, 1, 12),
}

_dflt_cost_model = 't14s1'
_max_threads = None


def get_dflt_cost_model() -> str:
    """Return name of the default cost model."""
    global _dflt_cost_model
    return _dflt_cost_model


def set_dflt_cost_model(name: str) -> None:
    """Set default cost model.

    Args:
        name (str): name of one of the presets in `COST_MODEL_PRESETS`

    Raises:
        ValueError: `name` is not a known preset
    """
    global _dflt_cost_model
    if name not in COST_MODEL_PRESETS:
        raise ValueError(f"Unknown cost model: {name!r}; supported: "
                         f"{', '.join(COST_MODEL_PRESETS)}.")
    _dflt_cost_model = name


def _threads_from_env() -> int:
    val = os.getenv(THREADS_ENV_VAR)
    if val is None or not val.strip():
        return os.cpu_count() or 1
    try:
        n_threads = int(val)
    except ValueError:
        raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got "
                         f"{val!r}.") from None
    if n_threads < 1:
        raise ValueError(f"{THREADS_ENV_VAR} must be >= 1.")
    return n_threads


def get_max_threads() -> int:
    """Return maximum number of worker threads used by sweeps.

    Unless set by :func:`set_max_threads`, the value is read from the
    environment variable ADDER2D_THREADS, falling back to the number of
    CPUs.

    Raises:
        ValueError: ADDER2D_THREADS is not a positive integer
    """
    global _max_threads
    if _max_threads is None:
        return _threads_from_env()
    return _max_threads


def set_max_threads(n_threads: int = None) -> None:
    """Set maximum number of worker threads (None: use environment)."""
    global _max_threads
    if n_threads is not None and n_threads < 1:
        raise ValueError("Number of threads must be >= 1.")
    _max_threads = n_threads


__all__ = [
    'COST_MODEL_PRESETS',
    'THREADS_ENV_VAR',
    'get_dflt_cost_model',
    'get_max_threads',
    'set_dflt_cost_model',
    'set_max_threads',
]
