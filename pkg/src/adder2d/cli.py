# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        cli
# Purpose:     Command line interface
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


"""Command line interface.

Exit status is 0 on success, 1 if a verification failed and 2 on a usage
error. Reports are plain-text tables; with ``--json`` a single JSON
document is written instead.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from . import __version__
from .adder import AdderParams, assemble, cross_check
from .blocks import Variant
from .config import COST_MODEL_PRESETS, set_max_threads
from .decompose import DecompositionScheme, LinePlacement, expand_toffoli, \
    gate_counts, verify_toffoli
from .gates import format_gate_list
from .layout import AdjacencyError, build_layout
from .qasm import to_openqasm2
from .qec import adder_reduction_ratio, physical_counts_by_level, \
    qec_params, reported_ratios
from .schedule import CostModel, MODES, PAPER, asap_depth, check_depths
from .sim import exhaustive_pairs, random_pairs, sweep


LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

#: Largest width verified exhaustively (4**9 input pairs).
MAX_EXHAUSTIVE_N = 9

_VARIANTS = [v.key for v in Variant]
_SCHEMES = [s.key for s in DecompositionScheme]


def _width(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"n must be an integer, got {text!r}.") from None
    try:
        build_layout(n)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return n


def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        val = 0
    if val < 1:
        raise argparse.ArgumentTypeError(
            f"Expected a positive integer, got {text!r}.")
    return val


def _non_negative(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        val = -1
    if val < 0:
        raise argparse.ArgumentTypeError(
            f"Expected an integer >= 0, got {text!r}.")
    return val


def _fraction(frac: Fraction) -> str:
    return f"{frac.numerator}/{frac.denominator}"


def _table(title: str, rows: Sequence[Tuple[str, ...]]) -> str:
    widths = [max(len(row[i]) for row in rows)
              for i in range(len(rows[0]))]
    lines = [title, '']
    for row in rows:
        lines.append('  '.join(cell.ljust(width)
                               for cell, width in zip(row, widths)).rstrip())
    return '\n'.join(lines) + '\n'


def _emit(args: argparse.Namespace, doc: Dict[str, Any], text: str,
          out: TextIO) -> None:
    if args.json:
        out.write(json.dumps(doc) + '\n')
    else:
        out.write(text)


# --- generate ---------------------------------------------------------------

def _cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    params = AdderParams(args.n, Variant.from_key(args.variant),
                         DecompositionScheme.from_key(args.scheme),
                         args.expand)
    adder = assemble(params)
    if args.format == 'qasm':
        text = to_openqasm2(adder.circuit, adder.layout)
    elif args.format == 'iomap':
        text = adder.io_map_json() + '\n'
    else:
        text = format_gate_list(adder.circuit)
    if args.out:
        with open(args.out, 'w') as fp:
            fp.write(text)
        LOGGER.info("Wrote %d gates to %s.", len(adder.circuit), args.out)
    else:
        out.write(text)
    return EXIT_OK


# --- verify -----------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.threads is not None:
        set_max_threads(args.threads)
    if args.mode == 'exhaustive':
        a, b = exhaustive_pairs(args.n)
    else:
        a, b = random_pairs(args.n, args.samples, args.seed)
    variants = (list(Variant) if args.variant == 'both'
                else [Variant.from_key(args.variant)])
    doc: Dict[str, Any] = {'n': args.n, 'mode': args.mode,
                           'seed': args.seed, 'results': []}
    rows = [('Variant', 'Pairs', 'Failures')]
    passed = True
    for variant in variants:
        adder = assemble(AdderParams(args.n, variant))
        result = sweep(adder, a, b)
        passed = passed and result.passed
        doc['results'].append({
            'variant': variant.key,
            'n_checked': result.n_checked,
            'passed': result.passed,
            'failures': result.failures[:args.max_failures]})
        rows.append((variant.key, str(result.n_checked),
                     str(len(result.failures))))
    if args.statevector:
        worst = _statevector_check(args, a, b)
        passed = passed and worst < args.tolerance
        doc['statevector'] = {'max_off_target_mass': worst,
                              'tolerance': args.tolerance}
        rows.append(('statevector', str(min(a.size, args.sv_samples)),
                     f"max off-target mass {worst:.3g}"))
    doc['passed'] = passed
    if not passed and not args.json:
        failures = [f for r in doc['results'] for f in r['failures']]
        out.write(json.dumps({'n': args.n, 'failures': failures}) + '\n')
    _emit(args, doc, _table(f"Verification n={args.n} ({args.mode})", rows)
          + ('PASSED\n' if passed else 'FAILED\n'), out)
    return EXIT_OK if passed else EXIT_FAILED


def _statevector_check(args: argparse.Namespace, a: np.ndarray,
                       b: np.ndarray) -> float:
    adder = assemble(AdderParams(args.n, Variant.OPTIMIZED,
                                 DecompositionScheme.from_key(args.scheme),
                                 expand=True))
    worst = 0.0
    for ai, bi in list(zip(a.tolist(), b.tolist()))[:args.sv_samples]:
        worst = max(worst, cross_check(adder, ai, bi))
    return worst


# --- depth ------------------------------------------------------------------

def _cmd_depth(args: argparse.Namespace, out: TextIO) -> int:
    cost = CostModel.preset(args.cost_model)
    report = check_depths(args.n, Variant.from_key(args.variant), cost,
                          args.mode)
    if args.json:
        out.write(report.to_json() + '\n')
    else:
        out.write(report.to_text())
    return EXIT_OK


# --- decomp-check -----------------------------------------------------------

def _unit_depth(scheme: DecompositionScheme) -> int:
    return asap_depth(expand_toffoli(scheme, LinePlacement(0, 1, 2)),
                      CostModel(1, 1, 1, 1))


def _is_linear(scheme: DecompositionScheme) -> bool:
    circuit = expand_toffoli(scheme, LinePlacement(0, 1, 2))
    return all(abs(gate.qubits[0] - gate.qubits[1]) == 1
               for gate in circuit.gates if len(gate.qubits) == 2)


def _cmd_decomp_check(args: argparse.Namespace, out: TextIO) -> int:
    schemes = (list(DecompositionScheme) if args.scheme == 'all'
               else [DecompositionScheme.from_key(args.scheme)])
    rows = [('Scheme', 'Target', 'Passed', 'Max error', 'CNOT', 'SWAP',
             'H', 'T', 'Depth', 'Line')]
    records: List[Dict[str, Any]] = []
    passed = True
    for scheme in schemes:
        counts = gate_counts(scheme)
        depth = _unit_depth(scheme)
        linear = _is_linear(scheme)
        for target_middle in (False, True):
            ok, err = verify_toffoli(scheme, target_middle)
            passed = passed and ok
            records.append({'scheme': scheme.key,
                            'target_middle': target_middle,
                            'passed': ok, 'max_error': err,
                            'counts': counts._asdict(),
                            'depth': depth, 'nearest_neighbour': linear})
            rows.append((scheme.key, 'mid' if target_middle else 'tail',
                         'yes' if ok else 'NO', f"{err:.3g}",
                         str(counts.cnot), str(counts.swap), str(counts.h),
                         str(counts.t_count), str(depth),
                         'yes' if linear else 'no'))
    _emit(args, {'passed': passed, 'schemes': records},
          _table("Toffoli expansions", rows), out)
    return EXIT_OK if passed else EXIT_FAILED


# --- qec --------------------------------------------------------------------

def _cmd_qec(args: argparse.Namespace, out: TextIO) -> int:
    params = qec_params(args.nu, args.ne, args.level)
    cost = CostModel.preset(args.cost_model)
    ratio = adder_reduction_ratio(args.n, cost)
    counts = physical_counts_by_level(params, args.exact)
    doc = {
        'n': args.n,
        'cost_model': cost.name,
        'ratio_depth': _fraction(ratio.depth),
        'ratio_gates': _fraction(ratio.gates),
        'reported_ratios': {key: _fraction(val)
                            for key, val in reported_ratios().items()},
        'physical_counts_by_level': counts,
    }
    rows = [('Quantity', 'Value'),
            ('depth ratio', _fraction(ratio.depth)),
            (f"gate ratio (n={args.n})", _fraction(ratio.gates))]
    rows.extend((f"reported {key}", _fraction(val))
                for key, val in reported_ratios().items())
    rows.extend((f"physical gates L={lvl}", str(count))
                for lvl, count in enumerate(counts))
    _emit(args, doc, _table("Error correction overhead", rows), out)
    return EXIT_OK


# --- export-layout ----------------------------------------------------------

def _cmd_export_layout(args: argparse.Namespace, out: TextIO) -> int:
    text = build_layout(args.n).to_json() + '\n'
    if args.out:
        with open(args.out, 'w') as fp:
            fp.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the command line interface."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help="write a single JSON document")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="log progress (twice for debug output)")

    parser = argparse.ArgumentParser(
        prog='adder2d',
        description="Quantum adder on a 2D nearest-neighbour grid.")
    parser.add_argument('--version', action='version',
                        version="%(prog)s " + ".".join(map(str, __version__)))
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    cmd = sub.add_parser('generate', parents=[common],
                         help="write the circuit of an adder")
    cmd.add_argument('--n', type=_width, required=True)
    cmd.add_argument('--variant', choices=_VARIANTS, default='optimized')
    cmd.add_argument('--scheme', choices=_SCHEMES, default='standard')
    cmd.add_argument('--expand', action='store_true',
                     help="expand Toffolis into 1- and 2-qubit gates")
    cmd.add_argument('--format', choices=('gates', 'qasm', 'iomap'),
                     default='gates')
    cmd.add_argument('--out', help="output file (default: stdout)")
    cmd.set_defaults(func=_cmd_generate)

    cmd = sub.add_parser('verify', parents=[common],
                         help="check adders against integer addition")
    cmd.add_argument('--n', type=_width, required=True)
    cmd.add_argument('--mode', choices=('exhaustive', 'random'),
                     default='exhaustive')
    cmd.add_argument('--samples', type=_positive, default=1000)
    cmd.add_argument('--seed', type=int, default=None)
    cmd.add_argument('--variant', choices=_VARIANTS + ['both'],
                     default='both')
    cmd.add_argument('--threads', type=_positive, default=None,
                     help="worker threads (default: $ADDER2D_THREADS or "
                          "number of CPUs)")
    cmd.add_argument('--statevector', action='store_true',
                     help="also run the expanded optimized adder on the "
                          "statevector simulator")
    cmd.add_argument('--scheme', choices=('standard', 'peres'),
                     default='standard',
                     help="expansion used with --statevector")
    cmd.add_argument('--sv-samples', type=_positive, default=256)
    cmd.add_argument('--tolerance', type=float, default=1e-8)
    cmd.add_argument('--max-failures', type=_positive, default=10,
                     help="failure records reported per variant")
    cmd.set_defaults(func=_cmd_verify)

    cmd = sub.add_parser('depth', parents=[common],
                         help="report the depth of an adder")
    cmd.add_argument('--n', type=_width, required=True)
    cmd.add_argument('--variant', choices=_VARIANTS, default='optimized')
    cmd.add_argument('--cost-model', choices=list(COST_MODEL_PRESETS),
                     default=None)
    cmd.add_argument('--mode', choices=MODES, default=PAPER)
    cmd.set_defaults(func=_cmd_depth)

    cmd = sub.add_parser('decomp-check', parents=[common],
                         help="check the Toffoli expansions")
    cmd.add_argument('--scheme', choices=_SCHEMES + ['all'], default='all')
    cmd.set_defaults(func=_cmd_decomp_check)

    cmd = sub.add_parser('qec', parents=[common],
                         help="error correction overhead and ratios")
    cmd.add_argument('--nu', type=_non_negative, required=True,
                     help="logical operation count")
    cmd.add_argument('--ne', type=_positive, required=True,
                     help="physical instructions per logical gate")
    cmd.add_argument('--level', type=_non_negative, required=True,
                     help="concatenation level")
    cmd.add_argument('--exact', action='store_true',
                     help="use N_L = N_L-1 (1 + N_E)")
    cmd.add_argument('--n', type=_width, default=9,
                     help="adder width for the gate count ratio")
    cmd.add_argument('--cost-model', choices=list(COST_MODEL_PRESETS),
                     default=None)
    cmd.set_defaults(func=_cmd_qec)

    cmd = sub.add_parser('export-layout', parents=[common],
                         help="write the grid layout as JSON")
    cmd.add_argument('--n', type=_width, required=True)
    cmd.add_argument('--out', help="output file (default: stdout)")
    cmd.set_defaults(func=_cmd_export_layout)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                     logging.DEBUG)
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None,
         out: TextIO = None) -> int:
    """Run the command line interface.

    Returns:
        exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _configure_logging(args.verbose)
    if out is None:
        out = sys.stdout
    if args.command == 'verify':
        if args.mode == 'exhaustive' and args.n > MAX_EXHAUSTIVE_N:
            sys.stderr.write(f"adder2d verify: exhaustive mode supports "
                             f"n <= {MAX_EXHAUSTIVE_N}, use --mode "
                             "random.\n")
            return EXIT_USAGE
    try:
        return args.func(args, out)
    except AdjacencyError as exc:
        sys.stderr.write(f"adder2d {args.command}: {exc}\n")
        return EXIT_FAILED
    except ValueError as exc:
        sys.stderr.write(f"adder2d {args.command}: {exc}\n")
        return EXIT_USAGE


__all__ = [
    'EXIT_FAILED',
    'EXIT_OK',
    'EXIT_USAGE',
    'build_parser',
    'main',
]
