"""Command line interface: `kacmoody COMMAND --input FILE [options]`."""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from ._utils import _check_arg, _logger
from .errors import KacMoodyError, exit_codes
from .invariants import (
    bilinear_form,
    check_divisibility_lemma,
    invariance_check_derivative,
    invariant_space,
    is_invariant,
    molien_series,
    verify_layer_recurrences,
    verify_main_theorem,
)
from .cartan import MatrixKind
from .matrix_io import read_matrix
from .polyring import WeightPolynomial, monomial_exponents
from .subalgebra import build_regular_chain
from .topology import (
    cohomology_presentation,
    group_poincare,
    homotopy_report,
    reconstruct_flag_series,
)
from .weyl import enumerate_by_length

COMMANDS = ['classify', 'symmetrize', 'invariants', 'subalgebra', 'poincare', 'cohomology', 'verify']
FORMATS = ['json', 'text']
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']


@dataclass(frozen=True)
class JobConfig:
    """One CLI invocation.

    Attributes:
        `command` (`str`): One of `COMMANDS`.
        `input` (`str`): A matrix file path, or `fixture:NAME`.
        `max_degree` (`int`): Invariant polynomial degree cutoff.
        `max_length` (`int`): Weyl group length cutoff N. The cohomological
            degree cutoff is 2N.
        `format` (`str`): 'json' or 'text'.
        `seed` (`int | None`): Seed for the randomized checks of `verify`.
        `log_level` (`str`): Level for the `kacmoody` logger.
    """
    command: str
    input: str
    max_degree: int = 6
    max_length: int = 12
    format: str = 'json'
    seed: int | None = None
    log_level: str = 'WARNING'

    @property
    def cohomology_degree(self) -> int:
        return 2 * self.max_length

    def validate(self) -> 'JobConfig':
        _check_arg(self.command, 'command', COMMANDS)
        _check_arg(self.format, 'format', FORMATS)
        _check_arg(self.log_level, 'log_level', LOG_LEVELS)
        for name in ['max_degree', 'max_length']:
            value = getattr(self, name)
            if value < 1:
                raise ValueError(f'Invalid `{name}`. \n  i: Check {value!r}. \n  i: Cutoffs must be positive.')
        if not self.input.startswith('fixture:') and not Path(self.input).is_file():
            raise ValueError(f'Invalid `input`. \n  i: Check that {self.input} is a readable file.')
        return self


def _classify(a, config):
    report = a.classify().to_dict()
    if len(report['blocks']) == 1:
        del report['block_types']
    return report


def _symmetrize(a, config):
    report = a.symmetrize().to_dict()
    if report['exists'] and a.is_indecomposable():
        report['bilinear_form'] = bilinear_form(a).to_dict()
    return report


def _invariants(a, config):
    spaces = [invariant_space(a, l) for l in range(config.max_degree + 1)]
    return {
        'dims': [s.dim for s in spaces],
        'degrees': [
            {**s.to_dict(), 'basis_text': [str(f) for f in s.basis]}
            for s in spaces
        ],
    }


def _subalgebra(a, config):
    return build_regular_chain(a).to_dict()


def _poincare(a, config):
    growth = enumerate_by_length(a, config.max_length)
    report = {'growth': growth.to_dict()}
    if a.is_indecomposable() and a.classify().kind is MatrixKind.INDEFINITE:
        report['homotopy'] = homotopy_report(
            a, max_length=config.max_length, max_degree=config.cohomology_degree
        ).to_dict()
    return report


def _cohomology(a, config):
    return cohomology_presentation(
        a, max_degree=config.cohomology_degree, max_length=config.max_length
    ).to_dict()


def _random_derivative_checks(a, seed: int, count: int=10) -> pd.DataFrame:
    rng = np.random.default_rng(seed)
    rows = []
    for k in range(count):
        degree = int(rng.integers(1, 4))
        exps = monomial_exponents(a.n, degree)
        coeffs = rng.integers(-3, 4, size=len(exps))
        f = WeightPolynomial.from_terms(dict(zip(exps, (int(c) for c in coeffs))), a.n)
        rows.append({
            'check': 'derivative_criterion',
            'detail': f'random degree-{degree} polynomial #{k}',
            'passed': invariance_check_derivative(a, f) == is_invariant(a, f),
        })
    return pd.DataFrame(rows)


def _verify(a, config) -> pd.DataFrame:
    frames = []
    if a.classify().kind is MatrixKind.FINITE:
        dims = [invariant_space(a, l).dim for l in range(config.max_degree + 1)]
        molien = molien_series(a, config.max_degree)
        frames.append(pd.DataFrame([
            {'check': 'molien', 'detail': f'degree {l}: {d} vs {m}', 'passed': d == m}
            for l, (d, m) in enumerate(zip(dims, molien))
        ]))
    else:
        main = verify_main_theorem(a, config.max_degree)
        frames.append(pd.DataFrame({
            'check': 'main_theorem',
            'detail': [f'degree {l}: dim {d}' for l, d in zip(main['degree'], main['dim'])],
            'passed': main['passed'],
        }))

        for l in range(1, config.max_degree + 1):
            space = invariant_space(a, l)
            for b, f in enumerate(space.basis):
                layers = verify_layer_recurrences(a, f)
                frames.append(pd.DataFrame({
                    'check': 'layer_recurrences',
                    'detail': [f'degree {l} basis {b}: {r} {i}' for r, i in zip(layers['relation'], layers['index'])],
                    'passed': layers['passed'],
                }))
                frames.append(pd.DataFrame([{
                    'check': 'derivative_criterion',
                    'detail': f'degree {l} basis {b}',
                    'passed': invariance_check_derivative(a, f),
                }]))
            divisibility = check_divisibility_lemma(a, l)
            if len(divisibility) > 0:
                frames.append(pd.DataFrame({
                    'check': 'divisibility',
                    'detail': [f'degree {l} basis {b}: w{v}' for b, v in zip(divisibility['basis_index'], divisibility['variable'])],
                    'passed': divisibility['passed'],
                }))

        report = homotopy_report(a, max_length=config.max_length, max_degree=config.cohomology_degree)
        rebuilt = reconstruct_flag_series(report.n, report.epsilon, report.i_even, report.max_degree)
        frames.append(pd.DataFrame([
            {
                'check': 'flag_round_trip',
                'detail': f'to degree {report.max_degree}',
                'passed': rebuilt == list(report.flag_series),
            },
            {
                'check': 'group_series',
                'detail': 'odd generators contribute (1 + q^d)',
                'passed': group_poincare(report) == list(report.group_series),
            },
        ]))

    if config.seed is not None:
        frames.append(_random_derivative_checks(a, config.seed))

    return pd.concat(frames, ignore_index=True)


_HANDLERS = {
    'classify': _classify,
    'symmetrize': _symmetrize,
    'invariants': _invariants,
    'subalgebra': _subalgebra,
    'poincare': _poincare,
    'cohomology': _cohomology,
    'verify': _verify,
}


def _json_default(x):
    if isinstance(x, np.generic):
        return x.item()
    raise TypeError(f'Cannot serialize {type(x)}')


def _render(report, fmt: str) -> str:
    if fmt == 'json':
        if isinstance(report, pd.DataFrame):
            report = report.to_dict(orient='records')
        return json.dumps(report, indent=2, ensure_ascii=False, default=_json_default)

    if isinstance(report, pd.DataFrame):
        return report.to_string(index=False)
    return '\n'.join(_text_lines(report))


def _text_lines(obj, indent: int=0):
    pad = '  ' * indent
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and not _is_flat(value):
                yield f'{pad}{key}:'
                yield from _text_lines(value, indent + 1)
            else:
                yield f'{pad}{key}: {_flat_text(value)}'
    elif isinstance(obj, list):
        for item in obj:
            if _is_flat(item):
                yield f'{pad}- {_flat_text(item)}'
            else:
                yield f'{pad}-'
                yield from _text_lines(item, indent + 1)
    else:
        yield f'{pad}{obj}'


def _is_flat(value) -> bool:
    if isinstance(value, dict):
        return all(not isinstance(v, (dict, list)) for v in value.values())
    if isinstance(value, list):
        return all(not isinstance(v, dict) for v in value)
    return True


def _flat_text(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def run(config: JobConfig, out=None) -> int:
    """Run one job and write its report to `out` (default: standard output).

    Returns:
        `int`: 0 on success; 1 if `verify` has a failed check; otherwise
        the `exit_code` of the domain error that stopped the job.
    """
    out = out if out is not None else sys.stdout
    logging.getLogger('kacmoody').setLevel(config.log_level)

    try:
        a = read_matrix(config.input)
        _logger.info(f'Running `{config.command}` on {a!r}')
        report = _HANDLERS[config.command](a, config)
    except KacMoodyError as exc:
        _logger.error(f'{type(exc).__name__}: {exc}')
        return exc.exit_code

    out.write(_render(report, config.format) + '\n')

    if config.command == 'verify' and not report['passed'].all():
        _logger.error(f'{(~report["passed"].astype(bool)).sum()} check(s) failed')
        return 1
    return 0


def _epilog() -> str:
    codes = '\n'.join(f'  {code:>3}  {name}' for name, code in exit_codes().items())
    return (
        'exit codes:\n'
        '    0  success\n'
        '    1  verify: at least one check failed\n'
        '    2  invalid command line\n'
        f'{codes}'
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='kacmoody',
        description='Weyl group invariants and rational homotopy data of generalized Cartan matrices.',
        epilog=_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    helps = {
        'classify': 'Finite, affine or indefinite type, per block.',
        'symmetrize': 'Symmetrizer and invariant bilinear form.',
        'invariants': 'Invariant polynomials up to --max-degree.',
        'subalgebra': 'Cartan matrix of the regular subalgebra.',
        'poincare': 'Growth series, flag and group Poincare series.',
        'cohomology': 'Cohomology presentations of the flag manifold and group.',
        'verify': 'Run every check on one matrix; exit 1 if any fails.',
    }
    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=helps[command])
        sub.add_argument('--input', required=True, help='Matrix file (JSON or grid), or fixture:NAME.')
        sub.add_argument('--max-degree', type=int, default=6, help='Invariant degree cutoff.')
        sub.add_argument('--max-length', type=int, default=12, help='Weyl group length cutoff N.')
        sub.add_argument('--format', choices=FORMATS, default='json', help='Output format.')
        sub.add_argument('--seed', type=int, default=None, help='Seed for randomized checks.')
        sub.add_argument('--log-level', choices=LOG_LEVELS, default='WARNING', help='Logging level.')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = JobConfig(
            command=args.command,
            input=args.input,
            max_degree=args.max_degree,
            max_length=args.max_length,
            format=args.format,
            seed=args.seed,
            log_level=args.log_level,
        ).validate()
    except ValueError as exc:
        parser.error(str(exc))

    return run(config)
