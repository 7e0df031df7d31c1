# Copyright 2026 The bosonkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from bosonkit import __version__
from bosonkit.cli import commands
from bosonkit.cli.config import (
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    EXIT_VALIDATION_FAILED,
    LOG_FORMAT,
    MOMENT_POWERS,
    OUTPUT_FORMATS,
    VALIDATE_DIM_MAX,
)
from bosonkit.cli.io import (
    RunConfig,
    emit,
    parse_complex_list,
    parse_occupation,
    parse_real_list,
)
from bosonkit.config import BOSONKIT_LOG_LEVEL, apply_thread_limit
from bosonkit.errors import (
    MatrixFormatError,
    NoSolutionFound,
    PreconditionError,
    ValidationFailed,
)
from bosonkit.fock.config import AMPLITUDE_PATHS
from bosonkit.semiclassics.config import SHOOTING_TOLERANCE

logger = logging.getLogger(__name__)

LIST_OPTIONS = frozenset({"--in", "--out", "--phi", "--psi", "--q", "--Q"})


def _add_matrix_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--matrix", type=Path, help="Matrix file in the text format."
    )
    source.add_argument(
        "--haar", type=int, metavar="M", help="Seeded M x M Haar unitary."
    )
    source.add_argument(
        "--quench", type=int, metavar="M", help="Seeded M-site quench."
    )
    parser.add_argument(
        "--disorder",
        type=float,
        default=0.0,
        help="Phase disorder of --quench (default: 0).",
    )


def _add_occupations(
    parser: argparse.ArgumentParser, target: bool = True
) -> None:
    parser.add_argument(
        "--in",
        dest="input",
        type=parse_occupation,
        required=True,
        help="Input occupations, e.g. 1,1,0.",
    )
    if target:
        parser.add_argument(
            "--out",
            dest="target",
            type=parse_occupation,
            required=True,
            help="Output occupations, e.g. 2,0,0.",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bosonkit",
        description=(
            "Many-boson transition amplitudes, permanents and Ginibre "
            "permanent moments."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="INFO logging; repeat for DEBUG.",
    )
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=OUTPUT_FORMATS,
        default="json",
        help="Output format (default: json).",
    )
    parser.add_argument(
        "--output", type=Path, help="Write output here instead of stdout."
    )

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument(
        "--seed", type=int, default=None, help="Random seed (default: 0)."
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    amplitude = subparsers.add_parser(
        "amplitude", parents=[seeded], help="Fock transition amplitude."
    )
    _add_matrix_source(amplitude)
    _add_occupations(amplitude)
    amplitude.add_argument(
        "--path", choices=AMPLITUDE_PATHS, default="permanent"
    )
    amplitude.set_defaults(handler=commands.cmd_amplitude)

    distribution = subparsers.add_parser(
        "distribution", parents=[seeded], help="Exact output distribution."
    )
    _add_matrix_source(distribution)
    _add_occupations(distribution, target=False)
    distribution.set_defaults(handler=commands.cmd_distribution)

    sample = subparsers.add_parser(
        "sample", parents=[seeded], help="Draw output occupations."
    )
    _add_matrix_source(sample)
    _add_occupations(sample, target=False)
    sample.add_argument("--count", type=int, default=100)
    sample.set_defaults(handler=commands.cmd_sample)

    moments = subparsers.add_parser(
        "moments", parents=[seeded], help="Ginibre permanent moments."
    )
    moments.add_argument(
        "--order", type=int, choices=sorted(MOMENT_POWERS), required=True
    )
    moments.add_argument("--dim", type=int, required=True)
    mode = moments.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="(default)")
    mode.add_argument("--mc", type=int, metavar="DRAWS")
    mode.add_argument(
        "--table", action="store_true", help="All N up to --dim, with fit."
    )
    moments.add_argument("--sigma2", type=float, default=0.5)
    moments.set_defaults(handler=commands.cmd_moments)

    for kind, help_text in (
        ("haar", "Haar-random unitary."),
        ("ginibre", "Complex Ginibre matrix."),
        ("quench", "Quench unitary with on-site disorder."),
    ):
        ensemble = subparsers.add_parser(
            kind, parents=[seeded], help=help_text
        )
        ensemble.add_argument("--dim", type=int, required=True)
        ensemble.add_argument(
            "--save", type=Path, help="Also write the matrix file."
        )
        if kind == "ginibre":
            ensemble.add_argument("--sigma2", type=float, default=0.5)
        if kind == "quench":
            ensemble.add_argument("--disorder", type=float, default=0.0)
        ensemble.set_defaults(handler=getattr(commands, f"cmd_{kind}"))

    shooting = subparsers.add_parser(
        "shooting", parents=[seeded], help="Saddle-point boundary phases."
    )
    _add_matrix_source(shooting)
    _add_occupations(shooting)
    shooting.add_argument(
        "--tolerance", type=float, default=SHOOTING_TOLERANCE
    )
    shooting.set_defaults(handler=commands.cmd_shooting)

    coherent = subparsers.add_parser(
        "coherent", parents=[seeded], help="Coherent-state amplitude."
    )
    _add_matrix_source(coherent)
    coherent.add_argument("--phi", type=parse_complex_list, required=True)
    coherent.add_argument("--psi", type=parse_complex_list, required=True)
    coherent.set_defaults(handler=commands.cmd_coherent)

    quadrature = subparsers.add_parser(
        "quadrature", parents=[seeded], help="Quadrature-state amplitude."
    )
    _add_matrix_source(quadrature)
    quadrature.add_argument("--q", type=parse_real_list, required=True)
    quadrature.add_argument("--Q", type=parse_real_list, required=True)
    quadrature.set_defaults(handler=commands.cmd_quadrature)

    validate = subparsers.add_parser(
        "validate", help="Run the consistency suite."
    )
    validate.add_argument("--dim-max", type=int, default=VALIDATE_DIM_MAX)
    validate.add_argument(
        "--inject-fault", action="store_true", help=argparse.SUPPRESS
    )
    validate.set_defaults(handler=commands.cmd_validate)

    return parser


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, BOSONKIT_LOG_LEVEL, logging.WARNING)

    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def _error(message: str, **fields) -> dict:
    return {"status": "error", "message": message, **fields}


def _fold_list_values(argv: list[str]) -> list[str]:
    # Values such as "-1,2" would otherwise be read as option flags.
    folded = []
    tokens = iter(argv)

    for token in tokens:
        if token in LIST_OPTIONS:
            value = next(tokens, None)
            folded.append(token if value is None else f"{token}={value}")
        else:
            folded.append(token)

    return folded


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()

    try:
        args = parser.parse_args(
            _fold_list_values(sys.argv[1:] if argv is None else argv)
        )

    except SystemExit as exit_request:
        return exit_request.code if isinstance(exit_request.code, int) else 2

    _configure_logging(args.verbose)
    apply_thread_limit()

    try:
        config = RunConfig.from_namespace(args)
        payload = args.handler(config)
        code = EXIT_OK

    except ValidationFailed as error:
        logger.error(str(error))
        payload = _error(str(error), rows=error.report.rows())
        code = EXIT_VALIDATION_FAILED

    except NoSolutionFound as error:
        logger.error(str(error))
        payload = _error(str(error), best=error.best.payload())
        code = EXIT_PRECONDITION

    except PreconditionError as error:
        logger.error(str(error))
        payload = _error(str(error))
        code = EXIT_PRECONDITION

    except (MatrixFormatError, ValidationError, OSError) as error:
        logger.error(str(error))
        parser.print_usage(sys.stderr)
        payload = _error(str(error))
        code = EXIT_USAGE

    output_format = getattr(args, "output_format", "json")
    emit(payload, output_format, getattr(args, "output", None))

    return code
