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

import csv
import io
import json
import logging
from argparse import Namespace
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from bosonkit.cli.config import CSV_FLOAT_FORMAT
from bosonkit.config import DEFAULT_SEED
from bosonkit.core import ComplexMatrix, read_matrix
from bosonkit.ensembles import quench_unitary, sample_haar
from bosonkit.errors import MatrixFormatError
from bosonkit.fock import OccupationVector

logger = logging.getLogger(__name__)

_GLOBAL_FLAGS = ("command", "output_format", "output", "verbose", "seed")


class RunConfig(BaseModel):
    """One parsed command line: the subcommand, shared flags and the
    subcommand's own options."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    command: str
    output_format: Literal["json", "csv"] = "json"
    output: Path | None = None
    verbose: int = Field(default=0, ge=0)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    options: dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_namespace(cls, args: Namespace) -> "RunConfig":
        values = vars(args)
        seed = values.get("seed")

        return cls(
            command=values["command"],
            output_format=values.get("output_format", "json"),
            output=values.get("output"),
            verbose=values.get("verbose", 0),
            seed=DEFAULT_SEED if seed is None else seed,
            options={
                key: value
                for key, value in values.items()
                if key not in _GLOBAL_FLAGS and key != "handler"
            },
        )

    def option(self, name: str, default=None):
        return self.options.get(name, default)


def parse_occupation(text: str) -> OccupationVector:
    """argparse type for "1,2,0" occupation lists."""
    return OccupationVector.parse(text)


def _parse_list(text: str, kind, name: str) -> tuple:
    try:
        return tuple(kind(part.replace(" ", "")) for part in text.split(","))

    except ValueError as error:
        raise MatrixFormatError(
            f"{name} must be a comma-separated list, got {text!r}"
        ) from error


def parse_complex_list(text: str) -> tuple[complex, ...]:
    """argparse type for coherent labels such as "1+0.5j,-0.2j"."""
    return _parse_list(text, complex, "Coherent amplitudes")


def parse_real_list(text: str) -> tuple[float, ...]:
    """argparse type for quadrature values such as "0.1,-1.5"."""
    return _parse_list(text, float, "Quadrature values")


def load_matrix(config: RunConfig) -> ComplexMatrix:
    """The single-particle matrix named by --matrix, --haar or --quench."""
    if config.option("matrix") is not None:
        logger.info(f"Reading matrix from {config.option('matrix')}")
        return read_matrix(config.option("matrix"))

    if config.option("haar") is not None:
        return sample_haar(config.option("haar"), seed=config.seed)

    return quench_unitary(
        config.option("quench"),
        disorder=config.option("disorder", 0.0),
        seed=config.seed,
    )


def to_jsonable(value):
    match value:
        case bool() | int() | str() | None:
            return value
        case float():
            return value
        case complex():
            return {"re": value.real, "im": value.imag}
        case Fraction():
            return str(value)
        case OccupationVector():
            return str(value)
        case np.generic():
            return to_jsonable(value.item())
        case np.ndarray():
            return [to_jsonable(item) for item in value.tolist()]
        case ComplexMatrix():
            return to_jsonable(value.entries)
        case dict():
            return {str(key): to_jsonable(item) for key, item in value.items()}
        case list() | tuple():
            return [to_jsonable(item) for item in value]
        case _:
            return str(value)


def _csv_cell(value) -> str:
    value = to_jsonable(value)

    if isinstance(value, float):
        return format(value, CSV_FLOAT_FORMAT)

    if isinstance(value, dict) and set(value) == {"re", "im"}:
        return (
            f"{format(value['re'], CSV_FLOAT_FORMAT)},"
            f"{format(value['im'], CSV_FLOAT_FORMAT)}"
        )

    if isinstance(value, (dict, list)):
        return json.dumps(value)

    return "" if value is None else str(value)


def render_json(payload: dict) -> str:
    return json.dumps(to_jsonable(payload), indent=2) + "\n"


def render_csv(payload: dict) -> str:
    """
    Render a payload as CSV.

    Payloads with a "rows" list become one record per row with the row keys
    as header; anything else becomes "key,value" records.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    rows = payload.get("rows")

    if rows:
        header = list(rows[0])
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row.get(key)) for key in header])

    else:
        writer.writerow(["key", "value"])
        for key, value in payload.items():
            if key != "rows":
                writer.writerow([key, _csv_cell(value)])

    return buffer.getvalue()


def emit(payload: dict, output_format: str, output: Path | None) -> str:
    text = (
        render_csv(payload)
        if output_format == "csv"
        else render_json(payload)
    )

    if output is None:
        print(text, end="")

    else:
        Path(output).write_text(text)
        logger.info(f"Wrote {output_format} output to {output}")

    return text
