"""Structured text format for algebra and representation documents.

One document per file, one ``key = value`` statement per line:

    # su(2) with epsilon structure constants
    kind = algebra
    name = su2-eps
    dim = 3
    f[1][2][3] = 1/1
    kappa[1][1] = 1/1

    kind = representation
    algebra = su2
    dim = 3
    dimV = 4
    alpha[1][1][2] = 0/1, 1/1
    mu[1][3] = 1/1

``f`` and ``kappa`` entries are rationals ``num/den``; ``alpha`` and ``mu``
entries are Gaussian rationals ``re[, im]``.  Omitted entries are zero.
``serialize`` writes entries in sorted index order so that parse, serialize
and parse again gives identical data.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Tuple, Union

import sympy as sp

from YM_Beta.errors import BetaError, ParseError, StructuralError
from YM_Beta.exact import format_gaussian, format_rational, parse_gaussian, parse_rational, to_fraction
from YM_Beta.lie.data import LieAlgebraData, RepresentationData, make_algebra, make_representation

logger = logging.getLogger("YM_Beta")

Document = Union[LieAlgebraData, RepresentationData]

_RE_STATEMENT = re.compile(r"^([A-Za-z_]+)((?:\[\s*\d+\s*\])*)\s*=\s*(.*)$")
_RE_INDEX = re.compile(r"\[\s*(\d+)\s*\]")

_HEADER_KEYS = ("kind", "name", "algebra", "kappa_note", "dim", "dimV")
_ARRAY_ARITY = {"f": 3, "kappa": 2, "alpha": 3, "mu": 2}
_KINDS = ("algebra", "representation")


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _parse_int(value: str, key: str, line: int) -> int:
    if not re.fullmatch(r"\d+", value):
        raise ParseError(f"'{key}' must be a non-negative integer, got '{value}'", line)
    return int(value)


def parse_document(text: str) -> Document:
    header: Dict[str, str] = {}
    arrays: Dict[str, Dict[Tuple[int, ...], sp.Expr]] = {key: {} for key in _ARRAY_ARITY}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _RE_STATEMENT.match(line)
        if not match:
            raise ParseError(f"cannot parse '{line}'", number)
        key, index_text, value = match.group(1), match.group(2), match.group(3).strip()

        if key in _ARRAY_ARITY:
            indices = tuple(int(i) for i in _RE_INDEX.findall(index_text))
            if len(indices) != _ARRAY_ARITY[key]:
                raise ParseError(f"'{key}' takes {_ARRAY_ARITY[key]} indices, got {len(indices)}", number)
            if indices in arrays[key]:
                raise ParseError(f"duplicate entry {key}{list(indices)}", number)
            try:
                if key in ("f", "kappa"):
                    entry = parse_rational(value)
                else:
                    entry = parse_gaussian(value)
            except ParseError as exc:
                raise ParseError(str(exc), number) from None
            arrays[key][indices] = entry
        elif key in _HEADER_KEYS:
            if index_text:
                raise ParseError(f"'{key}' takes no indices", number)
            if key in header:
                raise ParseError(f"duplicate '{key}'", number)
            header[key] = value
        else:
            raise ParseError(f"unknown key '{key}'", number)

    kind = header.get("kind")
    if kind not in _KINDS:
        raise ParseError(f"'kind' must be one of {', '.join(_KINDS)}, got '{kind}'")
    if "dim" not in header:
        raise ParseError("missing 'dim'")
    dim = _parse_int(header["dim"], "dim", None)

    if kind == "algebra":
        if arrays["alpha"] or arrays["mu"] or "dimV" in header:
            raise ParseError("algebra documents cannot carry alpha, mu or dimV")
        kappa = _dense(arrays["kappa"], dim, "kappa")
        data = make_algebra(
            dim, arrays["f"], kappa, name=header.get("name", ""), kappa_note=header.get("kappa_note", "")
        )
    else:
        if arrays["f"] or arrays["kappa"]:
            raise ParseError("representation documents cannot carry f or kappa")
        if "dimV" not in header:
            raise ParseError("missing 'dimV'")
        dimV = _parse_int(header["dimV"], "dimV", None)
        mu = _dense(arrays["mu"], dimV, "mu")
        data = make_representation(
            dim, dimV, arrays["alpha"], mu, name=header.get("name", ""), algebra=header.get("algebra", "")
        )
    logger.debug("Parsed %s document '%s'", kind, data.name)
    return data


def _dense(entries: Dict[Tuple[int, ...], object], size: int, key: str) -> List[List[object]]:
    matrix: List[List[object]] = [[0] * size for _ in range(size)]
    for (i, j), value in entries.items():
        if not (1 <= i <= size and 1 <= j <= size):
            raise StructuralError(f"{key}[{i}][{j}] out of range 1..{size}", module="lie")
        matrix[i - 1][j - 1] = value
    return matrix


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _matrix_lines(key: str, matrix, fmt) -> List[str]:
    lines = []
    rows, cols = matrix.shape
    for i in range(rows):
        for j in range(cols):
            if matrix[i, j] != 0:
                lines.append(f"{key}[{i + 1}][{j + 1}] = {fmt(matrix[i, j])}")
    return lines


def _rational_text(value) -> str:
    return format_rational(to_fraction(value, "rational entry"))


def serialize(data: Document) -> str:
    if isinstance(data, LieAlgebraData):
        lines = ["kind = algebra"]
        if data.name:
            lines.append(f"name = {data.name}")
        if data.kappa_note:
            lines.append(f"kappa_note = {data.kappa_note}")
        lines.append(f"dim = {data.dim}")
        for (a, b, c), value in sorted(data.f.items()):
            lines.append(f"f[{a}][{b}][{c}] = {_rational_text(value)}")
        lines.extend(_matrix_lines("kappa", data.kappa, _rational_text))
    elif isinstance(data, RepresentationData):
        lines = ["kind = representation"]
        if data.name:
            lines.append(f"name = {data.name}")
        if data.algebra:
            lines.append(f"algebra = {data.algebra}")
        lines.append(f"dim = {data.dim_algebra}")
        lines.append(f"dimV = {data.dimV}")
        for (a, i, j), value in sorted(data.alpha.items()):
            lines.append(f"alpha[{a}][{i}][{j}] = {format_gaussian(value)}")
        lines.extend(_matrix_lines("mu", data.mu, format_gaussian))
    else:
        raise StructuralError(f"cannot serialize {type(data).__name__}", module="lie")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

def load_document(path: Union[str, Path]) -> Document:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise BetaError(f"cannot read {path}: {exc.strerror}", module="lie") from None
    try:
        return parse_document(text)
    except ParseError as exc:
        raise ParseError(f"{path.name}: {exc}") from None


def load_algebra(path: Union[str, Path]) -> LieAlgebraData:
    data = load_document(path)
    if not isinstance(data, LieAlgebraData):
        raise StructuralError(f"{path} holds a representation, expected an algebra", module="lie")
    return data


def load_representation(path: Union[str, Path]) -> RepresentationData:
    data = load_document(path)
    if not isinstance(data, RepresentationData):
        raise StructuralError(f"{path} holds an algebra, expected a representation", module="lie")
    return data


def save_document(data: Document, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize(data), encoding="utf-8")
    logger.info("Wrote %s", path)
