"""
File helpers: JSON/CSV written through a temporary sibling and an atomic rename.
"""

import csv
import json
import os
import re
import tempfile
from pathlib import Path
from typing import Any, Iterable, Sequence, Type, TypeVar

from pydantic import BaseModel, ValidationError

from wolffd.core.exceptions import ParseError

M = TypeVar("M", bound=BaseModel)


def _atomic_write(path: Path, write) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=str(path.parent))
    try:
        with os.fdopen(fd, "w", newline="", encoding="utf-8") as fh:
            write(fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


FLOAT_FORMAT = ".17g"
_FLOAT_TOKEN = re.compile(r'"\\u0000([^"\\]*)\\u0000"')
_NON_FINITE = {"nan": "NaN", "inf": "Infinity", "-inf": "-Infinity"}


def format_float(x: float) -> str:
    """17 significant digits, always float-looking"""
    text = format(x, FLOAT_FORMAT)
    if text in _NON_FINITE:
        return _NON_FINITE[text]
    if not any(c in text for c in ".e"):
        text += ".0"
    return text


def _tokenize_floats(data: Any) -> Any:
    if isinstance(data, bool):
        return data
    if isinstance(data, float):
        return f"\x00{format_float(data)}\x00"
    if isinstance(data, dict):
        return {k: _tokenize_floats(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_tokenize_floats(v) for v in data]
    return data


def dumps(data: Any) -> str:
    """Deterministic JSON: insertion-ordered keys, floats at 17 significant digits"""
    text = json.dumps(_tokenize_floats(data), indent=2, ensure_ascii=False)
    return _FLOAT_TOKEN.sub(lambda m: m.group(1), text) + "\n"


def write_json(path, data: Any) -> None:
    text = dumps(data)
    _atomic_write(Path(path), lambda fh: fh.write(text))


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    rows = [list(r) for r in rows]

    def write(fh):
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)

    _atomic_write(Path(path), write)


def read_model(path, model: Type[M]) -> M:
    """Parse a JSON file into a pydantic model; every failure becomes ParseError"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        return model.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from e
    except ValidationError as e:
        raise ParseError(f"{path} does not match {model.__name__}: {e}") from e
