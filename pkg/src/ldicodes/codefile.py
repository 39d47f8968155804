"""Line-oriented text format for generator matrices.

::

    # Steane code
    mod 2            # or: mod inf, followed by: origin <prime>
    n 7
    rows 6
    1 1 1 1 0 0 0 | 0 0 0 0 0 0 0
    ...

Rows hold ``2n`` signed integers; a ``|`` token may separate the halves and
is ignored on input.  Comment lines are kept and written back at the top.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .ldi import LdiCode
from .stabilizer import Row, StabilizerCode


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class CodeFile:
    modulus: int | None  # None means "inf"
    n: int
    rows: tuple[Row, ...]
    origin: int | None = None
    comments: tuple[str, ...] = ()

    def to_code(self) -> Union[StabilizerCode, LdiCode]:
        if self.modulus is None:
            return LdiCode(self.rows, self.n, self.origin).check()
        return StabilizerCode(self.rows, self.n, self.modulus)

    @classmethod
    def from_code(cls, code: Union[StabilizerCode, LdiCode], comments=()) -> "CodeFile":
        if isinstance(code, LdiCode):
            return cls(None, code.n, code.rows, code.origin_q, tuple(comments))
        return cls(code.q, code.n, code.rows, None, tuple(comments))


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"{what}: expected an integer, got {token!r}") from None


def loads(text: str) -> CodeFile:
    header: dict[str, str] = {}
    comments: list[str] = []
    rows: list[Row] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        line = line.split("#", 1)[0].strip()
        tokens = line.split()
        key = tokens[0]
        if key in ("mod", "origin", "n", "rows"):
            if rows:
                raise ParseError(lineno, f"header {key!r} after the first row")
            if len(tokens) != 2:
                raise ParseError(lineno, f"header {key!r} takes exactly one value")
            if key in header:
                raise ParseError(lineno, f"duplicate header {key!r}")
            header[key] = tokens[1]
            continue
        if "n" not in header:
            raise ParseError(lineno, "row before the 'n' header")
        n = _int(header["n"], lineno, "n")
        values = [t for t in tokens if t != "|"]
        if len(values) != 2 * n:
            raise ParseError(lineno, f"row has {len(values)} entries, expected {2 * n}")
        rows.append(tuple(_int(t, lineno, "entry") for t in values))
    end = len(text.splitlines()) or 1
    for key in ("mod", "n", "rows"):
        if key not in header:
            raise ParseError(end, f"missing header {key!r}")
    n = _int(header["n"], end, "n")
    count = _int(header["rows"], end, "rows")
    if count != len(rows):
        raise ParseError(end, f"header says {count} rows, found {len(rows)}")
    if header["mod"] == "inf":
        if "origin" not in header:
            raise ParseError(end, "'mod inf' requires an 'origin' header")
        return CodeFile(None, n, tuple(rows), _int(header["origin"], end, "origin"), tuple(comments))
    if "origin" in header:
        raise ParseError(end, "'origin' is only allowed with 'mod inf'")
    q = _int(header["mod"], end, "mod")
    return CodeFile(q, n, tuple(tuple(v % q for v in r) for r in rows), None, tuple(comments))


def dumps(cf: CodeFile) -> str:
    out = [f"# {c}" if c else "#" for c in cf.comments]
    if cf.modulus is None:
        out += ["mod inf", f"origin {cf.origin}"]
    else:
        out.append(f"mod {cf.modulus}")
    out += [f"n {cf.n}", f"rows {len(cf.rows)}"]
    for r in cf.rows:
        out.append(" ".join(map(str, r[: cf.n])) + " | " + " ".join(map(str, r[cf.n:])))
    return "\n".join(out) + "\n"


def load(path: str | Path) -> CodeFile:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(obj: Union[CodeFile, StabilizerCode, LdiCode], path: str | Path, comments=()) -> None:
    cf = obj if isinstance(obj, CodeFile) else CodeFile.from_code(obj, comments)
    Path(path).write_text(dumps(cf), encoding="utf-8")
