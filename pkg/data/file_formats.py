"""
File Formats
Readers and writers for truth tables (text and packed), parity-check codes and patterns
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from constructions.linear_code import LinearCode
from core.boolean_function import BooleanFunction
from core.constants import MAX_EXACT_N
from core.errors import InputFormatError, PreconditionError
from graphs.patterns import BipartitePattern, InjectionMap, SimplePattern

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _content_lines(path: Path) -> List[Tuple[int, str]]:
    """Non-blank lines without '#' comments, with 1-based line numbers."""
    if not path.exists():
        raise InputFormatError("file not found", str(path))
    out = []
    for number, raw in enumerate(path.read_text().splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            out.append((number, text))
    return out


def _parse_int_field(text: str, key: str, path: Path, line: int) -> int:
    prefix = f"{key}="
    if not text.startswith(prefix):
        raise InputFormatError(f"expected '{prefix}<int>', got {text!r}", str(path), line)
    try:
        return int(text[len(prefix):])
    except ValueError:
        raise InputFormatError(f"'{key}' is not an integer: {text!r}", str(path), line)


# ----------------------------------------------------------------------
# Truth tables
# ----------------------------------------------------------------------

def read_truth_table(path: PathLike) -> BooleanFunction:
    """
    Read `n=<int>` followed by 2^n characters from {+, -} in ascending x order.

    The sign string may be wrapped over several lines.

    Raises:
        InputFormatError: With the offending line number
    """
    path = Path(path)
    lines = _content_lines(path)
    if not lines:
        raise InputFormatError("empty truth-table file", str(path))
    line, header = lines[0]
    n = _parse_int_field(header, "n", path, line)
    if not 1 <= n <= MAX_EXACT_N:
        raise InputFormatError(f"dimension {n} outside [1, {MAX_EXACT_N}]", str(path), line)
    signs: List[int] = []
    for line, text in lines[1:]:
        for ch in text:
            if ch == "+":
                signs.append(1)
            elif ch == "-":
                signs.append(-1)
            elif not ch.isspace():
                raise InputFormatError(f"unexpected character {ch!r} in sign string", str(path), line)
    if len(signs) != 1 << n:
        last = lines[-1][0]
        raise InputFormatError(f"expected {1 << n} signs for n={n}, found {len(signs)}", str(path), last)
    logger.info(f"Loaded truth table n={n} from {path}")
    return BooleanFunction(signs, n)


def write_truth_table(f: BooleanFunction, path: PathLike) -> Path:
    path = Path(path)
    signs = "".join("+" if v > 0 else "-" for v in f.table)
    path.write_text(f"n={f.n}\n{signs}\n")
    return path


def read_packed_table(path: PathLike) -> BooleanFunction:
    """
    Read one byte holding n, then 8 signs per byte (bit 0 is +1, least significant bit first).

    Raises:
        InputFormatError: If the byte count does not match n
    """
    path = Path(path)
    if not path.exists():
        raise InputFormatError("file not found", str(path))
    raw = np.frombuffer(path.read_bytes(), dtype=np.uint8)
    if raw.size == 0:
        raise InputFormatError("empty packed table", str(path))
    n = int(raw[0])
    if not 1 <= n <= MAX_EXACT_N:
        raise InputFormatError(f"dimension {n} outside [1, {MAX_EXACT_N}]", str(path))
    expected = max(1, (1 << n) // 8)
    if raw.size - 1 != expected:
        raise InputFormatError(f"expected {expected} table bytes for n={n}, found {raw.size - 1}", str(path))
    bits = np.unpackbits(raw[1:], bitorder="little")[: 1 << n]
    return BooleanFunction.from_bits(bits)


def write_packed_table(f: BooleanFunction, path: PathLike) -> Path:
    path = Path(path)
    packed = np.packbits(f.to_bits(), bitorder="little")
    path.write_bytes(bytes([f.n]) + packed.tobytes())
    return path


# ----------------------------------------------------------------------
# Codes
# ----------------------------------------------------------------------

def read_code(path: PathLike) -> LinearCode:
    """
    Read `n=<int> k=<int>` and then n-k parity-check rows as width-n binary strings.

    Raises:
        InputFormatError: On a malformed header or row, or a rank-deficient matrix
    """
    path = Path(path)
    lines = _content_lines(path)
    if not lines:
        raise InputFormatError("empty code file", str(path))
    line, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise InputFormatError("expected header 'n=<int> k=<int>'", str(path), line)
    n = _parse_int_field(fields[0], "n", path, line)
    k = _parse_int_field(fields[1], "k", path, line)
    rows = lines[1:]
    if len(rows) != n - k:
        raise InputFormatError(f"expected {n - k} parity-check rows, found {len(rows)}", str(path), line)
    masks = []
    for line, text in rows:
        if len(text) != n or set(text) - {"0", "1"}:
            raise InputFormatError(f"row must be {n} characters from {{0,1}}: {text!r}", str(path), line)
        masks.append(sum(1 << j for j, ch in enumerate(text) if ch == "1"))
    try:
        return LinearCode(n, k, tuple(masks))
    except PreconditionError as exc:
        raise InputFormatError(str(exc), str(path))


def write_code(code: LinearCode, path: PathLike) -> Path:
    path = Path(path)
    body = "\n".join(code.to_strings())
    path.write_text(f"n={code.n} k={code.k}\n{body}\n" if body else f"n={code.n} k={code.k}\n")
    return path


# ----------------------------------------------------------------------
# Patterns
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PatternFile:
    """A parsed pattern with its optional injection."""

    pattern: Union[BipartitePattern, SimplePattern]
    injection: Optional[Dict[str, int]] = None

    @property
    def bipartite(self) -> bool:
        return isinstance(self.pattern, BipartitePattern)

    def injection_map(self, n: int) -> InjectionMap:
        if self.injection is None:
            raise PreconditionError("pattern file carries no injection")
        return InjectionMap.from_dict(n, self.injection)


def read_pattern(path: PathLike) -> PatternFile:
    """
    Read `left:`/`right:`/`edges:` (bipartite) or `vertices:`/`edges:` (simple).

    Edges are `u-v` tokens; an optional `injection:` line holds `label=hex` tokens.

    Raises:
        InputFormatError: With the offending line number
    """
    path = Path(path)
    sections: Dict[str, Tuple[int, List[str]]] = {}
    for line, text in _content_lines(path):
        if ":" not in text:
            raise InputFormatError(f"expected '<key>: values', got {text!r}", str(path), line)
        key, _, rest = text.partition(":")
        key = key.strip().lower()
        if key not in ("left", "right", "vertices", "edges", "injection"):
            raise InputFormatError(f"unknown key {key!r}", str(path), line)
        if key in sections:
            raise InputFormatError(f"duplicate key {key!r}", str(path), line)
        sections[key] = (line, rest.split())

    if "edges" not in sections:
        raise InputFormatError("pattern needs an 'edges:' line", str(path))
    edge_line, edge_tokens = sections["edges"]
    edges = []
    for token in edge_tokens:
        u, sep, v = token.partition("-")
        if not sep or not u or not v:
            raise InputFormatError(f"edge token must be 'u-v', got {token!r}", str(path), edge_line)
        edges.append((u, v))

    injection = None
    if "injection" in sections:
        inj_line, tokens = sections["injection"]
        injection = {}
        for token in tokens:
            label, sep, point = token.partition("=")
            try:
                if not sep:
                    raise ValueError(token)
                injection[label] = int(point, 16)
            except ValueError:
                raise InputFormatError(f"injection token must be 'label=hex', got {token!r}", str(path), inj_line)

    try:
        if "left" in sections or "right" in sections:
            if "vertices" in sections:
                raise InputFormatError("mix of bipartite and simple keys", str(path), sections["vertices"][0])
            left = sections.get("left", (0, []))[1]
            right = sections.get("right", (0, []))[1]
            pattern: Union[BipartitePattern, SimplePattern] = BipartitePattern(tuple(left), tuple(right), tuple(edges))
        else:
            vertices = sections.get("vertices", (0, []))[1]
            pattern = SimplePattern(tuple(vertices), tuple(edges))
    except PreconditionError as exc:
        raise InputFormatError(str(exc), str(path), edge_line)
    return PatternFile(pattern, injection)


def write_pattern(pattern_file: PatternFile, path: PathLike) -> Path:
    path = Path(path)
    p = pattern_file.pattern
    lines = []
    if isinstance(p, BipartitePattern):
        lines.append("left: " + " ".join(p.left))
        lines.append("right: " + " ".join(p.right))
    else:
        lines.append("vertices: " + " ".join(p.vertices))
    lines.append("edges: " + " ".join(f"{u}-{v}" for u, v in p.edges))
    if pattern_file.injection:
        lines.append("injection: " + " ".join(f"{k}={v:x}" for k, v in pattern_file.injection.items()))
    path.write_text("\n".join(lines) + "\n")
    return path
