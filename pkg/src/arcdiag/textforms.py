"""Parsing and formatting for the textual exchange forms.

Forms are ASCII and canonical: formatting a parsed value reproduces a
unique normal form (arcs in ascending (a, b, sides) order, digit form
for permutations up to n = 9).  Parse failures raise `ParseError` with
the byte offset of the offending character.
"""
from __future__ import annotations

from .arcs import Arc, arc_key
from .congruences import ArcSet, named_congruence
from .diagrams import Diagram, validate_diagram
from .perms import Permutation


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def format_permutation(x: Permutation) -> str:
    return str(x)


def parse_permutation(text: str) -> Permutation:
    """Digits run together, or comma-separated values for any size.

    >>> parse_permutation("25314").entries
    (2, 5, 3, 1, 4)
    >>> parse_permutation("2,5,3,1,4").entries
    (2, 5, 3, 1, 4)
    """
    if not text:
        raise ParseError("empty permutation", 0)
    values: list[int] = []
    if "," in text:
        offset = 0
        for part in text.split(","):
            if not part or not part.isdigit():
                raise ParseError(f"expected a number, got {part!r}", offset)
            values.append(int(part))
            offset += len(part) + 1
    else:
        for i, ch in enumerate(text):
            if ch not in "123456789":
                raise ParseError(f"expected a digit 1-9, got {ch!r}", i)
            values.append(int(ch))
    try:
        return Permutation(tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def format_arc(alpha: Arc) -> str:
    return str(alpha)


def _scan_int(text: str, offset: int, what: str, base: int = 0) -> tuple[int, int]:
    start = offset
    while offset < len(text) and text[offset].isdigit():
        offset += 1
    if offset == start:
        raise ParseError(f"expected {what}", base + start)
    return int(text[start:offset]), offset


def parse_arc(text: str, n: int, base_offset: int = 0) -> Arc:
    """`a-b` for a short arc, `a-b:<sides>` with one L or R per interior point.

    >>> str(parse_arc("4-8:LRL", 9))
    '4-8:LRL'
    """
    a, offset = _scan_int(text, 0, "the lower endpoint", base_offset)
    if offset >= len(text) or text[offset] != "-":
        raise ParseError("expected '-' between endpoints", base_offset + offset)
    b, offset = _scan_int(text, offset + 1, "the upper endpoint", base_offset)
    sides = ""
    if offset < len(text):
        if text[offset] != ":":
            raise ParseError("unexpected trailing text", base_offset + offset)
        sides_start = offset + 1
        sides = text[sides_start:]
        for i, ch in enumerate(sides):
            if ch not in "LR":
                raise ParseError(f"expected L or R, got {ch!r}", base_offset + sides_start + i)
        if b - a == 1:
            raise ParseError("an arc of length 1 has no interior sides", base_offset + offset)
    if b - a > 1 and len(sides) != b - a - 1:
        raise ParseError(
            f"arc {a}-{b} needs {b - a - 1} side letters, got {len(sides)}",
            base_offset + len(text),
        )
    try:
        return Arc(n, a, b, frozenset(a + 1 + i for i, ch in enumerate(sides) if ch == "R"))
    except ValueError as exc:
        raise ParseError(str(exc), base_offset) from None


def format_diagram_body(diagram: Diagram) -> str:
    return str(diagram)


def format_diagram(diagram: Diagram) -> str:
    return f"n={diagram.n}\n{format_diagram_body(diagram)}"


def _parse_header(lines: list[str], text: str) -> int:
    if not lines or not lines[0].startswith("n="):
        raise ParseError("expected a header line n=<N>", 0)
    rest = lines[0][2:]
    if not rest.isdigit():
        raise ParseError("expected a number after n=", 2)
    return int(rest)


def parse_diagram_body(text: str, n: int, base_offset: int = 0) -> Diagram:
    """Arcs joined by ';'; the empty string is the empty diagram."""
    arcs = []
    if text:
        offset = 0
        for chunk in text.split(";"):
            arcs.append(parse_arc(chunk, n, base_offset + offset))
            offset += len(chunk) + 1
    return validate_diagram(n, arcs)


def parse_diagram(text: str) -> Diagram:
    """Header line n=<N>, then the arcs on one line.

    >>> str(parse_diagram("n=8\\n1-3:R;2-5:LL;3-7:LRL"))
    '1-3:R;2-5:LL;3-7:LRL'
    """
    lines = text.split("\n")
    n = _parse_header(lines, text)
    body = lines[1] if len(lines) > 1 else ""
    offset = len(lines[0]) + 1
    for extra in lines[2:]:
        if extra:
            raise ParseError("unexpected extra line", offset + len(body) + 1)
    return parse_diagram_body(body, n, offset)


def format_arcset(arcset: ArcSet) -> str:
    lines = [f"n={arcset.n}"]
    lines.extend(str(alpha) for alpha in arcset.sorted_members())
    return "\n".join(lines)


def parse_arcset(text: str) -> ArcSet:
    """Header line n=<N>, then one arc per line."""
    lines = text.split("\n")
    n = _parse_header(lines, text)
    offset = len(lines[0]) + 1
    members = []
    for line in lines[1:]:
        if line:
            members.append(parse_arc(line, n, offset))
        offset += len(line) + 1
    return ArcSet(n, frozenset(members))


def parse_congruence_spec(spec: str, n: int) -> ArcSet:
    """CLI congruence names: tamari, baxter, cambrian:<LR..>, clumped:<k>, maxlen:<k>."""
    name, sep, payload = spec.partition(":")
    if name in ("tamari", "baxter"):
        if sep:
            raise ParseError(f"{name} takes no parameter", len(name))
        return named_congruence(n, name)
    if name == "cambrian":
        if not sep:
            raise ParseError("cambrian needs an orientation, e.g. cambrian:RLR", len(name))
        for i, ch in enumerate(payload):
            if ch not in "LR":
                raise ParseError(f"expected L or R, got {ch!r}", len(name) + 1 + i)
        if len(payload) != n:
            raise ParseError(f"orientation needs {n} letters, got {len(payload)}", len(name) + 1)
        return named_congruence(n, "cambrian", orientation=payload)
    if name in ("clumped", "maxlen"):
        if not sep or not payload.isdigit():
            raise ParseError(f"{name} needs a numeric bound, e.g. {name}:2", len(name) + 1)
        try:
            return named_congruence(n, name, k=int(payload))
        except ValueError as exc:
            raise ParseError(str(exc), len(name) + 1) from None
    raise ParseError(f"unknown congruence family {name!r}", 0)
