"""Parser and printer for the group-spec DSL.

Grammar (whitespace insignificant except inside ``table@`` paths):

    spec    := atom ('x' atom)*          products associate to the left
    atom    := 'Z' '(' int ')'           cyclic group of order n
             | 'D' '(' int ')'           dihedral group of order n (even)
             | 'Q' '(' int ')'           generalized quaternion, order 4n, n >= 2
             | 'A' '(' int {',' int} ')' direct product of cyclic factors (>= 2)
             | 'perm' '{' gen {';' gen} '}' '@' int
             | 'table' '@' path          path runs to the next whitespace
    gen     := cycle+                    e.g. (0 1 2)(3 4)
    cycle   := '(' int {int} ')'         entries split by spaces or commas

``pretty_print`` emits canonical text; parsing it back yields the same
AST for parser-produced (left-nested) trees, while right-nested products
re-associate to the left.
"""

from __future__ import annotations

from .errors import SpecSemanticError, SpecSyntaxError
from .groups import (
    Abelian,
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    GroupSpec,
    Permutation,
    Product,
    Table,
)

_ATOM_EXPECTED = ("'Z'", "'D'", "'Q'", "'A'", "'perm'", "'table'")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, word: str) -> bool:
        return self.text.startswith(word, self.pos)

    def expect(self, lit: str) -> None:
        if not self.startswith(lit):
            raise SpecSyntaxError(self.pos, (f"'{lit}'",))
        self.pos += len(lit)

    def parse_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SpecSyntaxError(start, ("integer",))
        return int(self.text[start:self.pos])


def parse_spec(text: str) -> GroupSpec:
    cur = _Cursor(text)
    spec = _parse_product(cur)
    cur.skip_ws()
    if not cur.at_end():
        raise SpecSyntaxError(cur.pos, ("'x'", "end of input"))
    return spec


def _parse_product(cur: _Cursor) -> GroupSpec:
    left = _parse_atom(cur)
    while True:
        cur.skip_ws()
        if cur.peek() == "x":
            cur.pos += 1
            left = Product(left, _parse_atom(cur))
        else:
            return left


def _parse_atom(cur: _Cursor) -> GroupSpec:
    cur.skip_ws()
    start = cur.pos
    if cur.startswith("perm"):
        cur.pos += 4
        return _parse_perm(cur, start)
    if cur.startswith("table"):
        cur.pos += 5
        cur.expect("@")
        pstart = cur.pos
        while cur.pos < len(cur.text) and not cur.text[cur.pos].isspace():
            cur.pos += 1
        if cur.pos == pstart:
            raise SpecSyntaxError(pstart, ("file path",))
        return Table(cur.text[pstart:cur.pos])
    head = cur.peek()
    if not head or head not in "ZDQA":
        raise SpecSyntaxError(cur.pos, _ATOM_EXPECTED)
    cur.pos += 1
    cur.skip_ws()
    cur.expect("(")
    cur.skip_ws()
    values = [cur.parse_int()]
    while True:
        cur.skip_ws()
        if cur.peek() == ",":
            cur.pos += 1
            cur.skip_ws()
            values.append(cur.parse_int())
        else:
            break
    cur.expect(")")
    if head != "A" and len(values) != 1:
        raise SpecSemanticError(start, f"{head}(...) takes exactly one argument")
    if head == "Z":
        if values[0] < 1:
            raise SpecSemanticError(start, f"Z({values[0]}): order must be >= 1")
        return Cyclic(values[0])
    if head == "D":
        if values[0] < 2 or values[0] % 2:
            raise SpecSemanticError(
                start, f"D({values[0]}): dihedral order must be even and >= 2")
        return Dihedral(values[0])
    if head == "Q":
        if values[0] % 4:
            raise SpecSemanticError(
                start, f"Q({values[0]}): order must be divisible by 4")
        if values[0] < 8:
            raise SpecSemanticError(
                start, f"Q({values[0]}): order 4n requires n >= 2")
        return GeneralizedQuaternion(values[0])
    for v in values:
        if v < 2:
            raise SpecSemanticError(start, f"A(...): factor {v} must be >= 2")
    return Abelian(tuple(values))


def _parse_perm(cur: _Cursor, start: int) -> Permutation:
    cur.skip_ws()
    cur.expect("{")
    gens = [_parse_gen(cur)]
    while True:
        cur.skip_ws()
        if cur.peek() == ";":
            cur.pos += 1
            gens.append(_parse_gen(cur))
        else:
            break
    cur.expect("}")
    cur.expect("@")
    cur.skip_ws()
    degree = cur.parse_int()
    if degree < 1:
        raise SpecSemanticError(start, "permutation degree must be >= 1")
    for gen in gens:
        for cyc in gen:
            if len(set(cyc)) != len(cyc):
                raise SpecSemanticError(start, f"cycle {cyc} repeats an entry")
            for v in cyc:
                if v >= degree:
                    raise SpecSemanticError(
                        start, f"cycle entry {v} exceeds degree {degree}")
    return Permutation(tuple(gens), degree)


def _parse_gen(cur: _Cursor) -> tuple[tuple[int, ...], ...]:
    cycles = []
    while True:
        cur.skip_ws()
        if cur.peek() != "(":
            if not cycles:
                raise SpecSyntaxError(cur.pos, ("'('",))
            return tuple(cycles)
        cur.pos += 1
        entries = []
        while True:
            cur.skip_ws()
            if cur.peek() == ",":
                cur.pos += 1
                cur.skip_ws()
            if cur.peek() == ")":
                cur.pos += 1
                break
            if not cur.peek().isdigit():
                raise SpecSyntaxError(cur.pos, ("integer", "')'"))
            entries.append(cur.parse_int())
        if not entries:
            raise SpecSyntaxError(cur.pos, ("integer",))
        cycles.append(tuple(entries))


def pretty_print(spec: GroupSpec) -> str:
    if isinstance(spec, Cyclic):
        return f"Z({spec.n})"
    if isinstance(spec, Dihedral):
        return f"D({spec.order})"
    if isinstance(spec, GeneralizedQuaternion):
        return f"Q({spec.order})"
    if isinstance(spec, Abelian):
        return "A(" + ",".join(map(str, spec.factors)) + ")"
    if isinstance(spec, Product):
        return f"{pretty_print(spec.left)} x {pretty_print(spec.right)}"
    if isinstance(spec, Permutation):
        gens = ";".join(
            "".join("(" + " ".join(map(str, cyc)) + ")" for cyc in gen)
            for gen in spec.generators
        )
        return f"perm{{{gens}}}@{spec.degree}"
    if isinstance(spec, Table):
        return f"table@{spec.path}"
    raise TypeError(f"not a group spec: {spec!r}")
