# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
Group literals.

    literal   := NAME ":" body          (NAME is "perm" or "abelian")
               | NAME [ "(" args ")" ]
    args      := arg { "," arg }
    arg       := INT | literal
    perm body := perm { ";" perm }
    perm      := cycle { cycle }
    cycle     := "(" { INT [","] } ")"
    abelian body := INT { "," INT }

Every choice is made on the next token alone. An abelian literal takes every
following ", INT", so as an argument it must come last; the catalog form
abelian(d1,...,dk) has no such restriction.
"""
import re
from typing import Optional, Union

from typing_extensions import TypeAlias

from towerkit.core.errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),;:]))")

Arg: TypeAlias = Union[int, 'GroupLiteral']


class Token:
    def __init__(self, kind: str, text: str, position: int):
        super().__init__()
        self.kind = kind
        self.text = text
        self.position = position

    def __repr__(self) -> str:
        return f"Token({self.kind}, {self.text!r}, {self.position})"


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(source, pos)
        if m is None:
            rest = source[pos:]
            if rest.strip() == "":
                break
            at = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"Unexpected character {source[at]!r}", at,
                             ["integer", "name", "(", ")", ",", ";", ":"])
        kind = m.lastgroup
        assert kind is not None
        text = m.group(kind)
        tokens.append(Token(kind if kind != "punct" else text, text, m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


class GroupLiteral:
    """
    Parsed literal. `kind` is "perm", "abelian" or "catalog"; `args` holds integer
    and nested literal arguments (or the invariants of an abelian literal);
    `permutations` holds the cycle lists of a perm literal.
    """

    def __init__(self, kind: str, name: str, args: list[Arg], position: int,
                 permutations: Optional[list[list[list[int]]]] = None, text: str = ""):
        super().__init__()
        self.kind = kind
        self.name = name
        self.args = args
        self.position = position
        self.permutations = permutations or []
        self.text = text

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"GroupLiteral({self.text!r})"


class _Parser:
    def __init__(self, source: str):
        super().__init__()
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.index]

    def take(self, kind: str, expected: Optional[list[str]] = None) -> Token:
        tok = self.peek
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"Unexpected {found}", tok.position, expected or [kind])
        self.index += 1
        return tok

    def literal(self) -> GroupLiteral:
        start = self.peek.position
        name_tok = self.take("name", ["name"])
        name = name_tok.text.lower()
        if self.peek.kind == ":":
            self.take(":")
            if name == "perm":
                lit = GroupLiteral("perm", name, [], start, self.perm_body())
            elif name == "abelian":
                lit = GroupLiteral("abelian", name, self.int_list(), start)
            else:
                raise ParseError(f"Only perm and abelian literals take ':', not {name!r}",
                                 name_tok.position, ["perm", "abelian"])
        else:
            args: list[Arg] = []
            if self.peek.kind == "(":
                self.take("(")
                args.append(self.arg())
                while self.peek.kind == ",":
                    self.take(",")
                    args.append(self.arg())
                self.take(")", [",", ")"])
            lit = GroupLiteral("catalog", name, args, start)
        lit.text = self.source[start:self.peek.position].strip() if self.peek.kind != "end" \
            else self.source[start:].strip()
        return lit

    def arg(self) -> Arg:
        if self.peek.kind == "int":
            return int(self.take("int").text)
        if self.peek.kind == "name":
            return self.literal()
        tok = self.peek
        raise ParseError("Expected an argument", tok.position, ["integer", "name"])

    def int_list(self) -> list[Arg]:
        values: list[Arg] = [int(self.take("int", ["integer"]).text)]
        while self.peek.kind == ",":
            self.take(",")
            values.append(int(self.take("int", ["integer"]).text))
        return values

    def perm_body(self) -> list[list[list[int]]]:
        perms = [self.perm()]
        while self.peek.kind == ";":
            self.take(";")
            perms.append(self.perm())
        return perms

    def perm(self) -> list[list[int]]:
        cycles = [self.cycle()]
        while self.peek.kind == "(":
            cycles.append(self.cycle())
        return cycles

    def cycle(self) -> list[int]:
        self.take("(", ["("])
        points: list[int] = []
        while self.peek.kind == "int":
            points.append(int(self.take("int").text))
            if self.peek.kind == ",":
                self.take(",")
        self.take(")", ["integer", ")"])
        return points


def parse_literal(source: str) -> GroupLiteral:
    """
    Parse one group literal; the whole input must be consumed.
    """
    p = _Parser(source)
    lit = p.literal()
    p.take("end", ["end of input"])
    return lit
