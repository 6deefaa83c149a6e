"""A compact text format for framework documents.

::

    # comments run to the end of the line
    arg a : atom "a"
    arg b : atom "b"
    arg F : block { args: a, b; attacks: (a, b); supports: }
    root F

Whitespace and line breaks are free. Block sections are optional and may
appear in any order, each at most once.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import ParseError
from .model import AtomDef, BlockDef, Definition, FrameworkDoc

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<punct>[:{};,()])
    """,
    re.VERBOSE,
)

SECTIONS = ("args", "attacks", "supports")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, i = 1, 0, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", line, i - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, i - line_start + 1))
        i = m.end()
    tokens.append(Token("eof", "", line, i - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.line, tok.column)

    def take(self, kind: str, text: str | None = None) -> Token:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            self.fail(f"expected {text or kind}")
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == text

    def document(self) -> FrameworkDoc:
        defs: dict[str, Definition] = {}
        root = None
        while self.tok.kind != "eof":
            kw = self.take("name")
            if kw.text == "arg":
                name_tok = self.take("name")
                if name_tok.text in defs:
                    self.fail(f"argument {name_tok.text!r} defined twice", name_tok)
                self.take("punct", ":")
                defs[name_tok.text] = self.definition()
            elif kw.text == "root":
                if root is not None:
                    self.fail("root given twice", kw)
                root = self.take("name").text
            else:
                self.fail("expected 'arg' or 'root'", kw)
        if root is None:
            self.fail("missing 'root' statement")
        return FrameworkDoc(defs, root)

    def definition(self) -> Definition:
        kind = self.take("name")
        if kind.text == "atom":
            return AtomDef(json.loads(self.take("string").text))
        if kind.text != "block":
            self.fail("expected 'atom' or 'block'", kind)
        self.take("punct", "{")
        found: dict[str, tuple] = {}
        while not self.at("}"):
            sec = self.take("name")
            if sec.text not in SECTIONS:
                self.fail("expected args, attacks or supports", sec)
            if sec.text in found:
                self.fail(f"section {sec.text!r} given twice", sec)
            self.take("punct", ":")
            found[sec.text] = self.names() if sec.text == "args" else self.pairs()
            if not self.at("}"):
                self.take("punct", ";")
        self.take("punct", "}")
        return BlockDef(found.get("args", ()), found.get("attacks", ()), found.get("supports", ()))

    def names(self) -> tuple[str, ...]:
        if self.tok.kind != "name":
            return ()
        out = [self.take("name").text]
        while self.at(","):
            self.take("punct", ",")
            out.append(self.take("name").text)
        return tuple(out)

    def pairs(self) -> tuple[tuple[str, str], ...]:
        if not self.at("("):
            return ()
        out = [self.pair()]
        while self.at(","):
            self.take("punct", ",")
            out.append(self.pair())
        return tuple(out)

    def pair(self) -> tuple[str, str]:
        self.take("punct", "(")
        a = self.take("name").text
        self.take("punct", ",")
        b = self.take("name").text
        self.take("punct", ")")
        return a, b


def parse_dsl(text: str) -> FrameworkDoc:
    """Parse the text format; semantic checks are left to ``validate``."""
    return _Parser(text).document()


def to_dsl(doc: FrameworkDoc) -> str:
    lines = []
    for name, d in doc.definitions.items():
        if isinstance(d, AtomDef):
            lines.append(f"arg {name} : atom {json.dumps(d.content)}")
            continue
        parts = [f"args: {', '.join(d.args)}"]
        if d.attacks:
            parts.append("attacks: " + ", ".join(f"({a}, {b})" for a, b in d.attacks))
        if d.supports:
            parts.append("supports: " + ", ".join(f"({a}, {b})" for a, b in d.supports))
        lines.append(f"arg {name} : block {{ {'; '.join(parts)} }}")
    lines.append(f"root {doc.root}")
    return "\n".join(lines) + "\n"
