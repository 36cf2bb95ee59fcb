"""Text syntax for graded free polynomials.

    expr   := term (('+' | '-') term)*
    term   := ('+' | '-')* factor ('*'? factor)*
    factor := atom ('^' INT)?
    atom   := NUMBER ('/' NUMBER)? | VAR | '(' expr ')' | '[' expr (',' expr)+ ']' | MACRO
    VAR    := NAME '@' ('-'? INT | '(' '-'? INT ')')

Juxtaposition multiplies. ``[a,b,c]`` is left-normed. A name may carry only
one degree per input. Family macros:

    g_m(m; d1,...,dm)       t_2n(n; d1,...,d2n)     s_n(n) or s_n(n; d)
    P_k(k, item; degs)      P_k(k, item, l; degs)   C_D(k; l1,...,lk)

Degree lists may be omitted for the family defaults. :func:`to_text` in
:mod:`zgrass.freealg` prints the exact inverse of this grammar.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .fields import QQ, Field
from .freealg import FreePoly, GVar, comm

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^/@()\[\],;])
""", re.VERBOSE)

MACROS = ("g_m", "t_2n", "s_n", "P_k", "C_D")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, field: Field):
        self.text = text
        self.field = field
        self.toks = tokenize(text)
        self.i = 0
        self.degrees: dict[str, tuple[int, int]] = {}

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.tok.pos if pos is None else pos, self.text)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        t = self.tok
        if not self.accept(text):
            self.error(f"expected {text!r}, found {t.text or 'end of input'!r}")
        return t

    def integer(self, signed: bool = True) -> int:
        neg = signed and self.accept("-")
        if self.tok.kind != "num":
            self.error("expected an integer")
        v = int(self.tok.text)
        self.i += 1
        return -v if neg else v

    # grammar
    def parse(self) -> FreePoly:
        if self.tok.kind == "end":
            self.error("empty expression")
        f = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return f

    def expr(self) -> FreePoly:
        f = self.term()
        while True:
            if self.accept("+"):
                f = f + self.term()
            elif self.accept("-"):
                f = f - self.term()
            else:
                return f

    def term(self) -> FreePoly:
        neg = False
        while self.tok.kind == "op" and self.tok.text in "+-":
            neg ^= self.tok.text == "-"
            self.i += 1
        f = self.factor()
        while True:
            if self.accept("*"):
                f = f * self.factor()
            elif self._starts_atom():
                f = f * self.factor()
            else:
                break
        return -f if neg else f

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("num", "name") or (t.kind == "op" and t.text in "([")

    def factor(self) -> FreePoly:
        f = self.atom()
        if self.accept("^"):
            e = self.integer(signed=False)
            f = f ** e
        return f

    def atom(self) -> FreePoly:
        t = self.tok
        F = self.field
        if t.kind == "num":
            self.i += 1
            if self.accept("/"):
                den = self.integer(signed=False)
                if den == 0:
                    self.error("division by zero", t.pos)
                try:
                    c = F(f"{t.text}/{den}")
                except ZeroDivisionError:
                    self.error(f"{t.text}/{den} has no image in {F}", t.pos)
                return FreePoly.one(F) * c
            return FreePoly.one(F) * F(int(t.text))
        if t.kind == "name":
            if t.text in MACROS and self.toks[self.i + 1].text == "(":
                return self.macro()
            return self.variable()
        if self.accept("("):
            f = self.expr()
            self.expect(")")
            return f
        if self.accept("["):
            args = [self.expr()]
            while self.accept(","):
                args.append(self.expr())
            self.expect("]")
            if len(args) < 2:
                self.error("a commutator needs at least two entries", t.pos)
            return comm(*args)
        self.error(f"unexpected {t.text or 'end of input'!r}")

    def variable(self) -> FreePoly:
        t = self.tok
        self.i += 1
        if not self.accept("@"):
            self.error(f"variable {t.text!r} needs a degree, e.g. {t.text}@1", t.pos)
        if self.accept("("):
            d = self.integer()
            self.expect(")")
        else:
            d = self.integer()
        self._note(t.text, d, t.pos)
        return FreePoly.var(GVar(t.text, d), self.field)

    def _note(self, name: str, d: int, pos: int):
        if name in self.degrees and self.degrees[name][0] != d:
            old, _ = self.degrees[name]
            self.error(f"conflicting degree for {name}: {old} and {d}", pos)
        self.degrees.setdefault(name, (d, pos))

    def macro(self) -> FreePoly:
        from . import families as fam
        from .freealg import standard

        t = self.tok
        self.i += 1
        self.expect("(")
        head = [self.integer()]
        while self.accept(","):
            head.append(self.integer())
        degs = None
        if self.accept(";"):
            degs = [self.integer()]
            while self.accept(","):
                degs.append(self.integer())
        self.expect(")")
        F = self.field
        try:
            if t.text == "g_m":
                (m,) = self._arity(head, 1, t)
                f = fam.g_m(m, degs, F)
            elif t.text == "t_2n":
                (n,) = self._arity(head, 1, t)
                f = fam.t_2n(n, degs, F)
            elif t.text == "s_n":
                (n,) = self._arity(head, 1, t)
                if degs is not None and len(degs) != 1:
                    self.error("s_n takes a single degree", t.pos)
                f = standard(n, degs[0] if degs else 0, field=F)
            elif t.text == "P_k":
                if len(head) not in (2, 3):
                    self.error("P_k expects (k, item) or (k, item, l)", t.pos)
                f = fam.Pk_item(head[0], head[1], head[2] if len(head) == 3 else None, degs, F)
            else:
                (k,) = self._arity(head, 1, t)
                if degs is None:
                    self.error("C_D needs the multiplicities after ';'", t.pos)
                f = fam.C_D_monomials(k, degs, F)
        except ValueError as e:
            if isinstance(e, ParseError):
                raise
            self.error(f"{t.text}: {e}", t.pos)
        for v in f.variables():
            self._note(v.name, v.degree, t.pos)
        return f

    def _arity(self, head, n, t):
        if len(head) != n:
            self.error(f"{t.text} expects {n} parameter(s) before ';'", t.pos)
        return head


def parse_poly(text: str, field: Field = QQ) -> FreePoly:
    """Parse the polynomial grammar above into a canonical :class:`FreePoly`."""
    return _Parser(text, field).parse()
