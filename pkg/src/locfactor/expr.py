"""Expression language: parsing and rendering.

Grammar (whitespace insensitive, one-token lookahead):

    expr     := ['+'|'-'] term { ('+'|'-') term }
    term     := factor { '*' factor | factor }     # juxtaposition only when the
                                                   # right factor starts with a
                                                   # variable or '('
    factor   := primary [ '^' exponent ]
    primary  := INT | VAR | '(' expr ')'
    exponent := ['-'] INT                          # negative only directly on T

Variables are X, Y and T.  The ring is inferred from the variables used:
none -> Z, {X} -> Z[X], {T} -> the Laurent ring, {Y} or {X, Y} -> Z[X][Y].
T cannot be mixed with X or Y.  The renderer produces strings this grammar
accepts, so parse(render(e)) == e for every engine-produced element.
"""

from __future__ import annotations

from .errors import ParseError
from .rings import FRAC_ZX, LT, QQ, QX, ZX, ZXY, ZZ, Element, Laurent, Poly, Ring

_VARS = ("X", "Y", "T")


def _tokenize(text: str) -> list[tuple]:
    # tokens: ("int", n, pos) ("var", name, pos) ("op", ch, pos) ("end", "", pos)
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            name = text[i:j]
            if name not in _VARS:
                raise ParseError(f"unknown variable {name!r}", i)
            out.append(("var", name, i))
            i = j
            continue
        if ch in "+-*^()":
            out.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, val, pos = self.peek()
        if kind != "op" or val != ch:
            raise ParseError(f"expected {ch!r}", pos)
        return self.take()

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return node

    def expr(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            node = self.term()
            if val == "-":
                node = ("neg", node)
        else:
            node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                node = ("add" if val == "+" else "sub", node, rhs)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = ("mul", node, self.factor())
            elif kind == "var" or (kind == "op" and val == "("):
                # juxtaposition: 12X, 2(X+1), X(X+1)
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.primary()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, pos = self.peek()
            if kind == "op" and val == "-":
                sign = -1
                self.take()
            kind, val, pos = self.peek()
            if kind != "int":
                raise ParseError("expected an integer exponent", pos)
            self.take()
            exp = sign * val
            if exp < 0 and node != ("var", "T"):
                raise ParseError("negative exponent is only allowed on T", pos)
            node = ("pow", node, exp)
        return node

    def primary(self):
        kind, val, pos = self.take()
        if kind == "int":
            return ("int", val)
        if kind == "var":
            return ("var", val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"expected a value, found {val!r}", pos)


def _collect_vars(node, out: set):
    if node[0] == "var":
        out.add(node[1])
    elif node[0] in ("neg",):
        _collect_vars(node[1], out)
    elif node[0] in ("add", "sub", "mul"):
        _collect_vars(node[1], out)
        _collect_vars(node[2], out)
    elif node[0] == "pow":
        _collect_vars(node[1], out)


def _infer_ring(variables: set) -> Ring:
    if "T" in variables:
        if variables - {"T"}:
            raise ParseError("T cannot be mixed with X or Y")
        return LT
    if "Y" in variables:
        return ZXY
    if "X" in variables:
        return ZX
    return ZZ


def _evaluate(node, ring: Ring, env: dict) -> Element:
    op = node[0]
    if op == "int":
        return ring.from_int(node[1])
    if op == "var":
        return env[node[1]]
    if op == "neg":
        return ring.neg(_evaluate(node[1], ring, env))
    if op == "add":
        return ring.add(_evaluate(node[1], ring, env), _evaluate(node[2], ring, env))
    if op == "sub":
        return ring.sub(_evaluate(node[1], ring, env), _evaluate(node[2], ring, env))
    if op == "mul":
        return ring.mul(_evaluate(node[1], ring, env), _evaluate(node[2], ring, env))
    if op == "pow":
        if node[2] < 0:
            return LT.t_power(node[2])
        return ring.pow(_evaluate(node[1], ring, env), node[2])
    raise ParseError(f"unknown node {op!r}")


def _env_for(ring: Ring) -> dict:
    if ring == ZX:
        return {"X": ZX.gen}
    if ring == LT:
        return {"T": LT.t_power(1)}
    if ring == ZXY:
        return {"X": ZXY.constant(ZX.gen), "Y": ZXY.gen}
    return {}


def parse_expr(text: str) -> tuple[Ring, Element]:
    """Parse an expression and infer its ring from the variables used."""
    tokens = _tokenize(text)
    ast = _Parser(tokens).parse()
    variables: set = set()
    _collect_vars(ast, variables)
    ring = _infer_ring(variables)
    return ring, _evaluate(ast, ring, _env_for(ring))


def parse_in_ring(text: str, ring: Ring) -> Element:
    """Parse against a known target ring; constants embed into it."""
    tokens = _tokenize(text)
    ast = _Parser(tokens).parse()
    variables: set = set()
    _collect_vars(ast, variables)
    env = _env_for(ring)
    missing = variables - set(env)
    if missing:
        raise ParseError(f"variables {sorted(missing)} are not available in {ring.name}")
    return _evaluate(ast, ring, env)


# ---------------------------------------------------------------------------
# rendering

def _join_terms(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (negative, body) in enumerate(terms):
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def _power_str(var: str, k: int) -> str:
    if k == 1:
        return var
    return f"{var}^{k}"


def _scalar_term(c, var: str, k: int) -> tuple[bool, str]:
    negative = c < 0
    mag = -c if negative else c
    if k == 0:
        return negative, str(mag)
    if mag == 1:
        return negative, _power_str(var, k)
    return negative, f"{mag}*{_power_str(var, k)}"


def _render_scalar_poly(p: Poly, var: str) -> str:
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        terms.append(_scalar_term(c, var, k))
    return _join_terms(terms)


def _render_laurent(a: Laurent) -> str:
    terms = []
    for i in range(len(a.body.coeffs) - 1, -1, -1):
        c = a.body.coeffs[i]
        if c == 0:
            continue
        e = a.low + i
        if e == 0:
            terms.append(_scalar_term(c, "T", 0))
        else:
            negative = c < 0
            mag = -c if negative else c
            body = _power_str("T", e) if mag == 1 else f"{mag}*{_power_str('T', e)}"
            terms.append((negative, body))
    return _join_terms(terms)


def _render_bivariate(a: Poly) -> str:
    terms: list[tuple[bool, str]] = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        inner = a.coeffs[k]
        if not inner.coeffs:
            continue
        nonzero = [j for j, c in enumerate(inner.coeffs) if c != 0]
        if k == 0:
            s = _render_scalar_poly(inner, "X")
            if s.startswith("-"):
                terms.append((True, s[1:]))
            else:
                terms.append((False, s))
            continue
        if len(nonzero) == 1:
            j = nonzero[0]
            c = inner.coeffs[j]
            negative = c < 0
            mag = -c if negative else c
            pieces = []
            if mag != 1:
                pieces.append(str(mag))
            if j > 0:
                pieces.append(_power_str("X", j))
            pieces.append(_power_str("Y", k))
            terms.append((negative, "*".join(pieces)))
        else:
            terms.append((False, f"({_render_scalar_poly(inner, 'X')})*{_power_str('Y', k)}"))
    return _join_terms(terms)


def render(ring: Ring, a: Element) -> str:
    """Canonical textual form; re-parsing yields the same element."""
    if ring == ZZ or ring == QQ:
        return str(a)
    if ring == ZX or ring == QX:
        return _render_scalar_poly(a, ring.var)
    if ring == LT:
        return _render_laurent(a)
    if ring == ZXY:
        return _render_bivariate(a)
    if ring == FRAC_ZX:
        num = _render_scalar_poly(a.num, "X")
        den = _render_scalar_poly(a.den, "X")
        return f"({num})/({den})"
    return repr(a)
