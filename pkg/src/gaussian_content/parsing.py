"""Text syntax for rings, polynomials and generator lists.

Grammar (whitespace insensitive)::

    ring   := FIELD "[" (ident ("," ident)*)? "]" ("/" "(" poly ("," poly)* ")")? ("domain")?
    FIELD  := "QQ" | "GF(" prime ")"
    poly   := ("+"|"-")? term (("+"|"-") term)*
    term   := coeff? ("*"? ident ("^" nat)?)*
    coeff  := integer | integer "/" integer

The main indeterminate ``X`` is reserved: it is appended to every ring and
may not be declared.
"""

import re

from .coeff import GF, QQ
from .errors import GaussianContentError, InvalidArgument, ParseError
from .poly import MAIN_VAR, PolyRing, format_poly
from .rings import make_quotient

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],]))"
)


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.items = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m:
                rest = text[pos:]
                if rest.strip():
                    bad = pos + len(rest) - len(rest.lstrip())
                    raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
                break
            kind = m.lastgroup
            self.items.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self, offset=0):
        j = self.i + offset
        return self.items[j] if j < len(self.items) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def at(self, value):
        return self.peek()[1] == value

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value:
            found = "end of input" if val is None else repr(val)
            raise ParseError(f"expected {value!r}, found {found}", self.text, pos)

    def error(self, message):
        raise ParseError(message, self.text, self.peek()[2])

    def done(self):
        if self.peek()[0] is not None:
            self.error(f"unexpected {self.peek()[1]!r}")


def _parse_field(toks):
    kind, val, pos = toks.next()
    if val == "QQ":
        return QQ
    if val == "GF":
        toks.expect("(")
        kind, p, ppos = toks.next()
        if kind != "int":
            raise ParseError("expected a prime modulus", toks.text, ppos)
        toks.expect(")")
        try:
            return GF(int(p))
        except InvalidArgument as exc:
            raise ParseError(str(exc), toks.text, ppos) from None
    raise ParseError(f"unknown field {val!r}; expected QQ or GF(p)", toks.text, pos)


def _parse_coeff(toks, field):
    _, num, pos = toks.next()
    den = 1
    if toks.at("/") and toks.peek(1)[0] == "int":
        toks.next()
        _, d, dpos = toks.next()
        den = int(d)
        if den == 0:
            raise ParseError("zero denominator", toks.text, dpos)
    try:
        return field(int(num), den)
    except InvalidArgument as exc:
        raise ParseError(f"malformed coefficient: {exc}", toks.text, pos) from None


def _parse_term(toks, ring):
    kind, val, pos = toks.peek()
    coeff = ring.field.one
    exps = [0] * ring.nvars
    seen_any = False
    if kind == "int":
        coeff = _parse_coeff(toks, ring.field)
        seen_any = True
    while True:
        kind, val, pos = toks.peek()
        if val == "*":
            toks.next()
            kind, val, pos = toks.peek()
            if kind == "int":
                coeff = coeff * _parse_coeff(toks, ring.field)
                seen_any = True
                continue
            if kind != "ident":
                toks.error("expected a variable after '*'")
        if kind != "ident":
            break
        toks.next()
        if val not in ring.names:
            raise ParseError(f"unknown variable {val!r}", toks.text, pos)
        e = 1
        if toks.at("^"):
            toks.next()
            k, n, npos = toks.next()
            if k != "int":
                raise ParseError("expected a natural exponent", toks.text, npos)
            e = int(n)
        exps[ring.names.index(val)] += e
        seen_any = True
    if not seen_any:
        toks.error("expected a term")
    return ring.monomial(tuple(exps), coeff)


def _parse_poly(toks, ring):
    sign = 1
    if toks.at("+") or toks.at("-"):
        sign = -1 if toks.next()[1] == "-" else 1
    total = _parse_term(toks, ring)
    total = total if sign == 1 else -total
    while toks.at("+") or toks.at("-"):
        op = toks.next()[1]
        t = _parse_term(toks, ring)
        total = total + t if op == "+" else total - t
    return total


def _parse_list(toks, ring):
    out = [_parse_poly(toks, ring)]
    while toks.at(","):
        toks.next()
        out.append(_parse_poly(toks, ring))
    return out


def parse_ring(text):
    """Parse ring text such as ``"QQ[a,b,c]/(a^2 - b^2*c) domain"``."""
    toks = _Tokens(text)
    field = _parse_field(toks)
    toks.expect("[")
    names = []
    while not (toks.at("]") and not names):
        kind, val, pos = toks.next()
        if kind != "ident":
            raise ParseError("expected a variable name", text, pos)
        if val == MAIN_VAR:
            raise ParseError(f"{MAIN_VAR} is reserved for the main indeterminate", text, pos)
        if val in names:
            raise ParseError(f"duplicate variable {val!r}", text, pos)
        if val in ("QQ", "GF", "domain"):
            raise ParseError(f"{val!r} is a keyword", text, pos)
        names.append(val)
        if toks.at(","):
            toks.next()
            continue
        break
    toks.expect("]")

    base = PolyRing(field, tuple(names))
    relations = []
    if toks.at("/"):
        toks.next()
        toks.expect("(")
        relations = _parse_list(toks, base)
        toks.expect(")")
    domain = False
    if toks.at("domain"):
        toks.next()
        domain = True
    toks.done()
    try:
        return make_quotient(names, field, relations, domain=domain)
    except GaussianContentError as exc:
        raise ParseError(str(exc), text, len(text)) from None


def parse_poly(text, ring):
    """Parse a polynomial of ``ring`` (a RingSpec, which admits ``X``, or a PolyRing)."""
    target = ring.full if hasattr(ring, "full") else ring
    toks = _Tokens(text)
    p = _parse_poly(toks, target)
    toks.done()
    return p


def parse_poly_list(text, ring):
    """Comma separated polynomials; the empty string gives an empty list."""
    target = ring.full if hasattr(ring, "full") else ring
    if not text.strip():
        return []
    toks = _Tokens(text)
    out = _parse_list(toks, target)
    toks.done()
    return out


def parse_point(text, ring):
    """``"x=1, y=0"`` into ``{"x": 1, "y": 0}`` with field coefficients."""
    point = {}
    for part in text.split(","):
        if "=" not in part:
            raise ParseError("expected name=value", text, text.find(part))
        name, value = (s.strip() for s in part.split("=", 1))
        if name not in ring.variables:
            raise ParseError(f"unknown variable {name!r}", text, text.find(part))
        val = parse_poly(value, ring.base)
        if not val.is_constant():
            raise ParseError(f"coordinate {value!r} is not a constant", text, text.find(part))
        point[name] = val.constant_coefficient()
    return point


def format_ring(ring):
    return str(ring)


__all__ = ["format_poly", "format_ring", "parse_poly", "parse_poly_list", "parse_point", "parse_ring"]
