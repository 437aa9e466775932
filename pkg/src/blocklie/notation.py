"""Text form of algebra elements.

Grammar (whitespace is insignificant)::

    element := sterm (('+' | '-') sterm)*
    sterm   := coeff? monom | coeff
    monom   := 'x{' int (',' int)* '}' tfac* | tfac+ | '1'
    tfac    := 't' [1-4] ('^' nat)?

``coeff`` is a product/quotient of scalar factors; sums inside a coefficient
need parentheses, e.g. ``(a+1) x{1,0}``.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Element, _acc
from .exactfield import (
    FieldElement,
    ScalarParser,
    ScalarSyntaxError,
    format_coefficient,
    format_scalar,
    leading_sign,
    scalar,
    tokenize,
)

T_NAMES = {"t1": 0, "t2": 1, "t3": 2, "t4": 3}


class ExpressionSyntaxError(ValueError):
    def __init__(self, msg, pos, expected=()):
        self.pos = pos
        self.expected = tuple(expected)
        extra = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{msg} at position {pos}{extra}")


class JViolation(ValueError):
    pass


class ArityError(ValueError):
    pass


def _is_monom_start(toks, k):
    kind, val, _ = toks[k]
    if kind != "ident":
        return False
    if val in T_NAMES:
        return True
    return val == "x" and toks[k + 1][1] == "{"


class _ElementParser:
    def __init__(self, spec, text):
        self.spec = spec
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        names = spec.indeterminates if spec is not None else None
        self.sp = ScalarParser(self.toks, text, names, stop=self._stop)

    def _stop(self, tok):
        # the scalar parser only asks about its current token
        return _is_monom_start(self.toks, self.sp.i)

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok, expected=()):
        raise ExpressionSyntaxError(msg, tok[2], expected)

    def element(self):
        terms = {}
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.next()
            sign = -1 if t[1] == "-" else 1
        while True:
            c, key = self.sterm()
            _acc(terms, key, sign * c)
            t = self.peek()
            if t[0] == "end":
                break
            if t[0] == "op" and t[1] in "+-":
                self.next()
                sign = -1 if t[1] == "-" else 1
                continue
            self.fail(f"unexpected {t[1]!r}", t, ("'+'", "'-'", "end of input"))
        return Element({k: scalar(v) for k, v in terms.items()})

    def sterm(self):
        c = 1
        if not _is_monom_start(self.toks, self.i):
            t = self.peek()
            if not (t[0] in ("num", "ident") or t[1] == "("):
                self.fail(f"unexpected {t[1] or 'end of input'!r}", t, ("scalar", "'x{'", "'t1'..'t4'", "'1'"))
            self.sp.i = self.i
            try:
                c = self.sp.term()
            except ScalarSyntaxError as e:
                raise ExpressionSyntaxError(str(e).split(" at position")[0], e.pos if e.pos is not None else 0) from None
            self.i = self.sp.i
        rank = self.spec.rank if self.spec is not None else None
        alpha = None
        i = [0, 0, 0, 0]
        if _is_monom_start(self.toks, self.i):
            t = self.peek()
            if t[1] == "x":
                self.next()
                self.next()  # '{'
                alpha = []
                while True:
                    neg = False
                    tk = self.next()
                    if tk[1] == "-":
                        neg = True
                        tk = self.next()
                    elif tk[1] == "+":
                        tk = self.next()
                    if tk[0] != "num":
                        self.fail("expected integer coordinate", tk, ("integer",))
                    alpha.append(-int(tk[1]) if neg else int(tk[1]))
                    tk = self.next()
                    if tk[1] == "}":
                        break
                    if tk[1] != ",":
                        self.fail(f"unexpected {tk[1] or 'end of input'!r}", tk, ("','", "'}'"))
            while self.peek()[0] == "ident" and self.peek()[1] in T_NAMES:
                tk = self.next()
                p = T_NAMES[tk[1]]
                n = 1
                if self.peek()[1] == "^":
                    self.next()
                    e = self.next()
                    if e[0] != "num":
                        self.fail("expected natural exponent", e, ("natural number",))
                    n = int(e[1])
                if self.spec is not None and n and not self.spec.m[p]:
                    raise JViolation(f"{tk[1]} used but J{p + 1} = {{0}} (position {tk[2]})")
                i[p] += n
        if alpha is None:
            alpha = [0] * (rank if rank is not None else 0)
        elif rank is not None and len(alpha) != rank:
            raise ArityError(f"monomial has {len(alpha)} coordinates but Gamma has rank {rank}")
        return c, (tuple(alpha), tuple(i))


def parse_element(spec, text):
    """Parse element text over ``spec`` (Gamma-basis coordinates, J enforced)."""
    p = _ElementParser(spec, text)
    if p.peek()[0] == "end":
        raise ExpressionSyntaxError("empty expression", 0, ("element",))
    return p.element()


def format_monomial(alpha, i):
    parts = []
    if any(alpha):
        parts.append("x{" + ",".join(str(a) for a in alpha) + "}")
    for p in range(4):
        if i[p] == 1:
            parts.append(f"t{p + 1}")
        elif i[p] > 1:
            parts.append(f"t{p + 1}^{i[p]}")
    return " ".join(parts) if parts else "1"


def _split_sign(c):
    if isinstance(c, FieldElement):
        if len(c.num.terms) == 1 and c.den.is_constant() and leading_sign(c) < 0:
            return -1, -c
        return 1, c
    c = Fraction(c)
    if c < 0:
        return -1, scalar(-c)
    return 1, scalar(c)


def format_element(u):
    """Canonical text of u (terms in lexicographic (alpha, i) order)."""
    if not u.terms:
        return "0"
    out = []
    for k, ((alpha, i), c) in enumerate(sorted(u.terms.items())):
        sign, mag = _split_sign(c)
        mono = format_monomial(alpha, i)
        if mono == "1":
            body = format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coefficient(mag)} {mono}"
        if k == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)
