"""Exact scalars: rationals and rational functions in named indeterminates.

Scalars throughout the package are plain ``int`` / ``Fraction`` values when
they are rational, and :class:`FieldElement` instances otherwise.  Arithmetic
on a :class:`FieldElement` that happens to produce a constant demotes the
result back to a ``Fraction`` (or ``int``), so rational configurations never
pay for polynomial arithmetic.

Indeterminates are algebraically independent over Q; no relations between
them can be imposed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational


class DivisionByZero(ZeroDivisionError):
    pass


class ScalarSyntaxError(ValueError):
    def __init__(self, msg, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            msg = f"{msg} at position {pos}"
        super().__init__(msg)


# ---------------------------------------------------------------------------
# monomials: sorted tuples of (name, exponent) with exponent > 0


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for n, e in m2:
        d[n] = d.get(n, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(m1, m2):
    """m1 / m2 or None when m2 does not divide m1."""
    d = dict(m1)
    for n, e in m2:
        r = d.get(n, 0) - e
        if r < 0:
            return None
        if r:
            d[n] = r
        else:
            d.pop(n, None)
    return tuple(sorted(d.items()))


def _mono_deg(m):
    return sum(e for _, e in m)


def _mono_key(m, names):
    # graded lexicographic, earlier names dominate
    d = dict(m)
    return (_mono_deg(m),) + tuple(d.get(n, 0) for n in names)


def _mono_str(m):
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


def _q(c):
    """Integral Fractions become ints (much cheaper to multiply)."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _qdiv(a, b):
    return _q(Fraction(a) / b)


# ---------------------------------------------------------------------------


class Polynomial:
    """Sparse polynomial over Q in named indeterminates.

    ``terms`` maps monomials (sorted ``(name, exponent)`` tuples) to nonzero
    rational coefficients (``int`` when integral, else ``Fraction``).  Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {m: _q(Fraction(c)) for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        c = _q(Fraction(c))
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, name):
        return cls._raw({((name, 1),): 1})

    # -- queries --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and () in t)

    def constant_value(self):
        return self.terms.get((), 0)

    def variables(self):
        return sorted({n for m in self.terms for n, _ in m})

    def degree(self):
        return max((_mono_deg(m) for m in self.terms), default=-1)

    def sorted_terms(self, names=None):
        """Terms in decreasing graded-lex order."""
        if names is None:
            names = self.variables()
        return sorted(self.terms.items(), key=lambda mc: _mono_key(mc[0], names), reverse=True)

    def leading_term(self, names=None):
        if names is None:
            names = self.variables()
        m = max(self.terms, key=lambda m: _mono_key(m, names))
        return m, self.terms[m]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = _q(t.get(m, 0) + c)
            if s:
                t[m] = s
            else:
                del t[m]
        return Polynomial._raw(t)

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial._raw({})
        if len(a) == 1 and () in a:
            return other.scale(a[()])
        if len(b) == 1 and () in b:
            return self.scale(b[()])
        t = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                s = _q(t.get(m, 0) + c1 * c2)
                if s:
                    t[m] = s
                else:
                    del t[m]
        return Polynomial._raw(t)

    def scale(self, c):
        if not c:
            return Polynomial._raw({})
        if c == 1:
            return self
        return Polynomial._raw({m: _q(v * c) for m, v in self.terms.items()})

    def __pow__(self, n):
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        """Multivariate division by a single polynomial (graded-lex)."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        names = sorted(set(self.variables()) | set(other.variables()))
        lm, lc = other.leading_term(names)
        q = {}
        r = {}
        p = dict(self.terms)
        while p:
            m = max(p, key=lambda m: _mono_key(m, names))
            c = p[m]
            qm = _mono_div(m, lm)
            if qm is None:
                r[m] = c
                del p[m]
                continue
            f = _qdiv(c, lc)
            q[qm] = _q(q.get(qm, 0) + f)
            for om, oc in other.terms.items():
                mm = _mono_mul(qm, om)
                s = _q(p.get(mm, 0) - f * oc)
                if s:
                    p[mm] = s
                else:
                    p.pop(mm, None)
        return Polynomial._raw({m: c for m, c in q.items() if c}), Polynomial._raw(r)

    def exact_div(self, other):
        """Quotient if ``other`` divides ``self`` exactly, else None."""
        q, r = self.divmod(other)
        return q if r.is_zero() else None

    def content(self):
        """Positive rational c with self / c having coprime integer coefficients."""
        from math import gcd
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(1)

    def monomial_content(self):
        """Largest monomial dividing every term."""
        it = iter(self.terms)
        try:
            common = dict(next(it))
        except StopIteration:
            return ()
        for m in it:
            d = dict(m)
            for n in list(common):
                e = min(common[n], d.get(n, 0))
                if e:
                    common[n] = e
                else:
                    del common[n]
        return tuple(sorted(common.items()))

    def evaluate_monomial_shift(self, mono):
        return Polynomial._raw({_mono_mul(m, mono): c for m, c in self.terms.items()})

    def divide_monomial(self, mono):
        return Polynomial._raw({_mono_div(m, mono): c for m, c in self.terms.items()})

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = _mono_str(m)
            else:
                body = f"{a}*{_mono_str(m)}"
            if k == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


_ONE = Polynomial.constant(1)


def _poly_of(x):
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x)


def _univariate_gcd(p, q):
    """Monic gcd of two polynomials in (at most) one common variable."""
    a, b = p, q
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    _, lc = a.leading_term()
    return a.scale(_qdiv(1, lc))


# ---------------------------------------------------------------------------


class FieldElement:
    """Element ``num/den`` of Q(z1, ..., zk).

    Construction normalizes: the denominator is made monic, and when it
    divides the numerator the element is stored with denominator 1.
    Equality is decided by cross-multiplication, independent of how far the
    fraction was reduced.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _poly_of(num)
        den = _ONE if den is None else _poly_of(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num.scale(_qdiv(1, c))
            den = _ONE
        elif num.is_zero():
            den = _ONE
        else:
            q = num.exact_div(den)
            if q is not None:
                num, den = q, _ONE
            else:
                _, lc = den.leading_term()
                if lc != 1:
                    num = num.scale(_qdiv(1, lc))
                    den = den.scale(_qdiv(1, lc))
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        x = cls.__new__(cls)
        x.num = num
        x.den = den
        return x

    def is_polynomial(self):
        return self.den is _ONE or self.den.is_constant()

    def variables(self):
        return sorted(set(self.num.variables()) | set(self.den.variables()))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        o = _as_fe(other)
        if o is None:
            return NotImplemented
        if self.den is _ONE and o.den is _ONE:
            return _demote(self.num + o.num, _ONE)
        if self.den == o.den:
            return _make(self.num + o.num, self.den)
        return _make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _as_fe(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_fe(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return 0
            return FieldElement._raw(self.num.scale(other), self.den)
        o = _as_fe(other)
        if o is None:
            return NotImplemented
        if self.den is _ONE and o.den is _ONE:
            return _demote(self.num * o.num, _ONE)
        return _make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_fe(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DivisionByZero("division by zero scalar")
        return _make(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _as_fe(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return 1 / (self ** (-n))
        return _make(self.num ** n, self.den ** n)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        o = _as_fe(other)
        if o is None:
            return NotImplemented
        if self.den is _ONE and o.den is _ONE:
            return self.num == o.num
        return (self.num * o.den - o.num * self.den).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # polynomials are stored with den 1, so their numerator is canonical;
        # for proper fractions only the degree difference is an invariant
        if self.den is _ONE:
            if self.num.is_constant():
                return hash(self.num.constant_value())
            return hash(self.num)
        return hash(("ratfunc", self.num.degree() - self.den.degree()))

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"FieldElement({format_scalar(self)!r})"


def _as_fe(x):
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement._raw(Polynomial.constant(x), _ONE)
    if isinstance(x, Rational):
        return FieldElement._raw(Polynomial.constant(Fraction(x)), _ONE)
    return None


def _demote(num, den):
    if num.is_constant() and den is _ONE:
        return _norm_rational(num.constant_value())
    return FieldElement._raw(num, den)


def _make(num, den):
    if num.is_zero():
        return 0
    x = FieldElement(num, den)
    if x.den is _ONE and x.num.is_constant():
        return _norm_rational(x.num.constant_value())
    return x


def _norm_rational(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


# ---------------------------------------------------------------------------
# public scalar API


def scalar(x):
    """Normalize an int / Fraction / FieldElement / string into a scalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, FieldElement):
        if x.den is _ONE and x.num.is_constant():
            return _norm_rational(x.num.constant_value())
        return x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        return _norm_rational(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def indeterminate(name):
    return FieldElement._raw(Polynomial.variable(name), _ONE)


def is_rational(x):
    return not isinstance(x, FieldElement)


def as_integer(x):
    """The integer value of x, or None if x is not an integer."""
    if isinstance(x, FieldElement):
        x = scalar(x)
        if isinstance(x, FieldElement):
            return None
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else None


def fe_arith(kind, x, y):
    if kind == "add":
        return scalar(x + y)
    if kind == "sub":
        return scalar(x - y)
    if kind == "mul":
        return scalar(x * y)
    if kind == "div":
        if y == 0:
            raise DivisionByZero("division by zero scalar")
        if isinstance(x, FieldElement) or isinstance(y, FieldElement):
            return scalar(_as_fe(x) / _as_fe(y))
        return _norm_rational(Fraction(x) / Fraction(y))
    raise ValueError(f"unknown operation {kind!r}")


def fe_eq(x, y):
    """Equality by cross-multiplication."""
    a, b = _as_fe(x), _as_fe(y)
    return (a.num * b.den - b.num * a.den).is_zero()


def fe_reduce(x):
    """Divide out a common factor of numerator and denominator when found.

    Handles rational content, common monomial factors, exact divisibility
    and (when only one indeterminate is involved) the univariate gcd.
    """
    if not isinstance(x, FieldElement):
        return _norm_rational(Fraction(x))
    num, den = x.num, x.den
    if den.is_constant() or num.is_zero():
        return scalar(FieldElement(num, den))
    mc = tuple(sorted(dict(num.monomial_content()).items()))
    dc = dict(den.monomial_content())
    common = tuple(sorted((n, min(e, dc[n])) for n, e in mc if n in dc))
    if common:
        num = num.divide_monomial(common)
        den = den.divide_monomial(common)
    names = set(num.variables()) | set(den.variables())
    if len(names) == 1:
        g = _univariate_gcd(num, den)
        if g.degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    return scalar(FieldElement(num, den))


def leading_sign(x):
    """Sign of the leading coefficient (rationals: ordinary sign)."""
    if isinstance(x, FieldElement):
        _, c = x.num.leading_term()
        return 1 if c > 0 else -1
    return (x > 0) - (x < 0)


def exact_root(x, e):
    """An exact e-th root of x inside the field, or None if none is found."""
    if e == 1:
        return x
    if isinstance(x, FieldElement):
        x = fe_reduce(x)
    if not isinstance(x, FieldElement):
        x = Fraction(x)
        if x < 0:
            if e % 2 == 0:
                return None
            r = exact_root(-x, e)
            return None if r is None else -r
        n = _int_root(x.numerator, e)
        d = _int_root(x.denominator, e)
        if n is None or d is None:
            return None
        return _norm_rational(Fraction(n, d))
    n = _poly_root(x.num, e)
    d = _poly_root(x.den, e) if x.den is not _ONE else _ONE
    if n is None or d is None:
        return None
    return scalar(FieldElement(n, d))


def _int_root(n, e):
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / e)) if n.bit_length() < 1000 else None
    if r is not None:
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** e == n:
                return cand
    lo, hi = 0, 1 << (n.bit_length() // e + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** e < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** e == n else None


def _poly_root(p, e):
    """Exact e-th root of a polynomial, found term by term from the top."""
    names = p.variables()
    lm, lc = p.leading_term(names)
    if any(k % e for _, k in lm):
        return None
    c = exact_root(lc, e)
    if c is None:
        return None
    root_lead = Polynomial._raw({tuple((n, k // e) for n, k in lm): _q(Fraction(c))})
    r = root_lead
    # derivative of r^e at the leading term: e * lead^(e-1)
    denom_lm, denom_lc = (root_lead ** (e - 1)).leading_term(names)
    denom_lc = denom_lc * e
    for _ in range(len(p.terms) * (p.degree() + 1) + 1):
        rem = p - r ** e
        if rem.is_zero():
            return r
        m, c = rem.leading_term(names)
        qm = _mono_div(m, denom_lm)
        if qm is None or _mono_key(qm, names) >= _mono_key(lm, names):
            return None
        r = r + Polynomial._raw({qm: _qdiv(c, denom_lc)})
    return None


# ---------------------------------------------------------------------------
# literal grammar
#
#   scalar := ['+'|'-'] term (('+'|'-') term)*
#   term   := factor (['*'|'/'] factor)*        juxtaposition multiplies
#   factor := atom ('^' int)?
#   atom   := number | ident | '(' scalar ')'

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text):
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("ident", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class ScalarParser:
    """Recursive-descent parser over a token list; reusable by other grammars."""

    def __init__(self, tokens, text, indeterminates=None, stop=None):
        self.toks = tokens
        self.i = 0
        self.text = text
        self.indeterminates = None if indeterminates is None else set(indeterminates)
        # predicate on a token telling the term loop to stop (used by the
        # element grammar, where scalars are followed by monomials)
        self.stop = stop or (lambda tok: False)

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.next()
        if t[1] != value:
            raise ScalarSyntaxError(f"expected {value!r}, got {t[1] or 'end of input'!r}", t[2], self.text)
        return t

    def scalar(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.next()
            sign = -1 if t[1] == "-" else 1
        acc = sign * self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.next()
                v = self.term()
                acc = acc + v if t[1] == "+" else acc - v
            else:
                return scalar(acc)

    def starts_factor(self, t):
        if self.stop(t):
            return False
        return t[0] in ("num", "ident") or (t[0] == "op" and t[1] == "(")

    def term(self):
        acc = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "*/":
                self.next()
                v = self.factor()
                if t[1] == "*":
                    acc = acc * v
                else:
                    if v == 0:
                        raise ScalarSyntaxError("division by zero", t[2], self.text)
                    acc = fe_arith("div", acc, v)
            elif self.starts_factor(t):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.next()
            neg = False
            if self.peek()[1] == "-":
                self.next()
                neg = True
            e = self.next()
            if e[0] != "num":
                raise ScalarSyntaxError("expected exponent", e[2], self.text)
            k = int(e[1])
            if neg:
                if base == 0:
                    raise ScalarSyntaxError("division by zero", e[2], self.text)
                return fe_arith("div", 1, base ** k)
            return base ** k
        return base

    def atom(self):
        t = self.next()
        if t[0] == "num":
            return int(t[1])
        if t[0] == "ident":
            if self.indeterminates is not None and t[1] not in self.indeterminates:
                raise ScalarSyntaxError(f"unknown indeterminate {t[1]!r}", t[2], self.text)
            return indeterminate(t[1])
        if t[0] == "op" and t[1] == "(":
            v = self.scalar()
            self.expect(")")
            return v
        raise ScalarSyntaxError(f"expected number, name or '(' but got {t[1] or 'end of input'!r}", t[2], self.text)


def parse_scalar(text, indeterminates=None):
    """Parse a scalar literal such as ``"1/2"``, ``"3*a^2 - 1"`` or ``"(a+1)/(b-2)"``."""
    p = ScalarParser(tokenize(text), text, indeterminates)
    v = p.scalar()
    t = p.peek()
    if t[0] != "end":
        raise ScalarSyntaxError(f"unexpected {t[1]!r}", t[2], text)
    return v


def format_scalar(x):
    if isinstance(x, FieldElement):
        if x.den is _ONE:
            return str(x.num)
        n = str(x.num)
        d = str(x.den)
        if len(x.num.terms) > 1:
            n = f"({n})"
        if len(x.den.terms) > 1 or not _is_bare_monomial(x.den):
            d = f"({d})"
        return f"{n}/{d}"
    return str(_norm_rational(Fraction(x)))


def _is_bare_monomial(p):
    if len(p.terms) != 1:
        return False
    (m, c), = p.terms.items()
    return c == 1 and len(m) == 1


def format_coefficient(x):
    """Scalar text safe to place in front of a monomial (compound values get parens)."""
    s = format_scalar(x)
    if isinstance(x, FieldElement) and (x.den is not _ONE or len(x.num.terms) > 1):
        return f"({s})"
    return s


def div(x, y):
    """Exact quotient of two scalars (never produces a float)."""
    return fe_arith("div", x, y)
