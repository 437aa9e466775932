"""Concrete Laurent-polynomial models of four algebras and a cross-check oracle.

Each case fixes variables x_k (Laurent) and t_p (polynomial), identifies
every x_k with a monomial x^{w_k} of the abstract algebra, and gives the
bracket as an explicit partial-derivative formula.  ``crosscheck`` compares
the image of the abstract bracket with the concrete formula.

Case 4's formula has a third line whose printed form mixes f and g; both
the printed and the symmetric ("corrected") readings are available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .algebra import bracket
from .exactfield import FieldElement, format_coefficient, indeterminate, scalar
from .lattice import GammaSpec
from .sampling import Sampler

READINGS = ("printed", "corrected")


class SignatureMismatch(ValueError):
    pass


class NotRepresentable(ValueError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentElement:
    """Sparse sum of monomials over a fixed signature.

    ``signature`` is a tuple of (name, kind) with kind "laurent" or
    "polynomial"; ``terms`` maps exponent tuples to nonzero scalars.
    """

    __slots__ = ("signature", "terms")

    def __init__(self, signature, terms=None):
        self.signature = tuple(signature)
        t = {}
        for e, c in (terms or {}).items():
            c = scalar(c)
            if c:
                t[tuple(e)] = c
        self.terms = t

    @classmethod
    def _raw(cls, signature, terms):
        obj = cls.__new__(cls)
        obj.signature = signature
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, signature, c):
        return cls(signature, {(0,) * len(signature): c})

    @classmethod
    def var(cls, signature, name, power=1):
        idx = [n for n, _ in signature].index(name)
        e = [0] * len(signature)
        e[idx] = power
        return cls(signature, {tuple(e): 1})

    def _same(self, other):
        if not isinstance(other, LaurentElement) or other.signature != self.signature:
            raise SignatureMismatch("operands have different signatures")

    def __add__(self, other):
        self._same(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = scalar(t.get(e, 0) + c)
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return LaurentElement._raw(self.signature, t)

    def __neg__(self):
        return LaurentElement._raw(self.signature, {e: scalar(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentElement):
            c = scalar(other)
            if not c:
                return LaurentElement._raw(self.signature, {})
            return LaurentElement._raw(self.signature, {e: scalar(v * c) for e, v in self.terms.items()})
        self._same(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = scalar(t.get(e, 0) + c1 * c2)
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return LaurentElement._raw(self.signature, t)

    __rmul__ = __mul__

    def d(self, name):
        """Partial derivative with respect to the named variable."""
        idx = [n for n, _ in self.signature].index(name)
        t = {}
        for e, c in self.terms.items():
            if e[idx]:
                f = list(e)
                f[idx] -= 1
                t[tuple(f)] = scalar(c * e[idx])
        return LaurentElement._raw(self.signature, t)

    def __eq__(self, other):
        return isinstance(other, LaurentElement) and self.signature == other.signature and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        names = [n for n, _ in self.signature]
        out = []
        for k, (e, c) in enumerate(sorted(self.terms.items())):
            mono = " ".join(n if p == 1 else f"{n}^{p}" for n, p in zip(names, e) if p)
            neg = not isinstance(c, FieldElement) and c < 0
            mag = -c if neg else c
            coeff = format_coefficient(mag)
            body = coeff if not mono else (mono if mag == 1 else f"{coeff} {mono}")
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    __repr__ = __str__


L, P = "laurent", "polynomial"

SIGNATURES = {
    1: (("x1", L), ("t2", P), ("x3", L), ("t4", P)),
    2: (("x1", L), ("x2", L), ("x3", L), ("x4", L)),
    3: (("x1", L), ("t2", P), ("x3", L), ("t4", P)),
    4: (("x1", L), ("x2", L), ("x3", L), ("x4", L), ("t4", P)),
}


def _idvectors(case):
    a, b, c = (indeterminate(n) for n in "abc")
    return {
        1: [("x1", (1, 0, 0, 0)), ("x3", (0, 0, 1, 0))],
        2: [("x1", (1, 0, 0, 0)), ("x2", (0, 1, 0, 0)), ("x3", (0, 0, 1, 0)), ("x4", (0, 0, 0, 1))],
        3: [("x1", (1, 0, 1, 0)), ("x3", (0, 0, a, 0))],
        4: [("x1", (1, 0, 1, 0)), ("x2", (0, 1, b, 0)), ("x3", (0, 0, c, 0)), ("x4", (a, 0, 0, 1))],
    }[case]


# which t_p is which signature slot
_T_SLOTS = {1: {1: "t2", 3: "t4"}, 2: {}, 3: {1: "t2", 3: "t4"}, 4: {3: "t4"}}


# ---------------------------------------------------------------------------
# the concrete brackets


def _check(case, f, g):
    sig = SIGNATURES[case]
    for h in (f, g):
        if not isinstance(h, LaurentElement) or h.signature != sig:
            raise SignatureMismatch(f"operand is not over the case {case} signature")
    return sig


def concrete_bracket(case, m, f, g, reading="corrected"):
    """The explicit partial-derivative bracket of the given case."""
    if m == 0:
        raise ValueError("m must be nonzero")
    sig = _check(case, f, g)

    def V(name, k=1):
        return LaurentElement.var(sig, name, k)

    a, b, c = (indeterminate(n) for n in "abc")
    if case == 1:
        x1, x3 = V("x1"), V("x3")
        x3m1 = V("x3", m + 1)
        return (
            x1 * x1 * x3 * (f.d("x1") * g.d("t2") - f.d("t2") * g.d("x1"))
            + (x3m1 * f.d("x3") + f) * g.d("t4")
            - f.d("t4") * (x3m1 * g.d("x3") + g)
        )
    if case == 2:
        x1, x2, x3, x4 = V("x1"), V("x2"), V("x3"), V("x4")
        x3m1 = V("x3", m + 1)
        return x1 * x1 * x2 * x3 * (f.d("x1") * g.d("x2") - f.d("x2") * g.d("x1")) + x4 * (
            (x3m1 * f.d("x3") + f) * g.d("x4") - f.d("x4") * (x3m1 * g.d("x3") + g)
        )
    if case == 3:
        x1, x3 = V("x1"), V("x3")
        x3m = V("x3", m)

        def e(h):
            return x3m * (x1 * h.d("x1") + a * x3 * h.d("x3")) + h

        return x1 * x1 * (f.d("x1") * g.d("t2") - f.d("t2") * g.d("x1")) + e(f) * g.d("t4") - f.d("t4") * e(g)
    if case == 4:
        if reading not in READINGS:
            raise ValueError(f"reading must be one of {READINGS}")
        x1, x2, x3, x4 = V("x1"), V("x2"), V("x3"), V("x4")
        x3m = V("x3", m)

        def d1(h):
            return x1 * h.d("x1") + a * x4 * h.d("x4")

        def d4(h):
            return x4 * h.d("x4") + h.d("t4")

        def e(h, first=None):
            first = h if first is None else first
            return x3m * (x1 * first.d("x1") + b * x2 * h.d("x2") + c * x3 * h.d("x3")) + h

        third = e(g, f) if reading == "printed" else e(g)
        return x1 * x2 * (d1(f) * g.d("x2") - f.d("x2") * d1(g)) + e(f) * d4(g) - d4(f) * third
    raise ValueError(f"unknown case {case}")


# ---------------------------------------------------------------------------
# abstract -> concrete


@dataclass
class RealizationMap:
    case: int
    m: int
    reading: str = "corrected"

    def __post_init__(self):
        if self.case not in SIGNATURES:
            raise ValueError(f"unknown case {self.case}")
        if self.m == 0:
            raise ValueError("m must be nonzero")
        self.spec = getattr(catalog, f"example{self.case}")(self.m)
        self.signature = SIGNATURES[self.case]
        ids = _idvectors(self.case)
        self.identifications = ids
        self._lat = GammaSpec([w for _, w in ids], None, self.spec.indeterminates)
        # rows: identification vectors in canonical coordinates; invert over Q
        M = [self._lat.coordinates_of(w) for _, w in ids]
        self._inv = _inverse([[Fraction(x) for x in r] for r in M])
        self._slots = [n for n, _ in self.signature]
        self._cache = {}

    def exponents(self, alpha, i):
        key = (alpha, i)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        v = self.spec.proj(alpha)
        can = self._lat.coordinates_of(v)
        if can is None:
            raise NotRepresentable(f"{alpha} is outside the identification lattice")
        n = [sum(Fraction(c) * self._inv[r][k] for r, c in enumerate(can)) for k in range(len(can))]
        if any(x.denominator != 1 for x in n):
            raise NotRepresentable(f"{alpha} has non-integral exponents")
        e = [0] * len(self.signature)
        for (name, _), x in zip(self.identifications, n):
            e[self._slots.index(name)] = int(x)
        for p in range(4):
            if i[p]:
                slot = _T_SLOTS[self.case].get(p)
                if slot is None:
                    raise NotRepresentable(f"t{p + 1} has no concrete variable in case {self.case}")
                e[self._slots.index(slot)] = i[p]
        out = tuple(e)
        self._cache[key] = out
        return out


def _inverse(M):
    n = len(M)
    A = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [r[n:] for r in A]


def realize(rmap, u):
    t = {}
    for (alpha, i), c in u.terms.items():
        e = rmap.exponents(alpha, i)
        t[e] = scalar(t.get(e, 0) + c)
    return LaurentElement(rmap.signature, t)


def crosscheck(rmap, samples=200, seed=0):
    """realize([u,v]) == concrete_bracket(realize(u), realize(v)) on random pairs."""
    spec = rmap.spec
    smp = Sampler(spec, seed)
    draw = smp.derived_element if spec.is_restricted() else smp.element
    for n in range(samples):
        u, v = draw(), draw()
        lhs = realize(rmap, bracket(spec, u, v))
        rhs = concrete_bracket(rmap.case, rmap.m, realize(rmap, u), realize(rmap, v), rmap.reading)
        if lhs != rhs:
            return {"case": rmap.case, "m": rmap.m, "reading": rmap.reading, "ok": False, "checked": n,
                    "u": u, "v": v, "abstract": lhs, "concrete": rhs}
    return {"case": rmap.case, "m": rmap.m, "reading": rmap.reading, "ok": True, "checked": samples}


def select_reading(m=1, samples=200, seed=0):
    """Cross-check both readings of case 4; returns (selected or None, reports)."""
    reports = {r: crosscheck(RealizationMap(4, m, r), samples, seed) for r in READINGS}
    ok = [r for r in READINGS if reports[r]["ok"]]
    return (ok[0] if len(ok) == 1 else None), reports
