"""Elements of A(Gamma, J), the product, derivations and the Lie bracket.

A basis monomial x^{alpha,i} is keyed by ``(alpha, i)`` where ``alpha`` is an
integer tuple of Gamma-basis coordinates and ``i`` a 4-tuple of naturals.
Field coordinates alpha_p are only computed when a formula needs them.
"""

from __future__ import annotations

from .exactfield import as_integer, div, scalar

ZERO_I = (0, 0, 0, 0)
E = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


class PreconditionViolated(ValueError):
    pass


def _acc(d, key, c):
    s = d.get(key)
    s = c if s is None else s + c
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class Element:
    """Finite linear combination of monomials x^{alpha,i}.

    ``terms`` maps ``(alpha, i)`` to a nonzero scalar.  Treat as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                c = scalar(c)
                if c:
                    t[(tuple(k[0]), tuple(k[1]))] = c
        self.terms = t

    @classmethod
    def _raw(cls, terms):
        e = cls.__new__(cls)
        e.terms = terms
        return e

    @classmethod
    def monomial(cls, alpha, i=ZERO_I, c=1):
        return cls({(tuple(alpha), tuple(i)): c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def support(self):
        return sorted(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def scalar_value(self, rank):
        """The scalar c if self == c * 1, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            if k == ((0,) * rank, ZERO_I):
                return c
        return None

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return Element._raw(t)

    def __neg__(self):
        return Element._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, -c)
        return Element._raw(t)

    def scale(self, c):
        c = scalar(c)
        if not c:
            return Element._raw({})
        if c == 1:
            return self
        t = {}
        for k, v in self.terms.items():
            w = scalar(v * c)
            if w:
                t[k] = w
        return Element._raw(t)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self):
        return f"Element({self.items()!r})"


def linear_combination(pairs):
    """Sum of c * u over (c, u) pairs."""
    t = {}
    for c, u in pairs:
        c = scalar(c)
        if not c:
            continue
        for k, v in u.terms.items():
            _acc(t, k, c * v)
    return Element._raw({k: scalar(v) for k, v in t.items()})


# ---------------------------------------------------------------------------
# distinguished elements


def one(spec):
    return Element._raw({(spec.zero, ZERO_I): 1})


def x_sigma(spec, k=1):
    return Element._raw({(tuple(k * s for s in spec.sigma_coords), ZERO_I): 1})


def x_delta(spec, k=1):
    return Element._raw({(tuple(k * s for s in spec.delta_coords), ZERO_I): 1})


def t(spec, p, n=1):
    i = [0, 0, 0, 0]
    i[p - 1] = n
    if not spec.in_j(i):
        raise PreconditionViolated(f"t{p} is not allowed when J{p} = {{0}}")
    return Element._raw({(spec.zero, tuple(i)): 1})


def check_element(spec, u):
    """Raise PreconditionViolated unless every monomial of u belongs to spec."""
    for alpha, i in u.terms:
        if len(alpha) != spec.rank:
            raise PreconditionViolated(f"monomial has {len(alpha)} coordinates, rank is {spec.rank}")
        if not spec.in_j(i):
            raise PreconditionViolated(f"exponent {i} violates J = {spec.m}")


# ---------------------------------------------------------------------------
# product and derivations


def elem_mul(spec, u, v):
    out = {}
    for (a, i), c in u.terms.items():
        for (b, j), d in v.terms.items():
            _acc(out, (_add(a, b), _add(i, j)), c * d)
    return Element._raw({k: scalar(c) for k, c in out.items()})


def derive(spec, p, u):
    out = {}
    q = p - 1
    for (a, i), c in u.terms.items():
        ap = spec.proj(a)[q]
        if ap:
            _acc(out, (a, i), c * ap)
        if i[q]:
            _acc(out, (a, _sub(i, E[q])), c * i[q])
    return Element._raw({k: scalar(c) for k, c in out.items()})


def _bracket_definition(spec, u, v):
    xs = x_sigma(spec)
    xd = x_delta(spec)
    d = {p: (derive(spec, p, u), derive(spec, p, v)) for p in (1, 2, 3, 4)}
    part1 = elem_mul(spec, xs, elem_mul(spec, d[1][0], d[2][1]) - elem_mul(spec, d[1][1], d[2][0]))
    left = elem_mul(spec, xd, d[3][0]) + u
    right = elem_mul(spec, xd, d[3][1]) + v
    part2 = elem_mul(spec, left, d[4][1]) - elem_mul(spec, d[4][0], right)
    return part1 + part2


def _bracket_expanded(spec, u, v):
    sc = spec.sigma_coords
    dc = spec.delta_coords
    m = spec.m
    out = {}

    def put(alpha, i, c):
        if c and all(x >= 0 for x in i) and spec.in_j(i):
            _acc(out, (alpha, i), c)

    for (a, i), cu in u.terms.items():
        A = spec.proj(a)
        for (b, j), cv in v.terms.items():
            B = spec.proj(b)
            c = cu * cv
            ab = _add(a, b)
            ij = _add(i, j)
            s = _add(ab, sc)
            dl = _add(ab, dc)
            put(s, ij, c * (A[0] * B[1] - B[0] * A[1]))
            if m[1]:
                put(s, _sub(ij, E[1]), c * (A[0] * j[1] - B[0] * i[1]))
            if m[0]:
                put(s, _sub(ij, E[0]), c * (i[0] * B[1] - j[0] * A[1]))
            if m[0] and m[1]:
                put(s, _sub(ij, (1, 1, 0, 0)), c * (i[0] * j[1] - j[0] * i[1]))
            put(dl, ij, c * (A[2] * B[3] - B[2] * A[3]))
            if m[3]:
                put(dl, _sub(ij, E[3]), c * (A[2] * j[3] - B[2] * i[3]))
            if m[2]:
                put(dl, _sub(ij, E[2]), c * (i[2] * B[3] - j[2] * A[3]))
            if m[2] and m[3]:
                put(dl, _sub(ij, (0, 0, 1, 1)), c * (i[2] * j[3] - j[2] * i[3]))
            put(ab, ij, c * (B[3] - A[3]))
            if m[3]:
                put(ab, _sub(ij, E[3]), c * (j[3] - i[3]))
    return Element._raw({k: scalar(c) for k, c in out.items() if c})


def bracket(spec, u, v, path="expanded"):
    """Lie bracket [u, v].

    ``path="definition"`` composes products and derivations literally;
    ``path="expanded"`` uses the ten-term structure constants per monomial
    pair.  Both give equal results.
    """
    if not u.terms or not v.terms:
        return Element._raw({})
    if path == "expanded":
        return _bracket_expanded(spec, u, v)
    if path == "definition":
        return _bracket_definition(spec, u, v)
    raise ValueError(f"unknown bracket path {path!r}")


def odot(spec, p, u, v):
    """Split products: p=1 gives x^sigma d1(u) d2(v), p=2 gives (x^delta d3(u) + u) d4(v)."""
    if p == 1:
        return elem_mul(spec, x_sigma(spec), elem_mul(spec, derive(spec, 1, u), derive(spec, 2, v)))
    if p == 2:
        left = elem_mul(spec, x_delta(spec), derive(spec, 3, u)) + u
        return elem_mul(spec, left, derive(spec, 4, v))
    raise ValueError("p must be 1 or 2")


def split_bracket(spec, p, u, v):
    return odot(spec, p, u, v) - odot(spec, p, v, u)


def ad_power(spec, u, v, n, shift=0):
    """(ad_u - shift)^n applied to v."""
    for _ in range(n):
        w = bracket(spec, u, v)
        if shift:
            w = w - v.scale(shift)
        v = w
    return v


# ---------------------------------------------------------------------------
# eigenspace splitting


def eigendecompose(spec, u, mode="ad1"):
    """Split u into generalized eigencomponents.

    mode ``ad1``: ad_1 acts on x^{alpha,i} with eigenvalue alpha_4 (nilpotent
    part lowers i_4).  mode ``adxminussigma``: on monomials with alpha_4 =
    i_4 = 0, ad_{x^{-sigma}} has eigenvalue -alpha_2.  Keys are the
    eigenvalues.
    """
    out = {}
    for (a, i), c in u.terms.items():
        A = spec.proj(a)
        if mode == "ad1":
            lam = A[3]
        elif mode == "adxminussigma":
            if A[3] != 0 or i[3] != 0:
                raise PreconditionViolated("adxminussigma needs alpha_4 = i_4 = 0 on every term")
            lam = scalar(-A[1])
        else:
            raise ValueError(f"unknown mode {mode!r}")
        out.setdefault(lam, {})[(a, i)] = c
    return {lam: Element._raw(t) for lam, t in out.items()}


def nilpotency_depth(u, p=4):
    """max i_p over the support (so (ad - lambda)^(depth+1) kills a component)."""
    return max((i[p - 1] for _, i in u.terms), default=0)


# ---------------------------------------------------------------------------
# derived subalgebra


def constrained(spec, alpha):
    """True for alpha with alpha_2 = alpha_4 = 0 and alpha_1 = 1."""
    A = spec.proj(alpha)
    return A[1] == 0 and A[3] == 0 and A[0] == 1


def orbit_position(spec, alpha):
    """(representative, k) with alpha = representative + k * delta."""
    d = spec.delta_coords
    j = next(n for n, x in enumerate(d) if x)
    k = alpha[j] // d[j]
    rep = tuple(x - k * y for x, y in zip(alpha, d))
    return rep, k


def g_element(spec, gamma, i):
    """gamma_3 x^{gamma+delta,i} + i_3 x^{gamma+delta,i-e3} + 2 x^{gamma,i}."""
    gd = _add(gamma, spec.delta_coords)
    terms = {}
    _acc(terms, (gd, i), spec.proj(gamma)[2])
    if i[2]:
        _acc(terms, (gd, _sub(i, E[2])), i[2])
    _acc(terms, (gamma, i), 2)
    return Element._raw({k: scalar(c) for k, c in terms.items()})


def derived_decomposition(spec, u):
    """Express u in the spanning set of the derived algebra.

    Returns ``(free, combos)`` where ``free`` is the part of u made of
    monomials that are themselves in the derived algebra and ``combos`` maps
    ``(gamma, i)`` to the coefficient of g_element(gamma, i), or None when u is
    not in the derived algebra.  When the derived algebra is everything,
    ``combos`` is empty.
    """
    if not spec.is_restricted():
        return u, {}
    free = {}
    orbits = {}
    for (a, i), c in u.terms.items():
        if constrained(spec, a):
            rep, k = orbit_position(spec, a)
            orbits.setdefault(rep, {}).setdefault(k, {})[i[2]] = c
        else:
            free[(a, i)] = c
    combos = {}
    d3 = spec.delta3
    for rep, byk in orbits.items():
        lam0 = spec.proj(rep)[2]
        ks = sorted(byk)
        k1, k2 = ks[0], ks[-1]
        kstar = as_integer(div(-lam0, d3))
        stop = k2
        if kstar is not None and kstar >= k2:
            stop = kstar + 1
        prev = {}
        k = k1
        while True:
            r = byk.get(k, {})
            lam = scalar(lam0 + (k - 1) * d3)
            # A_{k-1} c_{k-1} with (N c)_n = (n+1) c_{n+1}
            ac = {}
            for n, v in prev.items():
                _acc(ac, n, lam * v)
                if n > 0:
                    _acc(ac, n - 1, n * v)
            cur = {}
            for n in set(r) | set(ac):
                val = div(r.get(n, 0) - ac.get(n, 0), 2)
                if val:
                    cur[n] = val
            if k > k2 and not cur:
                break
            if k >= stop:
                if cur:
                    return None
                break
            for n, v in cur.items():
                combos[(_add(rep, tuple(k * x for x in spec.delta_coords)), (0, 0, n, 0))] = v
            prev = cur
            k += 1
    return Element._raw(free), combos


def derived_membership(spec, u):
    """Decide whether u lies in the derived subalgebra [A, A]."""
    return derived_decomposition(spec, u) is not None


def spanning_element(spec, kind, alpha, i=ZERO_I):
    """Element of the derived-algebra spanning set: a free monomial or g(gamma, i)."""
    if kind == "g":
        return g_element(spec, alpha, i)
    return Element.monomial(alpha, i)


# ---------------------------------------------------------------------------
# ad-local finiteness probe


def _reduce_row(rows, w):
    """Fraction-free reduction of w against echelon rows [(pivot, row)]."""
    w = dict(w)
    for piv, r in rows:
        c = w.get(piv)
        if not c:
            continue
        rp = r[piv]
        nw = {}
        for k, v in w.items():
            nw[k] = v * rp
        for k, v in r.items():
            _acc(nw, k, -c * v)
        w = {k: scalar(v) for k, v in nw.items() if v}
    return w


def rank_of(vectors):
    rows = []
    for v in vectors:
        w = _reduce_row(rows, v.terms)
        if w:
            rows.append((max(w), w))
    return len(rows)


def ad_span_probe(spec, u, v, depth):
    """Dimensions d_q of span{v, ad_u v, ..., ad_u^q v} for q = 0..depth."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    rows = []
    dims = []
    w = v
    for q in range(depth + 1):
        if q:
            w = bracket(spec, u, w)
        r = _reduce_row(rows, w.terms)
        if r:
            rows.append((max(r), r))
        dims.append(len(rows))
    return dims
