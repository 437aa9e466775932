"""Isomorphisms between algebras with equal (J, delta).

Parameters ``(a1, a2, a3, a4)`` describe the block matrix
``((1,0),(a1,a2)) + ((1,0),(a3,a4))``.  ``tau`` multiplies row vectors by
it, ``chi`` is a multiplicative character on Gamma with ``chi(sigma) =
a2/a4`` and ``chi(delta) = 1``, and ``theta`` sends x^{alpha,i} to

    a4^-1 chi(alpha) y^{tau(alpha)} t1^i1 (a1 t1 + a2 t2)^i2 t3^i3 (a3 t3 + a4 t4)^i4.

The group action on subgroups uses the inverse matrix, ``g(Gamma) = Gamma g^-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .algebra import Element, _acc, bracket, split_bracket
from .exactfield import div, exact_root, format_scalar, parse_scalar, scalar
from .lattice import SIGMA, GammaSpec, projection_kernel, smith_form, subgroup_equal
from .sampling import Sampler


class ChiUnsolvable(ValueError):
    def __init__(self, divisor, target):
        self.divisor = divisor
        self.target = target
        super().__init__(
            f"chi needs a {divisor}-th root of {format_scalar(target)}, which is not in the field; "
            f"choose parameters with a2 = a4 * w^{divisor} for some scalar w"
        )


class SpecMismatch(ValueError):
    pass


class GammaNotMapped(ValueError):
    pass


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class IsoParams:
    a1: object
    a2: object
    a3: object
    a4: object

    def __post_init__(self):
        for k in ("a1", "a2", "a3", "a4"):
            object.__setattr__(self, k, scalar(getattr(self, k)))

    @classmethod
    def identity(cls):
        return cls(0, 1, 0, 1)

    def as_tuple(self):
        return (self.a1, self.a2, self.a3, self.a4)

    def violations(self, m):
        out = []
        if self.a2 == 0:
            out.append("a2_zero")
        if self.a4 == 0:
            out.append("a4_zero")
        if not m[0] and m[1] and self.a1 != 0:
            out.append("a1_must_be_0")
        if not m[2] and m[3] and self.a3 != 0:
            out.append("a3_must_be_0")
        return out

    def check(self, m):
        bad = self.violations(m)
        if bad:
            raise InvalidParams(", ".join(bad))

    def inverse(self):
        a1, a2, a3, a4 = self.as_tuple()
        return IsoParams(div(-a1, a2), div(1, a2), div(-a3, a4), div(1, a4))

    def compose(self, other):
        """Matrix product self * other."""
        a1, a2, a3, a4 = self.as_tuple()
        b1, b2, b3, b4 = other.as_tuple()
        return IsoParams(a1 + a2 * b1, a2 * b2, a3 + a4 * b3, a4 * b4)

    def to_json(self):
        return {f"a{n}": format_scalar(v) for n, v in enumerate(self.as_tuple(), 1)}


def params_from_dict(d, names=()):
    """IsoParams and optional chi values from the iso config JSON."""
    p = IsoParams(*(parse_scalar(str(d[f"a{n}"]), names) for n in range(1, 5)))
    chi = None
    if d.get("chi") is not None:
        chi = Chi(tuple(parse_scalar(str(c), names) for c in d["chi"]))
    return p, chi


def tau_apply(params, beta):
    a1, a2, a3, a4 = params.as_tuple()
    b1, b2, b3, b4 = (scalar(x) for x in beta)
    return (scalar(b1 + a1 * b2), scalar(a2 * b2), scalar(b3 + a3 * b4), scalar(a4 * b4))


# ---------------------------------------------------------------------------
# the character chi


@dataclass(frozen=True)
class Chi:
    values: tuple  # one nonzero scalar per Gamma basis vector

    def __call__(self, coords):
        out = 1
        for v, c in zip(self.values, coords):
            if c > 0:
                out = out * v**c
            elif c < 0:
                out = div(out, v ** (-c))
        return scalar(out)

    def inverse(self):
        return Chi(tuple(div(1, v) for v in self.values))

    def to_json(self):
        return [format_scalar(v) for v in self.values]


def _mult_apply(row, targets):
    out = 1
    for c, t in zip(row, targets):
        if c > 0:
            out = out * t**c
        elif c < 0:
            out = div(out, t ** (-c))
    return scalar(out)


def solve_chi(gamma, chi_sigma, chi_delta=1):
    """Character on Gamma with prescribed values on sigma and delta.

    Uses the Smith form of the 2 x rank matrix of sigma and delta coordinates;
    unconstrained directions get the value 1.
    """
    rows = [list(gamma.sigma_coords), list(gamma.delta_coords)]
    U, D, V = smith_form(rows)
    targets = [scalar(chi_sigma), scalar(chi_delta)]
    tprime = [_mult_apply(U[r], targets) for r in range(2)]
    r = gamma.rank
    y = [1] * r
    for k in range(2):
        d = D[k][k] if k < r else 0
        if d == 0:
            if tprime[k] != 1:
                raise ChiUnsolvable(0, tprime[k])
            continue
        if d < 0:
            d, tprime[k] = -d, div(1, tprime[k])
        root = exact_root(tprime[k], d)
        if root is None:
            raise ChiUnsolvable(d, tprime[k])
        y[k] = root
    # log v = V y  =>  v_j = prod_k y_k^{V[j][k]}
    values = tuple(_mult_apply(V[j], y) for j in range(r))
    return Chi(values)


def chi_construct(gamma, params):
    return solve_chi(gamma, div(params.a2, params.a4), 1)


# ---------------------------------------------------------------------------
# theta


def _binom_powers(c1, c2, n):
    """(c1 s + c2 t)^n as {(r, n - r): coefficient} (power of s, power of t)."""
    out = {}
    for r in range(n + 1):
        c = scalar(comb(n, r) * c1**r * c2 ** (n - r))
        if c:
            out[(r, n - r)] = c
    return out


def _check_pair(src, dst):
    if src.m != dst.m:
        raise SpecMismatch(f"J patterns differ: {src.m} vs {dst.m}")
    if src.delta3 != dst.delta3:
        raise SpecMismatch(f"delta3 differs: {format_scalar(src.delta3)} vs {format_scalar(dst.delta3)}")


class Theta:
    """theta: A(src) -> A(dst) for fixed params and chi (monomial images cached)."""

    def __init__(self, src, dst, params, chi=None):
        _check_pair(src, dst)
        params.check(src.m)
        self.src, self.dst, self.params = src, dst, params
        self.chi = chi if chi is not None else chi_construct(src.gamma, params)
        self.cache = {}
        self.images = []
        for n in range(src.rank):
            e = tuple(int(k == n) for k in range(src.rank))
            img = dst.coords(tau_apply(params, src.proj(e)))
            if img is None:
                raise GammaNotMapped(f"tau of basis vector {n} is not in the target group")
            self.images.append(img)
        self.ainv = div(1, params.a4)

    def alpha_image(self, alpha):
        out = [0] * self.dst.rank
        for c, img in zip(alpha, self.images):
            if c:
                for k, x in enumerate(img):
                    out[k] += c * x
        return tuple(out)

    def monomial(self, alpha, i):
        key = (alpha, i)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        a1, a2, a3, a4 = self.params.as_tuple()
        base = scalar(self.ainv * self.chi(alpha))
        a = self.alpha_image(alpha)
        terms = {}
        p12 = _binom_powers(a1, a2, i[1])
        p34 = _binom_powers(a3, a4, i[3])
        for (r1, r2), c12 in p12.items():
            for (r3, r4), c34 in p34.items():
                j = (i[0] + r1, r2, i[2] + r3, r4)
                _acc(terms, (a, j), base * c12 * c34)
        out = Element._raw({k: scalar(v) for k, v in terms.items()})
        self.cache[key] = out
        return out

    def inverse(self):
        """theta^-1, built from the inverse parameters and the transported inverse character."""
        inv = self.params.inverse()
        vals = []
        for n in range(self.dst.rank):
            e = tuple(int(k == n) for k in range(self.dst.rank))
            pre = self.src.coords(tau_apply(inv, self.dst.proj(e)))
            if pre is None:
                raise GammaNotMapped(f"basis vector {n} of the target group has no preimage")
            vals.append(div(1, self.chi(pre)))
        return Theta(self.dst, self.src, inv, Chi(tuple(vals)))

    def __call__(self, u):
        t = {}
        for (a, i), c in u.terms.items():
            for k, v in self.monomial(a, i).terms.items():
                _acc(t, k, c * v)
        return Element._raw({k: scalar(v) for k, v in t.items()})


def theta_apply(src, dst, params, chi, u):
    return Theta(src, dst, params, chi)(u)


def hom_verify(src, dst, params, chi=None, samples=500, seed=0):
    """Check theta against [.,.]_1, [.,.]_2 and the full bracket on random pairs."""
    th = Theta(src, dst, params, chi)
    smp = Sampler(src, seed)
    for n in range(samples):
        u, v = smp.element(), smp.element()
        tu, tv = th(u), th(v)
        for part in (1, 2, None):
            if part is None:
                lhs = th(bracket(src, u, v))
                rhs = bracket(dst, tu, tv)
            else:
                lhs = th(split_bracket(src, part, u, v))
                rhs = split_bracket(dst, part, tu, tv)
            if lhs != rhs:
                return {"ok": False, "checked": n, "part": part or "full", "u": u, "v": v, "lhs": lhs, "rhs": rhs}
    return {"ok": True, "checked": samples}


def corrupted_chi(gamma, params, chi_delta=2):
    """A character with chi(sigma) = a2/a4 but chi(delta) != 1 (negative control).

    When delta is a multiple of a basis direction the requested value may
    have no root in the field; powers of it are tried in turn.
    """
    for e in (1, 2, 3, 4, 6, 12):
        try:
            return solve_chi(gamma, div(params.a2, params.a4), scalar(chi_delta) ** e)
        except ChiUnsolvable:
            continue
    raise ChiUnsolvable(12, chi_delta)


# ---------------------------------------------------------------------------
# structure-space helpers


def gamma_action(m, g, gamma):
    """g(Gamma) = {alpha g^-1}: the subgroup generated by the transformed basis."""
    g.check(m)
    inv = g.inverse()
    gens = [tau_apply(inv, b) for b in gamma.basis]
    names = _names(gamma.indeterminates, g)
    return GammaSpec(gens, gamma.delta3, names)


def _names(base, params):
    names = list(base)
    for v in params.as_tuple():
        if hasattr(v, "num"):
            for x in sorted(v.num.variables() | v.den.variables()):
                if x not in names:
                    names.append(x)
    return tuple(names)


def omega_violations(m, a, gamma):
    """Conditions for Gamma to lie in Omega_{m,a}."""
    out = []
    if gamma.coordinates_of(SIGMA) is None:
        out.append("sigma_not_in_gamma")
    if gamma.coordinates_of((0, 0, scalar(a), 0)) is None:
        out.append("delta_not_in_gamma")
    if gamma.projection_nonzero(2):
        kern = projection_kernel(gamma, 4)
        if not any(gamma.element(k)[1] != 0 for k in kern.rows):
            out.append("ker_pi4_inside_ker_pi2")
    for q in (2, 4):
        if not m[q - 1] and not gamma.projection_nonzero(q):
            out.append(f"pi{q}_must_be_nonzero")
    return out


def tau_inverse(params, beta):
    return tau_apply(params.inverse(), beta)


def iso_verify(spec_a, spec_b, params):
    """(ok, diagnostics): J and delta agree, params admissible, tau(Gamma) = Gamma'."""
    diag = []
    if spec_a.m != spec_b.m:
        diag.append(f"J differs: {spec_a.m} vs {spec_b.m}")
    if spec_a.delta3 != spec_b.delta3:
        diag.append(f"delta3 differs: {format_scalar(spec_a.delta3)} vs {format_scalar(spec_b.delta3)}")
    diag.extend(params.violations(spec_a.m))
    if params.a2 != 0 and params.a4 != 0:
        for b in spec_a.gamma.basis:
            if spec_b.coords(tau_apply(params, b)) is None:
                diag.append(f"tau{tuple(format_scalar(x) for x in b)} not in Gamma'")
        for b in spec_b.gamma.basis:
            if spec_a.coords(tau_inverse(params, b)) is None:
                diag.append(f"basis vector {tuple(format_scalar(x) for x in b)} of Gamma' has no preimage")
    return (not diag), diag


@dataclass
class Found:
    g: IsoParams
    candidates: int


@dataclass
class Unknown:
    candidates: int
    reason: str


def _small_combos(gamma, reach=2):
    r = gamma.rank
    vecs = []
    for c in itertools.product(range(-reach, reach + 1), repeat=r):
        if any(c):
            vecs.append((sum(map(abs, c)), c))
    vecs.sort()
    return [gamma.element(c) for _, c in vecs]


def orbit_search(m, a, g1, g2, bound=2000):
    """Look for g in G_{m,a} with g(g1) = g2; every hit is re-verified."""
    if g1.rank != g2.rank:
        return Unknown(0, f"rank {g1.rank} != {g2.rank}")
    for name, gam in (("first", g1), ("second", g2)):
        bad = omega_violations(m, a, gam)
        if bad:
            return Unknown(0, f"{name} group is outside Omega: {', '.join(bad)}")
    for p in (2, 4):
        if g1.projection_nonzero(p) != g2.projection_nonzero(p):
            return Unknown(0, f"pi{p} vanishes on exactly one group")
    tried = 0

    def accept(g):
        if g.violations(m):
            return False
        return subgroup_equal(gamma_action(m, g, g1), g2)

    ident = IsoParams.identity()
    tried += 1
    if accept(ident):
        return Found(ident, tried)
    # g(g1) = g2 means b g lies in g1 for every b in g2
    b2 = next((b for b in g2.basis if b[1] != 0), None)
    b4 = next((b for b in g2.basis if b[3] != 0), None)
    pool = _small_combos(g1)
    c2s = [c for c in pool if c[1] != 0] if b2 is not None else [None]
    c4s = [c for c in pool if c[3] != 0] if b4 is not None else [None]
    for c2 in c2s:
        if c2 is None:
            a1, a2 = 0, 1
        else:
            a2 = div(c2[1], b2[1])
            a1 = div(c2[0] - b2[0], b2[1])
        for c4 in c4s:
            if tried >= bound:
                return Unknown(tried, "candidate bound reached")
            if c4 is None:
                a3, a4 = 0, 1
            else:
                a4 = div(c4[3], b4[3])
                a3 = div(c4[2] - b4[2], b4[3])
            tried += 1
            try:
                g = IsoParams(a1, a2, a3, a4)
                if accept(g):
                    return Found(g, tried)
            except ZeroDivisionError:
                continue
    return Unknown(tried, "candidates exhausted")


def random_params(m, rng, pool=(1, -1, 2, -2, 3)):
    """Admissible random parameters (a1/a3 forced to 0 where the J pattern requires)."""
    a1 = 0 if (not m[0] and m[1]) else rng.choice((0,) + tuple(pool))
    a3 = 0 if (not m[2] and m[3]) else rng.choice((0,) + tuple(pool))
    return IsoParams(a1, rng.choice(pool), a3, rng.choice(pool))


def image_spec(spec, params):
    """The AlgebraSpec whose Gamma is tau(Gamma), with the same J and delta."""
    from .lattice import AlgebraSpec

    gens = [tau_apply(params, b) for b in spec.gamma.basis]
    names = _names(spec.indeterminates, params)
    return AlgebraSpec(GammaSpec(gens, spec.delta3, names), spec.m)


__all__ = [
    "Chi",
    "ChiUnsolvable",
    "Found",
    "GammaNotMapped",
    "IsoParams",
    "SpecMismatch",
    "Theta",
    "Unknown",
    "chi_construct",
    "corrupted_chi",
    "gamma_action",
    "hom_verify",
    "image_spec",
    "iso_verify",
    "omega_violations",
    "orbit_search",
    "params_from_dict",
    "random_params",
    "solve_chi",
    "tau_apply",
    "theta_apply",
]
