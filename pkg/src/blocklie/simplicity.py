"""Replayable certificates that a nonzero element generates the whole algebra.

A certificate is a list of steps acting on a growing list of intermediates
``I[0], I[1], ...`` where ``I[0]`` is the start element.  Every step appends
one new intermediate:

``AdBy(element, source, side, shift)``
    ``[element, I[source]] - shift * I[source]`` (``side="left"``) or
    ``[I[source], element] - shift * I[source]`` (``side="right"``).  The
    element must lie in the derived algebra, so ideals are preserved.
``LinearCombine(terms)``
    ``sum c * I[s]`` over ``(s, c)`` pairs.
``Scale(c, source)``
    ``c * I[source]`` with ``c != 0``.
``CoefficientOfK(family, points, sources, check, check_source, degree, extract)``
    ``I[sources[n]]`` must equal the right member of ``family`` at
    ``points[n]``; the step brackets the left members against them,
    interpolates in ``k`` and keeps the coefficient of ``k**extract``.  The
    value at ``check`` certifies the degree bound.

:func:`reduce_to_one` plans a certificate ending in the scalar 1.
:func:`saturate_from_one` plans one starting from 1 and ending in a target.
:func:`replay` checks either kind with an independent bracket code path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    ZERO_I,
    E,
    Element,
    PreconditionViolated,
    _add,
    _sub,
    bracket,
    derived_decomposition,
    derived_membership,
    eigendecompose,
    g_element,
    linear_combination,
    nilpotency_depth,
    one,
)
from .exactfield import div, format_scalar, parse_scalar, scalar
from .lattice import joint_kernel, projection_kernel

SCHEMA = "blocklie.trace/1"


class ZeroInput(ValueError):
    pass


class NotInDerived(ValueError):
    pass


class ReductionStuck(RuntimeError):
    pass


class DegreeExceeded(ValueError):
    pass


class ReplayError(AssertionError):
    pass


# ---------------------------------------------------------------------------
# steps


@dataclass(frozen=True)
class AdBy:
    element: Element
    source: int
    side: str = "left"
    shift: object = 0


@dataclass(frozen=True)
class LinearCombine:
    terms: tuple  # ((source, coefficient), ...)


@dataclass(frozen=True)
class Scale:
    c: object
    source: int


@dataclass(frozen=True)
class Family:
    """k -> [x^{l0 + k*l1, li}, x^{r0 + k*r1, ri}] (alpha in Gamma coordinates)."""

    l0: tuple
    l1: tuple
    li: tuple
    r0: tuple
    r1: tuple
    ri: tuple

    def left(self, k):
        return Element.monomial(tuple(a + k * b for a, b in zip(self.l0, self.l1)), self.li)

    def right(self, k):
        return Element.monomial(tuple(a + k * b for a, b in zip(self.r0, self.r1)), self.ri)

    def __call__(self, spec, k, path="expanded"):
        return bracket(spec, self.left(k), self.right(k), path)


@dataclass(frozen=True)
class CoefficientOfK:
    family: Family
    points: tuple
    sources: tuple
    check: int
    check_source: int
    degree: int
    extract: int


@dataclass
class ReductionTrace:
    """Certificate: ``start`` reaches ``result * 1`` (or ``target``) through ``steps``."""

    spec: object
    start: Element
    steps: list = field(default_factory=list)
    result: object = None
    values: list = field(default_factory=list)  # planner's intermediates, I[1:]
    target: Element | None = None
    route: str = ""

    def final(self):
        return self.values[-1] if self.values else self.start


# ---------------------------------------------------------------------------
# interpolation in k


def _lagrange_rows(points):
    """Coefficient lists of the Lagrange basis polynomials (low degree first)."""
    rows = []
    for j, xj in enumerate(points):
        poly = [Fraction(1)]
        den = Fraction(1)
        for m, xm in enumerate(points):
            if m == j:
                continue
            # multiply by (k - xm)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for d, c in enumerate(poly):
                nxt[d + 1] += c
                nxt[d] -= c * xm
            poly = nxt
            den *= xj - xm
        rows.append([c / den for c in poly])
    return rows


def _eval_row(row, k):
    return sum(c * Fraction(k) ** d for d, c in enumerate(row))


def interpolate_coefficient(values, points, extract, check_value=None, check=None):
    """Coefficient of k**extract of the interpolant through (points, values).

    When ``check`` is given, the interpolant must reproduce ``check_value``
    there, otherwise DegreeExceeded is raised.
    """
    rows = _lagrange_rows(points)
    if check is not None:
        pred = linear_combination([(_eval_row(r, check), v) for r, v in zip(rows, values)])
        if pred != check_value:
            raise DegreeExceeded(f"family is not of degree <= {len(points) - 1} in k")
    if extract >= len(points):
        return Element()
    return linear_combination([(r[extract], v) for r, v in zip(rows, values)])


def coefficient_in_k(spec, family, degree, extract, points=None, check=None):
    """Element of k-degree ``extract`` of a family polynomial in k.

    ``family`` is a :class:`Family` or any callable ``k -> Element``.  The
    family is evaluated at ``points`` (default ``0..degree``) and certified
    at ``check`` (default ``max(points) + 1``).
    """
    if extract > degree:
        raise ValueError("extract must not exceed degree")
    if points is None:
        points = tuple(range(degree + 1))
    if len(points) != degree + 1:
        raise ValueError("need degree + 1 interpolation points")
    if check is None:
        check = max(points) + 1

    def ev(k):
        return family(spec, k) if isinstance(family, Family) else family(k)

    values = [ev(k) for k in points]
    return interpolate_coefficient(values, points, extract, ev(check), check)


# ---------------------------------------------------------------------------
# replay


def _apply(spec, step, inter, path, check_membership=True):
    if isinstance(step, AdBy):
        if step.source >= len(inter):
            raise ReplayError("step refers to a later intermediate")
        if check_membership and not derived_membership(spec, step.element):
            raise ReplayError("AdBy operand is outside the derived algebra")
        src = inter[step.source]
        if step.side == "left":
            w = bracket(spec, step.element, src, path)
        elif step.side == "right":
            w = bracket(spec, src, step.element, path)
        else:
            raise ReplayError(f"bad side {step.side!r}")
        if step.shift:
            w = w - src.scale(step.shift)
        return w
    if isinstance(step, LinearCombine):
        if any(s >= len(inter) for s, _ in step.terms):
            raise ReplayError("step refers to a later intermediate")
        return linear_combination([(c, inter[s]) for s, c in step.terms])
    if isinstance(step, Scale):
        if not step.c:
            raise ReplayError("Scale by zero")
        return inter[step.source].scale(step.c)
    if isinstance(step, CoefficientOfK):
        fam = step.family
        if check_membership:
            for k in tuple(step.points) + (step.check,):
                if not derived_membership(spec, fam.left(k)):
                    raise ReplayError("family left member is outside the derived algebra")
        vals = []
        for k, s in zip(step.points, step.sources):
            if inter[s] != fam.right(k):
                raise ReplayError(f"source {s} is not the family member at k={k}")
            vals.append(bracket(spec, fam.left(k), inter[s], path))
        if inter[step.check_source] != fam.right(step.check):
            raise ReplayError("check source is not the family member at the check point")
        chk = bracket(spec, fam.left(step.check), inter[step.check_source], path)
        try:
            return interpolate_coefficient(vals, step.points, step.extract, chk, step.check)
        except DegreeExceeded as e:
            raise ReplayError(str(e)) from None
    raise ReplayError(f"unknown step {step!r}")


def replay(trace, path="definition"):
    """Re-execute a certificate and return its final intermediate.

    Uses the ``definition`` bracket path by default, independent of the
    planner.  Checks AdBy operands lie in the derived algebra, recorded
    intermediates (when present) match, and the final value is
    ``result * 1`` (reductions) or ``target`` (saturations).
    """
    spec = trace.spec
    inter = [trace.start]
    for n, step in enumerate(trace.steps):
        w = _apply(spec, step, inter, path)
        if trace.values and trace.values[n] != w:
            raise ReplayError(f"intermediate {n + 1} differs from the recorded value")
        inter.append(w)
    last = inter[-1]
    if trace.target is not None:
        if last != trace.target:
            raise ReplayError("final intermediate differs from the target")
        return last
    val = last.scalar_value(spec.rank)
    if val is None or not val:
        raise ReplayError("final intermediate is not a nonzero scalar")
    if val != trace.result:
        raise ReplayError("final scalar differs from the recorded result")
    return last


# ---------------------------------------------------------------------------
# planner


class _Builder:
    def __init__(self, spec, start, budget):
        self.spec = spec
        self.trace = ReductionTrace(spec, start)
        self.inter = [start]
        self.budget = budget

    @property
    def cur(self):
        return len(self.inter) - 1

    @property
    def u(self):
        return self.inter[-1]

    def push(self, step):
        if len(self.trace.steps) >= self.budget:
            raise ReductionStuck(f"step budget {self.budget} exhausted")
        w = _apply(self.spec, step, self.inter, "expanded", check_membership=False)
        self.trace.steps.append(step)
        self.trace.values.append(w)
        self.inter.append(w)
        return len(self.inter) - 1

    def ad(self, b, source=None, side="left", shift=0):
        return self.push(AdBy(b, self.cur if source is None else source, side, scalar(shift)))


class _Done(Exception):
    pass


def _mono(alpha, i=ZERO_I):
    return Element.monomial(alpha, i)


def _neg(alpha):
    return tuple(-a for a in alpha)


class _Reducer(_Builder):
    def __init__(self, spec, u, budget):
        super().__init__(spec, u, budget)
        self.route = []

    def proj(self, alpha):
        return self.spec.proj(alpha)

    def check_scalar(self):
        v = self.u.scalar_value(self.spec.rank)
        if v is not None and v:
            self.push(Scale(div(1, v), self.cur))
            raise _Done

    def step(self, *args, **kw):
        self.ad(*args, **kw)
        self.check_scalar()

    # -- eigen-splitting -------------------------------------------------

    def isolate(self, operand, mode, prefer):
        """Project onto one generalized eigencomponent and flatten its nilpotent part."""
        p = 4 if mode == "ad1" else 2
        comps = eigendecompose(self.spec, self.u, mode)
        keys = list(comps)
        first = {lam: min(c.terms) for lam, c in comps.items()}
        keys.sort(key=lambda lam: first[lam])
        chosen = prefer(keys)
        for lam in keys:
            if lam == chosen:
                continue
            for _ in range(nilpotency_depth(comps[lam], p) + 1):
                self.step(operand, shift=lam)
        for _ in range(nilpotency_depth(comps[chosen], p)):
            self.step(operand, shift=chosen)
        return chosen

    # -- contractions ------------------------------------------------------

    def contract(self, p, extra):
        """Shrink the support to a single class of alpha_p with i_p = 0.

        Partners are x^{gamma, extra} with gamma from the cheapest class.
        That class's i_p values all drop by one (terms at 0 vanish) while
        other classes survive with i_p values that never increase.
        """
        q = p - 1
        while True:
            classes = {}
            order = []
            for (a, i) in sorted(self.u.terms):
                key = self.proj(a)[q]
                if key not in classes:
                    classes[key] = []
                    order.append(key)
                classes[key].append((a, i))
            if len(classes) == 1 and all(i[q] == 0 for _, i in classes[order[0]]):
                return
            chosen = min(order, key=lambda c: max(i[q] for _, i in classes[c]))
            gamma = classes[chosen][0][0]
            self.step(_mono(gamma, extra))

    # -- stages -------------------------------------------------------------

    def run(self):
        spec = self.spec
        self.check_scalar()
        # stage A: ad_1 eigencomponent with i_4 = 0
        lam = self.isolate(one(spec), "ad1", lambda ks: 0 if 0 in ks else ks[0])
        if lam != 0:
            self.route.append("lambda")
            self.leave_lambda()
        # stage C: ad_{x^-sigma} eigencomponent with i_2 = 0
        xms = _mono(_neg(spec.sigma_coords))
        eta = self.isolate(xms, "adxminussigma", lambda ks: next((k for k in ks if k != 0), ks[0]))
        if spec.pi_nonzero[1]:
            self.route.append("case1")
            self.case1(eta)
        else:
            self.route.append("case2")
            self.case2()
        self.stage3()
        raise ReductionStuck("stage 3 ended without a scalar")

    def leave_lambda(self):
        base = self.cur
        for (b, j) in sorted(self.u.terms):
            self.ad(_mono(_neg(b)), source=base)
            if self.u:
                self.check_scalar()
                return
        raise ReductionStuck("no term moved the element to eigenvalue 0")

    def d1_zero(self):
        return all(self.proj(a)[0] == 0 and i[0] == 0 for a, i in self.u.terms)

    def case1(self, eta):
        spec = self.spec
        if eta == 0:
            if self.d1_zero():
                return
            kern = projection_kernel(spec.gamma, 4).rows
            beta = next(k for k in kern if spec.proj(k)[1] != 0)
            self.step(_mono(beta))
        self.contract(1, ZERO_I)
        beta = min(self.u.terms)[0]
        self.step(_mono(_neg(_add(beta, spec.sigma_coords))))

    def case2(self):
        spec = self.spec
        if self.d1_zero():
            return
        self.step(_mono(spec.zero, (0, 2, 0, 0)))
        self.contract(1, (0, 1, 0, 0))
        beta = min(self.u.terms)[0]
        if self.proj(beta)[0] == -1:
            self.step(_mono(spec.zero, (0, 1, 0, 0)))
            beta = min(self.u.terms)[0]
        self.step(_mono(_neg(_add(beta, spec.sigma_coords)), (0, 0, 0, 0)))

    def stage3(self):
        spec = self.spec
        if spec.pi_nonzero[3]:
            self.route.append("i")
            beta = next(b for b in _lattice_points(spec) if spec.proj(b)[3] != 0)
            self.step(_mono(beta))
            self.contract(3, ZERO_I)
            (alpha, _), = self.u.terms
            self.step(_mono(_neg(alpha)))
        else:
            self.route.append("ii")
            self.step(_mono(spec.zero, (0, 0, 0, 2)))
            self.contract(3, (0, 0, 0, 1))
            (alpha, _), = self.u.terms
            if any(alpha):
                a3 = self.proj(alpha)[2]
                if scalar(-2 * a3 - spec.delta3) == 0:
                    self.step(_mono(spec.zero, (0, 0, 0, 1)))
                    (alpha, _), = self.u.terms
                partner = _neg(_add(alpha, spec.delta_coords))
                self.step(_mono(partner, (0, 0, 0, 1)))
            self.step(one(spec))


def _lattice_points(spec):
    """Basis vectors of Gamma (as coordinate tuples), then the kernel generators."""
    r = spec.rank
    for n in range(r):
        yield tuple(int(m == n) for m in range(r))


def reduce_to_one(spec, u, budget=None):
    """Plan a certificate carrying u to the scalar 1 using ideal-preserving moves."""
    if not u:
        raise ZeroInput("cannot reduce the zero element")
    if not derived_membership(spec, u):
        raise NotInDerived("element is not in the derived algebra")
    if budget is None:
        budget = 10 * len(u) + 50
    r = _Reducer(spec, u, budget)
    try:
        r.run()
    except _Done:
        pass
    tr = r.trace
    tr.result = 1
    tr.route = "/".join(r.route)
    return tr


# ---------------------------------------------------------------------------
# saturation: from 1 to any element of the derived algebra


class _Saturator(_Builder):
    def __init__(self, spec, budget):
        super().__init__(spec, one(spec), budget)
        self.memo = {}
        self.gmemo = {}
        self._beta = None
        self._gamma = None

    def proj(self, alpha):
        return self.spec.proj(alpha)

    def beta4(self):
        """A Gamma point with nonzero fourth coordinate."""
        if self._beta is None:
            self._beta = next(b for b in _lattice_points(self.spec) if self.proj(b)[3] != 0)
        return self._beta

    def gamma2(self):
        """A Gamma point with gamma_2 != 0 = gamma_4."""
        if self._gamma is None:
            kern = projection_kernel(self.spec.gamma, 4).rows
            self._gamma = next(k for k in kern if self.proj(k)[1] != 0)
        return self._gamma

    def scaled(self, idx, c):
        c = scalar(c)
        if c == 1:
            return idx
        return self.push(Scale(c, idx))

    def combine(self, pairs):
        pairs = [(s, scalar(c)) for s, c in pairs if c]
        if len(pairs) == 1 and pairs[0][1] == 1:
            return pairs[0][0]
        return self.push(LinearCombine(tuple(pairs)))

    def get(self, alpha, i):
        """Index of an intermediate equal to x^{alpha,i}."""
        key = (alpha, i)
        if key in self.memo:
            return self.memo[key]
        idx = self._get(alpha, i)
        self.memo[key] = idx
        return idx

    def _get(self, alpha, i):
        spec = self.spec
        A = self.proj(alpha)
        if alpha == spec.zero and i == ZERO_I:
            return 0
        if spec.m[3]:
            if A[3] == 0:
                j = _add(i, E[3])
                idx = self.ad(_mono(alpha, j), source=0, side="right")
                return self.scaled(idx, Fraction(1, j[3]))
            idx = self.ad(_mono(alpha, i), source=0, side="right")
            if i[3] == 0:
                return self.scaled(idx, div(1, A[3]))
            low = self.get(alpha, _sub(i, E[3]))
            return self.combine([(idx, div(1, A[3])), (low, div(-i[3], A[3]))])
        if A[3] != 0:
            idx = self.ad(_mono(alpha, i), source=0, side="right")
            return self.scaled(idx, div(1, A[3]))
        # alpha_4 = 0, J_4 = {0}
        if spec.m[1]:
            if A[1] == 0:
                w = self.beta_family(alpha, _add(i, E[1]))  # -(i2+1) x^{alpha,i}
                return self.scaled(w, Fraction(-1, i[1] + 1))
            w = self.beta_family(alpha, i)  # -(a2 x^{alpha,i} + i2 x^{alpha,i-e2})
            if i[1] == 0:
                return self.scaled(w, div(-1, A[1]))
            low = self.get(alpha, _sub(i, E[1]))
            return self.combine([(w, div(-1, A[1])), (low, div(-i[1], A[1]))])
        if A[1] != 0:
            w = self.beta_family(alpha, i)
            return self.scaled(w, div(-1, A[1]))
        # alpha_2 = alpha_4 = 0, J_2 = J_4 = {0}
        g2 = self.proj(self.gamma2())[1]
        if spec.m[0]:
            if A[0] == 1:
                w = self.gamma_family(alpha, _add(i, E[0]))  # -g2 (i1+1) x^{alpha,i}
                return self.scaled(w, div(-1, g2 * (i[0] + 1)))
            w = self.gamma_family(alpha, i)  # -g2 ((a1-1) x + i1 x^{-e1})
            if i[0] == 0:
                return self.scaled(w, div(-1, g2 * (A[0] - 1)))
            low = self.get(alpha, _sub(i, E[0]))
            return self.combine([(w, div(-1, g2 * (A[0] - 1))), (low, div(-i[0], A[0] - 1))])
        if A[0] == 1:
            raise NotInDerived(f"monomial {alpha, i} is not in the derived algebra")
        w = self.gamma_family(alpha, i)
        return self.scaled(w, div(-1, g2 * (A[0] - 1)))

    def family_step(self, fam, points, check, degree=1, extract=1):
        srcs = []
        for k in tuple(points) + (check,):
            (a, i), = fam.right(k).terms
            srcs.append(self.get(a, i))
        return self.push(CoefficientOfK(fam, tuple(points), tuple(srcs[:-1]), check, srcs[-1], degree, extract))

    def beta_family(self, alpha, i):
        """Coefficient of k in [x^{beta-(k+1)sigma}, x^{-beta+k sigma+alpha, i}]."""
        spec = self.spec
        beta = self.beta4()
        s = spec.sigma_coords
        fam = Family(_sub(beta, s), _neg(s), ZERO_I, _add(_neg(beta), alpha), s, i)
        return self.family_step(fam, (0, 1), 2)

    def gamma_family(self, alpha, i):
        """Coefficient of k in [x^{k gamma}, x^{-k gamma + alpha - sigma, i}]."""
        spec = self.spec
        gamma = self.gamma2()
        fam = Family(spec.zero, gamma, ZERO_I, _sub(alpha, spec.sigma_coords), _neg(gamma), i)
        return self.family_step(fam, (1, 2), 3)

    def get_g(self, gamma, i):
        """Index of an intermediate equal to g(gamma, i)."""
        key = (gamma, i)
        if key in self.gmemo:
            return self.gmemo[key]
        spec = self.spec
        alpha = self.beta4()
        A = self.proj(alpha)
        src = self.get(_add(alpha, gamma), i)
        idx = self.ad(_mono(_neg(alpha)), source=src)
        gs = self.get(_add(gamma, spec.sigma_coords), i)
        out = self.combine([(idx, div(1, A[3])), (gs, div(-A[1], A[3]))])
        self.gmemo[key] = out
        return out


def saturate_from_one(spec, target, budget=100000):
    """Certificate expressing ``target`` from 1 with ideal-preserving moves."""
    dec = derived_decomposition(spec, target)
    if dec is None:
        raise NotInDerived("target is not in the derived algebra")
    free, combos = dec
    s = _Saturator(spec, budget)
    if target == one(spec):
        s.trace.target = target
        return s.trace
    pairs = []
    for (a, i), c in sorted(free.terms.items()):
        pairs.append((s.get(a, i), c))
    for (g, i), c in sorted(combos.items()):
        pairs.append((s.get_g(g, i), c))
    if len(pairs) != 1 or pairs[0][1] != 1 or pairs[0][0] != s.cur:
        s.push(LinearCombine(tuple((k, scalar(c)) for k, c in pairs)))
    tr = s.trace
    tr.target = target
    if tr.final() != target:
        raise ReplayError("saturation planner produced the wrong element")
    return tr


# ---------------------------------------------------------------------------
# JSON


def _step_json(step):
    from .notation import format_element

    if isinstance(step, AdBy):
        d = {"kind": "AdBy", "element": format_element(step.element), "source": step.source, "side": step.side}
        if step.shift:
            d["shift"] = format_scalar(step.shift)
        return d
    if isinstance(step, LinearCombine):
        return {"kind": "LinearCombine", "terms": [[s, format_scalar(c)] for s, c in step.terms]}
    if isinstance(step, Scale):
        return {"kind": "Scale", "c": format_scalar(step.c), "source": step.source}
    if isinstance(step, CoefficientOfK):
        f = step.family
        return {
            "kind": "CoefficientOfK",
            "family": {"left": [list(f.l0), list(f.l1), list(f.li)], "right": [list(f.r0), list(f.r1), list(f.ri)]},
            "points": list(step.points),
            "sources": list(step.sources),
            "check": step.check,
            "check_source": step.check_source,
            "degree": step.degree,
            "extract": step.extract,
        }
    raise TypeError(step)


def trace_to_json(trace, values=True):
    from .notation import format_element

    d = {
        "schema": SCHEMA,
        "spec": trace.spec.to_json(),
        "start": format_element(trace.start),
        "steps": [_step_json(s) for s in trace.steps],
    }
    if trace.target is not None:
        d["target"] = format_element(trace.target)
    else:
        d["result"] = format_scalar(trace.result)
    if values:
        d["values"] = [format_element(v) for v in trace.values]
    if trace.route:
        d["route"] = trace.route
    return d


def trace_from_json(d, spec=None):
    from .lattice import spec_from_dict
    from .notation import parse_element

    if d.get("schema") != SCHEMA:
        raise ValueError(f"unsupported trace schema {d.get('schema')!r}")
    if spec is None:
        spec = spec_from_dict(d["spec"])
    names = spec.indeterminates

    def sc(text):
        return parse_scalar(text, names)

    def el(text):
        return parse_element(spec, text)

    steps = []
    for s in d["steps"]:
        k = s["kind"]
        if k == "AdBy":
            steps.append(AdBy(el(s["element"]), int(s["source"]), s.get("side", "left"), sc(s.get("shift", "0"))))
        elif k == "LinearCombine":
            steps.append(LinearCombine(tuple((int(a), sc(c)) for a, c in s["terms"])))
        elif k == "Scale":
            steps.append(Scale(sc(s["c"]), int(s["source"])))
        elif k == "CoefficientOfK":
            L, R = s["family"]["left"], s["family"]["right"]
            fam = Family(*(tuple(x) for x in L), *(tuple(x) for x in R))
            steps.append(
                CoefficientOfK(fam, tuple(s["points"]), tuple(s["sources"]), s["check"], s["check_source"], s["degree"], s["extract"])
            )
        else:
            raise ValueError(f"unknown step kind {k!r}")
    tr = ReductionTrace(spec, el(d["start"]), steps)
    if "target" in d:
        tr.target = el(d["target"])
    else:
        tr.result = sc(d["result"])
    tr.values = [el(v) for v in d.get("values", [])]
    tr.route = d.get("route", "")
    return tr


def dumps(trace):
    return json.dumps(trace_to_json(trace), sort_keys=True)


def loads(text, spec=None):
    return trace_from_json(json.loads(text), spec)
