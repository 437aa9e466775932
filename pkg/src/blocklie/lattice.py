"""The group Gamma as a finitely generated subgroup of F^4.

Coordinates live in Q(z1, ..., zk).  A generator set is turned into an integer
matrix by scaling with a common nonzero polynomial denominator and expanding
every coordinate over the monomials in the indeterminates (which are
Q-independent).  All lattice questions are then questions about integer
row spaces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .exactfield import FieldElement, Polynomial, parse_scalar, scalar, _ONE

SIGMA = (1, 0, 1, 0)


class DeltaZero(ValueError):
    pass


class InvalidSpecError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid algebra data: " + ", ".join(self.violations))


class ConfigError(ValueError):
    pass


def unit(p, a=1):
    """The vector a_[p]: a in slot p (1-based), zero elsewhere."""
    v = [0, 0, 0, 0]
    v[p - 1] = scalar(a)
    return tuple(v)


def vec_add(u, v):
    return tuple(scalar(x + y) for x, y in zip(u, v))


def vec_scale(c, u):
    return tuple(scalar(c * x) for x in u)


def combine(coeffs, vectors, dim=4):
    """Sum of c_j * v_j for integer (or field) coefficients."""
    out = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for p in range(dim):
                if v[p]:
                    out[p] = out[p] + c * v[p]
    return tuple(scalar(x) for x in out)


# ---------------------------------------------------------------------------
# integer matrices


def echelon(rows, reduce_above=False, track=False):
    """Integer row echelon form by gcd elimination.

    Returns ``(echelon_rows, pivots, transform)`` where ``transform[k]`` lists
    integer coefficients expressing echelon row k in the input rows (only when
    ``track``).  Zero rows are dropped.  Pivots are made positive.  With
    ``reduce_above`` entries above pivots are reduced into ``[0, pivot)``
    giving the Hermite normal form.
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    width = len(rows[0]) if rows else 0
    T = [[int(i == j) for j in range(n)] for i in range(n)] if track else None
    out, outT, pivots = [], [], []
    live = list(range(n))
    for col in range(width):
        while True:
            nz = [r for r in live if rows[r][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda r: (abs(rows[r][col]), r))
            if len(nz) == 1:
                break
            for r in nz:
                if r == piv:
                    continue
                q = rows[r][col] // rows[piv][col]
                rows[r] = [x - q * y for x, y in zip(rows[r], rows[piv])]
                if track:
                    T[r] = [x - q * y for x, y in zip(T[r], T[piv])]
        nz = [r for r in live if rows[r][col] != 0]
        if not nz:
            continue
        piv = nz[0]
        if rows[piv][col] < 0:
            rows[piv] = [-x for x in rows[piv]]
            if track:
                T[piv] = [-x for x in T[piv]]
        live.remove(piv)
        out.append(rows[piv])
        if track:
            outT.append(T[piv])
        pivots.append(col)
    if reduce_above:
        for k in range(len(out)):
            col = pivots[k]
            for j in range(k):
                q = out[j][col] // out[k][col]
                if q:
                    out[j] = [x - q * y for x, y in zip(out[j], out[k])]
                    if track:
                        outT[j] = [x - q * y for x, y in zip(outT[j], outT[k])]
    return out, pivots, (outT if track else None)


def integer_kernel(rows):
    """HNF basis of {c : sum_k c_k rows[k] = 0} (left kernel)."""
    n = len(rows)
    if n == 0:
        return []
    width = len(rows[0])
    aug = [list(r) + [int(i == k) for i in range(n)] for k, r in enumerate(rows)]
    red, pivots, _ = echelon(aug)
    kern = [r[width:] for r, p in zip(red, pivots) if p >= width]
    kern, _, _ = echelon(kern, reduce_above=True) if kern else ([], [], None)
    return kern


def smith_form(M):
    """Smith normal form: returns (U, D, V) with U*M*V = D, U, V unimodular."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(r) for r in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [x - q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for r in A:
            r[dst] -= q * r[src]
        for r in V:
            r[dst] -= q * r[src]

    for t in range(min(m, n)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        while True:
            _, i, j = min((abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j])
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // A[t][t]
                if q:
                    add_row(i, t, q)
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                if q:
                    add_col(j, t, q)
                if A[t][j]:
                    done = False
            if not done:
                continue
            # divisibility condition
            bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]]
            if bad:
                i, _ = bad[0]
                A[t] = [x + y for x, y in zip(A[t], A[i])]
                U[t] = [x + y for x, y in zip(U[t], U[i])]
                continue
            break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


# ---------------------------------------------------------------------------
# monomial expansion


def _as_num_den(x):
    if isinstance(x, FieldElement):
        return x.num, x.den
    return Polynomial.constant(x), _ONE


class _Expansion:
    """Q-linear embedding of F^4 vectors (sharing a denominator) into Q^N."""

    def __init__(self, vectors):
        dens = []
        for v in vectors:
            for x in v:
                _, d = _as_num_den(x)
                if not d.is_constant() and d not in dens:
                    dens.append(d)
        D = _ONE
        for d in dens:
            D = D * d
        self.D = D
        monos = [set() for _ in range(4)]
        for v in vectors:
            for p, x in enumerate(v):
                poly = self._scaled(x)
                if poly is None:
                    raise AssertionError("generator scaling failed")
                monos[p].update(poly.terms)
        names = sorted({n for s in monos for m in s for n, _ in m})
        from .exactfield import _mono_key
        self.columns = [(p, m) for p in range(4) for m in sorted(monos[p], key=lambda m: _mono_key(m, names))]
        self.index = {c: k for k, c in enumerate(self.columns)}
        den = 1
        for v in vectors:
            for r in self.rational_row(v):
                den = lcm(den, Fraction(r).denominator)
        self.scale = den

    def _scaled(self, x):
        num, den = _as_num_den(x)
        if self.D is _ONE:
            if den is not _ONE:
                return None
            return num
        prod = num * self.D
        if den is _ONE:
            return prod
        return prod.exact_div(den)

    def rational_row(self, v):
        """Row over Q, or None when v leaves the span of the columns."""
        row = [Fraction(0)] * len(self.columns)
        for p, x in enumerate(v):
            if not x:
                continue
            poly = self._scaled(x)
            if poly is None:
                return None
            for m, c in poly.terms.items():
                k = self.index.get((p, m))
                if k is None:
                    return None
                row[k] = c
        return row

    def integer_row(self, v):
        row = self.rational_row(v)
        if row is None:
            return None
        out = []
        for r in row:
            r = r * self.scale
            if r.denominator != 1:
                return None
            out.append(int(r))
        return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegerLattice:
    dim: int
    rows: tuple

    def __len__(self):
        return len(self.rows)


class GammaSpec:
    """A subgroup Gamma of F^4 with a canonical integer basis.

    ``basis`` is a list of 4-tuples of scalars; ``sigma_coords`` and
    ``delta_coords`` are integer coordinates of (1,0,1,0) and (0,0,delta3,0).
    """

    def __init__(self, generators, delta3=None, indeterminates=()):
        self.generators = [tuple(scalar(x) for x in g) for g in generators]
        self.indeterminates = tuple(indeterminates)
        basis, expansion, exp, rows, pivots = _canonical(self.generators)
        self.basis = basis
        self.expansion = expansion
        self._exp = exp
        self._rows = rows
        self._pivots = pivots
        self.rank = len(basis)
        self.delta3 = None if delta3 is None else scalar(delta3)
        self.sigma_coords = self.coordinates_of(SIGMA)
        self.delta_coords = None if delta3 is None else self.coordinates_of((0, 0, self.delta3, 0))

    @property
    def sigma(self):
        return SIGMA

    @property
    def delta(self):
        return (0, 0, self.delta3, 0)

    def coordinates_of(self, target):
        return _coordinates(self, target)

    def element(self, coords):
        """Sum of coords_j * basis_j as a 4-tuple."""
        return combine(coords, self.basis)

    def projection_nonzero(self, p):
        return any(b[p - 1] != 0 for b in self.basis)

    def __repr__(self):
        return f"GammaSpec(basis={self.basis!r}, delta3={self.delta3!r})"


def _canonical(generators):
    if not generators:
        return [], {}, None, [], []
    exp = _Expansion(generators)
    rows = [exp.integer_row(g) for g in generators]
    red, pivots, T = echelon(rows, track=True)
    basis = [combine(t, generators) for t in T]
    expansion = {}
    for g, row in zip(generators, rows):
        expansion[g] = _solve_echelon(red, pivots, row)
    return basis, expansion, exp, red, pivots


def _solve_echelon(red, pivots, row):
    rem = list(row)
    coeffs = []
    for r, col in zip(red, pivots):
        q, m = divmod(rem[col], r[col])
        if m:
            return None
        coeffs.append(q)
        if q:
            rem = [x - q * y for x, y in zip(rem, r)]
    if any(rem):
        return None
    return tuple(coeffs)


def canonical_basis(generators):
    """Return ``(basis, expansion)`` for the subgroup generated by ``generators``.

    ``expansion`` maps each generator to its integer coordinates in the basis.
    """
    gens = [tuple(scalar(x) for x in g) for g in generators]
    basis, expansion, *_ = _canonical(gens)
    return basis, expansion


def _coordinates(gamma, target):
    target = tuple(scalar(x) for x in target)
    if gamma.rank == 0:
        return () if all(x == 0 for x in target) else None
    row = gamma._exp.integer_row(target)
    if row is None:
        return None
    c = _solve_echelon(gamma._rows, gamma._pivots, row)
    if c is None:
        return None
    if gamma.element(c) != target:  # exact substitution check
        raise AssertionError("coordinate solve failed verification")
    return c


def coordinates_of(gamma, target):
    """Integer coordinates of target in gamma's basis, or None if not a member."""
    return gamma.coordinates_of(target)


def projection_kernel(gamma, p):
    """Sublattice of Z^rank whose points have vanishing p-th coordinate."""
    return joint_kernel(gamma, (p,))


def joint_kernel(gamma, ps):
    """Points of Z^rank whose coordinates p in ``ps`` all vanish."""
    if gamma.rank == 0:
        return IntegerLattice(0, ())
    cols = [k for k, (q, _) in enumerate(gamma._exp.columns) if q + 1 in ps]
    if not cols:
        return IntegerLattice(gamma.rank, tuple(tuple(int(i == j) for j in range(gamma.rank)) for i in range(gamma.rank)))
    full = [gamma._exp.integer_row(b) for b in gamma.basis]
    kern = integer_kernel([[r[k] for k in cols] for r in full])
    return IntegerLattice(gamma.rank, tuple(tuple(r) for r in kern))


def subgroup_equal(g1, g2):
    return all(g2.coordinates_of(b) is not None for b in g1.basis) and all(
        g1.coordinates_of(b) is not None for b in g2.basis
    )


# ---------------------------------------------------------------------------


class AlgebraSpec:
    """Validated data (Gamma, J, delta) for one algebra.

    ``m`` is the J pattern as a 4-tuple of 0/1 (1 means J_p = N).
    """

    def __init__(self, gamma, m):
        self.gamma = gamma
        self.m = tuple(int(bool(x)) for x in m)
        self._proj = {}
        self.rank = gamma.rank
        self.delta3 = gamma.delta3
        self.sigma_coords = gamma.sigma_coords
        self.delta_coords = gamma.delta_coords
        self.zero = (0,) * self.rank
        self.pi_nonzero = tuple(gamma.projection_nonzero(p) for p in range(1, 5))
        self.indeterminates = gamma.indeterminates

    @property
    def j(self):
        return self.m

    def proj(self, alpha):
        """The field 4-tuple of a Gamma-coordinate vector (cached)."""
        v = self._proj.get(alpha)
        if v is None:
            v = self.gamma.element(alpha)
            if len(self._proj) < 200000:
                self._proj[alpha] = v
        return v

    def in_j(self, i):
        return all(x >= 0 and (x == 0 or mm) for x, mm in zip(i, self.m))

    def coords(self, vec):
        return self.gamma.coordinates_of(vec)

    def is_restricted(self):
        """True when J1 = J2 = J4 = {0}, the only case where the derived algebra is proper."""
        return not (self.m[0] or self.m[1] or self.m[3])

    def to_json(self):
        from .exactfield import format_scalar
        return {
            "indeterminates": list(self.indeterminates),
            "delta3": format_scalar(self.delta3),
            "generators": [[format_scalar(x) for x in g] for g in self.gamma.basis],
            "J": list(self.m),
        }

    def __repr__(self):
        return f"AlgebraSpec(basis={self.gamma.basis!r}, delta3={self.delta3!r}, J={self.m})"


def spec_violations(generators, delta3, m, indeterminates=()):
    """Names of violated validity conditions, in check order (empty if valid)."""
    delta3 = scalar(delta3)
    if delta3 == 0:
        raise DeltaZero("delta3 must be nonzero")
    gamma = GammaSpec(generators, None, indeterminates)
    return _violations(gamma, delta3, m)


def _violations(gamma, delta3, m):
    out = []
    if gamma.coordinates_of(SIGMA) is None:
        out.append("sigma_not_in_gamma")
    if gamma.coordinates_of((0, 0, delta3, 0)) is None:
        out.append("delta_not_in_gamma")
    if gamma.projection_nonzero(2):
        kern = projection_kernel(gamma, 4)
        if not any(gamma.element(k)[1] != 0 for k in kern.rows):
            out.append("ker_pi4_inside_ker_pi2")
    for q in (2, 4):
        if not gamma.projection_nonzero(q) and not m[q - 1]:
            out.append(f"J{q}_must_be_N")
    return out


def validate_spec(generators, delta3, m, indeterminates=()):
    """Assemble an AlgebraSpec, raising InvalidSpecError listing every violation."""
    delta3 = scalar(delta3)
    if delta3 == 0:
        raise DeltaZero("delta3 must be nonzero")
    m = tuple(int(bool(x)) for x in m)
    if len(m) != 4:
        raise ConfigError("J pattern needs four entries")
    gamma = GammaSpec(generators, delta3, indeterminates)
    bad = _violations(gamma, delta3, m)
    if bad:
        raise InvalidSpecError(bad)
    return AlgebraSpec(gamma, m)


# ---------------------------------------------------------------------------
# config files

RESERVED = {"x", "t1", "t2", "t3", "t4"}


def parse_config(cfg):
    """(generators, delta3, J, indeterminates) from config JSON, without validation."""
    try:
        names = list(cfg.get("indeterminates", []))
        for n in names:
            if n in RESERVED:
                raise ConfigError(f"indeterminate name {n!r} is reserved")
        delta3 = parse_scalar(str(cfg["delta3"]), names)
        gens = []
        for g in cfg["generators"]:
            if len(g) != 4:
                raise ConfigError("each generator needs four coordinates")
            gens.append(tuple(parse_scalar(str(x), names) for x in g))
        m = cfg["J"]
        if len(m) != 4 or any(x not in (0, 1) for x in m):
            raise ConfigError("J must be four entries, each 0 or 1")
    except KeyError as e:
        raise ConfigError(f"missing config field {e.args[0]!r}") from None
    except (ValueError, ZeroDivisionError, TypeError) as e:
        if isinstance(e, (ConfigError, InvalidSpecError)):
            raise
        raise ConfigError(str(e)) from None
    return gens, delta3, tuple(m), names


def spec_from_dict(cfg):
    gens, delta3, m, names = parse_config(cfg)
    return validate_spec(gens, delta3, m, names)


def load_spec(path):
    with open(path) as fh:
        return spec_from_dict(json.load(fh))
