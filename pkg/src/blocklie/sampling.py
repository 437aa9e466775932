"""Seeded random elements for property checks and fuzzing."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Element, _acc, constrained, g_element
from .exactfield import indeterminate, scalar
from .lattice import joint_kernel

RATIONAL_POOL = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))


class Sampler:
    """Random monomials and elements over one spec.

    Coordinates are uniform in [-coord, coord], exponents in [0, expo] where
    J allows them, support sizes in 1..support, coefficients from
    {+-1, +-2, +-1/2} plus the configured indeterminates.
    """

    def __init__(self, spec, seed=0, coord=3, expo=3, support=4, rng=None):
        self.spec = spec
        self.rng = rng if rng is not None else random.Random(seed)
        self.coord = coord
        self.expo = expo
        self.support = support
        self.pool = list(RATIONAL_POOL) + [indeterminate(n) for n in spec.indeterminates]
        self._cons = None

    def coefficient(self):
        return self.rng.choice(self.pool)

    def alpha(self):
        r = self.rng
        return tuple(r.randint(-self.coord, self.coord) for _ in range(self.spec.rank))

    def exponent(self):
        r = self.rng
        return tuple(r.randint(0, self.expo) if self.spec.m[p] else 0 for p in range(4))

    def monomial(self):
        return self.alpha(), self.exponent()

    def element(self, size=None):
        n = size if size is not None else self.rng.randint(1, self.support)
        t = {}
        for _ in range(n):
            _acc(t, self.monomial(), self.coefficient())
        return Element._raw({k: scalar(c) for k, c in t.items()})

    def nonzero_element(self):
        while True:
            u = self.element()
            if u:
                return u

    # -- the derived algebra ------------------------------------------------

    def constrained_alpha(self):
        """Random alpha with alpha_1 = 1, alpha_2 = alpha_4 = 0."""
        if self._cons is None:
            self._cons = joint_kernel(self.spec.gamma, (1, 2, 4)).rows
        a = list(self.spec.sigma_coords)
        for row in self._cons:
            k = self.rng.randint(-self.coord, self.coord)
            a = [x + k * y for x, y in zip(a, row)]
        return tuple(a)

    def spanning_element(self):
        """One element of the spanning set of the derived algebra."""
        spec = self.spec
        if not spec.is_restricted():
            return Element.monomial(*self.monomial())
        if self.rng.random() < 0.35:
            return g_element(spec, self.constrained_alpha(), self.exponent())
        while True:
            a, i = self.monomial()
            if not constrained(spec, a):
                return Element.monomial(a, i)

    def derived_element(self, size=None):
        """Random element of the derived algebra (a combination of spanning elements)."""
        n = size if size is not None else self.rng.randint(1, self.support)
        u = Element()
        for _ in range(n):
            u = u + self.spanning_element().scale(self.coefficient())
        return u

    def nonzero_derived_element(self):
        while True:
            u = self.derived_element()
            if u:
                return u
