"""Named algebra configurations used by tests, demos and the command line.

Each entry gives Gamma generators, delta_3 and the J pattern.  The four
examples from the literature are ``example1`` .. ``example4`` (with a free
integer m); the ``c*`` entries cover the combinations of vanishing
projections pi_2, pi_4 and the different J patterns.
"""

from __future__ import annotations

from .exactfield import indeterminate
from .lattice import validate_spec, unit

Z4 = [unit(1), unit(2), unit(3), unit(4)]


def example1(m=1):
    """Gamma = {(i,0,k,0)}, J = 0 x N x 0 x N, delta = (0,0,m,0)."""
    return validate_spec([(1, 0, 0, 0), (0, 0, 1, 0)], m, (0, 1, 0, 1))


def example2(m=1):
    """Gamma = Z^4, J = {0}, delta = (0,0,m,0)."""
    return validate_spec(Z4, m, (0, 0, 0, 0))


def example3(m=1):
    """Gamma = {(i,0,i+ak,0)}, J = 0 x N x 0 x N, delta = (0,0,am,0)."""
    a = indeterminate("a")
    return validate_spec([(1, 0, 1, 0), (0, 0, a, 0)], a * m, (0, 1, 0, 1), ["a"])


def example4(m=1):
    """Gamma = {(i+al, j, i+bj+ck, l)}, J = 0 x 0 x 0 x N, delta = (0,0,cm,0).

    The third coordinate of delta is taken as c*m so that delta lies in
    Gamma and x^delta = x3^m.
    """
    a, b, c = (indeterminate(n) for n in "abc")
    gens = [(1, 0, 1, 0), (0, 1, b, 0), (0, 0, c, 0), (a, 0, 0, 1)]
    return validate_spec(gens, c * m, (0, 0, 0, 1), ["a", "b", "c"])


def _c1():
    return validate_spec(Z4, 1, (0, 0, 0, 0))


def _c2():
    return validate_spec(Z4, 1, (1, 1, 1, 1))


def _c3():
    return validate_spec([(1, 0, 1, 0), (0, 0, 1, 0)], 1, (0, 1, 0, 1))


def _c4():
    return validate_spec([unit(1), unit(3), unit(4)], 1, (0, 1, 1, 0))


def _c5():
    return validate_spec([unit(1), unit(2), unit(3)], 1, (1, 0, 1, 1))


def _c8():
    return validate_spec(Z4, 2, (0, 0, 1, 0))


def _c9():
    from fractions import Fraction
    half = Fraction(1, 2)
    return validate_spec([unit(1), unit(2), unit(3, half), unit(4)], half, (1, 0, 0, 0))


CONFIGS = {
    "c1": _c1,          # Gamma = Z^4, J = {0}^4
    "c2": _c2,          # Gamma = Z^4, J = N^4
    "c3": _c3,          # pi_2 = pi_4 = 0
    "c4": _c4,          # pi_2 = 0, pi_4 != 0
    "c5": _c5,          # pi_2 != 0, pi_4 = 0
    "c6": example3,     # indeterminate a
    "c7": example4,     # indeterminates a, b, c
    "c8": _c8,          # J = {0} x {0} x N x {0}, delta_3 = 2
    "c9": _c9,          # half-integral third coordinates
    "example1": example1,
    "example2": example2,
    "example3": example3,
    "example4": example4,
}


def get(name):
    try:
        return CONFIGS[name]()
    except KeyError:
        raise KeyError(f"unknown configuration {name!r}; known: {', '.join(CONFIGS)}") from None
