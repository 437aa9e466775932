"""Reference formulas written straight from the definitions, shared by the tests."""

from blocklie.algebra import Element, bracket


def X(alpha, i=(0, 0, 0, 0), c=1):
    return Element.monomial(tuple(alpha), tuple(i), c)


def add(*vs):
    return tuple(sum(x) for x in zip(*vs))


def neg(v):
    return tuple(-x for x in v)


def jacobiator(spec, u, v, w):
    br = lambda p, q: bracket(spec, p, q)
    return br(br(u, v), w) + br(br(v, w), u) + br(br(w, u), v)


def lower(i, *ps):
    j = list(i)
    for p in ps:
        j[p - 1] -= 1
    return tuple(j)


def oracle_odot1(spec, a, i, b, j):
    """x^sigma d1(x^{a,i}) d2(x^{b,j}) expanded term by term."""
    A, B = spec.proj(a), spec.proj(b)
    s = add(a, b, spec.sigma_coords)
    out = Element()
    for ca, ia in ((A[0], i), (i[0], lower(i, 1))):
        for cb, jb in ((B[1], j), (j[1], lower(j, 2))):
            if ca and cb:
                out = out + X(s, add(ia, jb), ca * cb)
    return out


def oracle_odot2(spec, a, i, b, j):
    """(x^delta d3(u) + u) d4(v) for u, v monomials."""
    A, B = spec.proj(a), spec.proj(b)
    ab, abd = add(a, b), add(a, b, spec.delta_coords)
    out = Element()
    for cb, jb in ((B[3], j), (j[3], lower(j, 4))):
        if not cb:
            continue
        for ca, ia, base in ((A[2], i, abd), (i[2], lower(i, 3), abd), (1, i, ab)):
            if ca:
                out = out + X(base, add(ia, jb), ca * cb)
    return out


def oracle_ad1(spec, b, j):
    B = spec.proj(b)
    out = X(b, j, B[3]) if B[3] else Element()
    if j[3]:
        out = out + X(b, lower(j, 4), j[3])
    return out


def oracle_ad_minus_sigma(spec, b, j):
    B = spec.proj(b)
    out = X(b, j, -B[1]) if B[1] else Element()
    if j[1]:
        out = out + X(b, lower(j, 2), -j[1])
    return out
