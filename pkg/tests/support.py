"""Shared helpers for the test suite (random instances and small oracles)."""
from __future__ import annotations

import random

from gwlines.cubiclines.lines import LineSubspace
from gwlines.cubiclines.surface import MONOMIALS, CubicSurface
from gwlines.exactfield import Field, FieldElem, Poly


def rand_elem(F: Field, rng: random.Random, nonzero=False, small=True) -> FieldElem:
    while True:
        x = F(rng.randint(-9, 9)) if small and not F.is_finite else F.elem(F.random(rng))
        if not nonzero or not x.is_zero():
            return x


def det(F, M):
    """Determinant by fraction-free-agnostic Gaussian elimination on FieldElems."""
    n = len(M)
    M = [list(r) for r in M]
    d = F(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if not M[r][c].is_zero()), None)
        if piv is None:
            return F(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d = d * M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return d


def inverse(F, M):
    n = len(M)
    A = [list(r) + [F(1 if i == j else 0) for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if not A[r][c].is_zero())
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and not A[r][c].is_zero():
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return [row[n:] for row in A]


def random_invertible(F, n, rng):
    while True:
        M = [[rand_elem(F, rng) for _ in range(n)] for _ in range(n)]
        if not det(F, M).is_zero():
            return M


def surface_through_line(F: Field, rng: random.Random):
    """A random cubic y1*A(y) + y2*B(y) in coordinates y = x P^{-1}, and the line y1 = y2 = 0.

    The rows of P are e1, e2, v3, v4, so x = sum y_i P_i and the line is span{v3, v4}.
    """
    P = random_invertible(F, 4, rng)
    Pinv = inverse(F, P)
    xs = Poly.gens(F, ("x1", "x2", "x3", "x4"))
    zero = Poly(F, xs[0].vars, {})
    # y_i as a linear form in x: y_i = sum_m x_m Pinv[m][i]
    ys = [sum((xs[m] * Pinv[m][i] for m in range(4)), zero) for i in range(4)]
    quads = [ys[a] * ys[b] for a in range(4) for b in range(a, 4)]
    A = sum((q * rand_elem(F, rng) for q in quads), zero)
    B = sum((q * rand_elem(F, rng) for q in quads), zero)
    g = ys[0] * A + ys[1] * B
    if not g:
        return surface_through_line(F, rng)
    surface = CubicSurface.from_mapping(F, {e: F.elem(c) for e, c in g.terms.items()})
    line = LineSubspace.from_rows(F, P[2], P[3])
    return surface, line, (P[0], P[1])


def random_quadratic(F, rng):
    return [rand_elem(F, rng) for _ in range(3)]


__all__ = [
    "MONOMIALS",
    "det",
    "inverse",
    "rand_elem",
    "random_invertible",
    "random_quadratic",
    "surface_through_line",
]
