"""Exhaustive chart search for lines, vectorized with numpy.

Field elements of F_Q are handled by their discrete logarithm to a fixed
primitive element, with Q - 1 standing for zero; addition goes through a Zech
logarithm table.  For each chart the two coordinate planes {v3} and {v4} are
scanned for zeros of f, and candidate pairs are then tested against the two
mixed coefficients of f(s v3 + t v4).
"""
from __future__ import annotations

import numpy as np

from ..errors import BudgetExceeded, IncompleteEnumeration, SingularSurface
from ..exactfield.fields import Field, embed_raw
from .enumerate import CHARTS, TOTAL_LINES, chart_vectors, level_field, sort_records
from .lines import LineSubspace, make_record
from .surface import CubicSurface, is_smooth

BLOCK = 1 << 20  # array elements per vectorized block


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class LogTables:
    """Discrete log / Zech tables for a finite field."""

    def __init__(self, L: Field):
        self.L = L
        Q = self.Q = L.order
        n = self.n = Q - 1
        self.Z = n
        primes = _prime_factors(n)
        g = None
        for a in L.elements():
            if L.is_zero(a):
                continue
            if all(L.pow(a, n // r) != L.one for r in primes):
                g = a
                break
        exp = [L.one]
        for _ in range(n - 1):
            exp.append(L.mul(exp[-1], g))
        self.exp = exp
        self.log = {v: k for k, v in enumerate(exp)}
        zech = np.empty(n, dtype=np.int64)
        for k, v in enumerate(exp):
            s = L.add(v, L.one)
            zech[k] = self.Z if L.is_zero(s) else self.log[s]
        self.zech = zech

    def to_log(self, raw):
        return self.Z if self.L.is_zero(raw) else self.log[raw]

    def from_log(self, k):
        return self.L.zero if k == self.Z else self.exp[int(k)]

    def mul(self, A, B):
        Z, n = self.Z, self.n
        return np.where((A == Z) | (B == Z), Z, (A + B) % n)

    def add(self, A, B):
        Z, n = self.Z, self.n
        A, B = np.broadcast_arrays(A, B)
        z = self.zech[(B - A) % n]
        R = np.where(z == Z, Z, (A + z) % n)
        R = np.where(A == Z, B, R)
        return np.where(B == Z, A, R)

    def power(self, A, u):
        if u == 0:
            return np.zeros_like(A)
        return np.where(A == self.Z, self.Z, (A * u) % self.n)

    def all_elements(self):
        return np.arange(self.Q, dtype=np.int64)  # logs 0..Q-2, then zero


def _plane_poly(f_coeffs, keep_zero, a, b):
    """Terms of f on a plane e_pivot + x e_a + y e_b: {(u, w): raw}, dropping monomials with e[keep_zero] > 0."""
    out = {}
    for e, c in f_coeffs:
        if e[keep_zero]:
            continue
        out[(e[a], e[b])] = c
    return out


def _partial_on_plane(F, f_coeffs, m, keep_zero, a, b):
    """d f / d x_m restricted to the plane, as {(u, w): raw}."""
    out = {}
    for e, c in f_coeffs:
        if not e[m]:
            continue
        e2 = list(e)
        e2[m] -= 1
        if e2[keep_zero]:
            continue
        key = (e2[a], e2[b])
        w = F.mul(c, F.from_int(e[m]))
        out[key] = F.add(out[key], w) if key in out else w
    return {k: v for k, v in out.items() if not F.is_zero(v)}


def _eval_points(T: LogTables, poly, X, Y):
    acc = np.full(np.broadcast(X, Y).shape, T.Z, dtype=np.int64)
    for (u, w), c in poly.items():
        term = T.mul(T.mul(np.int64(T.to_log(c)), T.power(X, u)), T.power(Y, w))
        acc = T.add(acc, term)
    return acc


def _plane_zeros(T: LogTables, poly):
    """All (x, y), as log arrays, with poly(x, y) = 0."""
    allv = T.all_elements()
    # group by power of y: h_w(x)
    hs = {}
    for (u, w), c in poly.items():
        hs.setdefault(w, {})[(u, 0)] = c
    H = {w: _eval_points(T, p, allv, np.int64(0)) for w, p in hs.items()}
    xs, ys = [], []
    rows = max(1, BLOCK // T.Q)
    for start in range(0, T.Q, rows):
        Xb = allv[start:start + rows]
        acc = np.full((len(Xb), T.Q), T.Z, dtype=np.int64)
        for w, h in H.items():
            term = T.mul(h[start:start + rows, None], T.power(allv[None, :], w))
            acc = T.add(acc, term)
        ii, jj = np.nonzero(acc == T.Z)
        xs.append(Xb[ii])
        ys.append(allv[jj])
    return np.concatenate(xs), np.concatenate(ys)


def _chart_solutions(T: LogTables, L, coeffs, chart):
    """Chart points (x, x', y', y') over L, as log arrays, and the work spent."""
    (i, j), (a, b) = chart
    p3 = _plane_poly(coeffs, j, a, b)
    p4 = _plane_poly(coeffs, i, a, b)
    X3, Y3 = _plane_zeros(T, p3)
    X4, Y4 = _plane_zeros(T, p4)
    work = 2 * T.Q * T.Q + len(X3) * len(X4)
    # gradients at the points: c1 = d_j f(v3) + x' d_a f(v3) + y' d_b f(v3),
    # c2 = d_i f(v4) + x d_a f(v4) + y d_b f(v4)
    G = [_eval_points(T, _partial_on_plane(L, coeffs, m, j, a, b), X3, Y3) for m in (j, a, b)]
    H = [_eval_points(T, _partial_on_plane(L, coeffs, m, i, a, b), X4, Y4) for m in (i, a, b)]
    sols = []
    if len(X3) == 0 or len(X4) == 0:
        return sols, work
    rows = max(1, BLOCK // len(X4))
    for s in range(0, len(X3), rows):
        sl = slice(s, s + rows)
        c1 = T.add(
            T.add(G[0][sl, None], T.mul(X4[None, :], G[1][sl, None])),
            T.mul(Y4[None, :], G[2][sl, None]),
        )
        c2 = T.add(
            T.add(H[0][None, :], T.mul(X3[sl, None], H[1][None, :])),
            T.mul(Y3[sl, None], H[2][None, :]),
        )
        ii, jj = np.nonzero((c1 == T.Z) & (c2 == T.Z))
        for u, v in zip(ii + s, jj):
            sols.append((X3[u], X4[v], Y3[u], Y4[v]))
    return sols, work


def level_cost(Q: int) -> int:
    """Lower bound on the work for one chart at field size Q (two plane scans)."""
    return 2 * Q * Q


def enumerate_lines_brute(f: CubicSurface, a_max: int = 27, budget: int = 10 ** 9, check_smooth=True):
    F = f.field
    if check_smooth and not is_smooth(f):
        raise SingularSurface("the surface is singular")
    records = {}
    total = 0
    spent = 0
    for m in range(1, a_max + 1):
        if total == TOTAL_LINES:
            break
        L = level_field(F, m)
        if spent + level_cost(L.order) > budget:
            raise BudgetExceeded(
                f"level {m} needs at least {level_cost(L.order)} more evaluations (budget {budget})",
                sort_records(records.values()),
                m - 1,
            )
        T = LogTables(L)
        coeffs = [(e, embed_raw(F, L, c)) for e, c in f.coeffs]
        for chart in CHARTS:
            if total == TOTAL_LINES:
                break
            if spent + level_cost(L.order) > budget:
                raise BudgetExceeded(
                    f"budget {budget} exhausted at level {m}", sort_records(records.values()), m - 1
                )
            sols, work = _chart_solutions(T, L, coeffs, chart)
            spent += work
            for x, xp, y, yp in sols:
                v3, v4 = chart_vectors(
                    chart, T.from_log(x), T.from_log(xp), T.from_log(y), T.from_log(yp), L.zero, L.one
                )
                rec = make_record(f, LineSubspace.from_raw(L, v3, v4), F)
                if rec.def_degree != m:
                    continue
                key = (m, rec.orbit_key)
                if key not in records:
                    records[key] = rec
                    total += m
    out = sort_records(records.values())
    if total != TOTAL_LINES:
        raise IncompleteEnumeration(f"found weighted count {total} with a_max = {a_max}", out, a_max)
    return out
