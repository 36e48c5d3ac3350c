"""Enumeration of the lines on a smooth cubic surface over a finite field.

A line meeting the chart with pivot columns (i, j) and free columns (a, b) is
spanned by

    v3 = e_i + x e_a + y e_b,    v4 = e_j + x' e_a + y' e_b,

and lies on f = 0 exactly when the four coefficients of f(s v3 + t v4) vanish.
The eliminant strategy solves that system with a lex Groebner basis; the
brute-force strategy (module ``brute``) searches the chart exhaustively.
"""
from __future__ import annotations

import logging

from ..eklindex.groebner import DEGREVLEX, Quotient, fglm, groebner_dicts
from ..errors import IncompleteEnumeration, InternalInconsistency, SingularSurface
from ..exactfield import upoly
from ..exactfield.fields import Field, embed_raw, finite_field
from ..exactfield.poly import Poly
from .lines import LineRecord, LineSubspace, make_record
from .surface import CubicSurface, is_smooth

log = logging.getLogger(__name__)

CHART_VARS = ("x", "xp", "y", "yp")
# (pivot columns, free columns); the first chart is the one with S, T = e3, e4
CHARTS = (
    ((2, 3), (0, 1)),
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
    ((1, 2), (0, 3)),
    ((1, 3), (0, 2)),
)
TOTAL_LINES = 27


def chart_vectors(chart, x, xp, y, yp, zero, one):
    (i, j), (a, b) = chart
    v3 = [zero] * 4
    v4 = [zero] * 4
    v3[i], v3[a], v3[b] = one, x, y
    v4[j], v4[a], v4[b] = one, xp, yp
    return v3, v4


def restricted_system(f: CubicSurface, v3, v4, field: Field | None = None):
    """Coefficients of f(s v3 + t v4) (s^3, s^2 t, s t^2, t^3) for Poly-valued v3, v4."""
    F = field or f.field
    variables = v3[0].vars
    zero = Poly(F, variables, {})
    one = Poly.const(F, variables, 1)

    def binmul(a, b):
        out = [zero] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            for j, w in enumerate(b):
                out[i + j] = out[i + j] + u * w
        return out

    pows = []
    for m in range(4):
        lin = [v3[m], v4[m]]
        pw = [[one], lin]
        for _ in range(2):
            pw.append(binmul(pw[-1], lin))
        pows.append(pw)
    out = [zero] * 4
    for e, c in f.coeffs:
        c = c if F == f.field else embed_raw(f.field, F, c)
        prod = [Poly(F, variables, {(0,) * len(variables): c})]
        for m in range(4):
            if e[m]:
                prod = binmul(prod, pows[m][e[m]])
        for k in range(4):
            out[k] = out[k] + prod[k]
    return out


def chart_system(f: CubicSurface, chart, field: Field | None = None):
    """The four coefficients of f(s v3 + t v4) as Polys in (x, x', y, y')."""
    F = field or f.field
    x, xp, y, yp = Poly.gens(F, CHART_VARS)
    zero = Poly(F, CHART_VARS, {})
    one = Poly.const(F, CHART_VARS, 1)
    v3, v4 = chart_vectors(chart, x, xp, y, yp, zero, one)
    return restricted_system(f, v3, v4, F)


class ChartSolver:
    """Solutions of one chart system, level by level over F_{q^m}."""

    def __init__(self, f: CubicSurface, chart, seed=0):
        self.f, self.chart, self.seed = f, chart, seed
        F = self.F = f.field
        system = chart_system(f, chart)
        gb = groebner_dicts(F, [p.terms for p in system if p], DEGREVLEX)
        Q = Quotient(F, 4, gb, DEGREVLEX)
        if Q.monomials is None:
            raise InternalInconsistency("chart system is not zero-dimensional on a smooth surface")
        self.dim = Q.dim
        self.lex = fglm(F, 4, gb) if self.dim else []
        self.eliminant = None
        self.factors = []
        if self.dim:
            elim = next(g for lm, g in self.lex if lm[:3] == (0, 0, 0))
            dense = [F.zero] * (max(e[3] for e in elim) + 1)
            for e, c in elim.items():
                dense[e[3]] = c
            self.eliminant = dense
            _, facs = upoly.factor(F, dense, seed)
            self.factors = [g for g, _ in facs]
        # lex basis elements grouped by their largest variable (0 = x ... 3 = y')
        self.by_var = {k: [] for k in range(4)}
        for lm, g in self.lex:
            k = min(i for i in range(4) if any(e[i] for e in g))
            self.by_var[k].append(g)

    def factor_degrees(self):
        return sorted({len(g) - 1 for g in self.factors})

    def solutions(self, L: Field):
        """Chart solutions over L, with one y'-value per eliminant factor (enough up to Frobenius)."""
        F = self.F
        out = []
        for g in self.factors:
            if L.degree_over_prime % ((len(g) - 1) * F.degree_over_prime):
                continue
            gL = [embed_raw(F, L, c) for c in g]
            r = upoly.one_root(L, gL, self.seed)
            if r is None:
                raise InternalInconsistency("eliminant factor without a root in its splitting field")
            self._extend(L, {3: r}, 2, out)
        return out

    def _extend(self, L, partial, k, out):
        if k < 0:
            out.append(tuple(partial[i] for i in range(4)))
            return
        F = self.F
        gcd = None
        for g in self.by_var[k]:
            dense = {}
            for e, c in g.items():
                v = embed_raw(F, L, c)
                for i in range(k + 1, 4):
                    if e[i]:
                        v = L.mul(v, L.pow(partial[i], e[i]))
                dense[e[k]] = L.add(dense[e[k]], v) if e[k] in dense else v
            poly = upoly.trim(L, [dense.get(d, L.zero) for d in range(max(dense) + 1)])
            if not poly:
                continue
            gcd = poly if gcd is None else upoly.gcd(L, gcd, poly)
        if gcd is None:
            raise InternalInconsistency("a chart variable is unconstrained")
        for root in upoly.roots(L, gcd, self.seed):
            nxt = dict(partial)
            nxt[k] = root
            self._extend(L, nxt, k - 1, out)

    def line(self, L, sol) -> LineSubspace:
        x, xp, y, yp = sol
        v3, v4 = chart_vectors(self.chart, x, xp, y, yp, L.zero, L.one)
        return LineSubspace.from_raw(L, v3, v4)


def level_field(base: Field, m: int) -> Field:
    return finite_field(base.p, base.degree_over_prime * m)


def enumerate_lines_eliminant(f: CubicSurface, a_max: int = 27, seed: int = 0, check_smooth=True):
    F = f.field
    if check_smooth and not is_smooth(f):
        raise SingularSurface("the surface is singular")
    records: dict = {}
    total = 0
    for chart in CHARTS:
        if total == TOTAL_LINES:
            break
        solver = ChartSolver(f, chart, seed)
        log.debug("chart %s: %d geometric solutions, factor degrees %s", chart, solver.dim, solver.factor_degrees())
        found = 0
        seen_here = set()
        degs = solver.factor_degrees()
        for m in range(1, a_max + 1):
            if found == solver.dim or total == TOTAL_LINES:
                break
            if not any(m % d == 0 for d in degs):
                continue
            L = level_field(F, m)
            for sol in solver.solutions(L):
                rec = make_record(f, solver.line(L, sol), F)
                if rec.def_degree != m or rec.orbit_key in seen_here:
                    continue
                seen_here.add(rec.orbit_key)
                found += m
                key = (m, rec.orbit_key)
                if key not in records:
                    records[key] = rec
                    total += m
    out = sort_records(records.values())
    if total != TOTAL_LINES:
        raise IncompleteEnumeration(f"found weighted count {total}, expected 27", out, a_max)
    return out


def sort_records(records):
    def key(r: LineRecord):
        F = r.field
        return (r.def_degree, tuple(F.sort_key(x) for x in r.orbit_key))

    return sorted(records, key=key)


def enumerate_lines(f: CubicSurface, strategy: str = "eliminant", a_max: int = 27, seed: int = 0, budget: int = 10 ** 9):
    """One LineRecord per closed point of the Fano scheme of lines of f."""
    if not f.field.is_finite:
        raise ValueError("enumeration needs a finite base field; supply lines over Q explicitly")
    if strategy == "eliminant":
        return enumerate_lines_eliminant(f, a_max, seed)
    if strategy in ("brute", "brute-force"):
        from .brute import enumerate_lines_brute

        return enumerate_lines_brute(f, a_max, budget)
    raise ValueError(f"unknown strategy {strategy!r}")
