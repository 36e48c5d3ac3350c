"""Buchberger's algorithm, normal forms and FGLM order conversion.

Polynomials are handled as dicts exponent-tuple -> raw coefficient over a
field object ``F``.  Bases are kept monic.
"""
from __future__ import annotations

from ..exactfield.poly import Poly

DEGREVLEX = "degrevlex"
LEX = "lex"


def order_key(order: str):
    if order == LEX:
        return lambda e: e
    if order == DEGREVLEX:
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise ValueError(f"unknown monomial order {order!r}")


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _disjoint(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _monic(F, p, lm):
    c = p[lm]
    if c == F.one:
        return p
    inv = F.inv(c)
    return {e: F.mul(v, inv) for e, v in p.items()}


def _sub_multiple(F, p, c, shift, g):
    """p - c * x^shift * g, in place."""
    for e, v in g.items():
        e2 = tuple(a + b for a, b in zip(e, shift))
        w = F.mul(c, v)
        if e2 in p:
            r = F.sub(p[e2], w)
            if F.is_zero(r):
                del p[e2]
            else:
                p[e2] = r
        else:
            p[e2] = F.neg(w)


def normal_form(F, f, basis, key):
    """Full reduction of f by a list of (lead monomial, monic poly) pairs."""
    p = dict(f)
    r = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for glm, g in basis:
            if _divides(glm, lm):
                shift = tuple(a - b for a, b in zip(lm, glm))
                _sub_multiple(F, p, c, shift, g)
                break
        else:
            r[lm] = c
            del p[lm]
    return r


class _Buchberger:
    def __init__(self, F, key):
        self.F, self.key = F, key
        self.polys = []  # monic dicts
        self.leads = []

    def add(self, p):
        lm = max(p, key=self.key)
        self.polys.append(_monic(self.F, p, lm))
        self.leads.append(lm)
        return len(self.polys) - 1

    def update(self, G, B, h):
        L = self.leads
        lh = L[h]
        C = [g for g in G]
        D = []
        while C:
            g1 = C.pop(0)
            l1 = _lcm(lh, L[g1])
            if _disjoint(lh, L[g1]):
                D.append(g1)
                continue
            if any(_divides(_lcm(lh, L[g2]), l1) for g2 in C + D):
                continue
            D.append(g1)
        E = [(h, g) for g in D if not _disjoint(lh, L[g])]
        B2 = []
        for g1, g2 in B:
            l12 = _lcm(L[g1], L[g2])
            if (
                _divides(lh, l12)
                and _lcm(L[g1], lh) != l12
                and _lcm(L[g2], lh) != l12
            ):
                continue
            B2.append((g1, g2))
        B2.extend(E)
        G2 = [g for g in G if not _divides(lh, L[g])] + [h]
        return G2, B2

    def spoly(self, i, j):
        F = self.F
        li, lj = self.leads[i], self.leads[j]
        l = _lcm(li, lj)
        s = {}
        si = tuple(a - b for a, b in zip(l, li))
        sj = tuple(a - b for a, b in zip(l, lj))
        for e, v in self.polys[i].items():
            s[tuple(a + b for a, b in zip(e, si))] = v
        _sub_multiple(F, s, F.one, sj, self.polys[j])
        return s

    def run(self, gens):
        G, B = [], []
        for f in gens:
            if f:
                G, B = self.update(G, B, self.add(f))
        key = self.key
        while B:
            B.sort(key=lambda pr: (key(_lcm(self.leads[pr[0]], self.leads[pr[1]])), pr))
            i, j = B.pop(0)
            s = self.spoly(i, j)
            h = normal_form(self.F, s, [(self.leads[g], self.polys[g]) for g in G], key)
            if h:
                G, B = self.update(G, B, self.add(h))
        return self.reduce(G)

    def reduce(self, G):
        F, key = self.F, self.key
        items = [(self.leads[g], self.polys[g]) for g in G]
        minimal = [
            (lm, p)
            for k, (lm, p) in enumerate(items)
            if not any(_divides(l2, lm) and (l2 != lm or k2 < k) for k2, (l2, _) in enumerate(items) if k2 != k)
        ]
        out = []
        for k, (lm, p) in enumerate(minimal):
            others = [x for k2, x in enumerate(minimal) if k2 != k]
            tail = {e: v for e, v in p.items() if e != lm}
            red = normal_form(F, tail, others, key)
            red[lm] = F.one
            out.append((lm, red))
        out.sort(key=lambda t: key(t[0]))
        return out


def groebner_dicts(F, gens, order=DEGREVLEX):
    """Reduced Groebner basis as a list of (lead monomial, monic dict), ascending."""
    return _Buchberger(F, order_key(order)).run([dict(g) for g in gens])


def groebner_basis(ideal, order=DEGREVLEX):
    """Reduced Groebner basis of a list of Polys (all in one ring)."""
    ideal = [p for p in ideal]
    if not ideal:
        return []
    F, variables = ideal[0].field, ideal[0].vars
    basis = groebner_dicts(F, [p.terms for p in ideal if p], order)
    return [Poly(F, variables, g) for _, g in basis]


def standard_monomials(leads, nvars):
    """Monomials outside the lead ideal, or None when there are infinitely many."""
    if any(not any(l) for l in leads):
        return []
    for i in range(nvars):
        if not any(l[i] > 0 and sum(l) == l[i] for l in leads):
            return None
    out = []
    seen = set()
    frontier = [(0,) * nvars]
    while frontier:
        nxt = []
        for m in frontier:
            if m in seen or any(_divides(l, m) for l in leads):
                continue
            seen.add(m)
            out.append(m)
            for i in range(nvars):
                e = list(m)
                e[i] += 1
                nxt.append(tuple(e))
        frontier = nxt
    return out


class Quotient:
    """k[x]/I for a zero-dimensional I given by a reduced Groebner basis."""

    def __init__(self, F, nvars, basis, order=DEGREVLEX):
        self.F, self.nvars, self.gb = F, nvars, basis
        self.key = order_key(order)
        self.monomials = standard_monomials([lm for lm, _ in basis], nvars)
        if self.monomials is not None:
            self.monomials.sort(key=self.key)
            self.index = {m: i for i, m in enumerate(self.monomials)}

    @property
    def dim(self):
        return None if self.monomials is None else len(self.monomials)

    def reduce(self, f):
        return normal_form(self.F, f, self.gb, self.key)

    def vector(self, f):
        F = self.F
        v = [F.zero] * len(self.monomials)
        for e, c in self.reduce(f).items():
            v[self.index[e]] = c
        return v

    def from_vector(self, v):
        F = self.F
        return {m: c for m, c in zip(self.monomials, v) if not F.is_zero(c)}

    def mul(self, f, g):
        F = self.F
        out = {}
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = F.mul(c1, c2)
                out[e] = F.add(out[e], w) if e in out else w
        return self.reduce({e: c for e, c in out.items() if not F.is_zero(c)})

    def mult_matrix_columns(self, i):
        """For each basis monomial b, the vector of x_i * b."""
        cols = []
        for m in self.monomials:
            e = list(m)
            e[i] += 1
            cols.append(self.vector({tuple(e): self.F.one}))
        return cols


def fglm(F, nvars, basis, order_from=DEGREVLEX):
    """Convert a zero-dimensional reduced basis to the lex order."""
    Q = Quotient(F, nvars, basis, order_from)
    if Q.monomials is None:
        raise ValueError("FGLM needs a zero-dimensional ideal")
    mats = [Q.mult_matrix_columns(i) for i in range(nvars)]
    D = Q.dim
    lex = order_key(LEX)

    def apply(i, v):
        out = [F.zero] * D
        for j, c in enumerate(v):
            if not F.is_zero(c):
                col = mats[i][j]
                for k in range(D):
                    if not F.is_zero(col[k]):
                        out[k] = F.add(out[k], F.mul(c, col[k]))
        return out

    # echelon store: rows (vector, combination over staircase monomials)
    ech = []  # list of (pivot index, vector, combination dict monomial -> coeff)
    stair = []
    vecs = {}
    leads = []
    out = []
    one = (0,) * nvars
    vecs[one] = Q.vector({one: F.one})
    candidates = {one}
    done = set()
    while candidates:
        m = min(candidates, key=lex)
        candidates.discard(m)
        done.add(m)
        if any(_divides(l, m) for l in leads):
            continue
        if m not in vecs:
            # m = x_i * m' with m' already in the staircase
            for i in range(nvars):
                if m[i]:
                    prev = list(m)
                    prev[i] -= 1
                    prev = tuple(prev)
                    if prev in vecs:
                        vecs[m] = apply(i, vecs[prev])
                        break
        v = list(vecs[m])
        comb = {m: F.one}
        for piv, row, rcomb in ech:
            c = v[piv]
            if not F.is_zero(c):
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
                for mm, cc in rcomb.items():
                    w = F.mul(c, cc)
                    comb[mm] = F.sub(comb[mm], w) if mm in comb else F.neg(w)
        piv = next((k for k, c in enumerate(v) if not F.is_zero(c)), None)
        if piv is None:
            g = {mm: cc for mm, cc in comb.items() if not F.is_zero(cc)}
            out.append((m, g))
            leads.append(m)
            del vecs[m]
            continue
        inv = F.inv(v[piv])
        v = [F.mul(a, inv) for a in v]
        comb = {mm: F.mul(cc, inv) for mm, cc in comb.items()}
        # keep the store fully reduced at the new pivot
        new_ech = []
        for p2, row, rcomb in ech:
            c = row[piv]
            if not F.is_zero(c):
                row = [F.sub(a, F.mul(c, b)) for a, b in zip(row, v)]
                rcomb = dict(rcomb)
                for mm, cc in comb.items():
                    w = F.mul(c, cc)
                    rcomb[mm] = F.sub(rcomb[mm], w) if mm in rcomb else F.neg(w)
            new_ech.append((p2, row, rcomb))
        ech = new_ech + [(piv, v, comb)]
        stair.append(m)
        for i in range(nvars):
            e = list(m)
            e[i] += 1
            e = tuple(e)
            if e not in done:
                candidates.add(e)
    out.sort(key=lambda t: lex(t[0]))
    return out
