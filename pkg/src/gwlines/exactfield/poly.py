"""Sparse multivariate polynomials over an exact field."""
from __future__ import annotations

from ..errors import FieldMismatch, UnsupportedField, ZeroArgument
from . import upoly
from .fields import Field, FieldElem


class Poly:
    """Immutable sparse polynomial: exponent tuple -> raw coefficient (never zero)."""

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: Field, variables, terms=None):
        self.field = field
        self.vars = tuple(variables)
        clean = {}
        if terms:
            r = len(self.vars)
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != r:
                    raise ValueError(f"exponent {e} does not match {r} variables")
                if not field.is_zero(c):
                    clean[e] = c
        self.terms = clean

    @classmethod
    def from_coeffs(cls, field, variables, coeffs):
        """Build from a mapping exponent -> anything coercible into the field."""
        terms = {}
        for e, c in coeffs.items():
            e = tuple(e)
            v = field.coerce(c)
            terms[e] = field.add(terms[e], v) if e in terms else v
        return cls(field, variables, terms)

    @classmethod
    def const(cls, field, variables, c):
        return cls(field, variables, {(0,) * len(variables): field.coerce(c)})

    @classmethod
    def var(cls, field, variables, i):
        e = [0] * len(variables)
        e[i] = 1
        return cls(field, variables, {tuple(e): field.one})

    @classmethod
    def gens(cls, field, variables):
        return [cls.var(field, variables, i) for i in range(len(variables))]

    # ------------------------------------------------------------ basics
    def _new(self, terms):
        p = Poly.__new__(Poly)
        p.field, p.vars, p.terms = self.field, self.vars, terms
        return p

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} vs {self.field}")
            if other.vars != self.vars:
                raise ValueError("polynomials in different variables")
            return other
        return Poly.const(self.field, self.vars, other)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = self._lift(other)
            except (TypeError, ValueError, FieldMismatch):
                return NotImplemented
        return self.field == other.field and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._lift(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = F.add(out[e], c)
                if F.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return self._new({e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.field.coerce(other)
            return self.scale(c)
        other = self._lift(other)
        F = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = F.mul(c1, c2)
                out[e] = F.add(out[e], v) if e in out else v
        return Poly(F, self.vars, out)

    __rmul__ = __mul__

    def scale(self, c_raw):
        F = self.field
        if F.is_zero(c_raw):
            return self._new({})
        return self._new({e: F.mul(c, c_raw) for e, c in self.terms.items()})

    def __pow__(self, k: int):
        result = Poly.const(self.field, self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # ------------------------------------------------------------ queries
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if d is not None:
            return degs <= {d}
        return len(degs) <= 1

    def coeff(self, exps) -> FieldElem:
        return self.field.elem(self.terms.get(tuple(exps), self.field.zero))

    def items(self):
        """(exponent, FieldElem) pairs in sorted exponent order."""
        return [(e, self.field.elem(c)) for e, c in sorted(self.terms.items(), reverse=True)]

    def diff(self, i: int) -> Poly:
        F = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = F.mul(c, F.from_int(e[i]))
        return Poly(F, self.vars, out)

    def evaluate(self, point) -> FieldElem:
        """Value at a point given as FieldElems or raw values of this field."""
        F = self.field
        pt = [x.value if isinstance(x, FieldElem) else x for x in point]
        return F.elem(eval_raw(F, self.terms, pt))

    def substitute(self, images) -> Poly:
        """Compose with polynomial images (all in one ring) for each variable."""
        images = list(images)
        target = images[0]
        F = target.field
        acc = Poly(F, target.vars, {})
        cache = [dict() for _ in images]

        def power(i, k):
            if k not in cache[i]:
                cache[i][k] = images[i] ** k
            return cache[i][k]

        for e, c in self.terms.items():
            term = Poly.const(F, target.vars, F.coerce(self.field.elem(c)) if F != self.field else c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    def map_coeffs(self, field: Field, fn) -> Poly:
        return Poly(field, self.vars, {e: fn(c) for e, c in self.terms.items()})

    # ------------------------------------------------------------ univariate view
    def to_dense(self):
        if len(self.vars) != 1:
            raise ValueError("not a univariate polynomial")
        F = self.field
        if not self.terms:
            return []
        d = max(e[0] for e in self.terms)
        out = [F.zero] * (d + 1)
        for e, c in self.terms.items():
            out[e[0]] = c
        return out

    @classmethod
    def from_dense(cls, field, coeffs, var="x"):
        return cls(field, (var,), {(i,): c for i, c in enumerate(coeffs)})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            cs = self.field.format(c)
            if mono:
                parts.append(mono if cs == "1" else f"({cs})*{mono}")
            else:
                parts.append(f"({cs})")
        return " + ".join(parts)


def eval_raw(F, terms, pt):
    acc = F.zero
    for e, c in terms.items():
        v = c
        for x, k in zip(pt, e):
            if k:
                v = F.mul(v, F.pow(x, k))
        acc = F.add(acc, v)
    return acc


def factor_univariate(g: Poly, seed: int = 0):
    """Factor a univariate polynomial over a finite field.

    Returns a list of (monic irreducible Poly, multiplicity), sorted by degree
    then coefficients; the leading coefficient of g is the remaining unit.
    """
    F = g.field
    if not F.is_finite:
        raise UnsupportedField("univariate factoring is implemented over finite fields only")
    dense = g.to_dense()
    if not dense:
        raise ZeroArgument("cannot factor the zero polynomial")
    _, facs = upoly.factor(F, dense, seed)
    return [(Poly.from_dense(F, f, g.vars[0]), m) for f, m in facs]
