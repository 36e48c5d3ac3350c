"""Local algebra of an isolated zero at the origin and its EKL bilinear form."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..errors import (
    DegenerateForm,
    InconsistentSystem,
    NotIsolated,
    NotSimpleZero,
    ZeroNotUnique,
)
from ..exactfield.fields import Field, FieldElem
from ..exactfield.poly import Poly
from ..quadforms import GWClass, SymBilinearForm, diagonalize, scharlau_trace
from .groebner import DEGREVLEX, Quotient, groebner_dicts


@dataclass(frozen=True)
class PolySystem:
    field: Field
    vars: tuple
    polys: tuple

    def __post_init__(self):
        if len(self.polys) != len(self.vars):
            raise ValueError("a system needs as many equations as variables")
        zero = (0,) * len(self.vars)
        for f in self.polys:
            if f.vars != tuple(self.vars) or f.field != self.field:
                raise ValueError("equations must live in the system's ring")
            if zero in f.terms:
                raise ValueError("every equation must vanish at the origin")

    @classmethod
    def of(cls, polys) -> PolySystem:
        polys = tuple(polys)
        return cls(polys[0].field, polys[0].vars, polys)


class LocalAlgebra:
    """k[x]/I with I supported only at the origin."""

    def __init__(self, sys: PolySystem, quotient: Quotient):
        self.field = sys.field
        self.vars = sys.vars
        self.quotient = quotient

    @property
    def groebner(self):
        return [Poly(self.field, self.vars, g) for _, g in self.quotient.gb]

    @property
    def basis(self):
        return list(self.quotient.monomials)

    @property
    def dim(self):
        return self.quotient.dim

    def normal_form(self, f: Poly) -> Poly:
        return Poly(self.field, self.vars, self.quotient.reduce(f.terms))

    def vector(self, f):
        terms = f.terms if isinstance(f, Poly) else f
        return self.quotient.vector(terms)

    def mul(self, f, g):
        return self.quotient.mul(f, g)


def local_algebra(sys: PolySystem) -> LocalAlgebra:
    F, r = sys.field, len(sys.vars)
    gb = groebner_dicts(F, [f.terms for f in sys.polys if f], DEGREVLEX)
    Q = Quotient(F, r, gb, DEGREVLEX)
    if Q.monomials is None:
        raise NotIsolated("the quotient is not finite-dimensional")
    D = Q.dim
    for i in range(r):
        e = [0] * r
        e[i] = D
        if Q.reduce({tuple(e): F.one}):
            raise ZeroNotUnique(f"{sys.vars[i]} is not nilpotent: the system has zeros away from the origin")
    return LocalAlgebra(sys, Q)


def linear_coefficients(sys: PolySystem, rule: str = "least"):
    """Write f_i = sum_j a_ij x_j, sending each monomial to the least (or greatest) j it contains."""
    F, r = sys.field, len(sys.vars)
    rows = []
    for f in sys.polys:
        row = [dict() for _ in range(r)]
        for e, c in f.terms.items():
            support = [j for j in range(r) if e[j]]
            j = support[0] if rule == "least" else support[-1]
            e2 = list(e)
            e2[j] -= 1
            row[j][tuple(e2)] = c
        rows.append(row)
    return rows


def _det(A: LocalAlgebra, M):
    F = A.field
    r = len(M)
    total = {}
    for perm in permutations(range(r)):
        sign = 1
        for i in range(r):
            for j in range(i + 1, r):
                if perm[i] > perm[j]:
                    sign = -sign
        term = {(0,) * r: F.one}
        for i in range(r):
            term = A.mul(term, M[i][perm[i]])
            if not term:
                break
        if not term:
            continue
        for e, c in term.items():
            c = c if sign > 0 else F.neg(c)
            total[e] = F.add(total[e], c) if e in total else c
    return A.quotient.reduce({e: c for e, c in total.items() if not F.is_zero(c)})


def socle_element(sys: PolySystem, A: LocalAlgebra, rule: str = "least"):
    """Coordinates, in A's monomial basis, of the distinguished socle element det(a_ij)."""
    E = _det(A, linear_coefficients(sys, rule))
    if not E:
        raise InconsistentSystem("the distinguished socle element vanishes")
    return A.vector(E)


def default_eta(A: LocalAlgebra, socle):
    """Functional dual to the highest-degree basis monomial that E involves, with eta(E) = 1."""
    F = A.field
    basis = A.basis
    k = max(
        (i for i, c in enumerate(socle) if not F.is_zero(c)),
        key=lambda i: (sum(basis[i]), i),
    )
    eta = [F.zero] * len(basis)
    eta[k] = F.inv(socle[k])
    return eta


@dataclass
class EKLForm:
    gram: SymBilinearForm
    cls: GWClass
    socle: list
    eta: list
    algebra: LocalAlgebra

    @property
    def dim(self):
        return self.algebra.dim


def ekl_form(sys: PolySystem, eta=None, rule: str = "least") -> EKLForm:
    """The bilinear form (a, b) -> eta(ab) on the local algebra, and its class."""
    F = sys.field
    A = local_algebra(sys)
    socle = socle_element(sys, A, rule)
    if eta is None:
        eta = default_eta(A, socle)
    else:
        eta = [F.coerce(c) for c in eta]
        s = F.zero
        for a, b in zip(eta, socle):
            s = F.add(s, F.mul(a, b))
        if s != F.one:
            raise ValueError("eta must take the socle element to 1")
    basis = A.basis
    n = len(basis)
    gram = [[None] * n for _ in range(n)]
    for u in range(n):
        for v in range(u, n):
            prod = A.vector({tuple(a + b for a, b in zip(basis[u], basis[v])): F.one})
            val = F.zero
            for a, b in zip(eta, prod):
                if not F.is_zero(a) and not F.is_zero(b):
                    val = F.add(val, F.mul(a, b))
            gram[u][v] = gram[v][u] = val
    form = SymBilinearForm(F, tuple(tuple(row) for row in gram))
    try:
        cls = diagonalize(form)
    except DegenerateForm as exc:
        raise InconsistentSystem("EKL Gram matrix is degenerate") from exc
    return EKLForm(form, cls, socle, eta, A)


def simple_zero_index(J: FieldElem, base: Field) -> GWClass:
    """Local index at a simple zero with residue field L: Tr_{L/k}<J>."""
    if J.is_zero():
        raise NotSimpleZero("Jacobian determinant vanishes")
    return scharlau_trace(J, base)
