"""Cubic surfaces in P^3 and their smoothness."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..eklindex.groebner import DEGREVLEX, Quotient, groebner_dicts
from ..errors import InvalidSurface, UnsupportedCharacteristic
from ..exactfield.fields import Field, embed_raw
from ..exactfield.poly import Poly

VARS = ("x1", "x2", "x3", "x4")
MONOMIALS = tuple(
    e for e in itertools.product(range(4), repeat=4) if sum(e) == 3
)
MONOMIALS = tuple(sorted(MONOMIALS, reverse=True))


@dataclass(frozen=True)
class CubicSurface:
    field: Field
    coeffs: tuple  # sorted ((i, j, k, l), raw value) pairs, no zeros

    @classmethod
    def from_mapping(cls, field: Field, mapping) -> CubicSurface:
        acc = {}
        for e, c in mapping.items():
            e = tuple(int(x) for x in e)
            if len(e) != 4 or sum(e) != 3 or min(e) < 0:
                raise InvalidSurface(f"{e} is not a cubic monomial in four variables")
            v = field.coerce(c)
            acc[e] = field.add(acc[e], v) if e in acc else v
        items = tuple(sorted((e, v) for e, v in acc.items() if not field.is_zero(v)))
        if not items:
            raise InvalidSurface("the cubic form is identically zero")
        return cls(field, items)

    @classmethod
    def from_poly(cls, f: Poly) -> CubicSurface:
        if len(f.vars) != 4 or not f.is_homogeneous(3):
            raise InvalidSurface("expected a cubic form in four variables")
        return cls.from_mapping(f.field, f.terms)

    @property
    def terms(self) -> dict:
        return dict(self.coeffs)

    def poly(self) -> Poly:
        return Poly(self.field, VARS, self.terms)

    def base_change(self, target: Field) -> CubicSurface:
        if target == self.field:
            return self
        return CubicSurface(
            target,
            tuple((e, embed_raw(self.field, target, c)) for e, c in self.coeffs),
        )

    def evaluate_raw(self, F, point):
        """f at a point with raw coordinates in F (a field containing the coefficients)."""
        acc = F.zero
        for e, c in self.coeffs:
            v = c if F == self.field else embed_raw(self.field, F, c)
            for x, k in zip(point, e):
                if k:
                    v = F.mul(v, F.pow(x, k))
                    if F.is_zero(v):
                        break
            acc = F.add(acc, v)
        return acc

    def __repr__(self):
        return f"CubicSurface({self.poly()!r} over {self.field.name()})"


def fermat(field: Field) -> CubicSurface:
    return CubicSurface.from_mapping(
        field, {(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 1}
    )


def clebsch(field: Field) -> CubicSurface:
    """sum_{i != j} x_i^2 x_j + 2 sum_{i<j<k} x_i x_j x_k, i.e. ((sum x)^3 - sum x^3) / 3."""
    mapping = {}
    for e in MONOMIALS:
        if 3 in e:
            continue
        mapping[e] = 1 if 2 in e else 2
    return CubicSurface.from_mapping(field, mapping)


def singular_ideal(f: CubicSurface):
    """f together with its four partial derivatives, as dicts."""
    P = f.poly()
    gens = [P.terms] + [P.diff(i).terms for i in range(4)]
    return [g for g in gens if g]


def is_smooth(f: CubicSurface) -> bool:
    """True iff f and its partials have no common zero in P^3 over the closure."""
    F = f.field
    if F.char == 2:
        raise UnsupportedCharacteristic("characteristic 2 is not supported")
    gb = groebner_dicts(F, singular_ideal(f), DEGREVLEX)
    # the ideal is homogeneous: a finite quotient means only the origin is a zero
    return Quotient(F, 4, gb, DEGREVLEX).monomials is not None


def random_cubic(field: Field, rng) -> CubicSurface:
    while True:
        mapping = {e: field.elem(field.random(rng)) for e in MONOMIALS}
        try:
            return CubicSurface.from_mapping(field, mapping)
        except InvalidSurface:
            continue


def random_smooth_cubic(field: Field, rng) -> CubicSurface:
    while True:
        f = random_cubic(field, rng)
        if is_smooth(f):
            return f
