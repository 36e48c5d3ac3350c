"""Explicit line sets over Q for the Fermat and Clebsch cubic surfaces.

Enumeration only runs over finite fields, so over Q the lines are written down
directly:

* Fermat: span{-e_a + z^i e_b, -e_c + z^j e_d} for the three pairings
  {a, b}, {c, d} of the coordinates and z a primitive cube root of unity.
* Clebsch: the S5-orbits of span{(1,-1,0,0), (0,0,1,-1)} (15 rational lines)
  and span{(2,a,a',a'), (a,a',a',a)} with a = (-1 + sqrt5)/2, a' its conjugate
  (12 lines over Q(sqrt5)), where S5 permutes x1..x5 with x5 = -(x1+..+x4).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from ..exactfield.fields import Field, extension_degree, number_field, rationals
from .lines import LineRecord, LineSubspace, compute_type, line_from_plucker
from .surface import CubicSurface

PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def cyclotomic3() -> Field:
    """Q(z) with z^2 + z + 1 = 0."""
    return number_field([1, 1, 1])


def sqrt5_field() -> Field:
    """Q(r) with r^2 = 5."""
    return number_field([-5, 0, 1])


def _conjugate(K: Field, raw):
    # both fields are quadratic: conjugation fixes Q and sends t to tr(t) - t
    tr = -K.modulus[1]
    c0, c1 = raw
    return (c0 + c1 * tr, -c1)


def _conj_plucker(K, p):
    return tuple(_conjugate(K, x) for x in p)


def _is_rational(K, p):
    return all(x[1] == 0 for x in p)


def _closed_points(K: Field, lines):
    """Group lines over a quadratic field into closed points over Q.

    Rational lines come back over Q; conjugate pairs are merged and represented
    by the member with the smaller Pluecker vector.
    """
    Q = rationals()
    seen = set()
    out = []
    for S in lines:
        p = S.plucker
        if p in seen:
            continue
        if _is_rational(K, p):
            seen.add(p)
            out.append(line_from_plucker(Q, tuple(x[0] for x in p)))
            continue
        pc = _conj_plucker(K, p)
        seen.update({p, pc})
        rep = min(p, pc, key=lambda v: tuple(K.sort_key(x) for x in v))
        out.append(line_from_plucker(K, rep))
    return out


def fermat_lines_geometric():
    K = cyclotomic3()
    z = K.gen_raw()
    powers = [K.one, z, K.mul(z, z)]
    lines = []
    for (a, b), (c, d) in PAIRINGS:
        for i in range(3):
            for j in range(3):
                v3 = [K.zero] * 4
                v4 = [K.zero] * 4
                v3[a], v3[b] = K.neg(K.one), powers[i]
                v4[c], v4[d] = K.neg(K.one), powers[j]
                lines.append(LineSubspace.from_raw(K, v3, v4))
    return K, lines


def _s5_image(K, v, sigma):
    w = list(v) + [K.neg(K.add(K.add(v[0], v[1]), K.add(v[2], v[3])))]
    return [w[sigma[k]] for k in range(4)]


def clebsch_lines_geometric():
    K = sqrt5_field()
    r = K.gen_raw()
    half = K.from_fraction(Fraction(1, 2))
    a = K.mul(K.sub(r, K.one), half)
    ab = K.mul(K.sub(K.neg(r), K.one), half)
    one, zero = K.one, K.zero
    seeds = [
        ([one, K.neg(one), zero, zero], [zero, zero, one, K.neg(one)]),
        ([K.from_int(2), a, ab, ab], [a, ab, ab, a]),
    ]
    found = {}
    for v3, v4 in seeds:
        for sigma in permutations(range(5)):
            S = LineSubspace.from_raw(K, _s5_image(K, v3, sigma), _s5_image(K, v4, sigma))
            found.setdefault(S.plucker, S)
    return K, list(found.values())


def _records(f: CubicSurface, points):
    Q = f.field
    out = []
    for S in points:
        tc, hyp = compute_type(f, S)
        d = extension_degree(S.field, Q)
        out.append(LineRecord(S, d, tc, hyp, S.plucker))
    out.sort(key=lambda r: (r.def_degree, tuple(r.field.sort_key(x) for x in r.orbit_key)))
    return out


def fermat_lines_over_q(f: CubicSurface):
    """3 rational lines and 12 closed points of degree 2 over Q(z)."""
    K, lines = fermat_lines_geometric()
    return _records(f, _closed_points(K, lines))


def clebsch_lines_over_q(f: CubicSurface):
    """15 rational lines and 6 closed points of degree 2 over Q(sqrt 5)."""
    K, lines = clebsch_lines_geometric()
    return _records(f, _closed_points(K, lines))


def records_from_lines(f: CubicSurface, lines):
    """Records for user-supplied closed points (each line given over its residue field)."""
    return _records(f, lines)
