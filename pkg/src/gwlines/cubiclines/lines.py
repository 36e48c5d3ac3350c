"""Lines in P^3: Pluecker data, restriction of a cubic, and the type of a line.

The type of a line S on a smooth cubic f is the square class of
Res(df/de1|S, df/de2|S), where e3, e4 span S and e1..e4 is a basis.  The same
number, times 16, is the discriminant (in a, b) of Disc_{s,t}(a P1|S + b P2|S)
after writing f = y1 P1 + y2 P2 in coordinates adapted to S; that second route
is implemented separately as ``involution_disc``.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import (
    DegenerateSubspace,
    NotOnSurface,
    SingularAlongLine,
)
from ..exactfield.fields import Field, FieldElem, embed_raw, is_square, square_class
from .surface import CubicSurface

PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


# ---------------------------------------------------------------- linear algebra

def det_raw(F, M):
    """Determinant by Gaussian elimination over a field (raw values)."""
    A = [list(r) for r in M]
    n = len(A)
    det = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if not F.is_zero(A[r][c])), None)
        if piv is None:
            return F.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = F.neg(det)
        det = F.mul(det, A[c][c])
        inv = F.inv(A[c][c])
        for r in range(c + 1, n):
            if not F.is_zero(A[r][c]):
                fac = F.mul(A[r][c], inv)
                A[r] = [F.sub(x, F.mul(fac, y)) for x, y in zip(A[r], A[c])]
    return det


def rref_raw(F, rows):
    """Reduced row-echelon form and rank."""
    A = [list(r) for r in rows]
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if not F.is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(x, inv) for x in A[r]]
        for i in range(m):
            if i != r and not F.is_zero(A[i][c]):
                fac = A[i][c]
                A[i] = [F.sub(x, F.mul(fac, y)) for x, y in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return A, r


# ---------------------------------------------------------------- lines

def plucker_raw(F, v3, v4):
    """Normalized Pluecker vector (first nonzero entry 1), or None for rank < 2."""
    p = [F.sub(F.mul(v3[a], v4[b]), F.mul(v3[b], v4[a])) for a, b in PLUCKER_PAIRS]
    k = next((i for i, x in enumerate(p) if not F.is_zero(x)), None)
    if k is None:
        return None
    inv = F.inv(p[k])
    return tuple(F.mul(x, inv) for x in p)


@dataclass(frozen=True)
class LineSubspace:
    """A 2-dimensional subspace of L^4, stored in reduced row-echelon form."""

    field: Field
    basis: tuple  # two rows of four raw values
    plucker: tuple  # six raw values

    @classmethod
    def from_rows(cls, field: Field, v3, v4) -> LineSubspace:
        rows = [[field.coerce(x) for x in v3], [field.coerce(x) for x in v4]]
        return cls.from_raw(field, rows[0], rows[1])

    @classmethod
    def from_raw(cls, field: Field, v3, v4) -> LineSubspace:
        R, rank = rref_raw(field, [list(v3), list(v4)])
        if rank < 2:
            raise DegenerateSubspace("the two vectors do not span a plane")
        p = plucker_raw(field, R[0], R[1])
        return cls(field, (tuple(R[0]), tuple(R[1])), p)

    def rows(self):
        return [[self.field.elem(x) for x in r] for r in self.basis]

    def plucker_elems(self):
        return [self.field.elem(x) for x in self.plucker]

    def plucker_relation(self):
        F, p = self.field, self.plucker
        t1 = F.mul(p[0], p[5])
        t2 = F.mul(p[1], p[4])
        t3 = F.mul(p[2], p[3])
        return F.elem(F.add(F.sub(t1, t2), t3))


def restrict_cubic_raw(F, f: CubicSurface, v3, v4):
    """Coefficients (c0..c3) of f(s v3 + t v4) = sum c_k s^(3-k) t^k, over F."""
    coeffs = f.coeffs if f.field == F else [(e, embed_raw(f.field, F, c)) for e, c in f.coeffs]
    # powers of each coordinate linear form s*v3[m] + t*v4[m] as [s^k.. t^k] lists
    powers = []
    for m in range(4):
        lin = [v3[m], v4[m]]
        pw = [[F.one], lin]
        for _ in range(2):
            pw.append(_binmul(F, pw[-1], lin))
        powers.append(pw)
    out = [F.zero] * 4
    for e, c in coeffs:
        prod = [c]
        for m in range(4):
            if e[m]:
                prod = _binmul(F, prod, powers[m][e[m]])
        for k, x in enumerate(prod):
            out[k] = F.add(out[k], x)
    return out


def _binmul(F, a, b):
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not F.is_zero(y):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _line_field(f: CubicSurface, line):
    if isinstance(line, LineSubspace):
        return line.field, line.basis
    return line.line.field, line.line.basis


def restrict_cubic(f: CubicSurface, S: LineSubspace):
    """(c0, c1, c2, c3) as FieldElems over the line's field."""
    F = S.field
    return [F.elem(c) for c in restrict_cubic_raw(F, f, S.basis[0], S.basis[1])]


# ---------------------------------------------------------------- resultants

def sylvester_matrix(a, b, z=0):
    """4x4 Sylvester matrix of a0 s^2 + a1 s t + a2 t^2 and b0 s^2 + b1 s t + b2 t^2."""
    a0, a1, a2 = a
    b0, b1, b2 = b
    return [[a0, a1, a2, z], [z, a0, a1, a2], [b0, b1, b2, z], [z, b0, b1, b2]]


def resultant_binary_quadratics(P1, P2):
    """Determinant of the Sylvester matrix; P1, P2 are (a0, a1, a2) FieldElem triples."""
    F = P1[0].field
    a = [F.coerce(x) for x in P1]
    b = [F.coerce(x) for x in P2]
    M = sylvester_matrix(a, b, F.zero)
    return F.elem(det_raw(F, M))


def resultant_closed_form(P1, P2):
    a0, a1, a2 = P1
    b0, b1, b2 = P2
    return (
        a1 * a1 * b0 * b2
        - a2 * a1 * b0 * b1
        - a0 * a1 * b1 * b2
        + a2 * a2 * b0 * b0
        + a0 * a2 * b1 * b1
        + a0 * a0 * b2 * b2
        - 2 * a0 * a2 * b0 * b2
    )


def default_completion(F, v3, v4):
    """First two standard basis vectors (in index order) completing v3, v4 to a basis."""
    chosen = []
    for k in range(4):
        e = [F.zero] * 4
        e[k] = F.one
        _, r = rref_raw(F, [list(v3), list(v4)] + chosen + [e])
        if r == 3 + len(chosen):
            chosen.append(e)
        if len(chosen) == 2:
            return chosen
    raise DegenerateSubspace("could not complete the basis")


def _check_completion(F, e1, e2, v3, v4):
    _, r = rref_raw(F, [list(e1), list(e2), list(v3), list(v4)])
    if r < 4:
        raise DegenerateSubspace("completion vectors do not give a basis")


def directional_quadratic_raw(F, f: CubicSurface, direction, v3, v4):
    """(df/d direction)|S as (a0, a1, a2), coefficients of s^2, s t, t^2."""
    coeffs = f.coeffs if f.field == F else [(e, embed_raw(f.field, F, c)) for e, c in f.coeffs]
    grad = [dict() for _ in range(4)]
    for e, c in coeffs:
        for m in range(4):
            if e[m]:
                e2 = list(e)
                e2[m] -= 1
                e2 = tuple(e2)
                w = F.mul(c, F.from_int(e[m]))
                grad[m][e2] = F.add(grad[m][e2], w) if e2 in grad[m] else w
    deriv = {}
    for m in range(4):
        if F.is_zero(direction[m]):
            continue
        for e2, w in grad[m].items():
            w = F.mul(w, direction[m])
            deriv[e2] = F.add(deriv[e2], w) if e2 in deriv else w
    out = [F.zero] * 3
    for e2, w in deriv.items():
        prod = [w]
        for m in range(4):
            for _ in range(e2[m]):
                prod = _binmul(F, prod, [v3[m], v4[m]])
        for k, x in enumerate(prod):
            out[k] = F.add(out[k], x)
    return out


def type_resultant_raw(F, f: CubicSurface, v3, v4, completion=None):
    if any(not F.is_zero(c) for c in restrict_cubic_raw(F, f, v3, v4)):
        raise NotOnSurface("the line does not lie on the surface")
    if completion is None:
        e1, e2 = default_completion(F, v3, v4)
    else:
        e1, e2 = ([F.coerce(x) for x in v] for v in completion)
        _check_completion(F, e1, e2, v3, v4)
    P1 = directional_quadratic_raw(F, f, e1, v3, v4)
    P2 = directional_quadratic_raw(F, f, e2, v3, v4)
    return det_raw(F, sylvester_matrix(P1, P2, F.zero))


def line_resultant(f: CubicSurface, line, completion=None) -> FieldElem:
    """Res(df/de1|S, df/de2|S) for the chosen (default: standard) completion."""
    F, (v3, v4) = _line_field(f, line)
    return F.elem(type_resultant_raw(F, f, v3, v4, completion))


def compute_type(f: CubicSurface, line, completion=None):
    """(type class, hyperbolic?) of a line on f."""
    R = line_resultant(f, line, completion)
    if R.is_zero():
        raise SingularAlongLine("the surface is singular along the line")
    return square_class(R), is_square(R)


def involution_disc(f: CubicSurface, line, completion=None) -> FieldElem:
    """Disc_{a,b} Disc_{s,t}(a P1|S + b P2|S), where f = y1 P1 + y2 P2 in adapted coordinates."""
    F, (v3, v4) = _line_field(f, line)
    if any(not F.is_zero(c) for c in restrict_cubic_raw(F, f, v3, v4)):
        raise NotOnSurface("the line does not lie on the surface")
    if completion is None:
        e1, e2 = default_completion(F, v3, v4)
    else:
        e1, e2 = ([F.coerce(x) for x in v] for v in completion)
        _check_completion(F, e1, e2, v3, v4)
    g = adapted_form(F, f, [e1, e2, list(v3), list(v4)])
    # P_i|S is the coefficient of y_i in g, read at y1 = y2 = 0: a form in (y3, y4)
    quads = []
    for i in (0, 1):
        q = [F.zero] * 3
        for e, c in g.items():
            if e[i] == 1 and e[1 - i] == 0:
                q[e[3]] = F.add(q[e[3]], c)  # e[2] + e[3] = 2; index by the t-degree
        quads.append(q)
    (a0, a1, a2), (b0, b1, b2) = quads
    two, four = F.from_int(2), F.from_int(4)
    # D(a, b) = (a a1 + b b1)^2 - 4 (a a0 + b b0)(a a2 + b b2) = A a^2 + B a b + C b^2
    A = F.sub(F.mul(a1, a1), F.mul(four, F.mul(a0, a2)))
    B = F.sub(
        F.mul(two, F.mul(a1, b1)),
        F.mul(four, F.add(F.mul(a0, b2), F.mul(a2, b0))),
    )
    C = F.sub(F.mul(b1, b1), F.mul(four, F.mul(b0, b2)))
    return F.elem(F.sub(F.mul(B, B), F.mul(four, F.mul(A, C))))


def adapted_form(F, f: CubicSurface, basis):
    """g(y) = f(sum_i y_i basis_i) as a dict exponent -> raw coefficient."""
    coeffs = f.coeffs if f.field == F else [(e, embed_raw(f.field, F, c)) for e, c in f.coeffs]
    # coordinate m of sum y_i basis_i is the linear form sum_i basis_i[m] y_i
    lin = []
    for m in range(4):
        lin.append({tuple(1 if k == i else 0 for k in range(4)): basis[i][m] for i in range(4) if not F.is_zero(basis[i][m])})
    out = {}
    for e, c in coeffs:
        prod = {(0, 0, 0, 0): c}
        for m in range(4):
            for _ in range(e[m]):
                prod = _dmul(F, prod, lin[m])
        for k, v in prod.items():
            out[k] = F.add(out[k], v) if k in out else v
    return {k: v for k, v in out.items() if not F.is_zero(v)}


def _dmul(F, a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            w = F.mul(c1, c2)
            out[e] = F.add(out[e], w) if e in out else w
    return out


# ---------------------------------------------------------------- orbits and records

def frobenius_orbit(F, plucker, q_power: int):
    """Distinct images of a Pluecker vector under x -> x^q (q = p^q_power)."""
    orbit = [tuple(plucker)]
    if not F.is_finite:
        return orbit
    cur = tuple(plucker)
    while True:
        cur = tuple(F.frobenius(x, q_power) for x in cur)
        if cur == orbit[0]:
            return orbit
        orbit.append(cur)


def canonical_orbit_key(line: LineSubspace, base: Field | None = None):
    """(key, orbit length): the least Frobenius conjugate of the Pluecker vector.

    Frobenius is taken relative to ``base`` (default: the prime field).
    """
    F = line.field
    step = 1 if base is None else base.degree_over_prime
    orbit = frobenius_orbit(F, line.plucker, step)
    key = min(orbit, key=lambda v: tuple(F.sort_key(x) for x in v))
    return key, len(orbit)


def orbit_key_json(F, key):
    return [F.to_json(x) for x in key]


@dataclass(frozen=True)
class LineRecord:
    line: LineSubspace
    def_degree: int
    type_class: FieldElem
    hyperbolic: bool
    orbit_key: tuple

    @property
    def field(self):
        return self.line.field

    def to_json(self):
        F = self.line.field
        return {
            "def_degree": self.def_degree,
            "plucker": [F.to_json(x) for x in self.line.plucker],
            "type_class": self.type_class.to_json(),
            "hyperbolic": self.hyperbolic,
            "orbit_key": orbit_key_json(F, self.orbit_key),
        }


def make_record(f: CubicSurface, line: LineSubspace, base: Field | None = None) -> LineRecord:
    """Record for a line over a finite field, represented by its least conjugate."""
    F = line.field
    base = base or f.field
    key, d = canonical_orbit_key(line, base)
    rep = line
    if key != line.plucker:
        rep = line_from_plucker(F, key)
    tc, hyp = compute_type(f, rep)
    return LineRecord(rep, d, tc, hyp, key)


def line_from_plucker(F, p) -> LineSubspace:
    """Recover a basis from a (decomposable) Pluecker vector."""
    # rows of the 4x4 antisymmetric matrix P_ab = p_ab span the line
    M = [[F.zero] * 4 for _ in range(4)]
    for (a, b), v in zip(PLUCKER_PAIRS, p):
        M[a][b] = v
        M[b][a] = F.neg(v)
    R, rank = rref_raw(F, M)
    if rank != 2:
        raise DegenerateSubspace("not a decomposable Pluecker vector")
    return LineSubspace.from_raw(F, R[0], R[1])


def all_conjugates(line: LineSubspace, base: Field):
    F = line.field
    out = []
    for v in frobenius_orbit(F, line.plucker, base.degree_over_prime):
        out.append(line_from_plucker(F, v))
    return out


__all__ = [
    "LineRecord",
    "LineSubspace",
    "canonical_orbit_key",
    "compute_type",
    "involution_disc",
    "line_resultant",
    "make_record",
    "resultant_binary_quadratics",
    "resultant_closed_form",
    "restrict_cubic",
    "sylvester_matrix",
]
