"""Grothendieck-Witt classes of symmetric bilinear forms.

Forms are diagonalized by symmetric Gaussian elimination; classes are compared
by rank and discriminant over finite fields, and additionally by signature and
Hasse-Witt invariants over Q.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (
    DegenerateForm,
    FieldMismatch,
    InvalidForm,
    UnsupportedField,
    ZeroArgument,
)
from .exactfield.fields import (
    RATIONAL,
    Field,
    FieldElem,
    extension_degree,
    field_trace_raw,
    square_class,
)


@dataclass(frozen=True)
class SymBilinearForm:
    field: Field
    gram: tuple  # tuple of tuples of raw values

    @classmethod
    def from_rows(cls, field: Field, rows) -> SymBilinearForm:
        return cls(field, tuple(tuple(field.coerce(x) for x in row) for row in rows))

    @property
    def size(self):
        return len(self.gram)


class GWClass:
    """A diagonal representative <d_1> + ... + <d_r> with square-class entries."""

    def __init__(self, field: Field, entries=()):
        self.field = field
        reps = []
        for d in entries:
            e = d if isinstance(d, FieldElem) else field(d)
            if e.field != field:
                raise FieldMismatch(f"entry over {e.field} in a class over {field}")
            reps.append(square_class(e))
        self.entries = tuple(reps)

    @property
    def rank(self):
        return len(self.entries)

    def __add__(self, other: GWClass) -> GWClass:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        out = GWClass(self.field)
        out.entries = self.entries + other.entries
        return out

    def __rmul__(self, k: int) -> GWClass:
        out = GWClass(self.field)
        out.entries = self.entries * k
        return out

    def scaled(self, a) -> GWClass:
        """<a> * self: every entry multiplied by a."""
        a = a if isinstance(a, FieldElem) else self.field(a)
        return GWClass(self.field, [a * d for d in self.entries])

    def __eq__(self, other):
        return isinstance(other, GWClass) and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        counts: dict = {}
        for d in self.entries:
            counts[str(d)] = counts.get(str(d), 0) + 1
        body = " + ".join(f"{k}<{d}>" if k > 1 else f"<{d}>" for d, k in counts.items())
        return f"GWClass({body or '0'} over {self.field.name()})"


def gw_sum(field: Field, pairs) -> GWClass:
    """Class from (multiplicity, value) pairs, e.g. [(15, 1), (12, -1)]."""
    entries = []
    for k, a in pairs:
        entries.extend([a] * k)
    return GWClass(field, entries)


def diagonalize(form: SymBilinearForm) -> GWClass:
    """Diagonalize a nondegenerate symmetric Gram matrix by congruence."""
    F = form.field
    r = form.size
    A = [list(row) for row in form.gram]
    if any(len(row) != r for row in A):
        raise InvalidForm("Gram matrix is not square")
    for i in range(r):
        for j in range(i + 1, r):
            if A[i][j] != A[j][i]:
                raise InvalidForm("Gram matrix is not symmetric")
    pivots = []
    for i in range(r):
        if F.is_zero(A[i][i]):
            j = next((j for j in range(i + 1, r) if not F.is_zero(A[i][j])), None)
            if j is None:
                raise DegenerateForm("Gram matrix is singular")
            # e_i -> e_i + c e_j keeps the form congruent; c = 1 unless that cancels
            c = F.one
            if F.is_zero(F.add(F.add(A[i][i], F.add(A[i][j], A[i][j])), A[j][j])):
                c = F.neg(F.one)
            for k in range(r):
                A[i][k] = F.add(A[i][k], F.mul(c, A[j][k]))
            for k in range(r):
                A[k][i] = F.add(A[k][i], F.mul(c, A[k][j]))
        piv = A[i][i]
        inv = F.inv(piv)
        for k in range(i + 1, r):
            if F.is_zero(A[k][i]):
                continue
            f = F.mul(A[k][i], inv)
            for m in range(i, r):
                A[k][m] = F.sub(A[k][m], F.mul(f, A[i][m]))
            for m in range(i, r):
                A[m][k] = A[k][m]
        pivots.append(piv)
    return GWClass(F, [F.elem(d) for d in pivots])


# ---------------------------------------------------------------- Hilbert symbols

def _as_int_class(a) -> int:
    """A nonzero rational's square class as a nonzero integer (num*den)."""
    if isinstance(a, FieldElem):
        a = a.value
    a = Fraction(a)
    if a == 0:
        raise ZeroArgument("Hilbert symbol of zero")
    return a.numerator * a.denominator


def _split(n: int, p: int):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u: int, p: int) -> int:
    return 1 if pow(u % p, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_v for nonzero rationals a, b and v = 'inf' or a prime."""
    a, b = _as_int_class(a), _as_int_class(b)
    if place in ("inf", "∞", None):
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2
        omega = lambda x: ((x * x - 1) // 8) % 2
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    e = (alpha * beta * ((p - 1) // 2)) % 2
    s = -1 if e else 1
    if beta % 2:
        s *= _legendre(u, p)
    if alpha % 2:
        s *= _legendre(v, p)
    return s


def _odd_primes(n: int):
    import sympy

    return [q for q in sympy.factorint(abs(n)) if q != 2]


@dataclass
class Invariants:
    rank: int
    disc: FieldElem
    signature: int | None = None
    hasse: dict = dc_field(default_factory=dict)  # place -> +-1, over Q only

    def places(self):
        return set(self.hasse)


def _places_for(entries) -> list:
    odd = set()
    for d in entries:
        odd.update(_odd_primes(_as_int_class(d)))
    return ["inf", 2] + sorted(odd)


def hasse_witt(entries, place) -> int:
    ints = [_as_int_class(d) for d in entries]
    s = 1
    for i in range(len(ints)):
        for j in range(i + 1, len(ints)):
            s *= hilbert_symbol(ints[i], ints[j], place)
    return s


def _hasse_witt_fast(entries, place) -> int:
    # group equal entries: (d,d)_v^(k choose 2) and (d,e)_v^(k*l)
    counts: dict = {}
    for d in entries:
        n = _as_int_class(d)
        counts[n] = counts.get(n, 0) + 1
    keys = sorted(counts)
    s = 1
    for i, a in enumerate(keys):
        ka = counts[a]
        if (ka * (ka - 1) // 2) % 2 and hilbert_symbol(a, a, place) == -1:
            s = -s
        for b in keys[i + 1:]:
            if (ka * counts[b]) % 2 and hilbert_symbol(a, b, place) == -1:
                s = -s
    return s


def gw_invariants(c: GWClass, places=None) -> Invariants:
    F = c.field
    prod = F(1)
    for d in c.entries:
        prod = prod * d
    disc = square_class(prod) if c.entries else F(1)
    if F.kind != RATIONAL:
        return Invariants(c.rank, disc)
    sig = sum(1 if d.value > 0 else -1 for d in c.entries)
    if places is None:
        places = _places_for(c.entries)
    hasse = {v: _hasse_witt_fast(c.entries, v) for v in places}
    return Invariants(c.rank, disc, sig, hasse)


def gw_equal(c1: GWClass, c2: GWClass) -> bool:
    if c1.field != c2.field:
        raise FieldMismatch(f"{c1.field} vs {c2.field}")
    F = c1.field
    if not (F.is_finite or F.kind == RATIONAL):
        raise UnsupportedField(f"GW equality is decided over finite fields and Q, not {F}")
    if c1.rank != c2.rank:
        return False
    if F.is_finite:
        return gw_invariants(c1).disc == gw_invariants(c2).disc
    places = sorted(set(_places_for(c1.entries)) | set(_places_for(c2.entries)), key=str)
    i1, i2 = gw_invariants(c1, places), gw_invariants(c2, places)
    return i1.disc == i2.disc and i1.signature == i2.signature and i1.hasse == i2.hasse


# ---------------------------------------------------------------- trace forms

def trace_form(u: FieldElem, base: Field) -> SymBilinearForm:
    """Gram matrix Tr(u b_i b_j) on the power basis of the generator."""
    L = u.field
    if u.is_zero():
        raise ZeroArgument("trace form of <0>")
    d = extension_degree(L, base)
    if d == 1:
        return SymBilinearForm(base, ((field_trace_raw(L, base, u.value),),))
    g = L.gen_raw()
    basis = [L.one]
    for _ in range(1, 2 * d - 1):
        basis.append(L.mul(basis[-1], g))
    # G_ij depends only on i + j
    traces = [field_trace_raw(L, base, L.mul(u.value, b)) for b in basis]
    return SymBilinearForm(base, tuple(tuple(traces[i + j] for j in range(d)) for i in range(d)))


def scharlau_trace(u: FieldElem, base: Field) -> GWClass:
    """Tr_{L/k}<u> as a class over k."""
    return diagonalize(trace_form(u, base))


def gw_to_json(c: GWClass) -> dict:
    inv = gw_invariants(c)
    out = {
        "field": c.field.desc_json(),
        "entries": [d.to_json() for d in c.entries],
        "invariants": {
            "rank": inv.rank,
            "disc": inv.disc.to_json(),
            "signature": inv.signature,
            "hasse": None,
        },
    }
    if inv.hasse:
        out["invariants"]["hasse"] = {
            "inf": inv.hasse["inf"],
            "2": inv.hasse[2],
            "p": {str(v): s for v, s in inv.hasse.items() if v not in ("inf", 2)},
        }
    return out


__all__ = [
    "GWClass",
    "Invariants",
    "SymBilinearForm",
    "diagonalize",
    "gw_equal",
    "gw_invariants",
    "gw_sum",
    "gw_to_json",
    "hasse_witt",
    "hilbert_symbol",
    "scharlau_trace",
    "trace_form",
]
