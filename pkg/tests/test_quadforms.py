from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwlines.errors import DegenerateForm, FieldMismatch, InvalidForm, UnsupportedField, ZeroArgument
from gwlines.exactfield import finite_field, is_square, number_field, prime_field, rationals
from gwlines.quadforms import (
    GWClass,
    SymBilinearForm,
    diagonalize,
    gw_equal,
    gw_invariants,
    gw_sum,
    gw_to_json,
    hasse_witt,
    hilbert_symbol,
    scharlau_trace,
)

Q = rationals()
PLACES = ["inf", 2, 3, 5, 7, 11, 13]


def form(F, rows):
    return SymBilinearForm.from_rows(F, rows)


def _det(F, M):
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


def test_diagonalize_examples():
    assert diagonalize(form(Q, [[1, 0], [0, 1]])) == gw_sum(Q, [(2, 1)])
    assert diagonalize(form(Q, [[0, 1], [1, 0]])) == GWClass(Q, [2, -2])
    assert gw_equal(diagonalize(form(Q, [[0, 1], [1, 0]])), GWClass(Q, [1, -1]))
    assert diagonalize(form(Q, [[2, 0], [0, 10]])) == GWClass(Q, [2, 10])


def test_diagonalize_errors():
    with pytest.raises(DegenerateForm):
        diagonalize(form(Q, [[1, 1], [1, 1]]))
    with pytest.raises(InvalidForm):
        diagonalize(form(Q, [[1, 2], [0, 1]]))


def _random_matrix(F, n, rng, invertible=False):
    while True:
        M = [[F.elem(F.random(rng)) for _ in range(n)] for _ in range(n)]
        if not invertible or not _det(F, M).is_zero():
            return M


def _congruence(F, G, M):
    n = len(G)
    return [
        [sum((M[k][i] * G[k][l] * M[l][j] for k in range(n) for l in range(n)), F(0)) for j in range(n)]
        for i in range(n)
    ]


@pytest.mark.parametrize("F", [prime_field(5), prime_field(7), Q])
def test_diagonalize_congruence_invariance(F):
    rng = random.Random(17)
    done = 0
    while done < 500 // 3 + 1:
        n = rng.randint(1, 4)
        A = _random_matrix(F, n, rng)
        G = [[A[i][j] + A[j][i] for j in range(n)] for i in range(n)]
        if _det(F, G).is_zero():
            continue
        M = _random_matrix(F, n, rng, invertible=True)
        c1, c2 = diagonalize(form(F, G)), diagonalize(form(F, _congruence(F, G, M)))
        assert gw_equal(c1, c2)
        # product of the pivots is the determinant up to a square
        prod = F(1)
        for d in c1.entries:
            prod = prod * d
        assert is_square(prod / _det(F, G))
        done += 1


def test_hilbert_examples():
    for v in PLACES:
        for b in (1, -1, 2, 3, -6, 10, Fraction(5, 7)):
            assert hilbert_symbol(1, b, v) == 1
    assert hilbert_symbol(-1, -1, "inf") == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(2, 3, 3) == -1  # 2 is not a square mod 3
    with pytest.raises(ZeroArgument):
        hilbert_symbol(0, 3, 2)


def test_minus_one_minus_one_at_two_by_exhaustion():
    # -x^2 - y^2 = z^2 with x, y, z not all even has no solution mod 16
    sols = [
        (x, y, z)
        for x in range(16) for y in range(16) for z in range(16)
        if (x % 2 or y % 2 or z % 2) and (-x * x - y * y - z * z) % 16 == 0
    ]
    assert sols == []


def _random_rational(rng):
    num = rng.choice([-1, 1]) * rng.randint(1, 200)
    return Fraction(num, rng.randint(1, 50))


def _support(*xs):
    import sympy

    ps = set()
    for x in xs:
        ps.update(sympy.factorint(abs(x.numerator * x.denominator)))
    return ["inf", 2] + sorted(p for p in ps if p != 2)


def test_hilbert_product_formula_and_bimultiplicativity():
    rng = random.Random(2024)
    for _ in range(200):
        a, b, c = (_random_rational(rng) for _ in range(3))
        places = _support(a, b, c)
        prod = 1
        for v in places:
            prod *= hilbert_symbol(a, b, v)
            assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
            assert hilbert_symbol(a * c, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v)
            assert hilbert_symbol(a, -a, v) == 1
        assert prod == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(-500, 500).filter(bool), st.integers(-500, 500).filter(bool))
def test_hilbert_product_formula_property(a, b):
    prod = 1
    for v in _support(Fraction(a), Fraction(b)):
        prod *= hilbert_symbol(a, b, v)
    assert prod == 1


def test_invariants_examples():
    c = gw_sum(Q, [(15, 1), (12, -1)])
    inv = gw_invariants(c)
    assert (inv.rank, inv.signature, inv.disc) == (27, 3, Q(1))
    assert all(s == 1 for s in inv.hasse.values())
    inv = gw_invariants(gw_sum(prime_field(7), [(1, 1)]))
    assert inv.rank == 1 and inv.disc == prime_field(7)(1)
    c = gw_sum(Q, [(3, 1), (12, 2), (12, -6)])
    inv = gw_invariants(c)
    assert (inv.rank, inv.disc) == (27, Q(1))


def test_fast_hasse_matches_pairwise_product():
    rng = random.Random(5)
    for _ in range(50):
        entries = [Q(rng.choice([1, -1, 2, -2, 3, -3, 5, 6, -5, 10])) for _ in range(rng.randint(1, 12))]
        c = GWClass(Q, entries)
        inv = gw_invariants(c)
        for v, s in inv.hasse.items():
            assert s == hasse_witt(c.entries, v)


def test_gw_equal_examples():
    rhs = gw_sum(Q, [(15, 1), (12, -1)])
    assert gw_equal(gw_sum(Q, [(3, 1), (12, 2), (12, -6)]), rhs)
    assert gw_equal(gw_sum(Q, [(15, 1), (12, -5)]), rhs)
    assert not gw_equal(GWClass(Q, [1]), GWClass(Q, [2]))
    assert gw_equal(GWClass(Q, [2, -2]), GWClass(Q, [1, -1]))
    # same rank, signature and discriminant, different Hasse invariant at 2 and 3
    assert not gw_equal(GWClass(Q, [1, 1, 1]), GWClass(Q, [3, 3, 1]))
    with pytest.raises(FieldMismatch):
        gw_equal(GWClass(Q, [1]), GWClass(prime_field(7), [1]))
    K = number_field([-5, 0, 1])
    with pytest.raises(UnsupportedField):
        gw_equal(GWClass(K, [1]), GWClass(K, [1]))


def test_gw_equal_is_an_equivalence_on_a_sample():
    rng = random.Random(9)
    sample = [GWClass(Q, [rng.choice([1, -1, 2, -2, 3, 6]) for _ in range(3)]) for _ in range(25)]
    for a in sample:
        assert gw_equal(a, a)
        for b in sample:
            assert gw_equal(a, b) == gw_equal(b, a)
            if gw_equal(a, b):
                for c in sample:
                    if gw_equal(b, c):
                        assert gw_equal(a, c)


def test_rank_and_discriminant_under_concatenation():
    F = prime_field(7)
    rng = random.Random(1)
    for _ in range(50):
        a = GWClass(F, [rng.randint(1, 6) for _ in range(rng.randint(1, 5))])
        b = GWClass(F, [rng.randint(1, 6) for _ in range(rng.randint(1, 5))])
        s = a + b
        assert s.rank == a.rank + b.rank
        da, db, ds = (gw_invariants(x).disc for x in (a, b, s))
        assert is_square(ds / (da * db))


def test_finite_field_equality_is_rank_and_disc():
    F = prime_field(7)
    assert gw_equal(gw_sum(F, [(27, 1)]), gw_sum(F, [(15, 1), (12, -1)]))
    assert gw_equal(GWClass(F, [1, 1]), GWClass(F, [3, 5]))
    assert not gw_equal(GWClass(F, [1, 1]), GWClass(F, [1, 3]))


def test_scharlau_trace_examples():
    Z = number_field([1, 1, 1])
    assert gw_equal(scharlau_trace(Z(1), Q), GWClass(Q, [2, -6]))
    F3, F9 = prime_field(3), finite_field(3, 2)
    t = scharlau_trace(F9(1), F3)
    assert t.rank == 2 and not is_square(gw_invariants(t).disc)
    F7 = prime_field(7)
    for u in range(1, 7):
        assert scharlau_trace(F7(u), F7) == GWClass(F7, [u])
    with pytest.raises(ZeroArgument):
        scharlau_trace(F9(0), F3)


TRACE_TABLE_CASES = [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 4)]


@pytest.mark.parametrize("q,a", TRACE_TABLE_CASES)
def test_trace_form_discriminant_table(q, a):
    k, L = prime_field(q), finite_field(q, a)
    square = L(1)
    nonsquare = next(L.elem(x) for x in L.elements() if not L.is_zero(x) and not is_square(L.elem(x)))
    for u, u_square in ((square, True), (nonsquare, False)):
        c = scharlau_trace(u, k)
        assert c.rank == a
        disc_square = is_square(gw_invariants(c).disc)
        # square discriminant exactly when (a odd and u square) or (a even and u non-square)
        assert disc_square == ((a % 2 == 1) == u_square)


def test_json_shape():
    d = gw_to_json(gw_sum(Q, [(1, 1), (1, -3)]))
    assert set(d) == {"field", "entries", "invariants"}
    assert d["entries"] == ["1/1", "-3/1"]
    assert set(d["invariants"]["hasse"]) == {"inf", "2", "p"}
    assert d["invariants"]["hasse"]["p"] == {"3": 1}
    d = gw_to_json(gw_sum(prime_field(5), [(2, 1)]))
    assert d["invariants"]["hasse"] is None and d["invariants"]["signature"] is None
