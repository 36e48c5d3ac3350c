from __future__ import annotations

import random
from fractions import Fraction

import pytest
from support import det, rand_elem, random_invertible, random_quadratic, surface_through_line

from gwlines.cubiclines import (
    CubicSurface,
    LineSubspace,
    canonical_orbit_key,
    clebsch,
    compute_type,
    enumerate_lines,
    fermat,
    involution_disc,
    is_smooth,
    line_resultant,
    make_record,
    random_smooth_cubic,
    restrict_cubic,
    resultant_binary_quadratics,
    resultant_closed_form,
    sylvester_matrix,
)
from gwlines.cubiclines.known import clebsch_lines_geometric, clebsch_lines_over_q, fermat_lines_over_q
from gwlines.cubiclines.lines import PLUCKER_PAIRS, frobenius_orbit, line_from_plucker
from gwlines.eklindex.groebner import DEGREVLEX, Quotient, groebner_dicts
from gwlines.errors import (
    DegenerateSubspace,
    IncompleteEnumeration,
    InvalidSurface,
    NotOnSurface,
    SingularSurface,
    UnsupportedCharacteristic,
)
from gwlines.exactfield import finite_field, is_square, number_field, prime_field, rationals, square_class

Q = rationals()
F7 = prime_field(7)


def test_is_smooth_examples():
    assert is_smooth(fermat(F7))
    bad = CubicSurface.from_mapping(F7, {(2, 0, 0, 1): 1, (0, 3, 0, 0): 1, (0, 0, 0, 3): 1})
    assert not is_smooth(bad)
    assert not is_smooth(CubicSurface.from_mapping(Q, {(3, 0, 0, 0): 1}))
    assert is_smooth(clebsch(Q)) and is_smooth(fermat(Q))
    with pytest.raises(UnsupportedCharacteristic):
        is_smooth(_char2_surface())
    with pytest.raises(InvalidSurface):
        CubicSurface.from_mapping(Q, {(3, 0, 0, 0): 0})
    with pytest.raises(InvalidSurface):
        CubicSurface.from_mapping(Q, {(2, 0, 0, 0): 1})


def _char2_surface():
    class Char2:
        char = 2

    return CubicSurface(Char2(), fermat(F7).coeffs)


def test_characteristic_three():
    # the Fermat cubic is (x1 + x2 + x3 + x4)^3 in characteristic 3
    assert not is_smooth(fermat(prime_field(3)))
    # sum x_i df/dx_i = 3 f = 0, so the partials alone always share zeros off the surface;
    # smoothness has to be decided with f in the ideal
    F = prime_field(3)
    rng = random.Random(0)
    for _ in range(3):
        g = random_smooth_cubic(F, rng)
        P = g.poly()
        gb = groebner_dicts(F, [P.diff(i).terms for i in range(4) if P.diff(i)], DEGREVLEX)
        assert Quotient(F, 4, gb, DEGREVLEX).monomials is None
        assert sum(r.def_degree for r in enumerate_lines(g)) == 27


def _singular_points_brute(f, F):
    """Points of P^3(F) where f and all partials vanish."""
    from itertools import product

    P = f.poly()
    polys = [P] + [P.diff(i) for i in range(4)]
    out = []
    for pt in product(list(F.elements()), repeat=4):
        if all(F.is_zero(c) for c in pt):
            continue
        if all(p.evaluate(pt).is_zero() for p in polys):
            out.append(pt)
    return out


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1)])
def test_is_smooth_against_singular_points(p, n):
    # a surface with an F_q-rational singular point must be reported singular, and
    # sparse random surfaces that are reported singular should mostly be caught here
    rng = random.Random(2)
    F, L = prime_field(p), finite_field(p, n)
    monos = [(3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 3, 0), (1, 1, 1, 0), (0, 1, 1, 1), (2, 0, 0, 1), (0, 0, 1, 2), (0, 2, 1, 0)]
    for _ in range(12 if n == 1 else 4):
        mapping = {e: F.elem(F.random(rng)) for e in monos}
        mapping[(0, 0, 0, 3)] = F(1)
        f = CubicSurface.from_mapping(F, mapping)
        if _singular_points_brute(f.base_change(L), L):
            assert not is_smooth(f)


def test_restrict_cubic_examples():
    S = LineSubspace.from_rows(Q, [-1, 1, 0, 0], [0, 0, -1, 1])
    assert restrict_cubic(fermat(Q), S) == [Q(0)] * 4
    T = LineSubspace.from_rows(Q, [0, 0, 1, 0], [0, 0, 0, 1])
    x3 = CubicSurface.from_mapping(Q, {(0, 0, 3, 0): 1})
    assert restrict_cubic(x3, T) == [Q(1), Q(0), Q(0), Q(0)]
    x1 = CubicSurface.from_mapping(Q, {(3, 0, 0, 0): 1})
    assert restrict_cubic(x1, T) == [Q(0)] * 4
    with pytest.raises(DegenerateSubspace):
        LineSubspace.from_rows(Q, [1, 2, 3, 4], [2, 4, 6, 8])


def test_line_subspace_normal_forms():
    rng = random.Random(1)
    for F in (Q, F7, finite_field(3, 2)):
        for _ in range(30):
            M = random_invertible(F, 4, rng)
            S = LineSubspace.from_rows(F, M[0], M[1])
            assert S.plucker_relation().is_zero()
            first = next(x for x in S.plucker if not F.is_zero(x))
            assert first == F.one
            # another basis of the same plane gives the same normal form
            a, b, c, d = (rand_elem(F, rng) for _ in range(4))
            if (a * d - b * c).is_zero():
                continue
            r1 = [a * u + b * v for u, v in zip(M[0], M[1])]
            r2 = [c * u + d * v for u, v in zip(M[0], M[1])]
            T = LineSubspace.from_rows(F, r1, r2)
            assert T == S
            assert line_from_plucker(F, S.plucker) == S


def test_resultant_examples():
    assert resultant_binary_quadratics([Q(1), Q(0), Q(0)], [Q(0), Q(0), Q(1)]) == Q(1)
    P = [Q(2), Q(-3), Q(5)]
    assert resultant_binary_quadratics(P, P) == Q(0)
    assert resultant_binary_quadratics([Q(1), Q(0), Q(1)], [Q(0), Q(1), Q(0)]) == Q(1)


@pytest.mark.parametrize("F", [Q, F7])
def test_resultant_closed_form_and_sylvester(F):
    rng = random.Random(99)
    for _ in range(1000):
        P1, P2 = random_quadratic(F, rng), random_quadratic(F, rng)
        assert resultant_binary_quadratics(P1, P2) == resultant_closed_form(P1, P2)
        # the Sylvester determinant through an independent elimination routine
        M = sylvester_matrix(P1, P2, F(0))
        assert det(F, M) == resultant_closed_form(P1, P2)


def test_resultant_vanishes_iff_common_root_over_f7():
    rng = random.Random(5)
    F = F7
    for _ in range(300):
        P1, P2 = random_quadratic(F, rng), random_quadratic(F, rng)
        if P1[0].is_zero() or P2[0].is_zero():
            continue
        # common root over the algebraic closure <=> gcd of P1(x,1), P2(x,1) nonconstant
        from gwlines.exactfield import upoly

        g = upoly.gcd(F, [c.value for c in reversed(P1)], [c.value for c in reversed(P2)])
        assert (len(g) > 1) == resultant_closed_form(P1, P2).is_zero()


def test_fermat_type_over_q():
    f = fermat(Q)
    S = LineSubspace.from_rows(Q, [-1, 1, 0, 0], [0, 0, -1, 1])
    e1, e2 = [1, 0, 0, 0], [0, 0, 1, 0]
    # by hand: df/de1|S = 3 s^2, df/de2|S = 3 t^2, and Res(3 s^2, 3 t^2) = 81
    R = line_resultant(f, S, completion=(e1, e2))
    assert R == Q(81)
    assert line_resultant(f, S) == Q(81)
    assert compute_type(f, S, completion=(e1, e2)) == (Q(1), True)
    assert involution_disc(f, S, completion=(e1, e2)) == Q(16 * 81)


def test_clebsch_types():
    f = clebsch(Q)
    tc, hyp = compute_type(f, LineSubspace.from_rows(Q, [1, -1, 0, 0], [0, 0, 1, -1]))
    assert hyp and tc == Q(1)
    K = number_field([-5, 0, 1])
    r = K.gen()
    a = (r - 1) / 2
    ab = (-r - 1) / 2
    S = LineSubspace.from_rows(K, [2, a, ab, ab], [a, ab, ab, a])
    assert all(c.is_zero() for c in restrict_cubic(f, S))
    tc, hyp = compute_type(f, S)
    assert not hyp
    expected = K(Fraction(-25, 2)) * (5 + r)
    assert is_square(line_resultant(f, S) / expected)
    assert is_square(tc / expected)


def test_not_on_surface():
    S = LineSubspace.from_rows(Q, [1, 0, 0, 0], [0, 1, 0, 0])
    with pytest.raises(NotOnSurface):
        compute_type(fermat(Q), S)
    with pytest.raises(NotOnSurface):
        involution_disc(fermat(Q), S)


@pytest.mark.parametrize("F", [Q, F7, finite_field(5, 2)])
def test_involution_disc_is_sixteen_resultants(F):
    rng = random.Random(12)
    for _ in range(100):
        f, S, (e1, e2) = surface_through_line(F, rng)
        R = line_resultant(f, S)
        assert involution_disc(f, S) == R * 16
        assert line_resultant(f, S, completion=(e1, e2)) * 16 == involution_disc(f, S, completion=(e1, e2))


@pytest.mark.parametrize("F", [Q, F7, prime_field(5)])
def test_completion_independence(F):
    rng = random.Random(21)
    checked = 0
    while checked < 20:
        f, S, _ = surface_through_line(F, rng)
        R = line_resultant(f, S)
        if R.is_zero():
            continue
        for _ in range(5):
            e1 = [rand_elem(F, rng) for _ in range(4)]
            e2 = [rand_elem(F, rng) for _ in range(4)]
            if det(F, [e1, e2] + S.rows()).is_zero():
                continue
            assert square_class(line_resultant(f, S, completion=(e1, e2))) == square_class(R)
        checked += 1


def test_enumerate_fermat_f7():
    recs = enumerate_lines(fermat(F7))
    assert len(recs) == 27
    assert all(r.def_degree == 1 and r.hyperbolic for r in recs)


def test_enumerate_fermat_f5():
    recs = enumerate_lines(fermat(prime_field(5)))
    degs = sorted(r.def_degree for r in recs)
    assert degs == [1] * 3 + [2] * 12
    assert all(r.hyperbolic for r in recs)


def test_enumerate_rejects_singular_and_reports_incomplete():
    with pytest.raises(SingularSurface):
        enumerate_lines(CubicSurface.from_mapping(F7, {(2, 0, 0, 1): 1, (0, 3, 0, 0): 1, (0, 0, 0, 3): 1}))
    with pytest.raises(IncompleteEnumeration) as info:
        enumerate_lines(fermat(prime_field(5)), a_max=1)
    assert len(info.value.found) == 3 and info.value.complete_degree == 1


def test_records_lie_on_surface_and_are_canonical():
    rng = random.Random(4)
    F = prime_field(5)
    for _ in range(5):
        f = random_smooth_cubic(F, rng)
        recs = enumerate_lines(f)
        assert sum(r.def_degree for r in recs) == 27
        for r in recs:
            assert all(c.is_zero() for c in restrict_cubic(f, r.line))
            key, d = canonical_orbit_key(r.line, F)
            assert (key, d) == (r.orbit_key, r.def_degree)
            assert r.hyperbolic == is_square(r.type_class)
            # the orbit is exactly def_degree distinct conjugates
            assert len(frobenius_orbit(r.field, r.line.plucker, F.degree_over_prime)) == r.def_degree


def test_orbit_keys():
    F5 = prime_field(5)
    F25 = finite_field(5, 2)
    f = fermat(F5)
    recs = enumerate_lines(f)
    rational = next(r for r in recs if r.def_degree == 1)
    assert rational.orbit_key == rational.line.plucker
    quad = next(r for r in recs if r.def_degree == 2)
    L = quad.field
    conj = LineSubspace.from_raw(L, *[[L.frobenius(x, 1) for x in row] for row in quad.line.basis])
    assert conj.plucker != quad.line.plucker
    assert canonical_orbit_key(conj, F5) == canonical_orbit_key(quad.line, F5)
    assert make_record(f, conj, F5) == quad
    assert L == F25


def test_frobenius_equivariance_of_records():
    rng = random.Random(7)
    F = prime_field(3)
    for _ in range(4):
        f = random_smooth_cubic(F, rng)
        for r in enumerate_lines(f):
            L = r.field
            for k in range(1, r.def_degree):
                rows = [[L.frobenius(x, k) for x in row] for row in r.line.basis]
                assert make_record(f, LineSubspace.from_raw(L, *rows), F) == r


def _record_set(recs, upto=None):
    return {
        (r.def_degree, tuple(r.orbit_key), r.type_class.value, r.hyperbolic)
        for r in recs
        if upto is None or r.def_degree <= upto
    }


def _run(f, strategy, a_max):
    try:
        return enumerate_lines(f, strategy, a_max=a_max, budget=10 ** 9)
    except IncompleteEnumeration as exc:
        return exc.found


@pytest.mark.parametrize("p", [3, 5])
def test_strategy_equivalence_small_degrees(p):
    rng = random.Random(100 + p)
    F = prime_field(p)
    for _ in range(25):
        f = random_smooth_cubic(F, rng)
        a = _run(f, "eliminant", 3)
        b = _run(f, "brute", 3)
        assert _record_set(a) == _record_set(b)


def test_known_q_line_sets():
    recs = fermat_lines_over_q(fermat(Q))
    assert sorted(r.def_degree for r in recs) == [1] * 3 + [2] * 12
    assert all(r.hyperbolic for r in recs)
    recs = clebsch_lines_over_q(clebsch(Q))
    assert sorted(r.def_degree for r in recs) == [1] * 15 + [2] * 6
    assert all(r.hyperbolic for r in recs if r.def_degree == 1)
    assert not any(r.hyperbolic for r in recs if r.def_degree == 2)
    K, lines = clebsch_lines_geometric()
    assert len(lines) == 27
    for S in lines:
        assert all(c.is_zero() for c in restrict_cubic(clebsch(Q), S))


def test_plucker_pairs_order():
    assert PLUCKER_PAIRS == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
