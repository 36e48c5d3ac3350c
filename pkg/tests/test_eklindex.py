from __future__ import annotations

import random

import pytest

from gwlines.eklindex import DEGREVLEX, LEX, PolySystem, ekl_form, groebner_basis, local_algebra, socle_element
from gwlines.eklindex.groebner import Quotient, fglm, groebner_dicts, normal_form, order_key, standard_monomials
from gwlines.eklindex.local import simple_zero_index
from gwlines.errors import NotIsolated, NotSimpleZero, ZeroNotUnique
from gwlines.exactfield import Poly, finite_field, is_square, prime_field, rationals
from gwlines.quadforms import GWClass, gw_equal, gw_sum, scharlau_trace

Q = rationals()
F7 = prime_field(7)


def ring(F, names="xy"):
    return Poly.gens(F, tuple(names))


def test_groebner_examples():
    x, y = ring(Q)
    gb = groebner_basis([x, y], LEX)
    assert sorted(map(repr, gb)) == sorted(map(repr, [x, y]))
    (t,) = ring(Q, "x")
    gb = groebner_basis([t * t - 1])
    assert len(gb) == 1 and gb[0] == t * t - 1
    gb = groebner_basis([x * x - y, y * y], DEGREVLEX)
    leads = [max(g.terms, key=order_key(DEGREVLEX)) for g in gb]
    assert sorted(standard_monomials(leads, 2)) == sorted([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert groebner_basis([x - x, y - y]) == []


def _in_ideal(F, f, gb, order):
    key = order_key(order)
    basis = [(max(g.terms, key=key), g.terms) for g in gb]
    return not normal_form(F, f.terms, basis, key)


@pytest.mark.parametrize("F", [Q, F7])
def test_groebner_contains_generators_and_spolys_reduce(F):
    rng = random.Random(3)
    x, y, z = ring(F, "xyz")
    mons = [x, y, z, x * y, y * z, x * z, x * x, y * y, z * z, x * y * z]
    for order in (DEGREVLEX, LEX):
        for _ in range(10):
            gens = []
            for _ in range(3):
                p = Poly(F, ("x", "y", "z"), {})
                for m in rng.sample(mons, 3):
                    p = p + m * rng.randint(1, 6)
                gens.append(p)
            gb = groebner_basis(gens, order)
            for g in gens:
                assert _in_ideal(F, g, gb, order)
            key = order_key(order)
            # Buchberger criterion: every S-polynomial reduces to zero
            lead = [(max(g.terms, key=key), g) for g in gb]
            for i in range(len(lead)):
                for j in range(i + 1, len(lead)):
                    (a, f), (b, g) = lead[i], lead[j]
                    lcm = tuple(max(u, v) for u, v in zip(a, b))
                    fa = Poly(F, f.vars, {tuple(l - u for l, u in zip(lcm, a)): F.inv(f.terms[a])})
                    gb_ = Poly(F, g.vars, {tuple(l - u for l, u in zip(lcm, b)): F.inv(g.terms[b])})
                    assert _in_ideal(F, fa * f - gb_ * g, gb, order)


def test_fglm_matches_direct_lex():
    F = prime_field(5)
    rng = random.Random(8)
    x, y, z = ring(F, "xyz")
    done = 0
    while done < 10:
        gens = [x * x + rng.randint(0, 4) * y + rng.randint(0, 4), y * y + rng.randint(0, 4) * z + x,
                z * z + rng.randint(0, 4) * x * y + rng.randint(1, 4)]
        gb = groebner_dicts(F, [g.terms for g in gens], DEGREVLEX)
        if Quotient(F, 3, gb, DEGREVLEX).monomials is None:
            continue
        lex = fglm(F, 3, gb)
        direct = groebner_dicts(F, [g.terms for g in gens], LEX)
        assert sorted(lex, key=lambda t: t[0]) == sorted(direct, key=lambda t: t[0])
        done += 1


def test_local_algebra_examples():
    (x,) = ring(Q, "x")
    A = local_algebra(PolySystem.of([-x * x]))
    assert A.dim == 2 and sorted(A.basis) == [(0,), (1,)]
    x, y = ring(Q)
    assert local_algebra(PolySystem.of([x, y])).basis == [(0, 0)]
    A = local_algebra(PolySystem.of([x * x - y, y * y]))
    assert A.dim == 4 and sorted(A.basis) == sorted([(0, 0), (1, 0), (0, 1), (1, 1)])
    # eliminating y first gives the basis 1, x, x^2, x^3 (y = x^2 in the quotient)
    y2, x2 = ring(Q, "yx")
    gb = groebner_basis([x2 * x2 - y2, y2 * y2], LEX)
    leads = [max(g.terms, key=order_key(LEX)) for g in gb]
    assert sorted(standard_monomials(leads, 2)) == [(0, 0), (0, 1), (0, 2), (0, 3)]


def test_local_algebra_errors():
    x, y = ring(Q)
    with pytest.raises(NotIsolated):
        local_algebra(PolySystem.of([x * y, x * y]))
    with pytest.raises(ZeroNotUnique):
        local_algebra(PolySystem.of([x * x - x, y]))
    with pytest.raises(ValueError):
        PolySystem.of([x + 1, y])


def test_socle_examples():
    x, y = ring(Q)
    sys = PolySystem.of([x, y])
    assert socle_element(sys, local_algebra(sys)) == [Q.one]
    (t,) = ring(Q, "x")
    for polys, expected in (([-t * t], {(1,): -1}), ([t ** 3], {(2,): 1})):
        sys = PolySystem.of(polys)
        A = local_algebra(sys)
        E = socle_element(sys, A)
        assert E == A.vector({e: Q(c).value for e, c in expected.items()})


def test_ekl_examples():
    for F in (Q, F7):
        (x,) = ring(F, "x")
        assert gw_equal(ekl_form(PolySystem.of([x])).cls, GWClass(F, [1]))
        for n in (1, 2, 3):
            c = ekl_form(PolySystem.of([-(x ** (2 * n))])).cls
            assert c.rank == 2 * n
            assert gw_equal(c, gw_sum(F, [(n, 1), (n, -1)]))
    (x,) = ring(Q, "x")
    c = ekl_form(PolySystem.of([x ** 3])).cls
    assert gw_equal(c, gw_sum(Q, [(2, 1), (1, -1)]))


def _random_systems(F, count, seed):
    """Seeded 2-variable systems with an isolated zero at the origin, dim >= 2."""
    rng = random.Random(seed)
    x, y = ring(F)
    mons = [x, y, x * x, x * y, y * y, x ** 3, x * x * y, x * y * y, y ** 3]
    out = []
    while len(out) < count:
        polys = []
        for _ in range(2):
            p = Poly(F, ("x", "y"), {})
            for m in rng.sample(mons, rng.randint(1, 3)):
                p = p + m * rng.randint(1, 6)
            polys.append(p)
        if not all(polys):
            continue
        sys = PolySystem.of(polys)
        try:
            A = local_algebra(sys)
        except (NotIsolated, ZeroNotUnique):
            continue
        if A.dim >= 2:
            out.append(sys)
    return out


@pytest.mark.parametrize("F", [Q, F7])
def test_eta_independence(F):
    rng = random.Random(11)
    for sys in _random_systems(F, 4, seed=1):
        base = ekl_form(sys)
        E = base.socle
        k = next(i for i, c in enumerate(E) if not F.is_zero(c))
        for _ in range(50):
            eta = [F.from_int(rng.randint(-9, 9)) for _ in E]
            # rescale one coordinate so that eta(E) = 1
            rest = F.zero
            for i, (a, b) in enumerate(zip(eta, E)):
                if i != k:
                    rest = F.add(rest, F.mul(a, b))
            eta[k] = F.div(F.sub(F.one, rest), E[k])
            assert gw_equal(ekl_form(sys, eta=eta).cls, base.cls)


@pytest.mark.parametrize("F", [Q, F7])
def test_socle_rule_independence(F):
    for sys in _random_systems(F, 8, seed=2):
        a = ekl_form(sys, rule="least")
        b = ekl_form(sys, rule="greatest")
        assert gw_equal(a.cls, b.cls)
        assert a.cls.rank == a.algebra.dim


@pytest.mark.parametrize("F", [Q, F7])
def test_simple_zero_is_jacobian(F):
    rng = random.Random(4)
    x, y = ring(F)
    for _ in range(30):
        a, b, c, d = (F(rng.randint(-5, 5)) for _ in range(4))
        J = a * d - b * c
        if J.is_zero():
            continue
        f1 = x * a + y * b + x * y * rng.randint(0, 3) + y ** 3 * rng.randint(0, 3)
        f2 = x * c + y * d + x * x * rng.randint(0, 3)
        try:
            form = ekl_form(PolySystem.of([f1, f2]))
        except ZeroNotUnique:
            # other zeros away from the origin: compare on the linear part instead
            form = ekl_form(PolySystem.of([x * a + y * b, x * c + y * d]))
        assert form.dim == 1
        assert gw_equal(form.cls, GWClass(F, [J]))


@pytest.mark.parametrize("F", [Q, F7])
def test_linear_change_equivariance(F):
    rng = random.Random(6)
    x, y = ring(F)
    for sys in _random_systems(F, 5, seed=3):
        while True:
            M = [[F(rng.randint(-4, 4)) for _ in range(2)] for _ in range(2)]
            det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
            if not det.is_zero():
                break
        images = [x * M[0][0] + y * M[0][1], x * M[1][0] + y * M[1][1]]
        moved = PolySystem.of([p.substitute(images) for p in sys.polys])
        assert gw_equal(ekl_form(moved).cls, ekl_form(sys).cls.scaled(det))


def test_simple_zero_index():
    assert simple_zero_index(Q(1), Q) == GWClass(Q, [1])
    assert simple_zero_index(Q(-3), Q) == GWClass(Q, [-3])
    F3, F9 = prime_field(3), finite_field(3, 2)
    c = simple_zero_index(F9(1), F3)
    assert c.rank == 2
    assert gw_equal(c, scharlau_trace(F9(1), F3))
    d = c.entries[0] * c.entries[1]
    assert not is_square(d)
    with pytest.raises(NotSimpleZero):
        simple_zero_index(Q(0), Q)
