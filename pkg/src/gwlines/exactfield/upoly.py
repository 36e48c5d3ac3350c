"""Dense univariate polynomials over a field object.

Polynomials are plain lists of raw field values, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Every function takes the field
as first argument and only uses its raw-value methods, so the same code serves
prime fields, extension fields, Q and number fields.  Factoring and root
finding need a finite field of odd characteristic.
"""
from __future__ import annotations

import random


def trim(F, a):
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def is_one(F, a):
    return len(a) == 1 and a[0] == F.one


def add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def sub(F, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.sub(x, y))
    return trim(F, out)


def scale(F, a, c):
    if F.is_zero(c):
        return []
    return trim(F, [F.mul(x, c) for x in a])


def mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not F.is_zero(y):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    if len(a) <= db:
        return [], trim(F, a)
    q = [F.zero] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lead)
        q[k - db] = c
        for i, y in enumerate(b):
            if not F.is_zero(y):
                a[k - db + i] = F.sub(a[k - db + i], F.mul(c, y))
    return trim(F, q), trim(F, a[:db])


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a:
        return []
    if a[-1] == F.one:
        return list(a)
    return scale(F, a, F.inv(a[-1]))


def gcd(F, a, b):
    a, b = trim(F, a), trim(F, b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def xgcd(F, a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = trim(F, a), trim(F, b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return [], s0, t0
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def powmod(F, a, e, m):
    result = [F.one]
    base = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = mod(F, mul(F, base, base), m)
    return mod(F, result, m)


def deriv(F, a):
    return trim(F, [F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def evaluate(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def exquo(F, a, b):
    q, r = divmod_(F, a, b)
    assert not r, "inexact polynomial division"
    return q


def frobenius_power_x(F, g):
    """X^|F| mod g, via |F| = p^N and N successive p-th powers."""
    h = mod(F, [F.zero, F.one], g)
    for _ in range(F.degree_over_prime):
        h = powmod(F, h, F.p, g)
    return h


def _pth_root(F, f):
    # f(X) = h(X^p); coefficients of h are p-th roots
    p = F.p
    return trim(F, [F.pth_root(f[i]) for i in range(0, len(f), p)])


def squarefree_decomposition(F, f):
    """Monic f -> list of (squarefree factor, multiplicity) (Yun, char p aware)."""
    f = monic(F, f)
    if len(f) <= 1:
        return []
    out = []
    fp = deriv(F, f)
    if not fp:
        return [(g, j * F.p) for g, j in squarefree_decomposition(F, _pth_root(F, f))]
    c = gcd(F, f, fp)
    w = exquo(F, f, c)
    i = 1
    while len(w) > 1:
        y = gcd(F, w, c)
        fac = exquo(F, w, y)
        if len(fac) > 1:
            out.append((fac, i))
        i += 1
        w = y
        c = exquo(F, c, y)
    if len(c) > 1:
        out.extend((g, j * F.p) for g, j in squarefree_decomposition(F, _pth_root(F, c)))
    return out


def distinct_degree(F, f):
    """Squarefree monic f -> list of (product of all degree-d factors, d)."""
    out = []
    x = [F.zero, F.one]
    h = mod(F, x, f)
    rest = list(f)
    d = 0
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        for _ in range(F.degree_over_prime):
            h = powmod(F, h, F.p, rest)
        g = gcd(F, rest, sub(F, h, x))
        if len(g) > 1:
            out.append((g, d))
            rest = exquo(F, rest, g)
            h = mod(F, h, rest)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _random_poly(F, deg, rng):
    return trim(F, [F.random(rng) for _ in range(deg)] + [F.one])


def equal_degree(F, f, d, rng):
    """Split a squarefree monic product of degree-d irreducibles (Cantor-Zassenhaus)."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (F.order ** d - 1) // 2
    while True:
        a = _random_poly(F, rng.randrange(1, n), rng)
        g = gcd(F, f, a)
        if 1 < len(g) < len(f):
            break
        b = sub(F, powmod(F, a, e, f), [F.one])
        g = gcd(F, f, b)
        if 1 < len(g) < len(f):
            break
    return equal_degree(F, g, d, rng) + equal_degree(F, exquo(F, f, g), d, rng)


def sort_key(F, a):
    return (len(a), tuple(F.sort_key(c) for c in a))


def factor(F, f, seed=0):
    """Factor f over a finite field: returns (leading unit, [(monic irreducible, mult)])."""
    f = trim(F, f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    lead = f[-1]
    out = []
    for sqf, mult in squarefree_decomposition(F, f):
        for part, d in distinct_degree(F, sqf):
            for g in equal_degree(F, part, d, rng):
                out.append((g, mult))
    out.sort(key=lambda gm: (sort_key(F, gm[0]), gm[1]))
    return lead, out


def roots(F, f, seed=0):
    """Distinct roots of f lying in the finite field F, in representation order."""
    f = monic(F, trim(F, f))
    if len(f) <= 1:
        return []
    x = [F.zero, F.one]
    g = gcd(F, f, sub(F, frobenius_power_x(F, f), x))
    if len(g) <= 1:
        return []
    rng = random.Random(seed)
    out = [F.neg(h[0]) for h in equal_degree(F, g, 1, rng)]
    out.sort(key=F.sort_key)
    return out


def one_root(F, f, seed=0):
    """Some root of f in F (None if f has none); cheaper than ``roots``."""
    f = monic(F, trim(F, f))
    x = [F.zero, F.one]
    g = gcd(F, f, sub(F, frobenius_power_x(F, f), x))
    if len(g) <= 1:
        return None
    rng = random.Random(seed)
    e = (F.order - 1) // 2
    while len(g) > 2:
        a = [F.random(rng), F.one]
        h = gcd(F, g, sub(F, powmod(F, a, e, g), [F.one]))
        if 1 < len(h) < len(g):
            g = h if len(h) <= len(g) - len(h) + 1 else exquo(F, g, h)
    return F.neg(g[0])


def is_irreducible(F, f):
    """Rabin's test over a finite field."""
    f = monic(F, trim(F, f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [F.zero, F.one]

    def x_q_power(k):
        h = mod(F, x, f)
        for _ in range(k * F.degree_over_prime):
            h = powmod(F, h, F.p, f)
        return h

    if sub(F, x_q_power(n), mod(F, x, f)):
        return False
    for r in _prime_factors(n):
        if len(gcd(F, f, sub(F, x_q_power(n // r), x))) > 1:
            return False
    return True


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
