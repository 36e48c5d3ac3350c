"""Exact fields: F_p, F_{p^n}, Q and simple number fields Q[t]/(m).

A field object owns the arithmetic on *raw* values (ints, tuples of ints,
Fractions, tuples of Fractions).  ``FieldElem`` wraps a raw value together with
its field for user-facing code; the heavy kernels (polynomials, Groebner bases,
enumeration) work on raw values directly.
"""
from __future__ import annotations

import itertools
import numbers
from fractions import Fraction
from math import isqrt

from ..errors import (
    FieldMismatch,
    InvalidField,
    NoEmbedding,
    NoExtension,
    UnsupportedField,
    ZeroArgument,
)
from . import upoly

PRIME = "prime-finite"
EXTENSION = "extension-finite"
RATIONAL = "rational"
NUMBER = "number-field"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13):
        if n % d == 0:
            return n == d
    d = 17
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def parse_fraction(s) -> Fraction:
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot read {s!r} as a rational")


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class Field:
    """Common interface.  Subclasses set kind, p, n, modulus, zero, one."""

    kind: str
    p: int | None
    n: int
    modulus: tuple | None
    is_finite = False
    char = 0

    def _key(self):
        return (self.kind, self.p, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __call__(self, value) -> FieldElem:
        return FieldElem(self, self.coerce(value))

    def elem(self, raw) -> FieldElem:
        return FieldElem(self, raw)

    def coerce(self, value):
        if isinstance(value, FieldElem):
            if value.field == self:
                return value.value
            if value.field.kind in (PRIME, RATIONAL) and not value.field.is_finite:
                return self.from_fraction(value.value)
            if value.field.kind == PRIME and self.char == value.field.p:
                return self.from_int(value.value)
            raise FieldMismatch(f"{value.field} element used in {self}")
        if isinstance(value, numbers.Integral):
            return self.from_int(int(value))
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        if isinstance(value, str):
            return self.from_fraction(parse_fraction(value))
        if isinstance(value, (list, tuple)):
            return self.from_vector(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def from_vector(self, seq):
        raise TypeError(f"{self} elements are not vectors")

    # generic helpers on raw values
    def is_zero(self, a) -> bool:
        return a == self.zero

    def neg(self, a):
        return self.sub(self.zero, a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def from_fraction(self, x: Fraction):
        x = Fraction(x)
        return self.div(self.from_int(x.numerator), self.from_int(x.denominator))

    def gen(self) -> FieldElem:
        return self.elem(self.gen_raw())

    def desc_json(self) -> dict:
        mod = None
        if self.modulus is not None:
            mod = [self._coef_json(c) for c in self.modulus]
        return {"kind": self.kind, "p": self.p, "n": self.n, "modulus": mod}

    def __repr__(self):
        return self.name()


class PrimeField(Field):
    kind = PRIME
    is_finite = True

    def __init__(self, p: int):
        self.p = self.char = p
        self.n = 1
        self.degree_over_prime = 1
        self.order = p
        self.modulus = None
        self.zero, self.one = 0, 1
        self._nonsquare = None

    def name(self):
        return f"F{self.p}"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, k):
        return k % self.p

    def from_vector(self, seq):
        if len(seq) == 1:
            return self.coerce(seq[0])
        raise TypeError("prime-field element given as a vector")

    def sort_key(self, a):
        return a

    def elements(self):
        return range(self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def frobenius(self, a, k=1):
        return a

    def pth_root(self, a):
        return a

    def gen_raw(self):
        return 1

    def to_json(self, a):
        return str(a)

    def _coef_json(self, c):
        return str(c)

    def from_json(self, obj):
        return self.coerce(obj)

    def format(self, a):
        return str(a)


def _fp_reduction_table(p, modulus):
    """Rows t^k mod m for k = n .. 2n-2, as int lists."""
    n = len(modulus) - 1
    rows = []
    cur = [(-c) % p for c in modulus[:n]]  # t^n
    for _ in range(n, 2 * n - 1):
        rows.append(cur)
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            nxt = [(x - top * c) % p for x, c in zip(nxt, modulus[:n])]
        cur = nxt
    return rows


class ExtensionField(Field):
    kind = EXTENSION
    is_finite = True

    def __init__(self, p: int, modulus: tuple):
        self.p = self.char = p
        self.modulus = tuple(modulus)
        self.n = len(modulus) - 1
        self.degree_over_prime = self.n
        self.order = p ** self.n
        self.zero = (0,) * self.n
        self.one = (1,) + (0,) * (self.n - 1)
        self._red = _fp_reduction_table(p, self.modulus)
        self._prime = prime_field(p)
        # images of t^i under x -> x^p, for a linear Frobenius
        t = (0, 1) + (0,) * (self.n - 2)
        tp = self._pow_raw(t, p)
        imgs = [self.one]
        for _ in range(1, self.n):
            imgs.append(self.mul(imgs[-1], tp))
        self._frob_imgs = imgs
        self._nonsquare = None

    def name(self):
        return f"F{self.p}^{self.n}"

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        n, p = self.n, self.p
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k, row in enumerate(self._red):
            c = prod[n + k] % p
            if c:
                for i, r in enumerate(row):
                    out[i] += c * r
        return tuple(x % p for x in out)

    def scale(self, a, c):
        p = self.p
        return tuple(x * c % p for x in a)

    def _pow_raw(self, a, e):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        F = self._prime
        g, s, _ = upoly.xgcd(F, upoly.trim(F, a), list(self.modulus))
        s = list(s) + [0] * (self.n - len(s))
        return tuple(s)

    def is_zero(self, a):
        return not any(a)

    def from_int(self, k):
        return (k % self.p,) + (0,) * (self.n - 1)

    def from_vector(self, seq):
        if len(seq) > self.n:
            raise ValueError(f"vector of length {len(seq)} for {self}")
        vals = [Fraction(parse_fraction(c)) for c in seq]
        vals += [Fraction(0)] * (self.n - len(vals))
        out = []
        for v in vals:
            out.append(v.numerator * pow(v.denominator, -1, self.p) % self.p)
        return tuple(out)

    def sort_key(self, a):
        return a

    def elements(self):
        return itertools.product(range(self.p), repeat=self.n)

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.n))

    def frobenius(self, a, k=1):
        """a -> a^(p^k)."""
        p = self.p
        for _ in range(k % self.n):
            out = [0] * self.n
            for c, img in zip(a, self._frob_imgs):
                if c:
                    for i, v in enumerate(img):
                        out[i] += c * v
            a = tuple(x % p for x in out)
        return a

    def pth_root(self, a):
        return self.frobenius(a, self.n - 1)

    def gen_raw(self):
        return (0, 1) + (0,) * (self.n - 2)

    def to_json(self, a):
        return [str(c) for c in a]

    def _coef_json(self, c):
        return str(c)

    def from_json(self, obj):
        return self.coerce(obj)

    def format(self, a):
        terms = []
        for i, c in enumerate(a):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + ("*" if coef and mono else "") + mono)
        return " + ".join(terms) if terms else "0"


class RationalField(Field):
    kind = RATIONAL

    def __init__(self):
        self.p = None
        self.n = 1
        self.modulus = None
        self.zero, self.one = Fraction(0), Fraction(1)

    def name(self):
        return "Q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def pow(self, a, e):
        return a ** e

    def from_int(self, k):
        return Fraction(k)

    def from_fraction(self, x):
        return Fraction(x)

    def from_vector(self, seq):
        if len(seq) == 1:
            return self.coerce(seq[0])
        raise TypeError("rational given as a vector")

    def sort_key(self, a):
        return a

    def random(self, rng):
        return Fraction(rng.randint(-30, 30), rng.randint(1, 12))

    def gen_raw(self):
        return Fraction(1)

    def to_json(self, a):
        return format_fraction(a)

    def from_json(self, obj):
        return self.coerce(obj)

    def format(self, a):
        return str(a)


class NumberField(Field):
    """Q[t]/(m) with m monic irreducible over Q of degree 2..4."""

    kind = NUMBER

    def __init__(self, modulus: tuple):
        self.p = None
        self.modulus = tuple(Fraction(c) for c in modulus)
        self.n = len(modulus) - 1
        self.zero = (Fraction(0),) * self.n
        self.one = (Fraction(1),) + (Fraction(0),) * (self.n - 1)
        n = self.n
        rows = []
        cur = [-c for c in self.modulus[:n]]
        for _ in range(n, 2 * n - 1):
            rows.append(cur)
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            if top:
                nxt = [x - top * c for x, c in zip(nxt, self.modulus[:n])]
            cur = nxt
        self._red = rows

    def name(self):
        return "Q[t]/(" + _format_qpoly(self.modulus) + ")"

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        n = self.n
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k, row in enumerate(self._red):
            c = prod[n + k]
            if c:
                for i, r in enumerate(row):
                    out[i] += c * r
        return tuple(out)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        Q = rationals()
        g, s, _ = upoly.xgcd(Q, upoly.trim(Q, a), list(self.modulus))
        return tuple(list(s) + [Fraction(0)] * (self.n - len(s)))

    def is_zero(self, a):
        return not any(a)

    def from_int(self, k):
        return (Fraction(k),) + (Fraction(0),) * (self.n - 1)

    def from_fraction(self, x):
        return (Fraction(x),) + (Fraction(0),) * (self.n - 1)

    def from_vector(self, seq):
        if len(seq) > self.n:
            raise ValueError(f"vector of length {len(seq)} for {self}")
        vals = [parse_fraction(c) for c in seq]
        return tuple(vals + [Fraction(0)] * (self.n - len(vals)))

    def sort_key(self, a):
        return a

    def random(self, rng):
        Q = rationals()
        return tuple(Q.random(rng) for _ in range(self.n))

    def gen_raw(self):
        return (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.n - 2)

    def mult_matrix(self, a):
        """Matrix of y -> a*y in the power basis (columns are images of t^j)."""
        cols = []
        b = self.one
        t = self.gen_raw()
        for _ in range(self.n):
            cols.append(self.mul(a, b))
            b = self.mul(b, t)
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    def trace(self, a):
        m = self.mult_matrix(a)
        return sum(m[i][i] for i in range(self.n))

    def charpoly(self, a):
        """Characteristic polynomial of multiplication by a, low-to-high Fractions."""
        import sympy

        M = sympy.Matrix(self.mult_matrix(a))
        T = sympy.Symbol("T")
        poly = sympy.Poly(M.charpoly(T).as_expr(), T, domain="QQ")
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        return coeffs

    def to_json(self, a):
        return [format_fraction(c) for c in a]

    def _coef_json(self, c):
        return format_fraction(c)

    def from_json(self, obj):
        return self.coerce(obj)

    def format(self, a):
        terms = []
        for i, c in enumerate(a):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(terms) if terms else "0"


def _format_qpoly(coeffs):
    terms = []
    for i, c in reversed(list(enumerate(coeffs))):
        if c:
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(f"{c}" + ("*" + mono if mono else "") if c != 1 or not mono else mono)
    return " + ".join(terms)


class FieldElem:
    """Immutable element of a field, with the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} vs {self.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElem(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def to_json(self):
        return self.field.to_json(self.value)

    def __repr__(self):
        return f"{self.field.format(self.value)} in {self.field.name()}"

    def __str__(self):
        return self.field.format(self.value)


# ---------------------------------------------------------------- construction

_CACHE: dict = {}


def prime_field(p: int) -> PrimeField:
    key = (PRIME, p)
    F = _CACHE.get(key)
    if F is None:
        if not is_prime(p) or p == 2:
            raise InvalidField(f"p = {p} must be an odd prime")
        F = _CACHE.setdefault(key, PrimeField(p))
    return F


def rationals() -> RationalField:
    return _CACHE.setdefault((RATIONAL,), RationalField())


def least_irreducible(p: int, n: int) -> tuple:
    """Lexicographically least monic irreducible of degree n over F_p (low-to-high)."""
    Fp = prime_field(p)
    for low in itertools.product(range(p), repeat=n):
        if n > 1 and low[0] == 0:
            continue
        f = list(low) + [1]
        if upoly.is_irreducible(Fp, f):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


def finite_field(p: int, n: int = 1, modulus=None):
    """F_{p^n}; the canonical modulus is used unless one is supplied."""
    Fp = prime_field(p)
    if n < 1:
        raise InvalidField("extension degree must be at least 1")
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) - 1 != n or modulus[-1] != 1:
            raise InvalidField("modulus must be monic of degree n")
        if not upoly.is_irreducible(Fp, list(modulus)):
            raise InvalidField("modulus is reducible")
        if n == 1:
            return Fp
    elif n == 1:
        return Fp
    else:
        key = (EXTENSION, p, n, None)
        if key in _CACHE:
            return _CACHE[key]
        modulus = least_irreducible(p, n)
        F = finite_field(p, n, modulus)
        return _CACHE.setdefault(key, F)
    key = (EXTENSION, p, n, modulus)
    F = _CACHE.get(key)
    if F is None:
        F = _CACHE.setdefault(key, ExtensionField(p, modulus))
    return F


def number_field(modulus) -> Field:
    modulus = tuple(parse_fraction(c) for c in modulus)
    if modulus[-1] != 1:
        raise InvalidField("modulus must be monic")
    n = len(modulus) - 1
    if n == 1:
        return rationals()
    if not 2 <= n <= 4:
        raise InvalidField("number fields are limited to degree 2..4")
    key = (NUMBER, modulus)
    F = _CACHE.get(key)
    if F is None:
        import sympy

        t = sympy.Symbol("t")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(modulus))
        if not sympy.Poly(expr, t, domain="QQ").is_irreducible:
            raise InvalidField("modulus is reducible over Q")
        F = _CACHE.setdefault(key, NumberField(modulus))
    return F


def field_make(kind: str, p: int | None = None, n: int = 1, modulus=None) -> Field:
    """Build a field from a descriptor request."""
    if kind == PRIME:
        if p is None:
            raise InvalidField("prime field needs p")
        return prime_field(p)
    if kind == EXTENSION:
        if p is None:
            raise InvalidField("extension field needs p")
        prime_field(p)
        if modulus is not None:
            modulus = [int(parse_fraction(c)) for c in modulus]
        return finite_field(p, n, modulus)
    if kind == RATIONAL:
        return rationals()
    if kind == NUMBER:
        if modulus is None:
            raise InvalidField("number field needs a modulus")
        return number_field(modulus)
    raise InvalidField(f"unknown field kind {kind!r}")


def field_from_json(obj) -> Field:
    return field_make(obj["kind"], obj.get("p"), obj.get("n", 1), obj.get("modulus"))


# ---------------------------------------------------------------- squares

def _require_nonzero(x: FieldElem):
    if x.is_zero():
        raise ZeroArgument("argument must be nonzero")


def _is_square_raw_finite(F, a) -> bool:
    return F.pow(a, (F.order - 1) // 2) == F.one


def _is_square_rational(q: Fraction) -> bool:
    m = q.numerator * q.denominator
    return m > 0 and isqrt(m) ** 2 == m


def _is_square_number_field(F: NumberField, a) -> bool:
    # K[T]/(T^2 - a) is a field (a non-square) iff the characteristic
    # polynomial over Q of a primitive element T + c*t is irreducible,
    # provided that polynomial is squarefree.
    import sympy

    t, T = sympy.symbols("t T")
    m = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(F.modulus))
    av = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(a))
    for c in itertools.count():
        h = sympy.expand((T - c * t) ** 2 - av)
        r = sympy.Poly(sympy.resultant(m, h, t), T, domain="QQ")
        if sympy.degree(sympy.gcd(r, r.diff(T)), T) == 0:
            return not r.is_irreducible


def is_square(x: FieldElem) -> bool:
    _require_nonzero(x)
    F = x.field
    if F.is_finite:
        return _is_square_raw_finite(F, x.value)
    if F.kind == RATIONAL:
        return _is_square_rational(x.value)
    return _is_square_number_field(F, x.value)


def canonical_nonsquare(F) -> FieldElem:
    if not F.is_finite:
        raise UnsupportedField("canonical non-square only exists for finite fields")
    if F._nonsquare is None:
        for a in F.elements():
            if not F.is_zero(a) and not _is_square_raw_finite(F, a):
                F._nonsquare = a
                break
    return F.elem(F._nonsquare)


def squarefree_part(n: int) -> int:
    import sympy

    if n == 0:
        raise ZeroArgument("zero has no square class")
    out = -1 if n < 0 else 1
    for prime, e in sympy.factorint(abs(n)).items():
        if e % 2:
            out *= int(prime)
    return out


def square_class(x: FieldElem) -> FieldElem:
    """Canonical representative of x in F*/(F*)^2."""
    _require_nonzero(x)
    F = x.field
    if F.is_finite:
        return F.elem(F.one) if _is_square_raw_finite(F, x.value) else canonical_nonsquare(F)
    if F.kind == RATIONAL:
        q = x.value
        return F(squarefree_part(q.numerator * q.denominator))
    return F(1) if is_square(x) else x


# ---------------------------------------------------------------- embeddings and traces

_EMBED: dict = {}


def _embedding_image(src: Field, dst: Field):
    """Raw image in dst of the generator of src."""
    key = (src, dst)
    img = _EMBED.get(key)
    if img is None:
        mod = [dst.from_int(c) for c in src.modulus]
        rts = upoly.roots(dst, mod)
        if not rts:
            raise NoEmbedding(f"{src} does not embed in {dst}")
        img = _EMBED.setdefault(key, rts[0])
    return img


def can_embed(src: Field, dst: Field) -> bool:
    if src == dst:
        return True
    if src.kind == RATIONAL:
        return not dst.is_finite
    if src.is_finite and dst.is_finite:
        return src.p == dst.p and dst.degree_over_prime % src.degree_over_prime == 0
    return False


def embed_raw(src: Field, dst: Field, a):
    if src == dst:
        return a
    if not can_embed(src, dst):
        raise NoEmbedding(f"{src} does not embed in {dst}")
    if src.kind == RATIONAL:
        return dst.from_fraction(a)
    if src.kind == PRIME:
        return dst.from_int(a)
    g = _embedding_image(src, dst)
    acc = dst.zero
    for c in reversed(a):
        acc = dst.add(dst.mul(acc, g), dst.from_int(c))
    return acc


def embed(x: FieldElem, target: Field) -> FieldElem:
    """Image of x under the fixed embedding of its field into target."""
    return target.elem(embed_raw(x.field, target, x.value))


def restrict_raw(sub: Field, dst: Field, a):
    """Preimage in sub of a raw dst value lying in the embedded copy of sub."""
    if sub == dst:
        return a
    if sub.kind == RATIONAL:
        if any(a[1:]):
            raise NoEmbedding("value is not rational")
        return a[0]
    if sub.kind == PRIME:
        if dst.kind == EXTENSION and any(a[1:]):
            raise NoEmbedding("value is not in the prime field")
        return a if dst.kind == PRIME else a[0]
    # linear algebra over F_p: a = sum c_j g^j
    p = dst.p
    g = _embedding_image(sub, dst)
    cols = []
    cur = dst.one
    for _ in range(sub.n):
        cols.append(cur)
        cur = dst.mul(cur, g)
    sol = _solve_mod_p(p, [[cols[j][i] for j in range(sub.n)] for i in range(dst.n)], list(a))
    if sol is None:
        raise NoEmbedding("value is not in the subfield")
    return tuple(sol)


def _solve_mod_p(p, A, b):
    rows = [list(r) + [v] for r, v in zip(A, b)]
    ncols = len(A[0])
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] % p for row in rows[r:]):
        return None
    sol = [0] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][-1]
    return sol


def extension_degree(L: Field, k: Field) -> int:
    if L == k:
        return 1
    if L.is_finite and k.is_finite and L.p == k.p and L.degree_over_prime % k.degree_over_prime == 0:
        return L.degree_over_prime // k.degree_over_prime
    if L.kind == NUMBER and k.kind == RATIONAL:
        return L.n
    raise NoExtension(f"{L} is not a supported extension of {k}")


def field_trace_raw(L: Field, k: Field, a):
    d = extension_degree(L, k)
    if d == 1:
        return a
    if L.is_finite:
        step = k.degree_over_prime
        acc, cur = a, a
        for _ in range(d - 1):
            cur = L.frobenius(cur, step)
            acc = L.add(acc, cur)
        return restrict_raw(k, L, acc)
    return L.trace(a)


def field_trace(u: FieldElem, base: Field) -> FieldElem:
    """Tr_{L/k}(u)."""
    return base.elem(field_trace_raw(u.field, base, u.value))
