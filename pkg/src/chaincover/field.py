"""Finite fields GF(p), GF(q) = GF(p^e) and extensions GF(q^t).

Elements are plain non-negative integers.  A prime-field element is its
residue; an element of GF(s)[x]/(f) with coefficients c_0..c_{d-1} is coded
as sum(c_i * s**i).  Since every level uses a power of its subfield order as
radix, the base-p digits of a code are exactly its GF(p)-coordinates, so
addition is digitwise mod p at every level (XOR when p = 2).

All arithmetic methods on :class:`GF` accept ints or integer numpy arrays
and broadcast.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, DomainError

# Multiplication switches from polynomial arithmetic to exp/log tables here.
TABLE_LIMIT = 1 << 16
# Largest field order make_field will build.
SIZE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**e; raises if q is not a prime power."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise DomainError(f"{q} is not a prime power")
    return p, e


class GF:
    """Common interface of prime and extension fields."""

    p: int
    order: int
    ndigits: int  # number of base-p digits in a code

    def _arr(self, a):
        return np.asarray(a, dtype=np.int64)

    def add(self, a, b):
        return self._digitwise(a, b, 1)

    def sub(self, a, b):
        return self._digitwise(a, b, -1)

    def neg(self, a):
        return self._digitwise(0, a, -1)

    def _digitwise(self, a, b, sign):
        a, b = self._arr(a), self._arr(b)
        if self.p == 2:
            return a ^ b
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.ndigits):
            da = (a // scale) % p
            db = (b // scale) % p
            out += ((da + sign * db) % p) * scale
            scale *= p
        return out

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        a = self._arr(a)
        result = np.ones_like(a)
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative order")
        n = self.order - 1
        for f in prime_factors(self.order - 1):
            while n % f == 0 and int(self.pow(a, n // f)) == 1:
                n //= f
        return n

    def primitive_element(self) -> int:
        """Smallest code generating the multiplicative group."""
        if self.order == 2:
            return 1
        for g in range(2, self.order):
            if self.multiplicative_order(g) == self.order - 1:
                return g
        raise AssertionError("no primitive element found")  # pragma: no cover

    def _check_nonzero(self, a):
        if np.any(a == 0):
            raise DomainError("inverse of zero")

    def scalar_ops(self):
        """Plain-int (mul, sub) callables for per-coordinate loops."""
        if getattr(self, "_scalar_ops", None) is None:
            self._scalar_ops = _make_scalar_ops(self)
        return self._scalar_ops


class PrimeField(GF):
    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"characteristic {p} is not prime")
        self.p = p
        self.order = p
        self.ndigits = 1
        self.subfield = None
        self.modulus = (0, 1)
        self._inv_table = None

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (self._arr(a) + self._arr(b)) % self.p

    def sub(self, a, b):
        return (self._arr(a) - self._arr(b)) % self.p

    def neg(self, a):
        return (-self._arr(a)) % self.p

    def mul(self, a, b):
        return (self._arr(a) * self._arr(b)) % self.p

    def inv(self, a):
        a = self._arr(a)
        self._check_nonzero(a)
        if self._inv_table is None:
            table = np.zeros(self.p, dtype=np.int64)
            for x in range(1, self.p):
                table[x] = pow(x, self.p - 2, self.p)
            self._inv_table = table
        return self._inv_table[a]

    def inv_euclid(self, a: int) -> int:
        if a % self.p == 0:
            raise DomainError("inverse of zero")
        return pow(int(a), -1, self.p)


class ExtensionField(GF):
    """GF(s^d) = sub[x]/(modulus), modulus monic of degree d over ``sub``."""

    def __init__(self, sub: GF, modulus):
        modulus = tuple(int(c) for c in modulus)
        if modulus[-1] != 1:
            raise DomainError("modulus must be monic")
        self.subfield = sub
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.p = sub.p
        self.order = sub.order ** self.degree
        self.ndigits = sub.ndigits * self.degree
        self._weights = sub.order ** np.arange(self.degree, dtype=np.int64)
        self._exp = self._log = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.order}) over {self.subfield!r} mod {list(self.modulus)}"

    def to_coeffs(self, a) -> np.ndarray:
        a = self._arr(a)
        return (a[..., None] // self._weights) % self.subfield.order

    def from_coeffs(self, c) -> np.ndarray:
        return (self._arr(c) * self._weights).sum(axis=-1)

    def _polymul(self, a, b):
        a, b = np.broadcast_arrays(self._arr(a), self._arr(b))
        F, d = self.subfield, self.degree
        A, B = self.to_coeffs(a), self.to_coeffs(b)
        prod = np.zeros(a.shape + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                prod[..., i + j] = F.add(prod[..., i + j], F.mul(A[..., i], B[..., j]))
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[..., top]
            for s in range(d):
                if self.modulus[s]:
                    prod[..., top - d + s] = F.sub(prod[..., top - d + s], F.mul(c, self.modulus[s]))
        return self.from_coeffs(prod[..., :d])

    def _build_tables(self):
        n = self.order - 1
        factors = prime_factors(n)
        gen = None
        for g in range(2 if self.order > 2 else 1, self.order):
            if all(int(self._polypow(g, n // f)) != 1 for f in factors):
                gen = g
                break
        exp = np.ones(2 * n, dtype=np.int64)
        filled, step = 1, gen
        while filled < n:
            chunk = min(filled, n - filled)
            exp[filled:filled + chunk] = self._polymul(exp[:chunk], step)
            filled += chunk
            step = int(self._polymul(step, step))
        exp[n:] = exp[:n]
        log = np.zeros(self.order, dtype=np.int64)
        log[exp[:n]] = np.arange(n, dtype=np.int64)
        self._exp, self._log = exp, log

    def _polypow(self, a, k):
        result, base = np.int64(1), self._arr(a)
        while k:
            if k & 1:
                result = self._polymul(result, base)
            base = self._polymul(base, base)
            k >>= 1
        return result

    def mul(self, a, b):
        if self._exp is None:
            return self._polymul(a, b)
        a, b = self._arr(a), self._arr(b)
        r = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        a = self._arr(a)
        self._check_nonzero(a)
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        if a.ndim == 0:
            return np.int64(self.inv_euclid(int(a)))
        return self._polypow(a, self.order - 2)

    def inv_euclid(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm on polynomials over ``sub``."""
        if a == 0:
            raise DomainError("inverse of zero")
        F = self.subfield
        r0, r1 = list(self.modulus), _trim([int(c) for c in self.to_coeffs(a)])
        s0, s1 = [], [1]
        while r1:
            quo, rem = poly_divmod(r0, r1, F)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(_poly_sub(s0, poly_mul(quo, s1, F), F))
        # r0 is a nonzero constant
        c = int(F.inv(r0[0]))
        coeffs = [int(F.mul(x, c)) for x in s0] + [0] * self.degree
        return int(self.from_coeffs(coeffs[:self.degree]))


# Above this order the subtraction table is skipped for odd characteristic.
SCALAR_TABLE_LIMIT = 729


def _make_scalar_ops(F: GF):
    if isinstance(F, PrimeField):
        p = F.p
        return (lambda a, b: a * b % p), (lambda a, b: (a - b) % p)
    if F._exp is not None:
        exp, log = F._exp.tolist(), F._log.tolist()

        def mul(a, b):
            return exp[log[a] + log[b]] if a and b else 0
    else:
        def mul(a, b):
            return int(F.mul(a, b))
    if F.p == 2:
        sub = int.__xor__
    elif F.order <= SCALAR_TABLE_LIMIT:
        el = F.elements()
        table = F.sub(el[:, None], el[None, :]).tolist()

        def sub(a, b):
            return table[a][b]
    else:
        def sub(a, b):
            return int(F.sub(a, b))
    return mul, sub


# -- scalar polynomial helpers (little-endian coefficient lists) ----------

def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_sub(f, g, F):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return [int(F.sub(x, y)) for x, y in zip(f, g)]


def poly_mul(f, g, F):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] = int(F.add(out[i + j], F.mul(x, y)))
    return _trim(out)


def poly_divmod(f, g, F):
    f, g = _trim(f), _trim(g)
    if not g:
        raise DomainError("polynomial division by zero")
    lead_inv = int(F.inv(g[-1]))
    quo = [0] * max(len(f) - len(g) + 1, 0)
    rem = list(f)
    while len(rem) >= len(g):
        c = int(F.mul(rem[-1], lead_inv))
        shift = len(rem) - len(g)
        quo[shift] = c
        for i, y in enumerate(g):
            rem[shift + i] = int(F.sub(rem[shift + i], F.mul(c, y)))
        rem = _trim(rem)
    return _trim(quo), rem


def _monic(code: int, degree: int, F: GF) -> list[int]:
    coeffs = []
    for _ in range(degree):
        coeffs.append(code % F.order)
        code //= F.order
    return coeffs + [1]


def is_irreducible(f, F: GF) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    f = _trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for code in range(F.order ** k):
            if not poly_divmod(f, _monic(code, k, F), F)[1]:
                return False
    return True


def smallest_irreducible(F: GF, degree: int) -> tuple[int, ...]:
    """First monic irreducible of the given degree, lower coefficients
    ordered as the integer code sum(c_i * |F|**i)."""
    for code in range(F.order ** degree):
        f = _monic(code, degree, F)
        if is_irreducible(f, F):
            return tuple(f)
    raise AssertionError("no irreducible polynomial")  # pragma: no cover


# -- field specs -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(q), q = p**e, together with its degree-t extension GF(q**t).

    The extension basis is the polynomial basis 1, x, ..., x^(t-1), so an
    extension code written in radix q lists its coordinates directly.
    """

    p: int
    e: int
    t: int
    base_modulus: tuple
    ext_modulus: tuple
    base: GF
    ext: GF
    gamma: int

    @property
    def q(self) -> int:
        return self.base.order

    def __repr__(self):
        return f"FieldSpec(q={self.q}, t={self.t})"


_base_lock = threading.Lock()


@functools.lru_cache(maxsize=None)
def _base_field(p: int, e: int) -> tuple[GF, tuple]:
    prime = PrimeField(p)
    if e == 1:
        return prime, (0, 1)
    mod = smallest_irreducible(prime, e)
    return ExtensionField(prime, mod), mod


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int = 1, t: int = 1) -> FieldSpec:
    """Build GF(p^e) and its degree-t extension with deterministic moduli."""
    if not is_prime(p):
        raise DomainError(f"characteristic {p} is not prime")
    if e < 1 or t < 1:
        raise DomainError("degrees must be positive")
    if p ** (e * t) > SIZE_LIMIT:
        raise BudgetError(f"field of order {p}^{e * t} exceeds the 2^20 limit")
    with _base_lock:
        base, base_mod = _base_field(p, e)
    if t == 1:
        ext, ext_mod = base, (0, 1)
    else:
        ext_mod = smallest_irreducible(base, t)
        ext = ExtensionField(base, ext_mod)
    return FieldSpec(p, e, t, base_mod, ext_mod, base, ext, base.primitive_element())


def field_for_order(q: int, t: int = 1) -> FieldSpec:
    p, e = prime_power(q)
    return make_field(p, e, t)


def embed(spec: FieldSpec, a):
    """Map GF(q) into GF(q^t); with b_1 = 1 the code is unchanged."""
    a = np.asarray(a, dtype=np.int64)
    if np.any((a < 0) | (a >= spec.q)):
        raise DomainError("not an element of the base field")
    return a


def decompose(spec: FieldSpec, u) -> np.ndarray:
    """Coordinates of u over the basis 1, x, ..., x^(t-1); shape u.shape + (t,)."""
    u = np.asarray(u, dtype=np.int64)
    if np.any((u < 0) | (u >= spec.ext.order)):
        raise DomainError("not an element of the extension field")
    weights = spec.q ** np.arange(spec.t, dtype=np.int64)
    return (u[..., None] // weights) % spec.q


def compose(spec: FieldSpec, coords) -> np.ndarray:
    """Inverse of :func:`decompose`: sum(b_i * coords[..., i])."""
    coords = np.asarray(coords, dtype=np.int64)
    weights = spec.q ** np.arange(spec.t, dtype=np.int64)
    return (coords * weights).sum(axis=-1)


# -- scalar element wrapper --------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    field: GF
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.order:
            raise DomainError(f"{self.code} is not an element of {self.field!r}")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise DomainError("elements belong to different fields")
            return other.code
        return other

    def __add__(self, other):
        return FieldElement(self.field, int(self.field.add(self.code, self._other(other))))

    def __sub__(self, other):
        return FieldElement(self.field, int(self.field.sub(self.code, self._other(other))))

    def __mul__(self, other):
        return FieldElement(self.field, int(self.field.mul(self.code, self._other(other))))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self._other(other)).inv()

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.code)))

    def inv(self):
        return FieldElement(self.field, int(self.field.inv(self.code)))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __lt__(self, other):
        # canonical order: lexicographic on coefficients, i.e. by code
        return self.code < self._other(other)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inv()
