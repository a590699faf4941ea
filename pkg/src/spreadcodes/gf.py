"""Exact arithmetic in prime fields F_q and extension fields F_{q^k}.

Element values are plain Python objects: an int in 0..q-1 for the prime
field, and a length-k tuple of such ints (lowest coefficient first) for
the extension field F_q[x]/(p).  The field objects own the arithmetic.
Multiplications and inversions are tallied on the innermost active
:class:`OpCount` of the current thread, separately per field layer, so
decoding costs can be profiled in field operations rather than wall time.
"""

from __future__ import annotations

import itertools
import threading

_ACTIVE = threading.local()


def _counter():
    return getattr(_ACTIVE, "current", None)


class OpCount:
    """Tally of field multiplications and inversions.

    Used as a context manager.  While active, every multiplication and
    inversion performed by a PrimeField is charged to ``base_mul`` /
    ``base_inv`` and every one performed by an ExtField to ``ext_mul`` /
    ``ext_inv``.  An extension-field multiplication counts as one ext op;
    the base-field work inside it is not double counted.  Counters are
    thread-local and nest, so concurrent decodes tally independently.
    """

    __slots__ = ("base_mul", "base_inv", "ext_mul", "ext_inv", "_prev")

    def __init__(self):
        self.base_mul = 0
        self.base_inv = 0
        self.ext_mul = 0
        self.ext_inv = 0
        self._prev = None

    def __enter__(self):
        self._prev = _counter()
        _ACTIVE.current = self
        return self

    def __exit__(self, *exc):
        _ACTIVE.current = self._prev
        self._prev = None
        return False

    @property
    def base_total(self) -> int:
        return self.base_mul + self.base_inv

    @property
    def ext_total(self) -> int:
        return self.ext_mul + self.ext_inv

    def __repr__(self):
        return (f"OpCount(base_mul={self.base_mul}, base_inv={self.base_inv}, "
                f"ext_mul={self.ext_mul}, ext_inv={self.ext_inv})")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The prime field F_q.  Element values are ints reduced mod q."""

    __slots__ = ("q", "zero", "one")

    def __init__(self, q: int):
        if not is_prime(q):
            raise ValueError(f"field order must be prime, got {q}")
        self.q = q
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"PrimeField({self.q})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def element(self, value: int) -> int:
        return value % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def mul(self, a: int, b: int) -> int:
        c = _counter()
        if c is not None:
            c.base_mul += 1
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        c = _counter()
        if c is not None:
            c.base_inv += 1
        return pow(a, self.q - 2, self.q)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        base = a % self.q
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def elements(self):
        return range(self.q)

    def to_str(self, a: int) -> str:
        return str(a % self.q)

    def from_str(self, s: str) -> int:
        return int(s) % self.q


# ---------------------------------------------------------------------------
# Polynomial helpers over F_q.  Coefficient lists, lowest degree first.
# Construction-time plumbing; none of this is charged to op counters.

def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f, g, q: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % q
    return _poly_trim(out)


def _poly_divmod(num, den, q: int):
    num = list(num)
    den = _poly_trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], _poly_trim(num)
    quo = [0] * (len(num) - len(den) + 1)
    lead_inv = pow(den[-1], q - 2, q)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] * lead_inv % q
        if c:
            quo[shift] = c
            for i, d in enumerate(den):
                num[shift + i] = (num[shift + i] - c * d) % q
    return _poly_trim(quo), _poly_trim(num[:len(den) - 1])


def _poly_sub(f, g, q: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = (a - b) % q
    return _poly_trim(out)


def poly_is_irreducible(p: tuple[int, ...], q: int) -> bool:
    """Trial-divide a monic polynomial by every monic divisor of degree
    at most deg(p)/2.  Exact, intended for small q and degree."""
    p = tuple(c % q for c in p)
    k = len(p) - 1
    if k < 1 or p[-1] != 1:
        raise ValueError("polynomial must be monic of degree >= 1")
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(q), repeat=d):
            divisor = list(tail) + [1]
            _, rem = _poly_divmod(list(p), divisor, q)
            if not rem:
                return False
    return True


def find_irreducible(q: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree k over F_q.

    Candidates are ordered by the coefficient tuple read from the
    highest non-leading coefficient down, so e.g. x^3+x+1 precedes
    x^3+x^2+1 over F_2.  Deterministic; returns the full coefficient
    tuple (p_0, ..., p_{k-1}, 1).
    """
    if not is_prime(q):
        raise ValueError(f"field order must be prime, got {q}")
    if k < 2:
        raise ValueError("extension degree must be at least 2")
    for high_first in itertools.product(range(q), repeat=k):
        coeffs = tuple(reversed(high_first)) + (1,)
        if poly_is_irreducible(coeffs, q):
            return coeffs
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class ExtField:
    """The extension field F_{q^k} = F_q[x]/(p) for monic irreducible p.

    Element values are length-k tuples of ints, lowest coefficient
    first; the residue class of x is :meth:`gen`.
    """

    __slots__ = ("base", "q", "k", "modulus", "zero", "one",
                 "_red", "_frob_tables")

    def __init__(self, base: PrimeField, modulus):
        modulus = tuple(c % base.q for c in modulus)
        k = len(modulus) - 1
        if k < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 2")
        if not poly_is_irreducible(modulus, base.q):
            raise ValueError(f"modulus {modulus} is reducible over F_{base.q}")
        self.base = base
        self.q = base.q
        self.k = k
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        # _red[i] = coefficients of x^(k+i) reduced mod p, for i in 0..k-2
        q = self.q
        red = []
        cur = [(-c) % q for c in modulus[:k]]  # x^k mod p
        red.append(tuple(cur))
        for _ in range(k - 2):
            nxt = [0] + cur[:k - 1]
            top = cur[k - 1]
            if top:
                for j in range(k):
                    nxt[j] = (nxt[j] + top * red[0][j]) % q
            cur = nxt
            red.append(tuple(cur))
        self._red = red
        # _frob_tables[j][i] = coefficients of (x^i)^(q^j), for j in 0..k-1
        identity = tuple(tuple(1 if c == i else 0 for c in range(k))
                         for i in range(k))
        lam_q = self._pow_raw(self.gen(), q)
        table1 = [self.one]
        for _ in range(1, k):
            table1.append(self._mul_raw(table1[-1], lam_q))
        tables = [identity, tuple(table1)]
        for _ in range(k - 2):
            prev = tables[-1]
            tables.append(tuple(self._apply_table(v, tables[1]) for v in prev))
        self._frob_tables = tables[:k]

    def __repr__(self):
        return f"ExtField(q={self.q}, k={self.k}, p={self.modulus})"

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.q == self.q
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ExtField", self.q, self.modulus))

    def gen(self) -> tuple[int, ...]:
        """The residue class of x, a root of the modulus."""
        return tuple(1 if i == 1 else 0 for i in range(self.k))

    def element(self, coeffs) -> tuple[int, ...]:
        if isinstance(coeffs, int):
            return self.embed(coeffs)
        coeffs = tuple(c % self.q for c in coeffs)
        if len(coeffs) > self.k:
            raise ValueError(f"too many coefficients for degree {self.k}")
        return coeffs + (0,) * (self.k - len(coeffs))

    def embed(self, a: int) -> tuple[int, ...]:
        return (a % self.q,) + (0,) * (self.k - 1)

    def in_base(self, a: tuple[int, ...]) -> bool:
        return all(c == 0 for c in a[1:])

    def add(self, a, b):
        q = self.q
        return tuple((x + y) % q for x, y in zip(a, b))

    def sub(self, a, b):
        q = self.q
        return tuple((x - y) % q for x, y in zip(a, b))

    def neg(self, a):
        q = self.q
        return tuple((-x) % q for x in a)

    def _mul_raw(self, a, b):
        k, q = self.k, self.q
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % q
            if c:
                row = self._red[i - k]
                for j in range(k):
                    prod[j] += c * row[j]
        return tuple(prod[j] % q for j in range(k))

    def mul(self, a, b):
        c = _counter()
        if c is not None:
            c.ext_mul += 1
        return self._mul_raw(a, b)

    def inv(self, a):
        if all(x % self.q == 0 for x in a):
            raise ZeroDivisionError("inverse of zero in F_{q^k}")
        c = _counter()
        if c is not None:
            c.ext_inv += 1
        q = self.q
        r0, r1 = list(self.modulus), _poly_trim([x % q for x in a])
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = _poly_divmod(r0, r1, q)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1, q), q)
        if not r1:
            raise ZeroDivisionError("element shares a factor with the modulus")
        scale = pow(r1[0], q - 2, q)
        out = [x * scale % q for x in s1]
        return tuple(out + [0] * (self.k - len(out)))[:self.k]

    def _pow_raw(self, a, e: int):
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def _apply_table(self, a, table):
        k, q = self.k, self.q
        out = [0] * k
        for i, ai in enumerate(a):
            if ai:
                row = table[i]
                for j in range(k):
                    out[j] += ai * row[j]
        return tuple(x % q for x in out)

    def frobenius(self, a, j: int):
        """a raised to the q^j power.  An F_q-linear map; charges k*k
        base multiplications, no extension-field ops."""
        j %= self.k
        if j == 0:
            return tuple(a)
        c = _counter()
        if c is not None:
            c.base_mul += self.k * self.k
        return self._apply_table(a, self._frob_tables[j])

    def trace(self, a) -> int:
        """Trace down to F_q: the sum of all Frobenius conjugates."""
        acc = tuple(a)
        conj = tuple(a)
        for _ in range(self.k - 1):
            conj = self.frobenius(conj, 1)
            acc = self.add(acc, conj)
        if not self.in_base(acc):
            raise ArithmeticError("trace left the base field")
        return acc[0]

    def elements(self):
        """All q^k elements, ordered by integer value of the digit tuple."""
        q, k = self.q, self.k
        for n in range(q ** k):
            digits = []
            for _ in range(k):
                digits.append(n % q)
                n //= q
            yield tuple(digits)

    def to_str(self, a) -> str:
        return " ".join(str(c) for c in a)

    def from_str(self, s: str) -> tuple[int, ...]:
        parts = s.split()
        if len(parts) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(parts)}")
        return self.element(int(p) for p in parts)
