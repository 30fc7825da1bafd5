"""Exact arithmetic in F_p and F_{p^n}, integer factorization, and
multiplicative orders.

The field F_{p^n} is modelled as F_p[x]/(m(x)) where m is the
lexicographically smallest monic irreducible of degree n, so every
context is bit-for-bit reproducible.  Elements carry a canonical
integer index sum(c_i * p^i), which lets graphs live in flat arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Union

import numpy as np

__all__ = [
    "FactoredInt",
    "FieldCtx",
    "FFElem",
    "QuadElem",
    "Branch",
    "MINUS",
    "PLUS",
    "is_prime",
    "factor_int",
    "make_field",
    "mult_order",
    "lift_alpha",
    "element_degree",
]

FACTOR_LIMIT = 1 << 96
TRIAL_BOUND = 10 ** 6

# Branch tags: which of p^n -+ 1 the order of a lifted root divides.
MINUS = "minus"
PLUS = "plus"
Branch = str


# ---------------------------------------------------------------------------
# Integer factorization
# ---------------------------------------------------------------------------

# Witnesses proving Miller-Rabin deterministic below 3.3 * 10^24; for the
# handful of larger inputs we allow (N < 2^96) the same fixed set is used.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2^96."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n.

    Brent's cycle variant with a fixed, deterministic parameter schedule.
    """
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho schedule exhausted on {n}")


def _factor_map(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for q in (2, 3, 5):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f <= TRIAL_BOUND:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += wheel[i]
        i = (i + 1) % 8
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer kept as an increasing tuple of (prime, exponent)."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 1
        for q, e in self.factors:
            if q <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors}")
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
            last = q

    @property
    def value(self) -> int:
        v = 1
        for q, e in self.factors:
            v *= q ** e
        return v

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def nu(self, ell: int) -> int:
        """Exponent of the prime ell in this integer."""
        for q, e in self.factors:
            if q == ell:
                return e
        return 0

    def prime_to(self, ell: int) -> "FactoredInt":
        """The part of the integer coprime to ell."""
        return FactoredInt(tuple((q, e) for q, e in self.factors if q != ell))

    def divisors(self) -> Iterator[int]:
        """All positive divisors, ascending."""
        divs = [1]
        for q, e in self.factors:
            divs = [d * q ** k for d in divs for k in range(e + 1)]
        yield from sorted(divs)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{q}^{e}" if e > 1 else str(q) for q, e in self.factors)


def factor_int(n: int) -> FactoredInt:
    """Complete prime factorization of 1 <= n < 2^96, deterministic."""
    if n == 0:
        raise ValueError("cannot factor 0")
    if n < 0:
        raise ValueError("n must be positive")
    if n >= FACTOR_LIMIT:
        raise ValueError(f"{n} exceeds the 2^96 factorization bound")
    fm = _factor_map(n)
    return FactoredInt(tuple(sorted(fm.items())))


def euler_phi_factored(d: int) -> FactoredInt:
    """phi(d) in factored form."""
    fm: dict[int, int] = {}
    for q, e in factor_int(d).factors:
        if e > 1:
            fm[q] = fm.get(q, 0) + e - 1
        for r, s in factor_int(q - 1).factors:
            fm[r] = fm.get(r, 0) + s
    return FactoredInt(tuple(sorted(fm.items())))


def euler_phi(d: int) -> int:
    v = 1
    for q, e in factor_int(d).factors:
        v *= q ** (e - 1) * (q - 1)
    return v


# ---------------------------------------------------------------------------
# Dense polynomial helpers over F_p (coefficient lists, ascending degree)
# ---------------------------------------------------------------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] = (r[i + j] + x * y) % p
    return _ptrim(r)


def _prem(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        s = len(a) - 1 - db
        for i, y in enumerate(b):
            a[s + i] = (a[s + i] - c * y) % p
        a.pop()
    return _ptrim(a)


def _ppowmod_x(e: int, f: list[int], p: int) -> list[int]:
    """x^e mod f over F_p."""
    r, b = [1], [0, 1]
    b = _prem(b, f, p) if len(f) <= 2 else b
    while e:
        if e & 1:
            r = _prem(_pmul(r, b, p), f, p)
        b = _prem(_pmul(b, b, p), f, p)
        e >>= 1
    return r


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin irreducibility test for monic f over F_p."""
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    h = _ppowmod_x(p ** n, f, p)
    if h != [0, 1]:
        return False
    for q in {q for q, _ in factor_int(n).factors}:
        g = _ppowmod_x(p ** (n // q), f, p)
        g = _ptrim([(c - d) % p for c, d in
                    zip(g + [0] * 2, [0, 1] + [0] * len(g))])
        if _pgcd(g, f, p) != [1]:
            return False
    return True


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _prem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _lex_min_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Coefficients (c_0..c_{n-1}) of the lex-smallest monic irreducible.

    c_0 = 0 means x divides, so the scan starts at c_0 = 1; within that
    the remaining coefficients run in ascending lexicographic order.
    """
    if n == 1:
        return (0,)
    for c0 in range(1, p):
        for rest in product(range(p), repeat=n - 1):
            tup = (c0,) + rest
            if _is_irreducible(list(tup) + [1], p):
                return tup
    raise ArithmeticError("no irreducible found")  # unreachable


# ---------------------------------------------------------------------------
# Field contexts and elements
# ---------------------------------------------------------------------------

class FieldCtx:
    """Immutable descriptor of F_{p^n} with pre-factored group orders.

    Construct through make_field.  Lazy caches (order tables, Frobenius
    matrix) are write-once and safe for concurrent readers.
    """

    # Order tables are built by a full walk of the two cyclic groups; above
    # this size per-element order computation is used instead.  Matches the
    # default graph enumeration cap; the walk needs O(q) transient memory.
    TABLE_CAP = 1 << 26

    def __init__(self, p: int, n: int, modulus: tuple[int, ...],
                 order_minus: FactoredInt, order_plus: FactoredInt):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = modulus
        self.order_minus = order_minus
        self.order_plus = order_plus
        # rows of x^(n+k) mod modulus for k = 0..n-2, used by reduction
        red = []
        if n > 1:
            base = tuple((-c) % p for c in modulus)
            red.append(base)
            for _ in range(n - 2):
                prev = red[-1]
                top = prev[n - 1]
                row = [0] + list(prev[: n - 1])
                if top:
                    row = [(row[i] + top * base[i]) % p for i in range(n)]
                red.append(tuple(row))
        self._red = tuple(red)
        self._pow_p = tuple(p ** i for i in range(n))
        self._cache: dict[str, object] = {}

    # -- basic element plumbing -------------------------------------------

    def elem(self, coeffs) -> "FFElem":
        c = tuple(int(x) % self.p for x in coeffs)
        if len(c) > self.n:
            raise ValueError(f"coefficient vector longer than degree {self.n}")
        if len(c) < self.n:
            c = c + (0,) * (self.n - len(c))
        return FFElem(self, c)

    def from_int(self, k: int) -> "FFElem":
        """Embed an integer as a scalar of the prime field."""
        return self.elem([k] + [0] * (self.n - 1))

    def decode(self, index: int) -> "FFElem":
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for q={self.q}")
        c = []
        for _ in range(self.n):
            index, r = divmod(index, self.p)
            c.append(r)
        return FFElem(self, tuple(c))

    def zero(self) -> "FFElem":
        return self.elem([0])

    def one(self) -> "FFElem":
        return self.elem([1])

    def elements(self) -> Iterator["FFElem"]:
        for i in range(self.q):
            yield self.decode(i)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, n={self.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self) -> int:
        return hash((self.p, self.n))

    # -- reduction kernel ---------------------------------------------------

    def _reduce(self, c: list[int]) -> tuple[int, ...]:
        """Reduce a raw product (length <= 2n-1) mod (p, modulus)."""
        n, p = self.n, self.p
        out = list(c[:n]) + [0] * (n - len(c[:n]))
        for k in range(n, len(c)):
            ck = c[k]
            if ck:
                row = self._red[k - n]
                for i in range(n):
                    out[i] += ck * row[i]
        return tuple(v % p for v in out)

    # -- vector kernels (used by graph building) ----------------------------

    def coeff_matrix(self) -> np.ndarray:
        """(q, n) int64 matrix of coefficient vectors, row i = decode(i)."""
        m = self._cache.get("coeff")
        if m is None:
            idx = np.arange(self.q, dtype=np.int64)
            cols = []
            for _ in range(self.n):
                idx, r = np.divmod(idx, self.p)
                cols.append(r)
            m = np.stack(cols, axis=1)
            m.setflags(write=False)
            self._cache["coeff"] = m
        return m

    def encode_rows(self, rows: np.ndarray) -> np.ndarray:
        """Canonical indices of a (m, n) coefficient matrix."""
        pw = np.array(self._pow_p, dtype=np.int64)
        return rows @ pw

    def mul_matrix(self, h: "FFElem") -> np.ndarray:
        """(n, n) matrix M with row_vec(a) @ M = row_vec(a * h)."""
        rows = []
        cur = h
        x = self.elem([0, 1] + [0] * (self.n - 2)) if self.n > 1 else None
        for i in range(self.n):
            rows.append(cur.coeffs)
            if x is not None:
                cur = cur * x
        return np.array(rows, dtype=np.int64)

    def mul_rows(self, rows: np.ndarray, h: "FFElem") -> np.ndarray:
        return rows @ self.mul_matrix(h) % self.p

    def frobenius_indices(self) -> np.ndarray:
        """Permutation array f with f[i] = index of decode(i)^p."""
        f = self._cache.get("frob")
        if f is None:
            if self.n == 1:
                f = np.arange(self.q, dtype=np.int64)
            else:
                basis = []
                for i in range(self.n):
                    e = self.elem([0] * i + [1] + [0] * (self.n - 1 - i))
                    basis.append((e ** self.p).coeffs)
                fm = np.array(basis, dtype=np.int64)
                f = self.encode_rows(self.coeff_matrix() @ fm % self.p)
            f.setflags(write=False)
            self._cache["frob"] = f
        return f

    # -- multiplicative structure -------------------------------------------

    def generator(self) -> "FFElem":
        """Smallest-index generator of F_{p^n}^x (deterministic)."""
        g = self._cache.get("gen")
        if g is None:
            primes = self.order_minus.primes
            nm1 = self.q - 1
            for i in range(2, self.q):
                cand = self.decode(i)
                if all((cand ** (nm1 // r)).coeffs != self.one().coeffs
                       for r in primes):
                    g = cand
                    break
            else:
                g = self.one()  # q = 2 never happens (p odd)
            self._cache["gen"] = g
        return g

    def nonresidue(self) -> "FFElem":
        """Smallest-index non-square of F_{p^n}^x."""
        r = self._cache.get("nonres")
        if r is None:
            half = (self.q - 1) // 2
            for i in range(2, self.q):
                cand = self.decode(i)
                if (cand ** half).coeffs != self.one().coeffs:
                    r = cand
                    break
            self._cache["nonres"] = r
        return r

    def alpha_order_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Per-index order and branch of the lifted root.

        Returns (ord, branch) arrays of length q: ord[i] is the
        multiplicative order of a root of x^2 - a x + 1 for a = decode(i),
        branch[i] is 0 where that order divides q - 1 and 1 where it
        divides q + 1.  Built by one walk of each cyclic group.
        """
        t = self._cache.get("alpha")
        if t is None:
            if self.q > self.TABLE_CAP:
                raise ValueError(
                    f"q={self.q} exceeds the order-table cap {self.TABLE_CAP}")
            t = self._build_alpha_tables()
            self._cache["alpha"] = t
        return t

    def _exp_table(self, g: "FFElem", count: int) -> np.ndarray:
        """(count, n) matrix of coefficient rows of g^0 .. g^(count-1)."""
        n = self.n
        E = np.zeros((count, n), dtype=np.int64)
        E[0, 0] = 1
        m = 1
        h = g
        while m < count:
            take = min(m, count - m)
            E[m:m + take] = E[:take] @ self.mul_matrix(h) % self.p
            m += take
            h = h * h
        return E

    def _build_alpha_tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.q
        ords = np.zeros(q, dtype=np.int64)
        branch = np.zeros(q, dtype=np.int8)

        # Walk F_q^x: alpha = g^e, trace a = g^e + g^-e, ord = (q-1)/gcd(e,.)
        E = self._exp_table(self.generator(), q - 1)
        inv = E[(-np.arange(q - 1)) % (q - 1)]
        traces = self.encode_rows((E + inv) % self.p)
        e = np.arange(q - 1, dtype=np.int64)
        ords[traces] = (q - 1) // np.gcd(e, q - 1)

        # Walk the norm-one subgroup of F_{q^2}^x = F_q(sqrt(delta)).
        delta = self.nonresidue()
        gamma = self._quad_generator(delta)
        h = _quad_pow(gamma, q - 1, delta)  # exact order q + 1
        E2 = self._quad_exp_table(h, delta, q + 1)
        half = 2 % self.p
        traces2 = self.encode_rows(E2[:, : self.n] * half % self.p)
        e2 = np.arange(q + 1, dtype=np.int64)
        ords2 = (q + 1) // np.gcd(e2, q + 1)
        keep = (e2 != 0) & (e2 != (q + 1) // 2)  # alpha = +-1 handled below
        ords[traces2[keep]] = ords2[keep]
        branch[traces2[keep]] = 1

        # a = 2 and a = -2 lift to alpha = 1 and -1 inside F_q^x.
        two = self.from_int(2).index
        mtwo = self.from_int(-2).index
        ords[two], branch[two] = 1, 0
        ords[mtwo], branch[mtwo] = 2, 0
        if not (ords > 0).all():
            raise ArithmeticError("order walk left unassigned vertices")
        ords.setflags(write=False)
        branch.setflags(write=False)
        return ords, branch

    def _quad_generator(self, delta: "FFElem") -> tuple["FFElem", "FFElem"]:
        """Smallest-index generator of F_{q^2}^x as x + y*sqrt(delta), y != 0."""
        total = self.q * self.q - 1
        primes = sorted(set(self.order_minus.primes) | set(self.order_plus.primes))
        one = (self.one(), self.zero())
        for k in range(self.q, self.q * self.q):
            cand = (self.decode(k % self.q), self.decode(k // self.q))
            if all(_quad_pow(cand, total // r, delta) != one for r in primes):
                return cand
        raise ArithmeticError("no generator of the quadratic extension found")

    def _quad_exp_table(self, h: tuple["FFElem", "FFElem"], delta: "FFElem",
                        count: int) -> np.ndarray:
        """(count, 2n) rows of h^0..h^(count-1) in F_q(sqrt(delta))."""
        n = self.n
        E = np.zeros((count, 2 * n), dtype=np.int64)
        E[0, 0] = 1
        m = 1
        cur = h
        while m < count:
            a, b = cur
            ma = self.mul_matrix(a)
            mdb = self.mul_matrix(b * delta)
            mb = self.mul_matrix(b)
            top = np.concatenate([ma, mb], axis=1)
            bot = np.concatenate([mdb, ma], axis=1)
            M = np.concatenate([top, bot], axis=0)
            take = min(m, count - m)
            E[m:m + take] = E[:take] @ M % self.p
            m += take
            cur = _quad_mul(cur, cur, delta)
        return E


class FFElem:
    """Element of F_{p^n} as a coefficient tuple (c_0..c_{n-1})."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        """Canonical integer encoding sum(c_i * p^i)."""
        return sum(c * w for c, w in zip(self.coeffs, self.ctx._pow_p))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "FFElem") -> "FFElem":
        p = self.ctx.p
        return FFElem(self.ctx, tuple((a + b) % p
                                      for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FFElem") -> "FFElem":
        p = self.ctx.p
        return FFElem(self.ctx, tuple((a - b) % p
                                      for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FFElem":
        p = self.ctx.p
        return FFElem(self.ctx, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FFElem") -> "FFElem":
        n = self.ctx.n
        if n == 1:
            return FFElem(self.ctx,
                          (self.coeffs[0] * other.coeffs[0] % self.ctx.p,))
        raw = [0] * (2 * n - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    raw[i + j] += x * y
        return FFElem(self.ctx, self.ctx._reduce(raw))

    def __pow__(self, e: int) -> "FFElem":
        if e < 0:
            return self.inverse() ** (-e)
        r = self.ctx.one()
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def inverse(self) -> "FFElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.ctx.q - 2)

    def scale(self, k: int) -> "FFElem":
        p = self.ctx.p
        return FFElem(self.ctx, tuple(c * k % p for c in self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, FFElem) and self.coeffs == other.coeffs \
            and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.n, self.coeffs))

    def __repr__(self) -> str:
        return f"FFElem({list(self.coeffs)} over GF({self.ctx.p}^{self.ctx.n}))"

    def identity(self) -> "FFElem":
        return self.ctx.one()


def _quad_is_zero(z: tuple[FFElem, FFElem]) -> bool:
    return z[0].is_zero() and z[1].is_zero()


def _quad_mul(z1, z2, delta: FFElem):
    """(x1 + y1 s)(x2 + y2 s) with s^2 = delta."""
    x1, y1 = z1
    x2, y2 = z2
    return (x1 * x2 + y1 * y2 * delta, x1 * y2 + y1 * x2)


def _quad_pow(z, e: int, delta: FFElem):
    ctx = z[0].ctx
    r = (ctx.one(), ctx.zero())
    b = z
    while e:
        if e & 1:
            r = _quad_mul(r, b, delta)
        b = _quad_mul(b, b, delta)
        e >>= 1
    return r


class QuadElem:
    """Element u + v*y of F_{p^n}[y]/(y^2 - a*y + 1) for a designated a.

    Used to host a root of x^2 - a x + 1 when that quadratic is
    irreducible over F_{p^n}; the root y then has order dividing p^n + 1.
    When the quadratic splits the ring degenerates to F_{p^n} x F_{p^n}
    and order computations must use a field root instead (lift_alpha
    picks the right home).
    """

    __slots__ = ("a", "u", "v")

    def __init__(self, a: FFElem, u: FFElem, v: FFElem):
        self.a = a
        self.u = u
        self.v = v

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    def __mul__(self, other: "QuadElem") -> "QuadElem":
        # y^2 = a*y - 1
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        cross = v1 * v2
        return QuadElem(self.a, u1 * u2 - cross, u1 * v2 + v1 * u2 + cross * self.a)

    def __pow__(self, e: int) -> "QuadElem":
        r = self.identity()
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def identity(self) -> "QuadElem":
        return QuadElem(self.a, self.ctx.one(), self.ctx.zero())

    def is_one(self) -> bool:
        return self.u == self.ctx.one() and self.v.is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuadElem) and self.a == other.a
                and self.u == other.u and self.v == other.v)

    def __repr__(self) -> str:
        return f"QuadElem({self.u!r} + {self.v!r}*y; a={self.a!r})"


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def make_field(p: int, n: int) -> FieldCtx:
    """Deterministic context for F_{p^n}; p an odd prime, n >= 1.

    The modulus is the lex-smallest monic irreducible of degree n and the
    group orders p^n -+ 1 come pre-factored.  Characteristic 2 is rejected:
    with p = 2 the values 2 and -2 collapse onto 0 and the three special
    vertices of the dynamics degenerate.
    """
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p == 2:
        raise ValueError("characteristic 2 is not supported (2 = -2 = 0)")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = p ** n
    return FieldCtx(p, n, _lex_min_irreducible(p, n),
                    factor_int(q - 1), factor_int(q + 1))


def mult_order(x: Union[FFElem, QuadElem], group_order: FactoredInt) -> FactoredInt:
    """Exact multiplicative order of x, given a factored multiple of it.

    Divides each prime out of group_order while the power stays 1.
    Raises if x^group_order != 1 (wrong ambient group supplied).
    """
    one = x.identity()
    if x == one:
        return FactoredInt(())
    n_val = group_order.value
    if x ** n_val != one:
        raise ValueError("x^group_order != 1: wrong ambient group supplied")
    o = n_val
    for qprime, _ in group_order.factors:
        while o % qprime == 0 and x ** (o // qprime) == one:
            o //= qprime
    out = []
    for qprime, e in group_order.factors:
        k = 0
        while o % qprime == 0:
            o //= qprime
            k += 1
        if k:
            out.append((qprime, k))
    return FactoredInt(tuple(out))


def _sqrt(a: FFElem) -> FFElem:
    """A square root of a nonzero square in F_{p^n} (Tonelli-Shanks)."""
    ctx = a.ctx
    q = ctx.q
    s = ctx.order_minus.nu(2)
    m = (q - 1) >> s
    z = ctx.nonresidue() ** m
    c, t, r = z, a ** m, a ** ((m + 1) // 2)
    while not t == ctx.one():
        t2, i = t, 0
        while t2 != ctx.one():
            t2 = t2 * t2
            i += 1
        b = c
        for _ in range(s - i - 1):
            b = b * b
        r = r * b
        c = b * b
        t = t * c
        s = i
    return r


def lift_alpha(a: FFElem, ctx: Optional[FieldCtx] = None
               ) -> tuple[Union[FFElem, QuadElem], Branch]:
    """A root alpha of x^2 - a x + 1, tagged by the group containing it.

    When the quadratic splits, alpha lies in F_{p^n}^x (branch "minus",
    order divides p^n - 1) and the root with the smaller canonical index
    is returned.  Otherwise alpha is the residue class of y in
    F_{p^n}[y]/(y^2 - a y + 1) (branch "plus", order divides p^n + 1).
    a = 2 lifts to 1 and a = -2 to -1.
    """
    ctx = ctx or a.ctx
    two = ctx.from_int(2)
    if a == two:
        return ctx.one(), MINUS
    if a == -two:
        return -ctx.one(), MINUS
    disc = a * a - ctx.from_int(4)
    half = (ctx.q - 1) // 2
    if (disc ** half) == ctx.one():
        s = _sqrt(disc)
        inv2 = ctx.from_int(2).inverse()
        r1 = (a + s) * inv2
        r2 = (a - s) * inv2
        return (r1 if r1.index <= r2.index else r2), MINUS
    return QuadElem(a, ctx.zero(), ctx.one()), PLUS


def element_degree(a: FFElem, ctx: Optional[FieldCtx] = None) -> int:
    """[F_p(a) : F_p]: the length of the Frobenius orbit of a."""
    ctx = ctx or a.ctx
    b = a ** ctx.p
    m = 1
    while b != a:
        b = b ** ctx.p
        m += 1
    return m


def alpha_order(a: FFElem, ctx: Optional[FieldCtx] = None) -> tuple[int, Branch]:
    """Order of the lifted root of x^2 - a x + 1, with its branch tag.

    Uses the context's precomputed walk tables for enumerable fields and
    falls back to lift_alpha + mult_order above the table cap.
    """
    ctx = ctx or a.ctx
    if ctx.q <= FieldCtx.TABLE_CAP:
        ords, branch = ctx.alpha_order_tables()
        i = a.index
        return int(ords[i]), (MINUS if branch[i] == 0 else PLUS)
    alpha, br = lift_alpha(a, ctx)
    group = ctx.order_minus if br == MINUS else ctx.order_plus
    return mult_order(alpha, group).value, br
