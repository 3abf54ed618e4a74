"""Exact arithmetic in GF(3^2k), the quadratic extension tower over GF(3).

Elements are stored as base-3 integer encodings of their coefficient vectors
in the polynomial basis: trits (c0, c1, ..., c_{2k-1}) with c0 least
significant, so encoding = sum(c_i * 3^i).  The encoding order doubles as the
canonical tie-breaking order everywhere in this package.

A FieldCtx precomputes discrete-log tables for a primitive element together
with Zech logarithms, so multiplication and addition of nonzero elements are
single table lookups.  FieldElement is a thin operator-overloading wrapper for
interactive use; the hot paths work on raw integer encodings via the ctx
methods.
"""

import itertools
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Optional

import numpy as np

DEFAULT_MAX_K = 6


# ---------------------------------------------------------------------------
# GF(3)[x] helpers for modulus handling (coefficient tuples, low degree first)

def _gf3_trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _gf3_divmod(a, b):
    a = list(a)
    b = _gf3_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero")
    inv_lead = b[-1]  # over GF(3): 1->1, 2->2
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = (a[i + len(b) - 1] * inv_lead) % 3
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % 3
    return _gf3_trim(q), _gf3_trim(a)


def gf3_is_irreducible(f) -> bool:
    """Trial division of a monic GF(3) polynomial by all lower-degree monics."""
    f = _gf3_trim(f)
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(3), repeat=d):
            if not _gf3_divmod(f, (*tail, 1))[1]:
                return False
    return True


def default_modulus(degree: int) -> tuple:
    """Lexicographically smallest monic irreducible of the given degree.

    Coefficients are compared low degree first, so the choice is deterministic
    and independent of any randomness.
    """
    for tail in itertools.product(range(3), repeat=degree):
        f = (*tail, 1)
        if gf3_is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {degree}")


def parse_modulus(text: str) -> tuple:
    """Parse the comma-separated trit list format, e.g. "1,0,1" for x^2+1."""
    try:
        coeffs = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed modulus {text!r}") from None
    if not coeffs or any(c not in (0, 1, 2) for c in coeffs):
        raise ValueError(f"malformed modulus {text!r}: trits must be 0, 1 or 2")
    return coeffs


def format_modulus(modulus) -> str:
    return ",".join(str(c) for c in modulus)


def _factorize(n: int) -> list:
    """Prime factors of n by trial division (n stays small here)."""
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


@dataclass(frozen=True)
class SpecialConstants:
    """Distinguished constants of a ctx, all as integer encodings.

    epsilon: the smaller-encoded root of X^2 + 1 (always present; 4 | 3^2k - 1).
    theta: the smallest-encoded root of X^3 - X - 1, present iff k % 3 == 0.
    sqrt_eps_minus_1, sqrt_theta: canonical square roots when they exist.
    """
    epsilon: int
    theta: Optional[int]
    sqrt_eps_minus_1: Optional[int]
    sqrt_theta: Optional[int]


class FieldCtx:
    """Arithmetic context for GF(3^2k) with log/exp and Zech-log tables.

    Public attributes: k, m (= 2k), q (= 3^k), order (= 3^2k), modulus
    (monic GF(3) coefficient tuple, low degree first) and alpha (encoding of
    the smallest primitive element).
    """

    def __init__(self, k: int, modulus=None, max_k: int = DEFAULT_MAX_K):
        if not isinstance(k, int) or not 1 <= k <= max_k:
            raise ValueError(f"unsupported degree: k={k} outside 1..{max_k}")
        self.k = k
        self.m = 2 * k
        self.q = 3 ** k
        self.order = 3 ** self.m
        self._n = self.order - 1
        if modulus is None:
            modulus = default_modulus(self.m)
        else:
            modulus = _gf3_trim(modulus)
            if len(modulus) != self.m + 1 or modulus[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {self.m}, got {format_modulus(modulus)}")
            if not gf3_is_irreducible(modulus):
                raise ValueError(f"reducible modulus: {format_modulus(modulus)}")
        self.modulus = modulus
        self._n_primes = _factorize(self._n)
        self.alpha = self._find_primitive()
        self._build_tables()
        self._special: Optional[SpecialConstants] = None

    # -- construction ------------------------------------------------------

    def decode(self, enc: int) -> tuple:
        """Trit vector (c0, ..., c_{m-1}) of an encoding."""
        v = []
        for _ in range(self.m):
            v.append(enc % 3)
            enc //= 3
        return tuple(v)

    def encode(self, trits: Iterable[int]) -> int:
        trits = tuple(trits)
        if len(trits) > self.m or any(t not in (0, 1, 2) for t in trits):
            raise ValueError(f"bad trit vector {trits}")
        return sum(c * 3 ** i for i, c in enumerate(trits))

    def _vec_mul(self, a: tuple, b: tuple) -> tuple:
        # schoolbook multiply of trit vectors, reduced mod the ctx modulus
        prod = [0] * (2 * self.m)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % 3
        _, rem = _gf3_divmod(prod, self.modulus)
        rem = list(rem) + [0] * self.m
        return tuple(rem[: self.m])

    def _vec_pow(self, a: tuple, e: int) -> tuple:
        result = (1,) + (0,) * (self.m - 1)
        base = a
        while e:
            if e & 1:
                result = self._vec_mul(result, base)
            base = self._vec_mul(base, base)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        one = (1,) + (0,) * (self.m - 1)
        for cand in range(2, self.order):
            v = self.decode(cand)
            if all(self._vec_pow(v, self._n // p) != one for p in self._n_primes):
                return cand
        raise ValueError("no primitive element found")  # unreachable

    def _build_tables(self):
        n, m = self._n, self.m
        alpha_vec = self.decode(self.alpha)
        s = isqrt(n) + 1
        baby = [(1,) + (0,) * (m - 1)]
        for _ in range(s - 1):
            baby.append(self._vec_mul(baby[-1], alpha_vec))
        giant_vec = self._vec_mul(baby[-1], alpha_vec)  # alpha^s
        # right-multiplication by alpha^s is GF(3)-linear; build its matrix
        cols = [giant_vec]
        x_vec = (0, 1) + (0,) * (m - 2)
        for _ in range(m - 1):
            cols.append(self._vec_mul(cols[-1], x_vec))
        mat = np.array(cols, dtype=np.int64)  # row i = alpha^s * x^i
        block = np.array(baby, dtype=np.int64)
        pieces = [block]
        total = s
        while total < n:
            block = block @ mat % 3
            pieces.append(block)
            total += s
        rows = np.concatenate(pieces)[:n]
        pow3 = 3 ** np.arange(m, dtype=np.int64)
        exp_arr = rows @ pow3
        if exp_arr[0] != 1 or len(np.unique(exp_arr)) != n:
            raise ValueError("exp table is not a permutation; element not primitive")
        log_arr = np.zeros(self.order, dtype=np.int64)
        log_arr[exp_arr] = np.arange(n, dtype=np.int64)
        # 1 + alpha^i flips only the constant trit: enc - c0 + ((c0 + 1) % 3)
        c0 = exp_arr % 3
        plus_one = exp_arr - c0 + (c0 + 1) % 3
        zech_arr = np.where(plus_one == 0, -1, log_arr[plus_one])
        exp_list = exp_arr.tolist()
        self._exp2 = exp_list + exp_list  # doubled to skip a mod in hot paths
        self._log = log_arr.tolist()
        self._log[0] = None
        self._zech = zech_arr.tolist()

    # -- element arithmetic on encodings -----------------------------------

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        d = self._log[b] - la
        z = self._zech[d if d >= 0 else d + self._n]
        if z < 0:
            return 0
        return self._exp2[la + z]

    def neg(self, a: int) -> int:
        if a == 0:
            return 0
        return self._exp2[self._log[a] + self._n // 2]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp2[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return self._exp2[self._n - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("division by zero")
            return 0 if e else 1
        return self._exp2[self._log[a] * e % self._n]

    def frobenius(self, a: int, e: int = 1) -> int:
        """x -> x^(3^e), the e-fold characteristic-3 Frobenius."""
        if a == 0:
            return 0
        return self._exp2[self._log[a] * pow(3, e, self._n) % self._n]

    def conjugate_q(self, a: int) -> int:
        """x -> x^q; on the norm-1 subgroup mu_{q+1} this is inversion."""
        return self.frobenius(a, self.k)

    def alpha_pow(self, i: int) -> int:
        """Encoding of alpha^i for any integer i."""
        return self._exp2[i % self._n]

    def is_square(self, a: int) -> bool:
        """Euler criterion: a is a square iff a^((order-1)/2) is 0 or 1."""
        if a == 0:
            return True
        return self.pow(a, self._n // 2) == 1

    def sqrt(self, a: int) -> Optional[int]:
        """Tonelli-Shanks square root; returns the smaller-encoded root.

        Returns None when a is not a square.  The primitive element alpha is
        the non-residue (its discrete log is 1, which is odd).
        """
        if a == 0:
            return 0
        if not self.is_square(a):
            return None
        n = self._n
        m_odd, s = n, 0
        while m_odd % 2 == 0:
            m_odd //= 2
            s += 1
        c = self.pow(self.alpha, m_odd)
        t = self.pow(a, m_odd)
        r = self.pow(a, (m_odd + 1) // 2)
        while t != 1:
            t2, i = t, 0
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            b = c
            for _ in range(s - i - 1):
                b = self.mul(b, b)
            r = self.mul(r, b)
            c = self.mul(b, b)
            t = self.mul(t, c)
            s = i
        return min(r, self.neg(r))

    # -- distinguished constants -------------------------------------------

    def special_constants(self) -> SpecialConstants:
        if self._special is None:
            eps = self.alpha_pow(self._n // 4)
            eps = min(eps, self.neg(eps))
            if self.add(self.mul(eps, eps), 1) != 0:
                raise ValueError("internal error: epsilon^2 + 1 != 0")
            theta = solve_theta(self)
            self._special = SpecialConstants(
                epsilon=eps,
                theta=theta,
                sqrt_eps_minus_1=self.sqrt(self.sub(eps, 1)),
                sqrt_theta=self.sqrt(theta) if theta is not None else None,
            )
        return self._special

    def theta_roots(self) -> tuple:
        """All roots of X^3 - X - 1 in this field (empty unless k % 3 == 0)."""
        theta = self.special_constants().theta
        if theta is None:
            return ()
        return (theta, self.frobenius(theta, 1), self.frobenius(theta, 2))

    # -- conveniences --------------------------------------------------------

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise ValueError("element belongs to a different ctx")
            return value
        if isinstance(value, int):
            return FieldElement(self, value)
        if isinstance(value, str):
            return FieldElement(self, parse_element(self, value))
        return FieldElement(self, self.encode(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __repr__(self):
        return f"FieldCtx(k={self.k}, modulus={format_modulus(self.modulus)})"


def ctx_create(k: int, modulus=None, max_k: int = DEFAULT_MAX_K) -> FieldCtx:
    """Build a GF(3^2k) context; modulus defaults to the lex-smallest irreducible."""
    return FieldCtx(k, modulus, max_k)


def primitive_element(ctx: FieldCtx) -> int:
    """Encoding of the smallest generator of the multiplicative group."""
    return ctx.alpha


def solve_epsilon(ctx: FieldCtx) -> int:
    """Smaller-encoded root of X^2 + 1 (exists for every k)."""
    return ctx.special_constants().epsilon


def solve_theta(ctx: FieldCtx) -> Optional[int]:
    """Smallest-encoded root of X^3 - X - 1, or None when k % 3 != 0.

    Roots of X^3 - X - 1 have multiplicative order 13, so candidates are
    scanned inside the order-13 subgroup instead of the whole field.
    """
    if ctx.k % 3 != 0:
        return None
    step = ctx._n // 13
    roots = []
    for j in range(1, 13):
        c = ctx.alpha_pow(step * j)
        if ctx.sub(ctx.sub(ctx.pow(c, 3), c), 1) == 0:
            roots.append(c)
    if len(roots) != 3:
        raise ValueError("internal error: X^3 - X - 1 must have 3 roots here")
    return min(roots)


def parse_element(ctx: FieldCtx, text: str) -> int:
    """Parse an element: decimal encoding, or comma-separated trit list."""
    text = text.strip()
    if "," in text:
        return ctx.encode(parse_modulus(text))
    try:
        enc = int(text)
    except ValueError:
        raise ValueError(f"malformed element {text!r}") from None
    if not 0 <= enc < ctx.order:
        raise ValueError(f"element encoding {enc} out of range 0..{ctx.order - 1}")
    return enc


class FieldElement:
    """Operator-overloading wrapper around a ctx and an integer encoding.

    Integer operands in mixed arithmetic are interpreted as encodings; the
    prime subfield occupies encodings 0, 1, 2, so small-scalar arithmetic
    reads naturally.
    """

    __slots__ = ("ctx", "enc")

    def __init__(self, ctx: FieldCtx, enc: int):
        if not 0 <= enc < ctx.order:
            raise ValueError(f"element encoding {enc} out of range 0..{ctx.order - 1}")
        self.ctx = ctx
        self.enc = enc

    @property
    def coeffs(self) -> tuple:
        return self.ctx.decode(self.enc)

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("elements from different ctxs")
            return other.enc
        if isinstance(other, int):
            if not 0 <= other < self.ctx.order:
                raise ValueError(f"element encoding {other} out of range")
            return other
        return None

    def _wrap(self, enc: int) -> "FieldElement":
        return FieldElement(self.ctx, enc)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.ctx.add(self.enc, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.ctx.sub(self.enc, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.ctx.sub(o, self.enc))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.enc))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.ctx.mul(self.enc, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.ctx.div(self.enc, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.ctx.div(o, self.enc))

    def __pow__(self, e: int):
        return self._wrap(self.ctx.pow(self.enc, e))

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        return NotImplemented if o is None else self.enc == o

    def __hash__(self):
        return hash((self.enc, id(self.ctx)))

    def __int__(self):
        return self.enc

    def __bool__(self):
        return self.enc != 0

    def frobenius(self, e: int = 1) -> "FieldElement":
        return self._wrap(self.ctx.frobenius(self.enc, e))

    def conjugate_q(self) -> "FieldElement":
        return self._wrap(self.ctx.conjugate_q(self.enc))

    def sqrt(self) -> Optional["FieldElement"]:
        r = self.ctx.sqrt(self.enc)
        return None if r is None else self._wrap(r)

    def is_square(self) -> bool:
        return self.ctx.is_square(self.enc)

    def __repr__(self):
        return f"FieldElement({self.enc}, GF(3^{self.ctx.m}))"
