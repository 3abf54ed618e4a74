"""Dense univariate polynomials over a GF(3^2k) ctx.

Coefficients are stored as integer encodings, low degree first, with trailing
zeros trimmed; the zero polynomial has an empty coefficient tuple and degree
-1.  Quadratic factor extraction combines root pairing with a distinct-degree
step (gcd against x^(order^2) - x), so it stays exact without scanning all
order^2 monic quadratics.
"""

from typing import Iterable, Optional

from .gf3m import FieldCtx, FieldElement


class Poly:
    """Immutable dense polynomial; coefficients are element encodings."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        encs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.ctx is not ctx:
                    raise ValueError("coefficient from a different ctx")
                c = c.enc
            if not isinstance(c, int) or not 0 <= c < ctx.order:
                raise ValueError(f"bad coefficient {c!r}")
            encs.append(c)
        while encs and encs[-1] == 0:
            encs.pop()
        self.ctx = ctx
        self.coeffs = tuple(encs)

    @classmethod
    def monomial(cls, ctx: FieldCtx, degree: int, coeff: int = 1) -> "Poly":
        return cls(ctx, (0,) * degree + (coeff,))

    @classmethod
    def from_text(cls, ctx: FieldCtx, text: str) -> "Poly":
        """Parse the "c0,c1,...,cn" format of decimal element encodings."""
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed polynomial {text!r}") from None
        return cls(ctx, parts)

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly) or other.ctx is not self.ctx:
            raise ValueError("polynomials from different ctxs")

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ctx is self.ctx
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.coeffs, id(self.ctx)))

    def __add__(self, other):
        self._check(other)
        add = self.ctx.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.ctx, out)

    def __neg__(self):
        neg = self.ctx.neg
        return Poly(self.ctx, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            mul = self.ctx.mul
            return Poly(self.ctx, [mul(c, other) for c in self.coeffs])
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(self.ctx)
        add, mul = self.ctx.add, self.ctx.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = add(out[i + j], mul(a, b))
        return Poly(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.degree < other.degree:
            return Poly(self.ctx), self
        ctx = self.ctx
        sub, mul = ctx.sub, ctx.mul
        inv_lead = ctx.inv(other.leading)
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = mul(rem[i + dq], inv_lead)
            if c:
                quot[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = sub(rem[i + j], mul(c, b))
        return Poly(ctx, quot), Poly(ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def eval(self, x) -> int:
        """Horner evaluation; returns an encoding."""
        if isinstance(x, FieldElement):
            x = x.enc
        add, mul = self.ctx.add, self.ctx.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    __call__ = eval

    def monic(self) -> "Poly":
        if self.is_zero or self.leading == 1:
            return self
        return self * self.ctx.inv(self.leading)

    def derivative(self) -> "Poly":
        # i * c_i reduces mod 3, so every x^(3j) term drops out entirely
        mul = self.ctx.mul
        return Poly(self.ctx,
                    [mul(i % 3, c) for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self):
        return f"Poly(GF(3^{self.ctx.m}), [{self.to_text()}])"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials")
    while not q.is_zero:
        p, q = q, p % q
    return p.monic()


def pow_mod(base: Poly, exponent: int, modulus: Poly) -> Poly:
    """base^exponent mod modulus by binary exponentiation."""
    if exponent < 0:
        raise ValueError("negative exponent")
    result = Poly(base.ctx, (1,)) % modulus
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def roots_in_set(p: Poly, candidates) -> list:
    """All roots of p among the candidate encodings, in increasing encoding order."""
    if p.is_zero:
        raise ValueError("zero polynomial has every root")
    return [x for x in sorted(candidates) if p.eval(x) == 0]


def _strip_linear_factors(p: Poly, roots: list) -> Poly:
    ctx = p.ctx
    for r in roots:
        lin = Poly(ctx, (ctx.neg(r), 1))
        while p.degree >= 1 and p.eval(r) == 0:
            p = p // lin
    return p


def _split_quadratics(w: Poly) -> list:
    """Split a squarefree product of irreducible quadratics into its factors.

    Factors are separated by gcds against the norm map x^(q+1) mod w (which
    reduces to each factor's constant term) and, when every factor shares a
    constant term, the trace map x + x^q mod w.
    """
    if w.degree <= 0:
        return []
    if w.degree == 2:
        return [w.monic()]
    ctx = w.ctx
    x = Poly.monomial(ctx, 1)
    h = pow_mod(x, ctx.order, w)
    for probe in ((x * h) % w, (x + h) % w):
        for val in range(ctx.order):
            g = poly_gcd(w, probe - Poly(ctx, (val,)))
            if 0 < g.degree < w.degree:
                return _split_quadratics(g) + _split_quadratics(w // g)
    raise AssertionError("quadratic splitting failed")  # unreachable


def quadratic_factors(p: Poly) -> list:
    """All monic quadratics x^2 + a x + b dividing p, as sorted (a, b) pairs.

    Split quadratics come from pairing roots of p (self-pairs only for
    repeated roots, detected through gcd(p, p')); irreducible ones come from
    the distinct-degree component gcd(p, x^(order^2) - x) after all linear
    factors are removed.  Every returned pair is verified by exact division.
    """
    if p.degree < 2:
        raise ValueError("degree must be at least 2")
    ctx = p.ctx
    found = set()
    roots = roots_in_set(p, range(ctx.order))
    deriv = p.derivative()
    if deriv.is_zero:
        repeated = set(roots)  # p is a perfect cube, every root repeats
    else:
        g = poly_gcd(p, deriv)
        repeated = {r for r in roots if g.eval(r) == 0}
    for i, r in enumerate(roots):
        for s in roots[i:]:
            if r == s and r not in repeated:
                continue
            a = ctx.neg(ctx.add(r, s))
            b = ctx.mul(r, s)
            if (p % Poly(ctx, (b, a, 1))).is_zero:
                found.add((a, b))
    remainder = _strip_linear_factors(p, roots)
    if remainder.degree >= 2:
        x = Poly.monomial(ctx, 1)
        xq = pow_mod(x, ctx.order, remainder)
        xqq = pow_mod(xq, ctx.order, remainder)  # x^(order^2) via Frobenius
        w = poly_gcd(remainder, xqq - x)
        for q in _split_quadratics(w):
            a, b = q.coeffs[1], q.coeffs[0]
            if not (p % q).is_zero:
                raise AssertionError("extracted quadratic fails division check")
            found.add((a, b))
    return sorted(found)
