"""Roots-of-unity subgroups and exact permutation testing.

The main check is the classic reduction for maps of the shape
f(x) = x^r * h(x^((3^2k - 1)/d)): f permutes the whole field iff
gcd(r, (3^2k - 1)/d) = 1 and x^r * h(x)^((3^2k - 1)/d) permutes the order-d
subgroup mu_d.  Both sides are computed exactly over integer encodings.
"""

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Optional

from .gf3m import FieldCtx
from .polyring import Poly


class UnityGroup:
    """The subgroup mu_d of d-th roots of unity, enumerated once."""

    __slots__ = ("ctx", "d", "elements", "_members")

    def __init__(self, ctx: FieldCtx, d: int, elements: tuple):
        self.ctx = ctx
        self.d = d
        self.elements = elements  # generation order: alpha^((n/d)*i)
        self._members = frozenset(elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.d

    def __contains__(self, enc):
        return enc in self._members

    @property
    def generator(self) -> int:
        return self.elements[1] if self.d > 1 else 1

    def __repr__(self):
        return f"UnityGroup(d={self.d}, GF(3^{self.ctx.m}))"


def mu_enumerate(ctx: FieldCtx, d: int) -> UnityGroup:
    """mu_d as alpha^((order-1)/d * i) for i in 0..d-1; d must divide order-1."""
    n = ctx.order - 1
    if not isinstance(d, int) or d < 1 or n % d != 0:
        raise ValueError(f"not a subgroup order: d={d} does not divide {n}")
    step = n // d
    return UnityGroup(ctx, d, tuple(ctx.alpha_pow(step * i) for i in range(d)))


@dataclass(frozen=True)
class MapReport:
    """Outcome of a bijection check over a finite domain.

    collision: first (x1, x2) in increasing encoding order with equal images.
    missed: smallest-encoded domain element with no preimage.
    """
    is_bijection: bool
    collision: Optional[tuple] = None
    missed: Optional[int] = None


def is_bijection_on(fn: Callable[[int], int], domain: Iterable[int]) -> MapReport:
    """Check whether fn restricted to the domain permutes it."""
    dom = sorted(domain)
    first_preimage: dict = {}
    collision = None
    for x in dom:
        y = fn(x)
        if y in first_preimage:
            if collision is None:
                collision = (first_preimage[y], x)
        else:
            first_preimage[y] = x
    missed = next((x for x in dom if x not in first_preimage), None)
    return MapReport(collision is None and missed is None, collision, missed)


def zieve_criterion(ctx: FieldCtx, r: int, d: int, h: Poly) -> tuple:
    """(cond1, cond2) of the subgroup permutation criterion.

    cond1: gcd(r, (order-1)/d) = 1.
    cond2: x^r * h(x)^((order-1)/d) permutes mu_d; if h vanishes anywhere on
    mu_d the map collapses and cond2 is reported false.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    mu = mu_enumerate(ctx, d)  # validates that d divides order-1
    n = ctx.order - 1
    e = n // d
    cond1 = gcd(r, e) == 1
    images = {}
    for x in mu:
        hx = h.eval(x)
        if hx == 0:
            return cond1, False
        images[x] = ctx.mul(ctx.pow(x, r), ctx.pow(hx, e))
    cond2 = is_bijection_on(images.__getitem__, mu).is_bijection
    return cond1, cond2
