"""The non-chain ring R = F_q[v]/(v**s - v) and its CRT decomposition.

Elements are tuples of s ints: coefficients of 1, v, ..., v**(s-1).
The ring needs (s - 1) | (q - 1); then zeta = alpha**((q-1)/(s-1)) has
multiplicative order s - 1 and R splits into s copies of F_q through
the orthogonal idempotents

    eta_0     = 1 - v**(s-1)
    eta_(j+1) = (s-1)^(-1) * (sum_{k=1}^{s-2} zeta^(jk) v^k + v**(s-1))

for j = 0, ..., s-2.  Evaluation of v at the points
(0, 1, zeta^(-1), ..., zeta^(-(s-2))) realizes the isomorphism: eta_k
evaluates to 1 at point k and 0 at the others.  All identities are
validated at construction time.

A RingCtx satisfies the same coefficient-domain protocol as FieldCtx,
so the generic polynomial module works over R unchanged.
"""

from __future__ import annotations

import functools

from . import poly
from .errors import IncompatibleS, NonPrimeModulus
from .ffield import FieldCtx


class RingCtx:
    """F_q[v]/(v**s - v) with pinned zeta, idempotents and CRT points."""

    __slots__ = ("field", "s", "zeta", "eta", "crt_points", "zero", "one")

    def __init__(self, field, s, zeta, eta, crt_points):
        self.field = field
        self.s = s
        self.zeta = zeta
        self.eta = eta
        self.crt_points = crt_points
        self.zero = (0,) * s
        self.one = (1,) + (0,) * (s - 1)

    @property
    def q(self):
        return self.field.q

    # -- element arithmetic ---------------------------------------------

    def from_scalar(self, c):
        return (c % self.q,) + (0,) * (self.s - 1)

    def add(self, a, b):
        q = self.q
        return tuple((x + y) % q for x, y in zip(a, b))

    def sub(self, a, b):
        q = self.q
        return tuple((x - y) % q for x, y in zip(a, b))

    def neg(self, a):
        q = self.q
        return tuple(-x % q for x in a)

    def mul(self, a, b):
        # convolution with the fold v**e -> v**((e-1) mod (s-1) + 1)
        q, s = self.q, self.s
        out = [0] * s
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                e = i + j
                if e >= s:
                    e = (e - 1) % (s - 1) + 1
                out[e] = (out[e] + x * y) % q
        return tuple(out)

    def eval_v(self, a, point):
        """Evaluate at v = point (a base-field value)."""
        f = self.field
        acc = 0
        for c in reversed(a):
            acc = f.add(f.mul(acc, point), c)
        return acc

    def crt(self, a):
        """Component vector (a(point_0), ..., a(point_{s-1}))."""
        return tuple(self.eval_v(a, pt) for pt in self.crt_points)

    def crt_inv(self, values):
        """Element with the given CRT components: sum_k values[k]*eta_k."""
        q = self.q
        out = [0] * self.s
        for val, eta in zip(values, self.eta):
            if val:
                for i, c in enumerate(eta):
                    out[i] = (out[i] + val * c) % q
        return tuple(out)

    def is_unit(self, a):
        return all(c != 0 for c in self.crt(a))

    def inv(self, a):
        f = self.field
        return self.crt_inv(tuple(f.inv(c) for c in self.crt(a)))

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, RingCtx)
                and self.field == other.field and self.s == other.s)

    def __hash__(self):
        return hash((self.field, self.s))

    def __repr__(self):
        return f"RingCtx(GF({self.q})[v]/(v^{self.s} - v))"


@functools.lru_cache(maxsize=None)
def make_ring(ctx: FieldCtx, s: int) -> RingCtx:
    """Construct F_q[v]/(v**s - v); requires prime q and (s-1) | (q-1)."""
    if ctx.t != 1:
        raise NonPrimeModulus("the coefficient field of R must be prime")
    if s < 2:
        raise IncompatibleS("s must be >= 2")
    q = ctx.q
    if (q - 1) % (s - 1) != 0:
        raise IncompatibleS(f"(s-1)={s - 1} must divide (q-1)={q - 1}")

    zeta = ctx.pow(ctx.primitive_element, (q - 1) // (s - 1))
    if ctx.multiplicative_order(zeta) != s - 1:
        raise AssertionError("zeta does not have order s - 1")

    eta0 = [1] + [0] * (s - 1)
    eta0[s - 1] = (q - 1) % q  # 1 - v^(s-1)
    etas = [tuple(eta0)]
    inv_sm1 = ctx.inv((s - 1) % q)
    for j in range(s - 1):
        vec = [0] * s
        for k in range(1, s - 1):
            vec[k] = ctx.pow(zeta, j * k)
        vec[s - 1] = 1
        etas.append(tuple(ctx.mul(inv_sm1, c) for c in vec))

    points = (0, 1) + tuple(ctx.inv(ctx.pow(zeta, k)) for k in range(1, s - 1))
    ring = RingCtx(ctx, s, zeta, tuple(etas), points)
    _validate_ring(ring)
    return ring


def _validate_ring(ring):
    one, zero = ring.one, ring.zero
    total = zero
    for i, ei in enumerate(ring.eta):
        if ring.mul(ei, ei) != ei:
            raise AssertionError(f"eta_{i} is not idempotent")
        for j in range(i + 1, ring.s):
            if ring.mul(ei, ring.eta[j]) != zero:
                raise AssertionError(f"eta_{i} * eta_{j} != 0")
        total = ring.add(total, ei)
        comps = ring.crt(ei)
        if any(c != (1 if k == i else 0) for k, c in enumerate(comps)):
            raise AssertionError(f"eta_{i} has wrong CRT components")
    if total != one:
        raise AssertionError("idempotents do not sum to 1")

# ---------------- polynomials over R ----------------

def lift_poly(ring, coeffs):
    """Embed an F_q polynomial into R[x] coefficientwise."""
    return poly.trim(ring, (ring.from_scalar(c) for c in coeffs))


def ring_poly_component(ring, rp, k):
    """k-th CRT component of a polynomial over R, as an F_q polynomial."""
    pt = ring.crt_points[k]
    return poly.trim(ring.field, (ring.eval_v(c, pt) for c in rp))


def ring_poly_combine(ring, components):
    """Polynomial over R with the given component polynomials,
    zero-padded to the longest component."""
    width = max((len(c) for c in components), default=0)
    out = []
    for i in range(width):
        vals = tuple(c[i] if i < len(c) else 0 for c in components)
        out.append(ring.crt_inv(vals))
    return poly.trim(ring, out)


def all_ones_ring(ring, p):
    """h = 1 + x + ... + x**(p-1) over R."""
    return (ring.one,) * p


def format_ring_poly(ring, rp, var="x"):
    """Text form with v-polynomial coefficients, e.g. ``1+(1+2*v)*x+v*x^2``."""
    terms = []
    for i, c in enumerate(rp):
        if c == ring.zero:
            continue
        scalar = all(x == 0 for x in c[1:])
        inner = poly.format_poly(c, var="v")
        if i == 0:
            terms.append(inner if scalar else f"({inner})")
            continue
        xpart = var if i == 1 else f"{var}^{i}"
        if c == ring.one:
            terms.append(xpart)
        elif scalar:
            terms.append(f"{inner}*{xpart}")
        else:
            terms.append(f"({inner})*{xpart}")
    return "+".join(terms) if terms else "0"
