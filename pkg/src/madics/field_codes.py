"""The four families of m-adic residue codes over a prime field.

With alpha a fixed primitive p-th root of unity in the splitting field
and ghat_i = prod_{k in Q_i} (x - alpha^k), the families are

    even-like class I   <g_i>,      g_i = (x**p - 1) / ghat_i
    odd-like class I    <ghat_i>
    even-like class II  <h_i>,      h_i = (x - 1) * ghat_i
    odd-like class II   <hhat_i>,   hhat_i = g_i / (x - 1)

All four require q to be an m-adic residue mod p (q in Q_0); that is
exactly the condition for the class products to have coefficients in
F_q.  Each code carries its generator and its idempotent generator,
always derived from the generator through the same Bezout mechanism.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import poly
from .errors import NotCoprime, QNotResidue
from .ffield import FieldCtx, make_extension, make_prime_field
from .residues import ResidueSystem

FAMILIES = ("even-I", "odd-I", "even-II", "odd-II")


@dataclass(frozen=True)
class CyclicCode:
    """A cyclic code of prime length p over GF(q), with its generator
    polynomial (monic, ascending coefficients) and idempotent generator."""

    ctx: FieldCtx
    p: int
    family: str
    index: int
    generator: tuple
    idempotent: tuple

    @property
    def q(self):
        return self.ctx.q

    @property
    def dimension(self):
        return self.p - (len(self.generator) - 1)

    def contains(self, word):
        """Membership test: the word polynomial must be a multiple of
        the generator mod x**p - 1."""
        w = poly.mod_xn_minus_1(self.ctx, tuple(word), self.p)
        return poly.divides(self.ctx, self.generator, w)


def all_ones_h(p):
    """h = 1 + x + ... + x**(p-1), the all-ones polynomial."""
    return (1,) * p


@functools.lru_cache(maxsize=None)
def _pth_root_setup(q, p):
    """Splitting field of x**p - 1 over GF(q) and the canonical
    primitive p-th root of unity alpha in it."""
    t = make_prime_field(p).multiplicative_order(q % p)
    ext = make_extension(q, t)
    alpha = ext.pow(ext.primitive_element, (ext.size - 1) // p)
    return ext, alpha


def splitting_field(q, p):
    """Public view of the pinned splitting field: (extension ctx, alpha)."""
    return _pth_root_setup(q, p)


@functools.lru_cache(maxsize=None)
def _class_products(system, q, alpha_exp):
    """ghat_i = prod_{k in Q_i} (x - alpha^(u*k)) descended to F_q ints.

    alpha_exp = u selects which primitive p-th root anchors the
    class-to-factor labeling; u must be coprime to p.  Labelings for
    different u differ by a rotation of the class index.
    """
    p = system.p
    if q % p == 0:
        raise NotCoprime("q must be coprime to the code length")
    if not system.is_madic_residue(q):
        raise QNotResidue(
            f"q={q} is not an m-adic residue mod {p}; "
            "class products do not descend to the base field")
    if alpha_exp % p == 0:
        raise NotCoprime("alpha_exp must be coprime to p")
    ext, alpha = _pth_root_setup(q, p)
    root = ext.pow(alpha, alpha_exp)
    ghats = []
    for cls in system.classes:
        prod = (ext.one,)
        for k in cls:
            prod = poly.mul(ext, prod, (ext.neg(ext.pow(root, k)), ext.one))
        if any(c >= q for c in prod):
            raise AssertionError("class product did not descend to F_q")
        ghats.append(tuple(int(c) for c in prod))
    return tuple(ghats)


def _codes(system, ctx, family, gens):
    out = []
    for i, g in enumerate(gens):
        e = poly.idempotent_of_cyclic(ctx, g, system.p)
        out.append(CyclicCode(ctx, system.p, family, i, g, e))
    return tuple(out)


def even_like_i(system, ctx, alpha_exp=1):
    """The m even-like class-I codes <g_i>, g_i = (x**p - 1)/ghat_i."""
    xp1 = poly.xn_minus_1(ctx, system.p)
    ghats = _class_products(system, ctx.q, alpha_exp)
    gens = [poly.div_exact(ctx, xp1, gh) for gh in ghats]
    return _codes(system, ctx, "even-I", gens)


def odd_like_i(system, ctx, alpha_exp=1):
    """The m odd-like class-I codes <ghat_i>."""
    ghats = _class_products(system, ctx.q, alpha_exp)
    return _codes(system, ctx, "odd-I", ghats)


def even_like_ii(system, ctx, alpha_exp=1):
    """The m even-like class-II codes <h_i>, h_i = (x - 1)*ghat_i."""
    x_minus_1 = (ctx.neg(ctx.one), ctx.one)
    ghats = _class_products(system, ctx.q, alpha_exp)
    gens = [poly.mul(ctx, x_minus_1, gh) for gh in ghats]
    return _codes(system, ctx, "even-II", gens)


def odd_like_ii(system, ctx, alpha_exp=1):
    """The m odd-like class-II codes <hhat_i>, hhat_i = g_i/(x - 1)."""
    x_minus_1 = (ctx.neg(ctx.one), ctx.one)
    xp1 = poly.xn_minus_1(ctx, system.p)
    ghats = _class_products(system, ctx.q, alpha_exp)
    gens = []
    for gh in ghats:
        g = poly.div_exact(ctx, xp1, gh)
        # x - 1 divides every even-like class-I generator
        gens.append(poly.div_exact(ctx, g, x_minus_1))
    return _codes(system, ctx, "odd-II", gens)


_BUILDERS = {
    "even-I": even_like_i,
    "odd-I": odd_like_i,
    "even-II": even_like_ii,
    "odd-II": odd_like_ii,
}


@functools.lru_cache(maxsize=None)
def family_codes(system, ctx, family, alpha_exp=1):
    """All m codes of one family, cached per (system, ctx, labeling)."""
    if family not in _BUILDERS:
        raise ValueError(f"unknown family {family!r}")
    return _BUILDERS[family](system, ctx, alpha_exp)
