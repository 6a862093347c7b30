"""Frobenius machinery: bracket powers, e-th roots, trace maps, compatibility.

Everything here is coefficient surgery in the basis x^a, 0 <= a_i <= q-1:
a polynomial h has a unique expansion h = sum h_a^q x^a, and the e-th root of
(h) is generated by the coefficient polynomials h_a.  Over F_p the q-th root
of a scalar is the scalar itself, so extracting h_a is pure exponent
arithmetic: split each exponent vector E as E = q*floor(E/q) + (E mod q).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal, ideal_sum, ideals_equal
from .ring import Polynomial, RingContext

STABLE_CLOSURE_MAX_STEPS = 2**16


@dataclass(frozen=True)
class CartierMap:
    """A map Phi_S(z^{1/q} . -) given by the Fedder element z and level e."""

    ring: RingContext
    e: int
    z: Polynomial

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 1:
            raise ValueError("e must be a natural number >= 1")
        if self.z.ring != self.ring:
            raise ValueError("z lives in a different ring")
        if self.z.is_zero():
            raise ValueError("z must be nonzero")

    @property
    def q(self) -> int:
        return self.ring.p**self.e


@dataclass(frozen=True)
class FedderReport:
    in_colon: bool
    outside_mq: bool

    @property
    def surjective(self) -> bool:
        return self.in_colon and self.outside_mq


def bracket_power(I: Ideal, q: int) -> Ideal:
    """I^{[q]}: the ideal of q-th powers of the generators, q = p^e."""
    I.ring.prime_power_exponent(q)
    return Ideal(I.ring, tuple(g.frobenius_power(q) for g in I.gens))


def _root_parts(h: Polynomial, q: int):
    """The nonzero coefficient polynomials h_a of h = sum h_a^q x^a."""
    buckets: dict = {}
    for exps, c in h.terms.items():
        res = tuple(e % q for e in exps)
        inner = tuple(e // q for e in exps)
        buckets.setdefault(res, {})[inner] = c
    ring = h.ring
    return {res: Polynomial._raw(ring, terms) for res, terms in buckets.items()}


def eth_root(K: Ideal, e: int) -> Ideal:
    """I_e(K): the smallest J with J^{[q]} containing K, q = p^e."""
    if not isinstance(e, int) or e < 1:
        raise ValueError("e must be a natural number >= 1")
    q = K.ring.p**e
    gens = []
    for h in K.gens:
        gens.extend(_root_parts(h, q).values())
    return Ideal(K.ring, tuple(gens))


def cartier_trace(m: CartierMap, f: Polynomial) -> Polynomial:
    """Phi_S((z*f)^{1/q}): the coefficient of z*f at a = (q-1, ..., q-1)."""
    if f.ring != m.ring:
        raise ValueError("polynomial from a different ring")
    q = m.q
    corner = (q - 1,) * m.ring.n
    parts = _root_parts(m.z * f, q)
    return parts.get(corner, m.ring.zero())


def _scaled(z: Polynomial, J: Ideal) -> Ideal:
    return Ideal(J.ring, tuple(z * g for g in J.gens))


def is_compatible(J: Ideal, m: CartierMap) -> bool:
    """True iff I_e(z*J) is contained in J (the map preserves J)."""
    if J.ring != m.ring:
        raise ValueError("ideal from a different ring")
    root = eth_root(_scaled(m.z, J), m.e)
    return all(J.contains(g) for g in root.gens)


def is_compatible_bracket(J: Ideal, m: CartierMap) -> bool:
    """Cross-check route: z*J inside J^{[q]}, no root extraction."""
    if J.ring != m.ring:
        raise ValueError("ideal from a different ring")
    Jq = bracket_power(J, m.q)
    return all(Jq.contains(m.z * g) for g in J.gens)


def fedder_check(I: Ideal, m: CartierMap) -> FedderReport:
    """Does Phi_S(z^{1/q} . -) descend to S/I, and surjectively?

    in_colon tests z in (I^{[q]} : I) generator by generator; outside_mq is a
    per-term exponent test, since a polynomial lies in the monomial ideal
    m^{[q]} = (x_i^q) exactly when each of its terms does.
    """
    if I.ring != m.ring:
        raise ValueError("ideal from a different ring")
    if I.is_unit():
        raise ValueError("Fedder check needs a proper ideal")
    q = m.q
    Iq = bracket_power(I, q)
    in_colon = all(Iq.contains(m.z * g) for g in I.gens)
    outside_mq = any(all(e <= q - 1 for e in exps) for exps in m.z.terms)
    return FedderReport(in_colon, outside_mq)


def stable_closure(m: CartierMap, c: Polynomial) -> Ideal:
    """Smallest ideal containing c stable under J -> I_e(zJ).

    The ascending chain J_0 = (c), J_{k+1} = J_k + I_e(z*J_k) stabilizes by
    Noetherianity; the iteration cap is a defensive guard only.  When c is a
    valid test element for the map, the limit maps onto the test ideal mod I;
    validity of c is the caller's business.
    """
    if c.ring != m.ring:
        raise ValueError("polynomial from a different ring")
    if c.is_zero():
        raise ValueError("stable closure needs a nonzero c")
    J = Ideal(m.ring, (c,))
    for _ in range(STABLE_CLOSURE_MAX_STEPS):
        step = eth_root(_scaled(m.z, J), m.e)
        Jn = ideal_sum(J, step)
        if ideals_equal(Jn, J):
            return J
        J = Jn
    raise RuntimeError(
        f"stable closure did not stabilize within {STABLE_CLOSURE_MAX_STEPS} steps; "
        "this should be impossible for ideals in a Noetherian ring"
    )
