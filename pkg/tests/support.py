"""Shared test helpers: independent combinatorial oracles and random input
generators.  The oracles deliberately avoid the package's Groebner engine so
that agreement between the two is evidence, not circularity.
"""

import random

from testideals import Ideal, RingContext


# ---------------------------------------------------------------------------
# exponent-tuple combinatorics (independent of the library internals)

def exp_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def minimal_exponents(exps):
    """Drop every tuple divisible by another (the minimal monomial basis)."""
    uniq = sorted(set(exps), key=sum)
    kept = []
    for e in uniq:
        if not any(exp_divides(k, e) for k in kept):
            kept.append(e)
    return kept


def monomial_intersection_oracle(gens_a, gens_b):
    """I cap J for monomial ideals: pairwise lcms, minimalized."""
    return minimal_exponents([exp_lcm(a, b) for a in gens_a for b in gens_b])


def monomial_colon_oracle(gens, a):
    """(I : x^a) for a monomial ideal: componentwise truncated subtraction."""
    return minimal_exponents(
        [tuple(max(g - x, 0) for g, x in zip(e, a)) for e in gens]
    )


def monomial_root_oracle(gens, q):
    """I_e of a monomial ideal: exponent floor-division by q."""
    return minimal_exponents([tuple(g // q for g in e) for e in gens])


def monomial_ideal(ring, exps):
    return Ideal(ring, [ring.monomial(list(e)) for e in minimal_exponents(exps)])


def ideal_exponents(I):
    """Exponent tuples of a monomial ideal's generators."""
    out = []
    for g in I.gens:
        (e,) = g.terms
        out.append(e)
    return out


# ---------------------------------------------------------------------------
# random input generators (all seeded by the caller)

def random_exps(rng, n, max_exp=3):
    return tuple(rng.randint(0, max_exp) for _ in range(n))


def random_poly(rng, ring, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = random_exps(rng, ring.n, max_exp)
        c = rng.randint(1, ring.p - 1)
        terms[e] = (terms.get(e, 0) + c) % ring.p
    f = ring.zero()
    for e, c in terms.items():
        f = f + ring.monomial(list(e)) * c
    return f


def random_nonzero_poly(rng, ring, max_terms=4, max_exp=3):
    while True:
        f = random_poly(rng, ring, max_terms, max_exp)
        if not f.is_zero():
            return f


def random_monomial_ideal(rng, ring, max_gens=4, max_exp=3):
    exps = [random_exps(rng, ring.n, max_exp) for _ in range(rng.randint(1, max_gens))]
    exps = [e for e in exps if any(e)] or [(1,) + (0,) * (ring.n - 1)]
    return monomial_ideal(ring, exps)


def random_squarefree_ideal(rng, ring, max_gens=4):
    exps = []
    for _ in range(rng.randint(1, max_gens)):
        e = tuple(rng.randint(0, 1) for _ in range(ring.n))
        if any(e):
            exps.append(e)
    if not exps:
        exps = [tuple(1 if i == 0 else 0 for i in range(ring.n))]
    return monomial_ideal(ring, exps)


def random_ideal(rng, ring, max_gens=3, max_terms=3, max_exp=2):
    return Ideal(
        ring,
        [random_nonzero_poly(rng, ring, max_terms, max_exp) for _ in range(rng.randint(1, max_gens))],
    )


# ---------------------------------------------------------------------------
# simplicial complexes

def antichains(n):
    """All nonvoid antichains of nonempty subsets of [n], as mask tuples."""
    masks = list(range(1, 1 << n))
    out = []

    def rec(start, chosen):
        for i in range(start, len(masks)):
            m = masks[i]
            if any(m & c == m or m & c == c for c in chosen):
                continue
            chosen.append(m)
            out.append(tuple(chosen))
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def mask_to_face(m):
    return tuple(i + 1 for i in range(m.bit_length()) if m >> i & 1)


def all_complex_facet_lists(n):
    """Every complex on [n]: nonempty-face antichains plus the empty complex."""
    out = [tuple(mask_to_face(m) for m in ac) for ac in antichains(n)]
    out.append(((),))
    return out


def random_facet_list(rng, n, max_facets=6, max_size=None):
    k = rng.randint(1, max_facets)
    size_cap = max_size or n
    faces = []
    for _ in range(k):
        size = rng.randint(1, size_cap)
        faces.append(tuple(sorted(rng.sample(range(1, n + 1), size))))
    return tuple(faces)


def faces_oracle(n, gen_supports):
    """Faces of the complex of a square-free monomial ideal, brute force:
    F is a face iff no generator's support is contained in F."""
    faces = []
    for mask in range(1 << n):
        if not any(s & mask == s for s in gen_supports):
            faces.append(mask)
    return faces


def make_ring(p, n, prefix="x"):
    return RingContext(p, tuple(f"{prefix}{i}" for i in range(1, n + 1)))


# ---------------------------------------------------------------------------
# the determinantal worked example (2x2 minors over F_2)

MINORS_I = [
    "x1*x4 + x2*x4", "x1*x3 + x2*x4", "x1^2 + x4*x5",
    "x2*x3 + x2*x4", "x1*x2 + x4*x5", "x1*x2 + x3*x5",
]

MINORS_Z = {
    0: "x1^3*x2*x3 + x1^3*x2*x4 + x1^2*x3*x4*x5 + x1*x2*x3*x4*x5"
       " + x1*x2*x4^2*x5 + x2^2*x4^2*x5 + x3*x4^2*x5^2 + x4^3*x5^2",
    1: "x1*x2*x3^2*x5 + x1*x2*x4^2*x5 + x1^3*x2*x3 + x1^3*x2*x4"
       " + x1^2*x3*x4*x5 + x1*x2*x3*x4*x5 + x1*x2*x4^2*x5 + x2^2*x4^2*x5"
       " + x3*x4^2*x5^2 + x4^3*x5^2",
    2: "x1^3*x3*x4 + x1*x2^2*x3*x4 + x1^3*x2*x3 + x1^3*x2*x4"
       " + x1^2*x3*x4*x5 + x1*x2*x3*x4*x5 + x1*x2*x4^2*x5 + x2^2*x4^2*x5"
       " + x3*x4^2*x5^2 + x4^3*x5^2",
}

MINORS_RETAINED = {
    0: [
        ["x1", "x2", "x4", "x5"],
        ["x1", "x2", "x3", "x4", "x5"],
        ["x1", "x2", "x5", "x3 + x4"],
        ["x1", "x2", "x3", "x4"],
        ["x1", "x3", "x4", "x5"],
    ],
    1: [
        ["x3 + x4", "x2", "x1", "x5"],
        ["x1", "x2", "x3", "x4"],
        ["x1", "x2", "x3", "x4", "x5"],
        ["x1", "x2", "x3", "x5"],
        ["x1", "x3", "x4", "x5"],
    ],
    2: [
        ["x3 + x4", "x2", "x1", "x5"],
        ["x1", "x2", "x3", "x4"],
        ["x1", "x2", "x3", "x4", "x5"],
        ["x1", "x2", "x4", "x5"],
        ["x1", "x3", "x4", "x2 + x5"],
    ],
}

MINORS_TAU = {
    0: ["x1", "x2*x5", "x3*x4 + x4^2"],
    1: ["x1", "x4*x5", "x3*x5", "x2*x5", "x2*x4", "x3^2 + x3*x4", "x2*x3"],
    2: ["x1", "x4*x5", "x3*x5", "x2*x3", "x2*x4", "x4^2 + x3*x4", "x2^2 + x2*x5"],
}

# every proper compatible prime reported for each colon generator, in source
# order; the z0 list contains one pair of ideals that coincide over F_2
MINORS_COMPAT = {
    0: [
        ["x1", "x4"],
        ["x1", "x4", "x5"],
        ["x1 + x2", "x1^2 + x4*x5"],
        ["x1 + x2", "x2^2 + x4*x5"],
        ["x3 + x4", "x1 + x2", "x2^2 + x4*x5"],
        ["x1", "x2", "x5", "x3 + x4"],
        ["x1", "x2", "x4"],
        ["x1", "x2", "x5"],
        ["x1", "x3", "x4"],
        ["x1", "x2", "x3", "x4"],
        ["x1", "x2", "x4", "x5"],
        ["x1", "x3", "x4", "x5"],
        ["x1", "x2", "x3", "x4", "x5"],
    ],
    1: [
        ["x1 + x2", "x3 + x4", "x1^2 + x4*x5"],
        ["x3 + x4", "x2", "x1", "x5"],
        ["x1", "x2", "x5"],
        ["x1", "x3", "x4"],
        ["x1", "x2", "x3", "x4"],
        ["x1", "x3", "x4", "x5"],
        ["x1", "x2", "x3", "x5"],
        ["x1", "x2", "x3", "x4", "x5"],
    ],
    2: [
        ["x1 + x2", "x3 + x4", "x2^2 + x4*x5"],
        ["x3 + x4", "x2", "x1", "x5"],
        ["x1", "x2", "x5"],
        ["x1", "x3", "x4"],
        ["x1", "x2", "x3", "x4"],
        ["x1", "x2", "x4", "x5"],
        ["x1 + x2", "x1^2 + x4*x5"],
        ["x1", "x2", "x3", "x4", "x5"],
        ["x1", "x2", "x4"],
        ["x1", "x4"],
        ["x1", "x4", "x2 + x5"],
        ["x1", "x3", "x4", "x2 + x5"],
    ],
}

MINORS_MINIMAL_PRIMES = [
    ["x1 + x2", "x1^2 + x4*x5"],
    ["x1", "x2", "x5"],
    ["x1", "x4", "x3"],
]


def minors_ring():
    """Ring, defining ideal, and colon generators of the worked determinantal
    example: F_2[x1..x5] with I the 2x2 minors of a structured matrix."""
    ring = make_ring(2, 5)
    I = Ideal(ring, [ring.parse(t) for t in MINORS_I])
    zs = {k: ring.parse(t) for k, t in MINORS_Z.items()}
    return ring, I, zs


def minors_retained(ring, k):
    return [Ideal(ring, [ring.parse(t) for t in gens]) for gens in MINORS_RETAINED[k]]


def minors_tau(ring, k):
    return Ideal(ring, [ring.parse(t) for t in MINORS_TAU[k]])


def minors_compatible_list(ring, k):
    return [Ideal(ring, [ring.parse(t) for t in gens]) for gens in MINORS_COMPAT[k]]


def minors_minimal_primes(ring):
    return [Ideal(ring, [ring.parse(t) for t in gens]) for gens in MINORS_MINIMAL_PRIMES]


def general_pipeline_tau(ring, I, e):
    """Test ideal via the generic machinery only: enumerate variable primes,
    keep the compatible ones containing I, drop the minimal primes, intersect.
    Used as the oracle against both fast routes."""
    from testideals import (
        Ideal as _Ideal,
        compatible_primes,
        complex_from_ideal,
        default_cartier,
        ideal_intersect,
        is_compatible,
        primary_decomposition,
        variable_ideal,
    )

    m = default_cartier(ring, e)
    delta = complex_from_ideal(I)
    minimal = {tuple(sorted(c)) for c in primary_decomposition(delta)}
    meet = None
    for subset in compatible_primes(I, e).containing_I:
        if tuple(sorted(subset)) in minimal:
            continue
        piece = variable_ideal(ring, subset)
        assert is_compatible(piece, m)
        meet = piece if meet is None else ideal_intersect(meet, piece)
    if meet is None:
        return _Ideal(ring, [ring.one()])
    return meet


def shuffled(rng, items):
    items = list(items)
    rng.shuffle(items)
    return items
