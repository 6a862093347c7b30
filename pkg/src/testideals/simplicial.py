"""Square-free monomial ideals as simplicial complexes, and the fast paths
they admit.

For the face ideal of a complex everything Frobenius-theoretic is
combinatorial: primary components are facet complements, the bracket colon
has a component-wise formula, the variable ideals compatible with the full
trace are all of them, and the test ideal is generated by the facet
monomials.  Routines here compute both the combinatorial answer and, where a
general-purpose route exists, expose it for cross-checking.

Vertices are 1-based (vertex i is the variable x_i); subsets of vertices are
handled as sorted tuples externally and as bitmasks internally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .frobenius import CartierMap, is_compatible
from .groebner import Ideal, ideal_intersect
from .quotient import image_mod
from .ring import Polynomial, RingContext

ENUMERATION_CAP = 20


class EnumerationCapExceeded(ValueError):
    """Refused a 2^n sweep because n exceeds the cap."""


def _mask_to_subset(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _subset_to_mask(subset):
    mask = 0
    for i in subset:
        mask |= 1 << (i - 1)
    return mask


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 1..n, stored by its facets.

    Input faces are deduplicated and non-maximal ones are dropped, so
    ``facets`` is always an antichain; it is sorted for a canonical form.
    The void input is rejected, but the empty complex {{}} (whose only face
    is the empty set) is allowed.
    """

    n: int
    facets: tuple

    def __init__(self, n, faces):
        if not isinstance(n, int) or n < 1:
            raise ValueError("vertex count must be a positive integer")
        masks = set()
        for face in faces:
            m = 0
            for v in face:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise ValueError(f"vertex {v!r} is not in 1..{n}")
                m |= 1 << (v - 1)
            masks.add(m)
        if not masks:
            raise ValueError(
                "a complex needs at least one face; use the empty face {} "
                "for the empty complex"
            )
        maximal = [m for m in masks if not any(m != o and m | o == o for o in masks)]
        facets = tuple(sorted(_mask_to_subset(m) for m in maximal))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", facets)

    @property
    def facet_masks(self):
        return tuple(_subset_to_mask(f) for f in self.facets)

    @property
    def dimension(self):
        return max(len(f) for f in self.facets) - 1

    def faces(self):
        """All face masks, as a set of bitmasks."""
        seen = set()
        for fm in self.facet_masks:
            sub = fm
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        return seen

    def is_face(self, subset):
        m = _subset_to_mask(subset)
        return any(m | fm == fm for fm in self.facet_masks)

    def pruned_input_notice(self, faces):
        """Text describing dropped input faces, or None if nothing dropped."""
        given = {_subset_to_mask(f) for f in faces}
        kept = set(self.facet_masks)
        dropped = sorted(given - kept)
        if not dropped:
            return None
        shown = ", ".join(
            "{" + ",".join(map(str, _mask_to_subset(m))) + "}" for m in dropped
        )
        return f"note: dropped non-maximal or duplicate faces: {shown}"


@dataclass(frozen=True)
class FVectorReport:
    f_vector: tuple
    f_max: int
    dimension: int


@dataclass(frozen=True)
class CompatiblePrimesReport:
    """Variable-prime audit for the full trace map on S/I_Delta.

    ``all_variable_primes`` is every nonempty subset of the vertices in Gray
    order (each is compatible); ``containing_I`` are those whose prime contains
    the face ideal, i.e. the face complements; ``minimal_primes`` are the
    facet complements; ``retained`` is containing_I minus minimal, the list the
    test ideal intersects.  The whole ring is always compatible and is
    reported as a flag rather than a subset.
    """

    all_variable_primes: tuple
    containing_I: tuple
    minimal_primes: tuple
    retained: tuple
    whole_ring_compatible: bool = True


def variable_ideal(ring: RingContext, subset) -> Ideal:
    """The prime (x_i : i in subset); the zero ideal for the empty subset."""
    gens = []
    for i in sorted(set(subset)):
        if not 1 <= i <= ring.n:
            raise ValueError(f"vertex {i} is not in 1..{ring.n}")
        gens.append(ring.variable(i - 1))
    return Ideal(ring, gens)


def complex_from_ideal(I: Ideal) -> SimplicialComplex:
    """The complex whose face ideal is I; I must be square-free monomial."""
    ring = I.ring
    n = ring.n
    if n > ENUMERATION_CAP:
        raise EnumerationCapExceeded(f"{n} variables exceeds the cap of {ENUMERATION_CAP}")
    supports = []
    for g in I.gens:
        if len(g.terms) != 1:
            raise ValueError(f"generator is not a monomial: {g}")
        exps = next(iter(g.terms))
        if any(e > 1 for e in exps):
            raise ValueError(f"generator is not square-free: {g}")
        m = 0
        for i, e in enumerate(exps):
            if e:
                m |= 1 << i
        if m == 0:
            raise ValueError("the unit ideal is not a face ideal")
        supports.append(m)
    faces = [
        mask
        for mask in range(1 << n)
        if not any(s & mask == s for s in supports)
    ]
    face_set = set(faces)
    facets = [
        _mask_to_subset(m)
        for m in faces
        if not any(m != o and m | o == o for o in face_set)
    ]
    return SimplicialComplex(n, facets)


def ideal_from_complex(ring: RingContext, delta: SimplicialComplex) -> Ideal:
    """The face ideal, generated by the minimal non-face monomials."""
    if ring.n != delta.n:
        raise ValueError("ring and complex have different vertex counts")
    n = ring.n
    if n > ENUMERATION_CAP:
        raise EnumerationCapExceeded(f"{n} variables exceeds the cap of {ENUMERATION_CAP}")
    face_set = delta.faces()
    gens = []
    for mask in range(1, 1 << n):
        if mask in face_set:
            continue
        lower = mask
        minimal = True
        b = mask
        while b:
            bit = b & -b
            if (mask ^ bit) not in face_set:
                minimal = False
                break
            b ^= bit
        if minimal:
            exps = [1 if mask >> i & 1 else 0 for i in range(n)]
            gens.append(ring.monomial(exps))
    key = ring.order().key
    gens.sort(key=lambda g: key(next(iter(g.terms))), reverse=True)
    return Ideal(ring, gens)


def f_report(delta: SimplicialComplex) -> FVectorReport:
    counts = {}
    for mask in delta.faces():
        k = bin(mask).count("1")
        if k:
            counts[k] = counts.get(k, 0) + 1
    top = max(counts) if counts else 0
    fvec = tuple(counts.get(k, 0) for k in range(1, top + 1))
    return FVectorReport(f_vector=fvec, f_max=len(delta.facets), dimension=delta.dimension)


def primary_decomposition(delta: SimplicialComplex):
    """Facet complements, in facet order: the components of the face ideal."""
    full = (1 << delta.n) - 1
    return [_mask_to_subset(full ^ fm) for fm in delta.facet_masks]


def default_cartier(ring: RingContext, e: int) -> CartierMap:
    """The trace map with z = (x_1 ... x_n)^(q-1)."""
    q = ring.p ** e
    z = ring.monomial([q - 1] * ring.n)
    return CartierMap(ring, e, z)


def compatible_primes(I: Ideal, e: int, cap: int = ENUMERATION_CAP) -> CompatiblePrimesReport:
    """Audit all variable primes against the full trace on S/I.

    I must be a face ideal.  Every variable prime is verified compatible (a
    failure would be an internal fault); containment of I sorts them into the
    retained list that the test ideal intersects.
    """
    ring = I.ring
    n = ring.n
    if n > cap:
        raise EnumerationCapExceeded(f"{n} variables exceeds the cap of {cap}")
    delta = complex_from_ideal(I)
    m = default_cartier(ring, e)
    alls = []
    containing = []
    face_set = delta.faces()
    full = (1 << n) - 1
    for i in range(1, 1 << n):
        mask = i ^ (i >> 1)
        subset = _mask_to_subset(mask)
        if not is_compatible(variable_ideal(ring, subset), m):
            raise RuntimeError(f"internal fault: variable prime {subset} not compatible")
        alls.append(subset)
        if (full ^ mask) in face_set:
            containing.append(subset)
    if not I.gens:
        containing.append(())
    minimal = [tuple(c) for c in primary_decomposition(delta)] if I.gens else [()]
    minimal_set = set(minimal)
    retained = tuple(s for s in containing if s not in minimal_set)
    return CompatiblePrimesReport(
        all_variable_primes=tuple(alls),
        containing_I=tuple(containing),
        minimal_primes=tuple(minimal),
        retained=retained,
    )


def bracket_colon(I: Ideal, q: int) -> Ideal:
    """(I^[q] : I) for a face ideal, by the component-wise formula.

    Each primary component P_sigma contributes P_sigma^[q] + ((prod of its
    variables)^(q-1)); the colon is the intersection of the contributions.
    """
    ring = I.ring
    ring.prime_power_exponent(q)
    delta = complex_from_ideal(I)
    result = None
    for sigma in primary_decomposition(delta):
        gens = [ring.variable(i - 1) ** q for i in sigma]
        exps = [q - 1 if (i + 1) in sigma else 0 for i in range(ring.n)]
        gens.append(ring.monomial(exps))
        comp = Ideal(ring, gens)
        result = comp if result is None else ideal_intersect(result, comp)
    return result


def test_ideal(ring: RingContext, delta: SimplicialComplex, algorithm: str = "facet") -> Ideal:
    """The test ideal of S/I_Delta under the full trace.

    algorithm="facet" takes the facet monomials directly;
    algorithm="intersection" intersects the retained-component augmentations
    (P_{F^c}, x_F) over the facets and reduces mod the face ideal.  The two
    agree; the second exists as an independent route.
    """
    if ring.n != delta.n:
        raise ValueError("ring and complex have different vertex counts")
    if algorithm == "facet":
        gens = []
        for f in delta.facets:
            exps = [1 if (i + 1) in f else 0 for i in range(ring.n)]
            gens.append(ring.monomial(exps))
        key = ring.order().key
        gens.sort(key=lambda g: key(next(iter(g.terms))), reverse=True)
        return Ideal(ring, gens)
    if algorithm == "intersection":
        I = ideal_from_complex(ring, delta)
        full = (1 << ring.n) - 1
        meet = None
        for f, fm in zip(delta.facets, delta.facet_masks):
            comp_gens = [ring.variable(i - 1) for i in _mask_to_subset(full ^ fm)]
            exps = [1 if (i + 1) in f else 0 for i in range(ring.n)]
            comp_gens.append(ring.monomial(exps))
            aug = Ideal(ring, comp_gens)
            meet = aug if meet is None else ideal_intersect(meet, aug)
        return Ideal(ring, image_mod(meet, I).display_gens)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def tightness_bound(delta: SimplicialComplex) -> int:
    """Facet count: the number of components the test-ideal intersection uses."""
    return len(delta.facets)
