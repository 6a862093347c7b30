"""Ideals of R = S/I seen through S: images, equality and minimal generators.

Minimal generator counts use graded Nakayama, so they are only trusted when
the ideals involved are homogeneous for some positive weight vector; the
weight vector is searched for exactly (no floats) and inhomogeneous input is
refused rather than silently treated as the polynomial-ring count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from math import gcd

from .groebner import CANONICAL_ORDER, Ideal, ideal_sum, ideals_equal
from .ring import RingContext


class InhomogeneousIdealError(ValueError):
    """No positive weight vector makes the generators homogeneous."""


@dataclass(frozen=True)
class QuotientIdeal:
    """An ideal of S/I presented by S-data."""

    ambient: Ideal
    preimage: Ideal
    display_gens: tuple

    def __post_init__(self):
        for g in self.ambient.gens:
            if not self.preimage.contains(g):
                raise ValueError("preimage does not contain the ambient ideal")


def _nullspace_basis(rows, n):
    """Integer basis of {w in Q^n : rows . w = 0}, via exact elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -mat[ri][fc]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        basis.append(tuple(ints))
    return basis


def find_positive_weight(ring: RingContext, polys):
    """A positive integer weight vector making every poly homogeneous, or None.

    The standard grading is tried first; otherwise the exponent differences
    within each polynomial span a lattice whose orthogonal complement is
    searched over small integer combinations of an exact nullspace basis.
    """
    n = ring.n
    rows = []
    for f in polys:
        exps = list(f.terms)
        for other in exps[1:]:
            rows.append(tuple(a - b for a, b in zip(other, exps[0])))
    rows = [r for r in rows if any(r)]
    if not rows:
        return (1,) * n
    if all(sum(r) == 0 for r in rows):
        return (1,) * n
    basis = _nullspace_basis(rows, n)
    if not basis:
        return None
    d = len(basis)
    max_bound = 6 if d <= 4 else 2
    for bound in range(1, max_bound + 1):
        for coeffs in _cartesian(range(-bound, bound + 1), repeat=d):
            if max(abs(c) for c in coeffs) != bound:
                continue
            w = [0] * n
            for c, vec in zip(coeffs, basis):
                if c:
                    for i in range(n):
                        w[i] += c * vec[i]
            if all(x > 0 for x in w):
                g = 0
                for x in w:
                    g = gcd(g, x)
                return tuple(x // g for x in w)
    return None


def minimal_generators(J: Ideal, I: Ideal, shuffle=None):
    """(count, generators) of (J+I)/I, by greedy Nakayama pruning.

    Candidates are the reduced-basis elements of J+I outside I; any candidate
    lying in the ideal of the others plus I is dropped until stable.  The
    count is the graded mu, so a common positive weight vector for all
    generators of J+I is required.  ``shuffle`` (a random.Random) permutes
    the candidate list first; by Nakayama the count never depends on it.
    """
    if J.ring != I.ring:
        raise ValueError("ideals from different rings")
    ring = J.ring
    total = ideal_sum(J, I)
    if find_positive_weight(ring, total.gens) is None:
        raise InhomogeneousIdealError(
            "no positive weight vector makes the generators homogeneous; "
            "minimal generator counts are only computed in the graded case"
        )
    candidates = [g for g in total.groebner_basis(CANONICAL_ORDER) if not I.contains(g)]
    if shuffle is not None:
        shuffle.shuffle(candidates)
    survivors = list(candidates)
    changed = True
    while changed:
        changed = False
        for i in range(len(survivors)):
            rest = survivors[:i] + survivors[i + 1 :]
            if Ideal(ring, tuple(rest) + I.gens).contains(survivors[i]):
                survivors.pop(i)
                changed = True
                break
    return len(survivors), tuple(survivors)


def image_mod(J: Ideal, I: Ideal) -> QuotientIdeal:
    """The image of J in S/I, displayed by minimal generators."""
    count, gens = minimal_generators(J, I)
    return QuotientIdeal(ambient=I, preimage=ideal_sum(J, I), display_gens=gens)


def equal_mod(J1: Ideal, J2: Ideal, I: Ideal) -> bool:
    if J1.ring != I.ring or J2.ring != I.ring:
        raise ValueError("ideals from different rings")
    return ideals_equal(ideal_sum(J1, I), ideal_sum(J2, I))
