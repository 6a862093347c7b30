"""Buchberger engine and ideal arithmetic.

Ideals cache one reduced Groebner basis per monomial order; the reduced basis
under degrevlex doubles as the canonical identity of the ideal, so equality,
membership and deduplication all go through it.  Intersections use the classic
single tag variable t and a block elimination order; colons divide an
intersection exactly.

The engine internals work on plain ``{exps: coeff}`` dicts and keep basis
elements monic as ``(lead monomial, tail term list)`` pairs, which keeps the
inner reduction loop free of Polynomial object overhead.
"""

from __future__ import annotations

import heapq
import threading

from .ring import MonomialOrder, Polynomial, RingContext, order_from_tag

# When set, every reduced basis the engine returns is re-checked against the
# S-polynomial zero-reduction criterion before being handed out.  Tests flip
# this on for targeted workloads; it is too slow to leave on everywhere.
VERIFY_BASES = False

CANONICAL_ORDER = "degrevlex"


def _resolve_tag(order) -> str:
    if order is None:
        return None
    if isinstance(order, MonomialOrder):
        return order.tag
    if isinstance(order, str):
        order_from_tag(order)  # validate
        return order
    raise ValueError(f"not a monomial order: {order!r}")


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


# ---------------------------------------------------------------------------
# dict-level reduction


def _nf_dict(f: dict, reducers: list, p: int, key) -> dict:
    """Full normal form of f against monic (lm, tail) reducers."""
    if not f:
        return f
    work = dict(f)
    out = {}
    while work:
        lt = max(work, key=key)
        c = work.pop(lt)
        reduced = False
        for lm, tail in reducers:
            fits = True
            for x, y in zip(lm, lt):
                if x > y:
                    fits = False
                    break
            if fits:
                shift = tuple(y - x for x, y in zip(lm, lt))
                for m, cc in tail:
                    mm = tuple(x + y for x, y in zip(m, shift))
                    s = (work.get(mm, 0) - c * cc) % p
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                reduced = True
                break
        if not reduced:
            out[lt] = c
    return out


def _make_entry(terms: dict, p: int, key):
    """Monic (lm, tail) view of a nonzero dict polynomial."""
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc != 1:
        inv = pow(lc, -1, p)
        tail = [(m, c * inv % p) for m, c in terms.items() if m != lm]
    else:
        tail = [(m, c) for m, c in terms.items() if m != lm]
    return lm, tail


def _entry_terms(entry) -> dict:
    lm, tail = entry
    terms = dict(tail)
    terms[lm] = 1
    return terms


def _spoly_dict(ei, ej, p: int) -> dict:
    """S-polynomial of two monic (lm, tail) entries."""
    (lmi, taili), (lmj, tailj) = ei, ej
    lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
    si = tuple(l - a for l, a in zip(lcm, lmi))
    sj = tuple(l - b for l, b in zip(lcm, lmj))
    out: dict = {}
    for m, c in taili:
        out[tuple(x + y for x, y in zip(m, si))] = c
    for m, c in tailj:
        mm = tuple(x + y for x, y in zip(m, sj))
        s = (out.get(mm, 0) - c) % p
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def _monomial_basis(dicts: list, key) -> list:
    """Minimal monomial generators: the reduced basis of a monomial ideal."""
    exps = sorted({next(iter(d)) for d in dicts}, key=lambda e: (sum(e), e))
    kept: list = []
    for e in exps:  # increasing degree, so only earlier entries can divide e
        if not any(_divides(k, e) for k in kept):
            kept.append(e)
    kept.sort(key=key, reverse=True)
    return [{e: 1} for e in kept]


def _buchberger_dicts(dicts: list, p: int, n: int, key) -> list:
    """Reduced Groebner basis of nonzero dict polynomials; returns dicts."""
    if all(len(d) == 1 for d in dicts):
        return _monomial_basis(dicts, key)

    one = (0,) * n

    # light interreduction of the input set
    work = sorted(dicts, key=lambda d: key(max(d, key=key)))
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            others = [_make_entry(d, p, key) for j, d in enumerate(work) if j != i and d]
            if not work[i]:
                continue
            red = _nf_dict(work[i], others, p, key)
            if red != work[i]:
                changed = True
                work[i] = red
    basis_dicts = [d for d in work if d]
    if not basis_dicts:
        return []
    if any(one in d and len(d) == 1 for d in basis_dicts):
        return [{one: 1}]

    G = [_make_entry(d, p, key) for d in basis_dicts]

    pending: set = set()
    heap: list = []

    def push_pairs(t: int):
        lmt = G[t][0]
        for i in range(t):
            lmi = G[i][0]
            lcm = tuple(max(a, b) for a, b in zip(lmi, lmt))
            if all(a + b == c for a, b, c in zip(lmi, lmt, lcm)):
                continue  # product criterion: disjoint leads reduce to zero
            pending.add((i, t))
            heapq.heappush(heap, (key(lcm), i, t, lcm))

    for t in range(len(G)):
        push_pairs(t)

    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        # chain criterion: some third lead divides the lcm and both side
        # pairs were already dealt with
        skip = False
        for t in range(len(G)):
            if t == i or t == j:
                continue
            if _divides(G[t][0], lcm):
                a = (i, t) if i < t else (t, i)
                b = (j, t) if j < t else (t, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly_dict(G[i], G[j], p)
        if not s:
            continue
        h = _nf_dict(s, G, p, key)
        if not h:
            continue
        if len(h) == 1 and one in h:
            return [{one: 1}]
        G.append(_make_entry(h, p, key))
        push_pairs(len(G) - 1)

    minimal = _minimalize(G, key)
    final = _tail_reduce([_entry_terms(e) for e in minimal], p, key)
    final.sort(key=lambda d: key(max(d, key=key)), reverse=True)
    return final


def _minimalize(entries: list, key) -> list:
    """Keep only entries whose lead no other kept lead divides.

    Processing by increasing lead key is enough: a proper divisor always has a
    strictly smaller key, and of two equal leads the first one wins.
    """
    by_lead = sorted(range(len(entries)), key=lambda i: key(entries[i][0]))
    kept: list = []
    for idx in by_lead:
        lm = entries[idx][0]
        if not any(_divides(entries[t][0], lm) for t in kept):
            kept.append(idx)
    return [entries[idx] for idx in kept]


def _tail_reduce(dicts: list, p: int, key) -> list:
    """Sequential full reduction of each monic dict against the others."""
    for i in range(len(dicts)):
        others = [_make_entry(dicts[j], p, key) for j in range(len(dicts)) if j != i]
        dicts[i] = _nf_dict(dicts[i], others, p, key)
    return [d for d in dicts if d]


def buchberger(gens, order=None) -> list:
    """Unique reduced Groebner basis of the given generators.

    ``order`` is an order tag ("degrevlex", "lex", "elim(k)"), a
    MonomialOrder, or None for the ring default.  Generators must share one
    ring; zero generators are dropped.  Returns a list of monic Polynomials
    sorted by decreasing lead monomial.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    tag = _resolve_tag(order) or ring.default_order
    key = order_from_tag(tag).key
    dicts = [g.terms for g in gens]
    out = _buchberger_dicts(dicts, ring.p, ring.n, key)
    basis = [Polynomial._raw(ring, d) for d in out]
    if VERIFY_BASES and basis:
        if not is_groebner_basis(basis, tag):
            raise AssertionError("engine produced a non-Groebner basis")
    return basis


def normal_form(f: Polynomial, basis, order=None) -> Polynomial:
    """Remainder of f on division by the basis; every term fully reduced."""
    basis = [g for g in basis if not g.is_zero()]
    ring = f.ring
    for g in basis:
        if g.ring != ring:
            raise ValueError("polynomials from different rings")
    tag = _resolve_tag(order) or ring.default_order
    key = order_from_tag(tag).key
    reducers = [_make_entry(g.terms, ring.p, key) for g in basis]
    return Polynomial._raw(ring, _nf_dict(f.terms, reducers, ring.p, key))


def s_polynomial(f: Polynomial, g: Polynomial, order=None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of zero")
    if f.ring != g.ring:
        raise ValueError("polynomials from different rings")
    ring = f.ring
    tag = _resolve_tag(order) or ring.default_order
    key = order_from_tag(tag).key
    p = ring.p
    s = _spoly_dict(_make_entry(f.terms, p, key), _make_entry(g.terms, p, key), p)
    return Polynomial._raw(ring, s)


def is_groebner_basis(basis, order=None) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    basis = [g for g in basis if not g.is_zero()]
    if len(basis) <= 1:
        return True
    ring = basis[0].ring
    tag = _resolve_tag(order) or ring.default_order
    key = order_from_tag(tag).key
    p = ring.p
    entries = [_make_entry(g.terms, p, key) for g in basis]
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            s = _spoly_dict(entries[i], entries[j], p)
            if _nf_dict(s, entries, p, key):
                return False
    return True


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Finitely generated ideal with per-order cached reduced bases.

    Python ``==`` stays identity; mathematical equality is ``ideals_equal``
    (reduced degrevlex bases compared), which is also the identity used to
    deduplicate ideal lists.
    """

    __slots__ = ("ring", "gens", "_bases", "_lock")

    def __init__(self, ring: RingContext, gens=()):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise ValueError(f"ideal generators must be polynomials, got {g!r}")
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        seen = set()
        kept = []
        for g in gens:
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            kept.append(g)
        self.ring = ring
        self.gens = tuple(kept)
        self._bases: dict = {}
        self._lock = threading.Lock()

    def groebner_basis(self, order=None) -> tuple:
        tag = _resolve_tag(order) or self.ring.default_order
        basis = self._bases.get(tag)
        if basis is None:
            with self._lock:
                basis = self._bases.get(tag)
                if basis is None:
                    basis = tuple(buchberger(self.gens, tag))
                    self._bases[tag] = basis
        return basis

    def canonical_basis(self) -> tuple:
        return self.groebner_basis(CANONICAL_ORDER)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        basis = self.canonical_basis()
        if not basis:
            return False
        return normal_form(f, basis, CANONICAL_ORDER).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        basis = self.canonical_basis()
        return len(basis) == 1 and basis[0].is_constant()

    def __repr__(self):
        inside = "; ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    return Ideal(I.ring, I.gens + J.gens)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    return I.canonical_basis() == J.canonical_basis()


def dedupe_ideals(ideals):
    """(unique ideals, groups of input indices) under canonical identity."""
    by_basis: dict = {}
    uniques = []
    groups = []
    for idx, I in enumerate(ideals):
        fp = I.canonical_basis()
        slot = by_basis.get(fp)
        if slot is None:
            by_basis[fp] = len(uniques)
            uniques.append(I)
            groups.append([idx])
        else:
            groups[slot].append(idx)
    return uniques, groups


# --- intersection via a tag variable ---------------------------------------

_INTERSECT_CACHE: dict = {}
_INTERSECT_CACHE_LIMIT = 1 << 18
_intersect_lock = threading.Lock()


def _fresh_name(names) -> str:
    name = "t"
    while name in names:
        name += "_"
    return name


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J through the ideal t*I + (1-t)*J and an elimination order."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, ())
    cache_key = (ring, frozenset((I.gens, J.gens)))
    hit = _INTERSECT_CACHE.get(cache_key)
    if hit is not None:
        return _wrap_canonical(ring, hit)

    ext = RingContext(ring.p, (_fresh_name(ring.names),) + ring.names, ring.default_order)
    t = ext.variable(0)
    one_minus_t = ext.one() - t

    def lift(g: Polynomial) -> Polynomial:
        return Polynomial._raw(ext, {(0,) + e: c for e, c in g.terms.items()})

    ext_gens = [t * lift(g) for g in I.gens]
    ext_gens += [one_minus_t * lift(g) for g in J.gens]
    basis = buchberger(ext_gens, "elim(1)")
    restricted = []
    for g in basis:
        if all(e[0] == 0 for e in g.terms):
            restricted.append(Polynomial._raw(ring, {e[1:]: c for e, c in g.terms.items()}))
    result = tuple(restricted)

    with _intersect_lock:
        if len(_INTERSECT_CACHE) >= _INTERSECT_CACHE_LIMIT:
            _INTERSECT_CACHE.clear()
        _INTERSECT_CACHE[cache_key] = result
    return _wrap_canonical(ring, result)


def _wrap_canonical(ring, basis_tuple) -> Ideal:
    out = Ideal(ring, basis_tuple)
    out._bases[CANONICAL_ORDER] = tuple(out.gens)
    return out


# --- colons -----------------------------------------------------------------


def _divexact(g: Polynomial, f: Polynomial) -> Polynomial:
    """Exact quotient g/f; a nonzero remainder is an internal fault."""
    ring = g.ring
    key = order_from_tag(CANONICAL_ORDER).key
    p = ring.p
    fterms = f.terms
    flm = max(fterms, key=key)
    flc = fterms[flm]
    finv = pow(flc, -1, p)
    work = dict(g.terms)
    quot: dict = {}
    while work:
        lt = max(work, key=key)
        if not _divides(flm, lt):
            raise RuntimeError("internal fault: exact division left a remainder")
        shift = tuple(y - x for x, y in zip(flm, lt))
        c = work[lt] * finv % p
        quot[shift] = c
        for m, cc in fterms.items():
            mm = tuple(x + y for x, y in zip(m, shift))
            s = (work.get(mm, 0) - c * cc) % p
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    if not quot:
        raise RuntimeError("internal fault: exact division of zero")
    return Polynomial._raw(ring, quot)


def colon_element(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) for a single nonzero polynomial."""
    if f.ring != I.ring:
        raise ValueError("polynomial from a different ring")
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    meet = ideal_intersect(I, Ideal(I.ring, (f,)))
    if meet.is_zero():
        return Ideal(I.ring, ())
    key = order_from_tag(CANONICAL_ORDER).key
    p = I.ring.p
    flc = f.terms[max(f.terms, key=key)]
    # quotients of a reduced basis form a minimal (leads just shift) but not
    # necessarily tail-reduced basis of the colon; one reduction pass fixes it
    quotients = [(_divexact(g, f) * flc).terms for g in meet.gens]
    reduced = _tail_reduce(list(quotients), p, key)
    reduced.sort(key=lambda d: key(max(d, key=key)), reverse=True)
    return _wrap_canonical(I.ring, tuple(Polynomial._raw(I.ring, d) for d in reduced))


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the meet of the elementwise colons over J's generators."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    acc = None
    for g in J.gens:
        part = colon_element(I, g)
        acc = part if acc is None else ideal_intersect(acc, part)
    return acc
