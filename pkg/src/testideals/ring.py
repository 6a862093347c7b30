"""Sparse multivariate polynomials over a prime field F_p.

Everything downstream (Groebner bases, Frobenius roots, test ideals) works
with the two value types defined here: an immutable ``RingContext`` fixing the
characteristic, the variable names and a default monomial order, and an
immutable ``Polynomial`` holding a sparse exponent-vector -> coefficient map.
Coefficients live in [1, p); exponents are bounded naturals and any operation
that would push one past ``EXPONENT_LIMIT`` raises instead of wrapping.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

EXPONENT_LIMIT = 2**62
CHAR_LIMIT = 2**31

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ExponentOverflowError(OverflowError):
    """An exponent grew past EXPONENT_LIMIT (q-th powers get large fast)."""


class ParseError(ValueError):
    """Polynomial or session text that does not match the grammar."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        elif column is not None:
            message = f"column {column}: {message}"
        super().__init__(message)


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin; the base set is exact for p < 3.3 * 10^24."""
    if p < 2:
        return False
    for b in _MR_BASES:
        if p % b == 0:
            return p == b
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x == 1 or x == p - 1:
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# monomial orders
#
# An order is exposed as a key function on exponent tuples: comparing keys
# with the native tuple comparison realizes the order.  Keys are memoized per
# order instance; the same few monomials get compared millions of times in a
# Buchberger run.


class MonomialOrder:
    tag: str = "?"

    def key(self, exps: tuple) -> tuple:
        raise NotImplementedError

    def __repr__(self):
        return f"MonomialOrder({self.tag})"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)


class DegRevLex(MonomialOrder):
    """Total degree first, ties by smaller exponent in the last differing variable."""

    tag = "degrevlex"

    def __init__(self):
        self._cache: dict = {}

    def key(self, exps):
        k = self._cache.get(exps)
        if k is None:
            k = (sum(exps), tuple(-e for e in reversed(exps)))
            self._cache[exps] = k
        return k


class Lex(MonomialOrder):
    tag = "lex"

    def key(self, exps):
        return exps


class BlockElim(MonomialOrder):
    """Block order eliminating the first k variables.

    Total degree in the first k variables dominates, so any monomial touching
    the auxiliary block beats every monomial that avoids it; ties fall back to
    degrevlex on the whole exponent vector.  Restricted to the remaining
    variables this is plain degrevlex, which is what lets an elimination
    Groebner basis hand back canonical degrevlex bases of intersections.
    """

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("elimination block must contain at least one variable")
        self.k = k
        self.tag = f"elim({k})"
        self._cache: dict = {}

    def key(self, exps):
        key = self._cache.get(exps)
        if key is None:
            key = (sum(exps[: self.k]), sum(exps), tuple(-e for e in reversed(exps)))
            self._cache[exps] = key
        return key


_ORDER_SINGLETONS: dict[str, MonomialOrder] = {"degrevlex": DegRevLex(), "lex": Lex()}
_ELIM_RE = re.compile(r"elim\((\d+)\)\Z")


def order_from_tag(tag: str) -> MonomialOrder:
    order = _ORDER_SINGLETONS.get(tag)
    if order is not None:
        return order
    m = _ELIM_RE.match(tag)
    if m:
        order = BlockElim(int(m.group(1)))
        _ORDER_SINGLETONS[tag] = order
        return order
    raise ValueError(f"unknown monomial order {tag!r}")


# ---------------------------------------------------------------------------
# the ring context

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    """Characteristic, variable names, default order.  Hashable and immutable."""

    p: int
    names: tuple
    default_order: str = "degrevlex"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p!r}")
        if self.p >= CHAR_LIMIT:
            raise ValueError(f"characteristic must be < 2^31, got {self.p}")
        if not self.names:
            raise ValueError("need at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name {name!r}")
        order_from_tag(self.default_order)

    @property
    def n(self) -> int:
        return len(self.names)

    def order(self, tag: str | None = None) -> MonomialOrder:
        return order_from_tag(tag if tag is not None else self.default_order)

    def prime_power_exponent(self, q: int) -> int:
        """The e with q = p^e, or ValueError when q is not a power of p."""
        if q < self.p:
            raise ValueError(f"{q} is not a power of p={self.p}")
        e, qq = 1, self.p
        while qq < q:
            qq *= self.p
            e += 1
        if qq != q:
            raise ValueError(f"{q} is not a power of p={self.p}")
        return e

    # element builders ------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        if c == 0:
            return self.zero()
        return Polynomial._raw(self, {(0,) * self.n: c})

    def variable(self, i: int) -> "Polynomial":
        """The i-th variable, 0-based."""
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial._raw(self, {tuple(exps): 1})

    def monomial(self, exps, coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str, line: int | None = None) -> "Polynomial":
        return parse_polynomial(self, text, line=line)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Sparse polynomial: dict mapping exponent tuples to nonzero F_p scalars.

    Instances are immutable by convention; ``terms`` exposes the internal dict
    and must be treated as read-only.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms):
        p, n = ring.p, ring.n
        canon = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length {len(exps)}, ring has {n} variables")
            for e in exps:
                if not isinstance(e, int) or e < 0:
                    raise ValueError(f"exponents must be naturals, got {exps}")
                if e > EXPONENT_LIMIT:
                    raise ExponentOverflowError(f"exponent {e} exceeds limit")
            c = coeff % p
            if c:
                prev = canon.get(exps)
                if prev is not None:
                    c = (prev + c) % p
                    if c:
                        canon[exps] = c
                    else:
                        del canon[exps]
                else:
                    canon[exps] = c
        self.ring = ring
        self._terms = canon
        self._hash = None

    @classmethod
    def _raw(cls, ring, canonical_terms: dict) -> "Polynomial":
        """Wrap an already-canonical dict without validation.  Internal."""
        self = object.__new__(cls)
        self.ring = ring
        self._terms = canonical_terms
        self._hash = None
        return self

    @property
    def terms(self) -> dict:
        return self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_term(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading(self, order: MonomialOrder | None = None):
        """(exponent tuple, coefficient) of the leading term; None when zero."""
        if not self._terms:
            return None
        order = order or self.ring.order()
        exps = max(self._terms, key=order.key)
        return exps, self._terms[exps]

    def coefficient(self, exps) -> int:
        return self._terms.get(tuple(exps), 0)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring.p, self.ring.names, frozenset(self._terms.items())))
            self._hash = h
        return h

    def _check_same_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_ring(other)
        p = self.ring.p
        out = dict(self._terms)
        get = out.get
        for exps, c in other._terms.items():
            s = (get(exps, 0) + c) % p
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._raw(self.ring, {e: p - c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero()
            if c == 1:
                return self
            p = self.ring.p
            return Polynomial._raw(self.ring, {e: c * cc % p for e, cc in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_ring(other)
        p = self.ring.p
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                s = (get(exps, 0) + ca * cb) % p
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        for exps in out:
            for e in exps:
                if e > EXPONENT_LIMIT:
                    raise ExponentOverflowError(f"exponent {e} exceeds limit")
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers take natural exponents")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def frobenius_power(self, q: int) -> "Polynomial":
        """f^q for q = p^e, computed termwise: exponents scale, scalars fix."""
        self.ring.prime_power_exponent(q)
        out = {}
        for exps, c in self._terms.items():
            scaled = tuple(e * q for e in exps)
            for e in scaled:
                if e > EXPONENT_LIMIT:
                    raise ExponentOverflowError(f"exponent {e} exceeds limit in q-th power")
            out[scaled] = c
        return Polynomial._raw(self.ring, out)

    # printing ----------------------------------------------------------

    def _term_text(self, exps, coeff) -> str:
        factors = []
        for name, e in zip(self.ring.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            return str(coeff)
        body = "*".join(factors)
        return body if coeff == 1 else f"{coeff}*{body}"

    def text(self, order: MonomialOrder | None = None) -> str:
        if not self._terms:
            return "0"
        order = order or self.ring.order()
        exps_list = sorted(self._terms, key=order.key, reverse=True)
        return " + ".join(self._term_text(e, self._terms[e]) for e in exps_list)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"<{self.text()}>"


# ---------------------------------------------------------------------------
# parsing
#
# Grammar (whitespace free between tokens): a polynomial is terms joined by
# '+' or '-'; a term is factors joined by '*'; a factor is an integer or a
# variable with an optional '^natural'.  An optional sign may lead.

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*^+\-]))")


def _tokenize(text: str, line: int | None):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r}", line, pos + 1)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int") + 1))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name") + 1))
        else:
            tokens.append(("op", m.group("op"), m.start("op") + 1))
        pos = m.end()
    return tokens


def parse_polynomial(ring: RingContext, text: str, line: int | None = None) -> Polynomial:
    tokens = _tokenize(text, line)
    if not tokens:
        raise ParseError("empty polynomial", line, 1)
    var_index = {name: i for i, name in enumerate(ring.names)}
    terms: dict = {}
    p, n = ring.p, ring.n
    i = 0
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1

    while True:
        # one term: factor (* factor)*
        coeff = sign
        exps = [0] * n
        expect_factor = True
        while expect_factor:
            if i >= len(tokens):
                raise ParseError("expected a factor", line, tokens[-1][2] if tokens else 1)
            kind, value, col = tokens[i]
            if kind == "int":
                coeff = coeff * value
                i += 1
            elif kind == "name":
                vi = var_index.get(value)
                if vi is None:
                    raise ParseError(f"unknown variable {value}", line, col)
                i += 1
                exp = 1
                if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "int":
                        raise ParseError("expected an integer exponent after '^'", line, col)
                    exp = tokens[i][1]
                    i += 1
                if exps[vi] + exp > EXPONENT_LIMIT:
                    raise ExponentOverflowError(f"exponent on {value} exceeds limit")
                exps[vi] += exp
            else:
                raise ParseError(f"unexpected {value!r}", line, col)
            # continue the term?
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
                i += 1
                expect_factor = True
            else:
                expect_factor = False
        key = tuple(exps)
        c = (terms.get(key, 0) + coeff) % p
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)
        if i >= len(tokens):
            break
        kind, value, col = tokens[i]
        if kind != "op" or value not in "+-":
            raise ParseError(f"expected '+' or '-', got {value!r}", line, col)
        sign = -1 if value == "-" else 1
        i += 1
    return Polynomial._raw(ring, terms)
