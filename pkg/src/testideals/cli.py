"""Command line front end: session files plus one subcommand per operation.

A session file declares the ring once and binds named ideals, polynomials
and complexes; every subcommand then takes bound names or inline text.
Output is deterministic (canonical bases, fixed ordering) so runs diff
cleanly.  Exit codes: 0 success, 1 mathematical refusal, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field

from .frobenius import (
    CartierMap,
    bracket_power,
    cartier_trace,
    eth_root,
    fedder_check,
    is_compatible,
    stable_closure,
)
from .groebner import (
    Ideal,
    buchberger,
    colon_ideal,
    ideal_intersect,
    normal_form,
)
from .quotient import equal_mod, find_positive_weight, image_mod, minimal_generators
from .ring import ParseError, RingContext, is_prime, order_from_tag, parse_polynomial
from .simplicial import (
    SimplicialComplex,
    bracket_colon,
    compatible_primes,
    complex_from_ideal,
    default_cartier,
    f_report,
    ideal_from_complex,
    primary_decomposition,
    test_ideal,
    tightness_bound,
)

ENUMERATION_CAP_DEFAULT = 20


class UsageError(ValueError):
    """Bad invocation: unknown names, missing ring, wrong binding type."""


@dataclass
class Session:
    ring: RingContext
    bindings: dict = field(default_factory=dict)
    notices: tuple = ()


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FACET_RE = re.compile(r"\{([^{}]*)\}")


def _parse_facets(text, line=None):
    faces = []
    consumed = 0
    for m in _FACET_RE.finditer(text):
        between = text[consumed : m.start()]
        if between.strip(" ,\t"):
            raise ParseError(f"unexpected text {between.strip()!r} in facet list", line)
        inner = m.group(1).strip()
        if inner:
            try:
                faces.append(tuple(int(v) for v in inner.split(",")))
            except ValueError:
                raise ParseError(f"bad facet {{{inner}}}", line) from None
        else:
            faces.append(())
        consumed = m.end()
    if text[consumed:].strip(" ,\t"):
        raise ParseError(f"unexpected text {text[consumed:].strip()!r} in facet list", line)
    if not faces:
        raise ParseError("facet list is empty", line)
    return faces


def parse_session(text: str) -> Session:
    p = None
    names = None
    ring = None
    bindings = {}
    notices = []
    pending = []

    def ensure_ring(lineno):
        nonlocal ring
        if ring is None:
            if p is None or names is None:
                raise ParseError("char and vars must come before bindings", lineno)
            ring = RingContext(p, names)
        return ring

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "char":
            if p is not None:
                raise ParseError("char declared twice", lineno)
            if len(tokens) != 2:
                raise ParseError("usage: char <p>", lineno)
            try:
                p = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad characteristic {tokens[1]!r}", lineno) from None
            if not is_prime(p):
                raise ParseError(f"{p} is not prime", lineno)
        elif head == "vars":
            if names is not None:
                raise ParseError("vars declared twice", lineno)
            if len(tokens) < 2:
                raise ParseError("usage: vars <name> <name> ...", lineno)
            names = tuple(tokens[1:])
        elif head in ("ideal", "poly"):
            if "=" not in line:
                raise ParseError(f"usage: {head} <name> = ...", lineno)
            lhs, rhs = line.split("=", 1)
            lhs_tokens = lhs.split()
            if len(lhs_tokens) != 2 or not _NAME_RE.match(lhs_tokens[1]):
                raise ParseError(f"usage: {head} <name> = ...", lineno)
            name = lhs_tokens[1]
            if name in bindings:
                raise ParseError(f"duplicate name {name}", lineno)
            r = ensure_ring(lineno)
            if head == "poly":
                bindings[name] = parse_polynomial(r, rhs, line=lineno)
            else:
                gens = [
                    parse_polynomial(r, part, line=lineno)
                    for part in rhs.split(";")
                    if part.strip()
                ]
                if not gens:
                    raise ParseError("ideal needs at least one generator (use 0)", lineno)
                bindings[name] = Ideal(r, gens)
        elif head == "complex":
            m = re.match(
                r"complex\s+([A-Za-z_][A-Za-z0-9_]*)\s+n=(\d+)\s+facets=(.*)\Z", line
            )
            if not m:
                raise ParseError("usage: complex <name> n=<k> facets={..},{..}", lineno)
            name, k, facet_text = m.group(1), int(m.group(2)), m.group(3)
            if name in bindings:
                raise ParseError(f"duplicate name {name}", lineno)
            r = ensure_ring(lineno)
            if k != r.n:
                raise ParseError(
                    f"complex on {k} vertices does not match the {r.n}-variable ring",
                    lineno,
                )
            faces = _parse_facets(facet_text, lineno)
            try:
                delta = SimplicialComplex(k, faces)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            note = delta.pruned_input_notice(faces)
            if note:
                notices.append(f"line {lineno}: {note}")
            bindings[name] = delta
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
        pending.append(lineno)
    if p is None or names is None:
        raise ParseError("session must declare char and vars")
    if ring is None:
        ring = RingContext(p, names)
    return Session(ring=ring, bindings=bindings, notices=tuple(notices))


def _resolve_poly(session, text):
    if _NAME_RE.match(text) and text in session.bindings:
        value = session.bindings[text]
        if not hasattr(value, "terms"):
            raise UsageError(f"{text} is not a polynomial binding")
        return value
    return parse_polynomial(session.ring, text)


def _resolve_ideal(session, text):
    if _NAME_RE.match(text) and text in session.bindings:
        value = session.bindings[text]
        if not isinstance(value, Ideal):
            raise UsageError(f"{text} is not an ideal binding")
        return value
    gens = [
        parse_polynomial(session.ring, part)
        for part in text.split(";")
        if part.strip()
    ]
    if not gens:
        raise UsageError("empty ideal text (use 0 for the zero ideal)")
    return Ideal(session.ring, gens)


def _resolve_complex(session, text):
    if _NAME_RE.match(text) and text in session.bindings:
        value = session.bindings[text]
        if not isinstance(value, SimplicialComplex):
            raise UsageError(f"{text} is not a complex binding")
        return value, None
    faces = _parse_facets(text)
    delta = SimplicialComplex(session.ring.n, faces)
    return delta, delta.pruned_input_notice(faces)


def _fmt_gens(gens):
    if not gens:
        return "0"
    return ", ".join(str(g) for g in gens)


def _fmt_subset(subset):
    return "{" + ",".join(str(i) for i in subset) + "}"


def _fmt_subsets(subsets):
    if not subsets:
        return "none"
    return ", ".join(_fmt_subset(s) for s in subsets)


def _bool(value):
    return "true" if value else "false"


def _complex_arg(session, args):
    """The complex from --complex or --ideal, printing any prune notice."""
    if getattr(args, "complex", None) is not None and getattr(args, "ideal", None) is not None:
        raise UsageError("give either --complex or --ideal, not both")
    if getattr(args, "complex", None) is not None:
        delta, note = _resolve_complex(session, args.complex)
        if note:
            print(note, file=sys.stderr)
        return delta
    if getattr(args, "ideal", None) is not None:
        return complex_from_ideal(_resolve_ideal(session, args.ideal))
    raise UsageError("give --complex or --ideal")


def _cmd_bracket(session, args):
    I = _resolve_ideal(session, args.ideal)
    print("generators =", _fmt_gens(bracket_power(I, args.q).gens))
    return 0


def _cmd_root(session, args):
    K = _resolve_ideal(session, args.ideal)
    result = eth_root(K, args.e)
    print("generators =", _fmt_gens(result.canonical_basis()))
    return 0


def _cmd_trace(session, args):
    m = CartierMap(session.ring, args.e, _resolve_poly(session, args.z))
    print("trace =", cartier_trace(m, _resolve_poly(session, args.poly)))
    return 0


def _cmd_compatible(session, args):
    m = CartierMap(session.ring, args.e, _resolve_poly(session, args.z))
    J = _resolve_ideal(session, args.ideal)
    print("compatible:", _bool(is_compatible(J, m)))
    return 0


def _cmd_fedder(session, args):
    m = CartierMap(session.ring, args.e, _resolve_poly(session, args.z))
    report = fedder_check(_resolve_ideal(session, args.ideal), m)
    print("in-colon:", _bool(report.in_colon))
    print("outside-mq:", _bool(report.outside_mq))
    print("surjective:", _bool(report.surjective))
    return 0


def _cmd_stable_closure(session, args):
    m = CartierMap(session.ring, args.e, _resolve_poly(session, args.z))
    limit = stable_closure(m, _resolve_poly(session, args.c))
    print("generators =", _fmt_gens(limit.canonical_basis()))
    return 0


def _cmd_gb(session, args):
    I = _resolve_ideal(session, args.ideal)
    tag = args.order or session.ring.default_order
    try:
        order = order_from_tag(tag)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    basis = buchberger(I.gens, order=tag)
    print("basis =", _fmt_gens([g.text(order) for g in basis]) if basis else "0")
    return 0


def _cmd_nf(session, args):
    I = _resolve_ideal(session, args.ideal)
    tag = args.order or session.ring.default_order
    try:
        order = order_from_tag(tag)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    f = _resolve_poly(session, args.poly)
    r = normal_form(f, I.groebner_basis(tag), order=tag)
    print("normal-form =", r.text(order))
    return 0


def _cmd_member(session, args):
    I = _resolve_ideal(session, args.ideal)
    print("member:", _bool(I.contains(_resolve_poly(session, args.poly))))
    return 0


def _warn_if_inhomogeneous(session, ideals):
    """Localizing operations agree with the power-series ring only in the
    graded case; results on inhomogeneous input are polynomial-ring results."""
    gens = [g for J in ideals for g in J.gens]
    if find_positive_weight(session.ring, gens) is None:
        print(
            "warning: generators are not weight-homogeneous; the result is "
            "computed in the polynomial ring and may differ from the "
            "power-series localization",
            file=sys.stderr,
        )


def _cmd_intersect(session, args):
    ideals = [_resolve_ideal(session, text) for text in args.ideal]
    if len(ideals) < 2:
        raise UsageError("intersect needs at least two --ideal values")
    _warn_if_inhomogeneous(session, ideals)
    meet = ideals[0]
    for J in ideals[1:]:
        meet = ideal_intersect(meet, J)
    print("generators =", _fmt_gens(meet.canonical_basis()))
    return 0


def _cmd_colon(session, args):
    I = _resolve_ideal(session, args.ideal)
    J = _resolve_ideal(session, args.by)
    _warn_if_inhomogeneous(session, [I, J])
    print("generators =", _fmt_gens(colon_ideal(I, J).canonical_basis()))
    return 0


def _cmd_sr_facets(session, args):
    delta = _complex_arg(session, args)
    print("facets =", _fmt_subsets(delta.facets))
    return 0


def _cmd_sr_fvector(session, args):
    report = f_report(_complex_arg(session, args))
    print("f-vector = (" + ", ".join(str(c) for c in report.f_vector) + ")")
    print("f-max =", report.f_max)
    print("dimension =", report.dimension)
    return 0


def _cmd_sr_primary(session, args):
    delta = _complex_arg(session, args)
    for sigma in primary_decomposition(delta):
        gens = [session.ring.names[i - 1] for i in sigma]
        print("component =", ", ".join(gens) if gens else "0")
    return 0


def _cmd_sr_colon_bracket(session, args):
    I = _resolve_ideal(session, args.ideal)
    print("generators =", _fmt_gens(bracket_colon(I, args.q).canonical_basis()))
    return 0


def _cmd_sr_compatible_primes(session, args):
    I = _resolve_ideal(session, args.ideal)
    report = compatible_primes(I, args.e, cap=args.cap)
    print("variable-primes =", len(report.all_variable_primes))
    print("whole-ring:", "compatible" if report.whole_ring_compatible else "incompatible")
    print("containing =", _fmt_subsets(report.containing_I))
    print("minimal =", _fmt_subsets(report.minimal_primes))
    print("retained =", _fmt_subsets(report.retained))
    return 0


def _cmd_sr_test_ideal(session, args):
    delta = _complex_arg(session, args)
    tau = test_ideal(session.ring, delta, algorithm=args.algorithm)
    print("tau =", _fmt_gens(tau.gens))
    print("tightness-bound =", tightness_bound(delta))
    return 0


def _cmd_sr_tightness(session, args):
    print("tightness-bound =", tightness_bound(_complex_arg(session, args)))
    return 0


def _cmd_sr_face_ideal(session, args):
    delta = _complex_arg(session, args)
    print("generators =", _fmt_gens(ideal_from_complex(session.ring, delta).gens))
    return 0


def _cmd_mod_image(session, args):
    J = _resolve_ideal(session, args.ideal)
    I = _resolve_ideal(session, args.mod)
    view = image_mod(J, I)
    print("generators =", _fmt_gens(view.display_gens))
    return 0


def _cmd_mod_mingens(session, args):
    J = _resolve_ideal(session, args.ideal)
    I = _resolve_ideal(session, args.mod)
    count, gens = minimal_generators(J, I)
    print("count =", count)
    print("generators =", _fmt_gens(gens))
    return 0


def _cmd_mod_equal(session, args):
    if len(args.ideal) != 2:
        raise UsageError("mod equal needs exactly two --ideal values")
    J1 = _resolve_ideal(session, args.ideal[0])
    J2 = _resolve_ideal(session, args.ideal[1])
    I = _resolve_ideal(session, args.mod)
    print("equal:", _bool(equal_mod(J1, J2, I)))
    return 0


_HANDLERS = {
    "bracket": _cmd_bracket,
    "root": _cmd_root,
    "trace": _cmd_trace,
    "compatible": _cmd_compatible,
    "fedder": _cmd_fedder,
    "stable-closure": _cmd_stable_closure,
    "gb": _cmd_gb,
    "nf": _cmd_nf,
    "member": _cmd_member,
    "intersect": _cmd_intersect,
    "colon": _cmd_colon,
    ("sr", "facets"): _cmd_sr_facets,
    ("sr", "fvector"): _cmd_sr_fvector,
    ("sr", "primary"): _cmd_sr_primary,
    ("sr", "colon-bracket"): _cmd_sr_colon_bracket,
    ("sr", "compatible-primes"): _cmd_sr_compatible_primes,
    ("sr", "test-ideal"): _cmd_sr_test_ideal,
    ("sr", "tightness-bound"): _cmd_sr_tightness,
    ("sr", "face-ideal"): _cmd_sr_face_ideal,
    ("mod", "image"): _cmd_mod_image,
    ("mod", "mingens"): _cmd_mod_mingens,
    ("mod", "equal"): _cmd_mod_equal,
}


def _add_complex_flags(sp):
    sp.add_argument("--complex", help="bound complex name or inline {1,2},{3,4}")
    sp.add_argument("--ideal", help="square-free monomial ideal (bound name or inline)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="testideals",
        description="Frobenius bracket powers, e-th roots, Cartier maps and test ideals over F_p.",
    )
    parser.add_argument("--session", help="session file declaring the ring and bindings")
    parser.add_argument("--char", type=int, help="characteristic (with --vars, instead of a session)")
    parser.add_argument("--vars", help="space- or comma-separated variable names")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bracket", help="bracket power I^[q]")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--q", type=int, required=True)

    sp = sub.add_parser("root", help="e-th root ideal I_e(K)")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--e", type=int, required=True)

    sp = sub.add_parser("trace", help="apply the Cartier trace to a polynomial")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--z", required=True)
    sp.add_argument("--e", type=int, required=True)

    sp = sub.add_parser("compatible", help="is an ideal compatible with the map")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--z", required=True)
    sp.add_argument("--e", type=int, required=True)

    sp = sub.add_parser("fedder", help="does z make the trace descend surjectively mod I")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--z", required=True)
    sp.add_argument("--e", type=int, required=True)

    sp = sub.add_parser("stable-closure", help="smallest Cartier-stable ideal containing c")
    sp.add_argument("--c", required=True)
    sp.add_argument("--z", required=True)
    sp.add_argument("--e", type=int, required=True)

    sp = sub.add_parser("gb", help="reduced Groebner basis")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--order", help="degrevlex | lex | elim(k)")

    sp = sub.add_parser("nf", help="normal form of a polynomial")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--order")

    sp = sub.add_parser("member", help="ideal membership test")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--ideal", required=True)

    sp = sub.add_parser("intersect", help="intersection of two or more ideals")
    sp.add_argument("--ideal", action="append", required=True)

    sp = sub.add_parser("colon", help="colon ideal (I : J)")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--by", required=True)

    sr = sub.add_parser("sr", help="square-free monomial / simplicial-complex fast paths")
    srsub = sr.add_subparsers(dest="sr_command", required=True)
    _add_complex_flags(srsub.add_parser("facets", help="facets of the complex"))
    _add_complex_flags(srsub.add_parser("fvector", help="face counts, facet count, dimension"))
    _add_complex_flags(srsub.add_parser("primary", help="primary decomposition of the face ideal"))
    sp = srsub.add_parser("colon-bracket", help="(I^[q] : I) by the component formula")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--q", type=int, required=True)
    sp = srsub.add_parser("compatible-primes", help="variable-prime audit for the full trace")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--cap", type=int, default=ENUMERATION_CAP_DEFAULT)
    sp = srsub.add_parser("test-ideal", help="test ideal of the face ring")
    _add_complex_flags(sp)
    sp.add_argument("--algorithm", choices=("facet", "intersection"), default="facet")
    _add_complex_flags(srsub.add_parser("tightness-bound", help="facet count bound"))
    _add_complex_flags(srsub.add_parser("face-ideal", help="face ideal of the complex"))

    mod = sub.add_parser("mod", help="ideals of S/I via S-preimages")
    modsub = mod.add_subparsers(dest="mod_command", required=True)
    sp = modsub.add_parser("image", help="image of J in S/I with minimal display generators")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--mod", required=True)
    sp = modsub.add_parser("mingens", help="minimal generator count of (J+I)/I")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--mod", required=True)
    sp = modsub.add_parser("equal", help="equality of two ideals mod I")
    sp.add_argument("--ideal", action="append", required=True)
    sp.add_argument("--mod", required=True)
    return parser


def _load_session(args) -> Session:
    if args.session is not None:
        if args.char is not None or args.vars is not None:
            raise UsageError("give either --session or --char/--vars, not both")
        with open(args.session, encoding="utf-8") as fh:
            return parse_session(fh.read())
    if args.char is None or args.vars is None:
        raise UsageError("a ring is required: --session FILE or --char P --vars NAMES")
    if not is_prime(args.char):
        raise UsageError(f"{args.char} is not prime")
    names = tuple(args.vars.replace(",", " ").split())
    if not names:
        raise UsageError("--vars needs at least one name")
    return Session(ring=RingContext(args.char, names))


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        session = _load_session(args)
        for note in session.notices:
            print(note, file=sys.stderr)
        if args.command == "sr":
            handler = _HANDLERS[("sr", args.sr_command)]
        elif args.command == "mod":
            handler = _HANDLERS[("mod", args.mod_command)]
        else:
            handler = _HANDLERS[args.command]
        return handler(session, args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError, RuntimeError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
