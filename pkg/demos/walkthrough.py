"""A tour of the library, one capability at a time.

Run with:  python3 demos/walkthrough.py
"""

from testideals import (
    CartierMap,
    Ideal,
    RingContext,
    SimplicialComplex,
    bracket_power,
    cartier_trace,
    complex_from_ideal,
    compatible_primes,
    default_cartier,
    eth_root,
    f_report,
    fedder_check,
    ideal_from_complex,
    ideal_intersect,
    image_mod,
    is_compatible,
    minimal_generators,
    normal_form,
    stable_closure,
    test_ideal,
    tightness_bound,
)


def banner(title):
    print()
    print(title)
    print("-" * len(title))


def show(label, ideal):
    gens = ideal.canonical_basis()
    print(f"{label} = ({', '.join(g.text() for g in gens) if gens else '0'})")


# 1. arithmetic in F_2[x1..x4]
banner("Polynomial arithmetic over F_2")
R = RingContext(2, ("x1", "x2", "x3", "x4"))
f = R.parse("x1 + x2")
print("f       =", f)
print("f^2     =", f * f, " (the cross term vanishes in characteristic 2)")
print("f^[4]   =", f.frobenius_power(4))

# 2. Groebner bases and normal forms
banner("Groebner bases")
I = Ideal(R, [R.parse("x1^2 + x3*x4"), R.parse("x1*x2")])
show("I", I)
print("reduced basis:", ", ".join(g.text() for g in I.groebner_basis()))
g = R.parse("x1^3 + x1*x3*x4")
print(f"normal form of {g} is", normal_form(g, I.groebner_basis()))
print("membership:", I.contains(g))

# 3. bracket powers and e-th roots are inverse on the bracket image
banner("Bracket powers and e-th roots")
show("I^[2]", bracket_power(I, 2))
show("I_1(I^[2])", eth_root(bracket_power(I, 2), 1))
K = Ideal(R, [R.parse("x1^3*x2*x3")])
show("I_1 of (x1^3*x2*x3)", eth_root(K, 1))

# 4. trace maps
banner("Trace maps")
m = default_cartier(R, 1)
print("default z =", m.z)
for text in ("1", "x1^2", "x1"):
    h = R.parse(text)
    print(f"trace({h}) = {cartier_trace(m, h)}")

# 5. Fedder's criterion on the edge ideal
banner("Fedder surjectivity")
edge = Ideal(R, [R.parse(t) for t in ("x1*x3", "x1*x4", "x2*x3", "x2*x4")])
rep = fedder_check(edge, m)
print("z in (I^[2] : I):", rep.in_colon)
print("z outside m^[2]: ", rep.outside_mq)
print("surjective:      ", rep.surjective)

# 6. compatible ideals
banner("Compatible ideals")
print("(x1, x2) compatible:", is_compatible(Ideal(R, [R.parse("x1"), R.parse("x2")]), m))
print("(x1 + x2) compatible:", is_compatible(Ideal(R, [R.parse("x1 + x2")]), m))

# 7. the simplicial dictionary
banner("Simplicial complexes")
delta = complex_from_ideal(edge)
print("facets:", delta.facets)
fv = f_report(delta)
print("f-vector:", fv.f_vector, " dimension:", fv.dimension, " facets:", fv.f_max)
show("back to the ideal", ideal_from_complex(R, delta))

# 8. compatible primes and the test ideal, two ways
banner("Test ideal of the edge ring")
primes = compatible_primes(edge, 1)
print("variable primes:", len(primes.all_variable_primes))
print("containing I:   ", ", ".join("{" + ",".join(map(str, s)) + "}" for s in primes.containing_I))
print("minimal primes: ", ", ".join("{" + ",".join(map(str, s)) + "}" for s in primes.minimal_primes))
print("retained:       ", ", ".join("{" + ",".join(map(str, s)) + "}" for s in primes.retained))
show("tau (facet route)", test_ideal(R, delta, algorithm="facet"))
show("tau (intersection route)", test_ideal(R, delta, algorithm="intersection"))
print("tightness bound:", tightness_bound(delta))

# 9. stable closures
banner("Cartier-stable closure")
show("closure of (x1)", stable_closure(m, R.parse("x1")))
show("closure of (x1*x2)", stable_closure(m, R.parse("x1*x2")))

# 10. quotient views
banner("Minimal generators mod I")
tau = Ideal(R, [R.parse("x3*x4"), R.parse("x1*x2")])
count, gens = minimal_generators(tau, edge)
print("count:", count, " generators:", ", ".join(g.text() for g in gens))
view = image_mod(ideal_intersect(Ideal(R, [R.parse("x1"), R.parse("x2"), R.parse("x3")]),
                                 Ideal(R, [R.parse("x2"), R.parse("x3"), R.parse("x4")])), edge)
print("image display:", ", ".join(g.text() for g in view.display_gens))
