"""The determinantal ring over F_2: I is generated by the 2x2 minors of

    [ x1 x2 x2 x5 ]
    [ x4 x4 x3 x1 ]

and (I^[2] : I) has three generators z0, z1, z2 up to m^[2].  For each one
this script verifies Fedder surjectivity, checks the compatible-prime list,
intersects the retained primes, and counts minimal generators of the test
ideal modulo I.

Run with:  python3 demos/determinantal_example.py
"""

import time

from testideals import (
    CartierMap,
    Ideal,
    bracket_power,
    dedupe_ideals,
    equal_mod,
    fedder_check,
    ideal_intersect,
    ideals_equal,
    is_compatible,
    minimal_generators,
)
from testideals.cli import parse_session

SESSION = "sessions/minors_ring.session"


def show(label, gens):
    print(f"{label} = ({', '.join(g.text() for g in gens) if gens else '0'})")


started = time.monotonic()
session = parse_session(open(SESSION).read())
ring = session.ring
I = session.bindings["I"]
show("I", I.gens)

for k in (0, 1, 2):
    z = session.bindings[f"z{k}"]
    m = CartierMap(ring, 1, z)
    print()
    print(f"=== z{k} ===")

    rep = fedder_check(I, m)
    print(f"fedder: in-colon={rep.in_colon} outside-mq={rep.outside_mq} "
          f"surjective={rep.surjective}")

    # z really does multiply I into the bracket power
    bracket = bracket_power(I, 2)
    assert all(bracket.contains(z * g) for g in I.gens)

    # the five retained primes bound in the session file
    retained = [session.bindings[f"Q{k}{j}"] for j in range(1, 6)]
    for Q in retained:
        assert is_compatible(Q, m), f"prime not compatible: {Q.gens}"
    uniques, groups = dedupe_ideals(retained)
    print(f"retained primes: {len(retained)} listed, {len(uniques)} distinct")

    meet = None
    for Q in retained:
        meet = Q if meet is None else ideal_intersect(meet, Q)
    tau = session.bindings[f"tau{k}"]
    print("intersection matches the recorded test ideal:",
          equal_mod(meet, tau, I))

    count, gens = minimal_generators(tau, I)
    show(f"tau{k} mod I, minimal generators ({count})", gens)

print()
print(f"total time: {time.monotonic() - started:.2f}s")
