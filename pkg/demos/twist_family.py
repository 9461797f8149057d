"""Walk the twist family for (n, m) = (5, 3).

Each multiple of the base point on lambda d^2 = t^4 - 1 gives a rational
point [t : m : n : 1] on the twisted surface x^4 + d^2 y^4 = d^2 z^4 + w^4,
and a point on the quotient surface in P(1,2,2,1,2).
"""

from hilbtwist.exactq import rat_str
from hilbtwist.twistgen import TwistParams, build, certify, quotient_point, xi_check

params = TwistParams(5, 3)
engine = build(params)
print(f"lambda = {params.lam}; Weierstrass model y^2 = x^3 + {engine.curve.A} x")
print(f"base point image {tuple(rat_str(c) for c in engine.base)}")

items, skipped = engine.generate(6)
for it in items:
    it = certify(it, [1, 2, 3])
    Y = quotient_point(it, params)
    print(f"k={it.k}  d={rat_str(it.d)}  t={rat_str(it.t)}  omega={it.omega}")
    print(f"      Y={Y.wp}  xi={'ok' if xi_check(it, params).ok else 'FAIL'}")
if skipped:
    print("skipped", skipped)
