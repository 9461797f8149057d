"""The seed point [59:158:133:134] on x^4 + y^4 = z^4 + w^4 and its fibers.

Both quadric rulings give genus-one fibrations; the fiber through the seed is
mapped to a Weierstrass model and multiples of the seed are pulled back.
"""

from hilbtwist.dqsurf import FERMAT, branch_sample, fiber, fiber_multiples, fiber_to_elliptic, omega_filter, pi
from hilbtwist.exactq import proj_str

seed = (59, 158, 133, 134)
print("omega:", omega_filter(FERMAT, seed).verdict.value)

for i in (1, 2):
    F = fiber(FERMAT, i, pi(FERMAT, i, seed))
    E, maps = fiber_to_elliptic(F, seed)
    print(f"pi_{i}(seed) = {proj_str(F.param)}, fiber curve y^2 = x^3 + ({E.A}) x + ({E.B})")
    mult = fiber_multiples(F, seed, 3)
    for P in mult.points[1:]:
        print("   ", proj_str(P)[:70] + ("..." if len(proj_str(P)) > 70 else ""))

# the branch polynomial moves with the fiber
for t in [(1, 2), (1, 3), (2, 7)]:
    print(f"branch over {proj_str(t)}: {branch_sample(FERMAT, 1, t).to_str('tau')}")
