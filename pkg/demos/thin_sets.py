"""How much of P^1(Q) do the covers u^2 and u^3 - u reach?"""

from hilbtwist.thinsets import parse_covers, thin_report

covers = parse_covers("u^2,u^3-u")
for H in (10, 50, 100, 300):
    rep = thin_report(covers, H)
    print(f"H={H:4d}  covered {rep.covered:5d} of {rep.total:6d}  ({float(rep.fraction):.4f})  per cover {rep.per_cover}")
