import json
import random
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

from hilbtwist.exactq import PolyQ, count_p1_by_height, height, proj_point
from hilbtwist.thinsets import RationalCover, parse_cover, parse_covers, preimages, thin_report

SEED = 20261014
FIXTURES = Path(__file__).parent / "fixtures"
SQUARE = parse_cover("u^2")
CUBIC = parse_cover("u^3-u")


def _image_oracle(f, B, H):
    """Images of all u of height <= B under f, kept when of height <= H."""
    out = set()
    for a in range(-B, B + 1):
        for b in range(0, B + 1):
            if (a, b) == (0, 0) or gcd(a, b) != 1:
                continue
            if b == 0:
                out.add((1, 0))
                continue
            v = f(Fraction(a, b))
            out.add(proj_point((v.numerator, v.denominator)))
    return {t for t in out if height(t) <= H}


def test_preimage_examples():
    assert preimages(SQUARE, (4, 1)) == [(-2, 1), (2, 1)]
    assert preimages(SQUARE, (2, 1)) == []
    assert preimages(CUBIC, (0, 1)) == [(-1, 1), (0, 1), (1, 1)]
    assert preimages(SQUARE, (1, 0)) == [(1, 0)]


def test_cover_validation():
    u = PolyQ.x()
    with pytest.raises(ValueError):
        RationalCover(u + 1, PolyQ((1,)))
    with pytest.raises(ValueError):
        RationalCover(u * u - 1, u - 1)
    with pytest.raises(ValueError):
        parse_cover("u^2 + v")
    with pytest.raises(ValueError):
        parse_covers(" , ")
    phi = parse_cover("(u^2+1)/(u-1)")
    assert phi.degree == 2 and phi((2, 1)) == (5, 1)


def test_preimages_contain_source_point():
    rng = random.Random(SEED)
    covers = [SQUARE, CUBIC, parse_cover("(u^2+1)/(u-1)"), parse_cover("u^4 - 3u/2")]
    for _ in range(200):
        phi = rng.choice(covers)
        u = (rng.randint(-60, 60), rng.randint(1, 60))
        if phi.den(Fraction(*u)) == 0:
            continue
        # preimages are affine [a:b] with b > 0; compare canonically
        assert proj_point(u) in {proj_point(w) for w in preimages(phi, phi(u))}


def test_report_without_covers():
    rep = thin_report([], 10)
    assert rep.covered == 0 and rep.total == count_p1_by_height(10)


def test_square_cover_h10_matches_oracle():
    rep = thin_report([SQUARE], 10)
    covered = {t for t, _, _ in rep.witnesses}
    assert covered == _image_oracle(lambda u: u * u, 4, 10)
    assert rep.fraction < Fraction(1, 4)


def test_h100_fixture_and_witnesses():
    fx = json.loads((FIXTURES / "thin_h100.json").read_text())
    rep = thin_report([SQUARE, CUBIC], 100)
    assert (rep.total, rep.covered, list(rep.per_cover)) == (fx["total"], fx["covered"], fx["per_cover"])
    assert rep.fraction == Fraction(fx["fraction"]) < Fraction(fx["threshold"])
    oracle = _image_oracle(lambda u: u * u, 12, 100) | _image_oracle(lambda u: u ** 3 - u, 12, 100)
    assert {t for t, _, _ in rep.witnesses} == oracle
    covers = [SQUARE, CUBIC]
    for t, i, w in rep.witnesses:
        assert covers[i](w) == t


@pytest.mark.slow
def test_square_fraction_monotone_over_grid():
    fx = json.loads((FIXTURES / "thin_square_grid.json").read_text())["fractions"]
    fracs = []
    for H in (10, 50, 100, 500):
        f = thin_report([SQUARE], H).fraction
        assert f == Fraction(fx[str(H)])
        fracs.append(f)
    assert all(a >= b for a, b in zip(fracs, fracs[1:]))


def test_csv_and_witness_json():
    rep = thin_report([SQUARE, CUBIC], 10)
    lines = rep.csv_text().splitlines()
    assert lines[0] == "height_bound,total,covered,fraction"
    assert lines[1].split(",")[:2] == ["10", str(rep.total)]
    doc = json.loads(rep.witnesses_json())
    assert doc["covers"] == ["u^2", "u^3-u"]
    assert len(doc["witnesses"]) == rep.covered
