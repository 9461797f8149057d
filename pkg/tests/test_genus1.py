import json
import random
from fractions import Fraction

import pytest

from hilbtwist.exactq import MPoly
from hilbtwist.genus1 import (
    PLANE_VARS,
    MapUndefinedError,
    PlaneCubic,
    QuarticModel,
    binary_quartic_invariants,
    cubic_to_weierstrass,
    diagonal_quadric,
    jacobian_from_invariants,
    substitution_map,
    project_space_quartic,
    quartic_to_weierstrass,
)

SEED = 20261014
X, Y, Z = MPoly.gens(PLANE_VARS)


def test_map_C_identity_expansion():
    # y^2 - x^3 - 4x = 8 (t^2 - d)(t^4 - d^2 - 1) for x = 2(t^2 - d), y = 2tx
    t, d = MPoly.gens(("t", "d"))
    x = (t * t - d).scale(2)
    y = (t * x).scale(2)
    assert y * y - x ** 3 - x.scale(4) == ((t * t - d) * (t ** 4 - d * d - 1)).scale(8)


def test_map_C_on_points():
    # (t, d) = (+-1, 0) on d^2 = t^4 - 1 land on the 4-torsion points (2, +-4)
    assert substitution_map(1, 0) == (2, 4)
    assert substitution_map(-1, 0) == (2, -4)


def test_quartic_validation():
    with pytest.raises(ValueError):
        QuarticModel(1, 0, -2, 0, 1)  # (u^2 - 1)^2
    with pytest.raises(ValueError):
        QuarticModel(0, 0, 1, 0, 1)
    M = QuarticModel(544, 0, 0, 0, -544)
    assert M.contains((Fraction(5, 3), Fraction(544, 9)))


def _check_roundtrips(M, P0, samples, kmax=6):
    E, maps = quartic_to_weierstrass(M, P0)
    assert maps.forward(P0) is None
    for P in samples:
        W = maps.forward(P)
        assert E.on_curve(W)
        assert maps.backward(W) == tuple(Fraction(c) for c in P)
        for k in range(-kmax, kmax + 1):
            Wk = E.scalar_mul(k, W)
            Pk = maps.backward(Wk)
            assert M.contains(Pk)
            assert maps.forward(Pk) == Wk
    return E


def test_root_to_infinity_model():
    M = QuarticModel(544, 0, 0, 0, -544)
    E = _check_roundtrips(M, (1, 0), [(Fraction(5, 3), Fraction(544, 9))])
    assert (E.A, E.B) == (1183744, 0)


def test_completing_model():
    # v^2 = u^4 + 3u^2 + 2u + 9 with v0 = 3 at the marked point u = 0
    M = QuarticModel(1, 0, 3, 2, 9)
    assert M.contains((0, 3))
    samples = [(0, -3)] + [(u, v) for u in range(-6, 7) for v in range(0, 60)
                           if (u, v) != (0, 3) and v * v == M.poly(u)]
    E = _check_roundtrips(M, (0, 3), samples, kmax=3)
    I, J = binary_quartic_invariants(M)
    assert E.j_invariant == jacobian_from_invariants(I, J).j_invariant


def test_completing_model_shifted_point():
    M = QuarticModel(2, -1, 0, 3, 4)
    _check_roundtrips(M, (0, 2), [(0, -2)], kmax=4)
    M2 = QuarticModel(1, 0, 0, 0, 1)
    E = _check_roundtrips(M2, (0, 1), [(0, -1)], kmax=2)
    assert E.j_invariant == 1728


def test_j_invariant_agrees_with_invariants():
    rng = random.Random(SEED)
    done = 0
    while done < 20:
        a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
        u0 = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        v0 = Fraction(rng.choice([0, 0, 1, 2, 3, -1]))
        e = v0 ** 2 - (a * u0 ** 4 + b * u0 ** 3 + c * u0 ** 2 + d * u0)
        try:
            M = QuarticModel(a, b, c, d, e)
        except ValueError:
            continue
        E, maps = quartic_to_weierstrass(M, (u0, v0))
        I, J = binary_quartic_invariants(M)
        assert E.j_invariant == jacobian_from_invariants(I, J).j_invariant
        # a second rational point, when one is visible, survives the round trip
        for u in range(-4, 5):
            W = maps.forward((u, v0)) if M.contains((u, v0)) and u != u0 else None
            if W is not None:
                assert maps.backward(W) == (u, v0)
        done += 1


def test_group_transport_on_twist_model():
    lam = 544
    M = QuarticModel(lam, 0, 0, 0, -lam)
    E, maps = quartic_to_weierstrass(M, (1, 0))
    G = maps.forward((Fraction(5, 3), Fraction(lam, 9)))
    for k in range(1, 7):
        u, v = maps.backward(E.scalar_mul(k, G))
        d, t = v / lam, u
        assert lam * d * d == t ** 4 - 1


def test_map_pair_json():
    _, maps = quartic_to_weierstrass(QuarticModel(544, 0, 0, 0, -544), (1, 0))
    doc = json.loads(json.dumps(maps.to_json()))
    assert len(doc["forward"]) == 2 and len(doc["backward"]) == 2
    assert all(isinstance(f, str) for f in doc["forward"] + doc["backward"])


def test_maps_report_undefined_points():
    M = QuarticModel(544, 0, 0, 0, -544)
    _, maps = quartic_to_weierstrass(M, (1, 0))
    # x = beta/3 = 2 lambda makes every backward chart 0/0 or n/0
    with pytest.raises(MapUndefinedError):
        maps.backward((Fraction(1088), Fraction(5)))


@pytest.mark.parametrize("form,pt", [
    (Y * Y * Z - X ** 3 - (X * Z * Z).scale(4), (0, 1, 0)),
    (X ** 3 + (Y ** 3).scale(2) - (Z ** 3).scale(3), (1, 1, 1)),
    (X ** 3 + (Y ** 3).scale(2) - (Z ** 3).scale(3) + X * Y * Z - X * X * Y, (1, 1, 1)),
])
def test_cubic_to_weierstrass_roundtrip(form, pt):
    C = PlaneCubic(form, pt)
    E, maps = cubic_to_weierstrass(C)
    W = maps.forward(pt)
    assert E.on_curve(W)
    assert maps.backward(W) == pt
    # in the flex case the marked point is O, so walk from another point
    G = W if W is not None else maps.forward((2, 4, 1))
    for k in range(-5, 6):
        Wk = E.scalar_mul(k, G)
        P = maps.backward(Wk)
        assert form(*P) == 0
        assert maps.forward(P) == Wk


def test_cubic_validation():
    with pytest.raises(ValueError, match="not on the cubic"):
        PlaneCubic(X ** 3 + Y ** 3 - Z ** 3, (1, 1, 1))
    with pytest.raises(ValueError):
        PlaneCubic(X * (Y * Y - X * Z), (0, 1, 0))


def test_space_quartic_projection():
    # smooth: the singular members [1:1], [1:-2], [1:-3], [1:2] of the pencil are distinct
    Q1 = diagonal_quadric((1, 1, -1, -1))
    Q2 = diagonal_quadric((1, -2, 3, -2))
    R = (1, 1, 1, 1)
    cubic, proj = project_space_quartic(Q1, Q2, R)
    E, to_w = cubic_to_weierstrass(cubic)
    maps = proj.then(to_w)
    W = maps.forward(R)
    assert maps.backward(W) == R
    acc = None
    for _ in range(4):
        acc = E.add(acc, W)
        P = maps.backward(acc)
        assert Q1(*P) == 0 and Q2(*P) == 0
        assert maps.forward(P) == acc


def test_space_quartic_rejects_points_off_curve():
    with pytest.raises(ValueError):
        project_space_quartic(diagonal_quadric((1, 1, -1, -1)), diagonal_quadric((1, 2, -2, -1)), (1, 2, 3, 4))
