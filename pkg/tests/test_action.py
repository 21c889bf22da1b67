import random

import pytest

from addax.action import (ProjPoint, act, action_names, exp_element, format_action, orbit_point,
                          parse_action, rho, singular_at, symbolic_action,
                          verify_action_invariance)
from addax.catalog import catalog, corank_one_n2, standard_pairs, truncated
from addax.linalg import QMat
from addax.multilinear import hypersurface_equation
from addax.poly import parse_poly, x_names
from addax.scalar import ONE, ZERO, Scalar, parse_scalar, random_scalar

S = Scalar
half = S(1) / 2


def test_exp_examples():
    A = truncated(3, as_pair=False)
    a = S(3)
    assert exp_element(A, (ZERO, a, ZERO)) == (ONE, a, a * a / 2)
    assert exp_element(A, (ZERO, ZERO, ZERO)) == A.one()
    B = truncated(4, as_pair=False)
    a1, a2 = S(2), S(5)
    # a = a1*x + a2*x^3
    assert exp_element(B, (ZERO, a1, ZERO, a2)) == (ONE, a1, a1 ** 2 / 2, a2 + a1 ** 3 / 6)


def test_exp_rejects_unit_component():
    with pytest.raises(ValueError):
        exp_element(truncated(3, as_pair=False), (ONE, ZERO, ZERO))


def test_rho_examples():
    M = rho(truncated(3), [S(2)])
    assert M.to_rows() == [(ONE, ZERO, ZERO), (S(2), ONE, ZERO), (S(2), S(2), ONE)]
    assert rho(truncated(4), [ZERO, ZERO]).is_identity()
    with pytest.raises(ValueError):
        rho(truncated(3), [ONE, ONE])


def test_act_examples():
    split = corank_one_n2("split")
    p = act(rho(split, [ONE, ZERO]), ProjPoint([1, 0, 0, 0]))
    assert p.coords == (ONE, ONE, ZERO, half)
    q = ProjPoint([0, 2, 4, 0])
    assert q.coords == (ZERO, ONE, S(2), ZERO)
    assert act(QMat.identity(4), q) == q


def test_projpoint_rejects_zero():
    with pytest.raises(ValueError):
        ProjPoint([0, 0])


def test_verify_examples():
    conic = truncated(3)
    names = x_names(3)
    assert verify_action_invariance(conic, hypersurface_equation(conic), trials=5)
    assert verify_action_invariance(conic, parse_poly("x0", names), trials=5)
    res = verify_action_invariance(conic, parse_poly("x1", names), trials=5)
    assert not res and not res.symbolic and not res.numeric
    assert res.witness[:2] == ("derivation", 0)


def test_every_equation_invariant():
    for p in standard_pairs():
        assert verify_action_invariance(p, hypersurface_equation(p), trials=3)


def test_singular_examples():
    f = parse_poly("6*x0^2*x3 - 6*x0*x1*x2 + 2*x1^3", x_names(4))
    assert singular_at(f, ProjPoint([0, 0, 0, 1]))
    conic = parse_poly("2*x0*x2 - x1^2", x_names(3))
    assert not singular_at(conic, ProjPoint([0, 0, 1]))
    cone = parse_poly("x1^2 - x2^2", x_names(3))
    assert singular_at(cone, ProjPoint([1, 0, 0]))
    with pytest.raises(ValueError):
        singular_at(conic, ProjPoint([1, 1, 1]))


def test_homomorphism_and_commutativity():
    rng = random.Random(4)
    for p in standard_pairs():
        for _ in range(3):
            a = [random_scalar(rng) for _ in range(p.n)]
            b = [random_scalar(rng) for _ in range(p.n)]
            ab = [x + y for x, y in zip(a, b)]
            assert rho(p, a) @ rho(p, b) == rho(p, ab) == rho(p, b) @ rho(p, a)


def test_faithful_and_unipotent():
    rng = random.Random(9)
    for p in standard_pairs():
        a = [random_scalar(rng, nonzero=True) for _ in range(p.n)]
        M = rho(p, a)
        assert not M.is_identity()
        assert ((M - QMat.identity(p.dim)) ** p.dim).is_zero()
        # first column is exp(a)*1
        assert M.column_vector(0) == exp_element(p.algebra, p.w_element(a))


def test_orbit_map_injective_in_affine_chart():
    rng = random.Random(12)
    for p in standard_pairs():
        seen = {}
        for _ in range(15):
            a = tuple(random_scalar(rng, bound=4) for _ in range(p.n))
            pt = orbit_point(p, a)
            assert pt.coords[0] == ONE
            assert seen.setdefault(pt, a) == a


def test_symbolic_action_oracle(oracle):
    for name, data in oracle["pairs"].items():
        p = catalog(name)
        coords = symbolic_action(p)
        for poly, expect in zip(coords, data["action"]):
            got = sorted([list(e), c] for e, c in poly.terms.items())
            want = sorted([e, parse_scalar(c)] for e, c in expect)
            assert got == want, name


def test_format_parse_roundtrip():
    for p in standard_pairs()[:10]:
        text = format_action(symbolic_action(p), p.n)
        assert format_action(parse_action(text, action_names(p)), p.n) == text


def test_parse_action_requires_brackets():
    with pytest.raises(ValueError):
        parse_action("x0 : x1", ("x0", "x1"))
