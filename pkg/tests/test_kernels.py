import random

import pytest

from addax import _kernels
from addax.linalg import QMat
from addax.scalar import Scalar

BACKENDS = _kernels.available_backends()


def _rand(rng, n, big):
    lim = 10 ** 30 if big else 50
    return [rng.randint(-lim, lim) if rng.random() < 0.7 else 0 for _ in range(n)]


@pytest.mark.parametrize("big", [False, True])
def test_backends_agree(big):
    rng = random.Random(7)
    for _ in range(30):
        n, k, m = rng.randint(1, 7), rng.randint(1, 7), rng.randint(1, 7)
        ar, ai = _rand(rng, n * k, big), _rand(rng, n * k, big)
        br, bi = _rand(rng, k * m, big), _rand(rng, k * m, big)
        results = {name: mod.gauss_matmul(ar, ai, br, bi, n, k, m) for name, mod in BACKENDS.items()}
        ref = results["python"]
        for name, res in results.items():
            assert tuple(map(list, res)) == tuple(map(list, ref)), name


def test_python_kernel_reference():
    py = BACKENDS["python"]
    # (1+i) * (1-i) = 2
    assert tuple(map(list, py.gauss_matmul([1], [1], [1], [-1], 1, 1, 1))) == ([2], [0])


def test_overflow_falls_back_exactly():
    big = 2 ** 62
    for mod in BACKENDS.values():
        cr, ci = mod.gauss_matmul([big, big], [0, 0], [big, big], [0, 0], 1, 2, 1)
        assert list(cr) == [2 * big * big] and list(ci) == [0]


def test_content_gcd_agree():
    rng = random.Random(3)
    for _ in range(50):
        re = [rng.randint(-40, 40) * 6 for _ in range(5)]
        im = [rng.randint(-40, 40) * 6 for _ in range(5)]
        den = rng.choice([6, 12, 18])
        outs = {name: mod.content_gcd(re, im, den) for name, mod in BACKENDS.items()}
        assert len({repr(o) for o in outs.values()}) == 1


def test_qmat_product_matches_naive():
    rng = random.Random(11)
    rows_a = [[Scalar(rng.randint(-5, 5), rng.randint(-5, 5)) / rng.randint(1, 4) for _ in range(3)]
              for _ in range(3)]
    rows_b = [[Scalar(rng.randint(-5, 5), rng.randint(-5, 5)) / rng.randint(1, 4) for _ in range(2)]
              for _ in range(3)]
    naive = [[sum((rows_a[i][t] * rows_b[t][j] for t in range(3)), Scalar(0)) for j in range(2)]
             for i in range(3)]
    assert (QMat.from_rows(rows_a) @ QMat.from_rows(rows_b)).to_rows() == [tuple(r) for r in naive]


def test_backend_name():
    assert _kernels.BACKEND in BACKENDS
