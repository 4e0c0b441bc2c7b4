import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from csgin import GF, BlockRing, Ideal, kernel
from csgin.closure import jhom_saturation
from csgin.verify import closure_instances, block33_ideal

from strategies import homogeneous_polys, rings

needs_cython = pytest.mark.skipif("cython" not in kernel.available_backends(), reason="compiled kernel not built")


def test_pure_python_switch():
    env = dict(os.environ, CSGIN_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from csgin import kernel; print(kernel.BACKEND, kernel.available_backends())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.split()[0] == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernel.context(2, [[1, 1], [0, -1]], 7, backend="fortran")


@needs_cython
def test_large_prime_falls_back_to_python():
    ctx = kernel.context(2, [[1, 1], [0, -1]], 2**61 - 1, backend="cython")
    assert type(ctx).__module__.endswith("_pykernel")


@needs_cython
@given(st.data())
def test_kernel_operations_agree(data):
    R = data.draw(rings(max_vars=4))
    f = data.draw(homogeneous_polys(R))
    g = data.draw(homogeneous_polys(R))
    from csgin import GREVLEX

    M = GREVLEX.matrix(R.nvars)
    out = []
    for backend in ("python", "cython"):
        ctx = kernel.context(R.nvars, M, R.field.p, backend)
        a, b = ctx.make(f.terms), ctx.make(g.terms)
        res = []
        if not ctx.is_zero(a) and not ctx.is_zero(b):
            res.append(sorted(ctx.to_terms(ctx.spoly(a, b))))
            res.append(sorted(ctx.to_terms(ctx.reduce(a, [ctx.monic(b)], True))))
            res.append(ctx.lead_exp(a))
        out.append(res)
    assert out[0] == out[1]


@needs_cython
def test_backends_agree_on_workloads():
    for I in [block33_ideal(GF())] + [jhom_saturation(V) for V in closure_instances(3, 5)]:
        J = Ideal(I.ring, I.gens)
        assert J.groebner(backend="python") == J.groebner(backend="cython")
