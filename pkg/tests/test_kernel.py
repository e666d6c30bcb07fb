import pytest
from hypothesis import given, settings, strategies as st

from polyrep import _kernel, _kernel_py
from polyrep.sympoly import MPoly

keys = st.integers(0, 2**40)
small = st.dictionaries(keys, st.integers(-50, 50).filter(bool), max_size=12)
huge = st.dictionaries(keys, st.integers(-(2**80), 2**80).filter(bool), max_size=6)

compiled = pytest.mark.skipif("cython" not in _kernel.available_backends(), reason="extension not built")


@pytest.fixture
def restore_backend():
    before = _kernel.BACKEND
    yield
    _kernel.use_backend(before)


@compiled
@settings(max_examples=200)
@given(st.one_of(small, huge), st.one_of(small, huge), st.integers(-(2**70), 2**70))
def test_backends_agree(a, b, c):
    from polyrep import _ckernel

    assert _ckernel.mul(a, b) == _kernel_py.mul(a, b)
    assert _ckernel.mul_term(a, 7, c) == _kernel_py.mul_term(a, 7, c)
    x, y = dict(a), dict(a)
    _ckernel.axpy(x, b, c)
    _kernel_py.axpy(y, b, c)
    assert x == y


def test_python_kernel_basics():
    assert _kernel_py.mul({1: 2}, {3: -1}) == {4: -2}
    assert _kernel_py.mul({0: 1, 1: 1}, {0: 1, 1: -1}) == {0: 1, 2: -1}
    acc = {0: 1}
    _kernel_py.axpy(acc, {0: 1}, -1)
    assert acc == {}


def test_switching_backends(restore_backend):
    results = []
    for name in _kernel.available_backends():
        _kernel.use_backend(name)
        assert _kernel.BACKEND == name
        x = [MPoly.var(3, k) for k in (1, 2, 3)]
        p = (x[0] + x[1].scale(2) - x[2]) ** 6 - (x[0] * x[2]) ** 3
        results.append(p)
    assert all(r == results[0] for r in results)
    with pytest.raises(ValueError):
        _kernel.use_backend("fortran")
