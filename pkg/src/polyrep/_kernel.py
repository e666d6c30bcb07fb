"""Select the polynomial kernel at import: compiled if built, else Python."""
from . import _kernel_py

try:
    from . import _ckernel as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _kernel_py


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def use_backend(name: str) -> None:
    """Switch the active kernel (used by the benchmark and the tests)."""
    global _impl, BACKEND
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not built")
        _impl = _compiled
    elif name == "python":
        _impl = _kernel_py
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


# below this many term pairs, converting to C++ containers costs more than it saves
SMALL_PRODUCT = 64


def mul(a: dict, b: dict) -> dict:
    if len(a) * len(b) < SMALL_PRODUCT:
        return _kernel_py.mul(a, b)
    return _impl.mul(a, b)


def mul_term(a: dict, key: int, coef: int) -> dict:
    return _impl.mul_term(a, key, coef)


def axpy(acc: dict, b: dict, coef: int) -> None:
    _impl.axpy(acc, b, coef)
