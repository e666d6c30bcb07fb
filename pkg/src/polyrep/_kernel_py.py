"""Reference implementation of the sparse polynomial kernels.

Polynomials are dicts mapping a packed monomial key to an integer
coefficient.  Exponents live in fixed-width bit fields, so the product of two
monomials is the sum of their keys.
"""


def mul(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            v = get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def mul_term(a: dict, key: int, coef: int) -> dict:
    if not coef:
        return {}
    return {k + key: c * coef for k, c in a.items()}


def axpy(acc: dict, b: dict, coef: int) -> None:
    """acc += coef * b, in place."""
    if not coef:
        return
    get = acc.get
    for k, c in b.items():
        v = get(k, 0) + coef * c
        if v:
            acc[k] = v
        else:
            del acc[k]
