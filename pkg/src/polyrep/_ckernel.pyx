# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernels.

Same contract as the pure Python module.  Keys and coefficients are moved
into machine words when they fit; anything that overflows falls back to the
Python path, so results are always exact.
"""
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

from polyrep import _kernel_py

cdef extern from *:
    bint mul_ovf "__builtin_mul_overflow"(long long a, long long b, long long* res) nogil
    bint add_ovf "__builtin_add_overflow"(long long a, long long b, long long* res) nogil


cdef bint _unpack(dict d, vector[unsigned long long]& keys, vector[long long]& coefs):
    keys.reserve(len(d))
    coefs.reserve(len(d))
    try:
        for k, c in d.items():
            keys.push_back(<unsigned long long>k)
            coefs.push_back(<long long>c)
    except OverflowError:
        return False
    return True


def mul(dict a, dict b):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return {}
    if na * nb < 8:
        return _kernel_py.mul(a, b)
    cdef vector[unsigned long long] ka, kb
    cdef vector[long long] ca, cb
    if not _unpack(a, ka, ca) or not _unpack(b, kb, cb):
        return _kernel_py.mul(a, b)
    cdef unordered_map[unsigned long long, long long] acc
    acc.reserve(<size_t>min(na * nb, 1 << 20))
    cdef size_t i, j
    cdef long long prod, s
    cdef unsigned long long key
    cdef bint overflow = False
    with nogil:
        for i in range(ka.size()):
            for j in range(kb.size()):
                if mul_ovf(ca[i], cb[j], &prod):
                    overflow = True
                    break
                key = ka[i] + kb[j]
                if add_ovf(acc[key], prod, &s):
                    overflow = True
                    break
                acc[key] = s
            if overflow:
                break
    if overflow:
        return _kernel_py.mul(a, b)
    cdef dict out = {}
    cdef unordered_map[unsigned long long, long long].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out[deref(it).first] = deref(it).second
        inc(it)
    return out


def mul_term(dict a, key, coef):
    if not coef:
        return {}
    return {k + key: c * coef for k, c in a.items()}


def axpy(dict acc, dict b, coef):
    if not coef:
        return
    cdef object k, c, v
    for k, c in b.items():
        v = acc.get(k, 0) + coef * c
        if v:
            acc[k] = v
        else:
            del acc[k]
