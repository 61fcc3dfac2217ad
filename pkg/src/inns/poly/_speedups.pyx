# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernels; behavioural twin of inns.poly._kernels."""

DP = 0
DS = 1


def exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


def exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


def exp_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] if a[i] > b[i] else b[i]
    return tuple(out)


def sort_key(tuple blocks, tuple exps):
    cdef Py_ssize_t i, start, stop
    cdef int code
    key = []
    for code, start, stop in blocks:
        deg = 0
        for i in range(start, stop):
            deg = deg + exps[i]
        key.append(deg if code == DP else -deg)
        for i in range(stop - 1, start - 1, -1):
            key.append(-exps[i])
    return tuple(key)


def merge_scaled(dict terms, coeff, tuple shift, dict gterms):
    cdef tuple exps, m
    for exps, c in gterms.items():
        m = exp_add(exps, shift)
        v = terms.get(m)
        if v is None:
            terms[m] = coeff * c
        else:
            v = v + coeff * c
            if v:
                terms[m] = v
            else:
                del terms[m]
