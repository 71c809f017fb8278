# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels; same contract as nument._kernels_py."""

from libc.math cimport log, fabs
from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef double* _log_table(Py_ssize_t size) except NULL:
    cdef double* table = <double*> PyMem_Malloc(size * sizeof(double))
    if table == NULL:
        raise MemoryError()
    table[0] = 0.0
    cdef Py_ssize_t k
    for k in range(1, size):
        table[k] = log(<double> k)
    return table


def system_row(long long x, long long bound, bint allow_negative, double rel_margin):
    cdef double* logs = _log_table(2 * bound + 2)
    cdef long long* hits = <long long*> PyMem_Malloc(2 * bound * bound * sizeof(long long))
    if hits == NULL:
        PyMem_Free(logs)
        raise MemoryError()
    cdef long long y, u, v, av, n = 0
    cdef double lhs, rhs, slack
    try:
        with nogil:
            for y in range(1, bound + 1):
                lhs = x * logs[x] + y * logs[y]
                slack = rel_margin * (lhs if lhs > 1.0 else 1.0)
                for u in range(1, bound + 1):
                    if u == x:
                        continue
                    v = x + y - u
                    if v == 0 or (v < 0 and not allow_negative):
                        continue
                    av = v if v > 0 else -v
                    rhs = x * logs[u] + y * logs[av]
                    if fabs(lhs - rhs) <= slack:
                        hits[2 * n] = y
                        hits[2 * n + 1] = u
                        n += 1
        return [(hits[2 * k], hits[2 * k + 1]) for k in range(n)]
    finally:
        PyMem_Free(logs)
        PyMem_Free(hits)


def divergence_row(long long total, double rel_margin):
    cdef double* logs = _log_table(total + 1)
    cdef long long* hits = <long long*> PyMem_Malloc(2 * total * total * sizeof(long long))
    if hits == NULL:
        PyMem_Free(logs)
        raise MemoryError()
    cdef long long a1, a2, b1, b2, n = 0
    cdef double lhs, rhs, slack
    try:
        with nogil:
            for a1 in range(1, total):
                a2 = total - a1
                lhs = a1 * logs[a1] + a2 * logs[a2]
                slack = rel_margin * (lhs if lhs > 1.0 else 1.0)
                for b1 in range(1, total):
                    b2 = total - b1
                    rhs = a1 * logs[b1] + a2 * logs[b2]
                    if fabs(lhs - rhs) <= slack:
                        hits[2 * n] = a1
                        hits[2 * n + 1] = b1
                        n += 1
        return [(hits[2 * k], hits[2 * k + 1]) for k in range(n)]
    finally:
        PyMem_Free(logs)
        PyMem_Free(hits)
