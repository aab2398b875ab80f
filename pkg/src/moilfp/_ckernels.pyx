# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled tableau kernels over ``gmpy2.mpq`` entries.

Same contracts as :mod:`moilfp._pykernels`; every entry must be an ``mpq``.
"""
from libc.stdlib cimport malloc, free
from gmpy2 cimport *

cdef extern from "gmp.h":
    void mpq_init(mpq_ptr)
    void mpq_clear(mpq_ptr)
    void mpq_mul(mpq_ptr, mpq_srcptr, mpq_srcptr)
    void mpq_sub(mpq_ptr, mpq_srcptr, mpq_srcptr)
    void mpq_div(mpq_ptr, mpq_srcptr, mpq_srcptr)
    int mpq_sgn(mpq_srcptr)

import_gmpy2()


def pivot(list rows, Py_ssize_t r, Py_ssize_t col):
    cdef list prow = <list>rows[r]
    cdef list row
    cdef mpq piv = <mpq?>prow[col]
    cdef mpq v, f, res
    cdef Py_ssize_t width = len(prow)
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t c, i, t, nnz = 0
    cdef Py_ssize_t *nz = <Py_ssize_t *>malloc(width * sizeof(Py_ssize_t))
    cdef mpq_t tmp
    if nz == NULL:
        raise MemoryError()
    mpq_init(tmp)
    try:
        for c in range(width):
            v = <mpq?>prow[c]
            if mpq_sgn(v.q) != 0:
                res = GMPy_MPQ_New(NULL)
                mpq_div(res.q, v.q, piv.q)
                prow[c] = res
                nz[nnz] = c
                nnz += 1
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            f = <mpq?>row[col]
            if mpq_sgn(f.q) == 0:
                continue
            for t in range(nnz):
                c = nz[t]
                v = <mpq?>prow[c]
                mpq_mul(tmp, f.q, v.q)
                res = GMPy_MPQ_New(NULL)
                mpq_sub(res.q, (<mpq?>row[c]).q, tmp)
                row[c] = res
    finally:
        mpq_clear(tmp)
        free(nz)


def sub_scaled(list dst, list src, f):
    cdef mpq ff = <mpq?>f
    cdef mpq v, res
    cdef Py_ssize_t c, width = len(src)
    cdef mpq_t tmp
    mpq_init(tmp)
    try:
        for c in range(width):
            v = <mpq?>src[c]
            if mpq_sgn(v.q) != 0:
                mpq_mul(tmp, ff.q, v.q)
                res = GMPy_MPQ_New(NULL)
                mpq_sub(res.q, (<mpq?>dst[c]).q, tmp)
                dst[c] = res
    finally:
        mpq_clear(tmp)


def gammas(list num_row, list den_row, cols):
    cdef mpq a = <mpq?>num_row[0]
    cdef mpq b = <mpq?>den_row[0]
    cdef mpq res
    cdef Py_ssize_t c
    cdef list out = []
    cdef mpq_t tmp
    mpq_init(tmp)
    try:
        for c in cols:
            res = GMPy_MPQ_New(NULL)
            mpq_mul(res.q, a.q, (<mpq?>den_row[c]).q)
            mpq_mul(tmp, b.q, (<mpq?>num_row[c]).q)
            mpq_sub(res.q, res.q, tmp)
            out.append(res)
    finally:
        mpq_clear(tmp)
    return out
