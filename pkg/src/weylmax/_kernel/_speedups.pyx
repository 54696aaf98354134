# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled width-1 permutation kernels.

Same contracts as ``weylmax._kernel.pure``; permutations are bytes of
length 2N with one byte per signed-root entry.  The pure module is the
reference implementation; this one only removes interpreter overhead.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize


cdef inline bytes _compose(const unsigned char* pa, bytes b):
    cdef Py_ssize_t n = len(b)
    cdef const unsigned char* pb = <const unsigned char*> PyBytes_AS_STRING(b)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* po = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t k
    for k in range(n):
        po[k] = pa[pb[k]]
    return out


def compose(bytes a, bytes b):
    return _compose(<const unsigned char*> PyBytes_AS_STRING(a), b)


def invert(bytes a):
    cdef Py_ssize_t n2 = len(a)
    cdef const unsigned char* pa = <const unsigned char*> PyBytes_AS_STRING(a)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n2)
    cdef unsigned char* po = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t k
    for k in range(n2):
        po[pa[k]] = <unsigned char> k
    return out


def inversions(bytes a, Py_ssize_t n):
    cdef const unsigned char* pa = <const unsigned char*> PyBytes_AS_STRING(a)
    cdef Py_ssize_t k, count = 0
    for k in range(n):
        if pa[k] >= n:
            count += 1
    return count


def reduced_word(bytes a, Py_ssize_t rank, Py_ssize_t n, list gens):
    cdef Py_ssize_t n2 = len(a)
    cdef bytearray buf = bytearray(invert(a))
    cdef bytearray tmp = bytearray(n2)
    cdef unsigned char* pb = buf
    cdef unsigned char* pt = tmp
    cdef unsigned char* swap
    cdef const unsigned char* pg
    cdef Py_ssize_t i, k
    cdef list word = []
    while True:
        i = -1
        for k in range(rank):
            if pb[k] >= n:
                i = k
                break
        if i < 0:
            return tuple(word)
        word.append(i)
        pg = <const unsigned char*> PyBytes_AS_STRING(<bytes> gens[i])
        for k in range(n2):
            pt[k] = pb[pg[k]]
        swap = pb
        pb = pt
        pt = swap


def generate_group(list gens, Py_ssize_t n2):
    cdef bytes ident = bytes(range(n2))
    cdef set seen = {ident}
    cdef list frontier = [ident]
    cdef list new
    cdef bytes x, y, g
    cdef const unsigned char* pg
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                pg = <const unsigned char*> PyBytes_AS_STRING(g)
                y = _compose(pg, x)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def conjugacy_orbit(bytes seed, list gens):
    cdef Py_ssize_t n2 = len(seed)
    cdef set seen = {seed}
    cdef list frontier = [seed]
    cdef list new
    cdef bytes x, y, g
    cdef const unsigned char* pg
    cdef const unsigned char* px
    cdef bytearray tmp = bytearray(n2)
    cdef unsigned char* pt = tmp
    cdef Py_ssize_t k
    while frontier:
        new = []
        for x in frontier:
            px = <const unsigned char*> PyBytes_AS_STRING(x)
            for g in gens:
                pg = <const unsigned char*> PyBytes_AS_STRING(g)
                # x∘g into tmp, then g∘(x∘g)
                for k in range(n2):
                    pt[k] = px[pg[k]]
                y = PyBytes_FromStringAndSize(NULL, n2)
                for k in range(n2):
                    (<unsigned char*> PyBytes_AS_STRING(y))[k] = pg[pt[k]]
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen
