# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled group-enumeration kernel.

Contract and output order are identical to _pykernel.enumerate_group;
only the inner composition loop and storage management move to C.
"""

from array import array

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc, realloc

BACKEND = "c"


def enumerate_group(gens, key_positions, cap):
    cdef Py_ssize_t g = len(gens)
    if g == 0:
        raise ValueError("need at least one generator (or handle identity upstream)")
    cdef Py_ssize_t m = len(gens[0])
    cdef Py_ssize_t nkey = len(key_positions)
    cdef Py_ssize_t i, j, x, idx, lo, hi, count, capacity
    cdef long long cap_ll = cap
    cdef int* gbuf = NULL
    cdef int* kpos = NULL
    cdef int* elems = NULL

    gbuf = <int*> malloc(g * m * sizeof(int))
    kpos = <int*> malloc((nkey if nkey > 0 else 1) * sizeof(int))
    if gbuf == NULL or kpos == NULL:
        free(gbuf)
        free(kpos)
        raise MemoryError()
    try:
        for j in range(g):
            row = gens[j]
            if len(row) != m:
                raise ValueError("generator length mismatch")
            for x in range(m):
                gbuf[j * m + x] = row[x]
        for i in range(nkey):
            kpos[i] = key_positions[i]

        capacity = 1024
        elems = <int*> malloc(capacity * m * sizeof(int))
        if elems == NULL:
            raise MemoryError()

        for x in range(m):
            elems[x] = x
        parents = array("i", [-1])
        genids = array("i", [-1])
        seen = {tuple([elems[kpos[i]] for i in range(nkey)])}
        count = 1
        lo = 0
        hi = 1
        while lo < hi:
            for idx in range(lo, hi):
                for j in range(g):
                    if count + 1 > capacity:
                        capacity = capacity * 2
                        elems = <int*> realloc(elems, capacity * m * sizeof(int))
                        if elems == NULL:
                            raise MemoryError()
                    # scratch slot: child = elems[idx] o gens[j]
                    for x in range(m):
                        elems[count * m + x] = elems[idx * m + gbuf[j * m + x]]
                    key = tuple(
                        [elems[count * m + kpos[i]] for i in range(nkey)]
                    )
                    if key not in seen:
                        if count + 1 > cap_ll:
                            raise OverflowError(
                                f"group enumeration exceeded cap of {cap} elements"
                            )
                        seen.add(key)
                        parents.append(idx)
                        genids.append(j)
                        count += 1
            lo = hi
            hi = count
        raw = PyBytes_FromStringAndSize(<char*> elems, count * m * sizeof(int))
        flat = array("i")
        flat.frombytes(raw)
        return flat, parents, genids
    finally:
        free(gbuf)
        free(kpos)
        free(elems)
