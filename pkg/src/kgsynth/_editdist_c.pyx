# cython: language_level=3
"""Compiled Levenshtein kernels. Mirrors kgsynth._editdist_py exactly."""

from libc.stdlib cimport free, malloc


cdef inline int _imin3(int x, int y, int z) nogil:
    if y < x:
        x = y
    if z < x:
        x = z
    return x


def levenshtein(str a, str b):
    """Unit-cost edit distance (insert/delete/substitute) between two strings."""
    if a == b:
        return 0
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    cdef int *prev = <int *> malloc((lb + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((lb + 1) * sizeof(int))
    cdef Py_UCS4 *bs = <Py_UCS4 *> malloc(lb * sizeof(Py_UCS4))
    if prev == NULL or cur == NULL or bs == NULL:
        free(prev); free(cur); free(bs)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef Py_UCS4 ca
    cdef int cost, result
    cdef int *tmp
    try:
        for j in range(lb):
            bs[j] = b[j]
        for j in range(lb + 1):
            prev[j] = <int> j
        for i in range(1, la + 1):
            ca = a[i - 1]
            cur[0] = <int> i
            for j in range(1, lb + 1):
                cost = 0 if ca == bs[j - 1] else 1
                cur[j] = _imin3(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            tmp = prev
            prev = cur
            cur = tmp
        result = prev[lb]
    finally:
        free(prev)
        free(cur)
        free(bs)
    return result


def levenshtein_capped(str a, str b, int cap):
    """Edit distance if it is <= cap, else cap + 1. Banded dynamic program."""
    if cap < 0:
        raise ValueError("cap must be >= 0")
    if a == b:
        return 0
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t diff = la - lb if la > lb else lb - la
    if diff > cap:
        return cap + 1
    if la == 0 or lb == 0:
        return <int> (la if la > lb else lb)
    cdef int big = cap + 1
    cdef int *prev = <int *> malloc((lb + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((lb + 1) * sizeof(int))
    cdef Py_UCS4 *bs = <Py_UCS4 *> malloc(lb * sizeof(Py_UCS4))
    if prev == NULL or cur == NULL or bs == NULL:
        free(prev); free(cur); free(bs)
        raise MemoryError()
    cdef Py_ssize_t i, j, lo, hi
    cdef Py_UCS4 ca
    cdef int cost, d, best, result
    cdef int *tmp
    try:
        for j in range(lb):
            bs[j] = b[j]
        for j in range(lb + 1):
            prev[j] = <int> j if j <= cap else big
        for i in range(1, la + 1):
            ca = a[i - 1]
            lo = i - cap if i - cap > 1 else 1
            hi = i + cap if i + cap < lb else lb
            for j in range(lb + 1):
                cur[j] = big
            if lo == 1:
                cur[0] = <int> i if i <= cap else big
            best = big
            for j in range(lo, hi + 1):
                cost = 0 if ca == bs[j - 1] else 1
                d = _imin3(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
                if d > big:
                    d = big
                cur[j] = d
                if d < best:
                    best = d
            if best > cap:
                return big
            tmp = prev
            prev = cur
            cur = tmp
        result = prev[lb] if prev[lb] <= cap else big
    finally:
        free(prev)
        free(cur)
        free(bs)
    return result
