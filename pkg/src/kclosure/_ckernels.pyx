# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

BACKEND = "cython"


cdef inline Py_ssize_t _find(Py_ssize_t* parent, Py_ssize_t x) noexcept nogil:
    cdef Py_ssize_t root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def orbit_ids(tables, Py_ssize_t size):
    cdef const cnp.int64_t[:, ::1] tab = np.ascontiguousarray(tables, dtype=np.int64).reshape(-1, size)
    cdef Py_ssize_t m = tab.shape[0], g, t, a, b, r, count = 0
    cdef Py_ssize_t* parent = <Py_ssize_t*>malloc(size * sizeof(Py_ssize_t))
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ids = np.empty(size, dtype=np.int32)
    if parent == NULL:
        raise MemoryError()
    try:
        with nogil:
            for t in range(size):
                parent[t] = t
            for g in range(m):
                for t in range(size):
                    a = _find(parent, t)
                    b = _find(parent, tab[g, t])
                    if a < b:
                        parent[b] = a
                    elif b < a:
                        parent[a] = b
            for t in range(size):
                r = _find(parent, t)
                if r == t:
                    ids[t] = count
                    count += 1
                else:
                    ids[t] = ids[r]
    finally:
        free(parent)
    return ids, count


cdef inline bint _preserves(const cnp.int32_t* img, const cnp.int32_t[::1] ids,
                            Py_ssize_t n, Py_ssize_t k, Py_ssize_t size) noexcept nogil:
    cdef Py_ssize_t t, code, j, rest, out, w
    for t in range(size):
        rest = t
        out = 0
        w = 1
        for j in range(k):
            out += img[rest % n] * w
            rest //= n
            w *= n
        if ids[out] != ids[t]:
            return False
    return True


def preserves(perm, orbit_of, Py_ssize_t n, Py_ssize_t k):
    cdef const cnp.int32_t[::1] img = np.ascontiguousarray(perm, dtype=np.int32)
    cdef const cnp.int32_t[::1] ids = np.ascontiguousarray(orbit_of, dtype=np.int32)
    return bool(_preserves(&img[0], ids, n, k, ids.shape[0]))


def oracle_filter(orbit_of, Py_ssize_t n, Py_ssize_t k):
    cdef const cnp.int32_t[::1] ids = np.ascontiguousarray(orbit_of, dtype=np.int32)
    cdef Py_ssize_t size = ids.shape[0], i, j, tmp
    cdef cnp.int32_t* a = <cnp.int32_t*>malloc(n * sizeof(cnp.int32_t))
    cdef cnp.int32_t swap
    kept = []
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            a[i] = i
        while True:
            if _preserves(a, ids, n, k, size):
                kept.append([a[i] for i in range(n)])
            # next permutation in lexicographic order
            i = n - 2
            while i >= 0 and a[i] >= a[i + 1]:
                i -= 1
            if i < 0:
                break
            j = n - 1
            while a[j] <= a[i]:
                j -= 1
            swap = a[i]; a[i] = a[j]; a[j] = swap
            i += 1
            j = n - 1
            while i < j:
                swap = a[i]; a[i] = a[j]; a[j] = swap
                i += 1
                j -= 1
    finally:
        free(a)
    return np.asarray(kept, dtype=np.int32).reshape(len(kept), n)


cdef class _Search:
    cdef const cnp.int32_t[::1] ids
    cdef const cnp.int32_t[::1] cls
    cdef const cnp.int64_t[::1] starts
    cdef const cnp.int64_t[::1] codes
    cdef const cnp.int64_t[:, ::1] digs
    cdef Py_ssize_t n, k
    cdef cnp.int32_t[::1] img
    cdef cnp.uint8_t[::1] used
    cdef list found

    cdef bint ok(self, Py_ssize_t i) noexcept:
        cdef Py_ssize_t c, j, code
        for c in range(self.starts[i], self.starts[i + 1]):
            code = 0
            for j in range(self.k):
                code = code * self.n + self.img[self.digs[c, j]]
            if self.ids[code] != self.ids[self.codes[c]]:
                return False
        return True

    cdef void run(self, Py_ssize_t i):
        cdef Py_ssize_t b
        if i == self.n:
            self.found.append(bytes(memoryview(self.img)))
            return
        for b in range(self.n):
            if self.used[b] or self.cls[b] != self.cls[i]:
                continue
            self.img[i] = b
            self.used[b] = 1
            if self.ok(i):
                self.run(i + 1)
            self.used[b] = 0


def backtrack(orbit_of, Py_ssize_t n, Py_ssize_t k, point_class, level_start,
              check_codes, check_digits):
    cdef _Search s = _Search()
    s.ids = np.ascontiguousarray(orbit_of, dtype=np.int32)
    s.cls = np.ascontiguousarray(point_class, dtype=np.int32)
    s.starts = np.ascontiguousarray(level_start, dtype=np.int64)
    s.codes = np.ascontiguousarray(check_codes, dtype=np.int64)
    s.digs = np.ascontiguousarray(check_digits, dtype=np.int64).reshape(-1, k)
    s.n = n
    s.k = k
    s.img = np.zeros(n, dtype=np.int32)
    s.used = np.zeros(n, dtype=np.uint8)
    s.found = []
    s.run(0)
    if not s.found:
        return np.zeros((0, n), dtype=np.int32)
    return np.frombuffer(b"".join(s.found), dtype=np.int32).reshape(len(s.found), n).copy()
