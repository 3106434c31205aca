"""Pure-Python kernels. Same signatures and outputs as the compiled ``_ckernels``.

Tuples over ``range(n)`` of length ``k`` are coded in mixed radix, first
coordinate most significant, so numeric order is lexicographic order.
"""

import numpy as np

BACKEND = "python"


def orbit_ids(tables, size):
    """Canonical orbit ids of the codes ``0..size-1`` under the image tables.

    ``tables[g][t]`` is the code of the image of tuple ``t`` under generator
    ``g``. Ids are numbered by least member. Returns ``(ids, count)``.
    """
    parent = list(range(size))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for row in tables:
        for t, u in enumerate(row.tolist()):
            a, b = find(t), find(u)
            if a != b:
                # smaller root wins so each root is its class minimum
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    ids = np.empty(size, dtype=np.int32)
    root_id = {}
    for t in range(size):
        r = find(t)
        if r == t:
            root_id[t] = len(root_id)
        ids[t] = root_id[r]
    return ids, len(root_id)


def _image_code(perm, code, n, k):
    out = 0
    digits = []
    for _ in range(k):
        code, d = divmod(code, n)
        digits.append(d)
    for d in reversed(digits):
        out = out * n + perm[d]
    return out


def preserves(perm, orbit_of, n, k):
    perm = list(perm)
    ids = orbit_of.tolist() if isinstance(orbit_of, np.ndarray) else orbit_of
    for t in range(len(ids)):
        if ids[_image_code(perm, t, n, k)] != ids[t]:
            return False
    return True


def _tuple_digits(n, k):
    size = n**k
    codes = np.arange(size, dtype=np.int64)
    digits = np.empty((size, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        digits[:, j] = codes % n
        codes //= n
    return digits


def oracle_filter(orbit_of, n, k):
    """All permutations of degree ``n`` preserving every orbit id, in lex order."""
    from itertools import permutations

    ids = np.asarray(orbit_of)
    digits = _tuple_digits(n, k)
    weights = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    kept = []
    for images in permutations(range(n)):
        arr = np.asarray(images, dtype=np.int64)
        img = arr[digits] @ weights
        if np.array_equal(ids[img], ids):
            kept.append(images)
    return np.asarray(kept, dtype=np.int32).reshape(len(kept), n)


def backtrack(orbit_of, n, k, point_class, level_start, check_codes, check_digits):
    """Depth-first search assigning images of points ``0, 1, ..., n-1``.

    Candidates for point ``i`` are unused points of the same 1-orbit class, in
    increasing order. After assigning point ``i`` every tuple with largest
    entry ``i`` (``check_codes[level_start[i]:level_start[i+1]]``) must keep
    its orbit id.
    """
    ids = orbit_of.tolist()
    cls = list(point_class)
    starts = list(level_start)
    codes = check_codes.tolist()
    digs = check_digits.tolist()
    img = [0] * n
    used = [False] * n
    found = []

    def ok(i):
        for c in range(starts[i], starts[i + 1]):
            code = 0
            for d in digs[c]:
                code = code * n + img[d]
            if ids[code] != ids[codes[c]]:
                return False
        return True

    def search(i):
        if i == n:
            found.append(tuple(img))
            return
        for b in range(n):
            if used[b] or cls[b] != cls[i]:
                continue
            img[i] = b
            used[b] = True
            if ok(i):
                search(i + 1)
            used[b] = False

    search(0)
    return np.asarray(found, dtype=np.int32).reshape(len(found), n)
