# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels for the hot loops.

Mirrors threecycle._pykernels: length-3 pattern containment, exhaustive
generate-and-filter counting over 3-cycle-only permutations (per query and as
a batched avoidance profile), and the balanced-prefix statistic over
staircase sets.  The Python wrappers validate; the cdef workers run nogil.
"""

from libc.stdlib cimport calloc, free

BACKEND = "compiled"

ORIENT_231 = 1
ORIENT_312 = 2

PROFILE_PATTERNS = (
    (1, 2, 3),
    (1, 3, 2),
    (2, 1, 3),
    (2, 3, 1),
    (3, 1, 2),
    (3, 2, 1),
)

cdef int _ORIENT_231 = 1
cdef int _ORIENT_312 = 2


cdef bint _contains3(const int* v, int m, bint ab, bint bc, bint ac) noexcept nogil:
    cdef int i, j, k
    for i in range(m - 2):
        for j in range(i + 1, m - 1):
            if (v[i] < v[j]) != ab:
                continue
            for k in range(j + 1, m):
                if ((v[j] < v[k]) == bc) and ((v[i] < v[k]) == ac):
                    return True
    return False


def contains_pattern3(values, pattern):
    """True iff some length-3 subsequence of ``values`` is order-isomorphic to
    ``pattern``."""
    cdef int m = len(values)
    cdef int pa = pattern[0], pb = pattern[1], pc = pattern[2]
    if m < 3:
        return False
    cdef int* v = <int*> calloc(m, sizeof(int))
    if v == NULL:
        raise MemoryError()
    cdef int i
    cdef bint found
    try:
        for i in range(m):
            v[i] = values[i]
        with nogil:
            found = _contains3(v, m, pa < pb, pb < pc, pa < pc)
        return bool(found)
    finally:
        free(v)


cdef long long _count_rec(int* perm, unsigned char* used, int m, int low,
                          int remaining, const int* pats, int npat,
                          int mask) noexcept nogil:
    cdef int a = low, b, c, t
    cdef long long total = 0
    if remaining == 0:
        for t in range(npat):
            if _contains3(perm, m,
                          pats[3 * t] < pats[3 * t + 1],
                          pats[3 * t + 1] < pats[3 * t + 2],
                          pats[3 * t] < pats[3 * t + 2]):
                return 0
        return 1
    while used[a]:
        a += 1
    used[a] = 1
    for b in range(a + 1, m + 1):
        if used[b]:
            continue
        used[b] = 1
        for c in range(b + 1, m + 1):
            if used[c]:
                continue
            used[c] = 1
            if mask & _ORIENT_231:
                perm[a - 1] = b; perm[b - 1] = c; perm[c - 1] = a
                total += _count_rec(perm, used, m, a + 1, remaining - 1,
                                    pats, npat, mask)
            if mask & _ORIENT_312:
                perm[a - 1] = c; perm[c - 1] = b; perm[b - 1] = a
                total += _count_rec(perm, used, m, a + 1, remaining - 1,
                                    pats, npat, mask)
            used[c] = 0
        used[b] = 0
    used[a] = 0
    return total


cdef int _form_mask(form) except -1:
    if form is None:
        return _ORIENT_231 | _ORIENT_312
    if form == "231":
        return _ORIENT_231
    if form == "312":
        return _ORIENT_312
    raise ValueError(f"unknown form filter: {form!r}")


def count_avoiders(n, patterns, form=None, first=None):
    """Count 3-cycle-only permutations of [3n] avoiding every listed length-3
    pattern, with cycle forms restricted by ``form`` and optionally the cycle
    of element 1 fixed by ``first = (b, c, orientation)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cdef int m = 3 * n
    cdef int mask = _form_mask(form)
    cdef int npat = len(patterns)
    cdef int i, b, c, orient, start_low, remaining
    cdef long long result
    if n == 0:
        return 0

    cdef int* perm = <int*> calloc(m, sizeof(int))
    cdef int* pats = <int*> calloc(max(3 * npat, 1), sizeof(int))
    cdef unsigned char* used = <unsigned char*> calloc(m + 2, 1)
    if perm == NULL or pats == NULL or used == NULL:
        free(perm); free(pats); free(used)
        raise MemoryError()
    try:
        for i in range(npat):
            pats[3 * i] = patterns[i][0]
            pats[3 * i + 1] = patterns[i][1]
            pats[3 * i + 2] = patterns[i][2]
        start_low = 1
        remaining = n
        if first is not None:
            b, c, orient = first
            if not (2 <= b < c <= m):
                raise ValueError(
                    f"invalid first-cycle partners ({b}, {c}) for size {m}")
            if orient not in (_ORIENT_231, _ORIENT_312):
                raise ValueError(f"invalid orientation {orient}")
            if not mask & orient:
                return 0
            used[1] = used[b] = used[c] = 1
            if orient == _ORIENT_231:
                perm[0] = b; perm[b - 1] = c; perm[c - 1] = 1
            else:
                perm[0] = c; perm[c - 1] = b; perm[b - 1] = 1
            start_low = 2
            remaining = n - 1
        with nogil:
            result = _count_rec(perm, used, m, start_low, remaining,
                                pats, npat, mask)
        return result
    finally:
        free(perm); free(pats); free(used)


cdef void _profile_rec(int* perm, unsigned char* used, int m, int n, int low,
                       int remaining, int n231, long long* table) noexcept nogil:
    cdef int a = low, b, c, i, row, mask
    if remaining == 0:
        mask = 0
        # bit order matches PROFILE_PATTERNS: 123,132,213,231,312,321
        if not _contains3(perm, m, True, True, True):
            mask |= 1
        if not _contains3(perm, m, True, False, True):
            mask |= 2
        if not _contains3(perm, m, False, True, True):
            mask |= 4
        if not _contains3(perm, m, True, False, False):
            mask |= 8
        if not _contains3(perm, m, False, True, False):
            mask |= 16
        if not _contains3(perm, m, False, False, False):
            mask |= 32
        if n231 == 0:
            row = 1
        elif n231 == n:
            row = 2
        else:
            row = 0
        table[64 * row + mask] += 1
        return
    while used[a]:
        a += 1
    used[a] = 1
    for b in range(a + 1, m + 1):
        if used[b]:
            continue
        used[b] = 1
        for c in range(b + 1, m + 1):
            if used[c]:
                continue
            used[c] = 1
            perm[a - 1] = b; perm[b - 1] = c; perm[c - 1] = a
            _profile_rec(perm, used, m, n, a + 1, remaining - 1, n231 + 1, table)
            perm[a - 1] = c; perm[c - 1] = b; perm[b - 1] = a
            _profile_rec(perm, used, m, n, a + 1, remaining - 1, n231, table)
            used[c] = 0
        used[b] = 0
    used[a] = 0


def avoidance_profile(n, first=None):
    """One exhaustive sweep histogrammed by (form class, avoidance mask); see
    the pure-Python twin for the table layout."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cdef int cn = n
    cdef int m = 3 * cn
    cdef int b, c, orient, n231, start_low, remaining
    result = [[0] * 64 for _ in range(3)]
    if cn == 0:
        return result

    cdef int* perm = <int*> calloc(m, sizeof(int))
    cdef unsigned char* used = <unsigned char*> calloc(m + 2, 1)
    cdef long long* table = <long long*> calloc(3 * 64, sizeof(long long))
    if perm == NULL or used == NULL or table == NULL:
        free(perm); free(used); free(table)
        raise MemoryError()
    cdef int row, col
    try:
        start_low = 1
        remaining = cn
        n231 = 0
        if first is not None:
            b, c, orient = first
            if not (2 <= b < c <= m):
                raise ValueError(
                    f"invalid first-cycle partners ({b}, {c}) for size {m}")
            used[1] = used[b] = used[c] = 1
            if orient == _ORIENT_231:
                perm[0] = b; perm[b - 1] = c; perm[c - 1] = 1
                n231 = 1
            elif orient == _ORIENT_312:
                perm[0] = c; perm[c - 1] = b; perm[b - 1] = 1
            else:
                raise ValueError(f"invalid orientation {orient}")
            start_low = 2
            remaining = cn - 1
        with nogil:
            _profile_rec(perm, used, m, cn, start_low, remaining, n231, table)
        for row in range(3):
            for col in range(64):
                result[row][col] = table[64 * row + col]
        return result
    finally:
        free(perm); free(used); free(table)


def h_of_tset(t):
    """Balanced-prefix statistic of the z/x/y word of a staircase set."""
    cdef int n = len(t)
    cdef int m = 3 * n
    cdef int x = 0, y = 0, z = 0, h = 0, pos
    if n == 0:
        return 0
    cdef unsigned char* is_z = <unsigned char*> calloc(m + 1, 1)
    cdef int* z_at_x = <int*> calloc(n, sizeof(int))
    if is_z == NULL or z_at_x == NULL:
        free(is_z); free(z_at_x)
        raise MemoryError()
    try:
        for pos in range(n):
            is_z[<int> t[pos]] = 1
        with nogil:
            for pos in range(1, m + 1):
                if is_z[pos]:
                    z += 1
                    continue
                if x == y or z_at_x[y] != x:
                    z_at_x[x] = z
                    x += 1
                else:
                    y += 1
                    if x == y:
                        h += 1
        return h
    finally:
        free(is_z); free(z_at_x)
