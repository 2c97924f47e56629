# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the collapsibility search.

Mirrors ``_collapse_py`` operation for operation: identical candidate-step
ordering, identical greedy random streams, identical memo policy.  See that
module's docstring for the search contract; the two kernels must return the
same decisions, certificates, and node counts on the same inputs.

States travel as bytes (each facet mask packed little-endian into 8 bytes,
masks sorted ascending) and the hot loops run over C arrays.  Capacity is
fixed at compile time; inputs beyond it raise :class:`KernelCapacity` and
the caller is expected to fall back to the pure kernel.  The scan scratch
buffers are module-level and the kernel holds the GIL throughout, so the
search is single-threaded by construction.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize, PyBytes_GET_SIZE
from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define CCPOPCOUNT(x) __builtin_popcountll(x)
    #else
    static int CCPOPCOUNT(unsigned long long x){int c=0;while(x){x&=x-1;++c;}return c;}
    #endif
    """
    int CCPOPCOUNT(unsigned long long x) nogil

MODE_GENERALIZED = 0
MODE_COLLAPSE = 1
MODE_STRICT = 2

KERNEL_NAME = "compiled"

cdef enum:
    MAX_FACETS = 192
    MAX_PAIRS = 6144
    MAX_BYTES = 1536

cdef uint64_t MUL = <uint64_t>6364136223846793005
cdef uint64_t INC = <uint64_t>1442695040888963407
cdef uint64_t MIX = <uint64_t>0x9E3779B97F4A7C15


class KernelCapacity(Exception):
    """Input exceeds the compiled kernel's fixed buffers."""


# Scratch for free-pair scans.  Safe because pairs are copied out before
# any recursion and nothing here releases the GIL.
cdef uint64_t g_ps[MAX_PAIRS]
cdef uint64_t g_pt[MAX_PAIRS]


cdef int _load(bytes state, uint64_t* buf) except -1:
    cdef Py_ssize_t nb = PyBytes_GET_SIZE(state)
    cdef const unsigned char* p = <const unsigned char*>PyBytes_AS_STRING(state)
    cdef int n = <int>(nb >> 3)
    cdef int i, j
    cdef uint64_t v
    if n > MAX_FACETS:
        raise KernelCapacity("facet count exceeds compiled kernel capacity")
    for i in range(n):
        v = 0
        for j in range(8):
            v |= (<uint64_t>p[i * 8 + j]) << (8 * j)
        buf[i] = v
    return n


cdef bytes _store(uint64_t* buf, int n):
    cdef unsigned char tmp[MAX_BYTES]
    cdef int i, j
    cdef uint64_t v
    for i in range(n):
        v = buf[i]
        for j in range(8):
            tmp[i * 8 + j] = <unsigned char>((v >> (8 * j)) & 0xFF)
    return PyBytes_FromStringAndSize(<char*>tmp, n * 8)


cdef bytes _pack(tuple facets):
    cdef uint64_t buf[MAX_FACETS]
    cdef int n = len(facets)
    cdef int i
    if n > MAX_FACETS:
        raise KernelCapacity("facet count exceeds compiled kernel capacity")
    for i in range(n):
        buf[i] = <uint64_t>facets[i]
    return _store(buf, n)


cdef inline bint _is_point_c(uint64_t* fac, int nf) nogil:
    return nf == 1 and CCPOPCOUNT(fac[0]) == 1


cdef int _scan_pairs(uint64_t* fac, int nf, int mode) except -1:
    """Fill g_ps/g_pt with legal steps sorted by (|sigma|, sigma); returns count."""
    cdef int np = 0, ti, i, k, m, kc
    cdef uint64_t t, s, sub, rem, bit, ks, kt
    cdef bint unique
    for ti in range(nf):
        t = fac[ti]
        if mode == 2:
            rem = t
            while rem:
                bit = rem & (0 - rem)
                rem ^= bit
                s = t ^ bit
                if s != 0:
                    unique = True
                    for i in range(nf):
                        if i != ti and (s & ~fac[i]) == 0:
                            unique = False
                            break
                    if unique:
                        if np >= MAX_PAIRS:
                            raise KernelCapacity("free-pair count exceeds kernel capacity")
                        g_ps[np] = s
                        g_pt[np] = t
                        np += 1
        else:
            if mode == 0:
                sub = t
            else:
                sub = (t - 1) & t
            while sub:
                unique = True
                for i in range(nf):
                    if i != ti and (sub & ~fac[i]) == 0:
                        unique = False
                        break
                if unique:
                    if np >= MAX_PAIRS:
                        raise KernelCapacity("free-pair count exceeds kernel capacity")
                    g_ps[np] = sub
                    g_pt[np] = t
                    np += 1
                sub = (sub - 1) & t
    for k in range(1, np):
        ks = g_ps[k]
        kt = g_pt[k]
        kc = CCPOPCOUNT(ks)
        m = k - 1
        while m >= 0 and (CCPOPCOUNT(g_ps[m]) > kc or (CCPOPCOUNT(g_ps[m]) == kc and g_ps[m] > ks)):
            g_ps[m + 1] = g_ps[m]
            g_pt[m + 1] = g_pt[m]
            m -= 1
        g_ps[m + 1] = ks
        g_pt[m + 1] = kt
    return np


cdef int _apply_c(uint64_t* fac, int nf, uint64_t sigma, uint64_t tau, uint64_t* out) except -1:
    cdef int nr = 0, nrest, i, j
    cdef uint64_t rem, bit, cand, key
    cdef bint covered
    for i in range(nf):
        if fac[i] != tau:
            out[nr] = fac[i]
            nr += 1
    nrest = nr
    rem = sigma
    while rem:
        bit = rem & (0 - rem)
        rem ^= bit
        cand = tau ^ bit
        covered = False
        for i in range(nrest):
            if (cand & ~out[i]) == 0:
                covered = True
                break
        if not covered:
            if nr >= MAX_FACETS:
                raise KernelCapacity("facet count exceeds kernel capacity")
            out[nr] = cand
            nr += 1
    for i in range(1, nr):
        key = out[i]
        j = i - 1
        while j >= 0 and out[j] > key:
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = key
    return nr


cdef int _greedy_walk(bytes start, int mode, uint64_t seed, uint64_t restart,
                      long long budget, dict table, bint memoize,
                      long long* nodes, int* denied) except -2:
    cdef uint64_t fac[MAX_FACETS]
    cdef uint64_t child[MAX_FACETS]
    cdef uint64_t rng = (seed ^ (restart * MIX)) * MUL + INC
    cdef bytes state = start
    cdef int nf, np, nc, idx
    cdef uint64_t s, t
    cdef list path = []
    cdef tuple hit
    while True:
        nf = _load(state, fac)
        if _is_point_c(fac, nf):
            for st, ss, tt in path:
                table[(mode, st)] = (1, ss, tt)
            return 1
        key = (mode, state)
        if memoize:
            hit = table.get(key)
            if hit is not None:
                if hit[0] == 1:
                    for st, ss, tt in path:
                        table[(mode, st)] = (1, ss, tt)
                    return 1
                return 0
        if nodes[0] >= budget:
            denied[0] = 1
            return 0
        nodes[0] += 1
        np = _scan_pairs(fac, nf, mode)
        if np == 0:
            table[key] = (0, 0, 0)
            return 0
        rng = rng * MUL + INC
        idx = <int>((rng >> 33) % <uint64_t>np)
        s = g_ps[idx]
        t = g_pt[idx]
        path.append((state, s, t))
        nc = _apply_c(fac, nf, s, t, child)
        state = _store(child, nc)


cdef int _dfs(bytes state, int mode, long long budget, dict table, bint memoize,
              long long* nodes, int* denied) except -2:
    cdef uint64_t fac[MAX_FACETS]
    cdef uint64_t child[MAX_FACETS]
    cdef int nf = _load(state, fac)
    cdef int np, nc, i, r
    cdef bint saw_unknown = False
    cdef tuple hit
    cdef list pairs
    if _is_point_c(fac, nf):
        return 1
    key = (mode, state)
    if memoize:
        hit = table.get(key)
        if hit is not None:
            return hit[0]
    if nodes[0] >= budget:
        denied[0] = 1
        return -1
    nodes[0] += 1
    np = _scan_pairs(fac, nf, mode)
    if np == 0:
        table[key] = (0, 0, 0)
        return 0
    pairs = [(g_ps[i], g_pt[i]) for i in range(np)]
    for i in range(np):
        nc = _apply_c(fac, nf, <uint64_t>pairs[i][0], <uint64_t>pairs[i][1], child)
        r = _dfs(_store(child, nc), mode, budget, table, memoize, nodes, denied)
        if r == 1:
            table[key] = (1, pairs[i][0], pairs[i][1])
            return 1
        if r == -1:
            saw_unknown = True
    if saw_unknown:
        return -1
    table[key] = (0, 0, 0)
    return 0


def is_point(state):
    state = tuple(state)
    return len(state) == 1 and CCPOPCOUNT(<uint64_t>state[0]) == 1


def free_pairs(state, mode):
    """All legal (sigma, tau) steps, sorted by (|sigma|, sigma)."""
    cdef uint64_t fac[MAX_FACETS]
    cdef int nf, np, i
    cdef tuple st = tuple(sorted(state))
    cdef bytes packed = _pack(st)
    nf = _load(packed, fac)
    np = _scan_pairs(fac, nf, <int>mode)
    return [(int(g_ps[i]), int(g_pt[i])) for i in range(np)]


def apply_step(state, sigma, tau):
    cdef uint64_t fac[MAX_FACETS]
    cdef uint64_t out[MAX_FACETS]
    cdef tuple st = tuple(sorted(state))
    cdef bytes packed = _pack(st)
    cdef int nf = _load(packed, fac)
    cdef int nr = _apply_c(fac, nf, <uint64_t>sigma, <uint64_t>tau, out)
    return tuple(int(out[i]) for i in range(nr))


def search(facets, mode, budget, seed, restarts, table, memoize):
    """Full collapsibility decision mirroring the pure kernel's contract."""
    cdef tuple state_t = tuple(sorted(facets))
    cdef bytes state = _pack(state_t)
    cdef uint64_t useed = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef long long nodes = 0
    cdef long long cbudget = <long long>budget
    cdef int denied = 0
    cdef int cmode = <int>mode
    cdef int status = -2
    cdef int r
    cdef uint64_t fac[MAX_FACETS]
    cdef uint64_t child[MAX_FACETS]
    cdef int nf = _load(state, fac)
    cdef int nc
    if _is_point_c(fac, nf):
        return 1, [], 0
    for r in range(<int>restarts):
        if _greedy_walk(state, cmode, useed, <uint64_t>r, cbudget, table,
                        <bint>memoize, &nodes, &denied) == 1:
            status = 1
            break
        if denied:
            break
    if status == -2:
        status = _dfs(state, cmode, cbudget, table, <bint>memoize, &nodes, &denied)
    if status == 1:
        steps = []
        cur = state
        while True:
            nf = _load(cur, fac)
            if _is_point_c(fac, nf):
                break
            entry = table[(cmode, cur)]
            steps.append((int(entry[1]), int(entry[2])))
            nc = _apply_c(fac, nf, <uint64_t>entry[1], <uint64_t>entry[2], child)
            cur = _store(child, nc)
        return 1, steps, int(nodes)
    return status, None, int(nodes)


def greedy(facets, mode, seed, restarts):
    """Seeded random walks only; status 1 with steps, or -1 after all restarts."""
    cdef tuple state_t = tuple(sorted(facets))
    cdef bytes start = _pack(state_t)
    cdef uint64_t useed = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t rng
    cdef long long nodes = 0
    cdef int cmode = <int>mode
    cdef uint64_t fac[MAX_FACETS]
    cdef uint64_t child[MAX_FACETS]
    cdef int nf, np, nc, r, idx
    cdef uint64_t s, t
    nf = _load(start, fac)
    if _is_point_c(fac, nf):
        return 1, [], 0
    for r in range(<int>restarts):
        rng = (useed ^ (<uint64_t>r * MIX)) * MUL + INC
        cur = start
        path = []
        while True:
            nf = _load(cur, fac)
            if _is_point_c(fac, nf):
                return 1, path, int(nodes)
            np = _scan_pairs(fac, nf, cmode)
            nodes += 1
            if np == 0:
                break
            rng = rng * MUL + INC
            idx = <int>((rng >> 33) % <uint64_t>np)
            s = g_ps[idx]
            t = g_pt[idx]
            path.append((int(s), int(t)))
            nc = _apply_c(fac, nf, s, t, child)
            cur = _store(child, nc)
    return -1, None, int(nodes)
