# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure and enumeration kernels (literal bases of up to 64 literals).

Same encoding and contracts as ``_pykernel``.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free, realloc

cdef enum:
    CONSISTENT = 0
    INCONSISTENT = 1
    VIOLATED = 2


cdef struct RuleSet:
    int n
    int *head
    uint64_t *pos
    uint64_t *neg


cdef int _load(list rules, RuleSet *rs) except -1:
    cdef int i, n = len(rules)
    rs.n = n
    rs.head = <int *> malloc(max(n, 1) * sizeof(int))
    rs.pos = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    rs.neg = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    if rs.head == NULL or rs.pos == NULL or rs.neg == NULL:
        _release(rs)
        raise MemoryError()
    for i in range(n):
        h, p, q = rules[i]
        rs.head[i] = h
        rs.pos[i] = p
        rs.neg[i] = q
    return 0


cdef void _release(RuleSet *rs):
    free(rs.head)
    free(rs.pos)
    free(rs.neg)


cdef inline uint64_t _even(int n_atoms) nogil:
    cdef uint64_t m = 0
    cdef int i
    for i in range(n_atoms):
        m |= (<uint64_t> 1) << (2 * i)
    return m


cdef int _closure(RuleSet *rs, uint64_t even, uint64_t block, uint64_t erase,
                  uint64_t *out) nogil:
    cdef uint64_t s = 0, bit, p
    cdef int i, changed = 1
    cdef uint64_t keep = ~erase
    while changed:
        changed = 0
        for i in range(rs.n):
            if rs.head[i] < 0 or (rs.neg[i] & block) or (rs.neg[i] & keep):
                continue
            p = rs.pos[i]
            if (p & s) == p:
                bit = (<uint64_t> 1) << rs.head[i]
                if not (s & bit):
                    s |= bit
                    changed = 1
    out[0] = s
    if s & (s >> 1) & even:
        return INCONSISTENT
    for i in range(rs.n):
        if rs.head[i] >= 0 or (rs.neg[i] & block) or (rs.neg[i] & keep):
            continue
        if (rs.pos[i] & s) == rs.pos[i]:
            return VIOLATED
    return CONSISTENT


def closure(list rules, int n_atoms, block, erase):
    cdef RuleSet rs
    cdef uint64_t s = 0
    cdef uint64_t width = _width(n_atoms)
    cdef uint64_t b = <uint64_t> (block & width), e = <uint64_t> (erase & width)
    _load(rules, &rs)
    try:
        status = _closure(&rs, _even(n_atoms), b, e, &s)
    finally:
        _release(&rs)
    return status, s


cdef uint64_t _width(int n_atoms):
    if n_atoms >= 32:
        return <uint64_t> 0xFFFFFFFFFFFFFFFF
    return ((<uint64_t> 1) << (2 * n_atoms)) - 1


def answer_sets(list rules, int n_atoms, naf, int limit=0):
    cdef RuleSet rs
    cdef uint64_t full = _width(n_atoms), even = _even(n_atoms)
    cdef uint64_t nf = <uint64_t> naf, g = 0, s = 0
    cdef int status
    out = []
    _load(rules, &rs)
    try:
        status = _closure(&rs, even, full, full, &s)
        if status == INCONSISTENT:
            return True, []
        if status == VIOLATED:
            return False, []
        while True:
            status = _closure(&rs, even, g, full, &s)
            if status == CONSISTENT and (s & nf) == g:
                out.append(s)
                if limit and len(out) >= limit:
                    break
            if g == nf:
                break
            g = (g - nf) & nf
    finally:
        _release(&rs)
    return False, out


def minimal_erasures(list rules, int n_atoms, plus, base):
    cdef RuleSet rs
    cdef uint64_t even = _even(n_atoms), p = <uint64_t> plus, bs = <uint64_t> base
    cdef uint64_t s = 0, c, m, t, u, limit
    cdef int positions[64]
    cdef int nb = 0, k, j, i, ok
    cdef uint64_t *acc
    cdef int nacc = 0, cap = 64
    for i in range(64):
        if (bs >> i) & 1:
            positions[nb] = i
            nb += 1
    if nb >= 63:
        raise OverflowError("relevance base too large for the compiled kernel")
    acc = <uint64_t *> malloc(cap * sizeof(uint64_t))
    if acc == NULL:
        raise MemoryError()
    _load(rules, &rs)
    try:
        limit = (<uint64_t> 1) << nb
        for k in range(nb + 1):
            # Gosper's hack over compressed positions: all k-subsets of nb bits
            c = ((<uint64_t> 1) << k) - 1
            while c < limit:
                m = 0
                for j in range(nb):
                    if (c >> j) & 1:
                        m |= (<uint64_t> 1) << positions[j]
                ok = 1
                for i in range(nacc):
                    if (acc[i] & m) == acc[i]:
                        ok = 0
                        break
                if ok and _closure(&rs, even, p, m, &s) == CONSISTENT and s == p:
                    if nacc == cap:
                        cap *= 2
                        acc = <uint64_t *> _grow(acc, cap)
                    acc[nacc] = m
                    nacc += 1
                if c == 0:
                    break
                t = c & (~c + 1)
                u = c + t
                c = (((u ^ c) >> 2) // t) | u
        return [acc[i] for i in range(nacc)]
    finally:
        _release(&rs)
        free(acc)


cdef void *_grow(uint64_t *acc, int cap) except NULL:
    cdef void *q = realloc(acc, cap * sizeof(uint64_t))
    if q == NULL:
        raise MemoryError()
    return q
