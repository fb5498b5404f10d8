# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernel.

Same contract as ``_kernel_py.signature_counts``: walk every preorder
out-degree sequence of an ordered tree with n vertices (each tree exactly
once) and tally degree/hook-length histograms.  The recursion and the
histograms live entirely in C integers; Python objects only appear once
per finished tree, when the packed signature is counted in the dict.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize

MAX_SIZE = 64

BACKEND_NAME = "compiled"

cdef int _MAX = 64


cdef void _emit(int n, int* seq, unsigned char* deg, dict counts):
    cdef int stack[64]
    cdef int hook[64]
    cdef unsigned char buf[128]
    cdef int top = 0
    cdef int i, j, size
    for i in range(n):
        hook[i] = 0
    for i in range(n - 1, -1, -1):
        size = 1
        for j in range(seq[i]):
            top -= 1
            size += stack[top]
        stack[top] = size
        top += 1
        hook[size - 1] += 1
    for i in range(n):
        buf[i] = deg[i]
        buf[n + i] = <unsigned char> hook[i]
    key = PyBytes_FromStringAndSize(<char*> buf, 2 * n)
    prev = counts.get(key)
    if prev is None:
        counts[key] = 1
    else:
        counts[key] = prev + 1


cdef void _place(int pos, int open_slots, int n, int* seq,
                 unsigned char* deg, dict counts):
    cdef int d, low, high, left
    if pos == n:
        _emit(n, seq, deg, counts)
        return
    left = n - pos - 1
    if left == 0:
        # last vertex must be a leaf closing the final slot
        if open_slots == 1:
            seq[pos] = 0
            deg[0] += 1
            _place(pos + 1, 0, n, seq, deg, counts)
            deg[0] -= 1
        return
    low = 0 if open_slots > 1 else 1
    high = left + 1 - open_slots
    for d in range(low, high + 1):
        seq[pos] = d
        deg[d] += 1
        _place(pos + 1, open_slots - 1 + d, n, seq, deg, counts)
        deg[d] -= 1


def signature_counts(int n):
    """Tally trees of size n by the packed degree/hook histogram key."""
    if n < 1 or n > _MAX:
        raise ValueError(f"size must be in 1..{_MAX}, got {n}")
    cdef int seq[64]
    cdef unsigned char deg[64]
    cdef int i
    for i in range(n):
        seq[i] = 0
        deg[i] = 0
    counts = {}
    _place(0, 1, n, seq, deg, counts)
    return counts
