"""Pure-Python enumeration kernel (fallback for the compiled one).

Enumerates every ordered tree of size n exactly once as its preorder
out-degree sequence (a lattice path that keeps at least one open slot
until the last vertex), and tallies trees by their degree/hook-length
statistics.  The compiled kernel in ``_kernel.pyx`` implements the same
walk; both must produce identical dictionaries.
"""

from __future__ import annotations

MAX_SIZE = 64

BACKEND_NAME = "python"


def signature_counts(n: int) -> dict[bytes, int]:
    """Tally trees of size n by signature.

    The key packs two histograms as ``2n`` bytes: counts of out-degrees
    ``0..n-1`` followed by counts of hook lengths ``1..n``.  The value is
    the number of ordered trees showing exactly those statistics; values
    sum to the Catalan number C(n-1).
    """
    if not 1 <= n <= MAX_SIZE:
        raise ValueError(f"size must be in 1..{MAX_SIZE}, got {n}")
    counts: dict[bytes, int] = {}
    seq = [0] * n
    deg = bytearray(n)
    hook = bytearray(n)
    stack = [0] * n

    def emit() -> None:
        # subtree sizes from the degree sequence, right to left
        for i in range(n):
            hook[i] = 0
        top = 0
        for i in range(n - 1, -1, -1):
            size = 1
            for _ in range(seq[i]):
                top -= 1
                size += stack[top]
            stack[top] = size
            top += 1
            hook[size - 1] += 1
        key = bytes(deg) + bytes(hook)
        counts[key] = counts.get(key, 0) + 1

    def place(pos: int, open_slots: int) -> None:
        if pos == n:
            emit()
            return
        left = n - pos - 1
        if left == 0:
            # last vertex must be a leaf closing the final slot
            if open_slots == 1:
                seq[pos] = 0
                deg[0] += 1
                place(pos + 1, 0)
                deg[0] -= 1
            return
        # after this vertex: open_slots - 1 + d slots, each needing a vertex
        low = 0 if open_slots > 1 else 1
        high = left + 1 - open_slots
        for d in range(low, high + 1):
            seq[pos] = d
            deg[d] += 1
            place(pos + 1, open_slots - 1 + d)
            deg[d] -= 1

    place(0, 1)
    return counts
