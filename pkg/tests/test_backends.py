"""The compiled kernel and the pure-Python fallback must be twins."""

from math import comb

import pytest

from hooktrees.treeoracle import _kernel_py, backend_name

try:
    from hooktrees.treeoracle import _kernel
except ImportError:
    _kernel = None

needs_compiled = pytest.mark.skipif(
    _kernel is None, reason="compiled kernel not built"
)


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def test_backend_reports_a_known_name():
    assert backend_name() in ("compiled", "python")


def test_pure_counts_sum_to_catalan():
    for n in range(1, 11):
        assert sum(_kernel_py.signature_counts(n).values()) == catalan(n - 1)


def test_pure_signature_shapes():
    for n in (1, 2, 5):
        for key in _kernel_py.signature_counts(n):
            assert len(key) == 2 * n
            assert sum(key[:n]) == n  # every vertex has one out-degree
            assert sum(key[n:]) == n  # and one hook length


def test_pure_rejects_bad_sizes():
    with pytest.raises(ValueError):
        _kernel_py.signature_counts(0)
    with pytest.raises(ValueError):
        _kernel_py.signature_counts(_kernel_py.MAX_SIZE + 1)


@needs_compiled
def test_compiled_matches_pure_exactly():
    for n in range(1, 12):
        assert _kernel.signature_counts(n) == _kernel_py.signature_counts(n)


@needs_compiled
def test_compiled_rejects_bad_sizes():
    with pytest.raises(ValueError):
        _kernel.signature_counts(0)
    with pytest.raises(ValueError):
        _kernel.signature_counts(_kernel.MAX_SIZE + 1)


def test_hook_histogram_of_path_and_star():
    # size 3: the path has hooks {3,2,1}, the star {3,1,1}
    counts = _kernel_py.signature_counts(3)
    path_key = bytes([1, 2, 0]) + bytes([1, 1, 1])
    star_key = bytes([2, 0, 1]) + bytes([2, 0, 1])
    assert counts == {path_key: 1, star_key: 1}
