import os
import subprocess
import sys

import numpy as np
import pytest

from bscoding import _kernels
from bscoding._kernels import pure
from bscoding.domain import get_preset
from bscoding.markov import MarkovCoding
from bscoding.words import _csr, letter_alphabet


def _arrays(preset):
    coding = MarkovCoding(get_preset(preset))
    indptr, indices = _csr(coding)
    alphabet = letter_alphabet(coding)
    codes = np.array(
        [alphabet.index(name) for name in coding.letters], dtype=np.uint8
    )
    return indptr, indices, codes


def _brute_count(succ, n):
    total = 0
    stack = [(j, 1) for j in range(len(succ))]
    while stack:
        j, depth = stack.pop()
        if depth == n:
            total += 1
            continue
        stack.extend((nx, depth + 1) for nx in succ[j])
    return total


def test_path_counts_match_brute_force():
    coding = MarkovCoding(get_preset("sl2z"))
    indptr, indices = _csr(coding)
    # row k holds the k-edge path counts, so length n reads row n - 1
    table = pure.path_counts(indptr, indices, 6)
    for n in range(1, 7):
        assert sum(table[n - 1]) == _brute_count(coding.successors, n)


def test_path_counts_are_python_ints():
    indptr, indices, _ = _arrays("octagon")
    table = pure.path_counts(indptr, indices, 8)
    # totals overflow int32 well before n = 8; exact bigints required
    assert isinstance(table[7][0], int)
    assert sum(table[7]) == 36855096


def test_enumeration_is_sorted_free_monoid_for_full_graph():
    # a complete 2-state graph enumerates all 2^n words in packed order
    indptr = np.array([0, 2, 4], dtype=np.int64)
    indices = np.array([0, 1, 0, 1], dtype=np.int32)
    codes = np.array([0, 1], dtype=np.uint8)
    out = pure.enumerate_packed(indptr, indices, codes, 3)
    assert len(out) == 8
    assert list(out) == sorted(out)
    # first word is 000 packed as bytes (1,1,1)
    assert out[0] == (1 << 16) | (1 << 8) | 1


@pytest.mark.parametrize("preset", ["sl2z", "triangle", "octagon"])
def test_pure_and_compiled_agree(preset):
    if not _kernels.HAVE_SPEEDUPS:
        pytest.skip("compiled kernel not built")
    from bscoding._kernels import _speedups

    indptr, indices, codes = _arrays(preset)
    for n in range(1, 7):
        a = pure.enumerate_packed(indptr, indices, codes, n)
        b = _speedups.enumerate_packed(indptr, indices, codes, n)
        assert np.array_equal(a, b)
        ca = pure.path_counts(indptr, indices, n)
        cb = _speedups.path_counts(indptr, indices, n)
        assert ca == cb


def test_radius_bounds_rejected():
    indptr, indices, codes = _arrays("sl2z")
    with pytest.raises(ValueError):
        pure.enumerate_packed(indptr, indices, codes, 0)
    with pytest.raises(ValueError):
        pure.enumerate_packed(indptr, indices, codes, 9)


def test_bs_pure_env_forces_fallback():
    code = (
        "import bscoding._kernels as k;"
        "print(k.HAVE_SPEEDUPS, k.enumerate_packed is k.pure.enumerate_packed)"
    )
    env = dict(os.environ, BS_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.split() == ["False", "True"]


def test_dispatch_exports_one_of_the_two():
    if _kernels.HAVE_SPEEDUPS:
        from bscoding._kernels import _speedups

        assert _kernels.enumerate_packed is _speedups.enumerate_packed
    else:
        assert _kernels.enumerate_packed is pure.enumerate_packed
