import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfec import _kernel_py, kernel

needs_cython = pytest.mark.skipif(kernel.BACKEND != "cython", reason="compiled kernel not built")


def random_instance(seed: int, nmax: int = 14, kmax: int = 6):
    rng = random.Random(seed)
    n = rng.randint(1, nmax)
    k = rng.randint(1, kmax)
    p = rng.uniform(0.1, 0.9)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    allowed = [rng.randrange(1, 1 << k) for _ in range(n)]
    return adj, allowed


def proper(adj, allowed, colors):
    for v, c in enumerate(colors):
        if not allowed[v] >> c & 1:
            return False
        if any(adj[v] >> u & 1 and colors[u] == c for u in range(len(adj))):
            return False
    return True


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_python_kernel_sound(seed):
    adj, allowed = random_instance(seed)
    status, colors, _ = _kernel_py.search(adj, allowed)
    if status == kernel.FOUND:
        assert proper(adj, allowed, colors)


@needs_cython
@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_backend_parity(seed):
    adj, allowed = random_instance(seed)
    a = kernel.search(adj, allowed, backend="python")
    b = kernel.search(adj, allowed, backend="cython")
    # same branching rule, so identical outcome, coloring and node count
    assert a == b


@needs_cython
def test_budget_parity():
    adj, allowed = random_instance(5, nmax=40, kmax=4)
    adj = [((1 << len(adj)) - 1) & ~(1 << i) for i in range(len(adj))]  # complete graph
    allowed = [0b1111] * len(adj)
    for backend in ("python", "cython"):
        status, _, nodes = kernel.search(adj, allowed, budget=3, backend=backend)
        assert status == kernel.BUDGET and nodes <= 4


def test_wide_instance_falls_back():
    n = 70
    adj = [(1 << ((i + 1) % n)) | (1 << ((i - 1) % n)) for i in range(n)]
    status, colors, _ = kernel.search(adj, [0b11] * n)
    assert status == kernel.FOUND and proper(adj, [0b11] * n, colors)


def test_forced_pure_python():
    env = dict(os.environ, LFEC_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from lfec import kernel; print(kernel.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
