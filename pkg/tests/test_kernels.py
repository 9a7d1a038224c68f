from __future__ import annotations

import importlib
import os
import random
import subprocess
import sys

import pytest

from artinkit import kernels
from artinkit.kernels import _pure

try:
    from artinkit.kernels import _speedups
except ImportError:  # pragma: no cover - extension not built
    _speedups = None

needs_ext = pytest.mark.skipif(_speedups is None, reason="compiled kernels not built")


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")
    if _speedups is not None and os.environ.get("ARTINKIT_PURE_PYTHON") != "1":
        assert kernels.BACKEND == "cython"


def test_env_var_forces_fallback():
    out = subprocess.run(
        [sys.executable, "-c", "import artinkit.kernels as k; print(k.BACKEND)"],
        env={**os.environ, "ARTINKIT_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@needs_ext
def test_free_reduce_backends_agree():
    rng = random.Random(1)
    for _ in range(2000):
        w = tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(rng.randrange(40)))
        assert _pure.free_reduce(w) == _speedups.free_reduce(w)


@needs_ext
def test_raag_backends_agree():
    rng = random.Random(2)
    for _ in range(2000):
        n = rng.randrange(1, 7)
        masks = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        w = tuple(rng.choice([1, -1]) * rng.randrange(1, n + 1) for _ in range(rng.randrange(30)))
        assert _pure.raag_normal_form(w, tuple(masks)) == _speedups.raag_normal_form(w, tuple(masks))


@needs_ext
def test_garside_backends_agree():
    rng = random.Random(3)
    for _ in range(2000):
        n = rng.randrange(2, 7)
        w = tuple(rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(rng.randrange(25)))
        a = _pure.garside_extend(n, 0, (), w)
        assert a == _speedups.garside_extend(n, 0, (), w)
        # extending a normal form equals normalizing the concatenation
        v = tuple(rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(5))
        assert _pure.garside_extend(n, a[0], a[1], v) == _speedups.garside_extend(n, a[0], a[1], v)


def test_reload_keeps_api():
    mod = importlib.reload(kernels)
    for name in ("free_reduce", "raag_normal_form", "garside_extend"):
        assert callable(getattr(mod, name))
