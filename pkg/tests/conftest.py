import os

import pytest

from becck import preset_spec, run_sweep


def _worker_count() -> int:
    return max(1, min(8, os.cpu_count() or 1))


@pytest.fixture(scope="session")
def preset_rows():
    """Memoized preset sweeps; several suites share the same row sets."""
    cache: dict = {}

    def get(name: str):
        if name not in cache:
            cache[name] = run_sweep(preset_spec(name),
                                    workers=_worker_count())
        return cache[name]

    return get


@pytest.fixture(scope="session")
def sweep_workers():
    return _worker_count()
