import threading

import YM_Beta.state as state
from YM_Beta.lie import builtin_algebra


class TestStateConfig:
    def test_defaults_types(self):
        assert isinstance(state.WORKERS, int)
        assert isinstance(state.TOOL_TIMEOUT, float)
        assert state.DEFAULT_FRAMING in ("action", "ff")

    def test_eps_grid_from_env(self, monkeypatch):
        monkeypatch.setenv("YM_BETA_EPS_GRID", "1e-3, 1e-4,1e-5")
        assert state._eps_grid_from_env() == (1e-3, 1e-4, 1e-5)

    def test_eps_grid_empty(self, monkeypatch):
        monkeypatch.setenv("YM_BETA_EPS_GRID", "  ")
        assert state._eps_grid_from_env() == ()


class TestStateThreadSafety:
    def test_cache_lock_exists(self):
        assert hasattr(state, 'cache_lock')
        assert isinstance(state.cache_lock, type(threading.Lock()))

    def test_concurrent_builtin_access(self):
        """Threads asking for the same algebra all get one cached object."""
        results = []
        errors = []

        def worker():
            try:
                results.append(builtin_algebra("su2"))
            except Exception as e:
                errors.append(e)

        threads = [threading.Thread(target=worker) for _ in range(5)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        assert len(errors) == 0
        assert all(r is results[0] for r in results)
        assert state.builtin_cache["su2"] is results[0]
