"""Process-wide configuration and shared caches for YM_Beta.

Configuration is read once from the environment (a ``.env`` file in the
working directory is honoured through python-dotenv).  Modules access it as
``state.WORKERS`` etc. after ``import YM_Beta.state as state``.
"""

import os
import threading
from typing import Any, Dict, Tuple

from dotenv import load_dotenv

load_dotenv()

# ---------------------------------------------------------------------------
# Config (from environment or defaults)
# ---------------------------------------------------------------------------
WORKERS: int = int(os.environ.get("YM_BETA_WORKERS", "1"))
LOG_LEVEL: str = os.environ.get("YM_BETA_LOG_LEVEL", "INFO").upper()
DEFAULT_FRAMING: str = os.environ.get("YM_BETA_FRAMING", "action")
TOOL_TIMEOUT: float = float(os.environ.get("YM_BETA_TOOL_TIMEOUT", "300"))


def _eps_grid_from_env() -> Tuple[float, ...]:
    raw = os.environ.get("YM_BETA_EPS_GRID", "")
    if not raw.strip():
        return ()
    return tuple(float(part) for part in raw.split(",") if part.strip())


EPS_GRID: Tuple[float, ...] = _eps_grid_from_env()

# ---------------------------------------------------------------------------
# Built-in algebra cache (generated on first use, then reused)
# ---------------------------------------------------------------------------
builtin_cache: Dict[str, Any] = {}
cache_lock: threading.Lock = threading.Lock()
