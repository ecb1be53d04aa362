"""Input validation helpers shared by the library, the CLI and the tools."""
import logging
from typing import Iterable, List, Sequence

from rapidfuzz import fuzz

from YM_Beta.constants import FRAMINGS

logger = logging.getLogger("YM_Beta")

MAX_MULTIPLICITY = 1_000
MAX_COUPLING_SAMPLES = 10_000


def _validate_int(value: int, name: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{name} must be an integer.")


def _validate_index(value: int, name: str, upper: int, lower: int = 1) -> None:
    _validate_int(value, name)
    if value < lower or value > upper:
        raise ValueError(f"{name} must be between {lower} and {upper}, got {value}.")


def _validate_positive_int(value: int, name: str) -> None:
    _validate_int(value, name)
    if value <= 0:
        raise ValueError(f"{name} must be a positive integer, got {value}.")


def _validate_range(value: float, name: str, min_val: float, max_val: float) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValueError(f"{name} must be a number.")
    if value < min_val or value > max_val:
        raise ValueError(f"{name} must be between {min_val} and {max_val}, got {value}.")


def _validate_positive(value: float, name: str) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValueError(f"{name} must be a number.")
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value}.")


def _validate_multiplicity(value: int, name: str = "multiplicity") -> None:
    _validate_positive_int(value, name)
    if value > MAX_MULTIPLICITY:
        raise ValueError(f"{name} must be at most {MAX_MULTIPLICITY}, got {value}.")


def _validate_eps_grid(eps_grid: Sequence[float], upper: float) -> None:
    if len(eps_grid) < 3:
        raise ValueError(f"eps_grid needs at least 3 points, got {len(eps_grid)}.")
    for value in eps_grid:
        _validate_positive(value, "eps_grid entry")
        if value >= upper:
            raise ValueError(f"eps_grid entries must be below L={upper}, got {value}.")
    if any(b >= a for a, b in zip(eps_grid, eps_grid[1:])):
        raise ValueError("eps_grid must be strictly decreasing.")


def _validate_framing(framing: str) -> None:
    if framing not in FRAMINGS:
        raise ValueError(f"framing must be one of {', '.join(FRAMINGS)}, got '{framing}'.")


def find_similar_names(target: str, choices: Iterable[str], threshold: int = 50, limit: int = 3) -> List[str]:
    """Close matches for an unrecognised name, best first."""
    scored = []
    for choice in choices:
        similarity = fuzz.token_sort_ratio(target.lower(), choice.lower())
        if similarity >= threshold:
            scored.append((-similarity, choice))
    return [choice for _, choice in sorted(scored)[:limit]]
