"""Shipped Hamiltonian fixtures (`.ham` files) and access helpers."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def fixture_path(name: str) -> Path:
    """Filesystem path of a shipped fixture, e.g. ``fixture_path("h2_0.74.ham")``."""
    if not name.endswith(".ham"):
        name += ".ham"
    path = Path(str(resources.files(__package__) / name))
    if not path.exists():
        raise FileNotFoundError(f"no shipped fixture named {name!r}")
    return path


def list_fixtures() -> list[str]:
    """Sorted names of every shipped `.ham` file."""
    root = Path(str(resources.files(__package__)))
    return sorted(p.name for p in root.glob("*.ham"))
