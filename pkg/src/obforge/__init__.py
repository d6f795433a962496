"""Open book decompositions from square bridge diagrams of Legendrian links."""

from .sbd import SquareBridgeDiagram, classical, components, emit, from_grid, parse

__version__ = "0.1.0"

__all__ = [
    "SquareBridgeDiagram",
    "classical",
    "components",
    "emit",
    "from_grid",
    "parse",
    "__version__",
    "fixture",
    "fixture_text",
]


def fixture_text(name: str) -> str:
    """Text of a bundled fixture: ``u1``, ``tref``, ``fig8``, ``corridor``, ``cshape``, ``split``."""
    from importlib.resources import files

    return (files(__package__) / "fixtures" / f"{name}.sbd").read_text(encoding="utf-8")


def fixture(name: str) -> SquareBridgeDiagram:
    return parse(fixture_text(name))
