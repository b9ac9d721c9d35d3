"""Small diagrams used in examples and tests."""
from importlib import resources

from ..diagram import PDiagram, parse_diagram

NAMES = ("fig1", "fig3l", "fig3r", "fig2ul", "fig2ur", "fig2ll", "fig2lr")


def path(name: str):
    return resources.files(__name__) / f"{name}.cox"


def load(name: str) -> PDiagram:
    if name not in NAMES:
        raise KeyError(f"no fixture named {name!r}")
    return parse_diagram(path(name).read_bytes())
