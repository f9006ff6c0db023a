"""Read a diagram from any of the three text formats."""

from __future__ import annotations

from .arrows import WTreeError, parse_wtree, surgery
from .diagram import DiagramError, GaussDiagram, parse_gauss
from .normal_form import NormalFormError, parse_word, realize

FORMATS = ("gauss", "wtree", "word")


class InputError(ValueError):
    """Text that does not parse in the requested format."""


def load_diagram(text: str, fmt: str = "gauss", n: int | None = None) -> GaussDiagram:
    """Parse ``text`` as Gauss code, a w-tree presentation or a generator word.

    ``n`` sets the strand count of a word (default: largest index used).
    """
    try:
        if fmt == "gauss":
            return parse_gauss(text)
        if fmt == "wtree":
            return surgery(parse_wtree(text))
        if fmt == "word":
            return realize(parse_word(text, n))
    except (DiagramError, WTreeError, NormalFormError) as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
