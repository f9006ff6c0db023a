"""Finite-type invariants and normal forms for welded string links."""

from .alexander import AlexanderError, AlphaSeries, alexander, alpha_series
from .arrows import WTree, WTreePresentation, generator, parse_wtree, surgery
from .diagram import (ClosureList, DiagramError, GaussDiagram, closure, delete_component,
                      emit_gauss, new_trivial, parse_gauss, reverse_component, stack,
                      virtualize)
from .estimators import InvariantVectorizer
from .finite_type import FtReport, ft_test
from .formats import InputError, load_diagram
from .invariants import (CLOSE, LINK, MU, Descriptor, InvariantVector, closure_invariant,
                         evaluate, invariant_vector, linking, parse_descriptor)
from .milnor import milnor_mu
from .normal_form import NormalFormWord, normal_form, parse_word, realize, verify_roundtrip

__version__ = "0.1.0"

__all__ = [
    "AlexanderError", "AlphaSeries", "alexander", "alpha_series",
    "WTree", "WTreePresentation", "generator", "parse_wtree", "surgery",
    "ClosureList", "DiagramError", "GaussDiagram", "closure", "delete_component",
    "emit_gauss", "new_trivial", "parse_gauss", "reverse_component", "stack", "virtualize",
    "InvariantVectorizer", "FtReport", "ft_test", "InputError", "load_diagram",
    "CLOSE", "LINK", "MU", "Descriptor", "InvariantVector", "closure_invariant",
    "evaluate", "invariant_vector", "linking", "parse_descriptor", "milnor_mu",
    "NormalFormWord", "normal_form", "parse_word", "realize", "verify_roundtrip",
]
