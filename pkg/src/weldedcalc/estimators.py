"""scikit-learn transformer turning diagrams into invariant feature rows."""

from __future__ import annotations

from typing import List

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .diagram import GaussDiagram
from .formats import load_diagram
from .invariants import derived_family, evaluate, family


class InvariantVectorizer(TransformerMixin, BaseEstimator):
    """Map welded string links to their classifying invariant vectors.

    Inputs are :class:`GaussDiagram` objects or text in ``input_format``.
    ``fit`` only fixes the strand count and the feature list; there is
    nothing to learn.

    Parameters
    ----------
    degree : int
        1, 2 or 3 (3 needs two strands).
    derived : bool
        Append the derived combinations (phi, alpha, beta, gamma, ...).
    variant : str
        Milnor pairing for the degree-3 gamma combinations.
    input_format : str
        ``gauss``, ``wtree`` or ``word`` for string inputs.
    """

    def __init__(self, degree: int = 2, derived: bool = False,
                 variant: str = "notation", input_format: str = "gauss"):
        self.degree = degree
        self.derived = derived
        self.variant = variant
        self.input_format = input_format

    def _diagrams(self, X) -> List[GaussDiagram]:
        return [x if isinstance(x, GaussDiagram) else load_diagram(x, self.input_format)
                for x in X]

    def fit(self, X, y=None):
        Ds = self._diagrams(X)
        if not Ds:
            raise ValueError("fit needs at least one diagram")
        ns = {D.n for D in Ds}
        if len(ns) != 1:
            raise ValueError(f"all diagrams must have the same strand count, got {sorted(ns)}")
        self.n_strands_ = ns.pop()
        descs = family(self.n_strands_, self.degree)
        if self.derived:
            descs += derived_family(self.n_strands_, self.degree)
        self.descriptors_ = descs
        self.n_features_in_ = 1
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "descriptors_")
        Ds = self._diagrams(X)
        for D in Ds:
            if D.n != self.n_strands_:
                raise ValueError(f"fitted on {self.n_strands_} strands, got {D.n}")
        rows = [[evaluate(D, d, self.variant) for d in self.descriptors_] for D in Ds]
        return np.asarray(rows, dtype=np.int64).reshape(len(Ds), len(self.descriptors_))

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "descriptors_")
        return np.asarray([d.key for d in self.descriptors_], dtype=object)
