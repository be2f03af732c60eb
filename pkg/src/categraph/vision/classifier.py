"""scikit-learn style front end for the RPROP-trained perceptron."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.exceptions import NotFittedError

from .mlp import Mlp


class RpropMlpClassifier(BaseEstimator, ClassifierMixin):
    """One-hidden-layer classifier whose probabilities are the network
    outputs rescaled to percentages."""

    def __init__(self, hidden_units: int = 10, epochs: int = 500, seed: int = 0):
        self.hidden_units = hidden_units
        self.epochs = epochs
        self.seed = seed

    def fit(self, X, y):
        X = np.asarray(X, dtype=float)
        y = np.asarray(y)
        if X.ndim != 2:
            raise ValueError("X must be a 2d array")
        if X.shape[0] != y.shape[0]:
            raise ValueError("X and y disagree in length")
        self.classes_, encoded = np.unique(y, return_inverse=True)
        targets = np.zeros((X.shape[0], len(self.classes_)))
        targets[np.arange(X.shape[0]), encoded] = 1.0
        self.mlp_ = Mlp((X.shape[1], self.hidden_units, len(self.classes_)), seed=self.seed)
        self.loss_trace_ = self.mlp_.train_rprop(X, targets, self.epochs)
        return self

    def _check_fitted(self):
        if not hasattr(self, "mlp_"):
            raise NotFittedError("call fit before predicting")

    def predict_proba(self, X):
        self._check_fitted()
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return np.array([self.mlp_.classify(x) for x in X])

    def predict(self, X):
        self._check_fitted()
        return self.classes_[np.argmax(self.predict_proba(X), axis=1)]
