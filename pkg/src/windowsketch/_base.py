from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .validation import check_stream


class WindowSketchMixin(TransformerMixin, BaseEstimator):
    """Estimator face shared by the sliding-window sketches.

    Subclasses provide ``add``, ``query_scaled``, ``query_scale``, ``reset``
    and ``value_range``. Hyperparameters are the constructor arguments, so
    ``get_params``/``set_params``/``clone`` work as for any estimator; state
    is rebuilt whenever a parameter changes.
    """

    def set_params(self, **params):
        super().set_params(**params)
        self.reset()
        return self

    def query(self, clamp: bool = False) -> Fraction:
        """Current estimate of the window aggregate, as an exact rational.

        With ``clamp`` the estimate is clipped to ``[0, R*W]``, which never
        increases the error because the true value lies in that interval.
        """
        est = Fraction(self.query_scaled(), self.query_scale)
        if clamp:
            est = min(max(est, Fraction(0)), Fraction(self.value_range * self.params.W))
        return est

    def partial_fit(self, X, y=None):
        add = self.add_unchecked
        for x in check_stream(X, self.value_range):
            add(x)
        return self

    def fit(self, X, y=None):
        self.reset()
        return self.partial_fit(X)

    def transform(self, X):
        """Stream ``X`` into the sketch and return the estimate after each element.

        Estimates are returned as floats; use :meth:`query` for the exact value.
        """
        add = self.add_unchecked
        scaled = self.query_scaled
        values = check_stream(X, self.value_range)
        out = np.empty(len(values), dtype=float)
        for j, x in enumerate(values):
            add(x)
            out[j] = scaled()
        return out / self.query_scale

    def fit_transform(self, X, y=None, **fit_params):
        self.reset()
        return self.transform(X)

    def __sklearn_is_fitted__(self):
        # A fresh sketch already answers queries (zero-padded warm-up).
        return True
