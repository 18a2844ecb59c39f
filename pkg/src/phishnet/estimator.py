"""scikit-learn style wrappers around the extraction and network core."""

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .classify import BandThresholds, band_score
from .config import ExtractionConfig
from .errors import ShapeError
from .features import extract_all
from .indicators import INDICATOR_COUNT, INDICATOR_NAMES
from .network import TrainConfig, TrainingExample, forward, init_network, train


class PhishFeatureExtractor(BaseEstimator, TransformerMixin):
    """Turns an iterable of WebsiteRecord into an (n, 27) float matrix.

    Stateless; fit only records the input size so the transformer plays
    nicely inside a Pipeline.
    """

    def __init__(self, config: ExtractionConfig | None = None):
        self.config = config

    def fit(self, X, y=None):
        self.n_features_in_ = INDICATOR_COUNT
        return self

    def transform(self, X) -> np.ndarray:
        cfg = self.config or ExtractionConfig()
        rows = [extract_all(record, cfg).encode() for record in X]
        if not rows:
            return np.empty((0, INDICATOR_COUNT))
        return np.vstack(rows)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(INDICATOR_NAMES, dtype=object)


class PhishNetClassifier(BaseEstimator, ClassifierMixin):
    """Binary classifier over encoded indicator matrices.

    Hidden layout, learning rate and epoch budget are constructor params so
    get_params/set_params and clone behave as sklearn expects. The positive
    class is classes_[1].
    """

    def __init__(
        self,
        hidden_layer_sizes=(10,),
        learning_rate: float = 0.5,
        max_epochs: int = 200,
        mse_stop: float = 0.0,
        shuffle: bool = False,
        seed: int = 0,
        band_cuts=(0.2, 0.4, 0.6, 0.8),
    ):
        self.hidden_layer_sizes = hidden_layer_sizes
        self.learning_rate = learning_rate
        self.max_epochs = max_epochs
        self.mse_stop = mse_stop
        self.shuffle = shuffle
        self.seed = seed
        self.band_cuts = band_cuts

    def fit(self, X, y):
        X = check_array(X, dtype=float)
        y = np.asarray(y)
        if y.shape[0] != X.shape[0]:
            raise ShapeError(f"X has {X.shape[0]} rows but y has {y.shape[0]}")
        self.classes_ = np.unique(y)
        if len(self.classes_) != 2:
            raise ValueError(f"expected exactly 2 classes, got {len(self.classes_)}")
        targets = (y == self.classes_[1]).astype(float)

        layers = [X.shape[1], *self.hidden_layer_sizes, 1]
        net = init_network(layers, seed=self.seed)
        examples = [TrainingExample(row, [t]) for row, t in zip(X, targets)]
        cfg = TrainConfig(
            learning_rate=self.learning_rate,
            max_epochs=self.max_epochs,
            mse_stop=self.mse_stop,
            shuffle=self.shuffle,
            seed=self.seed,
        )
        self.net_, self.history_ = train(net, examples, cfg)
        self.n_features_in_ = X.shape[1]
        return self

    def _scores(self, X) -> np.ndarray:
        check_is_fitted(self, "net_")
        X = check_array(X, dtype=float)
        if X.shape[1] != self.n_features_in_:
            raise ShapeError(
                f"X has {X.shape[1]} features, fit saw {self.n_features_in_}"
            )
        return np.array([float(forward(self.net_, row).output[0]) for row in X])

    def decision_function(self, X) -> np.ndarray:
        return self._scores(X)

    def predict_proba(self, X) -> np.ndarray:
        scores = self._scores(X)
        return np.column_stack([1.0 - scores, scores])

    def predict(self, X) -> np.ndarray:
        scores = self._scores(X)
        return self.classes_[(scores >= 0.5).astype(int)]

    def predict_bands(self, X) -> list:
        bands = BandThresholds(tuple(self.band_cuts))
        return [band_score(s, bands).value for s in self._scores(X)]
