"""Synthetic, perfectly-separable indicator datasets for tests and demos.

Each fake site draws a per-site phishy propensity from one of two well
separated ranges, fills its 27 slots accordingly, and is labeled phish
exactly when enough slots came out Phishy. Labels derive from the generated
slots, so the boundary rule holds by construction.
"""

import numpy as np

from .indicators import INDICATOR_COUNT, FeatureVector, IndicatorValue
from .network import TrainingExample
from .records import LEGIT, PHISH

DEFAULT_PHISHY_CUTOFF = 14


def generate_separable_dataset(
    n: int = 500, seed: int = 0, cutoff: int = DEFAULT_PHISHY_CUTOFF
):
    """Returns (vectors, labels): n FeatureVectors and their phish/legit labels."""
    rng = np.random.default_rng(seed)
    vectors = []
    labels = []
    for _ in range(n):
        if rng.random() < 0.5:
            propensity = rng.uniform(0.05, 0.30)
        else:
            propensity = rng.uniform(0.65, 0.95)
        values = []
        for _ in range(INDICATOR_COUNT):
            r = rng.random()
            if r < propensity:
                values.append(IndicatorValue.PHISHY)
            elif r < propensity + 0.10:
                values.append(IndicatorValue.DOUBTFUL)
            else:
                values.append(IndicatorValue.LEGITIMATE)
        phishy_slots = sum(1 for v in values if v is IndicatorValue.PHISHY)
        vectors.append(FeatureVector(tuple(values)))
        labels.append(PHISH if phishy_slots >= cutoff else LEGIT)
    return vectors, labels


def to_examples(vectors, labels) -> list:
    return [
        TrainingExample(v.encode(), [1.0 if label == PHISH else 0.0])
        for v, label in zip(vectors, labels)
    ]
