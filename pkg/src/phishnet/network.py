"""Feed-forward sigmoid network with hand-rolled backpropagation.

Weight matrices have shape (n_in + 1, n_out); the extra row (kept last) is
the bias, which behaves like an input unit pinned at 1.0. Entry (j, i) is the
weight from unit j of the previous layer to unit i of the next.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, ShapeError

__all__ = [
    "Network",
    "LayerActivations",
    "TrainingExample",
    "TrainConfig",
    "BackpropTrace",
    "sigmoid",
    "sigmoid_prime",
    "init_network",
    "forward",
    "perceptron_update",
    "backprop_update",
    "train",
    "mse",
]


def sigmoid(x):
    # |36| is the largest saturation that still rounds strictly inside (0,1)
    # in double precision; clipping also avoids exp overflow
    return 1.0 / (1.0 + np.exp(-np.clip(x, -36.0, 36.0)))


def sigmoid_prime(x):
    s = sigmoid(x)
    return s * (1.0 - s)


@dataclass
class Network:
    layer_sizes: tuple
    weights: list  # one (n_in + 1, n_out) array per layer transition
    activation: str = "sigmoid"

    def copy(self) -> "Network":
        return Network(self.layer_sizes, [w.copy() for w in self.weights], self.activation)


@dataclass
class LayerActivations:
    """Forward-pass record: activations per layer (inputs first) and the
    pre-activation sums for every non-input layer."""

    activations: list
    in_values: list

    @property
    def output(self) -> np.ndarray:
        return self.activations[-1]


@dataclass
class TrainingExample:
    input: np.ndarray
    target: np.ndarray

    def __post_init__(self):
        self.input = np.asarray(self.input, dtype=float)
        self.target = np.asarray(self.target, dtype=float)


@dataclass
class TrainConfig:
    learning_rate: float = 0.5
    max_epochs: int = 1000
    mse_stop: float = 0.0
    shuffle: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ConfigError("learning_rate must be positive")
        if self.max_epochs < 1:
            raise ConfigError("max_epochs must be at least 1")
        if self.mse_stop < 0:
            raise ConfigError("mse_stop must be non-negative")


@dataclass
class BackpropTrace:
    """Deltas per non-input layer: output A_i = Err_i*g'(in_i), hidden
    A_j = g'(in_j) * sum_i w_ji * A_i."""

    deltas: list = field(default_factory=list)


def init_network(layer_sizes, seed: int = 0) -> Network:
    """Fresh network with every weight drawn uniformly from [-0.5, 0.5]."""
    sizes = tuple(int(n) for n in layer_sizes)
    if len(sizes) < 2:
        raise ConfigError("need at least an input and an output layer")
    if any(n < 1 for n in sizes):
        raise ConfigError("layer sizes must be positive")
    rng = np.random.default_rng(seed)
    weights = [
        rng.uniform(-0.5, 0.5, size=(n_in + 1, n_out))
        for n_in, n_out in zip(sizes, sizes[1:])
    ]
    return Network(sizes, weights)


def _check_input(net: Network, vec, what: str) -> np.ndarray:
    arr = np.asarray(vec, dtype=float)
    if arr.shape != (net.layer_sizes[0],):
        raise ShapeError(
            f"{what} has shape {arr.shape}, expected ({net.layer_sizes[0]},)"
        )
    return arr


def forward(net: Network, input) -> LayerActivations:
    """Layer-by-layer pass: in_i = sum_j w_ji * a_j (bias a = 1), a_i = g(in_i)."""
    a = _check_input(net, input, "input")
    activations = [a]
    in_values = []
    for w in net.weights:
        extended = np.append(activations[-1], 1.0)
        in_vec = extended @ w
        in_values.append(in_vec)
        activations.append(sigmoid(in_vec))
    return LayerActivations(activations, in_values)


def perceptron_update(weights, input, target: float, lr: float):
    """Single-unit rule w_j += lr * a_j * (T - O) with O = g(w . a).

    Callers wanting a bias append a constant 1.0 to both vectors.
    """
    w = np.asarray(weights, dtype=float)
    a = np.asarray(input, dtype=float)
    if w.shape != a.shape:
        raise ShapeError(f"weights {w.shape} and input {a.shape} differ")
    out = float(sigmoid(w @ a))
    return w + lr * (target - out) * a


def backprop_update(net: Network, ex: TrainingExample, lr: float):
    """One full weight update for one example. Returns (net, trace, err).

    The network is modified in place and also returned.
    """
    if ex.target.shape != (net.layer_sizes[-1],):
        raise ShapeError(
            f"target has shape {ex.target.shape}, expected ({net.layer_sizes[-1]},)"
        )
    fw = forward(net, ex.input)
    err = ex.target - fw.output

    # All deltas come from the pre-update weights; only then do weights move.
    deltas = [err * sigmoid_prime(fw.in_values[-1])]
    for k in range(len(net.weights) - 1, 0, -1):
        propagated = net.weights[k][:-1, :] @ deltas[0]  # bias row carries no delta
        deltas.insert(0, sigmoid_prime(fw.in_values[k - 1]) * propagated)

    for k, w in enumerate(net.weights):
        extended = np.append(fw.activations[k], 1.0)
        w += lr * np.outer(extended, deltas[k])

    return net, BackpropTrace(deltas), err


def mse(net: Network, dataset) -> float:
    """Mean over examples of (1/2) * sum_i (T_i - O_i)^2."""
    if not dataset:
        raise ConfigError("mse needs a non-empty dataset")
    total = 0.0
    for ex in dataset:
        out = forward(net, ex.input).output
        diff = ex.target - out
        total += 0.5 * float(diff @ diff)
    return total / len(dataset)


def train(net: Network, dataset, cfg: TrainConfig):
    """Epoch loop: sequential per-example updates, MSE logged after each epoch.

    Stops at max_epochs or as soon as the epoch MSE drops to mse_stop.
    Returns (net, history); the network is trained in place.
    """
    if not dataset:
        raise ConfigError("train needs a non-empty dataset")
    examples = list(dataset)
    rng = np.random.default_rng(cfg.seed)
    history = []
    for _ in range(cfg.max_epochs):
        order = rng.permutation(len(examples)) if cfg.shuffle else range(len(examples))
        for idx in order:
            backprop_update(net, examples[idx], cfg.learning_rate)
        epoch_mse = mse(net, examples)
        history.append(epoch_mse)
        if epoch_mse <= cfg.mse_stop:
            break
    return net, history
