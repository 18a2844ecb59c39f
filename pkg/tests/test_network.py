"""Network math: activation, init, forward, update rules, training loop.

The 2-2-1 golden fixture values were computed longhand with scalar
arithmetic before the implementation existed; they are frozen here.
"""

import numpy as np
import pytest

from phishnet.errors import ConfigError, ShapeError
from phishnet.network import (
    Network,
    TrainConfig,
    TrainingExample,
    backprop_update,
    forward,
    init_network,
    mse,
    perceptron_update,
    sigmoid,
    sigmoid_prime,
    train,
)


def _golden_net():
    w1 = np.array([[0.1, -0.2], [0.3, 0.4], [0.05, -0.05]])
    w2 = np.array([[0.5], [-0.3], [0.1]])
    return Network((2, 2, 1), [w1, w2])


def test_sigmoid_closed_form():
    assert sigmoid(0.0) == 0.5
    assert abs(sigmoid(1.0) - 0.7310585786300049) < 1e-15
    assert sigmoid_prime(0.0) == 0.25


def test_sigmoid_stays_strictly_inside_unit_interval():
    for x in (-1e6, -100.0, -60.0, 0.0, 60.0, 100.0, 1e6):
        s = float(sigmoid(x))
        assert 0.0 < s < 1.0


def test_init_shapes_and_range():
    net = init_network([27, 10, 1], seed=3)
    assert [w.shape for w in net.weights] == [(28, 10), (11, 1)]
    total = sum(w.size for w in net.weights)
    assert total == 291
    for w in net.weights:
        assert np.all(w >= -0.5) and np.all(w <= 0.5)


def test_init_seeded_determinism():
    a = init_network([4, 3, 2], seed=7)
    b = init_network([4, 3, 2], seed=7)
    for wa, wb in zip(a.weights, b.weights):
        assert np.array_equal(wa, wb)


def test_init_rejects_bad_layouts():
    with pytest.raises(ConfigError):
        init_network([2], seed=0)
    with pytest.raises(ConfigError):
        init_network([2, 0, 1], seed=0)


def test_forward_all_zero_weights_gives_half_everywhere():
    net = Network((3, 4, 2), [np.zeros((4, 4)), np.zeros((5, 2))])
    fw = forward(net, [0.3, 0.9, 0.1])
    for layer in fw.activations[1:]:
        assert np.all(layer == 0.5)


def test_forward_single_link():
    net = Network((1, 1), [np.array([[1.0], [0.0]])])
    out = float(forward(net, [1.0]).output[0])
    assert abs(out - 0.7310585786300049) < 1e-12


def test_forward_golden_221():
    fw = forward(_golden_net(), [1.0, 0.5])
    # hand computation: in_h = (0.3, -0.05), in_o = 0.24097047735109264
    assert abs(fw.in_values[0][0] - 0.3) < 1e-15
    assert abs(fw.in_values[0][1] - (-0.05)) < 1e-15
    assert abs(fw.activations[1][0] - 0.574442516811659) < 1e-15
    assert abs(fw.activations[1][1] - 0.4875026035157896) < 1e-15
    assert abs(fw.in_values[1][0] - 0.24097047735109264) < 1e-15
    assert abs(float(fw.output[0]) - 0.5599527942771536) < 1e-15


def test_forward_rejects_wrong_length():
    with pytest.raises(ShapeError):
        forward(_golden_net(), [1.0, 0.5, 0.2])


def test_forward_is_pure():
    net = _golden_net()
    before = [w.copy() for w in net.weights]
    forward(net, [0.2, 0.8])
    for w, b in zip(net.weights, before):
        assert np.array_equal(w, b)


def test_forward_activations_strictly_in_unit_interval():
    rng = np.random.default_rng(5)
    for _ in range(50):
        sizes = [int(rng.integers(1, 6)) for _ in range(int(rng.integers(2, 4)))]
        net = init_network(sizes, seed=int(rng.integers(10_000)))
        fw = forward(net, rng.uniform(0, 1, sizes[0]))
        for layer in fw.activations[1:]:
            assert np.all(layer > 0.0) and np.all(layer < 1.0)


# --- perceptron rule ---------------------------------------------------------


def test_perceptron_no_error_no_change():
    w = np.array([0.3, -0.2, 0.1])
    a = np.array([0.5, 0.5, 1.0])
    out = float(sigmoid(w @ a))
    updated = perceptron_update(w, a, out, lr=0.7)
    assert np.array_equal(updated, w)


def test_perceptron_rule_arithmetic():
    # engineered so Err = 0.4 exactly: w goes 0.2 -> 0.2 + 0.5*1.0*0.4 = 0.4
    w = np.array([0.2])
    a = np.array([1.0])
    out = float(sigmoid(0.2))
    updated = perceptron_update(w, a, out + 0.4, lr=0.5)
    assert abs(updated[0] - 0.4) < 1e-15


def test_perceptron_positive_error_increases_weight():
    rng = np.random.default_rng(11)
    for _ in range(30):
        w = rng.uniform(-1, 1, 4)
        a = rng.uniform(0.1, 1.0, 4)  # strictly positive activations
        out = float(sigmoid(w @ a))
        target = min(1.0, out + rng.uniform(0.05, 0.3))
        updated = perceptron_update(w, a, target, lr=0.5)
        assert np.all(updated > w)


def test_perceptron_shape_mismatch():
    with pytest.raises(ShapeError):
        perceptron_update([0.1, 0.2], [1.0], 1.0, 0.5)


# --- backprop ----------------------------------------------------------------


def test_backprop_golden_221():
    net = _golden_net()
    _, trace, err = backprop_update(net, TrainingExample([1.0, 0.5], [1.0]), 0.5)

    assert abs(float(err[0]) - 0.4400472057228464) < 1e-15
    assert abs(trace.deltas[1][0] - 0.10843012323908875) < 1e-15
    assert abs(trace.deltas[0][0] - 0.013253322431723571) < 1e-15
    assert abs(trace.deltas[0][1] - (-0.008127178697930866)) < 1e-15

    expected_w1 = np.array(
        [
            [0.10662666121586178, -0.20406358934896546],
            [0.30331333060793086, 0.3979682053255173],
            [0.05662666121586179, -0.054063589348965435],
        ]
    )
    expected_w2 = np.array(
        [[0.5311434364458303], [-0.27357001631070316], [0.15421506161954437]]
    )
    assert np.allclose(net.weights[0], expected_w1, rtol=0, atol=1e-15)
    assert np.allclose(net.weights[1], expected_w2, rtol=0, atol=1e-15)


def test_backprop_zero_error_is_identity():
    net = init_network([3, 2, 1], seed=9)
    x = [0.2, 0.9, 0.4]
    target = forward(net, x).output.copy()  # T = O exactly
    before = [w.copy() for w in net.weights]
    backprop_update(net, TrainingExample(x, target), 0.5)
    for w, b in zip(net.weights, before):
        assert np.array_equal(w, b)


def test_backprop_shape_mismatch():
    net = init_network([2, 2, 1], seed=0)
    with pytest.raises(ShapeError):
        backprop_update(net, TrainingExample([0.1, 0.2], [1.0, 0.0]), 0.5)


def _loss(net, ex):
    out = forward(net, ex.input).output
    diff = ex.target - out
    return 0.5 * float(diff @ diff)


def test_backprop_matches_finite_differences():
    # spot version of the acceptance gradient check
    rng = np.random.default_rng(21)
    eps = 1e-5
    for _ in range(30):
        sizes = [int(rng.integers(1, 6)) for _ in range(int(rng.integers(2, 4)))]
        net = init_network(sizes, seed=int(rng.integers(10_000)))
        ex = TrainingExample(rng.uniform(0, 1, sizes[0]), rng.uniform(0, 1, sizes[-1]))
        lr = float(rng.uniform(0.1, 1.0))
        before = [w.copy() for w in net.weights]
        backprop_update(net, ex, lr)
        probe = Network(net.layer_sizes, [b.copy() for b in before])
        for k, base in enumerate(before):
            for j in range(base.shape[0]):
                for i in range(base.shape[1]):
                    probe.weights[k][j, i] = base[j, i] + eps
                    up = _loss(probe, ex)
                    probe.weights[k][j, i] = base[j, i] - eps
                    down = _loss(probe, ex)
                    probe.weights[k][j, i] = base[j, i]
                    expected = -lr * (up - down) / (2 * eps)
                    got = net.weights[k][j, i] - base[j, i]
                    denom = max(abs(expected), abs(got), 1e-10)
                    assert abs(expected - got) / denom < 1e-4


def test_single_layer_backprop_is_scaled_perceptron_rule():
    # with no hidden layer the delta is Err * g'(in), so the backprop step
    # equals the perceptron step scaled by g'(in)
    rng = np.random.default_rng(33)
    for _ in range(40):
        n = int(rng.integers(1, 7))
        net = init_network([n, 1], seed=int(rng.integers(10_000)))
        x = rng.uniform(0, 1, n)
        target = float(rng.uniform(0, 1))
        lr = float(rng.uniform(0.1, 1.0))

        w_col = net.weights[0][:, 0].copy()
        extended = np.append(x, 1.0)
        in_value = float(w_col @ extended)
        perceptron_step = perceptron_update(w_col, extended, target, lr) - w_col

        backprop_update(net, TrainingExample(x, [target]), lr)
        backprop_step = net.weights[0][:, 0] - w_col

        scaled = perceptron_step * float(sigmoid_prime(in_value))
        assert np.allclose(backprop_step, scaled, rtol=1e-12, atol=1e-15)


# --- training loop -----------------------------------------------------------


def test_train_config_validation():
    with pytest.raises(ConfigError):
        TrainConfig(learning_rate=0.0)
    with pytest.raises(ConfigError):
        TrainConfig(max_epochs=0)
    with pytest.raises(ConfigError):
        TrainConfig(mse_stop=-0.1)


def test_train_empty_dataset_rejected():
    with pytest.raises(ConfigError):
        train(init_network([2, 1], seed=0), [], TrainConfig())


def test_train_single_epoch_updates_each_example_once():
    calls = []
    data = [
        TrainingExample([0.0, 0.0], [0.0]),
        TrainingExample([1.0, 1.0], [1.0]),
        TrainingExample([0.5, 0.5], [1.0]),
    ]
    net = init_network([2, 1], seed=1)
    snapshot = [w.copy() for w in net.weights]
    _, history = train(net, data, TrainConfig(max_epochs=1))
    assert len(history) == 1
    # reproduce by applying the three updates manually, in order
    manual = Network(net.layer_sizes, snapshot)
    for ex in data:
        backprop_update(manual, ex, 0.5)
    for w, m in zip(net.weights, manual.weights):
        assert np.array_equal(w, m)
    del calls


def test_train_deterministic_history():
    data = [
        TrainingExample([0.0, 1.0], [1.0]),
        TrainingExample([1.0, 0.0], [0.0]),
        TrainingExample([1.0, 1.0], [1.0]),
    ]
    cfg = TrainConfig(learning_rate=0.4, max_epochs=25, shuffle=True, seed=13)
    _, h1 = train(init_network([2, 3, 1], seed=13), data, cfg)
    _, h2 = train(init_network([2, 3, 1], seed=13), data, cfg)
    assert h1 == h2


def test_train_preserves_shapes():
    data = [TrainingExample([0.2, 0.4], [1.0])]
    net = init_network([2, 5, 1], seed=2)
    shapes = [w.shape for w in net.weights]
    train(net, data, TrainConfig(max_epochs=10))
    assert [w.shape for w in net.weights] == shapes
    assert net.layer_sizes == (2, 5, 1)


def test_train_learns_a_simple_threshold():
    # single input: label 1 iff x >= 0.5; converges fast
    data = [TrainingExample([x / 10.0], [1.0 if x >= 5 else 0.0]) for x in range(11)]
    net = init_network([1, 4, 1], seed=4)
    net, history = train(
        net, data, TrainConfig(learning_rate=0.5, max_epochs=4000, mse_stop=0.01)
    )
    assert history[-1] <= 0.01
    assert history[-1] < history[0]


def test_mse_values():
    net = Network((2, 1), [np.zeros((3, 1))])  # every output is exactly 0.5
    data = [TrainingExample([0.1, 0.2], [1.0])]
    assert mse(net, data) == 0.125
    with pytest.raises(ConfigError):
        mse(net, [])


def test_mse_matches_independent_recompute():
    rng = np.random.default_rng(8)
    net = init_network([3, 4, 2], seed=8)
    data = [
        TrainingExample(rng.uniform(0, 1, 3), rng.uniform(0, 1, 2)) for _ in range(9)
    ]
    expected = sum(
        0.5 * float(np.sum((ex.target - forward(net, ex.input).output) ** 2))
        for ex in data
    ) / len(data)
    assert abs(mse(net, data) - expected) < 1e-15
