"""
Test the linear Q-network, its gradient and the Adam step
"""
import numpy as np
import pytest

from src.errors import ConfigError, OutputError, TrainingFault
from src.learning.qnet import (
    forward,
    greedy_action,
    init_adam,
    init_qnet,
    load_qnet,
    loss_and_gradient,
    save_qnet,
    td_target,
    train_step,
)
from src.models.encoding_model import FairnessPartition
from src.models.qnet_model import QNet
from src.simulation.encoding import encode_state


def make_net(weights, bias):
    return QNet(weights=np.asarray(weights, dtype=float), bias=np.asarray(bias, dtype=float))


def two_hot(group_id=1, fairness=0.89):
    return encode_state(group_id, fairness, FairnessPartition(mesh=1 / 3, top_bin="merged"), 4)


# ============================================================
# init / forward
# ============================================================

def test_init_bounds_and_zero_bias(rng):
    net = init_qnet(105, 101, rng)
    assert net.weights.shape == (101, 105)
    assert np.abs(net.weights).max() <= 0.01
    assert not net.bias.any()


def test_init_is_seed_deterministic():
    a = init_qnet(7, 5, np.random.default_rng(3))
    b = init_qnet(7, 5, np.random.default_rng(3))
    assert np.array_equal(a.weights, b.weights)


def test_forward_zero_net():
    assert np.array_equal(forward(make_net(np.zeros((3, 2)), np.zeros(3)), np.array([1.0, 0.0])), np.zeros(3))


def test_forward_bias_only():
    net = make_net(np.zeros((3, 2)), [1.0, 2.0, 3.0])
    assert forward(net, np.array([0.3, 0.7])).tolist() == [1.0, 2.0, 3.0]


def test_forward_weights():
    net = make_net([[1, 2], [3, 4]], [0, 0])
    assert forward(net, np.array([1.0, 1.0])).tolist() == [3.0, 7.0]


def test_two_hot_forward_matches_dense(rng):
    net = init_qnet(7, 5, rng)
    net.bias[:] = rng.normal(size=5)
    state = two_hot()
    assert np.allclose(forward(net, state), net.weights @ state.vector() + net.bias, rtol=0, atol=1e-15)


def test_dimension_mismatch_is_config_error(rng):
    net = init_qnet(6, 5, rng)
    with pytest.raises(ConfigError):
        forward(net, two_hot())
    with pytest.raises(ConfigError):
        forward(net, np.ones(7))


# ============================================================
# greedy_action / td_target
# ============================================================

def test_greedy_picks_max():
    net = make_net(np.zeros((3, 1)), [0.1, 0.5, 0.3])
    assert greedy_action(net, np.array([1.0])) == 1


def test_greedy_ties_go_to_lowest():
    net = make_net(np.zeros((3, 1)), [0.5, 0.5, 0.1])
    assert greedy_action(net, np.array([1.0])) == 0


def test_greedy_shift_invariant(rng):
    net = init_qnet(7, 11, rng)
    state = two_hot()
    before = greedy_action(net, state)
    net.bias += 3.0
    assert greedy_action(net, state) == before


def test_td_target_rejected_is_penalty():
    net = make_net(np.zeros((3, 2)), [0.0, 2.0, 1.0])
    assert td_target(0.7, np.array([1.0, 0.0]), net, 0.9, rejected=True, nu=-0.5) == -0.5


def test_td_target_without_discount():
    net = make_net(np.zeros((3, 2)), [0.0, 2.0, 1.0])
    assert td_target(0.7, np.array([1.0, 0.0]), net, 0.0, rejected=False, nu=-0.5) == 0.7


def test_td_target_bootstraps_on_max():
    net = make_net(np.zeros((3, 2)), [0.0, 2.0, 1.0])
    assert td_target(1.0, np.array([1.0, 0.0]), net, 0.9, rejected=False, nu=-0.5) == pytest.approx(2.8)


# ============================================================
# gradient
# ============================================================

def test_zero_gradient_leaves_net_unchanged():
    net = make_net([[1.0, 0.0], [0.0, 1.0]], [0.0, 0.0])
    adam = init_adam(net)
    x = np.array([1.0, 0.0])
    before = net.copy()
    _, _, loss = train_step(net, adam, x, 0, target=1.0)
    assert loss == 0.0
    assert np.array_equal(net.weights, before.weights)
    assert np.array_equal(net.bias, before.bias)


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(11)
    h = 1e-5
    for _ in range(20):
        m, n = rng.integers(2, 5, size=2)
        net = make_net(rng.normal(size=(m, n)), rng.normal(size=m))
        x = rng.normal(size=n)
        action = int(rng.integers(m))
        target = float(rng.normal())
        _, grad_w, grad_b = loss_and_gradient(net, x, action, target)

        def loss_at(weights, bias):
            return loss_and_gradient(make_net(weights, bias), x, action, target)[0]

        for idx in np.ndindex(net.weights.shape):
            plus, minus = net.weights.copy(), net.weights.copy()
            plus[idx] += h
            minus[idx] -= h
            numeric = (loss_at(plus, net.bias) - loss_at(minus, net.bias)) / (2 * h)
            assert grad_w[idx] == pytest.approx(numeric, rel=1e-5, abs=1e-7)
        for j in range(m):
            plus, minus = net.bias.copy(), net.bias.copy()
            plus[j] += h
            minus[j] -= h
            numeric = (loss_at(net.weights, plus) - loss_at(net.weights, minus)) / (2 * h)
            assert grad_b[j] == pytest.approx(numeric, rel=1e-5, abs=1e-7)


def test_gradient_touches_one_row_and_two_columns(rng):
    net = init_qnet(7, 5, rng)
    state = two_hot()
    _, grad_w, grad_b = loss_and_gradient(net, state, 3, target=1.0)
    rows, cols = np.nonzero(grad_w)
    assert set(rows) == {3}
    assert set(cols) == set(state.active)
    assert np.count_nonzero(grad_b) == 1 and grad_b[3] != 0


# ============================================================
# train_step
# ============================================================

def test_repeated_steps_converge_to_target(rng):
    net = init_qnet(7, 5, rng)
    adam = init_adam(net)
    state = two_hot()
    for _ in range(5000):
        train_step(net, adam, state, 2, target=1.5)
        if abs(forward(net, state)[2] - 1.5) < 1e-3:
            break
    assert abs(forward(net, state)[2] - 1.5) < 1e-3


def test_single_step_reduces_loss():
    rng = np.random.default_rng(21)
    checked = 0
    while checked < 100:
        net = init_qnet(7, 5, rng)
        state = two_hot(int(rng.integers(4)), float(rng.random()))
        action = int(rng.integers(5))
        target = float(rng.uniform(-2, 2))
        before = loss_and_gradient(net, state, action, target)[0]
        if before <= 0.1 ** 2:
            continue
        train_step(net, init_adam(net), state, action, target)
        assert loss_and_gradient(net, state, action, target)[0] < before
        checked += 1


def test_step_matches_dense_adam(rng):
    net = init_qnet(7, 5, rng)
    reference = net.copy()
    adam = init_adam(net)
    m_w, v_w = np.zeros_like(net.weights), np.zeros_like(net.weights)
    m_b, v_b = np.zeros_like(net.bias), np.zeros_like(net.bias)
    lr, b1, b2, eps = adam.learning_rate, adam.beta1, adam.beta2, adam.epsilon
    for t in range(1, 31):
        state = two_hot(int(rng.integers(4)), float(rng.random()))
        action = int(rng.integers(5))
        target = float(rng.uniform(-1, 2))
        _, grad_w, grad_b = loss_and_gradient(reference, state, action, target)
        for param, grad, m, v in ((reference.weights, grad_w, m_w, v_w),
                                  (reference.bias, grad_b, m_b, v_b)):
            m[:] = b1 * m + (1 - b1) * grad
            v[:] = b2 * v + (1 - b2) * grad ** 2
            param -= lr * (m / (1 - b1 ** t)) / (np.sqrt(v / (1 - b2 ** t)) + eps)
        train_step(net, adam, state, action, target)
    assert np.allclose(net.weights, reference.weights, rtol=1e-10, atol=1e-12)
    assert np.allclose(net.bias, reference.bias, rtol=1e-10, atol=1e-12)
    assert np.allclose(adam.v_weights, v_w, rtol=1e-10, atol=1e-15)


def test_dense_state_step_matches_two_hot_step(rng):
    net = init_qnet(7, 5, rng)
    twin = net.copy()
    state = two_hot(2, 0.4)
    adam, twin_adam = init_adam(net), init_adam(twin)
    for action in (1, 3, 1):
        train_step(net, adam, state, action, target=0.8)
        train_step(twin, twin_adam, state.vector(), action, target=0.8)
    assert np.allclose(net.weights, twin.weights, rtol=0, atol=1e-14)
    assert np.allclose(net.bias, twin.bias, rtol=0, atol=1e-14)


def test_step_only_moves_active_row(rng):
    net = init_qnet(7, 5, rng)
    before = net.copy()
    train_step(net, init_adam(net), two_hot(), 4, target=1.0)
    changed_rows = np.nonzero((net.weights != before.weights).any(axis=1))[0]
    assert changed_rows.tolist() == [4]
    assert np.array_equal(net.bias[:4], before.bias[:4])


def test_nan_target_is_training_fault(rng):
    net = init_qnet(7, 5, rng)
    with pytest.raises(TrainingFault):
        train_step(net, init_adam(net), two_hot(), 0, target=float("nan"))


def test_non_finite_weights_are_training_fault(rng):
    net = init_qnet(7, 5, rng)
    net.weights[0, 1] = np.inf
    with pytest.raises(TrainingFault):
        train_step(net, init_adam(net), two_hot(), 0, target=1.0)


# ============================================================
# save / load
# ============================================================

def test_save_load_is_bit_exact(rng, tmp_path):
    net = init_qnet(7, 5, rng)
    adam = init_adam(net)
    for action in range(5):
        train_step(net, adam, two_hot(), action, target=0.5)
    path = save_qnet(tmp_path / "net.fqnet", net, adam)

    loaded, loaded_adam = load_qnet(path)
    assert loaded.weights.tobytes() == net.weights.tobytes()
    assert loaded.bias.tobytes() == net.bias.tobytes()
    assert loaded_adam.m_weights.tobytes() == adam.m_weights.tobytes()
    assert loaded_adam.v_bias.tobytes() == adam.v_bias.tobytes()
    assert loaded_adam.step == 5
    assert loaded_adam.learning_rate == adam.learning_rate


def test_load_missing_file(tmp_path):
    with pytest.raises(OutputError):
        load_qnet(tmp_path / "absent.fqnet")


def test_load_bad_magic(tmp_path):
    path = tmp_path / "bad.fqnet"
    path.write_bytes(b"NOTQN" + bytes(64))
    with pytest.raises(OutputError):
        load_qnet(path)


def test_load_truncated(rng, tmp_path):
    net = init_qnet(7, 5, rng)
    path = save_qnet(tmp_path / "net.fqnet", net, init_adam(net))
    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(OutputError):
        load_qnet(path)
