"""
Linear Q-value approximator trained with squared TD error and Adam.

The state is two-hot, so Q(s) = W[:, group] + W[:, |G| + bin] + b and the
weight gradient of a single (s, a) sample touches one row and two columns.
"""
import logging
import math
import struct
from pathlib import Path
from typing import Tuple, Union

import numpy as np

from src.config import ADAM_BETA1, ADAM_BETA2, ADAM_EPSILON, INIT_WEIGHT_SCALE, LEARNING_RATE
from src.errors import ConfigError, OutputError, TrainingFault
from src.models.encoding_model import State
from src.models.qnet_model import AdamState, QNet

logger = logging.getLogger(__name__)

StateLike = Union[State, np.ndarray]

WEIGHTS_MAGIC = b"FQNET"
WEIGHTS_VERSION = 1
_HEADER = struct.Struct("<5sHII")  # magic, version, n, m
_TRAILER = struct.Struct("<Qdddd")  # step, lr, beta1, beta2, epsilon


def init_qnet(n_inputs: int, n_actions: int, rng: np.random.Generator,
              scale: float = INIT_WEIGHT_SCALE) -> QNet:
    """Weights uniform in [-scale, scale], bias zero"""
    if n_inputs <= 0 or n_actions <= 0:
        raise ConfigError(f"invalid network shape ({n_actions}, {n_inputs})")
    weights = rng.uniform(-scale, scale, size=(n_actions, n_inputs))
    return QNet(weights=weights, bias=np.zeros(n_actions))


def init_adam(net: QNet, learning_rate: float = LEARNING_RATE, beta1: float = ADAM_BETA1,
              beta2: float = ADAM_BETA2, epsilon: float = ADAM_EPSILON) -> AdamState:
    return AdamState.zeros_like(
        net, learning_rate=learning_rate, beta1=beta1, beta2=beta2, epsilon=epsilon
    )


def forward(net: QNet, s: StateLike) -> np.ndarray:
    """Q-values of every action for state s"""
    if isinstance(s, State):
        if s.dimension != net.n_inputs:
            raise ConfigError(
                f"state dimension {s.dimension} does not match network input {net.n_inputs}"
            )
        g, f = s.active
        return net.weights[:, g] + net.weights[:, f] + net.bias
    x = np.asarray(s, dtype=float)
    if x.shape != (net.n_inputs,):
        raise ConfigError(f"state shape {x.shape} does not match network input {net.n_inputs}")
    return net.weights @ x + net.bias


def greedy_action(net: QNet, s: StateLike) -> int:
    """argmax_a Q(s, a), ties to the lowest index"""
    return int(np.argmax(forward(net, s)))


def td_target(reward: float, next_state: StateLike, net_prev: QNet, gamma: float,
              rejected: bool, nu: float) -> float:
    """nu when the rejection ends the return, otherwise r + gamma * max_a Q(s', a)"""
    if rejected:
        return float(nu)
    return float(reward + gamma * np.max(forward(net_prev, next_state)))


def loss_and_gradient(net: QNet, s: StateLike, action: int,
                      target: float) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Loss (y - Q(s, a))^2 and its exact gradient with respect to
    (weights, bias), as dense arrays.
    """
    x = s.vector() if isinstance(s, State) else np.asarray(s, dtype=float)
    q = float(forward(net, s)[action])
    error = target - q
    dq = -2.0 * error
    grad_w = np.zeros_like(net.weights)
    grad_w[action] = dq * x
    grad_b = np.zeros_like(net.bias)
    grad_b[action] = dq
    return error * error, grad_w, grad_b


def adam_update(param: np.ndarray, m: np.ndarray, v: np.ndarray, index, grad,
                adam: AdamState) -> None:
    """
    In-place Adam step for one parameter array whose gradient is zero
    outside param[index]. Moments still decay everywhere, so this equals
    the dense update. adam.step must already be advanced.
    """
    m *= adam.beta1
    v *= adam.beta2
    m[index] += (1.0 - adam.beta1) * grad
    v[index] += (1.0 - adam.beta2) * np.square(grad)

    root_bc2 = math.sqrt(1.0 - adam.beta2 ** adam.step)
    step_size = adam.learning_rate * root_bc2 / (1.0 - adam.beta1 ** adam.step)
    buf = adam.scratch(param)
    np.sqrt(v, out=buf)
    buf += adam.epsilon * root_bc2
    np.divide(m, buf, out=buf)
    buf *= step_size
    param -= buf


def train_step(net: QNet, adam: AdamState, s: StateLike, action: int,
               target: float) -> Tuple[QNet, AdamState, float]:
    """
    One Adam step on (y - Q(s, a))^2. Updates net and adam in place and
    returns them with the loss measured before the step.

    The gradient is -2 (y - Q) x on row `action` only; a two-hot State
    touches two entries of that row.
    """
    if not np.isfinite(target):
        raise TrainingFault("non-finite TD target", {"target": target, "action": action})
    if isinstance(s, State):
        if s.dimension != net.n_inputs:
            raise ConfigError(
                f"state dimension {s.dimension} does not match network input {net.n_inputs}"
            )
        g, f = s.active
        q = float(net.weights[action, g] + net.weights[action, f] + net.bias[action])
    else:
        x = np.asarray(s, dtype=float)
        q = float(forward(net, x)[action])
    error = target - q
    loss = error * error
    if not np.isfinite(loss):
        raise TrainingFault("non-finite loss", {"loss": loss, "action": action, "step": adam.step})

    dq = -2.0 * error
    adam.step += 1
    if isinstance(s, State):
        adam_update(net.weights, adam.m_weights, adam.v_weights, (action, [g, f]), dq, adam)
    else:
        adam_update(net.weights, adam.m_weights, adam.v_weights, action, dq * x, adam)
    adam_update(net.bias, adam.m_bias, adam.v_bias, action, dq, adam)

    if not (np.isfinite(net.weights[action]).all() and np.isfinite(net.bias[action])):
        diagnostics = {
            "step": adam.step,
            "action": action,
            "target": target,
            "max_abs_weight": float(np.nanmax(np.abs(net.weights[action]))),
        }
        logger.error("Training fault: %s", diagnostics)
        raise TrainingFault("non-finite network parameters", diagnostics)
    return net, adam, loss


# ==================== PERSISTENCE ====================

def save_qnet(path: Union[str, Path], net: QNet, adam: AdamState) -> Path:
    """
    Binary layout: header (magic, version, n, m), weights row-major (m x n),
    bias, Adam moments (m_w, v_w, m_b, v_b), trailer (step, lr, beta1,
    beta2, epsilon). All floats little-endian float64.
    """
    path = Path(path)
    m, n = net.weights.shape
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as f:
            f.write(_HEADER.pack(WEIGHTS_MAGIC, WEIGHTS_VERSION, n, m))
            for array in (net.weights, net.bias, adam.m_weights, adam.v_weights,
                          adam.m_bias, adam.v_bias):
                f.write(np.ascontiguousarray(array, dtype="<f8").tobytes())
            f.write(_TRAILER.pack(adam.step, adam.learning_rate, adam.beta1,
                                  adam.beta2, adam.epsilon))
    except OSError as e:
        raise OutputError(f"failed to write weights: {e}", path=str(path)) from e
    return path


def load_qnet(path: Union[str, Path]) -> Tuple[QNet, AdamState]:
    path = Path(path)
    try:
        blob = path.read_bytes()
    except OSError as e:
        raise OutputError(f"failed to read weights: {e}", path=str(path)) from e

    if len(blob) < _HEADER.size:
        raise OutputError("truncated weights file", path=str(path))
    magic, version, n, m = _HEADER.unpack_from(blob, 0)
    if magic != WEIGHTS_MAGIC:
        raise OutputError(f"not a weights file (magic {magic!r})", path=str(path))
    if version != WEIGHTS_VERSION:
        raise OutputError(f"unsupported weights version {version}", path=str(path))

    shapes = [(m, n), (m,), (m, n), (m, n), (m,), (m,)]
    expected = _HEADER.size + sum(8 * int(np.prod(s)) for s in shapes) + _TRAILER.size
    if len(blob) != expected:
        raise OutputError(f"weights file has {len(blob)} bytes, expected {expected}", path=str(path))

    offset = _HEADER.size
    arrays = []
    for shape in shapes:
        count = int(np.prod(shape))
        arrays.append(np.frombuffer(blob, dtype="<f8", count=count, offset=offset)
                      .astype(np.float64).reshape(shape))
        offset += 8 * count
    step, lr, beta1, beta2, epsilon = _TRAILER.unpack_from(blob, offset)

    net = QNet(weights=arrays[0], bias=arrays[1])
    adam = AdamState(
        m_weights=arrays[2], v_weights=arrays[3], m_bias=arrays[4], v_bias=arrays[5],
        step=step, learning_rate=lr, beta1=beta1, beta2=beta2, epsilon=epsilon
    )
    return net, adam
