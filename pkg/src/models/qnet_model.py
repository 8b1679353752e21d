"""
Linear Q-value approximator and Adam optimizer state
"""
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from src.config import ADAM_BETA1, ADAM_BETA2, ADAM_EPSILON, LEARNING_RATE


class QNet(BaseModel):
    """
    Q(s) = weights @ s + bias, weights of shape (m, n), bias of shape (m,)
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    weights: np.ndarray = Field(..., description="m x n weight matrix")
    bias: np.ndarray = Field(..., description="m bias vector")

    @model_validator(mode='after')
    def validate_shapes(self):
        if self.weights.ndim != 2:
            raise ValueError("weights must be a 2-d matrix")
        if self.bias.shape != (self.weights.shape[0],):
            raise ValueError(
                f"bias shape {self.bias.shape} does not match {self.weights.shape[0]} actions"
            )
        return self

    @property
    def n_actions(self) -> int:
        return self.weights.shape[0]

    @property
    def n_inputs(self) -> int:
        return self.weights.shape[1]

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.weights).all() and np.isfinite(self.bias).all())

    def copy(self) -> "QNet":
        return QNet(weights=self.weights.copy(), bias=self.bias.copy())


class AdamState(BaseModel):
    """
    First/second moment accumulators shaped like (weights, bias) plus step counter
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    m_weights: np.ndarray
    v_weights: np.ndarray
    m_bias: np.ndarray
    v_bias: np.ndarray
    step: int = Field(default=0, ge=0)
    learning_rate: float = Field(default=LEARNING_RATE, gt=0)
    beta1: float = Field(default=ADAM_BETA1, ge=0, lt=1)
    beta2: float = Field(default=ADAM_BETA2, ge=0, lt=1)
    epsilon: float = Field(default=ADAM_EPSILON, gt=0)

    _buffers: dict = PrivateAttr(default_factory=dict)

    def scratch(self, like: np.ndarray) -> np.ndarray:
        """Reusable work array shaped like `like`, one per shape"""
        buf = self._buffers.get(like.shape)
        if buf is None:
            buf = self._buffers[like.shape] = np.empty_like(like)
        return buf

    @classmethod
    def zeros_like(cls, net: QNet, **hyper) -> "AdamState":
        return cls(
            m_weights=np.zeros_like(net.weights),
            v_weights=np.zeros_like(net.weights),
            m_bias=np.zeros_like(net.bias),
            v_bias=np.zeros_like(net.bias),
            **hyper
        )
