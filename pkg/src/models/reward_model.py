"""
Reward hyper-parameters
"""
from pydantic import BaseModel, Field

from src.config import DEFAULT_SIGMA, REJECTION_PENALTY


class RewardParams(BaseModel):
    """
    Weights, bandwidths and targets of the two Gaussian reward terms
    """
    beta_p: float = Field(default=1.0, ge=0, description="Revenue weight")
    sigma_p: float = Field(default=DEFAULT_SIGMA, gt=0, description="Revenue bandwidth")
    p_target: float = Field(default=1.0, ge=0, le=1, description="Target normalized price")
    beta_f: float = Field(default=0.0, ge=0, description="Fairness weight")
    sigma_f: float = Field(default=DEFAULT_SIGMA, gt=0, description="Fairness bandwidth")
    f_target: float = Field(default=1.0, ge=0, le=1, description="Target fairness")
    nu: float = Field(
        default=REJECTION_PENALTY,
        description="Penalty for a rejected bid, in normalized price units"
    )

    class Config:
        json_schema_extra = {
            "example": {
                "beta_p": 1, "sigma_p": 0.1, "p_target": 1,
                "beta_f": 1, "sigma_f": 0.1, "f_target": 0.9,
                "nu": -0.5
            }
        }
