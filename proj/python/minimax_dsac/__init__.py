"""Minimax distributional soft actor-critic on an unsignalized intersection."""

from ._core import (
    EnvConfig,
    IntersectionEnv,
    TrainConfig,
    config_keys,
    evaluate_checkpoint,
    train,
    welch_t_test,
)

__all__ = [
    "EnvConfig",
    "IntersectionEnv",
    "TrainConfig",
    "config_keys",
    "evaluate_checkpoint",
    "train",
    "welch_t_test",
]
