"""Parametri comuni ai calcolatori di complessita'."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BoundInputs:
    """Terna (N, gamma, epsilon) dei teoremi di complessita'.

    Attributes:
        n: Numero di punti del campione (N >= 1).
        gamma: Margine in (0, 1), con gamma * sqrt(2/pi) < 1.
        epsilon: Probabilita' di fallimento in (0, 1).
    """

    n: int
    gamma: float
    epsilon: float

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError(f"Il numero di punti N deve essere un intero >= 1, ricevuto: {self.n}")
        if not 0.0 < self.gamma < 1.0:
            raise ValueError(f"Il margine gamma deve essere in (0, 1), ricevuto: {self.gamma}")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon deve essere in (0, 1), ricevuto: {self.epsilon}")
        if self.gamma * math.sqrt(2.0 / math.pi) >= 1.0:
            raise ValueError(
                f"Con gamma = {self.gamma} il logaritmo di K non e' definito "
                "(serve gamma * sqrt(2/pi) < 1)."
            )
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "epsilon", float(self.epsilon))
