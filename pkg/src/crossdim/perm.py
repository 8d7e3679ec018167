"""Cross-order permutations: matrices, left/right embeddings and products.

Permutations are stored 0-indexed; ``Perm.from_images`` and ``str`` use the
1-indexed image notation ``2,1,4,3``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .lattice import lcm


@dataclass(frozen=True)
class Perm:
    image: tuple[int, ...]

    def __post_init__(self):
        img = tuple(int(i) for i in self.image)
        if sorted(img) != list(range(len(img))) or not img:
            raise ValueError(f"not a permutation of 0..n-1: {self.image!r}")
        object.__setattr__(self, "image", img)

    @classmethod
    def from_images(cls, images) -> "Perm":
        """Build from 1-indexed images ``sigma(1), ..., sigma(n)``."""
        return cls(tuple(int(i) - 1 for i in images))

    @classmethod
    def parse(cls, text: str) -> "Perm":
        return cls.from_images(tok for tok in text.replace(" ", "").split(",") if tok)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @property
    def order(self) -> int:
        return len(self.image)

    def images(self) -> tuple[int, ...]:
        """1-indexed images."""
        return tuple(i + 1 for i in self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose(self, other: "Perm") -> "Perm":
        """``self o other``: apply ``other`` first."""
        if self.order != other.order:
            raise ShapeError("composition needs equal orders; use perm_product")
        return Perm(tuple(self.image[j] for j in other.image))

    def inverse(self) -> "Perm":
        inv = [0] * self.order
        for i, j in enumerate(self.image):
            inv[j] = i
        return Perm(tuple(inv))

    def __str__(self) -> str:
        return ",".join(map(str, self.images()))


def perm_matrix(sigma: Perm) -> np.ndarray:
    """Column i is the unit vector at sigma(i)."""
    n = sigma.order
    P = np.zeros((n, n))
    P[list(sigma.image), range(n)] = 1.0
    return P


def embed(sigma: Perm, n: int, side: str = "left") -> Perm:
    """Embed an order-m permutation into order n (m | n).

    The left embedding has matrix ``P (x) I_k``, the right one ``I_k (x) P``.
    """
    m = sigma.order
    if n % m:
        raise ShapeError(f"order {m} does not divide {n}")
    k = n // m
    if side == "left":
        img = [sigma.image[q // k] * k + q % k for q in range(n)]
    elif side == "right":
        img = [(q // m) * m + sigma.image[q % m] for q in range(n)]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return Perm(tuple(img))


def perm_product(sigma: Perm, mu: Perm, side: str = "left") -> Perm:
    t = lcm(sigma.order, mu.order)
    return embed(sigma, t, side).compose(embed(mu, t, side))


def perm_sign(sigma: Perm) -> int:
    seen = [False] * sigma.order
    sign = 1
    for start in range(sigma.order):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = sigma.image[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
