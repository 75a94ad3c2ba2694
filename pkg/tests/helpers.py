"""Random algebra generators shared by the test modules."""

from __future__ import annotations

import random

from tpalg.algebra import SuperAlgebra
from tpalg.exactmath import FieldSpec

GF3 = FieldSpec.gf(3)


def random_algebra(rng: random.Random, dim, field=GF3, density=0.3, graded=False, name="random"):
    """Valid (super)commutative circ plus (super)skew bracket; no TP constraint."""
    parity = [rng.randrange(2) for _ in range(dim)] if graded else [0] * dim

    def coeff():
        if rng.random() >= density:
            return 0
        if field.is_finite:
            return rng.randrange(1, field.p)
        return rng.choice([-2, -1, 1, 2])

    circ, bracket = [], []
    for i in range(dim):
        for j in range(i, dim):
            sym = -1 if parity[i] and parity[j] else 1
            for k in range(dim):
                if parity[k] != (parity[i] + parity[j]) % 2:
                    continue
                c = coeff()
                if c and (i != j or sym == 1):
                    circ.append((i, j, k, c))
                    if i != j:
                        circ.append((j, i, k, sym * c))
                b = coeff()
                if b and (i != j or sym == -1):
                    bracket.append((i, j, k, b))
                    if i != j:
                        bracket.append((j, i, k, -sym * b))
    return SuperAlgebra(name, field, dim, parity, circ, bracket)
