"""Shared helpers: parse shortcuts, golden-file loading, random generators."""

import json
from pathlib import Path

from stmat import Element, Matrix, Vector, ZERO, ghost, tangible
from stmat.stability import is_quasi_identity

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "src" / "stmat" / "golden"
FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"


def E(token):
    return Element.parse(str(token))


def M(rows):
    return Matrix.parse([[str(t) for t in row] for row in rows])


def V(tokens):
    return Vector.parse([str(t) for t in tokens])


def golden(name):
    with open(GOLDEN_DIR / name) as fh:
        return Matrix.from_json_dict(json.load(fh))


def rand_element(rng, lo=-5, hi=5, p_zero=0.15, p_ghost=0.3):
    if rng.random() < p_zero:
        return ZERO
    v = rng.randint(lo, hi)
    return ghost(v) if rng.random() < p_ghost else tangible(v)


def rand_matrix(rng, n, **kw):
    return Matrix([[rand_element(rng, **kw) for _ in range(n)] for _ in range(n)])


def rand_tangible_vector(rng, n, lo=-5, hi=5):
    return Vector([tangible(rng.randint(lo, hi)) for _ in range(n)])


def rand_quasi_identity(rng, n, zero_prob=0.3):
    """Random quasi-identity: star-closure of strictly negative ghosts."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(tangible(0))
            elif rng.random() < zero_prob:
                row.append(ZERO)
            else:
                row.append(ghost(rng.randint(-5, -1)))
        rows.append(row)
    J = Matrix(rows) ** (2 * n)
    assert is_quasi_identity(J)
    return J


def rand_semi_idempotent(rng, n, zero_prob=0.3):
    """beta * (quasi-identity) for a random tangible beta."""
    return rand_quasi_identity(rng, n, zero_prob).scale(tangible(rng.randint(-3, 4)))


def rand_stable_input(rng, sizes, zero_prob=0.35):
    """Full block triangular matrix with semi-idempotent irreducible blocks.

    Off-diagonal blocks are either entirely ZERO or entirely finite, so a
    path through the block structure never loses support; diagonal blocks
    are irreducible so they coincide with the SCCs.
    """
    blocks = [rand_semi_idempotent(rng, s, zero_prob=0.0) for s in sizes]
    n = sum(sizes)
    starts = []
    pos = 0
    for s in sizes:
        starts.append(pos)
        pos += s
    rows = [[ZERO] * n for _ in range(n)]
    for bi, B in enumerate(blocks):
        for r in range(B.n):
            for c in range(B.n):
                rows[starts[bi] + r][starts[bi] + c] = B.entry(r, c)
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            if rng.random() < zero_prob:
                continue
            for r in range(sizes[i]):
                for c in range(sizes[j]):
                    v = rng.randint(-4, 4)
                    rows[starts[i] + r][starts[j] + c] = (
                        ghost(v) if rng.random() < 0.2 else tangible(v))
    return Matrix(rows), blocks, starts
