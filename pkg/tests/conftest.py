import random

import pytest

from ldicodes.linalg import nullspace_mod, rank_mod
from ldicodes.stabilizer import StabilizerCode

ACCEPTANCE_LINES: list[str] = []


def random_code(rng: random.Random, n: int, q: int, r: int | None = None) -> StabilizerCode:
    """Random stabilizer code: each new row is drawn from the symplectic
    complement of the rows so far, kept if independent."""
    r = rng.randint(1, n) if r is None else r
    rows: list[tuple[int, ...]] = []
    while len(rows) < r:
        constraints = [tuple(-v for v in s[n:]) + tuple(s[:n]) for s in rows]
        basis = nullspace_mod(constraints, 2 * n, q) if constraints else [
            [int(i == j) for j in range(2 * n)] for i in range(2 * n)
        ]
        coeffs = [rng.randrange(q) for _ in basis]
        v = tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) % q for j in range(2 * n))
        if any(v) and rank_mod(rows + [v], q) == len(rows) + 1:
            rows.append(v)
    return StabilizerCode(tuple(rows), n, q)


def random_css_code(rng: random.Random, n: int, q: int, min_k: int = 1) -> StabilizerCode | None:
    rx = rng.randint(1, n - min_k)
    xs = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(rx)]
    if rank_mod(xs, q) < rx:
        return None
    kernel = nullspace_mod(xs, n, q)
    rz = rng.randint(0, n - rx - min_k)
    zs: list[tuple[int, ...]] = []
    for _ in range(50):
        if len(zs) == rz:
            break
        coeffs = [rng.randrange(q) for _ in kernel]
        v = tuple(sum(c * b[j] for c, b in zip(coeffs, kernel)) % q for j in range(n))
        if any(v) and rank_mod(zs + [v], q) == len(zs) + 1:
            zs.append(v)
    if len(zs) < rz:
        return None
    zero = (0,) * n
    return StabilizerCode(tuple(x + zero for x in xs) + tuple(zero + z for z in zs), n, q)


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
