"""Seeded random instances.

PRNG: SplitMix64. State ``s`` is a 64-bit word initialised to the seed; each
draw does ``s += 0x9E3779B97F4A7C15`` and returns
``z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31)``,
all modulo ``2**64``. A uniform integer in ``[lo, hi]`` takes ``span = hi - lo + 1``
and rejects draws ``>= 2**64 - (2**64 % span)``, then returns ``lo + draw % span``.

Instance ``index`` (0-based) of a spec uses its own stream seeded with
``splitmix64_mix(seed + index)`` so instances are independent of ``count``.
Draw order: psi numerator (n coefficients, then constant), psi denominator,
then for each criterion its numerator and denominator likewise, then ``A``
row by row, then ``b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .fileformat import save
from .model import FractionalObjective, Instance

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

OBJ_COEFF = (1, 99)
NUM_CONST = (-10, 20)
DEN_CONST = (1, 20)
A_ENTRY = (1, 30)
B_ENTRY = (50, 100)


def splitmix64_mix(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK
        return splitmix64_mix(self.state)

    def uniform_int(self, lo: int, hi: int) -> int:
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            v = self.next()
            if v < limit:
                return lo + v % span


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    k: int
    seed: int
    count: int = 1

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.k < 2 or self.count < 1:
            raise ValueError("need n >= 1, m >= 1, k >= 2, count >= 1")
        if not 0 <= self.seed <= MASK:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def name(self, index: int) -> str:
        return f"{self.n}_{self.m}_{self.k}_{self.seed}_{index}"


def _objective(rng: SplitMix64, n: int) -> FractionalObjective:
    num = [rng.uniform_int(*OBJ_COEFF) for _ in range(n)]
    alpha = rng.uniform_int(*NUM_CONST)
    den = [rng.uniform_int(*OBJ_COEFF) for _ in range(n)]
    beta = rng.uniform_int(*DEN_CONST)
    return FractionalObjective(num, alpha, den, beta)


def generate_one(spec: GenSpec, index: int) -> Instance:
    rng = SplitMix64(splitmix64_mix(spec.seed + index))
    master = _objective(rng, spec.n)
    criteria = [_objective(rng, spec.n) for _ in range(spec.k)]
    A = [[rng.uniform_int(*A_ENTRY) for _ in range(spec.n)] for _ in range(spec.m)]
    b = [rng.uniform_int(*B_ENTRY) for _ in range(spec.m)]
    return Instance(A, b, criteria, master, name=spec.name(index))


def generate(spec: GenSpec) -> list:
    return [generate_one(spec, i) for i in range(spec.count)]


def write(spec: GenSpec, directory) -> list:
    """Generate and save ``{n}_{m}_{k}_{seed}_{index}.moilfp`` files; returns their paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for inst in generate(spec):
        path = directory / f"{inst.name}.moilfp"
        save(inst, path)
        paths.append(path)
    return paths
