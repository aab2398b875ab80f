import pytest

from moilfp.fileformat import load
from moilfp.generator import (
    GenSpec,
    SplitMix64,
    generate,
    generate_one,
    write,
)
from moilfp.model import validate_instance


def test_splitmix64_reference_values():
    # Reference test vector for seed 1234567.
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821,
    ]


def test_uniform_int_bounds_and_coverage():
    rng = SplitMix64(7)
    draws = [rng.uniform_int(-3, 3) for _ in range(5000)]
    assert set(draws) == set(range(-3, 4))


def test_spec_validation():
    with pytest.raises(ValueError):
        GenSpec(3, 2, 1, 0)
    with pytest.raises(ValueError):
        GenSpec(0, 2, 2, 0)
    with pytest.raises(ValueError):
        GenSpec(3, 2, 2, -1)
    with pytest.raises(ValueError):
        GenSpec(3, 2, 2, 0, 0)


def test_shapes_and_names():
    insts = generate(GenSpec(30, 10, 2, 99, 10))
    assert len(insts) == 10
    assert all((i.n, i.m, i.k) == (30, 10, 2) for i in insts)
    assert [i.name for i in insts] == [f"30_10_2_99_{j}" for j in range(10)]
    assert all(rel == "le" for i in insts for rel in i.relations)


def test_instances_independent_of_count():
    assert generate(GenSpec(4, 2, 2, 5, 3))[2] == generate_one(GenSpec(4, 2, 2, 5, 1), 2)


def test_generated_instances_validate():
    for inst in generate(GenSpec(6, 3, 2, 11, 10)):
        validate_instance(inst)


def test_write_and_reload(tmp_path):
    spec = GenSpec(5, 3, 3, 42, 4)
    paths = write(spec, tmp_path)
    assert [p.name for p in paths] == [f"5_3_3_42_{j}.moilfp" for j in range(4)]
    assert [load(p) for p in paths] == generate(spec)
