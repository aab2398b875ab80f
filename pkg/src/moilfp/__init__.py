"""Exact branch and bound for maximising a linear fractional function over the
integer efficient set of a multi-objective integer linear fractional program."""
from importlib import resources

from .efficiency import Archive, archive_insert, efficiency_test, ideal_dominated, ideal_point
from .errors import *  # noqa: F401,F403
from .fileformat import dump, load, parse, save
from .model import (
    FractionalObjective,
    Instance,
    Rational,
    dominates,
    eval_criteria,
    eval_fractional,
    validate_instance,
)
from .search import Node, SolveOptions, SolveReport, SolveStatus, solve

__version__ = "1.0.0"


def example_instance() -> Instance:
    """The bundled six-variable worked example."""
    text = resources.files(__package__).joinpath("data/example4.moilfp").read_text()
    return parse(text, name="example4")
