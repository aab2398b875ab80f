"""Exact rational data model: objectives, instances, evaluation, dominance.

All arithmetic uses :data:`Rational`, which is ``gmpy2.mpq`` when gmpy2 is
importable and :class:`fractions.Fraction` otherwise. Both compare and hash
equal to each other, so callers may pass either (or plain ints).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from .errors import (
    DimensionMismatch,
    EmptyDomain,
    LengthMismatch,
    NonIntegralConstraintData,
    NonpositiveDenominator,
    UnboundedDomain,
    ZeroDenominator,
)

try:
    from gmpy2 import mpq as Rational

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction
    HAVE_GMPY2 = False

ZERO = Rational(0)
ONE = Rational(1)

Point = Tuple  # tuple of Rational, one per structural variable
CriterionVector = Tuple  # tuple of Rational, one per criterion

RELATIONS = ("le", "ge", "eq")


def rational(value) -> Rational:
    """Convert an int, Fraction, mpq or ``"p/q"`` string to :data:`Rational`."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty number")
        if "/" in text:
            num, den = text.split("/", 1)
            den = int(den)
            if den == 0:
                raise ZeroDenominator(f"zero denominator in {value!r}")
            return Rational(int(num), den)
        return Rational(int(text))
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def rvec(values) -> tuple:
    return tuple(rational(v) for v in values)


def is_integral(value) -> bool:
    return value.denominator == 1


def floor(value) -> int:
    return int(value.numerator // value.denominator)


def fmt(value) -> str:
    """Exact text form: ``22/7`` or ``-3``."""
    if value.denominator == 1:
        return str(int(value.numerator))
    return f"{int(value.numerator)}/{int(value.denominator)}"


def fmt4(value) -> str:
    """Four-decimal display rendering (round half to even, exact)."""
    return f"{float(round(Fraction(int(value.numerator), int(value.denominator)), 4)):.4f}"


def fmt_point(x) -> str:
    return "(" + ", ".join(fmt(v) for v in x) + ")"


@dataclass(frozen=True)
class FractionalObjective:
    """``(num . x + num_const) / (den . x + den_const)``."""

    num: tuple
    num_const: Rational
    den: tuple
    den_const: Rational

    def __post_init__(self):
        object.__setattr__(self, "num", rvec(self.num))
        object.__setattr__(self, "den", rvec(self.den))
        object.__setattr__(self, "num_const", rational(self.num_const))
        object.__setattr__(self, "den_const", rational(self.den_const))
        if len(self.num) != len(self.den):
            raise DimensionMismatch("numerator and denominator lengths differ")

    @classmethod
    def linear(cls, coeffs, const=0):
        return cls(coeffs, const, [0] * len(coeffs), 1)

    @property
    def n(self) -> int:
        return len(self.num)

    def numerator(self, x) -> Rational:
        return sum((c * v for c, v in zip(self.num, x) if c and v), self.num_const)

    def denominator(self, x) -> Rational:
        return sum((c * v for c, v in zip(self.den, x) if c and v), self.den_const)

    def __call__(self, x) -> Rational:
        return eval_fractional(self, x)


def eval_fractional(obj: FractionalObjective, x) -> Rational:
    if len(x) != obj.n:
        raise LengthMismatch(f"point has {len(x)} coordinates, objective expects {obj.n}")
    den = obj.denominator(x)
    if den == 0:
        raise ZeroDenominator("objective denominator vanishes at the point")
    return Rational(obj.numerator(x)) / den


@dataclass(frozen=True)
class Instance:
    """MOILFP data: ``max z_i(x)`` for all criteria, then ``max psi`` over the efficient set.

    Variables are implicitly integral and nonnegative.
    """

    A: tuple
    b: tuple
    criteria: tuple
    master: FractionalObjective
    relations: tuple = None
    name: str = field(default="", compare=False)
    _std: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        A = tuple(rvec(row) for row in self.A)
        b = rvec(self.b)
        rel = tuple(self.relations) if self.relations is not None else ("le",) * len(A)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "relations", rel)
        object.__setattr__(self, "criteria", tuple(self.criteria))
        n = self.master.n
        if len(b) != len(A) or len(rel) != len(A):
            raise DimensionMismatch("A, b and relations must have one entry per row")
        if any(len(row) != n for row in A):
            raise DimensionMismatch(f"every row of A must have {n} coefficients")
        if any(r not in RELATIONS for r in rel):
            raise DimensionMismatch(f"relations must be drawn from {RELATIONS}")
        if not self.criteria:
            raise DimensionMismatch("at least one criterion is required")
        if any(c.n != n for c in self.criteria):
            raise DimensionMismatch(f"every criterion must have {n} coefficients")

    @property
    def n(self) -> int:
        return self.master.n

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def k(self) -> int:
        return len(self.criteria)

    @property
    def objectives(self) -> tuple:
        """Criteria followed by the master objective (index ``k``)."""
        return self.criteria + (self.master,)

    def standard_rows(self) -> tuple:
        """Constraint rows normalised to ``coeffs . x <= rhs``.

        ``ge`` rows are negated, ``eq`` rows become a ``le``/``ge`` pair.
        """
        if self._std is None:
            rows = []
            for a, b, rel in zip(self.A, self.b, self.relations):
                if rel in ("le", "eq"):
                    rows.append((a, b))
                if rel in ("ge", "eq"):
                    rows.append((tuple(-v for v in a), -b))
            object.__setattr__(self, "_std", tuple(rows))
        return self._std

    def is_feasible(self, x) -> bool:
        if len(x) != self.n or any(v < 0 for v in x):
            return False
        for a, b in self.standard_rows():
            if sum(c * v for c, v in zip(a, x)) > b:
                return False
        return True


def eval_criteria(inst: Instance, x) -> tuple:
    return tuple(eval_fractional(c, x) for c in inst.criteria)


def dominates(a, b) -> bool:
    """Pareto dominance in the maximisation sense."""
    if len(a) != len(b):
        raise LengthMismatch(f"vectors of length {len(a)} and {len(b)}")
    strict = False
    for u, v in zip(a, b):
        if u < v:
            return False
        if u > v:
            strict = True
    return strict


@dataclass(frozen=True)
class ValidationReport:
    sum_bound: Rational  # max of sum(x) over the continuous relaxation
    min_denominators: tuple  # criteria first, then psi


def validate_instance(inst: Instance) -> ValidationReport:
    """Check integrality of A and b, nonemptiness, boundedness, positive denominators.

    Raises the matching :class:`~moilfp.errors.ValidationError` subclass.
    """
    from .simplex import Status, solve_lfp

    for i, (row, rhs) in enumerate(zip(inst.A, inst.b)):
        if not all(is_integral(v) for v in row) or not is_integral(rhs):
            raise NonIntegralConstraintData(f"row {i + 1} has non-integral coefficients")

    rows = inst.standard_rows()
    total = FractionalObjective.linear([1] * inst.n)
    sol = solve_lfp(rows, inst.n, [total])
    if sol.status is Status.INFEASIBLE:
        raise EmptyDomain("the constraint system has no nonnegative solution")
    if sol.status is Status.UNBOUNDED:
        raise UnboundedDomain("the feasible region is unbounded")

    mins = []
    for i, obj in enumerate(inst.objectives):
        neg = FractionalObjective.linear([-v for v in obj.den], -obj.den_const)
        res = solve_lfp(rows, inst.n, [neg])
        lowest = -res.value
        if lowest <= 0:
            raise NonpositiveDenominator(None if i == inst.k else i, lowest)
        mins.append(lowest)
    return ValidationReport(sol.value, tuple(mins))
