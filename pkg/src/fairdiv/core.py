"""Shared data model for fair division of indivisible goods.

An :class:`Instance` holds a non-negative valuation matrix (agents x items),
an :class:`Allocation` holds per-agent item shares.  All arithmetic is done
with exact rationals (``fractions.Fraction``) so that fairness-threshold
comparisons never drift.  Allocations may be partial (column sums <= 1);
an allocation is *complete* when every item is fully assigned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

UtilityVector = tuple[Fraction, ...]

# Absolute tolerance for comparisons against float-derived quantities.
FEASIBILITY_TOL = Fraction(1, 10**9)


class InvalidInstanceError(ValueError):
    """An instance violates a structural invariant (reported with case_id)."""


class InvalidAllocationError(ValueError):
    """An allocation violates a structural invariant or does not match the instance."""


def as_fraction(value) -> Fraction:
    """Convert ints, floats, strings like '3/7' and Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)  # exact binary expansion, no rounding
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def _freeze_matrix(rows: Iterable[Iterable]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(as_fraction(v) for v in row) for row in rows)


@dataclass(frozen=True)
class Instance:
    """One fair-division case: agents, items, and a valuation matrix.

    ``valuations[i][j]`` is the (non-negative, additive) value of item ``j``
    to agent ``i``.  Instances are immutable; algorithms never mutate them.
    """

    case_id: str
    agents: tuple[str, ...]
    items: tuple[str, ...]
    valuations: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_lists(cls, case_id: str, agents: Sequence[str], items: Sequence[str],
                   valuations: Sequence[Sequence]) -> "Instance":
        return cls(case_id, tuple(agents), tuple(items), _freeze_matrix(valuations))

    @classmethod
    def from_values(cls, valuations: Sequence[Sequence], case_id: str = "case") -> "Instance":
        """Build an instance from a bare matrix, generating agent/item labels."""
        matrix = _freeze_matrix(valuations)
        n = len(matrix)
        m = len(matrix[0]) if matrix else 0
        return cls(case_id,
                   tuple(f"agent{i}" for i in range(n)),
                   tuple(f"item{j}" for j in range(m)),
                   matrix)

    @property
    def n_agents(self) -> int:
        return len(self.agents)

    @property
    def n_items(self) -> int:
        return len(self.items)

    def total_value(self, agent: int) -> Fraction:
        return sum(self.valuations[agent], Fraction(0))


@dataclass(frozen=True)
class Allocation:
    """Per-agent item shares; ``shares[i][j]`` is the fraction of item j held by agent i.

    ``integral`` declares that every share is exactly 0 or 1.  Column sums may
    be below 1 (partial allocation); :meth:`is_complete` checks for exact
    column sums of 1.
    """

    shares: tuple[tuple[Fraction, ...], ...]
    integral: bool

    @classmethod
    def from_matrix(cls, shares: Sequence[Sequence], integral: bool = False) -> "Allocation":
        return cls(_freeze_matrix(shares), integral)

    @classmethod
    def from_bundles(cls, n_agents: int, n_items: int,
                     bundles: dict[int, Iterable[int]]) -> "Allocation":
        """Integral allocation from agent -> item-index bundles (items may be left out)."""
        rows = [[Fraction(0)] * n_items for _ in range(n_agents)]
        for agent, items in bundles.items():
            for j in items:
                rows[agent][j] = Fraction(1)
        return cls(tuple(tuple(row) for row in rows), integral=True)

    @classmethod
    def empty(cls, n_agents: int, n_items: int) -> "Allocation":
        return cls(tuple(tuple(Fraction(0) for _ in range(n_items))
                         for _ in range(n_agents)), integral=True)

    @property
    def n_agents(self) -> int:
        return len(self.shares)

    @property
    def n_items(self) -> int:
        return len(self.shares[0]) if self.shares else 0

    def column_sums(self) -> tuple[Fraction, ...]:
        if not self.shares:
            return ()
        return tuple(sum(col, Fraction(0)) for col in zip(*self.shares))

    def is_complete(self) -> bool:
        return all(s == 1 for s in self.column_sums())

    def bundle(self, agent: int) -> tuple[int, ...]:
        """Item indices fully held by an agent (meaningful for integral allocations)."""
        return tuple(j for j, s in enumerate(self.shares[agent]) if s == 1)


def validate_instance(inst: Instance) -> Instance:
    """Check all Instance invariants; return the instance unchanged or raise.

    Errors name the case_id and the offending coordinate so a 730-case batch
    failure is traceable to one record.
    """
    n, m = len(inst.agents), len(inst.items)
    if n < 1:
        raise InvalidInstanceError(f"{inst.case_id}: needs at least one agent")
    if len(inst.valuations) != n:
        raise InvalidInstanceError(
            f"{inst.case_id}: dimension mismatch: {len(inst.valuations)} valuation rows "
            f"for {n} agents")
    for i, row in enumerate(inst.valuations):
        if len(row) != m:
            raise InvalidInstanceError(
                f"{inst.case_id}: dimension mismatch: row {i} has {len(row)} entries "
                f"for {m} items")
        for j, v in enumerate(row):
            if v < 0:
                raise InvalidInstanceError(
                    f"{inst.case_id}: negative valuation at ({i},{j})")
    if len(set(inst.agents)) != n:
        raise InvalidInstanceError(f"{inst.case_id}: duplicate agent label")
    if len(set(inst.items)) != m:
        raise InvalidInstanceError(f"{inst.case_id}: duplicate item label")
    return inst


def check_allocation(inst: Instance, alloc: Allocation) -> Allocation:
    """Check allocation invariants against an instance; raise on violation."""
    if alloc.n_agents != inst.n_agents or (inst.n_items and alloc.n_items != inst.n_items):
        raise InvalidAllocationError(
            f"{inst.case_id}: allocation is {alloc.n_agents}x{alloc.n_items}, "
            f"instance is {inst.n_agents}x{inst.n_items}")
    for i, row in enumerate(alloc.shares):
        for j, s in enumerate(row):
            if s < 0 or s > 1:
                raise InvalidAllocationError(
                    f"{inst.case_id}: share out of [0,1] at ({i},{j})")
            if alloc.integral and s not in (0, 1):
                raise InvalidAllocationError(
                    f"{inst.case_id}: non-integral share at ({i},{j})")
    for j, total in enumerate(alloc.column_sums()):
        if total > 1:
            raise InvalidAllocationError(
                f"{inst.case_id}: item {j} over-allocated (column sum {total})")
    return alloc


def utilities(inst: Instance, alloc: Allocation) -> UtilityVector:
    """Per-agent utility: the inner product of shares and valuations, exact.

    >>> inst = Instance.from_values([[3, 7], [4, 6]])
    >>> alloc = Allocation.from_matrix([[0, 1], [1, 0]], integral=True)
    >>> utilities(inst, alloc)
    (Fraction(7, 1), Fraction(4, 1))
    """
    check_allocation(inst, alloc)
    return tuple(
        sum((s * v for s, v in zip(alloc.shares[i], inst.valuations[i])), Fraction(0))
        for i in range(inst.n_agents))


def sum_utility(u: Sequence[Fraction]) -> Fraction:
    if len(u) == 0:
        raise ValueError("empty utility vector")
    return sum(u, Fraction(0))


def min_utility(u: Sequence[Fraction]) -> Fraction:
    if len(u) == 0:
        raise ValueError("empty utility vector")
    return min(u)
