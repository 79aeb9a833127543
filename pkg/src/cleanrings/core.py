"""Finite unital rings given by explicit operation tables over element indices.

Elements of a ring of order n are the integers 0..n-1, and index 0 is always
the additive identity. A ring is described by an n x n addition table, an
n x n multiplication table, the index of the multiplicative identity, and an
optional negation table (derived from the addition table when absent).

Validation is exhaustive: every axiom is checked over all element triples,
which is O(n^3) and therefore guarded by a hard size cap (default 256,
configurable per call or through the CLEANRINGS_SIZE_CAP environment
variable). Oversized tables are rejected outright; axiom checks are never
silently skipped.

Rings are immutable value objects: tables are locked after construction and
equality/hashing is structural (order, identity index, tables), ignoring the
display label.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

DEFAULT_SIZE_CAP = 256
SIZE_CAP_ENV = "CLEANRINGS_SIZE_CAP"


class TableFormatError(ValueError):
    """Candidate tables are structurally malformed (shape, range, or type)."""


class SizeCapError(ValueError):
    """The requested ring exceeds the exhaustive-validation size cap."""


class RingValidationError(ValueError):
    """Candidate tables violate at least one ring axiom."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        axioms = ", ".join(sorted({v.axiom for v in report.violations}))
        super().__init__(f"ring axioms violated: {axioms}")


def size_cap(override: int | None = None) -> int:
    """Effective validation cap: explicit override, else env var, else default."""
    if override is not None:
        return int(override)
    env = os.environ.get(SIZE_CAP_ENV)
    return int(env) if env else DEFAULT_SIZE_CAP


@dataclass(frozen=True)
class Violation:
    """One violated axiom with a witness tuple of element indices."""

    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    trivial: bool
    violations: tuple[Violation, ...]

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}


def _as_table(table, shape: tuple[int, ...], order: int, name: str) -> np.ndarray:
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise TableFormatError(f"{name} table is not an integer table: {exc}") from None
    if arr.shape != shape:
        raise TableFormatError(f"{name} table has shape {arr.shape}, expected {shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= order):
        raise TableFormatError(f"{name} table entries must lie in 0..{order - 1}")
    arr = arr.astype(np.int32)
    arr.setflags(write=False)
    return arr


def _abelian_group_violations(add: np.ndarray) -> tuple[list[Violation], np.ndarray | None]:
    """Check (indices, add) is an abelian group with identity 0.

    Returns the violations and the derived negation table (None when some
    element has no additive inverse).
    """
    n = add.shape[0]
    idx = np.arange(n)
    out: list[Violation] = []

    if not np.array_equal(add[0], idx):
        bad = int(np.flatnonzero(add[0] != idx)[0])
        out.append(Violation("add-identity", (bad,)))
    if not np.array_equal(add, add.T):
        i, j = map(int, np.argwhere(add != add.T)[0])
        out.append(Violation("add-commutative", (i, j)))

    has_inv = (add == 0).any(axis=1)
    neg: np.ndarray | None = None
    if has_inv.all():
        neg = (add == 0).argmax(axis=1).astype(np.int32)
    else:
        out.append(Violation("add-inverse", (int(np.flatnonzero(~has_inv)[0]),)))

    for i in range(n):
        lhs = add[add[i, :], :]
        rhs = add[i, add]
        if not np.array_equal(lhs, rhs):
            j, k = map(int, np.argwhere(lhs != rhs)[0])
            out.append(Violation("add-associative", (i, j, k)))
            break
    return out, neg


def validate_ring(
    order: int,
    one: int,
    add_table,
    mul_table,
    neg_table=None,
    *,
    cap: int | None = None,
) -> ValidationReport:
    """Exhaustively check the ring axioms for candidate tables.

    Structural problems (bad shapes, out-of-range entries, oversize) raise;
    axiom failures are collected into the report, at least one witness per
    violated axiom. The one-element (trivial) ring is legal and flagged.
    """
    if not isinstance(order, int) or order <= 0:
        raise TableFormatError(f"order must be a positive integer, got {order!r}")
    limit = size_cap(cap)
    if order > limit:
        raise SizeCapError(
            f"order {order} exceeds the exhaustive-validation cap {limit}; "
            f"raise the cap explicitly to accept the O(n^3) cost"
        )
    if not isinstance(one, int) or not (0 <= one < order):
        raise TableFormatError(f"one must be an element index in 0..{order - 1}")
    add = _as_table(add_table, (order, order), order, "add")
    mul = _as_table(mul_table, (order, order), order, "mul")

    violations, neg = _abelian_group_violations(add)
    if neg_table is not None:
        given = _as_table(neg_table, (order,), order, "neg")
        if (add[np.arange(order), given] != 0).any():
            bad = int(np.flatnonzero(add[np.arange(order), given] != 0)[0])
            violations.append(Violation("add-inverse", (bad,)))

    idx = np.arange(order)
    if not (np.array_equal(mul[one], idx) and np.array_equal(mul[:, one], idx)):
        row_bad = np.flatnonzero(mul[one] != idx)
        col_bad = np.flatnonzero(mul[:, one] != idx)
        bad = int(row_bad[0]) if row_bad.size else int(col_bad[0])
        violations.append(Violation("one-identity", (bad,)))

    mul_assoc_done = dist_left_done = dist_right_done = False
    for i in range(order):
        if not mul_assoc_done:
            lhs = mul[mul[i, :], :]
            rhs = mul[i, mul]
            if not np.array_equal(lhs, rhs):
                j, k = map(int, np.argwhere(lhs != rhs)[0])
                violations.append(Violation("mul-associative", (i, j, k)))
                mul_assoc_done = True
        if not dist_left_done:
            lhs = mul[i, add]
            rhs = add[np.ix_(mul[i, :], mul[i, :])]
            if not np.array_equal(lhs, rhs):
                j, k = map(int, np.argwhere(lhs != rhs)[0])
                violations.append(Violation("left-distributive", (i, j, k)))
                dist_left_done = True
        if not dist_right_done:
            lhs = mul[add, i]
            rhs = add[np.ix_(mul[:, i], mul[:, i])]
            if not np.array_equal(lhs, rhs):
                j, k = map(int, np.argwhere(lhs != rhs)[0])
                violations.append(Violation("right-distributive", (j, k, i)))
                dist_right_done = True
        if mul_assoc_done and dist_left_done and dist_right_done:
            break

    return ValidationReport(
        ok=not violations,
        trivial=(order == 1),
        violations=tuple(violations),
    )


class FiniteRing:
    """A validated finite unital ring over element indices 0..order-1.

    Construction validates exhaustively and raises RingValidationError on any
    axiom failure, so every live FiniteRing is a genuine ring. The trivial
    one-element ring (where 0 = 1) is accepted and flagged via is_trivial.
    """

    def __init__(
        self,
        order: int,
        one: int,
        add_table,
        mul_table,
        neg_table=None,
        *,
        label: str = "",
        provenance: dict | None = None,
        decoder: Callable[[int], str] | None = None,
        cap: int | None = None,
    ):
        report = validate_ring(order, one, add_table, mul_table, neg_table, cap=cap)
        if not report.ok:
            raise RingValidationError(report)
        self.order = order
        self.one = one
        self.label = label or f"ring{order}"
        self.add_table = _as_table(add_table, (order, order), order, "add")
        self.mul_table = _as_table(mul_table, (order, order), order, "mul")
        neg = (self.add_table == 0).argmax(axis=1).astype(np.int32)
        neg.setflags(write=False)
        self.neg_table = neg
        self.provenance = provenance
        self.decoder = decoder
        self.report = report
        self._hash: int | None = None

    # -- basic structure ---------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def zero(self) -> int:
        return 0

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def add(self, i: int, j: int) -> int:
        return int(self.add_table[i, j])

    def mul(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def neg(self, i: int) -> int:
        return int(self.neg_table[i])

    def sub(self, i: int, j: int) -> int:
        return int(self.add_table[i, self.neg_table[j]])

    def pow(self, i: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative powers are not defined; use inverse()")
        acc = self.one
        for _ in range(k):
            acc = int(self.mul_table[acc, i])
        return acc

    def sum_of(self, items: Iterable[int]) -> int:
        acc = 0
        for x in items:
            acc = int(self.add_table[acc, x])
        return acc

    def describe(self, i: int) -> str:
        """Human-readable element rendering (falls back to the raw index)."""
        return self.decoder(i) if self.decoder is not None else str(i)

    # -- units -------------------------------------------------------------

    @cached_property
    def _unit_data(self) -> tuple[np.ndarray, np.ndarray]:
        eq = self.mul_table == self.one
        two_sided = eq & eq.T
        mask = two_sided.any(axis=1)
        inv = np.where(mask, two_sided.argmax(axis=1), -1).astype(np.int32)
        return mask, inv

    @property
    def units_mask(self) -> np.ndarray:
        return self._unit_data[0]

    @cached_property
    def units(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.units_mask))

    def is_unit(self, i: int) -> bool:
        return bool(self.units_mask[i])

    def inverse(self, i: int) -> int | None:
        j = int(self._unit_data[1][i])
        return j if j >= 0 else None

    # -- idempotents, center, nilpotents ------------------------------------

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        diag = self.mul_table.diagonal()
        return tuple(int(x) for x in np.flatnonzero(diag == np.arange(self.order)))

    def is_idempotent(self, i: int) -> bool:
        return int(self.mul_table[i, i]) == i

    def is_central(self, i: int) -> bool:
        return bool(np.array_equal(self.mul_table[i, :], self.mul_table[:, i]))

    @cached_property
    def center(self) -> tuple[int, ...]:
        return tuple(i for i in self.elements if self.is_central(i))

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul_table, self.mul_table.T))

    @cached_property
    def has_nonzero_nilpotents(self) -> bool:
        # powers computed in lockstep: p[i] = i^(k+1); nilpotency index <= order
        idx = np.arange(self.order)
        p = idx.copy()
        for _ in range(self.order):
            p = self.mul_table[p, idx]
            if (p[1:] == 0).any():
                return True
        return False

    def is_complete_orthogonal(self, es: Sequence[int]) -> bool:
        """True when es is a pairwise-orthogonal idempotent family summing to 1."""
        es = list(es)
        if not es:
            return False
        for e in es:
            if not self.is_idempotent(e):
                return False
        for a in range(len(es)):
            for b in range(len(es)):
                if a != b and (self.mul(es[a], es[b]) != 0 or self.mul(es[b], es[a]) != 0):
                    return False
        return self.sum_of(es) == self.one

    def left_multiples(self, y: int) -> np.ndarray:
        """The set R*y = {r*y : r in R} as a sorted index array."""
        return np.unique(self.mul_table[:, y])

    # -- Jacobson radical ----------------------------------------------------

    @cached_property
    def jacobson_radical(self) -> tuple[int, ...]:
        """J(R) via quasi-regularity: {x : 1 - a*x is a unit for all a}.

        The one-sided test suffices in a finite ring, but the result is
        cross-checked against the two-sided variant, the unit translate
        property 1 + J in U(R), idempotent-freeness, and two-sided ideal
        closure. Any cross-check failure is an internal error.
        """
        add, mul, neg = self.add_table, self.mul_table, self.neg_table
        units = self.units_mask
        members = []
        for x in self.elements:
            ax = mul[:, x]
            if units[add[self.one, neg[ax]]].all():
                members.append(x)
        self._cross_check_radical(members)
        return tuple(members)

    def _cross_check_radical(self, members: list[int]) -> None:
        add, mul, neg = self.add_table, self.mul_table, self.neg_table
        units = self.units_mask
        one = self.one
        for x in members:
            axb = mul[mul[:, x], :]
            if not units[add[one, neg[axb]]].all():
                raise RuntimeError(f"radical cross-check failed: 1-a*{x}*b not all units")
        m = np.array(members, dtype=np.int32)
        if not units[add[one, m]].all():
            raise RuntimeError("radical cross-check failed: 1 + J not all units")
        for x in members:
            if x != 0 and self.is_idempotent(x):
                raise RuntimeError(f"radical cross-check failed: nonzero idempotent {x} in J")
        mask = np.zeros(self.order, dtype=bool)
        mask[m] = True
        if m.size:
            if not mask[add[np.ix_(m, m)]].all():
                raise RuntimeError("radical cross-check failed: J not additively closed")
            if not (mask[mul[:, m]].all() and mask[mul[m, :]].all()):
                raise RuntimeError("radical cross-check failed: J not a two-sided ideal")

    # -- value-object protocol ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (
            self.order == other.order
            and self.one == other.one
            and np.array_equal(self.add_table, other.add_table)
            and np.array_equal(self.mul_table, other.mul_table)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.order, self.one, self.add_table.tobytes(), self.mul_table.tobytes())
            )
        return self._hash

    def __repr__(self) -> str:
        return f"<FiniteRing {self.label} order={self.order}>"

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        record = {
            "label": self.label,
            "order": self.order,
            "one": self.one,
            "add_table": [[int(v) for v in row] for row in self.add_table],
            "mul_table": [[int(v) for v in row] for row in self.mul_table],
        }
        if self.provenance is not None:
            record["construction"] = self.provenance
        return record

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(record: dict, *, cap: int | None = None) -> "FiniteRing":
        return FiniteRing(
            int(record["order"]),
            int(record["one"]),
            record["add_table"],
            record["mul_table"],
            record.get("neg_table"),
            label=record.get("label", ""),
            provenance=record.get("construction"),
            cap=cap,
        )

    @staticmethod
    def from_json(text: str, *, cap: int | None = None) -> "FiniteRing":
        return FiniteRing.from_json_dict(json.loads(text), cap=cap)
