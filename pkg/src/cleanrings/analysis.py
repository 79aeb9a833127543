"""Additive decompositions of ring elements into units plus or minus
idempotents, and the derived element, ideal, and ring classifications.

An element x is clean when x = u + e for a unit u and idempotent e, and
weakly clean when x = u + e or x = u - e. It is uniquely weakly clean when
exactly one idempotent admits a decomposition of either sign. An ideal has
one of these properties when every one of its elements does; verdicts record
only counts on success and a full attempted-decomposition trace for the
first failing element, so passing scans stay cheap to serialize.

The weakly exchange test for x asks for an idempotent e with e - x in
R(x - x^2) or e + x in R(x + x^2). Restricting candidate idempotents to the
ideal under test ("strict") or allowing all of them ("relaxed") selects the
same elements whenever x itself lies in the ideal: a qualifying idempotent
satisfies e = x + r(x - x^2) or e = -x + r(x + x^2), and every term on the
right already belongs to the ideal. Both modes exist so that this
equivalence is itself machine-checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .core import FiniteRing
from .ideals import IdealSet, full_ideal

Sign = Literal[1, -1]


@dataclass(frozen=True)
class Decomposition:
    """x = unit + sign * idempotent, with sign +1 (clean) or -1 (co-clean)."""

    sign: int
    idempotent: int
    unit: int

    def to_json_dict(self) -> dict:
        return {"sign": self.sign, "idempotent": self.idempotent, "unit": self.unit}


@dataclass(frozen=True)
class CleanClass:
    """Full decomposition census for one element."""

    element: int
    decompositions: tuple[Decomposition, ...]

    @property
    def is_clean(self) -> bool:
        return any(d.sign == 1 for d in self.decompositions)

    @property
    def is_weakly_clean(self) -> bool:
        return bool(self.decompositions)

    @property
    def is_uniquely_weakly_clean(self) -> bool:
        return len({d.idempotent for d in self.decompositions}) == 1

    def to_json_dict(self) -> dict:
        return {
            "element": self.element,
            "clean": self.is_clean,
            "weakly_clean": self.is_weakly_clean,
            "uniquely_weakly_clean": self.is_uniquely_weakly_clean,
            "decompositions": [d.to_json_dict() for d in self.decompositions],
        }


def decompositions(ring: FiniteRing, x: int) -> tuple[Decomposition, ...]:
    """Every decomposition x = u + e and x = u - e, sign +1 first, e ascending.

    A pair that works with both signs (only possible when e + e = 0 forces
    u to coincide) is listed once per sign; ordering is deterministic.
    """
    idem = np.array(ring.idempotents, dtype=np.int32)
    units = ring.units_mask
    out: list[Decomposition] = []
    u_plus = ring.add_table[x, ring.neg_table[idem]]
    for e, u in zip(idem, u_plus):
        if units[u]:
            out.append(Decomposition(1, int(e), int(u)))
    u_minus = ring.add_table[x, idem]
    for e, u in zip(idem, u_minus):
        if units[u]:
            out.append(Decomposition(-1, int(e), int(u)))
    return tuple(out)


def clean_class(ring: FiniteRing, x: int) -> CleanClass:
    return CleanClass(x, decompositions(ring, x))


def is_clean_element(ring: FiniteRing, x: int) -> bool:
    idem = np.array(ring.idempotents, dtype=np.int32)
    return bool(ring.units_mask[ring.add_table[x, ring.neg_table[idem]]].any())


def is_weakly_clean_element(ring: FiniteRing, x: int) -> bool:
    idem = np.array(ring.idempotents, dtype=np.int32)
    units = ring.units_mask
    return bool(
        units[ring.add_table[x, ring.neg_table[idem]]].any()
        or units[ring.add_table[x, idem]].any()
    )


def is_uniquely_weakly_clean_element(ring: FiniteRing, x: int) -> bool:
    idem = np.array(ring.idempotents, dtype=np.int32)
    units = ring.units_mask
    ok = units[ring.add_table[x, ring.neg_table[idem]]] | units[ring.add_table[x, idem]]
    return int(ok.sum()) == 1


def is_weakly_exchange_element(
    ring: FiniteRing,
    x: int,
    *,
    ideal: IdealSet | None = None,
    mode: Literal["strict", "relaxed"] = "relaxed",
) -> bool:
    """True when some idempotent e has e - x in R(x - x^2) or e + x in R(x + x^2).

    In strict mode the idempotent must additionally belong to the given ideal.
    """
    if mode == "strict":
        if ideal is None:
            raise ValueError("strict mode requires the ideal")
        allowed = set(ideal.members)
        idem = np.array([e for e in ring.idempotents if e in allowed], dtype=np.int32)
    else:
        idem = np.array(ring.idempotents, dtype=np.int32)
    if idem.size == 0:
        return False
    x2 = ring.mul(x, x)
    target_minus = np.zeros(ring.order, dtype=bool)
    target_minus[ring.left_multiples(ring.sub(x, x2))] = True
    target_plus = np.zeros(ring.order, dtype=bool)
    target_plus[ring.left_multiples(ring.add(x, x2))] = True
    e_minus_x = ring.add_table[idem, ring.neg_table[x]]
    e_plus_x = ring.add_table[idem, x]
    return bool((target_minus[e_minus_x] | target_plus[e_plus_x]).any())


# -- ideal-level verdicts -------------------------------------------------------


@dataclass(frozen=True)
class IdealVerdict:
    """Outcome of scanning every element of an ideal for one property.

    On success only the element count is kept. On failure the first failing
    element is recorded together with the attempted decompositions (or probed
    idempotents, for the exchange property) so the refusal is auditable.
    """

    property_name: str
    ideal_description: str
    ok: bool
    checked: int
    failing: int | None = None
    trace: tuple = ()
    detail: str = ""

    def to_json_dict(self) -> dict:
        record = {
            "property": self.property_name,
            "ideal": self.ideal_description,
            "ok": self.ok,
            "checked": self.checked,
        }
        if not self.ok:
            record["failing_element"] = self.failing
            record["detail"] = self.detail
            record["trace"] = [
                t.to_json_dict() if hasattr(t, "to_json_dict") else t for t in self.trace
            ]
        return record


def _scan_masks(ring: FiniteRing, members: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """(plus_ok, minus_ok) boolean matrices indexed [member, idempotent]."""
    idem = np.array(ring.idempotents, dtype=np.int32)
    m = np.array(members, dtype=np.int32)
    units = ring.units_mask
    plus_ok = units[ring.add_table[np.ix_(m, ring.neg_table[idem])]]
    minus_ok = units[ring.add_table[np.ix_(m, idem)]]
    return plus_ok, minus_ok


def ideal_is_clean(ring: FiniteRing, ideal: IdealSet) -> IdealVerdict:
    plus_ok, _ = _scan_masks(ring, ideal.members)
    per_element = plus_ok.any(axis=1)
    if per_element.all():
        return IdealVerdict("clean", ideal.describe(), True, len(ideal))
    bad = int(np.flatnonzero(~per_element)[0])
    x = ideal.members[bad]
    return IdealVerdict(
        "clean",
        ideal.describe(),
        False,
        len(ideal),
        failing=x,
        trace=_failure_trace(ring, x),
        detail=f"element {x} admits no unit-plus-idempotent decomposition",
    )


def ideal_is_weakly_clean(ring: FiniteRing, ideal: IdealSet) -> IdealVerdict:
    plus_ok, minus_ok = _scan_masks(ring, ideal.members)
    per_element = (plus_ok | minus_ok).any(axis=1)
    if per_element.all():
        return IdealVerdict("weakly-clean", ideal.describe(), True, len(ideal))
    bad = int(np.flatnonzero(~per_element)[0])
    x = ideal.members[bad]
    return IdealVerdict(
        "weakly-clean",
        ideal.describe(),
        False,
        len(ideal),
        failing=x,
        trace=_failure_trace(ring, x),
        detail=f"element {x} admits no decomposition of either sign",
    )


def ideal_is_uniquely_weakly_clean(ring: FiniteRing, ideal: IdealSet) -> IdealVerdict:
    plus_ok, minus_ok = _scan_masks(ring, ideal.members)
    counts = (plus_ok | minus_ok).sum(axis=1)
    if (counts == 1).all():
        return IdealVerdict("uniquely-weakly-clean", ideal.describe(), True, len(ideal))
    bad = int(np.flatnonzero(counts != 1)[0])
    x = ideal.members[bad]
    found = decompositions(ring, x)
    reason = "no decomposition" if counts[bad] == 0 else f"{int(counts[bad])} distinct idempotents work"
    return IdealVerdict(
        "uniquely-weakly-clean",
        ideal.describe(),
        False,
        len(ideal),
        failing=x,
        trace=found if found else _failure_trace(ring, x),
        detail=f"element {x}: {reason}",
    )


def ideal_is_weakly_exchange(
    ring: FiniteRing,
    ideal: IdealSet,
    *,
    mode: Literal["strict", "relaxed"] = "strict",
) -> IdealVerdict:
    for x in ideal.members:
        if not is_weakly_exchange_element(ring, x, ideal=ideal, mode=mode):
            probed = (
                tuple(e for e in ring.idempotents if e in set(ideal.members))
                if mode == "strict"
                else ring.idempotents
            )
            return IdealVerdict(
                f"weakly-exchange-{mode}",
                ideal.describe(),
                False,
                len(ideal),
                failing=x,
                trace=probed,
                detail=f"element {x}: no probed idempotent lands in R(x-x^2) or R(x+x^2)",
            )
    return IdealVerdict(f"weakly-exchange-{mode}", ideal.describe(), True, len(ideal))


def _failure_trace(ring: FiniteRing, x: int, limit: int = 16) -> tuple:
    """For a failing element: which (sign, e) candidates were tried and the
    non-unit each produced."""
    trace = []
    for e in ring.idempotents[:limit]:
        trace.append(
            {
                "sign": 1,
                "idempotent": int(e),
                "candidate_unit": ring.sub(x, e),
                "is_unit": ring.is_unit(ring.sub(x, e)),
            }
        )
        trace.append(
            {
                "sign": -1,
                "idempotent": int(e),
                "candidate_unit": ring.add(x, e),
                "is_unit": ring.is_unit(ring.add(x, e)),
            }
        )
    return tuple(trace)


# -- ring-level shortcuts ----------------------------------------------------------


def ring_is_clean(ring: FiniteRing) -> bool:
    return ideal_is_clean(ring, full_ideal(ring)).ok


def ring_is_weakly_clean(ring: FiniteRing) -> bool:
    return ideal_is_weakly_clean(ring, full_ideal(ring)).ok


def ring_is_uniquely_weakly_clean(ring: FiniteRing) -> bool:
    return ideal_is_uniquely_weakly_clean(ring, full_ideal(ring)).ok


# -- idempotent lifting --------------------------------------------------------------


def lift_idempotent(ring: FiniteRing, proj: np.ndarray, quot: FiniteRing, ebar: int) -> int:
    """An idempotent of the parent ring that projects onto ebar.

    Lifting along the quotient by the Jacobson radical always succeeds in a
    finite ring, so failure here is an internal error, not a verdict.
    """
    if not quot.is_idempotent(ebar):
        raise ValueError(f"{ebar} is not idempotent in {quot.label}")
    for e in ring.idempotents:
        if int(proj[e]) == ebar:
            return e
    raise RuntimeError(
        f"no idempotent of {ring.label} projects onto {ebar}; "
        f"the quotient is not by a nil ideal"
    )


# -- Peirce corner analysis ------------------------------------------------------------


@dataclass(frozen=True)
class PeirceReport:
    """Corner decomposition of an ideal along a central idempotent."""

    e: int
    complement: int
    corner_verdicts: tuple[IdealVerdict, IdealVerdict]
    corner_clean: tuple[bool, bool]

    @property
    def both_weakly_clean(self) -> bool:
        return all(v.ok for v in self.corner_verdicts)

    @property
    def at_most_one_not_clean(self) -> bool:
        return sum(1 for c in self.corner_clean if not c) <= 1


def peirce_analysis(ring: FiniteRing, e: int, ideal: IdealSet) -> PeirceReport:
    """Split an ideal across the corners of a central idempotent.

    Returns the weakly-clean verdicts of the two corner ideals e*I*e and
    (1-e)*I*(1-e) inside their corner rings, plus their plain clean flags.
    """
    from .constructions import corner_ring
    from .ideals import corner_ideal

    if not ring.is_idempotent(e) or not ring.is_central(e):
        raise ValueError(f"{e} must be a central idempotent")
    f = ring.sub(ring.one, e)
    first = corner_ring(ring, e)
    second = corner_ring(ring, f)
    ideal_first = corner_ideal(first, ideal)
    ideal_second = corner_ideal(second, ideal)
    verdicts = (
        ideal_is_weakly_clean(first.ring, ideal_first),
        ideal_is_weakly_clean(second.ring, ideal_second),
    )
    clean_flags = (
        ideal_is_clean(first.ring, ideal_first).ok,
        ideal_is_clean(second.ring, ideal_second).ok,
    )
    return PeirceReport(e=e, complement=f, corner_verdicts=verdicts, corner_clean=clean_flags)
