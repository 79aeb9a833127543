"""Subrings of the rationals obtained by allowing every denominator coprime
to a fixed finite set of primes.

For a prime set P with modulus M = prod(P), the ring holds the fractions a/b
(reduced) with gcd(b, M) = 1. It is an integral domain whose units are the
fractions with gcd(a, M) = 1 and whose only idempotents are 0 and 1, so the
decomposition search of the finite-ring analysis collapses to three unit
tests per element: x itself, x - 1, and x + 1. Every nonzero ideal is
principal with a canonical integer generator d = prod(p^e_p), which makes
ideal-level properties decidable by a finite case analysis on the valuation
vector (e_p). That case table is derived here and kept honest by a bounded
witness-search oracle; the test suite replays the two against each other
across an envelope of prime sets and valuations.

Derived case table, writing Z = {p in P : e_p = 0} for a nonzero ideal I
with valuations (e_p):

* zero ideal: clean (0 = -1 + 1).
* clean(I): Z empty (then x in I has every p dividing x, so x - 1 is a
  unit), or I = R over a single prime.
* weakly clean, proper I (some e_p >= 1): fails exactly when two distinct
  primes in Z can separately kill x - 1 and x + 1, or when 2 in Z kills
  both at once; so it holds iff Z is empty or Z = {q} for a single odd q.
* weakly clean, I = R: a failing x also needs a third prime to keep x
  itself a non-unit; holds iff |P| = 1, or |P| = 2 with 2 not in P.
* uniquely weakly clean: for proper nonzero I every member is a non-unit,
  so at most the idempotent 1 can serve and uniqueness equals weak
  cleanness; for I = R it holds iff P = {2} (in any other ring x = 1 is
  served by both idempotents); the zero ideal always qualifies.
* weakly exchange: coincides with weakly clean at every element — in a
  domain e - x in R(x - x^2) forces x - 1 to be a unit or x in {0, e},
  and likewise for the plus form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Sequence

import numpy as np

__all__ = [
    "LocalizedIntegers",
    "LocalizedIdeal",
    "SignClasses",
    "SignClassSurvey",
    "AnalyticVerdict",
    "clean_flags",
    "is_weakly_exchange_element_exact",
    "ideal_is_clean_analytic",
    "ideal_is_weakly_clean_analytic",
    "ideal_is_uniquely_weakly_clean_analytic",
    "ideal_is_weakly_exchange_analytic",
    "witness_search",
    "uniqueness_witness_search",
    "sign_class_survey",
    "candidate_stream",
    "product_weakly_clean",
    "reproduce_examples",
    "DEFAULT_SEARCH_BOUND",
]

DEFAULT_SEARCH_BOUND = 64

VALIDATED_MAX_PRIMES = 3
VALIDATED_MAX_PRIME = 11
VALIDATED_MAX_EXPONENT = 2


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class LocalizedIntegers:
    """The subring of Q with denominators coprime to a finite set of primes."""

    primes: tuple[int, ...]

    def __init__(self, primes: Iterable[int]):
        ps = tuple(sorted(set(int(p) for p in primes)))
        if not ps:
            raise ValueError("at least one prime is required")
        for p in ps:
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    @property
    def modulus(self) -> int:
        out = 1
        for p in self.primes:
            out *= p
        return out

    @property
    def label(self) -> str:
        return "Z_(" + ",".join(str(p) for p in self.primes) + ")"

    # -- membership and arithmetic ------------------------------------------

    def contains(self, q: Fraction) -> bool:
        return math.gcd(q.denominator, self.modulus) == 1

    def element(self, numerator: int | str | Fraction, denominator: int = 1) -> Fraction:
        """Build a member fraction, rejecting denominators that meet P.

        The check runs on the reduced form, so 3/6 is a valid member when
        3 is the only listed prime (it reduces to 1/2).
        """
        q = Fraction(numerator) if denominator == 1 else Fraction(numerator, denominator)
        if not self.contains(q):
            raise ValueError(
                f"{q} lies outside {self.label}: denominator {q.denominator} "
                f"shares a factor with {self.modulus}"
            )
        return q

    def is_unit(self, q: Fraction) -> bool:
        return self.contains(q) and math.gcd(q.numerator, self.modulus) == 1

    def idempotents(self) -> tuple[Fraction, Fraction]:
        """0 and 1 — the ring is a domain, so e(e - 1) = 0 forces e in {0, 1}."""
        return (Fraction(0), Fraction(1))

    # -- ideals ---------------------------------------------------------------

    def valuations(self, n: int) -> tuple[int, ...]:
        """Exponent of each listed prime in |n| (zero vector for n = 0 by fiat)."""
        out = []
        for p in self.primes:
            e = 0
            m = abs(n)
            while m and m % p == 0:
                m //= p
                e += 1
            out.append(e)
        return tuple(out)

    def ideal(self, valuations: Sequence[int]) -> "LocalizedIdeal":
        vals = tuple(int(v) for v in valuations)
        if len(vals) != len(self.primes) or any(v < 0 for v in vals):
            raise ValueError("one non-negative exponent per prime is required")
        return LocalizedIdeal(self, "principal", vals)

    def zero_ideal(self) -> "LocalizedIdeal":
        return LocalizedIdeal(self, "zero", tuple(0 for _ in self.primes))

    def full_ideal(self) -> "LocalizedIdeal":
        return LocalizedIdeal(self, "principal", tuple(0 for _ in self.primes))

    def principal_ideal(self, generator: Fraction | int | str) -> "LocalizedIdeal":
        """The ideal generated by one element, normalized to its canonical
        integer generator prod(p^e_p); unit factors are stripped, so a unit
        generator yields the whole ring."""
        g = self.element(Fraction(generator))
        if g == 0:
            return self.zero_ideal()
        return LocalizedIdeal(self, "principal", self.valuations(g.numerator))


@dataclass(frozen=True)
class LocalizedIdeal:
    """0 or the principal ideal generated by d = prod(p^e_p)."""

    ring: LocalizedIntegers
    kind: Literal["zero", "principal"]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("zero", "principal"):
            raise ValueError(f"unknown ideal kind {self.kind!r}")
        if self.kind == "zero" and any(self.exponents):
            raise ValueError("the zero ideal carries the zero exponent vector")

    @property
    def generator(self) -> Fraction:
        if self.kind == "zero":
            return Fraction(0)
        d = 1
        for p, e in zip(self.ring.primes, self.exponents):
            d *= p**e
        return Fraction(d)

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    @property
    def is_full(self) -> bool:
        return self.kind == "principal" and not any(self.exponents)

    def contains(self, q: Fraction) -> bool:
        if not self.ring.contains(q):
            return False
        if self.kind == "zero":
            return q == 0
        if q == 0:
            return True
        vals = self.ring.valuations(q.numerator)
        return all(v >= e for v, e in zip(vals, self.exponents))

    def describe(self) -> str:
        if self.is_zero:
            return "<0>"
        if self.is_full:
            return "R"
        return f"<{self.generator}>"


# -- element classification ------------------------------------------------------


@dataclass(frozen=True)
class SignClasses:
    """Unit tests behind the three possible decompositions of one element.

    plus: x = u + e is solvable (x or x - 1 a unit);
    minus: x = u - e is solvable (x or x + 1 a unit).
    """

    element: Fraction
    unit: bool
    shifted_down_unit: bool
    shifted_up_unit: bool

    @property
    def plus(self) -> bool:
        return self.unit or self.shifted_down_unit

    @property
    def minus(self) -> bool:
        return self.unit or self.shifted_up_unit

    @property
    def is_clean(self) -> bool:
        return self.plus

    @property
    def is_weakly_clean(self) -> bool:
        return self.plus or self.minus

    @property
    def plus_only(self) -> bool:
        return self.plus and not self.minus

    @property
    def minus_only(self) -> bool:
        return self.minus and not self.plus

    @property
    def idempotent_count(self) -> int:
        """How many of the two idempotents support some decomposition."""
        return int(self.unit) + int(self.shifted_down_unit or self.shifted_up_unit)

    @property
    def is_uniquely_weakly_clean(self) -> bool:
        return self.idempotent_count == 1

    def to_json_dict(self) -> dict:
        return {
            "element": str(self.element),
            "clean": self.is_clean,
            "weakly_clean": self.is_weakly_clean,
            "plus": self.plus,
            "minus": self.minus,
        }


def clean_flags(ring: LocalizedIntegers, x: Fraction) -> SignClasses:
    x = ring.element(x)
    return SignClasses(
        element=x,
        unit=ring.is_unit(x),
        shifted_down_unit=ring.is_unit(x - 1),
        shifted_up_unit=ring.is_unit(x + 1),
    )


def is_weakly_exchange_element_exact(
    ring: LocalizedIntegers,
    x: Fraction,
    *,
    ideal: LocalizedIdeal | None = None,
    mode: Literal["strict", "relaxed"] = "relaxed",
) -> bool:
    """Definition-faithful test: some idempotent e has e - x in R(x - x^2)
    or e + x in R(x + x^2); strict mode draws e from the given ideal.

    Membership in a principal multiple set R*g is exact division: y in R*g
    iff y = 0, or g != 0 and y/g lies in the ring.
    """
    x = ring.element(x)
    if mode == "strict":
        if ideal is None:
            raise ValueError("strict mode requires the ideal")
        candidates = [e for e in ring.idempotents() if ideal.contains(e)]
    else:
        candidates = list(ring.idempotents())

    def in_multiples(y: Fraction, g: Fraction) -> bool:
        if y == 0:
            return True
        return g != 0 and ring.contains(y / g)

    for e in candidates:
        if in_multiples(e - x, x - x * x) or in_multiples(e + x, x + x * x):
            return True
    return False


# -- analytic ideal verdicts -------------------------------------------------------


@dataclass(frozen=True)
class AnalyticVerdict:
    """Boolean verdict plus how far the backing case table has been validated."""

    value: bool
    method: str

    def __bool__(self) -> bool:
        return self.value


def _method_for(ideal: LocalizedIdeal) -> str:
    ring = ideal.ring
    inside = (
        len(ring.primes) <= VALIDATED_MAX_PRIMES
        and max(ring.primes) <= VALIDATED_MAX_PRIME
        and max(ideal.exponents, default=0) <= VALIDATED_MAX_EXPONENT
    )
    return "analytic" if inside else "analytic (unvalidated envelope)"


def _zero_exponent_primes(ideal: LocalizedIdeal) -> list[int]:
    return [p for p, e in zip(ideal.ring.primes, ideal.exponents) if e == 0]


def ideal_is_clean_analytic(ideal: LocalizedIdeal) -> AnalyticVerdict:
    method = _method_for(ideal)
    if ideal.is_zero:
        return AnalyticVerdict(True, method)
    zero_part = _zero_exponent_primes(ideal)
    if not zero_part:
        return AnalyticVerdict(True, method)
    if ideal.is_full and len(ideal.ring.primes) == 1:
        return AnalyticVerdict(True, method)
    return AnalyticVerdict(False, method)


def ideal_is_weakly_clean_analytic(ideal: LocalizedIdeal) -> AnalyticVerdict:
    method = _method_for(ideal)
    if ideal.is_zero:
        return AnalyticVerdict(True, method)
    primes = ideal.ring.primes
    zero_part = _zero_exponent_primes(ideal)
    if ideal.is_full:
        ok = len(primes) == 1 or (len(primes) == 2 and 2 not in primes)
        return AnalyticVerdict(ok, method)
    ok = not zero_part or (len(zero_part) == 1 and zero_part[0] != 2)
    return AnalyticVerdict(ok, method)


def ideal_is_uniquely_weakly_clean_analytic(ideal: LocalizedIdeal) -> AnalyticVerdict:
    method = _method_for(ideal)
    if ideal.is_zero:
        return AnalyticVerdict(True, method)
    if ideal.is_full:
        return AnalyticVerdict(ideal.ring.primes == (2,), method)
    return AnalyticVerdict(ideal_is_weakly_clean_analytic(ideal).value, method)


def ideal_is_weakly_exchange_analytic(ideal: LocalizedIdeal) -> AnalyticVerdict:
    return ideal_is_weakly_clean_analytic(ideal)


# -- bounded witness search ---------------------------------------------------------


def _a_order(bound: int) -> np.ndarray:
    """0, 1, -1, 2, -2, ... out to the bound."""
    seq = [0]
    for k in range(1, bound + 1):
        seq.append(k)
        seq.append(-k)
    return np.array(seq, dtype=np.int64)


def candidate_stream(
    ring: LocalizedIntegers, ideal: LocalizedIdeal, bound: int
) -> Iterator[Fraction]:
    """Members d*a/b in the canonical search order: denominators ascending
    over 1..bound (coprime to the modulus), then numerator multiplier a over
    0, 1, -1, 2, -2, ... Duplicates from unreduced pairs are not filtered."""
    d = int(ideal.generator)
    modulus = ring.modulus
    for b in range(1, bound + 1):
        if math.gcd(b, modulus) != 1:
            continue
        yield Fraction(0)
        for k in range(1, bound + 1):
            yield Fraction(d * k, b)
            yield Fraction(-d * k, b)


def _search_grid(
    ring: LocalizedIntegers, ideal: LocalizedIdeal, bound: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """gcd grids over candidates x = d*a/b in canonical order.

    Returns (a_values, b_values, x_non_unit, down_non_unit, up_non_unit)
    where the masks are indexed [b, a] and "down"/"up" refer to x - 1 and
    x + 1. Because b stays coprime to the modulus, gcd tests on d*a and
    d*a -/+ b decide unit-ness exactly.
    """
    modulus = ring.modulus
    d = int(ideal.generator)
    a_vals = _a_order(bound)
    b_vals = np.array(
        [b for b in range(1, bound + 1) if math.gcd(b, modulus) == 1], dtype=np.int64
    )
    num = d * a_vals[None, :]
    x_non_unit = np.gcd(num, modulus) > 1
    x_non_unit = np.broadcast_to(x_non_unit, (b_vals.size, a_vals.size))
    down_non_unit = np.gcd(num - b_vals[:, None], modulus) > 1
    up_non_unit = np.gcd(num + b_vals[:, None], modulus) > 1
    return a_vals, b_vals, x_non_unit, down_non_unit, up_non_unit


def _first_hit(
    mask: np.ndarray, a_vals: np.ndarray, b_vals: np.ndarray, d: int
) -> Fraction | None:
    for row in range(mask.shape[0]):
        hits = np.flatnonzero(mask[row])
        if hits.size:
            a = int(a_vals[hits[0]])
            return Fraction(d * a, int(b_vals[row]))
    return None


def witness_search(
    ring: LocalizedIntegers,
    ideal: LocalizedIdeal,
    *,
    bound: int = DEFAULT_SEARCH_BOUND,
    flavor: Literal["clean", "weakly-clean"] = "weakly-clean",
) -> Fraction | None:
    """First ideal member (canonical order) with no decomposition of the
    requested flavor, or None when every sampled member decomposes."""
    if ideal.is_zero:
        return None
    a_vals, b_vals, x_nu, down_nu, up_nu = _search_grid(ring, ideal, bound)
    bad = x_nu & down_nu
    if flavor == "weakly-clean":
        bad = bad & up_nu
    return _first_hit(bad, a_vals, b_vals, int(ideal.generator))


def uniqueness_witness_search(
    ring: LocalizedIntegers,
    ideal: LocalizedIdeal,
    *,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> Fraction | None:
    """First member supported by zero or by both idempotents."""
    if ideal.is_zero:
        return None
    a_vals, b_vals, x_nu, down_nu, up_nu = _search_grid(ring, ideal, bound)
    shift_ok = ~down_nu | ~up_nu
    count_not_one = (~x_nu & shift_ok) | (x_nu & ~shift_ok)
    return _first_hit(count_not_one, a_vals, b_vals, int(ideal.generator))


@dataclass(frozen=True)
class SignClassSurvey:
    """First representatives of each exclusive sign class within an ideal."""

    first_plus_only: Fraction | None
    first_minus_only: Fraction | None
    first_neither: Fraction | None
    scanned: int


def sign_class_survey(
    ring: LocalizedIntegers,
    ideal: LocalizedIdeal,
    *,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> SignClassSurvey:
    if ideal.is_zero:
        return SignClassSurvey(None, None, None, 1)
    a_vals, b_vals, x_nu, down_nu, up_nu = _search_grid(ring, ideal, bound)
    plus = ~x_nu | ~down_nu
    minus = ~x_nu | ~up_nu
    d = int(ideal.generator)
    return SignClassSurvey(
        first_plus_only=_first_hit(plus & ~minus, a_vals, b_vals, d),
        first_minus_only=_first_hit(minus & ~plus, a_vals, b_vals, d),
        first_neither=_first_hit(~plus & ~minus, a_vals, b_vals, d),
        scanned=int(x_nu.size),
    )


# -- products --------------------------------------------------------------------


@dataclass(frozen=True)
class ProductVerdict:
    """Weak cleanness of a componentwise ideal inside a finite product."""

    ok: bool
    witness: tuple[Fraction, ...] | None
    witness_sign_classes: tuple[str, ...] | None
    component_weakly_clean: tuple[bool, ...]
    component_clean: tuple[bool, ...]
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "witness_sign_classes": (
                None
                if self.witness_sign_classes is None
                else list(self.witness_sign_classes)
            ),
            "component_weakly_clean": list(self.component_weakly_clean),
            "component_clean": list(self.component_clean),
            "detail": self.detail,
        }


def product_weakly_clean(
    components: Sequence[tuple[LocalizedIntegers, LocalizedIdeal]],
    *,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> ProductVerdict:
    """Decide weak cleanness of I_1 x ... x I_n inside R_1 x ... x R_n.

    The decomposition sign is shared across components, so the product
    ideal is weakly clean exactly when every component ideal is weakly
    clean and at most one of them fails to be clean. Failure produces an
    explicit member tuple with no shared sign: either one component is not
    weakly clean at all (padded with zeros elsewhere), or two components
    contribute a plus-only and a minus-only member.
    """
    if not components:
        raise ValueError("at least one component is required")
    wc = [bool(ideal_is_weakly_clean_analytic(i)) for _, i in components]
    cl = [bool(ideal_is_clean_analytic(i)) for _, i in components]

    def pad(slot: int, value: Fraction) -> tuple[Fraction, ...]:
        return tuple(
            value if k == slot else Fraction(0) for k in range(len(components))
        )

    if not all(wc):
        slot = wc.index(False)
        ring, ideal = components[slot]
        x = witness_search(ring, ideal, bound=bound, flavor="weakly-clean")
        classes = tuple(
            "neither" if k == slot else "both" for k in range(len(components))
        )
        return ProductVerdict(
            False,
            None if x is None else pad(slot, x),
            None if x is None else classes,
            tuple(wc),
            tuple(cl),
            f"component {slot} is not weakly clean",
        )
    not_clean = [k for k, flag in enumerate(cl) if not flag]
    if len(not_clean) <= 1:
        return ProductVerdict(
            True, None, None, tuple(wc), tuple(cl), "at most one component is not clean"
        )
    first, second = not_clean[0], not_clean[1]
    ring1, ideal1 = components[first]
    ring2, ideal2 = components[second]
    plus_only = sign_class_survey(ring1, ideal1, bound=bound).first_plus_only
    minus_only = sign_class_survey(ring2, ideal2, bound=bound).first_minus_only
    witness = None
    classes = None
    if plus_only is not None and minus_only is not None:
        witness = tuple(
            plus_only if k == first else minus_only if k == second else Fraction(0)
            for k in range(len(components))
        )
        classes = tuple(
            "plus-only"
            if k == first
            else "minus-only"
            if k == second
            else "both"
            for k in range(len(components))
        )
    return ProductVerdict(
        False,
        witness,
        classes,
        tuple(wc),
        tuple(cl),
        f"components {first} and {second} are both weakly clean but not clean, "
        "with opposite exclusive sign classes",
    )


# -- end-to-end worked reports -------------------------------------------------------


def reproduce_examples(*, bound: int = DEFAULT_SEARCH_BOUND) -> dict:
    """Two worked demonstrations over Z restricted to the primes {3, 5}.

    First: the principal ideal generated by 2/11 — the generator is a unit,
    so the ideal is the whole ring, which the search confirms is weakly
    clean but not clean, with an explicit non-clean member.

    Second: the same ring squared, with the componentwise ideal generated
    by 2/11 and 4/7 — both generators are units, both components are
    weakly clean but neither is clean, and the shared-sign obstruction
    produces a member tuple that is not weakly clean in the product.
    """
    ring = LocalizedIntegers((3, 5))

    gen1 = ring.element(2, 11)
    ideal1 = ring.principal_ideal(gen1)
    clean = ideal_is_clean_analytic(ideal1)
    weakly = ideal_is_weakly_clean_analytic(ideal1)
    non_clean_witness = witness_search(ring, ideal1, bound=bound, flavor="clean")
    assert non_clean_witness is not None
    flags = clean_flags(ring, non_clean_witness)
    first = {
        "ring": ring.label,
        "generator": str(gen1),
        "generator_is_unit": ring.is_unit(gen1),
        "ideal": ideal1.describe(),
        "ideal_is_full_ring": ideal1.is_full,
        "weakly_clean": bool(weakly),
        "clean": bool(clean),
        "non_clean_witness": str(non_clean_witness),
        "witness_checks": {
            "x_is_unit": flags.unit,
            "x_minus_one_is_unit": flags.shifted_down_unit,
            "x_plus_one_is_unit": flags.shifted_up_unit,
        },
    }

    gen2 = ring.element(4, 7)
    ideal2 = ring.principal_ideal(gen2)
    verdict = product_weakly_clean([(ring, ideal1), (ring, ideal2)], bound=bound)
    second = {
        "ring": f"{ring.label} x {ring.label}",
        "generators": [str(gen1), str(gen2)],
        "generators_are_units": [ring.is_unit(gen1), ring.is_unit(gen2)],
        "component_ideals": [ideal1.describe(), ideal2.describe()],
        "product": verdict.to_json_dict(),
    }

    return {
        "full_ring_weakly_clean_not_clean": first,
        "product_not_weakly_clean": second,
    }
