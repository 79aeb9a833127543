"""Ring constructors: cyclic rings, products, matrix rings, triangular and
Morita-style block rings, idealizations, quotients, truncated power series,
and corner rings, plus bimodules and pairings as validated tables.

Element encodings are mixed radix with the FIRST component in the most
significant position, reading block matrices row by row. For example a
product Z_2 x Z_3 encodes (a, b) as a*3 + b, a 2x2 matrix ring over R
encodes [[a, b], [c, d]] as ((a*n + b)*n + c)*n + d with n = |R|, and a
truncated series a_0 + a_1 x + ... encodes its coefficient vector with a_0
most significant. These encodings are fixed so serialized rings reproduce
bit for bit; induced ideals in the ideals module rebuild them from each
ring's construction record.

Every constructor's output goes through the exhaustive validator, so an
invalid bimodule or pairing cannot produce a live ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import FiniteRing, SizeCapError, size_cap, _abelian_group_violations, _as_table


class BimoduleError(ValueError):
    """Bimodule or pairing tables violate a required axiom."""


def _check_cap(order: int, cap: int | None, what: str) -> None:
    limit = size_cap(cap)
    if order > limit:
        raise SizeCapError(f"{what} would have order {order} > cap {limit}")


def _decode_digits(n: int, radices: Sequence[int]) -> np.ndarray:
    """Digit matrix of shape (n, len(radices)), first radix most significant."""
    idx = np.arange(n)
    cols = []
    for r in reversed(radices):
        cols.append(idx % r)
        idx = idx // r
    return np.stack(list(reversed(cols)), axis=1).astype(np.int32)


def _encode_cols(cols: Sequence[np.ndarray], radices: Sequence[int]) -> np.ndarray:
    acc = np.zeros_like(cols[0], dtype=np.int64)
    for col, r in zip(cols, radices):
        acc = acc * r + col
    return acc.astype(np.int32)


# ---------------------------------------------------------------------------
# cyclic rings and products


def zn(n: int, *, cap: int | None = None) -> FiniteRing:
    """The ring of integers modulo n. zn(1) is the trivial ring (0 = 1)."""
    if n <= 0:
        raise ValueError("zn requires a positive modulus")
    _check_cap(n, cap, f"Z_{n}")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(
        n,
        1 % n,
        add,
        mul,
        label=f"Z_{n}",
        provenance={"kind": "zn", "n": n},
        cap=cap,
    )


def direct_product(factors: Sequence[FiniteRing], *, label: str | None = None, cap: int | None = None) -> FiniteRing:
    """Componentwise product ring; element tuples are mixed radix encoded."""
    if not factors:
        raise ValueError("direct_product requires at least one factor")
    radices = tuple(f.order for f in factors)
    n = 1
    for r in radices:
        n *= r
    _check_cap(n, cap, "product ring")
    digits = _decode_digits(n, radices)
    add_cols = []
    mul_cols = []
    for c, f in enumerate(factors):
        d = digits[:, c]
        add_cols.append(f.add_table[np.ix_(d, d)])
        mul_cols.append(f.mul_table[np.ix_(d, d)])
    add = _encode_cols(add_cols, radices)
    mul = _encode_cols(mul_cols, radices)
    one = 0
    for f, r in zip(factors, radices):
        one = one * r + f.one
    inner = [f.decoder or (lambda i: str(i)) for f in factors]

    def decoder(i: int, _r=radices, _d=inner) -> str:
        parts = []
        for r in reversed(_r):
            parts.append(i % r)
            i //= r
        parts.reverse()
        return "(" + ",".join(d(p) for d, p in zip(_d, parts)) + ")"

    return FiniteRing(
        n,
        int(one),
        add,
        mul,
        label=label or " x ".join(f.label for f in factors),
        provenance={"kind": "product", "radices": list(radices)},
        decoder=decoder,
        cap=cap,
    )


# ---------------------------------------------------------------------------
# matrix rings, determinants, cofactors


def matrix_ring(base: FiniteRing, k: int, *, label: str | None = None, cap: int | None = None) -> FiniteRing:
    """k x k matrices over base, entries encoded row-major."""
    if k < 1:
        raise ValueError("matrix_ring requires k >= 1")
    n = base.order**(k * k)
    _check_cap(n, cap, f"M_{k}({base.label})")
    radices = (base.order,) * (k * k)
    digits = _decode_digits(n, radices)
    add_cols = [base.add_table[np.ix_(digits[:, c], digits[:, c])] for c in range(k * k)]
    add = _encode_cols(add_cols, radices)

    mul_cols = []
    for i in range(k):
        for j in range(k):
            acc = None
            for l in range(k):
                a_col = digits[:, i * k + l]
                b_col = digits[:, l * k + j]
                term = base.mul_table[np.ix_(a_col, b_col)]
                acc = term if acc is None else base.add_table[acc, term]
            mul_cols.append(acc)
    mul = _encode_cols(mul_cols, radices)

    one_digits = [base.one if i == j else 0 for i in range(k) for j in range(k)]
    one = 0
    for d in one_digits:
        one = one * base.order + d

    def decoder(idx: int, _k=k, _n=base.order, _base=base) -> str:
        entries = []
        for _ in range(_k * _k):
            entries.append(idx % _n)
            idx //= _n
        entries.reverse()
        rows = []
        for i in range(_k):
            rows.append("[" + ",".join(_base.describe(e) for e in entries[i * _k : (i + 1) * _k]) + "]")
        return "[" + ",".join(rows) + "]"

    return FiniteRing(
        n,
        int(one),
        add,
        mul,
        label=label or f"M{k}({base.label})",
        provenance={"kind": "matrix", "k": k, "base_order": base.order, "radices": list(radices)},
        decoder=decoder,
        cap=cap,
    )


def matrix_entries(ambient: FiniteRing, idx: int) -> list[list[int]]:
    """Decode a matrix-ring element index into its k x k entry grid."""
    prov = ambient.provenance or {}
    if prov.get("kind") != "matrix":
        raise ValueError("not a matrix ring")
    k, n = prov["k"], prov["base_order"]
    digits = []
    for _ in range(k * k):
        digits.append(idx % n)
        idx //= n
    digits.reverse()
    return [digits[i * k : (i + 1) * k] for i in range(k)]


def matrix_element(ambient: FiniteRing, entries: Sequence[Sequence[int]]) -> int:
    """Encode a k x k entry grid as a matrix-ring element index."""
    prov = ambient.provenance or {}
    if prov.get("kind") != "matrix":
        raise ValueError("not a matrix ring")
    n = prov["base_order"]
    idx = 0
    for row in entries:
        for e in row:
            idx = idx * n + int(e)
    return idx


def det(base: FiniteRing, entries: Sequence[Sequence[int]]) -> int:
    """Determinant by cofactor expansion; commutative base rings only, k <= 4."""
    if not base.is_commutative:
        raise ValueError("determinants require a commutative base ring")
    k = len(entries)
    if k > 4:
        raise ValueError("cofactor expansion is capped at k = 4")
    for row in entries:
        if len(row) != k:
            raise ValueError("entries must be a square grid")
    return _det_rec(base, [list(map(int, row)) for row in entries])


def _det_rec(base: FiniteRing, a: list[list[int]]) -> int:
    k = len(a)
    if k == 1:
        return a[0][0]
    acc = 0
    for j in range(k):
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        term = base.mul(a[0][j], _det_rec(base, minor))
        if j % 2 == 1:
            term = base.neg(term)
        acc = base.add(acc, term)
    return acc


def cofactor(base: FiniteRing, entries: Sequence[Sequence[int]], i: int, j: int) -> int:
    """Signed minor A_ij (0-based row and column)."""
    if not base.is_commutative:
        raise ValueError("cofactors require a commutative base ring")
    k = len(entries)
    minor = [
        [int(entries[r][c]) for c in range(k) if c != j]
        for r in range(k)
        if r != i
    ]
    value = _det_rec(base, minor) if minor else base.one
    return base.neg(value) if (i + j) % 2 == 1 else value


# ---------------------------------------------------------------------------
# bimodules and pairings


class Bimodule:
    """A finite (L, R)-bimodule as explicit tables.

    carrier elements are indices 0..order-1 with 0 the zero element;
    left_action has shape (|L|, order), right_action (order, |R|). Validation
    checks the abelian carrier, unital associative additive actions on both
    sides, and that the actions commute.
    """

    def __init__(
        self,
        left_ring: FiniteRing,
        right_ring: FiniteRing,
        add_table,
        left_action,
        right_action,
        *,
        label: str = "",
    ):
        order = len(add_table)
        self.left_ring = left_ring
        self.right_ring = right_ring
        self.order = order
        self.add_table = _as_table(add_table, (order, order), order, "module add")
        self.left_action = _as_table(left_action, (left_ring.order, order), order, "left action")
        self.right_action = _as_table(right_action, (order, right_ring.order), order, "right action")
        self.label = label or f"bimodule{order}"
        self._validate()
        neg = (self.add_table == 0).argmax(axis=1).astype(np.int32)
        neg.setflags(write=False)
        self.neg_table = neg

    def _validate(self) -> None:
        violations, neg = _abelian_group_violations(self.add_table)
        if violations or neg is None:
            raise BimoduleError(f"carrier is not an abelian group: {violations[0].axiom}")
        idx = np.arange(self.order)
        L, R = self.left_ring, self.right_ring
        la, ra, madd = self.left_action, self.right_action, self.add_table
        if not np.array_equal(la[L.one], idx):
            raise BimoduleError("left action is not unital")
        if not np.array_equal(ra[:, R.one], idx):
            raise BimoduleError("right action is not unital")
        for r in range(L.order):
            # (r r') m = r (r' m)
            if not np.array_equal(la[L.mul_table[r, :], :], la[r, la]):
                raise BimoduleError("left action is not associative over ring multiplication")
            # (r + r') m = r m + r' m
            lhs = la[L.add_table[r, :], :]
            rhs = madd[np.tile(la[r], (L.order, 1)), la]
            if not np.array_equal(lhs, rhs):
                raise BimoduleError("left action is not additive in the ring argument")
            # r (m + m') = r m + r m'
            if not np.array_equal(la[r, madd], madd[np.ix_(la[r], la[r])]):
                raise BimoduleError("left action is not additive in the module argument")
        for s in range(R.order):
            # m (s s') = (m s) s'
            if not np.array_equal(ra[:, R.mul_table[s, :]], ra[ra[:, s], :]):
                raise BimoduleError("right action is not associative over ring multiplication")
            # m (s + s') = m s + m s'
            if not np.array_equal(ra[:, R.add_table[s, :]], madd[np.tile(ra[:, s][:, None], (1, R.order)), ra]):
                raise BimoduleError("right action is not additive in the ring argument")
            # (m + m') s = m s + m' s
            if not np.array_equal(ra[madd, s], madd[np.ix_(ra[:, s], ra[:, s])]):
                raise BimoduleError("right action is not additive in the module argument")
        # (r m) s = r (m s)
        for r in range(L.order):
            if not np.array_equal(ra[la[r, :], :], la[r, ra]):
                raise BimoduleError("left and right actions do not commute")

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def left(self, r: int, m: int) -> int:
        return int(self.left_action[r, m])

    def right(self, m: int, s: int) -> int:
        return int(self.right_action[m, s])

    def is_symmetric(self) -> bool:
        """True when left and right rings coincide and r*m = m*r for all r, m."""
        return self.left_ring == self.right_ring and bool(
            np.array_equal(self.left_action, self.right_action.T)
        )


def zero_bimodule(left_ring: FiniteRing, right_ring: FiniteRing) -> Bimodule:
    """The one-element bimodule."""
    return Bimodule(
        left_ring,
        right_ring,
        [[0]],
        [[0]] * left_ring.order,
        [[0] * right_ring.order],
        label="0",
    )


def regular_bimodule(ring: FiniteRing) -> Bimodule:
    """The ring as an (R, R)-bimodule under its own multiplication."""
    return Bimodule(
        ring,
        ring,
        ring.add_table,
        ring.mul_table,
        ring.mul_table,
        label=ring.label,
    )


def zn_bimodule(left_ring: FiniteRing, right_ring: FiniteRing, m: int) -> Bimodule:
    """Z_m as a bimodule with both actions by reduction mod m.

    Only rings whose index arithmetic is genuinely modular (zn rings and
    their structural equals) pass validation; anything else fails the
    associativity or unitality checks honestly.
    """
    if m <= 0:
        raise ValueError("zn_bimodule requires a positive modulus")
    idx = np.arange(m)
    add = (idx[:, None] + idx[None, :]) % m
    left = (np.arange(left_ring.order)[:, None] * idx[None, :]) % m
    right = (idx[:, None] * np.arange(right_ring.order)[None, :]) % m
    return Bimodule(left_ring, right_ring, add, left, right, label=f"Z_{m}")


def module_from_action(ring: FiniteRing, add_table, action) -> Bimodule:
    """Symmetric bimodule over a commutative ring from a single action table."""
    action = np.asarray(action, dtype=np.int64)
    return Bimodule(ring, ring, add_table, action, action.T, label=f"{ring.label}-module")


class PairingMap:
    """A biadditive balanced pairing M x N -> T between bimodule carriers.

    Used as the composition map of three-step triangular rings. The table has
    shape (|M|, |N|) with values in T's carrier. Validation (biadditivity,
    balance over the middle ring, and linearity over the outer rings) happens
    at the construction site where all three bimodules are in scope.
    """

    def __init__(self, table, label: str = ""):
        arr = np.asarray(table, dtype=np.int64).astype(np.int32)
        arr.setflags(write=False)
        self.table = arr
        self.label = label or "pairing"

    @staticmethod
    def zero(m_order: int, n_order: int) -> "PairingMap":
        return PairingMap(np.zeros((m_order, n_order), dtype=np.int32), label="0")

    def __call__(self, m: int, n: int) -> int:
        return int(self.table[m, n])


def _validate_pairing(comp: PairingMap, m32: Bimodule, m21: Bimodule, m31: Bimodule) -> None:
    """comp : A32 x A21 -> A31 must be biadditive, balanced over the middle
    ring, and linear over the outer rings."""
    t = comp.table
    if t.shape != (m32.order, m21.order):
        raise BimoduleError("pairing table shape does not match the bimodules")
    if t.size and (t.min() < 0 or t.max() >= m31.order):
        raise BimoduleError("pairing values out of range for the target bimodule")
    a2 = m32.right_ring
    a3 = m32.left_ring
    a1 = m21.right_ring
    for u in range(m32.order):
        # biadditive in the second slot
        if not np.array_equal(t[u, m21.add_table], m31.add_table[np.ix_(t[u], t[u])]):
            raise BimoduleError("pairing is not additive in its second argument")
    for v in range(m21.order):
        if not np.array_equal(t[m32.add_table, v], m31.add_table[np.ix_(t[:, v], t[:, v])]):
            raise BimoduleError("pairing is not additive in its first argument")
    for r in range(a2.order):
        # balance: comp(u * r, v) = comp(u, r * v)
        if not np.array_equal(t[m32.right_action[:, r], :], t[:, m21.left_action[r, :]]):
            raise BimoduleError("pairing is not balanced over the middle ring")
    for r in range(a3.order):
        if not np.array_equal(t[m32.left_action[r, :], :], m31.left_action[r, t]):
            raise BimoduleError("pairing is not linear over the left outer ring")
    for r in range(a1.order):
        if not np.array_equal(t[:, m21.right_action[:, r]], m31.right_action[t, r]):
            raise BimoduleError("pairing is not linear over the right outer ring")


# ---------------------------------------------------------------------------
# block constructions


def morita_zero(
    r_ring: FiniteRing,
    s_ring: FiniteRing,
    upper: Bimodule,
    lower: Bimodule,
    *,
    label: str | None = None,
    cap: int | None = None,
    _kind: str = "morita",
) -> FiniteRing:
    """The block ring [[R, M], [N, S]] with both pairings zero.

    upper is an (R, S)-bimodule at position (1, 2); lower is an (S, R)-
    bimodule at position (2, 1). Elements are quadruples (r, m, n, s).
    """
    if upper.left_ring != r_ring or upper.right_ring != s_ring:
        raise BimoduleError("upper bimodule must be (R, S)-sided")
    if lower.left_ring != s_ring or lower.right_ring != r_ring:
        raise BimoduleError("lower bimodule must be (S, R)-sided")
    radices = (r_ring.order, upper.order, lower.order, s_ring.order)
    n = radices[0] * radices[1] * radices[2] * radices[3]
    _check_cap(n, cap, "block ring")
    digits = _decode_digits(n, radices)
    dr, dm, dn, ds = (digits[:, c] for c in range(4))

    add = _encode_cols(
        [
            r_ring.add_table[np.ix_(dr, dr)],
            upper.add_table[np.ix_(dm, dm)],
            lower.add_table[np.ix_(dn, dn)],
            s_ring.add_table[np.ix_(ds, ds)],
        ],
        radices,
    )
    # (r,m,n,s)(r',m',n',s') = (rr', rm' + ms', nr' + sn', ss')
    mul_r = r_ring.mul_table[np.ix_(dr, dr)]
    mul_m = upper.add_table[upper.left_action[np.ix_(dr, dm)], upper.right_action[np.ix_(dm, ds)]]
    mul_n = lower.add_table[lower.right_action[np.ix_(dn, dr)], lower.left_action[np.ix_(ds, dn)]]
    mul_s = s_ring.mul_table[np.ix_(ds, ds)]
    mul = _encode_cols([mul_r, mul_m, mul_n, mul_s], radices)

    one = ((r_ring.one * radices[1] + 0) * radices[2] + 0) * radices[3] + s_ring.one

    def decoder(i: int, _rad=radices, _r=r_ring, _s=s_ring) -> str:
        parts = []
        for rad in reversed(_rad):
            parts.append(i % rad)
            i //= rad
        r, m, nn, s = reversed(parts)
        return f"[[{_r.describe(r)},{m}],[{nn},{_s.describe(s)}]]"

    return FiniteRing(
        n,
        int(one),
        add,
        mul,
        label=label or f"[[{r_ring.label},{upper.label}],[{lower.label},{s_ring.label}]]",
        provenance={"kind": _kind, "radices": list(radices)},
        decoder=decoder,
        cap=cap,
    )


def tri2(
    r_ring: FiniteRing,
    s_ring: FiniteRing,
    lower: Bimodule,
    *,
    label: str | None = None,
    cap: int | None = None,
) -> FiniteRing:
    """Lower-triangular [[R, 0], [M, S]]; M is an (S, R)-bimodule.

    Identical to the zero-pairing block ring with the upper module zero; the
    zero slot contributes radix 1 so triple (r, m, s) encodings coincide.
    """
    ring = morita_zero(
        r_ring,
        s_ring,
        zero_bimodule(r_ring, s_ring),
        lower,
        label=label or f"T2({r_ring.label};{lower.label};{s_ring.label})",
        cap=cap,
        _kind="tri2",
    )
    prov = dict(ring.provenance or {})
    prov["radices"] = [r_ring.order, lower.order, s_ring.order]
    ring.provenance = prov
    return ring


def tri3(
    a1: FiniteRing,
    a2: FiniteRing,
    a3: FiniteRing,
    m21: Bimodule,
    m31: Bimodule,
    m32: Bimodule,
    comp: PairingMap | None = None,
    *,
    label: str | None = None,
    cap: int | None = None,
) -> FiniteRing:
    """Lower-triangular 3x3 block ring with composition pairing comp.

    Elements are tuples (x1, x21, x2, x31, x32, x3) reading the lower
    triangle row by row; m21 is (A2, A1)-sided, m31 is (A3, A1)-sided,
    m32 is (A3, A2)-sided, and comp : A32 x A21 -> A31 (default zero)
    composes the two off-diagonal steps.
    """
    if m21.left_ring != a2 or m21.right_ring != a1:
        raise BimoduleError("m21 must be an (A2, A1)-bimodule")
    if m31.left_ring != a3 or m31.right_ring != a1:
        raise BimoduleError("m31 must be an (A3, A1)-bimodule")
    if m32.left_ring != a3 or m32.right_ring != a2:
        raise BimoduleError("m32 must be an (A3, A2)-bimodule")
    if comp is None:
        comp = PairingMap.zero(m32.order, m21.order)
    _validate_pairing(comp, m32, m21, m31)

    radices = (a1.order, m21.order, a2.order, m31.order, m32.order, a3.order)
    n = 1
    for r in radices:
        n *= r
    _check_cap(n, cap, "triangular ring")
    digits = _decode_digits(n, radices)
    d1, d21, d2, d31, d32, d3 = (digits[:, c] for c in range(6))

    add = _encode_cols(
        [
            a1.add_table[np.ix_(d1, d1)],
            m21.add_table[np.ix_(d21, d21)],
            a2.add_table[np.ix_(d2, d2)],
            m31.add_table[np.ix_(d31, d31)],
            m32.add_table[np.ix_(d32, d32)],
            a3.add_table[np.ix_(d3, d3)],
        ],
        radices,
    )

    c1 = a1.mul_table[np.ix_(d1, d1)]
    c21 = m21.add_table[m21.right_action[np.ix_(d21, d1)], m21.left_action[np.ix_(d2, d21)]]
    c2 = a2.mul_table[np.ix_(d2, d2)]
    c31 = m31.add_table[
        m31.add_table[m31.right_action[np.ix_(d31, d1)], comp.table[np.ix_(d32, d21)]],
        m31.left_action[np.ix_(d3, d31)],
    ]
    c32 = m32.add_table[m32.right_action[np.ix_(d32, d2)], m32.left_action[np.ix_(d3, d32)]]
    c3 = a3.mul_table[np.ix_(d3, d3)]
    mul = _encode_cols([c1, c21, c2, c31, c32, c3], radices)

    one_digits = (a1.one, 0, a2.one, 0, 0, a3.one)
    one = 0
    for d, r in zip(one_digits, radices):
        one = one * r + d

    return FiniteRing(
        n,
        int(one),
        add,
        mul,
        label=label or f"T3({a1.label},{a2.label},{a3.label})",
        provenance={"kind": "tri3", "radices": list(radices)},
        cap=cap,
    )


def idealization(ring: FiniteRing, module: Bimodule, *, label: str | None = None, cap: int | None = None) -> FiniteRing:
    """Trivial extension R(M): pairs (r, m) with (r,m)(r',m') = (rr', rm' + r'm).

    Requires a commutative base and a symmetric bimodule (left and right
    actions agree), so rm' + r'm is unambiguous.
    """
    if not ring.is_commutative:
        raise ValueError("idealization requires a commutative base ring")
    if not module.is_symmetric():
        raise BimoduleError("idealization requires a symmetric module over the base ring")
    radices = (ring.order, module.order)
    n = radices[0] * radices[1]
    _check_cap(n, cap, "idealization")
    digits = _decode_digits(n, radices)
    dr, dm = digits[:, 0], digits[:, 1]
    add = _encode_cols(
        [ring.add_table[np.ix_(dr, dr)], module.add_table[np.ix_(dm, dm)]],
        radices,
    )
    la = module.left_action
    mul_m = module.add_table[la[np.ix_(dr, dm)], la[np.ix_(dr, dm)].T]
    mul = _encode_cols([ring.mul_table[np.ix_(dr, dr)], mul_m], radices)
    one = ring.one * radices[1]

    def decoder(i: int, _m=radices[1], _ring=ring) -> str:
        return f"({_ring.describe(i // _m)},{i % _m})"

    return FiniteRing(
        n,
        int(one),
        add,
        mul,
        label=label or f"{ring.label}({module.label})",
        provenance={
            "kind": "idealization",
            "radices": list(radices),
            "module_add": [[int(v) for v in row] for row in module.add_table],
            "module_action": [[int(v) for v in row] for row in module.left_action],
        },
        decoder=decoder,
        cap=cap,
    )


def quotient(ring: FiniteRing, ideal, *, label: str | None = None, cap: int | None = None) -> tuple[FiniteRing, np.ndarray]:
    """R/I with its projection map (an array sending elements to coset indices).

    Cosets are indexed by their smallest member, in ascending order, so the
    zero coset is index 0. Accepts an IdealSet or a plain member sequence;
    two-sidedness is verified here because well-definedness depends on it.
    """
    members = tuple(ideal.members) if hasattr(ideal, "members") else tuple(int(x) for x in ideal)
    m = np.array(sorted(set(members)), dtype=np.int32)
    mask = np.zeros(ring.order, dtype=bool)
    mask[m] = True
    if not mask[0]:
        raise ValueError("quotient requires an ideal containing 0")
    ok = (
        mask[ring.add_table[np.ix_(m, m)]].all()
        and mask[ring.mul_table[:, m]].all()
        and mask[ring.mul_table[m, :]].all()
    )
    if not ok:
        raise ValueError("quotient requires a two-sided ideal")

    canon = ring.add_table[:, m].min(axis=1)
    reps = np.unique(canon)
    proj = np.searchsorted(reps, canon).astype(np.int32)
    q = len(reps)
    add = proj[ring.add_table[np.ix_(reps, reps)]]
    mul = proj[ring.mul_table[np.ix_(reps, reps)]]

    def decoder(i: int, _reps=reps, _ring=ring) -> str:
        return f"{_ring.describe(int(_reps[i]))}+I"

    quotient_ring = FiniteRing(
        q,
        int(proj[ring.one]),
        add,
        mul,
        label=label or f"{ring.label}/I",
        provenance={
            "kind": "quotient",
            "base_label": ring.label,
            "ideal": [int(x) for x in m],
            "reps": [int(r) for r in reps],
        },
        decoder=decoder,
        cap=cap,
    )
    proj.setflags(write=False)
    return quotient_ring, proj


def truncated_power_series(base: FiniteRing, k: int, *, label: str | None = None, cap: int | None = None) -> FiniteRing:
    """R[x]/(x^k): length-k coefficient vectors under Cauchy products.

    A finite stand-in for power series over R: x is nilpotent, units are
    exactly the vectors with unit constant term.
    """
    if k < 1:
        raise ValueError("truncation degree must be at least 1")
    n = base.order**k
    _check_cap(n, cap, "truncated series ring")
    radices = (base.order,) * k
    digits = _decode_digits(n, radices)
    add_cols = [base.add_table[np.ix_(digits[:, c], digits[:, c])] for c in range(k)]
    add = _encode_cols(add_cols, radices)
    mul_cols = []
    for i in range(k):
        acc = None
        for j in range(i + 1):
            term = base.mul_table[np.ix_(digits[:, j], digits[:, i - j])]
            acc = term if acc is None else base.add_table[acc, term]
        mul_cols.append(acc)
    mul = _encode_cols(mul_cols, radices)
    one = base.one * base.order**(k - 1)

    def decoder(i: int, _k=k, _n=base.order, _base=base) -> str:
        coeffs = []
        for _ in range(_k):
            coeffs.append(i % _n)
            i //= _n
        coeffs.reverse()
        terms = []
        for power, c in enumerate(coeffs):
            if c or power == 0:
                unit = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
                terms.append(f"{_base.describe(c)}{unit}" if power == 0 or c != _base.one else unit or "1")
        return "+".join(terms)

    return FiniteRing(
        n,
        int(one),
        add,
        mul,
        label=label or f"{base.label}[x]/x^{k}",
        provenance={"kind": "series", "k": k, "base_order": base.order, "radices": list(radices)},
        decoder=decoder,
        cap=cap,
    )


def series_constant_term(ambient: FiniteRing, idx: int) -> int:
    """Constant coefficient of a truncated-series element."""
    prov = ambient.provenance or {}
    if prov.get("kind") != "series":
        raise ValueError("not a truncated series ring")
    return idx // (prov["base_order"] ** (prov["k"] - 1))


@dataclass(frozen=True)
class CornerRing:
    """The corner e*R*e with its embedding back into the parent ring."""

    ring: FiniteRing
    parent: FiniteRing
    e: int
    carrier: tuple[int, ...]
    position: dict

    def embed(self, i: int) -> int:
        return self.carrier[i]


def corner_ring(ring: FiniteRing, e: int, *, label: str | None = None) -> CornerRing:
    """The subring e*R*e with unity e (e must be idempotent)."""
    if not ring.is_idempotent(e):
        raise ValueError(f"corner_ring requires an idempotent, got {e}")
    exe = ring.mul_table[ring.mul_table[e, :], e]
    carrier = tuple(int(x) for x in np.unique(exe))
    position = {x: i for i, x in enumerate(carrier)}
    arr = np.array(carrier, dtype=np.int32)
    lut = np.full(ring.order, -1, dtype=np.int32)
    lut[arr] = np.arange(len(carrier))
    add = lut[ring.add_table[np.ix_(arr, arr)]]
    mul = lut[ring.mul_table[np.ix_(arr, arr)]]
    if (add < 0).any() or (mul < 0).any():
        raise RuntimeError("corner carrier is not closed; e is not idempotent?")
    corner = FiniteRing(
        len(carrier),
        position[e],
        add,
        mul,
        label=label or f"{ring.label}|e={e}",
        provenance={
            "kind": "corner",
            "e": e,
            "base_label": ring.label,
            "carrier": [int(c) for c in carrier],
        },
        decoder=lambda i, _c=carrier, _r=ring: _r.describe(_c[i]),
    )
    return CornerRing(ring=corner, parent=ring, e=e, carrier=carrier, position=position)
