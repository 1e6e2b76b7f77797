"""Dense matrices indexed by the subsets of [n-1], and the builders for the
joint-distribution family: the containment (zeta) matrix and its signed
inverse, the joint descent/connectivity count matrix ``gamma``, the
superset-count matrix ``a``, the half-relaxed matrix ``b``, their
inversion-weighted q-analogues, and the closed-form inverses of all of them.

Matrix indexing convention: entry (S, T) sits at ``rows[S.mask][T.mask]``,
rows and columns in ascending-mask order. Row S of ``gamma`` counts the
permutations whose connectivity set is the *complement* of S and whose
descent set is exactly T; ``a`` relaxes both statistics to containments,
``b`` relaxes only the connectivity side. (Some treatments write C for the
joint count matrix; that letter is reserved here for the connectivity
statistic itself.)

Enumeration-backed builders all read one shared sweep of the n!
permutations; closed-form builders never enumerate and are capped only by
matrix side.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Iterable

from .permutations import connectivity_mask, joint_statistics, multiset_words
from .rings import IntPolynomial, LaurentPolynomial, q_multinomial
from .subsets import SubsetMask, eta, eta_q, min_inversions

__all__ = [
    "INTEGER",
    "POLYNOMIAL",
    "LAURENT",
    "CLOSED_FORM_CAP",
    "SubsetMatrix",
    "zeta_matrix",
    "mobius_matrix",
    "gamma_matrix",
    "gamma_q_matrix",
    "a_matrix_closed",
    "a_q_matrix_closed",
    "a_matrix_from_gamma",
    "b_matrix_from_gamma",
    "b_matrix_direct",
    "b_q_matrix_direct",
    "inverse_closed",
    "diagonal_conjugation_matrix",
    "conjugation_identity_check",
    "multiset_count_matrix",
]

INTEGER = "integer"
POLYNOMIAL = "polynomial"
LAURENT = "laurent"
_RING_RANK = {INTEGER: 0, POLYNOMIAL: 1, LAURENT: 2}

# closed-form builders stop here: side 2^(n-1) entries per row get unwieldy
CLOSED_FORM_CAP = 14


def _side(n: int) -> int:
    return 1 << (n - 1)


def ring_zero(ring: str):
    if ring == INTEGER:
        return 0
    if ring == POLYNOMIAL:
        return IntPolynomial()
    if ring == LAURENT:
        return LaurentPolynomial()
    raise ValueError(f"unknown ring {ring!r}")


def ring_one(ring: str):
    if ring == INTEGER:
        return 1
    if ring == POLYNOMIAL:
        return IntPolynomial((1,))
    if ring == LAURENT:
        return LaurentPolynomial((1,))
    raise ValueError(f"unknown ring {ring!r}")


class SubsetMatrix:
    """Square matrix over one of the exact rings, indexed by subset masks."""

    __slots__ = ("n", "ring", "rows")

    def __init__(self, n: int, ring: str, rows: Iterable[Iterable]):
        if ring not in _RING_RANK:
            raise ValueError(f"unknown ring {ring!r}")
        frozen = tuple(tuple(row) for row in rows)
        side = _side(n)
        if len(frozen) != side or any(len(row) != side for row in frozen):
            raise ValueError(f"matrix for n={n} must be {side}x{side}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("SubsetMatrix is immutable")

    @classmethod
    def identity(cls, n: int, ring: str = INTEGER) -> "SubsetMatrix":
        one, zero = ring_one(ring), ring_zero(ring)
        side = _side(n)
        return cls(n, ring, [[one if i == j else zero for j in range(side)] for i in range(side)])

    @property
    def side(self) -> int:
        return _side(self.n)

    def entry(self, s: SubsetMask, t: SubsetMask):
        if s.n != self.n or t.n != self.n:
            raise ValueError(f"subset ambient size does not match matrix n={self.n}")
        return self.rows[s.mask][t.mask]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubsetMatrix):
            return NotImplemented
        return (self.n, self.ring, self.rows) == (other.n, other.ring, other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.ring, self.rows))

    def __matmul__(self, other: "SubsetMatrix") -> "SubsetMatrix":
        if not isinstance(other, SubsetMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"matrix sizes differ: n={self.n} vs n={other.n}")
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}; lift one side first")
        side = self.side
        zero = ring_zero(self.ring)
        out = []
        for arow in self.rows:
            acc = [zero] * side
            for k in range(side):
                a = arow[k]
                if not a:
                    continue
                brow = other.rows[k]
                for j in range(side):
                    b = brow[j]
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return SubsetMatrix(self.n, self.ring, out)

    def lift(self, ring: str) -> "SubsetMatrix":
        """Reinterpret over a wider ring (integer -> polynomial -> laurent)."""
        if ring not in _RING_RANK:
            raise ValueError(f"unknown ring {ring!r}")
        if ring == self.ring:
            return self
        if _RING_RANK[ring] < _RING_RANK[self.ring]:
            raise ValueError(f"cannot narrow {self.ring} matrix to {ring}")
        if ring == POLYNOMIAL:
            convert: Callable = lambda v: IntPolynomial((v,))
        elif self.ring == INTEGER:
            convert = lambda v: LaurentPolynomial((v,))
        else:
            convert = LaurentPolynomial.from_polynomial
        return self.map_entries(convert, ring)

    def map_entries(self, fn: Callable, ring: str) -> "SubsetMatrix":
        return SubsetMatrix(self.n, ring, [[fn(v) for v in row] for row in self.rows])

    def checkerboard_signed(self) -> "SubsetMatrix":
        """Negate every entry whose row and column cardinalities differ in
        parity: entry (S, T) gains the factor (-1)^(#S + #T)."""
        parity = [m.bit_count() & 1 for m in range(self.side)]
        out = []
        for i, row in enumerate(self.rows):
            pi = parity[i]
            out.append([-v if pi ^ parity[j] else v for j, v in enumerate(row)])
        return SubsetMatrix(self.n, self.ring, out)

    def specialize_q1(self) -> "SubsetMatrix":
        """Substitute q = 1, returning an integer matrix."""
        if self.ring == INTEGER:
            return self
        if self.ring == POLYNOMIAL:
            return self.map_entries(lambda p: p.evaluate(1), INTEGER)
        return self.map_entries(lambda p: p.evaluate_at_one(), INTEGER)

    def substitute_reciprocal(self) -> "SubsetMatrix":
        """Apply q -> 1/q entrywise; the result lives in the Laurent ring."""
        lifted = self.lift(LAURENT)
        return lifted.map_entries(lambda p: p.substitute_reciprocal(), LAURENT)

    def is_identity(self) -> bool:
        return self == SubsetMatrix.identity(self.n, self.ring)

    def __repr__(self) -> str:
        return f"SubsetMatrix(n={self.n}, ring={self.ring!r})"


def _require_closed_form_size(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > CLOSED_FORM_CAP:
        raise ValueError(f"n={n} exceeds the closed-form cap {CLOSED_FORM_CAP}")


def zeta_matrix(n: int) -> SubsetMatrix:
    """Containment indicator: entry (S, T) is 1 when S contains T.

    Lower-unitriangular in any order refining cardinality.
    """
    _require_closed_form_size(n)
    side = _side(n)
    rows = [[1 if t & ~s == 0 else 0 for t in range(side)] for s in range(side)]
    return SubsetMatrix(n, INTEGER, rows)


def mobius_matrix(n: int) -> SubsetMatrix:
    """Signed containment matrix: (-1)^(#S + #T) when S contains T.

    Exact inverse of :func:`zeta_matrix`.
    """
    return zeta_matrix(n).checkerboard_signed()


def _complement_elements(n: int, mask: int) -> list[int]:
    return [i + 1 for i in range(n - 1) if not mask >> i & 1]


def _entry_blocks(n: int, s_mask: int, t_mask: int) -> list[tuple[int, list[int]]]:
    """Blocks of [n] cut at the complement of S, each further split at the
    complement of T. Assumes T is a subset of S, so every block boundary is
    itself a split point."""
    tbar = _complement_elements(n, t_mask)
    boundaries = [0, *_complement_elements(n, s_mask), n]
    blocks = []
    for lo, hi in zip(boundaries, boundaries[1:]):
        points = [lo, *(e for e in tbar if lo < e < hi), hi]
        blocks.append((hi - lo, [b - a for a, b in zip(points, points[1:])]))
    return blocks


def _multinomial(parts: list[int]) -> int:
    out, total = 1, 0
    for p in parts:
        total += p
        out *= comb(total, p)
    return out


def a_matrix_closed(n: int) -> SubsetMatrix:
    """Superset-count matrix: entry (S, T) counts the permutations whose
    connectivity set contains the complement of S and whose descent set
    contains T.

    Assembled blockwise as a product of multinomial coefficients, with no
    division anywhere; the entry is 0 unless T is a subset of S.
    """
    _require_closed_form_size(n)
    side = _side(n)
    rows = []
    for s in range(side):
        row = []
        for t in range(side):
            if t & ~s:
                row.append(0)
            else:
                value = 1
                for length, parts in _entry_blocks(n, s, t):
                    value *= _multinomial(parts)
                row.append(value)
        rows.append(row)
    return SubsetMatrix(n, INTEGER, rows)


def a_q_matrix_closed(n: int) -> SubsetMatrix:
    """Inversion-weighted superset-count matrix.

    Each block contributes a Gaussian multinomial times q to the power of
    the least inversion count its forced descents require; the powers across
    blocks add up to the least inversion count of the whole column subset.
    """
    _require_closed_form_size(n)
    side = _side(n)
    zero = IntPolynomial()
    rows = []
    for s in range(side):
        row = []
        for t in range(side):
            if t & ~s:
                row.append(zero)
            else:
                value = IntPolynomial((1,))
                shift = 0
                for length, parts in _entry_blocks(n, s, t):
                    shift += sum(comb(p, 2) for p in parts)
                    value = value * q_multinomial(length, parts)
                row.append(value.shifted(shift))
        rows.append(row)
    return SubsetMatrix(n, POLYNOMIAL, rows)


def gamma_matrix(n: int, threads: int = 1, cap: int | None = None) -> SubsetMatrix:
    """Joint count matrix: entry (S, T) counts the permutations whose
    connectivity set is exactly the complement of S and whose descent set is
    exactly T. Built by one pass over all n! permutations."""
    joint = joint_statistics(n, threads, cap)
    side = _side(n)
    full = side - 1
    rows = [[0] * side for _ in range(side)]
    for (c, d, _inv), count in joint.items():
        rows[full ^ c][d] += count
    return SubsetMatrix(n, INTEGER, rows)


def _poly_from_inv_counts(cell: dict[int, int]) -> IntPolynomial:
    coeffs = [0] * (max(cell) + 1)
    for exp, count in cell.items():
        coeffs[exp] = count
    return IntPolynomial(coeffs)


def _laurent_from_inv_counts(cell: dict[int, int]) -> LaurentPolynomial:
    lo = min(cell)
    coeffs = [0] * (max(cell) - lo + 1)
    for exp, count in cell.items():
        coeffs[exp - lo] = count
    return LaurentPolynomial(coeffs, lo)


def gamma_q_matrix(n: int, threads: int = 1, cap: int | None = None) -> SubsetMatrix:
    """Joint count matrix refined by inversions: each permutation contributes
    q**inv(w) instead of 1. Specializes to :func:`gamma_matrix` at q=1."""
    joint = joint_statistics(n, threads, cap)
    side = _side(n)
    full = side - 1
    cells: list[list[dict[int, int] | None]] = [[None] * side for _ in range(side)]
    for (c, d, inv), count in joint.items():
        cell = cells[full ^ c][d]
        if cell is None:
            cell = cells[full ^ c][d] = {}
        cell[inv] = cell.get(inv, 0) + count
    zero = IntPolynomial()
    rows = [
        [zero if cell is None else _poly_from_inv_counts(cell) for cell in row]
        for row in cells
    ]
    return SubsetMatrix(n, POLYNOMIAL, rows)


def a_matrix_from_gamma(gamma: SubsetMatrix, zeta: SubsetMatrix) -> SubsetMatrix:
    """Relax both statistics of the joint count matrix to containments by
    sandwiching it between two containment matrices."""
    return zeta @ gamma @ zeta


def b_matrix_from_gamma(gamma: SubsetMatrix, zeta: SubsetMatrix) -> SubsetMatrix:
    """Relax only the connectivity statistic: the containment matrix times
    the joint count matrix."""
    return zeta @ gamma


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def b_matrix_direct(n: int, threads: int = 1, cap: int | None = None) -> SubsetMatrix:
    """Entry (S, T) counts the permutations whose connectivity set contains
    the complement of S and whose descent set is exactly T; built straight
    from the enumeration sweep, independently of any matrix product."""
    joint = joint_statistics(n, threads, cap)
    side = _side(n)
    full = side - 1
    rows = [[0] * side for _ in range(side)]
    for (c, d, _inv), count in joint.items():
        base = full ^ c
        for sub in _submasks(c):
            rows[base | sub][d] += count
    return SubsetMatrix(n, INTEGER, rows)


def b_q_matrix_direct(n: int, threads: int = 1, cap: int | None = None) -> SubsetMatrix:
    """Inversion-weighted version of :func:`b_matrix_direct`."""
    joint = joint_statistics(n, threads, cap)
    side = _side(n)
    full = side - 1
    cells: list[list[dict[int, int] | None]] = [[None] * side for _ in range(side)]
    for (c, d, inv), count in joint.items():
        base = full ^ c
        for sub in _submasks(c):
            cell = cells[base | sub][d]
            if cell is None:
                cell = cells[base | sub][d] = {}
            cell[inv] = cell.get(inv, 0) + count
    zero = IntPolynomial()
    rows = [
        [zero if cell is None else _poly_from_inv_counts(cell) for cell in row]
        for row in cells
    ]
    return SubsetMatrix(n, POLYNOMIAL, rows)


def _b_inverse(n: int, q: bool, threads: int, cap: int | None) -> SubsetMatrix:
    """Signed relaxed-descent counts: entry (S, T) is (-1)^(#S + #T) times
    the number of permutations whose connectivity set is exactly the
    complement of S and whose descent set contains T; with q, each one
    weighs q**(-inv(w))."""
    joint = joint_statistics(n, threads, cap)
    side = _side(n)
    full = side - 1
    if not q:
        rows = [[0] * side for _ in range(side)]
        for (c, d, _inv), count in joint.items():
            row = rows[full ^ c]
            for t in _submasks(d):
                row[t] += count
        return SubsetMatrix(n, INTEGER, rows).checkerboard_signed()
    cells: list[list[dict[int, int] | None]] = [[None] * side for _ in range(side)]
    for (c, d, inv), count in joint.items():
        row = cells[full ^ c]
        for t in _submasks(d):
            cell = row[t]
            if cell is None:
                cell = row[t] = {}
            cell[-inv] = cell.get(-inv, 0) + count
    zero = LaurentPolynomial()
    rows = [
        [zero if cell is None else _laurent_from_inv_counts(cell) for cell in row]
        for row in cells
    ]
    return SubsetMatrix(n, LAURENT, rows).checkerboard_signed()


def inverse_closed(
    kind: str,
    n: int,
    q: bool = False,
    threads: int = 1,
    cap: int | None = None,
    verify: bool = True,
) -> SubsetMatrix:
    """Closed-form inverse of one of the matrices ``a``, ``b``, ``gamma``.

    For ``a`` and ``gamma`` the inverse is the checkerboard-signed matrix
    itself (with q replaced by 1/q in the weighted case); for ``b`` it is
    built by a separate signed enumeration. q-inverses live in the Laurent
    ring. With ``verify`` (the default) the product with the original is
    checked to be the identity, exactly; failure raises ArithmeticError
    since it can only mean a transcription bug in the formulas.
    """
    if kind == "a":
        base = a_q_matrix_closed(n) if q else a_matrix_closed(n)
        inverse = base.substitute_reciprocal().checkerboard_signed() if q else base.checkerboard_signed()
    elif kind == "gamma":
        base = gamma_q_matrix(n, threads, cap) if q else gamma_matrix(n, threads, cap)
        inverse = base.substitute_reciprocal().checkerboard_signed() if q else base.checkerboard_signed()
    elif kind == "b":
        base = b_q_matrix_direct(n, threads, cap) if q else b_matrix_direct(n, threads, cap)
        inverse = _b_inverse(n, q, threads, cap)
    else:
        raise ValueError(f"unknown matrix kind {kind!r}; expected 'a', 'b' or 'gamma'")
    if verify:
        product = base.lift(inverse.ring) @ inverse
        if not product.is_identity():
            raise ArithmeticError(
                f"closed-form inverse of {kind} (n={n}, q={q}) failed the identity check"
            )
    return inverse


def diagonal_conjugation_matrix(n: int, q: bool = False) -> SubsetMatrix:
    """The containment matrix conjugated by the diagonal of complement
    weights: entry (S, T) is weight(complement S) / weight(complement T)
    when S contains T and 0 otherwise, with the least-inversion power of q
    as an extra column factor in the weighted case.

    Every division is checked exact; a remainder raises, since it would
    contradict the closed form for the superset counts.
    """
    _require_closed_form_size(n)
    side = _side(n)
    zero = ring_zero(POLYNOMIAL if q else INTEGER)
    rows = []
    for s in range(side):
        s_bar = SubsetMask(n, s).complement()
        row = []
        for t in range(side):
            if t & ~s:
                row.append(zero)
                continue
            t_bar = SubsetMask(n, t).complement()
            if q:
                shift = min_inversions(SubsetMask(n, t))
                row.append((eta_q(s_bar).shifted(shift)).exact_div(eta_q(t_bar)))
            else:
                ratio, rem = divmod(eta(s_bar), eta(t_bar))
                if rem:
                    raise ArithmeticError(
                        f"eta ratio not exact at n={n}, S={SubsetMask(n, s)}, T={SubsetMask(n, t)}"
                    )
                row.append(ratio)
        rows.append(row)
    return SubsetMatrix(n, POLYNOMIAL if q else INTEGER, rows)


def conjugation_identity_check(n: int, q: bool = False) -> bool:
    """True when the diagonal conjugation of the containment matrix equals
    the closed-form superset-count matrix, entry for entry."""
    expected = a_q_matrix_closed(n) if q else a_matrix_closed(n)
    return diagonal_conjugation_matrix(n, q) == expected


def multiset_count_matrix(n: int, cap: int | None = None) -> SubsetMatrix:
    """Entry (S, T) counts the words of the multiset of T whose connectivity
    set is exactly S, by enumerating every rearrangement.

    Equals the product (gamma times zeta) with both indices complemented.
    """
    side = _side(n)
    rows = [[0] * side for _ in range(side)]
    for t in range(side):
        for word in multiset_words(SubsetMask(n, t), cap):
            rows[connectivity_mask(word.word)][t] += 1
    return SubsetMatrix(n, INTEGER, rows)
