"""Multigraded free complexes over a polynomial ring with rational coefficients.

A free module here is a list of multidegree shifts; a map between free modules
is multihomogeneous of degree zero, so the entry in position (r, c) is forced
to be a rational scalar times x^(col_shift - row_shift).  Only the scalar is
stored.  Composition is then plain scalar matrix multiplication, and a map is
minimal exactly when no stored entry sits between equal shifts.

The entry point for resolutions is the Taylor complex; Gaussian cancellation
of unit entries (the standard chain-complex reduction lemma) turns it into
the minimal resolution.  Strand machinery restricts a complex to a single
multidegree, where exactness and homology become finite rational rank
computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .monomials import MonomialIdeal, VariableContext, divides, lcm, total_degree


class SizeCapError(ValueError):
    """Raised when a construction would exceed its configured size cap."""


ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class MonomialMatrix:
    """Degree-zero multihomogeneous map between shifted free modules.

    ``entries[(r, c)]`` is the scalar of the term
    scalar * x^(col_shifts[c] - row_shifts[r]); the difference must be
    componentwise nonnegative wherever an entry is stored.
    """

    ctx: VariableContext
    row_shifts: list[tuple[int, ...]]
    col_shifts: list[tuple[int, ...]]
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def validate(self) -> None:
        for (r, c), v in self.entries.items():
            if v == 0:
                raise ValueError(f"stored zero scalar at {(r, c)}")
            mono = self.monomial_factor(r, c)
            if any(e < 0 for e in mono):
                raise ValueError(
                    f"inhomogeneous entry at {(r, c)}: {self.col_shifts[c]} - {self.row_shifts[r]}")

    def monomial_factor(self, r: int, c: int) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.col_shifts[c], self.row_shifts[r]))

    @property
    def nrows(self) -> int:
        return len(self.row_shifts)

    @property
    def ncols(self) -> int:
        return len(self.col_shifts)

    def scalar_rows(self) -> list[list[Fraction]]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column(self, c: int) -> dict[int, Fraction]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def compose(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """self o other (other feeds into self)."""
        if self.col_shifts != other.row_shifts:
            raise ValueError("inner shifts disagree in composition")
        by_col: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, k), v in self.entries.items():
            by_col.setdefault(k, []).append((r, v))
        acc: dict[tuple[int, int], Fraction] = {}
        for (k, c), w in other.entries.items():
            for r, v in by_col.get(k, ()):
                key = (r, c)
                acc[key] = acc.get(key, ZERO) + v * w
        acc = {k: v for k, v in acc.items() if v != 0}
        return MonomialMatrix(self.ctx, self.row_shifts, other.col_shifts, acc)

    def is_zero(self) -> bool:
        return not self.entries

    def has_unit_entry(self) -> bool:
        return any(self.row_shifts[r] == self.col_shifts[c] for (r, c) in self.entries)


def zero_matrix(ctx, row_shifts, col_shifts) -> MonomialMatrix:
    return MonomialMatrix(ctx, list(row_shifts), list(col_shifts), {})


@dataclass
class FreeComplex:
    """Complex of shifted free modules, positions 0..p, diff[i]: i -> i-1."""

    ctx: VariableContext
    shifts: list[list[tuple[int, ...]]]
    diffs: list[MonomialMatrix | None]  # diffs[0] is None

    @property
    def length(self) -> int:
        return len(self.shifts) - 1

    @property
    def ranks(self) -> list[int]:
        return [len(s) for s in self.shifts]

    def validate(self) -> None:
        assert self.diffs[0] is None and len(self.diffs) == len(self.shifts)
        for i in range(1, len(self.shifts)):
            d = self.diffs[i]
            if d.row_shifts != self.shifts[i - 1] or d.col_shifts != self.shifts[i]:
                raise ValueError(f"differential {i} does not match the shift lists")
            d.validate()
        for i in range(2, len(self.shifts)):
            if not self.diffs[i - 1].compose(self.diffs[i]).is_zero():
                raise ValueError(f"diff o diff != 0 at position {i}")

    def is_complex(self) -> bool:
        return all(
            self.diffs[i - 1].compose(self.diffs[i]).is_zero()
            for i in range(2, len(self.shifts)))

    @property
    def is_minimal(self) -> bool:
        return not any(self.diffs[i].has_unit_entry() for i in range(1, len(self.shifts)))

    def copy(self) -> "FreeComplex":
        return FreeComplex(
            self.ctx,
            [list(s) for s in self.shifts],
            [None] + [
                MonomialMatrix(d.ctx, list(d.row_shifts), list(d.col_shifts), dict(d.entries))
                for d in self.diffs[1:]],
        )


def make_complex(ctx, shifts, diffs) -> FreeComplex:
    c = FreeComplex(ctx, shifts, diffs)
    c.validate()
    return c


# ---------------------------------------------------------------------------
# Taylor complex

def taylor_complex(I: MonomialIdeal, cap: int = 14) -> FreeComplex:
    """Taylor resolution of S/I: position k is spanned by k-subsets of G(I)."""
    if I.is_zero or I.is_unit:
        raise ValueError("Taylor complex needs a nonzero proper ideal")
    gens = list(I.gens)
    k = len(gens)
    if k > cap:
        raise SizeCapError(f"{k} generators exceed the Taylor cap {cap}")
    zero = (0,) * I.ctx.nvars

    def sub_lcm(subset):
        acc = zero
        for t in subset:
            acc = lcm(acc, gens[t])
        return acc

    subsets = [list(itertools.combinations(range(k), size)) for size in range(k + 1)]
    shifts = [[sub_lcm(s) for s in level] for level in subsets]
    index = [{s: i for i, s in enumerate(level)} for level in subsets]

    diffs: list[MonomialMatrix | None] = [None]
    for size in range(1, k + 1):
        entries: dict[tuple[int, int], Fraction] = {}
        for c, subset in enumerate(subsets[size]):
            for j in range(size):
                face = subset[:j] + subset[j + 1:]
                r = index[size - 1][face]
                entries[(r, c)] = Fraction((-1) ** j)
        diffs.append(MonomialMatrix(I.ctx, shifts[size - 1], shifts[size], entries))
    return make_complex(I.ctx, shifts, diffs)


# ---------------------------------------------------------------------------
# minimalization by unit-entry cancellation

def minimalize_complex(C: FreeComplex) -> FreeComplex:
    """Homotopy-equivalent complex with no unit entries.

    Cancels unit entries (nonzero scalar between equal shifts) by the Gaussian
    elimination lemma: cancelling (r, c) in diff[i] drops basis element c of
    position i and r of position i-1, updates diff[i] by
    e(r',c') -= e(r',c) e(r,c') / e(r,c), drops row c of diff[i+1] and column
    r of diff[i-1].  Scan order: lowest position first, then lexicographic
    (row, col); the resulting Betti numbers are order-independent.
    """
    p = C.length
    alive = [set(range(len(C.shifts[i]))) for i in range(p + 1)]
    final_rows: list[dict[int, dict[int, Fraction]] | None] = [None] * (p + 1)

    for i in range(1, p + 1):
        rows: dict[int, dict[int, Fraction]] = {}
        cols: dict[int, dict[int, Fraction]] = {}
        units: set[tuple[int, int]] = set()
        rsh, csh = C.shifts[i - 1], C.shifts[i]
        for (r, c), v in C.diffs[i].entries.items():
            if r in alive[i - 1] and c in alive[i]:
                rows.setdefault(r, {})[c] = v
                cols.setdefault(c, {})[r] = v
                if rsh[r] == csh[c]:
                    units.add((r, c))

        def set_entry(r, c, v):
            if v == 0:
                rows.get(r, {}).pop(c, None)
                cols.get(c, {}).pop(r, None)
                units.discard((r, c))
            else:
                rows.setdefault(r, {})[c] = v
                cols.setdefault(c, {})[r] = v
                if rsh[r] == csh[c]:
                    units.add((r, c))

        while units:
            r0, c0 = min(units)
            u = rows[r0][c0]
            col_entries = [(r, v) for r, v in cols[c0].items() if r != r0]
            row_entries = [(c, v) for c, v in rows[r0].items() if c != c0]
            for r, vc in col_entries:
                for c, vr in row_entries:
                    cur = rows.get(r, {}).get(c, ZERO)
                    set_entry(r, c, cur - vc * vr / u)
            for c, _ in row_entries:
                set_entry(r0, c, 0)
            for r, _ in col_entries:
                set_entry(r, c0, 0)
            units.discard((r0, c0))
            rows.pop(r0, None)
            cols.pop(c0, None)
            alive[i - 1].discard(r0)
            alive[i].discard(c0)
        final_rows[i] = rows

    # compact to fresh index ranges
    new_index = [
        {old: new for new, old in enumerate(sorted(alive[i]))} for i in range(p + 1)]
    shifts = [[C.shifts[i][old] for old in sorted(alive[i])] for i in range(p + 1)]
    diffs: list[MonomialMatrix | None] = [None]
    for i in range(1, p + 1):
        entries = {}
        for r, rowmap in final_rows[i].items():
            if r not in new_index[i - 1]:
                continue
            for c, v in rowmap.items():
                if c in new_index[i]:
                    entries[(new_index[i - 1][r], new_index[i][c])] = v
        diffs.append(MonomialMatrix(C.ctx, shifts[i - 1], shifts[i], entries))

    while len(shifts) > 1 and not shifts[-1]:
        shifts.pop()
        diffs.pop()

    out = FreeComplex(C.ctx, shifts, diffs)
    _normalize_augmentation(out)
    out.validate()
    assert out.is_minimal
    return out


def _normalize_augmentation(C: FreeComplex) -> None:
    """Rescale position-1 basis so the first scalar matrix is an all-ones row.

    Only applies to quotient-style resolutions (position 0 of rank one in
    multidegree zero); elsewhere the convention is undefined and nothing is
    touched.
    """
    if C.length < 1 or C.ranks[0] != 1 or any(C.shifts[0][0]):
        return
    d1 = C.diffs[1]
    scale = {}
    for c in range(d1.ncols):
        s = d1.entries.get((0, c))
        if s is not None and s != 1:
            scale[c] = s
            d1.entries[(0, c)] = ONE
    if scale and C.length >= 2:
        d2 = C.diffs[2]
        for (r, c), v in list(d2.entries.items()):
            if r in scale:
                d2.entries[(r, c)] = v * scale[r]


def permute_position(C: FreeComplex, i: int, perm: list[int]) -> FreeComplex:
    """Reorder the basis of position i; perm[new] = old."""
    out = C.copy()
    inv = {old: new for new, old in enumerate(perm)}
    out.shifts[i] = [C.shifts[i][old] for old in perm]
    if i >= 1:
        d = out.diffs[i]
        d.col_shifts = out.shifts[i]
        d.entries = {(r, inv[c]): v for (r, c), v in d.entries.items()}
    if i + 1 <= out.length:
        d = out.diffs[i + 1]
        d.row_shifts = out.shifts[i]
        d.entries = {(inv[r], c): v for (r, c), v in d.entries.items()}
    return out


def ideal_resolution(I: MonomialIdeal, cap: int = 14) -> FreeComplex:
    """Minimal resolution of the ideal I itself (position 0 = its generators).

    Obtained from the minimal resolution of S/I by chopping off position zero;
    position 0 is reordered to match the canonical generator order, so basis
    element j maps to the j-th generator under the augmentation e_j -> x^shift.
    """
    quot = minimalize_complex(taylor_complex(I, cap=cap))
    perm = [quot.shifts[1].index(g) for g in I.gens]
    quot = permute_position(quot, 1, perm)
    shifts = [list(s) for s in quot.shifts[1:]]
    diffs: list[MonomialMatrix | None] = [None]
    for i in range(2, quot.length + 1):
        d = quot.diffs[i]
        diffs.append(MonomialMatrix(quot.ctx, shifts[i - 2], shifts[i - 1], dict(d.entries)))
    out = FreeComplex(quot.ctx, shifts, diffs)
    out.validate()
    return out


def free_module_resolution(ctx: VariableContext, gens: list[tuple[int, ...]]) -> FreeComplex:
    """Length-zero complex: a free module on the given shifts (e.g. the ring)."""
    return FreeComplex(ctx, [list(gens)], [None])


# ---------------------------------------------------------------------------
# scalar matrices and the scalar complex

def scalar_matrices(C: FreeComplex) -> list[list[list[Fraction]]]:
    """Dense scalar parts of the differentials of a minimal complex."""
    if not C.is_minimal:
        raise ValueError("scalar matrices are only defined for a minimal complex")
    return [C.diffs[i].scalar_rows() for i in range(1, C.length + 1)]


def scalar_complex_exactness(lams: list[list[list[Fraction]]], ranks: list[int]) -> bool:
    """Exactness of the scalar complex 0 -> K^{b_p} -> ... -> K^{b_1} -> K -> 0.

    Holds iff rank(lam_i) + rank(lam_{i+1}) = ranks[i] for every position,
    treating the maps off both ends as zero.
    """
    rk = [0] + [linalg.rank(m) for m in lams] + [0]
    return all(rk[i] + rk[i + 1] == ranks[i] for i in range(len(ranks)))


# ---------------------------------------------------------------------------
# strands and exactness

@dataclass
class Strand:
    """Degree-b component of a complex: dimensions and dense rational maps."""

    degree: tuple[int, ...]
    alive: list[list[int]]          # per position, included basis indices
    matrices: list[list[list[Fraction]]]  # matrices[i]: position i+1 -> position i strand

    @property
    def dims(self) -> list[int]:
        return [len(a) for a in self.alive]


def strand(C: FreeComplex, b: tuple[int, ...]) -> Strand:
    alive = [[j for j, s in enumerate(level) if divides(s, b)] for level in C.shifts]
    mats = []
    for i in range(1, C.length + 1):
        rows, cols = alive[i - 1], alive[i]
        d = C.diffs[i].entries
        mats.append([[d.get((r, c), ZERO) for c in cols] for r in rows])
    return Strand(b, alive, mats)


def degree_grid(shift_levels: list[list[tuple[int, ...]]], nvars: int):
    """Axes of distinct per-coordinate values among the shifts (plus zero).

    Strand isomorphism classes are constant between consecutive values of each
    coordinate, so scanning this grid covers the whole box [0, max shifts].
    """
    axes = []
    for c in range(nvars):
        vals = {0}
        for level in shift_levels:
            vals.update(s[c] for s in level)
        axes.append(sorted(vals))
    return axes


def grid_size(axes) -> int:
    n = 1
    for a in axes:
        n *= len(a)
    return n


def _alive_masks(shift_levels, points: np.ndarray):
    """Per level, a bool array of shape (rank, npoints): shift <= point."""
    out = []
    for level in shift_levels:
        if level:
            arr = np.array(level, dtype=np.int64)          # (rank, nvars)
            mask = (points[None, :, :] >= arr[:, None, :]).all(axis=2)
        else:
            mask = np.zeros((0, len(points)), dtype=bool)
        out.append(mask)
    return out


def exactness_check(
    C: FreeComplex,
    expect_h0: MonomialIdeal,
    style: str = "quotient",
    max_cells: int = 200_000,
):
    """Strand-exactness of C over the finite degree grid.

    For every grid multidegree b: homology must vanish in positive positions,
    and the H_0 dimension must match membership of x^b in ``expect_h0``
    (quotient style: 1 iff not a member; ideal style: 1 iff a member).
    Returns (True, None) or (False, witness_multidegree).
    """
    # the strand rank arithmetic presumes an actual complex; a corrupted
    # differential must surface here, witnessed by the offending multidegree
    for i in range(2, C.length + 1):
        comp = C.diffs[i - 1].compose(C.diffs[i])
        if not comp.is_zero():
            _, c = next(iter(comp.entries))
            return False, comp.col_shifts[c]
    # membership of the expected H_0 must jump on the grid too
    axes = degree_grid(C.shifts + [list(expect_h0.gens)], C.ctx.nvars)
    ncells = grid_size(axes)
    if ncells > max_cells:
        raise SizeCapError(f"degree grid has {ncells} cells (cap {max_cells})")
    points = np.array(list(itertools.product(*axes)), dtype=np.int64)
    alive = _alive_masks(C.shifts, points)
    member = _member_mask(expect_h0, points)

    scalars = [None] + [C.diffs[i].entries for i in range(1, C.length + 1)]
    rank_memo: dict[tuple, int] = {}

    def strand_rank(i, rows, cols):
        key = (i, rows, cols)
        if key not in rank_memo:
            d = scalars[i]
            mat = [[d.get((r, c), ZERO) for c in cols] for r in rows]
            rank_memo[key] = linalg.rank(mat) if rows and cols else 0
        return rank_memo[key]

    p = C.length
    for cell in range(len(points)):
        live = [tuple(np.nonzero(alive[i][:, cell])[0]) for i in range(p + 1)]
        ranks = [0] * (p + 2)
        for i in range(1, p + 1):
            ranks[i] = strand_rank(i, live[i - 1], live[i])
        ok = True
        for i in range(1, p + 1):
            if len(live[i]) - ranks[i] - ranks[i + 1] != 0:
                ok = False
                break
        if ok:
            h0 = len(live[0]) - ranks[1]
            if style == "quotient":
                expected = 0 if member[cell] else 1
            else:
                expected = 1 if member[cell] else 0
            ok = h0 == expected
        if not ok:
            return False, tuple(int(v) for v in points[cell])
    return True, None


def _member_mask(I: MonomialIdeal, points: np.ndarray) -> np.ndarray:
    if not I.gens:
        return np.zeros(len(points), dtype=bool)
    arr = np.array(I.gens, dtype=np.int64)
    return (points[None, :, :] >= arr[:, None, :]).all(axis=2).any(axis=0)


def euler_characteristic_at(C: FreeComplex, b: tuple[int, ...]) -> int:
    """Alternating sum of strand dimensions at degree b (dimensions only)."""
    total = 0
    for i, level in enumerate(C.shifts):
        n = sum(1 for s in level if divides(s, b))
        total += n if i % 2 == 0 else -n
    return total


# ---------------------------------------------------------------------------
# Betti tables and invariants

@dataclass
class BettiTable:
    """Ranks beta_{k,j} by (homological degree, total degree), with the
    multigraded refinement beta_{k,b} alongside."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    multi: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def __eq__(self, other):
        return self.entries == other.entries and self.multi == other.multi

    def max_degree(self, k: int):
        degs = [j for (kk, j) in self.entries if kk == k]
        return max(degs) if degs else None

    @property
    def top_position(self) -> int:
        return max((k for (k, _) in self.entries), default=0)

    def total_rank(self, k: int) -> int:
        return sum(v for (kk, _), v in self.entries.items() if kk == k)

    def to_json(self):
        return {
            "entries": [[k, j, v] for (k, j), v in sorted(self.entries.items())],
            "multigraded": [[k, list(b), v] for (k, b), v in sorted(self.multi.items())],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            entries={(k, j): v for k, j, v in data["entries"]},
            multi={(k, tuple(b)): v for k, b, v in data["multigraded"]},
        )

    def triangle(self) -> str:
        """Conventional triangle layout: row = j - k, column = k."""
        if not self.entries:
            return "(zero table)"
        pmax = self.top_position
        rows = range(0, max(j - k for (k, j) in self.entries) + 1)
        width = max(len(str(v)) for v in self.entries.values()) + 2
        lines = ["    " + "".join(f"{k:>{width}}" for k in range(pmax + 1))]
        for r in rows:
            cells = []
            for k in range(pmax + 1):
                v = self.entries.get((k, k + r), 0)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>3}:" + "".join(cells))
        return "\n".join(lines)


def betti_table(C: FreeComplex) -> BettiTable:
    if not C.is_minimal:
        raise ValueError("Betti numbers read off a minimal complex only")
    t = BettiTable()
    for k, level in enumerate(C.shifts):
        for s in level:
            j = total_degree(s)
            t.entries[(k, j)] = t.entries.get((k, j), 0) + 1
            t.multi[(k, s)] = t.multi.get((k, s), 0) + 1
    return t


def regularity(B: BettiTable, of_ideal: bool = True) -> int:
    """Castelnuovo-Mumford regularity from a quotient-indexed table.

    With ``of_ideal`` the table is reindexed by beta_k(I) = beta_{k+1}(S/I).
    """
    vals = []
    for (k, j), v in B.entries.items():
        if v == 0:
            continue
        if of_ideal:
            if k == 0:
                continue
            vals.append(j - (k - 1))
        else:
            vals.append(j - k)
    if not vals:
        raise ValueError("empty Betti table")
    return max(vals)


def projective_dimension(B: BettiTable) -> int:
    return B.top_position


def is_linear_resolution(B: BettiTable, d: int, of_ideal: bool = True) -> bool:
    """True iff every ideal-indexed position k sits purely in degree d + k."""
    for (k, j), v in B.entries.items():
        if v == 0:
            continue
        kk = k - 1 if of_ideal else k
        if of_ideal and k == 0:
            continue
        if j != d + kk:
            return False
    return True


# ---------------------------------------------------------------------------
# chain maps

@dataclass
class ChainMap:
    """Degree-zero chain map; mats[i] : source position i -> target position i."""

    source: FreeComplex
    target: FreeComplex
    mats: list[MonomialMatrix]

    def validate(self) -> None:
        assert len(self.mats) == self.source.length + 1
        for i, m in enumerate(self.mats):
            tgt_shifts = self.target.shifts[i] if i <= self.target.length else []
            if m.col_shifts != self.source.shifts[i] or m.row_shifts != tgt_shifts:
                raise ValueError(f"chain map shapes wrong at position {i}")
            m.validate()
        for i in range(1, self.source.length + 1):
            rhs = self.mats[i - 1].compose(self.source.diffs[i])
            if i <= self.target.length:
                lhs = self.target.diffs[i].compose(self.mats[i])
            else:
                lhs = zero_matrix(self.source.ctx, rhs.row_shifts, rhs.col_shifts)
            diff = {k: v for k, v in lhs.entries.items()}
            for k, v in rhs.entries.items():
                diff[k] = diff.get(k, ZERO) - v
            if any(v != 0 for v in diff.values()):
                raise ValueError(f"chain map does not commute at position {i}")

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self o other (zero through positions missing in the middle)."""
        assert other.target is self.source or other.target.shifts == self.source.shifts
        mats = []
        for i, m in enumerate(other.mats):
            if i <= self.source.length:
                mats.append(self.mats[i].compose(m))
            else:
                rows = self.target.shifts[i] if i <= self.target.length else []
                mats.append(zero_matrix(m.ctx, rows, m.col_shifts))
        return ChainMap(other.source, self.target, mats)

    def equal_mats(self, other: "ChainMap") -> bool:
        if len(self.mats) != len(other.mats):
            return False
        return all(a.entries == b.entries for a, b in zip(self.mats, other.mats))


def identity_chain_map(C: FreeComplex) -> ChainMap:
    mats = []
    for level in C.shifts:
        mats.append(MonomialMatrix(
            C.ctx, list(level), list(level), {(j, j): ONE for j in range(len(level))}))
    return ChainMap(C, C, mats)


def lift_chain_map(source: FreeComplex, target: FreeComplex) -> ChainMap:
    """Chain map between ideal resolutions extending an inclusion of ideals.

    Position-zero basis elements are the ideals' generators; each source
    generator g goes to (g / h) * e_h for the first target generator h
    dividing g (smallest index in the canonical order).  Higher positions are
    solved strandwise; where several solutions exist the fixed-pivot echelon
    solve picks one deterministically.
    """
    mats = []
    phi0 = MonomialMatrix(source.ctx, list(target.shifts[0]), list(source.shifts[0]), {})
    for j, g in enumerate(source.shifts[0]):
        k = next((i for i, h in enumerate(target.shifts[0]) if divides(h, g)), None)
        if k is None:
            raise ValueError(f"source generator {g} is not in the target ideal")
        phi0.entries[(k, j)] = ONE
    mats.append(phi0)

    for i in range(1, source.length + 1):
        tgt_shifts = target.shifts[i] if i <= target.length else []
        phi = MonomialMatrix(source.ctx, list(tgt_shifts), list(source.shifts[i]), {})
        prev = mats[i - 1]
        v_all = prev.compose(source.diffs[i])  # target position i-1 <- source position i
        for j, b in enumerate(source.shifts[i]):
            vcol = v_all.column(j)
            prev_shifts = target.shifts[i - 1] if i - 1 <= target.length else []
            rows = [r for r, s in enumerate(prev_shifts) if divides(s, b)]
            cols = [c for c, s in enumerate(tgt_shifts) if divides(s, b)]
            assert all(r in rows for r in vcol), "homogeneity violated in lift"
            if not cols:
                if any(v != 0 for v in vcol.values()):
                    raise RuntimeError("lift hit a zero target position with nonzero image")
                continue
            a = [[target.diffs[i].entries.get((r, c), ZERO) for c in cols] for r in rows]
            bvec = [vcol.get(r, ZERO) for r in rows]
            y = linalg.solve(a, bvec)
            if y is None:
                raise RuntimeError("lift system unsolvable; target is not a resolution?")
            for c, val in zip(cols, y):
                if val != 0:
                    phi.entries[(c, j)] = val
        mats.append(phi)

    out = ChainMap(source, target, mats)
    out.validate()
    return out


# ---------------------------------------------------------------------------
# direct sums and tensor products

def direct_sum(parts: list[FreeComplex]):
    """Direct sum complex plus per-part, per-position basis offsets."""
    assert parts
    ctx = parts[0].ctx
    p = max(part.length for part in parts)
    shifts: list[list[tuple[int, ...]]] = [[] for _ in range(p + 1)]
    offsets = [[0] * (p + 1) for _ in parts]
    for i in range(p + 1):
        for t, part in enumerate(parts):
            offsets[t][i] = len(shifts[i])
            if i <= part.length:
                shifts[i].extend(part.shifts[i])
    diffs: list[MonomialMatrix | None] = [None]
    for i in range(1, p + 1):
        entries = {}
        for t, part in enumerate(parts):
            if i <= part.length:
                ro, co = offsets[t][i - 1], offsets[t][i]
                for (r, c), v in part.diffs[i].entries.items():
                    entries[(r + ro, c + co)] = v
        diffs.append(MonomialMatrix(ctx, shifts[i - 1], shifts[i], entries))
    return FreeComplex(ctx, shifts, diffs), offsets


@dataclass
class TensorResolution:
    """Tensor product of complexes living on disjoint variable blocks.

    Basis elements at total position k are labelled (profile, indices): the
    per-factor homological positions summing to k and a basis index inside
    each factor.  Signs follow the Koszul convention.
    """

    factors: list[FreeComplex]
    complex: FreeComplex
    labels: list[list[tuple[tuple[int, ...], tuple[int, ...]]]]
    index: list[dict[tuple[tuple[int, ...], tuple[int, ...]], int]]


def tensor_resolutions(
    factors: list[FreeComplex],
    ctx: VariableContext,
    embeddings: list[list[int]],
) -> TensorResolution:
    """Tensor over the ground field of block resolutions, in the big context.

    ``embeddings[l]`` lists the flat variable positions of factor l inside
    ``ctx``; factor shifts are transplanted there (blocks must be disjoint).
    """
    n = len(factors)
    nvars = ctx.nvars

    def embed(l: int, s: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * nvars
        for pos, e in zip(embeddings[l], s):
            out[pos] = e
        return tuple(out)

    def add_shifts(parts):
        out = [0] * nvars
        for l, s in enumerate(parts):
            for pos, e in zip(embeddings[l], s):
                out[pos] += e
        return tuple(out)

    total_len = sum(f.length for f in factors)
    labels: list[list[tuple[tuple[int, ...], tuple[int, ...]]]] = []
    index: list[dict] = []
    shifts: list[list[tuple[int, ...]]] = []
    for k in range(total_len + 1):
        lv = []
        for profile in _profiles(k, [f.length for f in factors]):
            ranges = [range(len(factors[l].shifts[profile[l]])) for l in range(n)]
            for idxs in itertools.product(*ranges):
                lv.append((profile, idxs))
        labels.append(lv)
        index.append({lab: i for i, lab in enumerate(lv)})
        shifts.append([
            add_shifts([factors[l].shifts[profile[l]][idxs[l]] for l in range(n)])
            for profile, idxs in lv])

    diffs: list[MonomialMatrix | None] = [None]
    for k in range(1, total_len + 1):
        entries: dict[tuple[int, int], Fraction] = {}
        for c, (profile, idxs) in enumerate(labels[k]):
            for l in range(n):
                if profile[l] == 0:
                    continue
                sign = Fraction((-1) ** sum(profile[:l]))
                fac = factors[l].diffs[profile[l]]
                col = idxs[l]
                for (r, cc), v in fac.entries.items():
                    if cc != col:
                        continue
                    tgt_profile = profile[:l] + (profile[l] - 1,) + profile[l + 1:]
                    tgt_idxs = idxs[:l] + (r,) + idxs[l + 1:]
                    rr = index[k - 1][(tgt_profile, tgt_idxs)]
                    entries[(rr, c)] = entries.get((rr, c), ZERO) + sign * v
        entries = {kk: v for kk, v in entries.items() if v != 0}
        diffs.append(MonomialMatrix(ctx, shifts[k - 1], shifts[k], entries))

    cx = FreeComplex(ctx, shifts, diffs)
    cx.validate()
    return TensorResolution(factors, cx, labels, index)


def _profiles(k: int, caps: list[int]):
    """Compositions of k bounded by caps, in lexicographic order."""
    if not caps:
        if k == 0:
            yield ()
        return
    for first in range(min(k, caps[0]) + 1):
        for rest in _profiles(k - first, caps[1:]):
            yield (first,) + rest


def tensor_chain_map(
    taus: list[ChainMap],
    src: TensorResolution,
    tgt: TensorResolution,
) -> ChainMap:
    """Tensor product of degree-zero chain maps (no signs)."""
    n = len(taus)
    mats = []
    for k in range(src.complex.length + 1):
        tgt_shifts = tgt.complex.shifts[k] if k <= tgt.complex.length else []
        m = MonomialMatrix(src.complex.ctx, list(tgt_shifts), list(src.complex.shifts[k]), {})
        if k > tgt.complex.length:
            mats.append(m)
            continue
        for c, (profile, idxs) in enumerate(src.labels[k]):
            cols = []
            dead = False
            for l in range(n):
                mat = taus[l].mats[profile[l]]
                entries = [(r, v) for (r, cc), v in mat.entries.items() if cc == idxs[l]]
                if not entries:
                    dead = True
                    break
                cols.append(entries)
            if dead:
                continue
            for combo in itertools.product(*cols):
                val = ONE
                for _, v in combo:
                    val *= v
                tgt_label = (profile, tuple(r for r, _ in combo))
                rr = tgt.index[k][tgt_label]
                m.entries[(rr, c)] = m.entries.get((rr, c), ZERO) + val
        m.entries = {kk: v for kk, v in m.entries.items() if v != 0}
        mats.append(m)
    out = ChainMap(src.complex, tgt.complex, mats)
    return out
