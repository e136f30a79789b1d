"""Independent oracle and theorem-checking harness.

Everything about the induced ideal L is recomputed from scratch here and
compared against the construction: a Taylor-resolution oracle for Betti
tables (sharing only ideal arithmetic and generic rank computations with the
builder), a second oracle via reduced simplicial homology of upper Koszul
complexes over the lcm lattice (used beyond the Taylor cap and as a
cross-check), and one PASS/FAIL check per structural statement.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .builder import (
    DoubleComplex,
    GmpiInstance,
    StarComplex,
    TotalComplex,
    build_double_complex,
    build_star_complex,
    minimal_total_table,
    product_formula_holds,
    star_acyclicity,
    total_complex,
)
from .complexes import (
    BettiTable,
    SizeCapError,
    betti_table,
    euler_characteristic_at,
    is_linear_resolution,
    minimalize_complex,
    regularity,
    scalar_complex_exactness,
    taylor_complex,
)
from .monomials import MonomialIdeal, lcm, total_degree


@dataclass
class CheckResult:
    name: str
    label: str
    passed: bool
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.details.get("hypothesis_unmet"):
            return "HYPOTHESIS-UNMET"
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        extras = ", ".join(f"{k}={v}" for k, v in self.details.items())
        return f"[{self.status}] {self.label}: {self.name}" + (f" ({extras})" if extras else "")

    def to_json(self) -> dict:
        return {
            "name": self.name, "label": self.label, "passed": self.passed,
            "status": self.status,
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return list(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


# ---------------------------------------------------------------------------
# oracles

def oracle_betti(L: MonomialIdeal, cap: int = 14) -> BettiTable:
    """Ground-truth Betti table: minimalized Taylor resolution of S/L."""
    if L.is_zero or L.is_unit:
        raise ValueError("oracle needs a nonzero proper ideal")
    if len(L.gens) > cap:
        raise SizeCapError(f"{len(L.gens)} generators exceed the oracle cap {cap}")
    return betti_table(minimalize_complex(taylor_complex(L, cap=cap)))


def lcm_lattice(I: MonomialIdeal, cap: int = 5000) -> list[tuple[int, ...]]:
    """Joins of nonempty generator subsets (closure under pairwise lcm)."""
    lattice = set(I.gens)
    frontier = set(I.gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in lattice:
                c = lcm(a, b)
                if c not in lattice:
                    fresh.add(c)
        lattice |= fresh
        if len(lattice) > cap:
            raise SizeCapError(f"lcm lattice exceeds {cap} elements")
        frontier = fresh
    return sorted(lattice)


def _reduced_homology_dims(faces: set[frozenset]) -> dict[int, int]:
    """Reduced simplicial homology dimensions over the rationals.

    ``faces`` must be closed under taking subsets and contain the empty face
    when nonempty; dimension k faces have k+1 vertices (the empty face has
    dimension -1).
    """
    if not faces:
        return {}
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for lv in by_dim.values():
        lv.sort()
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(by_dim[d])} for d in by_dim}
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        rows = []
        lower = index.get(d - 1, {})
        for f in by_dim.get(d, []):
            row = [Fraction(0)] * len(lower)
            for j in range(len(f)):
                sub = f[:j] + f[j + 1:]
                row[lower[sub]] += Fraction((-1) ** j)
            rows.append(row)
        ranks[d] = linalg.rank(rows) if rows and lower else 0
    out = {}
    for d in range(-1, top + 1):
        dim = len(by_dim.get(d, []))
        out[d] = dim - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return out


def koszul_betti(I: MonomialIdeal, max_lattice: int = 5000, max_support: int = 12) -> BettiTable:
    """Multigraded Betti numbers of S/I via upper Koszul simplicial complexes.

    beta_{i,b}(I) is the reduced (i-1)-homology of the complex of squarefree
    F with x^(b-F) in I; candidate degrees run over the lcm lattice.  Fully
    independent of the Taylor route.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("oracle needs a nonzero proper ideal")
    table = BettiTable()
    zero = (0,) * I.ctx.nvars
    table.entries[(0, 0)] = 1
    table.multi[(0, zero)] = 1
    for b in lcm_lattice(I, cap=max_lattice):
        support = [c for c, e in enumerate(b) if e > 0]
        if len(support) > max_support:
            raise SizeCapError(f"support of {b} exceeds {max_support} variables")
        faces = set()
        for rr in range(len(support) + 1):
            for combo in itertools.combinations(support, rr):
                reduced = list(b)
                for c in combo:
                    reduced[c] -= 1
                if I.member(tuple(reduced)):
                    faces.add(frozenset(combo))
        hdims = _reduced_homology_dims(faces)
        for i in range(0, len(support) + 1):
            beta = hdims.get(i - 1, 0)
            if beta:
                k = i + 1  # quotient indexing
                j = total_degree(b)
                table.entries[(k, j)] = table.entries.get((k, j), 0) + beta
                table.multi[(k, b)] = table.multi.get((k, b), 0) + beta
    return table


def betti_for_ideal(L: MonomialIdeal, cap: int = 14) -> tuple[BettiTable, str]:
    """Oracle table plus which oracle produced it."""
    if len(L.gens) <= cap:
        return oracle_betti(L, cap=cap), "taylor"
    return koszul_betti(L), "koszul"


# ---------------------------------------------------------------------------
# structural checks (all corruption-tolerant: FAIL with a witness, no raise)

def check_scalar_exactness(inst: GmpiInstance, lams=None) -> CheckResult:
    lams = lams if lams is not None else inst.lam[1:]
    ranks = inst.resolution.ranks
    rk = [0] + [linalg.rank(m) for m in lams] + [0]
    bad = [i for i in range(len(ranks)) if rk[i] + rk[i + 1] != ranks[i]]
    details = {} if not bad else {"witness_positions": tuple(bad)}
    return CheckResult("scalar-complex-exactness", inst.label, not bad, details)


def check_lcm_shifts(inst: GmpiInstance, lams=None) -> CheckResult:
    """Each deeper shift is the lcm of the supporting shifts one step down."""
    lams = lams if lams is not None else inst.lam
    res = inst.resolution
    if res.length < 2:
        return CheckResult("lcm-shifts", inst.label, True, {"vacuous": True})
    for i in range(2, res.length + 1):
        for j, s in enumerate(res.shifts[i]):
            rows = [k for k in range(len(res.shifts[i - 1])) if lams[i][k][j] != 0]
            acc = (0,) * len(s)
            for k in rows:
                acc = lcm(acc, res.shifts[i - 1][k])
            if acc != s:
                return CheckResult("lcm-shifts", inst.label, False,
                                   {"witness": (i, j), "expected": acc, "shift": s})
    return CheckResult("lcm-shifts", inst.label, True)


def check_degree_realization(inst: GmpiInstance, shifts=None) -> CheckResult:
    """Every block degree of every shift occurs among the generators."""
    res = inst.resolution
    shifts = shifts if shifts is not None else res.shifts
    realized = [set(ld) for ld in inst.ladders]
    for i in range(1, len(shifts)):
        for j, s in enumerate(shifts[i]):
            for l in range(inst.nblocks):
                if s[l] not in realized[l]:
                    return CheckResult("block-degree-realization", inst.label, False,
                                       {"witness": (i, j, l), "degree": s[l]})
    return CheckResult("block-degree-realization", inst.label, True)


def check_product_intersection(star: StarComplex) -> CheckResult:
    ok, witness = product_formula_holds(star)
    details = {} if ok else {"witness": witness}
    return CheckResult("product-equals-intersection", star.instance.label, ok, details)


def check_sigma_minimality(D: DoubleComplex) -> CheckResult:
    for c in range(1, len(D.columns)):
        for i, m in enumerate(D.sigmas[c].mats):
            for (r, cc) in m.entries:
                if m.row_shifts[r] == m.col_shifts[cc]:
                    return CheckResult("sigma-minimality", D.instance.label, False,
                                       {"witness": (c, i, r, cc)})
    return CheckResult("sigma-minimality", D.instance.label, True)


def check_sigma_squared(D: DoubleComplex) -> CheckResult:
    for c in range(2, len(D.columns)):
        lo, hi = D.sigmas[c - 1], D.sigmas[c]
        for i in range(min(len(lo.mats), len(hi.mats))):
            comp = lo.mats[i].compose(hi.mats[i])
            if not comp.is_zero():
                return CheckResult("sigma-squared-zero", D.instance.label, False,
                                   {"witness": (c, i)})
    return CheckResult("sigma-squared-zero", D.instance.label, True)


def check_star_acyclicity(star: StarComplex) -> CheckResult:
    ok, witness = star_acyclicity(star)
    details = {} if ok else {"witness": witness}
    return CheckResult("star-acyclicity", star.instance.label, ok, details)


def structure_checks(inst: GmpiInstance, star: StarComplex, D: DoubleComplex) -> list[CheckResult]:
    return [
        check_scalar_exactness(inst),
        check_lcm_shifts(inst),
        check_degree_realization(inst),
        check_product_intersection(star),
        check_sigma_minimality(D),
        check_sigma_squared(D),
        check_star_acyclicity(star),
    ]


# ---------------------------------------------------------------------------
# theorem checks

def check_theorem_regularity(inst: GmpiInstance, D: DoubleComplex, tot: TotalComplex,
                             oracle: BettiTable | None = None) -> CheckResult:
    reg_i = regularity(betti_table(inst.resolution))
    reg_l = regularity(minimal_total_table(tot))
    details = {"reg_I": reg_i, "reg_L": reg_l}
    if oracle is not None:
        details["reg_L_oracle"] = regularity(oracle)
    if not D.hypothesis_linear:
        details["hypothesis_unmet"] = True
        passed = details.get("reg_L_oracle", reg_l) == reg_l
    else:
        passed = reg_i == reg_l and details.get("reg_L_oracle", reg_l) == reg_l
    return CheckResult("regularity-preservation", inst.label, passed, details)


def check_pd_formula(inst: GmpiInstance, D: DoubleComplex, tot: TotalComplex,
                     oracle: BettiTable | None = None) -> CheckResult:
    pd_blocks = {key: res.length for key, res in D.blocks.items()}
    formula = 0
    for c in range(1, inst.resolution.length + 1):
        for j in range(len(inst.resolution.shifts[c])):
            formula = max(formula, c + sum(
                pd_blocks[(l, inst.shift_block_degree(c, j, l))]
                for l in range(inst.nblocks)))
    pd_tot = minimal_total_table(tot).top_position
    details = {"formula": formula, "pd_tot": pd_tot}
    if oracle is not None:
        details["pd_oracle"] = oracle.top_position
    if not D.hypothesis_linear:
        details["hypothesis_unmet"] = True
        passed = details.get("pd_oracle", pd_tot) == pd_tot
    else:
        passed = formula == pd_tot and details.get("pd_oracle", pd_tot) == pd_tot
    return CheckResult("projective-dimension-formula", inst.label, passed, details)


def check_betti_equivalence(inst: GmpiInstance, tot: TotalComplex, cap: int = 14) -> CheckResult:
    """Exact table equality (multigraded refinement included) between the
    total complex and an independent oracle."""
    try:
        oracle, which = betti_for_ideal(inst.induced, cap=cap)
    except SizeCapError as e:
        return CheckResult("betti-equivalence", inst.label, True,
                           {"skipped": str(e)})
    table = minimal_total_table(tot)
    ok = table == oracle
    details = {"oracle": which}
    if not ok:
        diff = {k: (table.entries.get(k, 0), oracle.entries.get(k, 0))
                for k in set(table.entries) | set(oracle.entries)
                if table.entries.get(k, 0) != oracle.entries.get(k, 0)}
        details["diff"] = diff
    return CheckResult("betti-equivalence", inst.label, ok, details)


def check_linearity_equivalence(inst: GmpiInstance, D: DoubleComplex, tot: TotalComplex) -> CheckResult:
    d_i = inst.inducing.generated_in_degree()
    lin_i = d_i is not None and is_linear_resolution(betti_table(inst.resolution), d_i)
    d_l = inst.induced.generated_in_degree()
    lin_l = d_l is not None and is_linear_resolution(minimal_total_table(tot), d_l)
    details = {"I_linear": lin_i, "L_linear": lin_l}
    if not D.hypothesis_linear:
        details["hypothesis_unmet"] = True
        return CheckResult("linear-resolution-equivalence", inst.label, True, details)
    return CheckResult("linear-resolution-equivalence", inst.label, lin_i == lin_l, details)


def check_engine_self(inst: GmpiInstance, tot: TotalComplex, nperms: int = 5,
                      ndegrees: int = 100) -> list[CheckResult]:
    """diff o diff, cancellation-order independence, Euler strand identity."""
    out = []
    ok = tot.complex.is_complex() and inst.resolution.is_complex()
    out.append(CheckResult("diff-squared-zero", inst.label, ok))

    L = inst.induced
    base = betti_table(minimalize_complex(taylor_complex(L)))
    rng = random.Random(f"{inst.label}/perm")
    ok = True
    for _ in range(nperms):
        perm = list(L.gens)
        rng.shuffle(perm)
        shuffled = MonomialIdeal(L.ctx, tuple(perm))
        if betti_table(minimalize_complex(taylor_complex(shuffled))) != base:
            ok = False
            break
    out.append(CheckResult("betti-permutation-invariance", inst.label, ok))

    box = [0] * L.ctx.nvars
    for level in tot.complex.shifts:
        for s in level:
            box = [max(a, b) for a, b in zip(box, s)]
    rng = random.Random(f"{inst.label}/euler")
    ok = True
    witness = None
    for _ in range(ndegrees):
        b = tuple(rng.randint(0, m + 1) for m in box)
        expected = 0 if L.member(b) else 1
        if euler_characteristic_at(tot.complex, b) != expected:
            ok = False
            witness = b
            break
    details = {} if ok else {"witness": witness}
    out.append(CheckResult("euler-strand-identity", inst.label, ok, details))
    return out


def run_instance_checks(inst: GmpiInstance, oracle_cap: int = 14,
                        with_self_checks: bool = True) -> list[CheckResult]:
    star = build_star_complex(inst)
    D = build_double_complex(inst)
    tot = total_complex(D)
    try:
        oracle, _ = betti_for_ideal(inst.induced, cap=oracle_cap)
    except SizeCapError:
        oracle = None
    results = structure_checks(inst, star, D)
    results.append(check_theorem_regularity(inst, D, tot, oracle))
    results.append(check_betti_equivalence(inst, tot, cap=oracle_cap))
    results.append(check_pd_formula(inst, D, tot, oracle))
    results.append(check_linearity_equivalence(inst, D, tot))
    if with_self_checks:
        results.extend(check_engine_self(inst, tot))
    return results


# ---------------------------------------------------------------------------
# the named example checks

def mixed_product_formula_check() -> CheckResult:
    """Squarefree Veronese mixed product on blocks (3,3) with degree pairs
    (2,1)/(1,2): the closed-form value, the total complex, and the Koszul
    oracle must all give regularity 3."""
    from .families import mixed_product_instance
    inst = mixed_product_instance((3, 3), (2, 1), (1, 2))
    D = build_double_complex(inst)
    tot = total_complex(D)
    formula = sum(max(d, e) for d, e in zip((2, 1), (1, 2))) - 1
    reg_i = regularity(betti_table(inst.resolution))
    reg_tot = regularity(minimal_total_table(tot))
    oracle = koszul_betti(inst.induced)
    reg_oracle = regularity(oracle)
    ok = formula == reg_tot == reg_oracle == reg_i == 3
    ok = ok and minimal_total_table(tot) == oracle
    return CheckResult("mixed-product-regularity-formula", "veronese(3,3)", ok,
                       {"formula": formula, "reg_tot": reg_tot, "reg_oracle": reg_oracle})


def path_identity_checks() -> list[CheckResult]:
    """Path enumeration vs the induced-ideal construction on small complete
    multipartite graphs."""
    from .families import induced_ideal_only, path_ideal_complete_multipartite, \
        squarefree_substitutions, veronese_type, _paths
    from .monomials import ideal as make_ideal, MonomialIdeal as MI
    out = []
    for parts in [(2, 2), (2, 3)]:
        for t in [2, 3]:
            ctx, paths = _paths(parts, t)
            gens = set()
            for path in paths:
                g = [0] * ctx.nvars
                for v in path:
                    g[v] = 1
                gens.add(tuple(g))
            direct = make_ideal(ctx, gens) if gens else MI(ctx, ())
            inducing = veronese_type(len(parts), t, parts)
            if inducing.is_zero:
                ok = direct.is_zero
            else:
                via = induced_ideal_only(inducing, squarefree_substitutions(inducing, parts))
                ok = direct.gens == via.gens
            ok = ok and path_ideal_complete_multipartite(parts, t).gens == direct.gens
            out.append(CheckResult("path-ideal-identity", f"K{parts},t={t}", ok,
                                   {"generators": len(direct.gens)}))
    return out


# ---------------------------------------------------------------------------
# the pinned suite

# Chosen once from a seed scan: every instance satisfies the size bounds
# (<= 3 blocks, block sizes <= 4, block degrees <= 3, <= 5 inducing
# generators, verified-linear substitutions, oracle-sized induced ideals),
# both linearity truth values occur, and two instances have depth-3
# resolutions of the inducing ideal.
SUITE_SEEDS = [1, 3, 5, 7, 8, 9, 11, 12, 14, 17, 20, 22, 25, 27, 30, 42, 46, 49, 54, 55]


def suite_instances(seeds=None) -> list[GmpiInstance]:
    from .families import random_instance
    return [random_instance(s) for s in (seeds if seeds is not None else SUITE_SEEDS)]


def run_suite(seeds=None, with_self_checks: bool = True) -> list[CheckResult]:
    results: list[CheckResult] = []
    for inst in suite_instances(seeds):
        results.extend(run_instance_checks(inst, with_self_checks=with_self_checks))
    results.append(mixed_product_formula_check())
    results.extend(path_identity_checks())
    return results


def summary_lines(results: list[CheckResult]) -> list[str]:
    lines = [r.line() for r in results]
    nfail = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - nfail}/{len(results)} checks passed")
    return lines
