import random
from fractions import Fraction

import pytest

from gmpi.builder import build_double_complex, build_star_complex, total_complex
from gmpi.complexes import SizeCapError
from gmpi.families import random_instance
from gmpi.monomials import ideal, simple_context
from gmpi.verify import (
    check_betti_equivalence,
    check_degree_realization,
    check_lcm_shifts,
    check_linearity_equivalence,
    check_pd_formula,
    check_product_intersection,
    check_scalar_exactness,
    check_sigma_minimality,
    check_sigma_squared,
    check_star_acyclicity,
    check_theorem_regularity,
    mixed_product_formula_check,
    koszul_betti,
    lcm_lattice,
    oracle_betti,
    path_identity_checks,
    run_instance_checks,
    structure_checks,
)

from conftest import corrupt_lambda, non_nested_instance

S2 = simple_context(2, ("x", "y"))


# -- oracles

def test_oracle_betti_koszul():
    t = oracle_betti(ideal(S2, [(1, 0), (0, 1)]))
    assert t.entries == {(0, 0): 1, (1, 1): 2, (2, 2): 1}


def test_oracle_rejects_unit_and_oversize():
    with pytest.raises(ValueError):
        oracle_betti(ideal(S2, [(0, 0)]))
    big = ideal(S2, [(d, 15 - d) for d in range(16)])
    with pytest.raises(SizeCapError):
        oracle_betti(big)


def test_lcm_lattice_small():
    I = ideal(S2, [(2, 0), (0, 2)])
    assert lcm_lattice(I) == [(0, 2), (2, 0), (2, 2)]


def test_koszul_betti_agrees_with_taylor_oracle():
    rng = random.Random(77)
    cases = [
        [(1, 0), (0, 1)],
        [(2, 0), (1, 1), (0, 3)],
        [(2, 1), (1, 2)],
        [(3, 0), (2, 2), (0, 3)],
    ]
    for _ in range(6):
        gens = {(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(4)}
        gens.discard((0, 0))
        if gens:
            cases.append(sorted(gens))
    for gens in cases:
        I = ideal(S2, gens)
        if I.is_zero or I.is_unit:
            continue
        assert koszul_betti(I) == oracle_betti(I), gens


def test_koszul_betti_three_variables():
    S3 = simple_context(3)
    I = ideal(S3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert koszul_betti(I) == oracle_betti(I)


def test_total_complex_matches_simplicial_oracle(suite):
    # a triangulation independent of both the construction and the Taylor route
    from gmpi.builder import minimal_total_table
    for item in suite[:5]:
        L = item.instance.induced
        if L.ctx.nvars > 8:
            continue
        assert minimal_total_table(item.total) == koszul_betti(L), item.seed


# -- checks pass on valid instances

def test_structure_checks_pass_on_sample():
    inst = random_instance(30)
    star = build_star_complex(inst)
    D = build_double_complex(inst)
    for r in structure_checks(inst, star, D):
        assert r.passed, r.line()


def test_full_instance_checks_pass():
    for r in run_instance_checks(random_instance(9)):
        assert r.passed, r.line()


def test_corollary_and_path_checks():
    assert mixed_product_formula_check().passed
    assert all(r.passed for r in path_identity_checks())


@pytest.mark.parametrize("sizes,d1,d2", [
    ((3, 3), (3, 1), (2, 2)),
    ((2, 3), (2, 1), (1, 3)),
    ((3, 2), (2, 1), (1, 2)),
    ((2, 2, 2), (1, 2, 1), (2, 1, 1)),
    ((4, 2), (3, 1), (1, 2)),
])
def test_mixed_product_regularity_formula(sizes, d1, d2):
    # sum of blockwise maxima minus one, for incomparable degree pairs
    from gmpi.builder import minimal_total_table
    from gmpi.complexes import betti_table, regularity
    from gmpi.families import mixed_product_instance
    inst = mixed_product_instance(sizes, d1, d2)
    D = build_double_complex(inst)
    tot = total_complex(D)
    expected = sum(max(a, b) for a, b in zip(d1, d2)) - 1
    assert regularity(minimal_total_table(tot)) == expected
    assert regularity(betti_table(inst.resolution)) == expected
    oracle = koszul_betti(inst.induced)
    assert minimal_total_table(tot) == oracle


def test_mixed_product_comparable_degrees_collapse():
    # with comparable degree pairs one term divides the other and the
    # inducing ideal is principal; the closed formula no longer applies but
    # regularity preservation still holds
    from gmpi.builder import minimal_total_table
    from gmpi.complexes import betti_table, regularity
    from gmpi.families import mixed_product_instance
    inst = mixed_product_instance((3, 2), (2, 2), (1, 1))
    assert len(inst.inducing.gens) == 1
    D = build_double_complex(inst)
    tot = total_complex(D)
    assert regularity(minimal_total_table(tot)) == regularity(betti_table(inst.resolution)) == 2


def test_lcm_check_vacuous_for_short_resolutions():
    from gmpi.builder import SubstitutionFamily, validate_family
    from gmpi.families import squarefree_veronese
    from gmpi.monomials import VariableContext
    T = VariableContext((3,), ("x",))
    inst = validate_family(
        ideal(simple_context(1, ("x",)), [(2,)]),
        SubstitutionFamily(T, {(0, 2): squarefree_veronese(3, 2)}),
        label="principal")
    res = check_lcm_shifts(inst)
    assert res.passed and res.details == {"vacuous": True}


# -- every check fails on its engineered corruption

def test_scalar_exactness_teeth():
    inst = random_instance(9)
    lams, _ = corrupt_lambda(inst, i=1)
    # killing a first-row entry breaks surjectivity onto the ground field
    for c in range(len(lams[1][0])):
        lams[1][0][c] = Fraction(0)
    assert not check_scalar_exactness(inst, lams=lams[1:]).passed


def test_lcm_shifts_teeth():
    inst = random_instance(9)
    lams, (i, r, c) = corrupt_lambda(inst, i=2)
    assert not check_lcm_shifts(inst, lams=lams).passed


def test_degree_realization_teeth():
    inst = random_instance(9)
    shifts = [list(level) for level in inst.resolution.shifts]
    s = list(shifts[1][0])
    s[0] = 9  # no generator has block degree 9
    shifts[1][0] = tuple(s)
    res = check_degree_realization(inst, shifts=shifts)
    assert not res.passed and res.details["degree"] == 9


def test_product_intersection_teeth():
    inst = random_instance(9)
    star = build_star_complex(inst)
    star.ideals[1][0] = ideal(inst.T, [(0,) * inst.T.nvars])
    assert not check_product_intersection(star).passed


def test_sigma_minimality_teeth():
    D = build_double_complex(random_instance(9))
    assert check_sigma_minimality(D).passed
    sig = D.sigmas[1].mats[0]
    (r, c) = next(iter(sig.entries))
    sig.col_shifts[c] = sig.row_shifts[r]  # forge an equal-shift (unit) entry
    assert not check_sigma_minimality(D).passed


def test_sigma_squared_teeth():
    D = build_double_complex(random_instance(9))
    assert check_sigma_squared(D).passed
    sig = D.sigmas[2].mats[0]
    (r, c), v = next(iter(sig.entries.items()))
    sig.entries[(r, c)] = v + 1
    assert not check_sigma_squared(D).passed


def test_star_acyclicity_teeth():
    star = build_star_complex(non_nested_instance())
    res = check_star_acyclicity(star)
    assert not res.passed and res.details["witness"] == (2, 0, 2, 0)


def test_betti_equivalence_teeth():
    inst = random_instance(9)
    D = build_double_complex(inst)
    tot = total_complex(D)
    assert check_betti_equivalence(inst, tot).passed
    tot.complex.shifts[1].append(tot.complex.shifts[1][0])
    broken = check_betti_equivalence(inst, tot)
    assert not broken.passed and "diff" in broken.details


# -- hypothesis flag semantics

def test_hypothesis_unmet_reported_not_failed():
    from gmpi.builder import SubstitutionFamily, validate_family
    from gmpi.monomials import VariableContext
    T = VariableContext((2,), ("a",))
    cube = ideal(VariableContext((2,), ("a",)), [(3, 0), (0, 3)])
    inst = validate_family(
        ideal(simple_context(1, ("x",)), [(3,)]),
        SubstitutionFamily(T, {(0, 3): cube}), label="nonlinear")
    D = build_double_complex(inst)
    tot = total_complex(D)
    oracle = oracle_betti(inst.induced)
    reg = check_theorem_regularity(inst, D, tot, oracle)
    assert reg.passed and reg.status == "HYPOTHESIS-UNMET"
    assert reg.details["reg_I"] == 3 and reg.details["reg_L"] == 5
    pd = check_pd_formula(inst, D, tot, oracle)
    assert pd.passed and pd.status == "HYPOTHESIS-UNMET"
    lin = check_linearity_equivalence(inst, D, tot)
    assert lin.passed and lin.status == "HYPOTHESIS-UNMET"
    # the resolution itself is still correct outside the hypotheses
    assert check_betti_equivalence(inst, tot).passed


def test_check_result_json_roundtrip():
    inst = random_instance(9)
    D = build_double_complex(inst)
    tot = total_complex(D)
    r = check_theorem_regularity(inst, D, tot, oracle_betti(inst.induced))
    blob = r.to_json()
    assert blob["status"] == "PASS" and blob["details"]["reg_I"] == blob["details"]["reg_L"]
