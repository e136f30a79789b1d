"""Generators for the standard example families and seeded random instances.

Every family here emits ideals generated in a single degree whose linear
resolution is a known fact for the family (squarefree Veronese, powers of the
maximal ideal, stable lex segments); the builder still verifies linearity at
runtime rather than assuming it.
"""

from __future__ import annotations

import itertools
import random

from .builder import FamilyValidationError, GmpiInstance, SubstitutionFamily, validate_family
from .monomials import (
    MonomialIdeal,
    VariableContext,
    divides,
    embed_ideal,
    ideal,
    monomials_of_degree,
    simple_context,
    total_degree,
)

FAMILY_TAGS = (
    "squarefree-veronese", "power-of-maximal", "veronese-type",
    "lex-segment", "path-ideal", "mixed-product", "random",
)


def _block_ctx(m: int, name: str = "x") -> VariableContext:
    return VariableContext((m,), (name,))


def squarefree_veronese(m: int, d: int, ctx: VariableContext | None = None) -> MonomialIdeal:
    """All squarefree monomials of degree d in m variables."""
    if not 0 <= d <= m:
        raise ValueError(f"need 0 <= d <= {m}, got {d}")
    ctx = ctx or _block_ctx(m)
    gens = []
    for combo in itertools.combinations(range(m), d):
        g = [0] * m
        for c in combo:
            g[c] = 1
        gens.append(tuple(g))
    return ideal(ctx, gens)


def power_of_maximal(m: int, d: int, ctx: VariableContext | None = None) -> MonomialIdeal:
    """All monomials of degree d in m variables (the d-th power of the
    irrelevant maximal ideal)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    ctx = ctx or _block_ctx(m)
    return ideal(ctx, monomials_of_degree(ctx, d))


def veronese_type(n: int, t: int, caps: tuple[int, ...]) -> MonomialIdeal:
    """Degree-t monomials in n variables with exponents capped by
    min((t+1)/2, cap_i); the inducing ideal of the path-ideal construction."""
    if len(caps) != n:
        raise ValueError("one cap per variable required")
    bound = [min((t + 1) // 2, c) for c in caps]
    gens = [
        g for g in monomials_of_degree(simple_context(n), t)
        if all(e <= b for e, b in zip(g, bound))]
    return ideal(simple_context(n), gens) if gens else MonomialIdeal(simple_context(n), ())


def lex_segment_stable(m: int, d: int, count: int, ctx: VariableContext | None = None) -> MonomialIdeal:
    """The first ``count`` degree-d monomials in lex order, closed up to a
    stable set (initial lex segments are already stable; the closure is kept
    as a safety net)."""
    ctx = ctx or _block_ctx(m)
    monos = monomials_of_degree(ctx, d)
    if not 1 <= count <= len(monos):
        raise ValueError(f"count must be in 1..{len(monos)}")
    seg = set(monos[:count])
    changed = True
    while changed:
        changed = False
        for u in list(seg):
            for j in range(m):
                if u[j] == 0:
                    continue
                for i in range(j):
                    v = list(u)
                    v[j] -= 1
                    v[i] += 1
                    v = tuple(v)
                    if v not in seg:
                        seg.add(v)
                        changed = True
    return ideal(ctx, seg)


def lex_rank(m: int, mono: tuple[int, ...]) -> int:
    """Index of a monomial in the descending lex list of its degree."""
    monos = monomials_of_degree(_block_ctx(m), total_degree(mono))
    return monos.index(mono)


def min_covering_count(m: int, segment: MonomialIdeal, lower_degree: int) -> int:
    """Smallest lex-segment size in ``lower_degree`` whose ideal contains the
    given single-degree ideal."""
    need = 0
    lower = monomials_of_degree(_block_ctx(m), lower_degree)
    for g in segment.gens:
        best = None
        for r, v in enumerate(lower):
            if divides(v, g):
                best = r
                break
        if best is None:
            raise ValueError(f"no degree-{lower_degree} divisor of {g}")
        need = max(need, best + 1)
    return need


# ---------------------------------------------------------------------------
# path ideals of complete multipartite graphs

def _paths(parts: tuple[int, ...], t: int):
    """Vertex sequences of t pairwise distinct vertices with consecutive
    vertices in different parts; vertices are flat indices."""
    ctx = VariableContext(parts)
    verts = [(l, v) for l in range(len(parts)) for v in ctx.block_span(l)]
    out = []

    def extend(path, used):
        if len(path) == t:
            out.append(tuple(v for _, v in path))
            return
        for l, v in verts:
            if v in used:
                continue
            if path and path[-1][0] == l:
                continue
            path.append((l, v))
            used.add(v)
            extend(path, used)
            used.discard(v)
            path.pop()

    extend([], set())
    return ctx, out


def path_ideal_complete_multipartite(parts: tuple[int, ...], t: int) -> MonomialIdeal:
    """Generated by the vertex products over paths of t distinct vertices.

    Built twice: by direct path enumeration, and as the induced ideal of the
    capped Veronese inducing ideal with squarefree Veronese substitutions; the
    two minimal generating sets must agree.
    """
    if t < 2:
        raise ValueError("paths need at least two vertices")
    ctx, paths = _paths(parts, t)
    gens = set()
    for path in paths:
        g = [0] * ctx.nvars
        for v in path:
            g[v] = 1
        gens.add(tuple(g))
    direct = ideal(ctx, gens) if gens else MonomialIdeal(ctx, ())

    inducing = veronese_type(len(parts), t, parts)
    if inducing.is_zero:
        assert direct.is_zero
        return direct
    via_gmpi = induced_ideal_only(inducing, squarefree_substitutions(inducing, parts))
    assert direct.gens == via_gmpi.gens, "path enumeration disagrees with the induced ideal"
    return direct


def squarefree_substitutions(inducing: MonomialIdeal, sizes: tuple[int, ...]) -> SubstitutionFamily:
    """Squarefree Veronese substitution at every ladder degree."""
    T = VariableContext(tuple(sizes))
    ideals = {}
    for l in range(len(sizes)):
        for d in sorted({g[l] for g in inducing.gens}):
            if d >= 1:
                ideals[(l, d)] = squarefree_veronese(sizes[l], d, _block_ctx(sizes[l], T.names[l]))
    return SubstitutionFamily(T, ideals)


def induced_ideal_only(inducing: MonomialIdeal, family: SubstitutionFamily) -> MonomialIdeal:
    """The induced ideal L without building any resolutions (cheap path)."""
    T = family.T
    n = inducing.ctx.nblocks
    total = None
    for g in inducing.gens:
        acc = embed_ideal(family.at(0, g[0]), T, 0)
        for l in range(1, n):
            acc = acc * embed_ideal(family.at(l, g[l]), T, l)
        total = acc if total is None else total + acc
    return total


def mixed_product_instance(
    sizes: tuple[int, ...],
    degs1: tuple[int, ...],
    degs2: tuple[int, ...],
) -> GmpiInstance:
    """Classical two-term mixed product: induced by (x^degs1, x^degs2) with
    squarefree Veronese substitutions on each block (which are nested, so the
    containment hypotheses hold automatically)."""
    n = len(sizes)
    if len(degs1) != n or len(degs2) != n:
        raise ValueError("one degree per block in each term")
    for l in range(n):
        if max(degs1[l], degs2[l]) > sizes[l]:
            raise ValueError(f"block {l}: degree exceeds block size for squarefree generators")
    inducing = ideal(simple_context(n), [tuple(degs1), tuple(degs2)])
    T = VariableContext(tuple(sizes))
    ideals = {}
    for l in range(n):
        for d in {degs1[l], degs2[l]}:
            if d >= 1:
                ideals[(l, d)] = squarefree_veronese(sizes[l], d, _block_ctx(sizes[l], T.names[l]))
    return validate_family(inducing, SubstitutionFamily(T, ideals),
                           label=f"mixed{degs1}x{degs2}")


# ---------------------------------------------------------------------------
# seeded random instances

def _random_block_family(rng: random.Random, m: int, ladder: list[int], name: str,
                         max_block_gens: int):
    """Substitution ideals for one block, nested by construction."""
    choices = ["power"]
    if max(ladder) <= m:
        choices.append("sqfree")
    if m >= 2:
        choices.append("lex")
    tag = rng.choice(choices)
    ctx = _block_ctx(m, name)
    out = {}
    if tag == "sqfree":
        for d in ladder:
            out[d] = squarefree_veronese(m, d, ctx)
    elif tag == "power":
        for d in ladder:
            out[d] = power_of_maximal(m, d, ctx)
    else:
        prev = None
        for d in sorted(ladder, reverse=True):
            total = len(monomials_of_degree(ctx, d))
            lo = min_covering_count(m, prev, d) if prev is not None else 1
            if lo > total:
                return None
            out[d] = lex_segment_stable(m, d, rng.randint(lo, total), ctx)
            prev = out[d]
    if any(len(idl.gens) > max_block_gens for idl in out.values()):
        return None
    return out


def random_instance(
    seed: int,
    max_blocks: int = 3,
    max_block_size: int = 4,
    max_gens: int = 5,
    max_block_degree: int = 3,
    max_induced_gens: int = 8,
    max_block_gens: int = 8,
    max_grid_cells: int = 40_000,
) -> GmpiInstance:
    """Deterministic instance from a seed, with all substitutions drawn from
    the verified-linear families and sizes kept inside the oracle guardrails."""
    rng = random.Random(seed)
    for _ in range(300):
        n = rng.randint(1, max_blocks)
        sizes = tuple(rng.randint(1, max_block_size) for _ in range(n))
        # distinct vectors of one total degree form an antichain, so sampling
        # inside a degree gives full-size generating sets; an extra vector of
        # a neighbouring degree (sometimes) makes mixed-degree instances
        target = rng.randint(max(2, n), n * max_block_degree - 1)
        pool = [
            g for g in monomials_of_degree(simple_context(n), target)
            if all(e <= max_block_degree for e in g)]
        if len(pool) < 2:
            continue
        k = rng.randint(2, min(max_gens, len(pool)))
        gens = set(rng.sample(pool, k))
        if rng.random() < 0.4:
            extra = tuple(rng.randint(0, max_block_degree) for _ in range(n))
            if any(extra) and sum(extra) in (target - 1, target + 1):
                gens.add(extra)
        inducing = ideal(simple_context(n), gens)
        if inducing.is_unit or inducing.is_zero or len(inducing.gens) < 2:
            continue
        T = VariableContext(sizes)
        ideals = {}
        feasible = True
        for l in range(n):
            ladder = sorted({g[l] for g in inducing.gens if g[l] >= 1})
            if not ladder:
                continue
            block = _random_block_family(rng, sizes[l], ladder, T.names[l], max_block_gens)
            if block is None:
                feasible = False
                break
            for d, idl in block.items():
                ideals[(l, d)] = idl
        if not feasible:
            continue
        try:
            inst = validate_family(inducing, SubstitutionFamily(T, ideals),
                                   label=f"seed{seed}")
        except FamilyValidationError:
            continue
        if len(inst.induced.gens) > max_induced_gens:
            continue
        cells = 1
        for c in range(T.nvars):
            vals = {0}
            for idl in [inst.induced] + inst.products:
                vals.update(g[c] for g in idl.gens)
            cells *= len(vals)
        if cells > max_grid_cells:
            continue
        return inst
    raise RuntimeError(f"no feasible instance found for seed {seed}")
