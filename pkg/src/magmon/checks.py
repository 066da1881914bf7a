"""Named structural checks, each verifying one universal claim on one algebra.

Every check exhausts its statement at desk scale: term-based checks run
over all bracketings, occurrences and assignments up to the configured
arity, and monoid-based checks run over all elements or element triples
of the generated translation monoid. A failing check reports the first
counterexample it hits; on a correct implementation none can fail, so a
failure always indicates a bug.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .algebra import Algebra
from .bracketings import enumerate_bracketings, path_str, subterm_occurrences, variables_inside
from .contexts import (
    ContextSpec,
    context_map,
    context_map_direct,
    format_assignment,
    realization_horizon,
    realize,
    realized_context_maps,
    verify_block_law,
)
from .errors import ParseError
from .evaluation import DEFAULT_SIZE_CAP
from .monoid import generate, j_classes, minimal_ideal, rank_ideal
from .transformations import compose


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.detail}"
        if self.counterexample is not None:
            text += f" | counterexample: {self.counterexample}"
        return text


class CheckContext:
    """Shared, lazily computed state for one (algebra, arity bound) run."""

    def __init__(self, algebra: Algebra, n_max: int, cap: int = DEFAULT_SIZE_CAP):
        self.algebra = algebra
        self.n_max = n_max
        self.cap = cap

    @cached_property
    def monoid(self):
        return generate(self.algebra)

    @cached_property
    def classes(self):
        return j_classes(self.monoid)

    @cached_property
    def tables(self):
        # composition as an index table plus a rank vector, for the
        # all-triples checks
        elems = self.monoid.elements
        index = {f: i for i, f in enumerate(elems)}
        comp = [[index[compose(g, f)] for f in elems] for g in elems]
        ranks = [f.rank() for f in elems]
        return comp, ranks


def _iter_specs(alg: Algebra, n_max: int):
    for n in range(1, n_max + 1):
        for ti, term in enumerate(enumerate_bracketings(n)):
            for occ in subterm_occurrences(term):
                inside = set(variables_inside(term, occ))
                external = [p for p in range(1, n + 1) if p not in inside]
                for combo in itertools.product(range(alg.m), repeat=len(external)):
                    pairs = tuple(zip(external, combo))
                    yield n, ti, term, occ, dict(pairs), pairs


def _where(n, ti, occ, pairs) -> str:
    return f"n={n} t={ti} u={path_str(occ)} a={format_assignment(pairs)}"


def _check_context_in_monoid(ctx: CheckContext) -> CheckResult:
    members = set(ctx.monoid.elements)
    count = 0
    for n, ti, term, occ, assignment, pairs in _iter_specs(ctx.algebra, ctx.n_max):
        kappa = context_map(ctx.algebra, ContextSpec(term, occ, assignment))
        count += 1
        if kappa not in members:
            return CheckResult(
                "context-in-monoid", False, count,
                "a context map escaped the translation monoid",
                f"{_where(n, ti, occ, pairs)} map={kappa}",
            )
    return CheckResult(
        "context-in-monoid", True, count,
        f"{count} context maps all lie in the translation monoid (arity <= {ctx.n_max})",
    )


def _check_block_law(ctx: CheckContext) -> CheckResult:
    total = 0
    for n in range(1, ctx.n_max + 1):
        report = verify_block_law(ctx.algebra, n, cap=ctx.cap)
        total += len(report.checks)
        bad = report.violations
        if bad:
            c = bad[0]
            return CheckResult(
                "block-law", False, total,
                "an extracted block differs from the mapped subterm word",
                f"{_where(c.n, c.bracketing_index, c.occurrence, c.assignment)}"
                f" expected={c.expected} actual={c.actual}",
            )
    return CheckResult(
        "block-law", True, total,
        f"{total} blocks equal the context map applied to the subterm word (arity <= {ctx.n_max})",
    )


def _check_context_direct_agreement(ctx: CheckContext) -> CheckResult:
    count = 0
    for n, ti, term, occ, assignment, pairs in _iter_specs(ctx.algebra, ctx.n_max):
        spec = ContextSpec(term, occ, assignment)
        composed = context_map(ctx.algebra, spec)
        direct = context_map_direct(ctx.algebra, spec)
        count += 1
        if composed != direct:
            return CheckResult(
                "context-direct-agreement", False, count,
                "translation composition disagrees with direct evaluation",
                f"{_where(n, ti, occ, pairs)} composed={composed} direct={direct}",
            )
    return CheckResult(
        "context-direct-agreement", True, count,
        f"{count} context maps agree with direct evaluation (arity <= {ctx.n_max})",
    )


def _check_realize_roundtrip(ctx: CheckContext) -> CheckResult:
    M = ctx.monoid
    for f in M.elements:
        realization = realize(ctx.algebra, M, f)
        back = context_map(ctx.algebra, realization.spec)
        if back != f:
            return CheckResult(
                "realize-roundtrip", False, len(M),
                "a realized one-hole term does not reproduce its target",
                f"target={f} got={back} word={' '.join(realization.word) or 'e'}",
            )
    return CheckResult(
        "realize-roundtrip", True, len(M),
        f"all {len(M)} monoid elements round-trip through their one-hole terms",
    )


def _check_c_equals_t_horizon(ctx: CheckContext) -> CheckResult:
    M = ctx.monoid
    horizon = realization_horizon(M)
    realized = realized_context_maps(ctx.algebra, horizon)
    expected = frozenset(M.elements)
    if realized != expected:
        missing = sorted(expected - realized, key=lambda t: t.images)
        extra = sorted(realized - expected, key=lambda t: t.images)
        return CheckResult(
            "c-equals-t-horizon", False, len(expected),
            f"context maps up to arity {horizon} differ from the monoid",
            f"missing={[str(f) for f in missing]} extra={[str(f) for f in extra]}",
        )
    count = len(expected)
    for cls in ctx.classes:
        count += 1
        if not set(cls.members) & realized:
            return CheckResult(
                "c-equals-t-horizon", False, count,
                "a J-class is not realized at the horizon",
                f"class rank={cls.rank} members={[str(f) for f in cls.members]}",
            )
    for r in range(1, M.m + 1):
        ideal = rank_ideal(M, r)
        if ideal.members:
            count += 1
            if not set(ideal.members) & realized:
                return CheckResult(
                    "c-equals-t-horizon", False, count,
                    "a nonempty rank ideal is not realized at the horizon",
                    f"r={r}",
                )
    return CheckResult(
        "c-equals-t-horizon", True, count,
        f"context maps up to arity {horizon} are exactly the {len(expected)}-element monoid;"
        " every J-class and nonempty rank ideal is realized",
    )


def _check_rank_monotonic(ctx: CheckContext) -> CheckResult:
    comp, ranks = ctx.tables
    size = len(ranks)
    elems = ctx.monoid.elements
    count = 0
    for gi in range(size):
        comp_g = comp[gi]
        for fi in range(size):
            rank_f = ranks[fi]
            comp_gf = comp[comp_g[fi]]
            for hi in range(size):
                if ranks[comp_gf[hi]] > rank_f:
                    return CheckResult(
                        "rank-monotonic", False, count + hi + 1,
                        "rank increased under two-sided composition",
                        f"g={elems[gi]} f={elems[fi]} h={elems[hi]}"
                        f" rank(gfh)={ranks[comp_gf[hi]]} > rank(f)={rank_f}",
                    )
            count += size
    return CheckResult(
        "rank-monotonic", True, count,
        f"rank(g o f o h) <= rank(f) on all {count} composable triples",
    )


def _check_rank_ideals_closed(ctx: CheckContext) -> CheckResult:
    comp, ranks = ctx.tables
    size = len(ranks)
    elems = ctx.monoid.elements
    count = 0
    for r in range(1, ctx.monoid.m + 1):
        member_idx = [i for i in range(size) if ranks[i] <= r]
        member_set = set(member_idx)
        for fi in member_idx:
            for gi in range(size):
                gf = comp[gi][fi]
                comp_gf = comp[gf]
                for hi in range(size):
                    if comp_gf[hi] not in member_set:
                        return CheckResult(
                            "rank-ideals-closed", False, count + hi + 1,
                            f"the rank-{r} ideal is not two-sided",
                            f"f={elems[fi]} g={elems[gi]} h={elems[hi]}"
                            f" gfh={elems[comp_gf[hi]]} has rank {ranks[comp_gf[hi]]} > {r}",
                        )
                count += size
    return CheckResult(
        "rank-ideals-closed", True, count,
        f"all rank ideals closed under two-sided composition ({count} products)",
    )


def _check_j_implies_rank(ctx: CheckContext) -> CheckResult:
    count = 0
    for cls in ctx.classes:
        count += len(cls.members)
        ranks = {f.rank() for f in cls.members}
        if len(ranks) != 1:
            return CheckResult(
                "j-implies-rank", False, count,
                "a J-class mixes ranks",
                f"ranks={sorted(ranks)} members={[str(f) for f in cls.members]}",
            )
    return CheckResult(
        "j-implies-rank", True, count,
        f"each of the {len(ctx.classes)} J-classes sits in a single rank layer",
    )


def _check_minimal_ideal_single_jclass(ctx: CheckContext) -> CheckResult:
    kernel = minimal_ideal(ctx.monoid)
    matching = [cls for cls in ctx.classes if set(cls.members) == set(kernel.members)]
    if len(matching) != 1:
        return CheckResult(
            "minimal-ideal-single-jclass", False, len(kernel.members),
            "the minimum-rank layer is not a single J-class",
            f"r_min={kernel.r} members={[str(f) for f in kernel.members]}",
        )
    return CheckResult(
        "minimal-ideal-single-jclass", True, len(kernel.members),
        f"the {len(kernel.members)} elements of rank {kernel.r} form one J-class",
    )


def _check_latin_square_permutations(ctx: CheckContext) -> CheckResult:
    alg = ctx.algebra
    if not alg.is_latin_square():
        return CheckResult(
            "latin-square-permutations", True, 0,
            "table is not a latin square; nothing to check",
        )
    M = ctx.monoid
    m = M.m
    for f in M.elements:
        if not f.is_bijection():
            return CheckResult(
                "latin-square-permutations", False, len(M),
                "a latin square produced a non-bijective element",
                f"f={f} rank={f.rank()}",
            )
    for r in range(1, m):
        if rank_ideal(M, r).members:
            return CheckResult(
                "latin-square-permutations", False, len(M) + r,
                "a latin square has a proper nonempty rank ideal",
                f"r={r}",
            )
    return CheckResult(
        "latin-square-permutations", True, len(M) + m - 1,
        f"latin square: all {len(M)} elements are bijections and every proper rank ideal is empty",
    )


CHECKS = {
    "context-in-monoid": _check_context_in_monoid,
    "block-law": _check_block_law,
    "context-direct-agreement": _check_context_direct_agreement,
    "realize-roundtrip": _check_realize_roundtrip,
    "c-equals-t-horizon": _check_c_equals_t_horizon,
    "rank-monotonic": _check_rank_monotonic,
    "rank-ideals-closed": _check_rank_ideals_closed,
    "j-implies-rank": _check_j_implies_rank,
    "minimal-ideal-single-jclass": _check_minimal_ideal_single_jclass,
    "latin-square-permutations": _check_latin_square_permutations,
}

CHECK_NAMES = tuple(CHECKS)


def run_checks(
    algebra: Algebra,
    n_max: int,
    names=None,
    cap: int = DEFAULT_SIZE_CAP,
) -> list[CheckResult]:
    """Run the named checks (all by default) in canonical order."""
    if names is None:
        wanted = set(CHECK_NAMES)
    else:
        wanted = set(names)
        unknown = sorted(wanted - set(CHECK_NAMES))
        if unknown:
            raise ParseError(
                f"unknown check name(s) {unknown}; valid: {', '.join(CHECK_NAMES)}"
            )
    ctx = CheckContext(algebra, n_max, cap)
    return [CHECKS[name](ctx) for name in CHECK_NAMES if name in wanted]
