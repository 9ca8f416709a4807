"""Exhaustive enumeration over S_n: descent tables, verification suites,
the degree-(n-2) classification, zigzag-free counts, and reproduction of
the reference coefficient/root tables.

Enumeration is sharded by the first element of the permutation: the n
shards are independent, each accumulates exact integer counts, and the
merge is componentwise addition in shard order, so results are identical
for any worker count.  Hard cap n <= 12.
"""
from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterator, Optional

from . import patterns, trees, zigzag
from .perms import (
    Word,
    descents,
    deg_revstack,
    deg_stack,
    is_identity,
    iterate_revstack,
    revstack_sort_sim,
    reverse,
    stack_sort_sim,
)
from .polynomials import (
    IntPoly,
    count_revstack_nm2,
    count_revstack_nm3,
    count_revstack_nm3_sixterm,
    count_stack_nm2,
    count_stack_nm3,
    counting_inequalities_hold,
    degree_nm2_contributions,
    eulerian_poly,
    is_log_concave,
    is_unimodal,
    narayana_poly,
    w_revstack_nm2,
    w_revstack_nm3,
    w_revstack_nm3_from_contributions,
)
from .roots import check_interlacing, real_roots

MAX_N = 12
SORTERS = ("revstack", "stack")
CACHE_FORMAT_VERSION = 1
CACHE_ENV_VAR = "PERMSORT_CACHE_DIR"


def _sorter_step(sorter: str) -> Callable[[Word], Word]:
    if sorter == "revstack":
        return revstack_sort_sim
    if sorter == "stack":
        return stack_sort_sim
    raise ValueError(f"unknown sorter {sorter!r}; expected one of {SORTERS}")


def sorter_degree(word: Word, sorter: str) -> int:
    return deg_revstack(word) if sorter == "revstack" else deg_stack(word)


def permutations_with_first(n: int, first: int) -> Iterator[Word]:
    """Lexicographic stream of the S_n shard with a fixed first element."""
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in itertools.permutations(rest):
        yield (first,) + tail


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be within 1..{MAX_N} (got {n})")


def _shard_counts(n: int, sorter: str, first: int) -> list[list[int]]:
    """counts[deg][des] over the shard of permutations starting with first."""
    step = _sorter_step(sorter)
    counts = [[0] * n for _ in range(n)]
    for word in permutations_with_first(n, first):
        des = sum(1 for a, b in zip(word, word[1:]) if a > b)
        w = word
        d = 0
        while not is_identity(w):
            w = step(w)
            d += 1
        counts[d][des] += 1
    return counts


@dataclass(frozen=True)
class DescentTable:
    """Exact joint counts over S_n: deg_des[d][i] is the number of
    permutations needing exactly d passes and having i descents.

    row(t) is the descent polynomial of the set sorted by at most t
    passes; its coefficient of x^(i+1) is the table value v_t(n, i)
    (revstack) or w_t(n, i) (stack)."""

    n: int
    sorter: str
    deg_des: tuple[tuple[int, ...], ...]

    def row(self, t: int) -> IntPoly:
        if not 0 <= t <= self.n - 1:
            raise ValueError(f"t must be in 0..{self.n - 1}")
        coeffs = [0] * (self.n + 1)
        for d in range(t + 1):
            for i, c in enumerate(self.deg_des[d]):
                coeffs[i + 1] += c
        return IntPoly.from_coeffs(coeffs)

    def count(self, t: int) -> int:
        if not 0 <= t <= self.n - 1:
            raise ValueError(f"t must be in 0..{self.n - 1}")
        return sum(sum(self.deg_des[d]) for d in range(t + 1))

    def descent_counts(self, t: int) -> list[int]:
        if not 0 <= t <= self.n - 1:
            raise ValueError(f"t must be in 0..{self.n - 1}")
        return [sum(self.deg_des[d][i] for d in range(t + 1)) for i in range(self.n)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sorter": self.sorter,
            "rows": [{"t": t, "coeffs": list(self.row(t).coeffs)} for t in range(self.n)],
            "counts": [self.count(t) for t in range(self.n)],
        }


def descent_table(n: int, sorter: str = "revstack", jobs: Optional[int] = None) -> DescentTable:
    """Enumerate S_n under the chosen sorter.  jobs > 1 runs the n
    first-element shards in a process pool; the result is identical for
    any jobs value because shards merge by index."""
    _check_n(n)
    _sorter_step(sorter)
    if jobs is None:
        jobs = os.cpu_count() or 1
    jobs = max(1, min(jobs, n))
    if jobs == 1 or n <= 4:
        shards = [_shard_counts(n, sorter, first) for first in range(1, n + 1)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_shard_counts, n, sorter, first) for first in range(1, n + 1)
            ]
            shards = [f.result() for f in futures]
    total = [[0] * n for _ in range(n)]
    for shard in shards:
        for d in range(n):
            for i in range(n):
                total[d][i] += shard[d][i]
    return DescentTable(n, sorter, tuple(tuple(r) for r in total))


# -- result cache ----------------------------------------------------------

def resolve_cache_dir(cache_dir: Optional[str | Path] = None) -> Path:
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", "~/.cache")
    return Path(base).expanduser() / "revstack"


def _cache_path(cache_dir: Path, n: int, sorter: str) -> Path:
    return cache_dir / f"table-{sorter}-{n}.json"


def cached_descent_table(
    n: int,
    sorter: str = "revstack",
    jobs: Optional[int] = None,
    cache_dir: Optional[str | Path] = None,
) -> DescentTable:
    """descent_table with an advisory JSON cache keyed by (n, sorter).
    Entries embed a format version; mismatching or corrupt entries are
    recomputed and rewritten."""
    directory = resolve_cache_dir(cache_dir)
    path = _cache_path(directory, n, sorter)
    if path.exists():
        try:
            blob = json.loads(path.read_text())
            if blob.get("format_version") == CACHE_FORMAT_VERSION:
                deg_des = tuple(tuple(row) for row in blob["deg_des"])
                if len(deg_des) == n and blob["n"] == n and blob["sorter"] == sorter:
                    return DescentTable(n, sorter, deg_des)
        except (json.JSONDecodeError, KeyError, TypeError):
            pass
    table = descent_table(n, sorter, jobs)
    directory.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(
            {
                "format_version": CACHE_FORMAT_VERSION,
                "n": n,
                "sorter": sorter,
                "deg_des": [list(r) for r in table.deg_des],
            }
        )
    )
    return table


# -- verification suites ----------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    counterexample: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.counterexample:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class SuiteReport:
    n: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _all_perms(n: int) -> Iterator[Word]:
    return itertools.permutations(range(1, n + 1))


def _first_failure(n: int, predicate: Callable[[Word], bool]) -> Optional[Word]:
    for word in _all_perms(n):
        if not predicate(word):
            return word
    return None


def _check(name: str, n: int, predicate: Callable[[Word], bool]) -> CheckResult:
    bad = _first_failure(n, predicate)
    return CheckResult(name, bad is None, " ".join(map(str, bad)) if bad else "")


def _pred_operator_identities(w: Word) -> bool:
    from .perms import revstack_sort, stack_sort

    s = stack_sort(w)
    t = revstack_sort(w)
    return (
        s == stack_sort_sim(w)
        and t == revstack_sort_sim(w)
        and t == stack_sort_sim(reverse(w))
    )


def _pred_degree_iteration(w: Word) -> bool:
    n = len(w)
    d = deg_revstack(w)
    if d > max(0, n - 1):
        return False
    if not is_identity(iterate_revstack(w, n - 1 if n else 0)):
        return False
    if not is_identity(iterate_revstack(w, d)):
        return False
    return d == 0 or not is_identity(iterate_revstack(w, d - 1))


def _pred_precedence_lemmas(w: Word) -> bool:
    # (1) an inversion of w is never an inversion of T(w);
    # (2) a non-inversion (a, b) flips iff some c > b sits between them;
    # (3) hence inversions of T(w) are exactly the (b, a) with a 132
    #     occurrence (a, c, b) in w.
    n = len(w)
    t = revstack_sort_sim(w)
    pos_w = {v: i for i, v in enumerate(w)}
    pos_t = {v: i for i, v in enumerate(t)}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if pos_w[b] < pos_w[a]:
                if pos_t[a] > pos_t[b]:
                    return False
            else:
                has_c = any(
                    c > b and pos_w[a] < pos_w[c] < pos_w[b] for c in range(b + 1, n + 1)
                )
                if (pos_t[b] < pos_t[a]) != has_c:
                    return False
    return True


def _pred_deg1_is_132_avoidance(w: Word) -> bool:
    return (deg_revstack(w) <= 1) == (
        patterns.contains_classical(w, patterns.PATTERN_132) is None
    )


def _pred_deg2_characterisation(w: Word) -> bool:
    return (deg_revstack(w) <= 2) == patterns.is_member_T2(w)


def _pred_stack_deg2_characterisation(w: Word) -> bool:
    return (deg_stack(w) <= 2) == patterns.is_member_S2(w)


def _pred_sorted_132_witnesses(w: Word) -> bool:
    return patterns.check_sorted_132_witnesses(w).holds


def _pred_zigzag_bracketing(w: Word) -> bool:
    maxz, maxu = zigzag.zigzag_degrees(w)
    return maxu < deg_revstack(w) <= maxz + 1


def _pred_tree_traversals(w: Word) -> bool:
    t = trees.tree_of(w)
    return (
        trees.in_order(t) == w
        and trees.post_order(t) == stack_sort_sim(w)
        and trees.rpostorder(t) == revstack_sort_sim(w)
        and trees.right_edge_count(t) == descents(w)
    )


def _pred_duality(w: Word) -> bool:
    n = len(w)
    f = trees.duality_f(w)
    return (
        trees.duality_f(f) == w
        and descents(w) + descents(f) == n - 1
        and stack_sort_sim(f) == stack_sort_sim(w)
        and revstack_sort_sim(f) == revstack_sort_sim(w)
        and trees.g_map(w) == trees.duality_f(reverse(w)) == reverse(f)
    )


def _check_injection_h(n: int) -> CheckResult:
    name = "descent-raising injection"
    for i in range((n - 3) // 2 + 1):
        images: dict[Word, Word] = {}
        for w in _all_perms(n):
            if descents(w) != i:
                continue
            h = trees.injection_h(w)
            if (
                descents(h) != i + 1
                or stack_sort_sim(h) != stack_sort_sim(w)
                or revstack_sort_sim(h) != revstack_sort_sim(w)
            ):
                return CheckResult(name, False, " ".join(map(str, w)))
            if h in images:
                return CheckResult(
                    name, False, f"collision: {images[h]} and {w} both map to {h}"
                )
            images[h] = w
    return CheckResult(name, True)


def _check_equidistribution(n: int) -> CheckResult:
    """The descent statistic agrees on the sets sorted by two straight
    stack passes and by stack/reverse/stack."""
    name = "two-pass descent equidistribution"
    lhs = [0] * n
    rhs = [0] * n
    for w in _all_perms(n):
        if is_identity(stack_sort_sim(stack_sort_sim(w))):
            lhs[descents(w)] += 1
        if is_identity(stack_sort_sim(reverse(stack_sort_sim(w)))):
            rhs[descents(w)] += 1
    ok = lhs == rhs
    return CheckResult(name, ok, "" if ok else f"{lhs} != {rhs}")


def _check_table_structure(n: int, rev: DescentTable, st: DescentTable) -> list[CheckResult]:
    out = []
    sym = uni = logc = first_cols = nesting = True
    bad = ""
    eulerian_match = rev.row(n - 1) == eulerian_poly(n) == st.row(n - 1)
    for t in range(n):
        v = rev.descent_counts(t)
        w = st.descent_counts(t)
        # symmetry needs t >= 1: the duality argument applies the operator
        # once, and the t = 0 row (just the identity permutation) is
        # asymmetric for every n >= 2
        if t >= 1 and any(v[i] != v[n - 1 - i] for i in range(n)):
            sym = False
            bad = bad or f"symmetry at t={t}"
        p = rev.row(t)
        if not is_unimodal(p):
            uni = False
            bad = bad or f"unimodality at t={t}"
        if not is_log_concave(p):
            logc = False
            bad = bad or f"log-concavity at t={t}"
        if v[0] != w[0] or (n >= 2 and (v[1] != w[1] or v[n - 2] != w[n - 2])):
            first_cols = False
            bad = bad or f"edge-column equality at t={t}"
        if t + 1 <= n - 1 and rev.count(t) > rev.count(t + 1):
            nesting = False
            bad = bad or f"nesting at t={t}"
    out.append(CheckResult("table symmetry v_t(n,i) = v_t(n,n-1-i) for t >= 1", sym,
                           "" if sym else bad))
    out.append(CheckResult("table rows unimodal", uni, "" if uni else bad))
    out.append(CheckResult("table rows log-concave", logc, "" if logc else bad))
    out.append(CheckResult("edge columns match the stack table", first_cols,
                           "" if first_cols else bad))
    out.append(CheckResult("t-sortable sets nest", nesting, "" if nesting else bad))
    out.append(CheckResult("last row is the Eulerian polynomial", eulerian_match))
    return out


def _check_closed_forms(n: int, rev: DescentTable, st: DescentTable) -> list[CheckResult]:
    out = []
    if n >= 2:
        out.append(CheckResult(
            "one-pass row is the Narayana polynomial",
            rev.row(1) == narayana_poly(n) == st.row(1),
        ))
    if n >= 3:
        out.append(CheckResult(
            "two-pass rows agree between sorters", rev.row(2) == st.row(2)
        ))
    if n >= 4:
        out.append(CheckResult(
            "degree-(n-2) closed form", rev.row(n - 2) == w_revstack_nm2(n)
        ))
        out.append(CheckResult(
            "degree-(n-3) closed form", rev.row(n - 3) == w_revstack_nm3(n)
        ))
        out.append(CheckResult(
            "degree-(n-3) case-total form",
            w_revstack_nm3(n) == w_revstack_nm3_from_contributions(n),
        ))
        counts_ok = (
            rev.count(n - 2) == count_revstack_nm2(n)
            and rev.count(n - 3) == count_revstack_nm3(n) == count_revstack_nm3_sixterm(n)
            and st.count(n - 2) == count_stack_nm2(n)
            and st.count(n - 3) == count_stack_nm3(n)
        )
        out.append(CheckResult("counting formulas", counts_ok))
        out.append(CheckResult(
            "counting inequalities (exact rationals)", counting_inequalities_hold(n)
        ))
    return out


def verify_theorems(n: int, jobs: Optional[int] = None) -> SuiteReport:
    """Run every exhaustive property check at size n."""
    _check_n(n)
    checks = [
        _check("operator identities (recursion = simulation, T = S o rev)", n,
               _pred_operator_identities),
        _check("degree bounds and iteration", n, _pred_degree_iteration),
        _check("precedence lemmas / inversion characterisation", n,
               _pred_precedence_lemmas),
        _check("one-pass sortable iff 132-avoiding", n, _pred_deg1_is_132_avoidance),
        _check("two-pass sortable iff avoids 2431 and barred 241(5)3", n,
               _pred_deg2_characterisation),
        _check("two-pass stack-sortable iff avoids 2341 and barred 3(5)241", n,
               _pred_stack_deg2_characterisation),
        _check("every 132 in T(w) is witnessed in w", n, _pred_sorted_132_witnesses),
        _check("zigzag bracketing", n, _pred_zigzag_bracketing),
        _check("tree traversal identities", n, _pred_tree_traversals),
        _check("duality involution and conjugates", n, _pred_duality),
        _check_injection_h(n),
        _check_equidistribution(n),
    ]
    rev = descent_table(n, "revstack", jobs)
    st = descent_table(n, "stack", jobs)
    checks.extend(_check_table_structure(n, rev, st))
    checks.extend(_check_closed_forms(n, rev, st))
    if n >= 3:
        rep = check_interlacing(n)
        checks.append(CheckResult(
            "degree-(n-2) root interlacing", rep.ok, rep.detail if not rep.ok else ""
        ))
    return SuiteReport(n, tuple(checks))


@dataclass(frozen=True)
class SteingrimssonRow:
    t: int
    stack_count: int
    revstack_count: int

    @property
    def strict(self) -> bool:
        return self.stack_count < self.revstack_count


@dataclass(frozen=True)
class SteingrimssonReport:
    n: int
    rows: tuple[SteingrimssonRow, ...]
    ok: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "rows": [
                {
                    "t": r.t,
                    "stack": r.stack_count,
                    "revstack": r.revstack_count,
                    "strict": r.strict,
                }
                for r in self.rows
            ],
        }


def verify_steingrimsson(n: int, jobs: Optional[int] = None,
                         tables: Optional[tuple[DescentTable, DescentTable]] = None
                         ) -> SteingrimssonReport:
    """Compare t-stack-sortable and t-revstack-sortable counts for all t:
    the stack count never exceeds the revstack count, strictly so exactly
    when 2 < t < n-1."""
    _check_n(n)
    if tables is None:
        rev = descent_table(n, "revstack", jobs)
        st = descent_table(n, "stack", jobs)
    else:
        rev, st = tables
    rows = []
    ok = True
    for t in range(n):
        s_count, t_count = st.count(t), rev.count(t)
        rows.append(SteingrimssonRow(t, s_count, t_count))
        if s_count > t_count:
            ok = False
        if (2 < t < n - 1) != (s_count < t_count):
            ok = False
    return SteingrimssonReport(n, tuple(rows), ok)


# -- the degree-(n-2) classification ----------------------------------------

@dataclass(frozen=True)
class ClassSpec:
    """One family of the degree-(n-2) classification: permutations LpR
    around the pivot value, with the left/right value sets fixed and an
    optional precedence constraint (u must precede v)."""

    name: str
    pivot: int
    left_values: frozenset[int]
    right_values: frozenset[int]
    constraint: Optional[tuple[int, int]] = None

    def members(self) -> Iterator[Word]:
        for left in itertools.permutations(sorted(self.left_values)):
            if self.constraint is not None:
                u, v = self.constraint
                if u in self.left_values and left.index(u) > left.index(v):
                    continue
            for right in itertools.permutations(sorted(self.right_values)):
                if self.constraint is not None:
                    u, v = self.constraint
                    if u in self.right_values and right.index(u) > right.index(v):
                        continue
                yield left + (self.pivot,) + right


def _step2_down(top: int, stop: int = 0) -> list[int]:
    """top, top-2, top-4, ... staying above stop."""
    return list(range(top, stop, -2))


def degree_nm2_classes(n: int) -> list[ClassSpec]:
    """The six families covering exactly the permutations of revstack
    degree n-2, keyed like degree_nm2_contributions."""
    if n < 4:
        raise ValueError("classification requires n >= 4")
    classes = [
        ClassSpec(
            "a-left",
            pivot=n - 1,
            left_values=frozenset({n} | set(_step2_down(n - 3))),
            right_values=frozenset(_step2_down(n - 2)),
            constraint=(n, n - 3),
        ),
        ClassSpec(
            "a-right",
            pivot=n - 1,
            left_values=frozenset(_step2_down(n - 3)),
            right_values=frozenset({n} | set(_step2_down(n - 2))),
            constraint=(n - 2, n),
        ),
        ClassSpec(
            "b",
            pivot=n,
            left_values=frozenset(_step2_down(n - 1)),
            right_values=frozenset(_step2_down(n - 2)),
        ),
        ClassSpec(
            "c",
            pivot=n,
            left_values=frozenset(_step2_down(n - 3)),
            right_values=frozenset({n - 1} | set(_step2_down(n - 2))),
        ),
    ]
    for i in range(1, n - 2):
        if (n - i) % 2 == 1:
            classes.append(ClassSpec(
                f"d-odd-i{i}",
                pivot=n,
                left_values=frozenset(_step2_down(n - 2, i) + _step2_down(i)),
                right_values=frozenset(_step2_down(n - 1, i + 1) + _step2_down(i - 1)),
            ))
        else:
            classes.append(ClassSpec(
                f"d-even-i{i}",
                pivot=n,
                left_values=frozenset(_step2_down(n - 2, i) + _step2_down(i - 1)),
                right_values=frozenset(
                    _step2_down(n - 1, i + 1) + [i + 1] + _step2_down(i)
                ),
            ))
    return classes


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    ok: bool
    sizes: dict
    detail: str = ""

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok, "sizes": self.sizes, "detail": self.detail}


def classify_degree_nm2(n: int) -> ClassificationReport:
    """Materialise the six families, then verify they are pairwise
    disjoint, cover exactly the degree-(n-2) permutations, and contribute
    the expected descent polynomials."""
    if not 4 <= n <= 10:
        raise ValueError("classification supported for 4 <= n <= 10")
    classes = degree_nm2_classes(n)
    contributions = degree_nm2_contributions(n)

    seen: dict[Word, str] = {}
    sizes: dict[str, int] = {}
    polys: dict[str, IntPoly] = {}
    for spec in classes:
        group = "d-odd" if spec.name.startswith("d-odd") else (
            "d-even" if spec.name.startswith("d-even") else spec.name
        )
        count = 0
        coeffs = [0] * (n + 1)
        for w in spec.members():
            if w in seen:
                return ClassificationReport(
                    n, False, sizes, f"{' '.join(map(str, w))} in both {seen[w]} and {spec.name}"
                )
            seen[w] = spec.name
            count += 1
            coeffs[1 + descents(w)] += 1
        sizes[group] = sizes.get(group, 0) + count
        poly = IntPoly.from_coeffs(coeffs)
        polys[group] = polys.get(group, IntPoly.zero()) + poly

    for group, expected in contributions.items():
        got = polys.get(group, IntPoly.zero())
        if got != expected:
            return ClassificationReport(
                n, False, sizes,
                f"class {group} polynomial {list(got.coeffs)} != expected {list(expected.coeffs)}",
            )

    target = {w for w in _all_perms(n) if deg_revstack(w) == n - 2}
    if set(seen) != target:
        missing = target - set(seen)
        extra = set(seen) - target
        return ClassificationReport(
            n, False, sizes,
            f"coverage mismatch: {len(missing)} missing, {len(extra)} extra",
        )
    return ClassificationReport(n, True, sizes)


# -- zigzag-free counting ----------------------------------------------------

def count_zigzag_free(n: int, k: int, uninterrupted_only: bool = False) -> int:
    """Number of permutations in S_n containing no k-zigzag (or no
    uninterrupted k-zigzag).  Also asserts, permutation by permutation,
    the bracketing max-uninterrupted-degree < sorting degree <=
    max-degree + 1 that makes these counts bound the t-sortable counts."""
    if not 1 <= n <= 10:
        raise ValueError("zigzag-free counting supported for n <= 10")
    if k < 0:
        raise ValueError("k must be non-negative")
    free = 0
    for w in _all_perms(n):
        maxz, maxu = zigzag.zigzag_degrees(w)
        d = deg_revstack(w)
        if not maxu < d <= maxz + 1:
            raise AssertionError(f"zigzag bracketing violated at {w}")
        if uninterrupted_only:
            if maxu < k:
                free += 1
        elif maxz < k:
            free += 1
    return free


def zigzag_free_table(n: int) -> dict[int, tuple[int, int]]:
    """For each k: (count with no k-zigzag, count with no uninterrupted
    k-zigzag).  One enumeration pass; same bracketing assertion."""
    if not 1 <= n <= 10:
        raise ValueError("zigzag-free counting supported for n <= 10")
    freez = [0] * (n + 1)
    freeu = [0] * (n + 1)
    for w in _all_perms(n):
        maxz, maxu = zigzag.zigzag_degrees(w)
        d = deg_revstack(w)
        if not maxu < d <= maxz + 1:
            raise AssertionError(f"zigzag bracketing violated at {w}")
        for k in range(n + 1):
            if maxz < k:
                freez[k] += 1
            if maxu < k:
                freeu[k] += 1
    return {k: (freez[k], freeu[k]) for k in range(n + 1)}


# -- reference table reproduction -------------------------------------------

def load_reference_tables() -> list[dict]:
    blob = json.loads(
        resources.files("revstack").joinpath("appendix_data.json").read_text()
    )
    if blob.get("format_version") != 1:
        raise ValueError("unsupported reference data format")
    return blob["entries"]


@dataclass(frozen=True)
class AppendixMismatch:
    n: int
    t: int
    what: str

    def to_json(self) -> dict:
        return {"n": self.n, "t": self.t, "what": self.what}


@dataclass(frozen=True)
class AppendixReport:
    enumerated_n: tuple[int, ...]
    mismatches: tuple[AppendixMismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "enumerated_n": list(self.enumerated_n),
            "mismatches": [m.to_json() for m in self.mismatches],
        }


def reproduce_appendix(
    enumerate_max_n: int = 8,
    jobs: Optional[int] = None,
    root_tolerance: float = 1e-4,
    entries: Optional[list[dict]] = None,
    cache_dir: Optional[str | Path] = None,
    use_cache: bool = False,
) -> AppendixReport:
    """Compare the reference tables against this implementation:
    coefficients bit-exactly via enumeration for n <= enumerate_max_n, and
    root lists against Sturm isolation within the tolerance for every
    listed size."""
    if entries is None:
        entries = load_reference_tables()
    mismatches: list[AppendixMismatch] = []
    sizes = sorted({e["n"] for e in entries})
    enumerated = [n for n in sizes if n <= enumerate_max_n]

    tables = {}
    for n in enumerated:
        if use_cache:
            tables[n] = cached_descent_table(n, "revstack", jobs, cache_dir)
        else:
            tables[n] = descent_table(n, "revstack", jobs)

    for e in entries:
        n, t = e["n"], e["t"]
        if n in tables:
            got = list(tables[n].row(t).coeffs)
            if got != e["coeffs"]:
                mismatches.append(AppendixMismatch(
                    n, t, f"coefficients {got} != reference {e['coeffs']}"
                ))
                continue
        rep = real_roots(IntPoly.from_coeffs(e["coeffs"]))
        if not rep.all_real:
            mismatches.append(AppendixMismatch(n, t, "roots not all real"))
            continue
        if not rep.nonpositive:
            mismatches.append(AppendixMismatch(n, t, "a positive root appeared"))
            continue
        approx = [float(a) for a in rep.approx_values()]
        want = [float(r) for r in e["roots"]]
        if len(approx) != len(want):
            mismatches.append(AppendixMismatch(
                n, t, f"{len(approx)} roots computed, reference lists {len(want)}"
            ))
            continue
        for got_r, want_r in zip(approx, want):
            if abs(got_r - want_r) > root_tolerance:
                mismatches.append(AppendixMismatch(
                    n, t, f"root {got_r} differs from reference {want_r}"
                ))
                break
    return AppendixReport(tuple(enumerated), tuple(mismatches))
