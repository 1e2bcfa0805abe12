"""Grid and seeded-random verification of catalog identities.

Reports are deterministic: work may be fanned out over worker processes, but
results are merged in canonical (n, r, s, t) order and no timing information
enters the comparison data.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence

from . import catalog as cat
from .catalog import IdentityDescriptor, ParamSpace, ParamTuple
from .poly import Dattoli, check_dattoli
from .sequences import check_binet, check_lemma1, check_lemma2


class IntRange(NamedTuple):
    lo: int
    hi: int

    @classmethod
    def parse(cls, text: str) -> IntRange:
        """Parse ``"lo..hi"`` (inclusive); a bare integer means ``k..k``."""
        lo, sep, hi = text.strip().partition("..")
        try:
            rng = cls(int(lo), int(hi)) if sep else cls(int(lo), int(lo))
        except ValueError:
            raise ValueError(f"malformed range {text!r}, expected lo..hi") from None
        if rng.lo > rng.hi:
            raise ValueError(f"empty range {text!r}")
        return rng

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class GridSpec:
    n_range: IntRange = IntRange(0, 24)
    r_range: IntRange = IntRange(-6, 6)
    s_range: IntRange = IntRange(-6, 6)
    t_range: IntRange = IntRange(-6, 6)

    def __post_init__(self) -> None:
        for name in ("n_range", "r_range", "s_range", "t_range"):
            rng = getattr(self, name)
            if rng.lo > rng.hi:
                raise ValueError(f"{name} is empty")
        if self.n_range.lo < 0:
            raise ValueError("n_range must start at n >= 0")

    def axes(self, space: ParamSpace) -> tuple[range, range, range]:
        return (
            self.r_range.values() if space.uses_r else range(0, 1),
            self.s_range.values() if space.uses_s else range(0, 1),
            self.t_range.values() if space.uses_t else range(0, 1),
        )

    def cardinality(self, space: ParamSpace) -> int:
        rs, ss, ts = self.axes(space)
        return self.n_range.size * len(rs) * len(ss) * len(ts)


@dataclass(frozen=True)
class RandomSpec:
    seed: int
    samples: int = 500
    magnitude: int = 40

    def __post_init__(self) -> None:
        if self.samples <= 0:
            raise ValueError("samples must be positive")
        if self.magnitude < 1:
            raise ValueError("magnitude must be >= 1")

    def box(self) -> GridSpec:
        m = self.magnitude
        return GridSpec(IntRange(0, m), IntRange(-m, m), IntRange(-m, m), IntRange(-m, m))


class Failure(NamedTuple):
    params: ParamTuple
    lhs: Fraction
    mid: Optional[Fraction]
    rhs: Fraction


@dataclass
class VerificationReport:
    identity_id: str
    tuples_tested: int
    tuples_skipped: int
    failures: list[Failure]
    grid: GridSpec
    seed: Optional[int] = None
    wall_time: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def minimal_counterexample(self) -> Optional[Failure]:
        return self.failures[0] if self.failures else None


# -- pseudo-random numbers ---------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014): portable across languages.

    ``randint`` maps a 64-bit draw onto [lo, hi] by rejecting draws at or
    above the largest multiple of the span, then reducing modulo the span.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


# -- core checks -------------------------------------------------------------

def check_tuple(desc: IdentityDescriptor, p: ParamTuple) -> Optional[Failure]:
    lhs = Fraction(desc.lhs(*p))
    rhs = Fraction(desc.rhs(*p))
    mid = Fraction(desc.mid(*p)) if desc.mid is not None else None
    if lhs != rhs or (mid is not None and mid != lhs):
        return Failure(p, lhs, mid, rhs)
    return None


def _grid_chunk(desc: IdentityDescriptor, n: int, grid: GridSpec) -> tuple[int, int, list[Failure]]:
    tested = skipped = 0
    failures = []
    rs, ss, ts = grid.axes(desc.params)
    for r in rs:
        for s in ss:
            for t in ts:
                p = ParamTuple(n, r, s, t)
                if not desc.params.admissible(p):
                    skipped += 1
                    continue
                tested += 1
                bad = check_tuple(desc, p)
                if bad is not None:
                    failures.append(bad)
    return tested, skipped, failures


def _merge(desc_id: str, grid: GridSpec, parts: Iterable[tuple[int, int, list[Failure]]],
           elapsed: float, seed: Optional[int] = None) -> VerificationReport:
    tested = skipped = 0
    failures: list[Failure] = []
    for t, s, f in parts:
        tested += t
        skipped += s
        failures.extend(f)
    failures.sort(key=lambda f: tuple(f.params))
    return VerificationReport(desc_id, tested, skipped, failures, grid, seed, elapsed)


def default_jobs() -> int:
    return os.cpu_count() or 1


def verify_grid(desc: IdentityDescriptor, grid: GridSpec = GridSpec(), jobs: int = 1,
                executor: Optional[Executor] = None) -> VerificationReport:
    start = time.perf_counter()
    ns = list(grid.n_range.values())
    if executor is not None:
        parts = list(executor.map(_grid_chunk, [desc] * len(ns), ns, [grid] * len(ns)))
    elif jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_grid_chunk, [desc] * len(ns), ns, [grid] * len(ns)))
    else:
        parts = [_grid_chunk(desc, n, grid) for n in ns]
    return _merge(desc.id, grid, parts, time.perf_counter() - start)


def _box_has_admissible(space: ParamSpace, m: int) -> bool:
    box = RandomSpec(0, 1, m).box()
    rs, ss, _ = box.axes(space)
    return any(space.admissible(ParamTuple(box.n_range.hi, r, s, 0)) for r in rs for s in ss)


def draw_tuples(space: ParamSpace, spec: RandomSpec) -> tuple[list[ParamTuple], int]:
    """Draw ``spec.samples`` admissible tuples; also return the rejected-draw count."""
    if not _box_has_admissible(space, spec.magnitude):
        raise ValueError(f"no admissible tuple within magnitude {spec.magnitude}")
    rng = SplitMix64(spec.seed)
    m = spec.magnitude
    out: list[ParamTuple] = []
    rejected = 0
    while len(out) < spec.samples:
        n = rng.randint(0, m)
        r = rng.randint(-m, m) if space.uses_r else 0
        s = rng.randint(-m, m) if space.uses_s else 0
        t = rng.randint(-m, m) if space.uses_t else 0
        p = ParamTuple(n, r, s, t)
        if space.admissible(p):
            out.append(p)
        else:
            rejected += 1
    return out, rejected


def verify_random(desc: IdentityDescriptor, spec: RandomSpec) -> VerificationReport:
    start = time.perf_counter()
    tuples, rejected = draw_tuples(desc.params, spec)
    failures = [f for f in (check_tuple(desc, p) for p in tuples) if f is not None]
    return _merge(desc.id, spec.box(), [(len(tuples), rejected, failures)],
                  time.perf_counter() - start, seed=spec.seed)


# -- auxiliary sweeps --------------------------------------------------------
# Boolean checks record a failing parameter tuple with lhs = 0 (check result)
# and rhs = 1 (expected result).

_FALSE, _TRUE = Fraction(0), Fraction(1)


def _bool_sweep(name: str, grid: GridSpec, tuples: Iterable[ParamTuple],
                check: Callable[[ParamTuple], bool]) -> VerificationReport:
    start = time.perf_counter()
    tested = 0
    failures = []
    for p in tuples:
        tested += 1
        if not check(p):
            failures.append(Failure(p, _FALSE, None, _TRUE))
    return _merge(name, grid, [(tested, 0, failures)], time.perf_counter() - start)


_ZERO = IntRange(0, 0)


def sweep_binet(bound: int = 500) -> VerificationReport:
    g = GridSpec(_ZERO, _ZERO, _ZERO, IntRange(-bound, bound))
    return _bool_sweep("AUX-BINET", g, (ParamTuple(0, 0, 0, i) for i in g.t_range.values()),
                       lambda p: check_binet(p.t))


def sweep_lemma1(bound: int = 100) -> VerificationReport:
    g = GridSpec(_ZERO, _ZERO, IntRange(-bound, bound), _ZERO)
    return _bool_sweep("AUX-LEMMA1", g, (ParamTuple(0, 0, s, 0) for s in g.s_range.values()),
                       lambda p: check_lemma1(p.s))


def sweep_lemma2(bound: int = 50) -> VerificationReport:
    g = GridSpec(_ZERO, IntRange(-bound, bound), IntRange(-bound, bound), _ZERO)
    tuples = (ParamTuple(0, r, s, 0) for r in g.r_range.values() for s in g.s_range.values())
    return _bool_sweep("AUX-LEMMA2", g, tuples, lambda p: check_lemma2(p.r, p.s))


def sweep_dattoli(which: Dattoli, n_max: int = 64) -> VerificationReport:
    g = GridSpec(IntRange(0, n_max), _ZERO, _ZERO, _ZERO)
    return _bool_sweep(f"AUX-{which.name}", g, (ParamTuple(n) for n in g.n_range.values()),
                       lambda p: check_dattoli(which, p.n))


def remark_matches(family: str, p: ParamTuple) -> bool:
    """THM2 at s = 2 against COR8, both sides, at (n, t)."""
    thm2 = cat.get_identity(f"THM2-{family}")
    cor8 = cat.get_identity(f"COR8-{family}")
    q = ParamTuple(p.n, 0, 2, p.t)
    c = ParamTuple(p.n, 0, 0, p.t)
    return all(
        cat.eval_side(thm2, side, q) == cat.eval_side(cor8, side, c)
        for side in (cat.Side.LHS, cat.Side.RHS)
    )


def sweep_remark(family: str, grid: GridSpec) -> VerificationReport:
    g = GridSpec(grid.n_range, _ZERO, IntRange(2, 2), grid.t_range)
    tuples = (ParamTuple(n, 0, 2, t) for n in g.n_range.values() for t in g.t_range.values())
    return _bool_sweep(f"AUX-REMARK-{family}", g, tuples, lambda p: remark_matches(family, p))


def sec4_consistent(p: ParamTuple) -> bool:
    """SEC4-FL equals SEC4-F + SEC4-L pointwise, on both printed sums."""
    fl, f, lu = (cat.get_identity(i) for i in ("SEC4-FL", "SEC4-F", "SEC4-L"))
    S = cat.Side
    return (
        cat.eval_side(fl, S.LHS, p) == cat.eval_side(f, S.LHS, p) + cat.eval_side(lu, S.LHS, p)
        and cat.eval_side(fl, S.MID, p) == cat.eval_side(f, S.RHS, p) + cat.eval_side(lu, S.RHS, p)
    )


def sweep_sec4(grid: GridSpec) -> VerificationReport:
    g = GridSpec(grid.n_range, _ZERO, _ZERO, _ZERO)
    return _bool_sweep("AUX-SEC4-SUM", g, (ParamTuple(n) for n in g.n_range.values()),
                       sec4_consistent)


def auxiliary_reports(grid: GridSpec) -> list[VerificationReport]:
    reports = [sweep_binet(), sweep_lemma1(), sweep_lemma2()]
    reports += [sweep_dattoli(w) for w in Dattoli]
    reports += [sweep_remark("F", grid), sweep_remark("L", grid), sweep_sec4(grid)]
    return reports


def verify_many(descs: Sequence[IdentityDescriptor], grid: Optional[GridSpec] = None,
                rand: Optional[RandomSpec] = None, jobs: int = 1) -> list[VerificationReport]:
    """Grid reports (and random reports, when ``rand`` is given) for ``descs``, in order."""
    reports: list[VerificationReport] = []
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        if grid is not None:
            reports += [verify_grid(d, grid, executor=pool) for d in descs]
        if rand is not None:
            reports += [verify_random(d, rand) for d in descs]
    finally:
        if pool is not None:
            pool.shutdown()
    return reports


def verify_all(grid: GridSpec = GridSpec(), rand: Optional[RandomSpec] = None, jobs: int = 1,
               descs: Optional[Sequence[IdentityDescriptor]] = None) -> list[VerificationReport]:
    """Whole catalog, then the auxiliary field, lemma, polynomial and consistency sweeps."""
    if descs is None:
        descs = cat.enumerate_catalog()
    return verify_many(descs, grid, rand, jobs) + auxiliary_reports(grid)


def iter_failures(reports: Iterable[VerificationReport]) -> Iterator[tuple[str, Failure]]:
    for rep in reports:
        for f in rep.failures:
            yield rep.identity_id, f
