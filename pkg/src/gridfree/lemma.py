"""Exact covering arithmetic for random k-subsets hitting a pair family.

For a family H of unordered pairs from [N] and a uniformly random k-subset
S of [N], the expected number of pairs hit (pair intersecting S) is
|H| * (1 - C(N-2, k)/C(N, k)), exactly.  With k = floor(N/2) and
|H| = C(N,2)/2 this becomes (2kN - k^2 - k)/4, whose ceiling some subset
must attain; the ceiling gap normalized by (N+k)^2 stays below 4/(9 N^2).
Everything here is integer or Fraction arithmetic, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .rng import sample_distinct, splitmix64_stream

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "LemmaInstance",
    "CoverageResult",
    "expected_coverage",
    "lemma_bound",
    "coverage",
    "best_subset",
    "best_subset_sampled",
    "delta_check",
    "analyze",
]

# Largest N for which best_subset enumerates all C(N, k) subsets.
EXHAUSTIVE_LIMIT = 16


def _norm_pairs(N: int, H) -> tuple[tuple[int, int], ...]:
    pairs = []
    for pair in H:
        t = tuple(sorted(pair))
        if len(t) != 2 or t[0] == t[1]:
            raise ValueError(f"{tuple(pair)!r} is not an unordered pair")
        if not (0 <= t[0] and t[1] < N):
            raise ValueError(f"pair {t!r} out of range for N={N}")
        pairs.append(t)
    out = tuple(sorted(set(pairs)))
    if len(out) != len(pairs):
        raise ValueError("duplicate pairs in H")
    return out


@dataclass(frozen=True)
class LemmaInstance:
    """Ground set size N, sample size k (default floor(N/2)), pair family H."""

    N: int
    k: int
    H: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.N < 2:
            raise ValueError(f"N must be at least 2, got {self.N}")
        if not 0 <= self.k <= self.N:
            raise ValueError(f"k must lie in [0, N], got {self.k}")
        object.__setattr__(self, "H", _norm_pairs(self.N, self.H))

    @classmethod
    def with_default_k(cls, N: int, H) -> "LemmaInstance":
        return cls(N, N // 2, H)

    @property
    def is_exact_half(self) -> bool:
        """Whether |H| is exactly half of all pairs (needs N = 0, 1 mod 4)."""
        return 2 * len(self.H) == comb(self.N, 2)


@dataclass(frozen=True)
class CoverageResult:
    """Exact expectation, its ceiling bound, the optional exhaustive
    maximizer, and the normalized ceiling gap."""

    expectation: Fraction
    bound: int
    best: tuple[tuple[int, ...], int] | None
    delta: Fraction


def expected_coverage(N: int, k: int, H) -> Fraction:
    """Expected number of pairs of H hit by a uniform random k-subset."""
    inst = LemmaInstance(N, k, tuple(H))
    miss = Fraction(comb(N - 2, k), comb(N, k))
    return len(inst.H) * (1 - miss)


def lemma_bound(N: int) -> int:
    """ceil((2kN - k^2 - k)/4) with k = floor(N/2): the hit count some
    k-subset attains when H is an exact half family."""
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")
    k = N // 2
    v = 2 * k * N - k * k - k
    return -(-v // 4)


def coverage(S, H) -> int:
    """Number of pairs of H meeting the subset S."""
    s = set(S)
    return sum(1 for a, b in H if a in s or b in s)


def best_subset(N: int, k: int, H) -> tuple[tuple[int, ...], int]:
    """Exhaustive maximizer of coverage over all k-subsets of [N]; ties go
    to the lexicographically least subset.  N beyond EXHAUSTIVE_LIMIT is
    refused; use best_subset_sampled there."""
    inst = LemmaInstance(N, k, tuple(H))
    if N > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"N={N} is too large for exhaustive search (limit "
            f"{EXHAUSTIVE_LIMIT}); use best_subset_sampled"
        )
    best_s: tuple[int, ...] = ()
    best_c = -1
    for S in combinations(range(N), k):
        c = coverage(S, inst.H)
        if c > best_c:
            best_s, best_c = S, c
    return best_s, best_c


def best_subset_sampled(
    N: int, k: int, H, trials: int = 1000, seed: int = 0
) -> tuple[tuple[int, ...], int]:
    """Empirical maximizer over seeded random k-subsets.  Reports the best
    subset seen; makes no claim of optimality."""
    inst = LemmaInstance(N, k, tuple(H))
    if trials < 1:
        raise ValueError("trials must be positive")
    seeds = splitmix64_stream(seed)
    best_s: tuple[int, ...] = ()
    best_c = -1
    for _ in range(trials):
        S = tuple(sorted(sample_distinct(N, k, next(seeds))))
        c = coverage(S, inst.H)
        if c > best_c or (c == best_c and S < best_s):
            best_s, best_c = S, c
    return best_s, best_c


def delta_check(N: int) -> tuple[Fraction, bool]:
    """The normalized ceiling gap delta_N = (ceil(v/4) - v/4) / (N+k)^2
    with k = floor(N/2), v = 2kN - k^2 - k, and whether it satisfies
    delta_N <= 4 / (9 N^2)."""
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")
    k = N // 2
    v = Fraction(2 * k * N - k * k - k)
    gap = lemma_bound(N) - v / 4
    delta = gap / (N + k) ** 2
    return delta, delta <= Fraction(4, 9 * N * N)


def analyze(N: int, k: int | None = None, H=(), find_best: bool | None = None) -> CoverageResult:
    """Bundle expectation, bound, optional exhaustive best subset, and the
    ceiling gap for one instance.  find_best defaults to exhaustive search
    whenever N allows it."""
    if k is None:
        k = N // 2
    expectation = expected_coverage(N, k, H)
    if find_best is None:
        find_best = N <= EXHAUSTIVE_LIMIT
    best = best_subset(N, k, H) if find_best else None
    delta, _ = delta_check(N)
    return CoverageResult(
        expectation=expectation,
        bound=lemma_bound(N),
        best=best,
        delta=delta,
    )
