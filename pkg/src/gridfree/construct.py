"""The three parabola constructions and their exact count reports.

All of them live over F_p, p an odd prime >= 5, on the two parabolas
V1 = {(x, x^2)} and V2 = {(x, x^2 + 1)}:

* build_base: every secant of V1 that meets V2 contributes the triple of
  its two V1 points and one chosen V2 point.
* build_random: V2 is first thinned to a random subset S by independent
  seeded coin flips with rational probability; secants pick their third
  point inside S.
* build_qr: the roles flip and V1 is thinned deterministically to the
  points whose x coordinate is a square; secants of V2 pick their third
  point there.

The third point, when two candidates exist, is always the one with the
smaller x coordinate.  Builders run on per-prime character/root lookup
tables for speed; the geometry module recomputes the same incidences
object-by-object and the tests cross-check the two routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .ffield import InvalidPrimeError, Prime, chi_table, min_sqrt_table
from .geometry import AffinePoint
from .hypergraph import Hypergraph3, VertexInfo, VertexMap
from .rng import bernoulli_threshold, splitmix64_stream

__all__ = [
    "SELECTION_RULE",
    "GENERATOR",
    "ConstructionReport",
    "build_base",
    "build_random",
    "build_qr",
    "count_two_point_secants",
    "select_subset",
    "density_ratio",
    "optimal_rho",
]

# Tie-break when a secant offers two third points: keep the smaller x.
SELECTION_RULE = "smaller-x"
# Seeded sampling backend recorded in reports; see rng.splitmix64_stream.
GENERATOR = "splitmix64"

_REPORT_KEYS = (
    "p",
    "kind",
    "n",
    "m",
    "density_num",
    "density_den",
    "chi_minus_1",
    "predicted_m",
    "two_point_secants",
    "selection_size",
    "seed",
)


@dataclass(frozen=True)
class ConstructionReport:
    """Counts and identities for one built instance.

    density is exact; two_point_secants counts the qualifying lines that
    offered two candidate third points inside the thinned pool (for the
    base construction the pool is all of V2).  predicted_m is the closed
    form p(p - chi(-1))/4, only meaningful for kind="base" where it must
    match the enumeration.
    """

    p: int
    kind: str
    n: int
    m: int
    density: Fraction
    chi_minus_1: int
    predicted_m: int | None
    two_point_secants: int
    selection_size: int | None
    seed: int | None

    def __post_init__(self) -> None:
        if self.kind not in ("base", "random", "qr"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.chi_minus_1 not in (-1, 1):
            raise ValueError(f"chi(-1) must be +-1, got {self.chi_minus_1}")
        if self.density * self.n * self.n != self.m:
            raise ArithmeticError("density is not m/n^2")
        if self.kind == "base" and self.m != self.predicted_m:
            raise ArithmeticError(
                f"enumerated m={self.m} disagrees with closed form {self.predicted_m}"
            )

    def density_decimal(self, digits: int = 12) -> str:
        """Decimal rendering of the exact density, for display only."""
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(self.density.numerator) / Decimal(self.density.denominator))

    def to_json_dict(self) -> dict:
        values = {
            "p": self.p,
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "density_num": self.density.numerator,
            "density_den": self.density.denominator,
            "chi_minus_1": self.chi_minus_1,
            "predicted_m": self.predicted_m,
            "two_point_secants": self.two_point_secants,
            "selection_size": self.selection_size,
            "seed": self.seed,
        }
        return {k: values[k] for k in _REPORT_KEYS}


def _as_prime(p: Prime | int, minimum: int = 5) -> Prime:
    prime = p if isinstance(p, Prime) else Prime(p)
    if prime.value < minimum:
        raise InvalidPrimeError(f"need an odd prime >= {minimum}, got {prime.value}")
    return prime


def _parabola_info(origin: str, prime: Prime, x: int, shift: int) -> VertexInfo:
    xe = prime(x)
    point = AffinePoint(xe, prime(x * x + shift))
    return VertexInfo(origin, xe, point)


def select_subset(p: Prime | int, rho_num: int, rho_den: int, seed: int) -> list[int]:
    """x coordinates of the V2 points kept by the seeded coin flips, one
    64-bit draw per x in ascending order."""
    prime = _as_prime(p)
    _check_seed(seed)
    threshold = bernoulli_threshold(rho_num, rho_den)
    stream = splitmix64_stream(seed)
    return [x for x in range(prime.value) if next(stream) < threshold]


def _check_seed(seed: int) -> None:
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < (1 << 64):
        raise ValueError(f"seed must be an integer in [0, 2^64), got {seed!r}")


def build_base(p: Prime | int) -> tuple[Hypergraph3, VertexMap, ConstructionReport]:
    """Full construction on V1 union V2 (ids 0..p-1 then p..2p-1, by x).

    A pair {a, b} of V1 points qualifies iff chi((a-b)^2 - 4) >= 0; its
    edge takes the smaller-x intersection of the secant with V2.  The edge
    count must equal p(p - chi(-1))/4.
    """
    prime = _as_prime(p)
    pv = prime.value
    chi = chi_table(pv)
    root = min_sqrt_table(pv)
    inv2 = pow(2, -1, pv)
    edges = []
    two_point = 0
    for a in range(pv):
        for b in range(a + 1, pv):
            disc = ((a - b) * (a - b) - 4) % pv
            sign = chi[disc]
            if sign < 0:
                continue
            s = a + b
            if sign == 0:
                w = s * inv2 % pv
            else:
                two_point += 1
                r = root[disc]
                w = min((s + r) * inv2 % pv, (s - r) * inv2 % pv)
            edges.append((a, b, pv + w))
    h = Hypergraph3.from_edges(2 * pv, edges)
    vmap = VertexMap(
        tuple(
            [_parabola_info("V1", prime, x, 0) for x in range(pv)]
            + [_parabola_info("V2", prime, x, 1) for x in range(pv)]
        )
    )
    chi_m1 = chi[pv - 1]
    report = ConstructionReport(
        p=pv,
        kind="base",
        n=h.n,
        m=h.m,
        density=Fraction(h.m, h.n * h.n),
        chi_minus_1=chi_m1,
        predicted_m=pv * (pv - chi_m1) // 4,
        two_point_secants=two_point,
        selection_size=None,
        seed=None,
    )
    return h, vmap, report


def count_two_point_secants(p: Prime | int) -> int:
    """Number of V1 secants meeting V2 in two points: the pairs with
    chi((a-b)^2 - 4) = +1, expected p(p - chi(-1) - 4)/4."""
    prime = _as_prime(p)
    pv = prime.value
    chi = chi_table(pv)
    return sum(
        1
        for a in range(pv)
        for b in range(a + 1, pv)
        if chi[((a - b) * (a - b) - 4) % pv] == 1
    )


def build_random(
    p: Prime | int, rho_num: int, rho_den: int, seed: int
) -> tuple[Hypergraph3, VertexMap, ConstructionReport]:
    """Thinned construction: keep each V2 point with probability
    rho_num/rho_den (seeded, reproducible), then give every qualifying V1
    secant with at least one kept intersection its smaller-x kept point.

    With rho = 1 the edge set equals build_base(p); with rho = 0 the
    result has no edges and only the p V1 vertices.
    """
    prime = _as_prime(p)
    pv = prime.value
    selected = select_subset(prime, rho_num, rho_den, seed)
    in_pool = [False] * pv
    pool_id = {}
    for rank, x in enumerate(selected):
        in_pool[x] = True
        pool_id[x] = pv + rank

    chi = chi_table(pv)
    root = min_sqrt_table(pv)
    inv2 = pow(2, -1, pv)
    edges = []
    two_point = 0
    for a in range(pv):
        for b in range(a + 1, pv):
            disc = ((a - b) * (a - b) - 4) % pv
            sign = chi[disc]
            if sign < 0:
                continue
            s = a + b
            if sign == 0:
                cands = (s * inv2 % pv,)
            else:
                r = root[disc]
                cands = ((s + r) * inv2 % pv, (s - r) * inv2 % pv)
            kept = [x for x in cands if in_pool[x]]
            if len(kept) == 2:
                two_point += 1
            if not kept:
                continue
            edges.append((a, b, pool_id[min(kept)]))
    h = Hypergraph3.from_edges(pv + len(selected), edges)
    vmap = VertexMap(
        tuple(
            [_parabola_info("V1", prime, x, 0) for x in range(pv)]
            + [_parabola_info("S-of-V2", prime, x, 1) for x in selected]
        )
    )
    report = ConstructionReport(
        p=pv,
        kind="random",
        n=h.n,
        m=h.m,
        density=Fraction(h.m, h.n * h.n),
        chi_minus_1=chi[pv - 1],
        predicted_m=None,
        two_point_secants=two_point,
        selection_size=len(selected),
        seed=seed,
    )
    return h, vmap, report


def build_qr(p: Prime | int) -> tuple[Hypergraph3, VertexMap, ConstructionReport]:
    """Deterministic thinning: S is the set of V1 points whose x coordinate
    is a square (zero included, |S| = (p+1)/2), vertices are S then V2
    (ids 0..|S|-1 and |S|..|S|+p-1, each block ascending by x).  Every
    secant of V2 whose intersection with V1 contains a square x picks the
    smallest such x."""
    prime = _as_prime(p)
    pv = prime.value
    squares = sorted({x * x % pv for x in range(pv)})
    s_id = {x: i for i, x in enumerate(squares)}
    s_size = len(squares)
    is_square = [False] * pv
    for x in squares:
        is_square[x] = True

    chi = chi_table(pv)
    root = min_sqrt_table(pv)
    inv2 = pow(2, -1, pv)
    edges = []
    two_point = 0
    # Secant of V2 through parameters {a, b} meets V1 where
    # x^2 - (a+b)x + (ab - 1) = 0, discriminant (a-b)^2 + 4.
    for a in range(pv):
        for b in range(a + 1, pv):
            disc = ((a - b) * (a - b) + 4) % pv
            sign = chi[disc]
            if sign < 0:
                continue
            s = a + b
            if sign == 0:
                cands = (s * inv2 % pv,)
            else:
                r = root[disc]
                cands = ((s + r) * inv2 % pv, (s - r) * inv2 % pv)
            kept = [x for x in cands if is_square[x]]
            if len(kept) == 2:
                two_point += 1
            if not kept:
                continue
            edges.append((s_id[min(kept)], s_size + a, s_size + b))
    h = Hypergraph3.from_edges(s_size + pv, edges)
    vmap = VertexMap(
        tuple(
            [_parabola_info("S-of-V1", prime, x, 0) for x in squares]
            + [_parabola_info("V2", prime, x, 1) for x in range(pv)]
        )
    )
    report = ConstructionReport(
        p=pv,
        kind="qr",
        n=h.n,
        m=h.m,
        density=Fraction(h.m, h.n * h.n),
        chi_minus_1=chi[pv - 1],
        predicted_m=None,
        two_point_secants=two_point,
        selection_size=s_size,
        seed=None,
    )
    return h, vmap, report


def density_ratio(rho) -> Fraction:
    """Asymptotic density multiplier of the random thinning as an exact
    rational: (2*rho - rho^2) / (4 * (1 + rho)^2) for rho in [0, 1]."""
    r = Fraction(rho)
    if not 0 <= r <= 1:
        raise ValueError(f"rho must lie in [0, 1], got {r}")
    return (2 * r - r * r) / (4 * (1 + r) ** 2)


def optimal_rho() -> Fraction:
    """The maximizing rho = 1/2 (value 1/12), confirmed by exact comparison
    against the rational grid k/1000, k = 0..1000."""
    best = Fraction(1, 2)
    peak = density_ratio(best)
    for k in range(1001):
        if density_ratio(Fraction(k, 1000)) > peak:
            raise ArithmeticError("grid point beats rho = 1/2")
    return best
