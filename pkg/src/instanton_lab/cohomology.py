"""Exact line-bundle cohomology engines and cohomology tables.

One closed-form engine per catalog family:

* projective space -- binomial formulas for ``O(t)``, Bott's formula for the
  twisted differentials ``Omega^p(t)``;
* quadrics -- the restriction sequence from the ambient projective space;
* products of projective spaces -- Kunneth convolution;
* the flag 3-fold -- Borel-Weil-Bott for the full flag of SL(3);
* scrolls over P^1 -- the symmetric-power splitting of the pushforward, with
  Serre duality below the vanishing window;
* curves -- exact genus-0 values, the generic Brill-Noether model, and a
  non-effective theta-characteristic model for twists ``theta + s h``.

Tables collect the cohomology vectors of one bundle over a twist window and
are the raw material the instanton checker consumes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import rr
from .catalog import (
    VarietyCatalogEntry,
    canonical_coords,
    check_coords,
    line_bundle_class,
    twist_coords,
)
from .errors import UnsupportedBundleError, WindowError
from .rr import ChernData
from .util import binom


@dataclass(frozen=True)
class CohVector:
    """The tuple ``(h^0, ..., h^n)`` of one twist; entries are nonnegative."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative cohomology dimension in {self.dims}")

    def __getitem__(self, i: int) -> int:
        return self.dims[i]

    def __len__(self) -> int:
        return len(self.dims)

    def __add__(self, other: "CohVector") -> "CohVector":
        if len(self.dims) != len(other.dims):
            raise ValueError("cohomology vectors of different lengths")
        return CohVector(tuple(a + b for a, b in zip(self.dims, other.dims)))

    def scale(self, m: int) -> "CohVector":
        if m < 0:
            raise ValueError("multiplicities must be nonnegative")
        return CohVector(tuple(m * d for d in self.dims))

    def chi(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def is_zero(self) -> bool:
        return not any(self.dims)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.dims) if d)


def zero_vector(n: int) -> CohVector:
    return CohVector((0,) * (n + 1))


def serre_dual_vector(v: CohVector) -> CohVector:
    """The reversed vector; callers pair it with the dual-twist bookkeeping."""
    return CohVector(tuple(reversed(v.dims)))


# --------------------------------------------------------------------------
# Engines
# --------------------------------------------------------------------------


def coh_projective_space(n: int, t: int) -> CohVector:
    """Cohomology of ``O(t)`` on P^n."""
    if n < 1:
        raise ValueError("n >= 1")
    dims = [0] * (n + 1)
    if t >= 0:
        dims[0] = binom(t + n, n)
    elif t <= -n - 1:
        dims[n] = binom(-t - 1, n)
    return CohVector(tuple(dims))


def bott_pn(n: int, p: int, t: int) -> CohVector:
    """Bott's formula for ``Omega^p(t)`` on P^n.

    Nonzero only in degree 0 for ``t > p``, in degree p for ``t = 0`` (a
    single class), and in degree n for ``t < p - n``.
    """
    if not 0 <= p <= n:
        raise ValueError("0 <= p <= n")
    dims = [0] * (n + 1)
    if t > p:
        dims[0] = binom(t + n - p, t) * binom(t - 1, p)
    elif t == 0:
        dims[p] = 1
    elif t < p - n:
        dims[n] = binom(-t + p, -t) * binom(-t - 1, n - p)
    return CohVector(tuple(dims))


def coh_quadric(n: int, t: int) -> CohVector:
    """Cohomology of ``O(t)`` on a smooth n-dimensional quadric.

    Sections come from the ambient restriction sequence, the top degree from
    Serre duality with ``omega = O(-n)``; everything in between vanishes.
    """
    if n < 2:
        raise ValueError("n >= 2")
    dims = [0] * (n + 1)
    if t >= 0:
        dims[0] = binom(t + n + 1, n + 1) - binom(t + n - 1, n + 1)
    elif t <= -n:
        s = -n - t
        dims[n] = binom(s + n + 1, n + 1) - binom(s + n - 1, n + 1)
    return CohVector(tuple(dims))


def coh_product(factors: list[tuple[int, int]]) -> CohVector:
    """Kunneth convolution for ``O(t_1, ..., t_r)`` on a product of projective spaces."""
    if not factors:
        raise ValueError("at least one factor")
    total_dim = sum(n for n, _ in factors)
    acc = [1]
    for n, t in factors:
        vec = coh_projective_space(n, t)
        nxt = [0] * (len(acc) + n)
        for i, a in enumerate(acc):
            if a:
                for q in range(n + 1):
                    if vec[q]:
                        nxt[i + q] += a * vec[q]
        acc = nxt
    assert len(acc) == total_dim + 1
    return CohVector(tuple(acc))


def weyl_dim_sl3(m1: int, m2: int) -> int:
    """Dimension of the irreducible SL(3) representation with highest weight (m1, m2)."""
    return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) // 2


def coh_flag3(a1: int, a2: int) -> CohVector:
    """Borel-Weil-Bott for ``O(a1 h1 + a2 h2)`` on the flag 3-fold.

    With ``(x, y) = (a1 + 1, a2 + 1)`` the bundle is acyclic when x, y or
    x + y vanishes; otherwise exactly one degree survives, carrying the Weyl
    dimension of the dominant representative of the dotted orbit.  The
    fundamental-weight order is fixed so that ``O(h1)`` has three sections;
    swapping h1 and h2 is a symmetry of the output.
    """
    x, y = a1 + 1, a2 + 1
    dims = [0, 0, 0, 0]
    if x == 0 or y == 0 or x + y == 0:
        return CohVector(tuple(dims))
    orbit = (
        ((x, y), 0),
        ((-x, x + y), 1),
        ((x + y, -y), 1),
        ((-x - y, x), 2),
        ((y, -x - y), 2),
        ((-y, -x), 3),
    )
    hits = [(pq, length) for pq, length in orbit if pq[0] > 0 and pq[1] > 0]
    assert len(hits) == 1, (a1, a2, hits)
    (p, q), length = hits[0]
    dims[length] = weyl_dim_sl3(p - 1, q - 1)
    return CohVector(tuple(dims))


def coh_scroll_p1(degrees: tuple[int, ...], t: int, a: int) -> CohVector:
    """Cohomology of ``O(t h + a f)`` on the scroll P(O(a_0)+...+O(a_{n-1})) over P^1.

    For ``t >= 0`` the pushforward splits into line bundles on P^1 indexed by
    degree-t multisets of the split degrees; for ``1-n <= t <= -1`` everything
    vanishes; below that, Serre duality against ``omega = O(-n h + (d-2) f)``.
    """
    degrees = tuple(degrees)
    n = len(degrees)
    if n < 2 or any(x < 1 for x in degrees):
        raise ValueError("need >= 2 split degrees, all >= 1")
    d = sum(degrees)
    if 1 - n <= t <= -1:
        return zero_vector(n)
    if t >= 0:
        dims = [0] * (n + 1)
        for multiset in itertools.combinations_with_replacement(range(n), t):
            deg = a + sum(degrees[i] for i in multiset)
            if deg >= 0:
                dims[0] += deg + 1
            else:
                dims[1] += -deg - 1
        return CohVector(tuple(dims))
    dual = coh_scroll_p1(degrees, -n - t, d - 2 - a)
    return serre_dual_vector(dual)


def coh_curve(g: int, d: int, model: str) -> CohVector:
    """Cohomology of a degree-d line bundle on a genus-g curve.

    ``exact_p1`` is exact on the line; ``generic`` returns the general
    Brill-Noether value; ``theta`` is the non-effective theta-characteristic
    itself and insists on ``d = g - 1``.
    """
    if g < 0:
        raise ValueError("genus >= 0")
    if model == "exact_p1":
        if g != 0:
            raise ValueError("exact_p1 requires genus 0")
        return CohVector((max(0, d + 1), max(0, -d - 1)))
    if model == "generic":
        return CohVector((max(0, d - g + 1), max(0, g - 1 - d)))
    if model == "theta":
        if d != g - 1:
            raise ValueError(f"a theta-characteristic has degree g - 1 = {g - 1}, got {d}")
        return CohVector((0, 0))
    raise ValueError(f"unknown curve model {model!r}")


def coh_curve_theta_shift(g: int, deg_h: int, s: int) -> CohVector:
    """Cohomology of ``O(theta + s h)`` for a generic non-effective theta.

    Exact consequence of genericity: ``chi = s deg(h)`` and one-sided
    vanishing, so ``h^0 = max(s, 0) deg(h)`` and ``h^1 = max(-s, 0) deg(h)``.
    """
    if deg_h < 1:
        raise ValueError("polarization degree >= 1")
    return CohVector((max(s, 0) * deg_h, max(-s, 0) * deg_h))


def coh_cyclic_fano_index1(entry: VarietyCatalogEntry, m: int) -> CohVector:
    """Cohomology of ``O(m H)`` on a prime Fano 3-fold of genus g.

    Kodaira vanishing kills the middle groups for every twist, so
    ``h^0 = chi`` for ``m >= 0`` and ``h^3 = h^0(O((-1-m) H))`` by duality.
    """
    if entry.kind != "prime_fano":
        raise ValueError("entry must be a prime Fano 3-fold")

    def h0(k: int) -> int:
        if k < 0:
            return 0
        return rr.chi_threefold_cyclic(entry, 1, k, 0, 0, 0)

    return CohVector((h0(m), 0, 0, h0(-1 - m)))


# --------------------------------------------------------------------------
# Bundle descriptors and tables
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LineBundleSpec:
    """A line bundle in the divisor basis of one catalog variety.

    ``coordinates`` is (t) on cyclic entries, (a1, a2) on the flag,
    (a1, a2, a3) on the triple product, (t, a) = t h + a f on scrolls and the
    plain degree (d) on curves.  On curves, ``theta`` switches to the twist
    family ``O(theta + s h)`` with ``s = coordinates[0]``.
    """

    variety_id: str
    coordinates: tuple[int, ...]
    theta: bool = False

    def to_json(self) -> dict:
        out: dict = {"variety": self.variety_id, "coordinates": list(self.coordinates)}
        if self.theta:
            out["theta"] = True
        return out


def line_bundle_cohomology(
    entry: VarietyCatalogEntry, coords: tuple[int, ...], theta: bool = False
) -> CohVector:
    """Dispatch one line bundle to its exact engine."""
    coords = check_coords(entry, coords)
    if theta and entry.kind != "curve":
        raise UnsupportedBundleError("theta twists only exist on curve entries")
    kind = entry.kind
    if kind == "projective_space":
        return coh_projective_space(entry.dimension, coords[0])
    if kind == "quadric":
        return coh_quadric(entry.dimension, coords[0])
    if kind == "prime_fano":
        return coh_cyclic_fano_index1(entry, coords[0])
    if kind == "flag3":
        return coh_flag3(*coords)
    if kind == "triple_p1":
        return coh_product([(1, coords[0]), (1, coords[1]), (1, coords[2])])
    if kind == "scroll_p1":
        return coh_scroll_p1(entry.degrees, coords[0], coords[1])
    if kind == "scroll_generic":
        t = coords[0]
        if 1 - entry.dimension <= t <= -1:
            return zero_vector(entry.dimension)
        raise UnsupportedBundleError(
            "only the vanishing window is exact on generic scrolls; use chi_scroll_line"
        )
    if kind == "curve":
        if theta:
            return coh_curve_theta_shift(entry.genus, entry.deg_h, coords[0])
        return coh_curve(entry.genus, coords[0], entry.curve_model)
    raise UnsupportedBundleError(f"no engine for {entry.kind}")


def chi_scroll_line(entry: VarietyCatalogEntry, t: int, a: int) -> int:
    """Exact ``chi(O(t h + a f))`` on any scroll (deg a = a on the base curve).

    For ``t >= 0`` this is Riemann-Roch for the symmetric power of the
    defining bundle; inside the vanishing window it is zero; below, Serre
    duality.  Certified for both the split and the generic scroll model.
    """
    n, d, g = entry.dimension, entry.deg_g, entry.genus or 0
    if 1 - n <= t <= -1:
        return 0
    if t >= 0:
        rank = binom(t + n - 1, n - 1)
        deg = d * binom(t + n - 1, n)
        return rank * (1 - g + a) + deg
    return (-1) ** n * chi_scroll_line(entry, -n - t, d - 2 + 2 * g - a)


Bundles = list[tuple[tuple[int, ...], int]]


@dataclass(frozen=True)
class CohomologyTable:
    """Cohomology vectors of one sheaf over an inclusive twist window."""

    variety_id: str
    dimension: int
    rank: int
    tmin: int
    tmax: int
    rows: tuple[CohVector, ...]
    chern: ChernData | None = None
    assumptions: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.tmin > self.tmax:
            raise ValueError("empty window")
        if len(self.rows) != self.tmax - self.tmin + 1:
            raise ValueError("row count does not match the window")
        for row in self.rows:
            if len(row) != self.dimension + 1:
                raise ValueError("row length does not match the dimension")

    def covers(self, a: int, b: int) -> bool:
        return self.tmin <= a and b <= self.tmax

    def require(self, twists: list[int]) -> None:
        missing = tuple(sorted(t for t in set(twists) if not self.tmin <= t <= self.tmax))
        if missing:
            raise WindowError(
                f"table window [{self.tmin}, {self.tmax}] is missing twists {list(missing)}",
                missing,
            )

    def row(self, t: int) -> CohVector:
        self.require([t])
        return self.rows[t - self.tmin]

    def h(self, i: int, t: int) -> int:
        return self.row(t)[i]

    def chi_at(self, t: int) -> int:
        return self.row(t).chi()

    def twists(self) -> range:
        return range(self.tmin, self.tmax + 1)

    def to_json(self) -> dict:
        out: dict = {
            "variety": self.variety_id,
            "rank": self.rank,
            "window": {"tmin": self.tmin, "tmax": self.tmax},
            "rows": [{"t": t, "h": list(self.row(t).dims)} for t in self.twists()],
        }
        if self.chern is not None:
            out["chern"] = self.chern.to_json()
        if self.assumptions:
            out["assumptions"] = list(self.assumptions)
        return out

    @staticmethod
    def from_json(data: dict) -> "CohomologyTable":
        rows_sorted = sorted(data["rows"], key=lambda r: r["t"])
        tmin, tmax = data["window"]["tmin"], data["window"]["tmax"]
        if [r["t"] for r in rows_sorted] != list(range(tmin, tmax + 1)):
            raise ValueError("rows do not enumerate the window")
        rows = tuple(CohVector(tuple(r["h"])) for r in rows_sorted)
        chern = None
        if data.get("chern"):
            chern = ChernData.from_json(data["variety"], data["chern"])
        return CohomologyTable(
            variety_id=data["variety"],
            dimension=len(rows[0]) - 1,
            rank=data["rank"],
            tmin=tmin,
            tmax=tmax,
            rows=rows,
            chern=chern,
            assumptions=tuple(data.get("assumptions", ())),
        )


def build_table(
    entry: VarietyCatalogEntry,
    bundles: Bundles | tuple[int, ...],
    window: tuple[int, int],
    theta: bool = False,
    with_chern: bool = True,
) -> CohomologyTable:
    """Table of a direct sum of line bundles over a twist window.

    ``bundles`` is either a single coordinate tuple or a list of
    ``(coordinates, multiplicity)`` pairs; ``theta`` interprets curve
    coordinates as shifts of a non-effective theta-characteristic.  Rank and
    Chern data are filled in whenever derivable.
    """
    if isinstance(bundles, tuple):
        bundles = [(bundles, 1)]
    if not bundles:
        raise UnsupportedBundleError("empty bundle descriptor")
    tmin, tmax = window
    n = entry.dimension
    rows = []
    for t in range(tmin, tmax + 1):
        acc = zero_vector(n)
        for coords, mult in bundles:
            # theta coordinates are shifts of the theta-characteristic, so a
            # twist by t h moves the shift by t
            tw = (coords[0] + t,) if theta else twist_coords(entry, coords, t)
            vec = line_bundle_cohomology(entry, tw, theta=theta)
            acc = acc + vec.scale(mult)
        rows.append(acc)
    chern = None
    if with_chern:
        if theta:
            # c1 of O(theta + s h) is (g - 1 + s deg h) . point
            g, dh = entry.genus, entry.deg_h
            summands = [
                (line_bundle_class(entry, (g - 1 + s[0] * dh,)), m) for s, m in bundles
            ]
        else:
            summands = [(line_bundle_class(entry, coords), m) for coords, m in bundles]
        chern = rr.chern_of_line_bundle_sum(summands)
    assumptions = ()
    if entry.kind == "curve" and (entry.curve_model == "generic" or theta):
        assumptions = ("generic Brill-Noether position",)
    return CohomologyTable(
        variety_id=entry.variety_id,
        dimension=n,
        rank=sum(m for _, m in bundles),
        tmin=tmin,
        tmax=tmax,
        rows=tuple(rows),
        chern=chern,
        assumptions=assumptions,
    )


def serre_dual_coords(entry: VarietyCatalogEntry, coords: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinates of ``K_X - L``; Serre duality pairs its vector with L's reversed."""
    coords = check_coords(entry, coords)
    return tuple(k - c for k, c in zip(canonical_coords(entry), coords))
