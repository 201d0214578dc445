"""Riemann-Roch Euler characteristics, slopes and Chern-class arithmetic.

Everything here is exact: Euler characteristics are integers computed with
:class:`fractions.Fraction` intermediates, slopes are exact rationals, and
the bracket ``[x]`` appearing in normalization twists is the floor.

Riemann-Roch is only implemented through dimension 3 (the shapes that admit
closed displays); higher-dimensional Euler characteristics always come from
the cohomology engines instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chow
from .catalog import VarietyCatalogEntry
from .chow import ChowClass
from .errors import InfeasibleError
from .util import as_int, binom, floor_frac


@dataclass(frozen=True)
class ChernData:
    """Rank and Chern classes of a sheaf on one catalog variety.

    ``c2`` may be omitted on curves and ``c3`` below 3-folds.
    """

    rank: int
    c1: ChowClass
    c2: ChowClass | None = None
    c3: ChowClass | None = None

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if not self.c1.is_homogeneous(1):
            raise ValueError("c1 must be homogeneous of degree 1")
        for cls, deg in ((self.c2, 2), (self.c3, 3)):
            if cls is not None:
                if cls.variety_id != self.c1.variety_id:
                    raise ValueError("Chern classes live on different varieties")
                if not cls.is_homogeneous(deg):
                    raise ValueError(f"c{deg} must be homogeneous of degree {deg}")

    @property
    def variety_id(self) -> str:
        return self.c1.variety_id

    def to_json(self) -> dict:
        out: dict = {"rank": self.rank, "c1": self.c1.to_json()}
        if self.c2 is not None:
            out["c2"] = self.c2.to_json()
        if self.c3 is not None:
            out["c3"] = self.c3.to_json()
        return out

    @staticmethod
    def from_json(variety_id: str, data: dict) -> "ChernData":
        def cls(key: str) -> ChowClass | None:
            return ChowClass.from_json(variety_id, data[key]) if key in data else None

        return ChernData(data["rank"], ChowClass.from_json(variety_id, data["c1"]), cls("c2"), cls("c3"))


def chern_of_line_bundle_sum(summands: list[tuple[ChowClass, int]]) -> ChernData:
    """Whitney Chern data of a direct sum of line bundles ``(+) O(D_i)^m_i``."""
    if not summands:
        raise ValueError("empty direct sum has no Chern data")
    ring = summands[0][0].ring
    total = [ring.one(), ring.zero(), ring.zero(), ring.zero()]
    rank = 0
    for D, m in summands:
        if m < 0:
            raise ValueError("multiplicities must be nonnegative")
        rank += m
        # (1 + D)^m truncated in degrees <= 3
        factor = [ring.one(), binom(m, 1) * D, binom(m, 2) * D * D, binom(m, 3) * D * D * D]
        total = [
            sum((total[i] * factor[k - i] for i in range(k + 1)), start=ring.zero())
            for k in range(4)
        ]
    n = ring.top_degree
    return ChernData(
        rank,
        total[1],
        total[2] if n >= 2 else None,
        total[3] if n >= 3 else None,
    )


def twist(c: ChernData, D: ChowClass) -> ChernData:
    """Chern data of ``E (x) O(D)``."""
    r = c.rank
    c1 = c.c1 + r * D
    c2 = None
    if c.c2 is not None:
        c2 = c.c2 + (r - 1) * D * c.c1 + binom(r, 2) * D * D
    c3 = None
    if c.c3 is not None:
        if c.c2 is None:
            raise ValueError("c3 without c2")
        c3 = c.c3 + (r - 2) * D * c.c2 + binom(r - 1, 2) * D * D * c.c1 + binom(r, 3) * D * D * D
    return ChernData(r, c1, c2, c3)


def dual(c: ChernData) -> ChernData:
    """Chern data of the dual sheaf."""
    return ChernData(c.rank, -c.c1, c.c2, -c.c3 if c.c3 is not None else None)


def ulrich_dual_chern(entry: VarietyCatalogEntry, c: ChernData, defect: int = 0) -> ChernData:
    """Chern data of ``E^v((n+1)h + K_X - defect*h)``."""
    D = (entry.dimension + 1 - defect) * entry.polarization + entry.canonical
    return twist(dual(c), D)


def twist_by_h(entry: VarietyCatalogEntry, c: ChernData, t: int) -> ChernData:
    return twist(c, t * entry.polarization)


# --------------------------------------------------------------------------
# Euler characteristics
# --------------------------------------------------------------------------


def chi_curve(entry: VarietyCatalogEntry, c: ChernData) -> int:
    """chi = rank * chi(O_X) + deg c1 on a curve."""
    if entry.dimension != 1:
        raise ValueError(f"{entry.variety_id} is not a curve")
    return c.rank * entry.chi_O + chow.integrate(c.c1)


def chi_surface(entry: VarietyCatalogEntry, c: ChernData) -> int:
    """chi = rank * chi(O_X) + c1^2/2 - K c1/2 - c2 on a surface."""
    if entry.dimension != 2:
        raise ValueError(f"{entry.variety_id} is not a surface")
    if c.c2 is None:
        raise ValueError("surface Riemann-Roch needs c2")
    K = entry.canonical
    val = (
        Fraction(c.rank * entry.chi_O)
        + Fraction(chow.integrate(c.c1 * c.c1), 2)
        - Fraction(chow.integrate(K * c.c1), 2)
        - chow.integrate(c.c2)
    )
    return as_int(val, "chi")


def chi_threefold(entry: VarietyCatalogEntry, c: ChernData) -> int:
    """The four-term 3-fold Riemann-Roch evaluated with exact intersections."""
    if entry.dimension != 3:
        raise ValueError(f"{entry.variety_id} is not a 3-fold")
    if c.c2 is None or c.c3 is None:
        raise ValueError("3-fold Riemann-Roch needs c2 and c3")
    K = entry.canonical
    c1, c2, c3 = c.c1, c.c2, c.c3
    if entry.c2_omega is not None:
        c2omega_c1 = chow.integrate(entry.c2_omega * c1)
    elif entry.c2_omega_dot_h is not None:
        # Numerical cyclic entries store the pairing c2(Omega).H only; c1 is
        # then necessarily an integer multiple of the ample generator H.
        lam = c1.coefficient(entry.ring.monomial(H=1))
        c2omega_c1 = lam * entry.c2_omega_dot_h
    else:
        raise ValueError(f"{entry.variety_id} carries no c2 of the cotangent sheaf")
    val = (
        Fraction(c.rank * entry.chi_O)
        + Fraction(
            chow.integrate(c1 * c1 * c1) - 3 * chow.integrate(c1 * c2) + 3 * chow.integrate(c3), 6
        )
        - Fraction(chow.integrate(K * c1 * c1) - 2 * chow.integrate(K * c2), 4)
        + Fraction(chow.integrate(K * K * c1) + c2omega_c1, 12)
    )
    return as_int(val, "chi")


def chi(entry: VarietyCatalogEntry, c: ChernData) -> int:
    """Dimension dispatcher; Riemann-Roch is not provided above dimension 3."""
    n = entry.dimension
    if n == 1:
        return chi_curve(entry, c)
    if n == 2:
        return chi_surface(entry, c)
    if n == 3:
        return chi_threefold(entry, c)
    raise ValueError("Riemann-Roch is only implemented through dimension 3; use the cohomology engines")


def chi_twisted(entry: VarietyCatalogEntry, c: ChernData, t: int) -> int:
    """chi(E(t h))."""
    return chi(entry, twist_by_h(entry, c, t))


def chi_threefold_cyclic(
    entry: VarietyCatalogEntry,
    rank: int,
    c1_mult: int,
    c2_dot_h: int,
    c3_deg: int = 0,
    t: int = 0,
) -> int:
    """3-fold Riemann-Roch on a cyclic entry from pairing data.

    ``c1 = c1_mult * H``, ``c2 . H = c2_dot_h`` and ``deg c3 = c3_deg``; the
    twist is by ``t h``.  This covers sheaves (e.g. on prime Fano 3-folds)
    whose c2 is not an integer multiple of H^2 in the numerical ring, where
    :func:`chi_threefold` cannot be fed a ChowClass.
    """
    if entry.dimension != 3 or len(entry.ring.generators) != 1:
        raise ValueError("chi_threefold_cyclic needs a cyclic 3-fold entry")
    hn = chow.integrate(entry.ring.gen("H") ** 3)
    K = entry.canonical.coefficient(entry.ring.monomial(H=1))
    if entry.c2_omega is not None:
        c2omega = chow.integrate(entry.c2_omega * entry.ring.gen("H"))
    elif entry.c2_omega_dot_h is not None:
        c2omega = entry.c2_omega_dot_h
    else:
        raise ValueError(f"{entry.variety_id} carries no c2 of the cotangent sheaf")
    s = t * entry.u  # twist in units of H
    a = c1_mult + rank * s
    c2h = c2_dot_h + ((rank - 1) * s * c1_mult + binom(rank, 2) * s * s) * hn
    c3d = (
        c3_deg
        + (rank - 2) * s * c2_dot_h
        + (binom(rank - 1, 2) * s * s * c1_mult + binom(rank, 3) * s**3) * hn
    )
    val = (
        Fraction(rank * entry.chi_O)
        + Fraction(a**3 * hn - 3 * a * c2h + 3 * c3d, 6)
        - Fraction(K * a * a * hn - 2 * K * c2h, 4)
        + Fraction(K * K * a * hn + a * c2omega, 12)
    )
    return as_int(val, "chi")


# --------------------------------------------------------------------------
# Slopes, normalization and first-Chern-class constraints
# --------------------------------------------------------------------------


def slope(entry: VarietyCatalogEntry, c: ChernData) -> Fraction:
    """mu_h(E) = c1(E) . h^(n-1) / rank, exact."""
    n = entry.dimension
    return Fraction(chow.integrate(c.c1 * entry.h_power(n - 1)), c.rank)


def normalization_twist(entry: VarietyCatalogEntry, c: ChernData) -> int:
    """The unique t with ``-rank h^n < c1(E(t h)) . h^(n-1) <= 0``.

    Equals the floor of ``-mu_h(E) / h^n``.  Conventions: the defining pairing
    is against ``h^(n-1)`` (the only reading producing an integer of the
    right size), and the bracket is the floor, so that e.g. ``c1 = 3h`` on an
    index-one Fano 3-fold normalizes by ``floor(-3/2) = -2``.
    """
    return floor_frac(-slope(entry, c) / entry.hn())


def slope_condition(entry: VarietyCatalogEntry, c: ChernData, defect: int) -> bool:
    """Exact test of ``2 c1 . h^(n-1) = rank ((n+1-defect) h^n + K h^(n-1))``."""
    n = entry.dimension
    lhs = 2 * chow.integrate(c.c1 * entry.h_power(n - 1))
    rhs = c.rank * (
        (n + 1 - defect) * entry.hn() + chow.integrate(entry.canonical * entry.h_power(n - 1))
    )
    return lhs == rhs


def cyclic_c1(rank: int, defect: int, u: int, v: int, n: int) -> int | None:
    """Forced c1 multiple on a cyclic n-fold with h = uH and omega = vH.

    Returns epsilon with ``c1 = epsilon H``, or None when the parity
    obstruction makes the first Chern class infeasible.
    """
    twice = rank * (u * (n + 1 - defect) + v)
    if twice % 2:
        return None
    return twice // 2


def chern_poly_instanton_pn(n: int, rank: int, defect: int, quantum: int) -> tuple[int, ...]:
    """Chern classes ``(c1, ..., cn)`` of an instanton sheaf on P^n.

    Expands the rational Chern polynomial of the defining monad as a power
    series truncated in degree n, under the identification ``A^i(P^n) = Z``:
    ``1/(1-t^2)^q`` for defect 0, ``(1-t)^(r/2+q) (1+t)^(-q) (1-2t)^(-q)``
    for defect 1 on n >= 3, and ``(1-t)^(r/2) (1-t^2)^(-q)`` for defect 1 on
    the plane.
    """
    if defect not in (0, 1):
        raise ValueError("defect must be 0 or 1")
    if n < 2:
        raise ValueError("Chern polynomials are synthesized for n >= 2")
    if defect and rank % 2:
        raise InfeasibleError("non-ordinary instanton sheaves on P^n have even rank")

    def series_binomial(scale: int, exponent: int, step: int = 1) -> list[int]:
        # power series of (1 + scale*t^step)^exponent, truncated in degree n
        coeffs = [0] * (n + 1)
        for j in range(0, n // step + 1):
            coeffs[j * step] = binom(exponent, j) * scale**j
        return coeffs

    def mul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if i + j <= n and bj:
                        out[i + j] += ai * bj
        return out

    if defect == 0:
        total = series_binomial(-1, -quantum, step=2)
    elif n >= 3:
        total = series_binomial(-1, rank // 2 + quantum)
        total = mul(total, series_binomial(1, -quantum))
        total = mul(total, series_binomial(-2, -quantum))
    else:
        total = mul(series_binomial(-1, rank // 2), series_binomial(-1, -quantum, step=2))
    return tuple(total[1 : n + 1])


def quantum_chern_identity(
    entry: VarietyCatalogEntry, c: ChernData, defect: int, chi_list: list[int]
) -> int:
    """Solve the surface-restriction identity for the quantum number.

    ``chi_list`` supplies ``chi(O_X(-i h))`` for ``0 <= i <= n-2``; the
    identity reads

        eps q = (c2 - c1 (c1 - K - (n-2) h) / 2) . h^(n-2)
                + rank (h^n / (1+defect) - sum_i (-1)^i C(n-2, i) chi_list[i])

    with eps = 1 on surfaces and 1 + defect above.  A non-integral solution
    signals inconsistent inputs.
    """
    n = entry.dimension
    if n < 2:
        raise ValueError("the identity needs dimension >= 2")
    if c.c2 is None:
        raise ValueError("c2 is required")
    if len(chi_list) != n - 1:
        raise ValueError(f"chi_list must have {n - 1} entries chi(O(-i h)), 0 <= i <= n-2")
    eps = 1 if n == 2 else 1 + defect
    hpow = entry.h_power(n - 2)
    K = entry.canonical
    corr = c.c1 * (c.c1 - K - (n - 2) * entry.polarization)
    geom = Fraction(chow.integrate(c.c2 * hpow)) - Fraction(chow.integrate(corr * hpow), 2)
    euler = Fraction(entry.hn(), 1 + defect) - sum(
        (-1) ** i * binom(n - 2, i) * chi_list[i] for i in range(n - 1)
    )
    q = (geom + c.rank * euler) / eps
    if q.denominator != 1:
        raise InfeasibleError(f"quantum number came out non-integral: {q}")
    return int(q)
