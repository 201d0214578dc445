"""The polarized-variety catalog.

Every computation in the package happens on one of these entries: projective
spaces, smooth quadrics (numerical model), the flag 3-fold, the triple
product of projective lines, rational normal scrolls over P^1, scrolls over
a generic curve (Euler characteristics only), smooth curves, and prime Fano
3-folds parameterized by their genus.

An entry packages the Chow-ring presentation together with the polarization
class h, the canonical class K_X, chi(O_X) and, on 3-folds, c_2 of the
cotangent sheaf (needed by Riemann-Roch).  Entries are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import chow
from .chow import ChowClass, ChowRingPresentation, cyclic_numerical_ring, preset_ring
from .errors import UnknownVarietyError


@dataclass(frozen=True)
class VarietyCatalogEntry:
    variety_id: str
    kind: str
    dimension: int
    ring: ChowRingPresentation = field(repr=False)
    polarization: ChowClass
    canonical: ChowClass
    chi_O: int
    c2_omega: ChowClass | None = None
    #: pairing c_2(Omega_X) . h, used on cyclic 3-folds whose c_2 is not an
    #: integer multiple of H^2 in the numerical ring (prime Fano entries).
    c2_omega_dot_h: int | None = None
    is_acm: bool = False
    #: polarization multiple of the ample generator on cyclic entries
    u: int = 1
    degrees: tuple[int, ...] | None = None
    genus: int | None = None
    deg_g: int | None = None
    curve_model: str | None = None
    deg_h: int | None = None
    fano_index: int | None = None

    @property
    def n(self) -> int:
        return self.dimension

    def h_power(self, k: int) -> ChowClass:
        return self.polarization**k

    def hn(self) -> int:
        """Degree of the polarization, ``integrate(h^n)``."""
        return chow.integrate(self.h_power(self.dimension))

    def picard_rank(self) -> int:
        """Picard rank as modeled (the length of line-bundle coordinate tuples)."""
        return {"flag3": 2, "triple_p1": 3, "scroll_p1": 2, "scroll_generic": 2}.get(self.kind, 1)

    def __post_init__(self) -> None:
        if self.hn() <= 0:
            raise ValueError(f"polarization of {self.variety_id} is not numerically ample")


def projective_space(n: int, u: int = 1) -> VarietyCatalogEntry:
    """P^n, polarized by O(u)."""
    if n < 1 or u < 1:
        raise UnknownVarietyError(f"projective_space({n}) with h=O({u}) is not a catalog entry")
    ring = preset_ring(f"projective_space({n})")
    H = ring.gen("H")
    entry_id = ring.variety_id if u == 1 else f"projective_space({n};h={u})"
    return VarietyCatalogEntry(
        variety_id=entry_id,
        kind="projective_space",
        dimension=n,
        ring=ring,
        polarization=u * H,
        canonical=-(n + 1) * H,
        chi_O=1,
        c2_omega=6 * H * H if n == 3 else None,
        is_acm=True,
        u=u,
        fano_index=n + 1 if u == 1 else None,
    )


def quadric(n: int, u: int = 1) -> VarietyCatalogEntry:
    """Smooth quadric hypersurface in P^(n+1), numerical Chow model."""
    if n < 2 or u < 1:
        raise UnknownVarietyError(f"quadric({n}) with h=O({u}) is not a catalog entry")
    ring = preset_ring(f"quadric({n})")
    H = ring.gen("H")
    entry_id = ring.variety_id if u == 1 else f"quadric({n};h={u})"
    return VarietyCatalogEntry(
        variety_id=entry_id,
        kind="quadric",
        dimension=n,
        ring=ring,
        polarization=u * H,
        canonical=-n * H,
        chi_O=1,
        c2_omega=4 * H * H if n == 3 else None,
        is_acm=True,
        u=u,
        fano_index=n if u == 1 else None,
    )


def flag3() -> VarietyCatalogEntry:
    """The flag 3-fold (incidence divisor in P^2 x P^2), h = h1 + h2."""
    ring = preset_ring("flag3")
    h1, h2 = ring.gen("h1"), ring.gen("h2")
    return VarietyCatalogEntry(
        variety_id="flag3",
        kind="flag3",
        dimension=3,
        ring=ring,
        polarization=h1 + h2,
        canonical=-2 * h1 - 2 * h2,
        chi_O=1,
        c2_omega=6 * (h1 * h2),
        is_acm=True,
        fano_index=2,
    )


def triple_p1() -> VarietyCatalogEntry:
    """P^1 x P^1 x P^1 with h = h1 + h2 + h3."""
    ring = preset_ring("triple_p1")
    h1, h2, h3 = (ring.gen(g) for g in ring.generators)
    return VarietyCatalogEntry(
        variety_id="triple_p1",
        kind="triple_p1",
        dimension=3,
        ring=ring,
        polarization=h1 + h2 + h3,
        canonical=-2 * (h1 + h2 + h3),
        chi_O=1,
        c2_omega=4 * (h1 * h2 + h1 * h3 + h2 * h3),
        is_acm=True,
        fano_index=2,
    )


def _scroll_c2_omega(ring: ChowRingPresentation, deg_g: int, genus: int) -> ChowClass:
    h, f = ring.gen("h"), ring.gen("f")
    return 3 * h * h - (2 * deg_g + 6 * genus - 6) * (h * f)


def scroll_p1(degrees: tuple[int, ...]) -> VarietyCatalogEntry:
    """Rational normal scroll P(O(a_0) + ... + O(a_{n-1})) over P^1."""
    degrees = tuple(sorted(degrees))
    n = len(degrees)
    if n < 2 or any(a < 1 for a in degrees):
        raise UnknownVarietyError(f"scroll over P^1 needs >= 2 split degrees, all >= 1: {degrees}")
    d = sum(degrees)
    ring = preset_ring(f"scroll({n},{d})")
    h, f = ring.gen("h"), ring.gen("f")
    return VarietyCatalogEntry(
        variety_id=f"scroll_p1({','.join(map(str, degrees))})",
        kind="scroll_p1",
        dimension=n,
        ring=ring,
        polarization=h,
        canonical=-n * h + (d - 2) * f,
        chi_O=1,
        c2_omega=_scroll_c2_omega(ring, d, 0) if n == 3 else None,
        is_acm=True,
        degrees=degrees,
        genus=0,
        deg_g=d,
    )


def scroll_generic(n: int, genus: int, deg_g: int) -> VarietyCatalogEntry:
    """Scroll over a genus-g curve; only Euler characteristics are certified exact."""
    if n < 2 or genus < 0 or deg_g < 1:
        raise UnknownVarietyError(f"scroll({n}) over genus {genus} of degree {deg_g} is not admissible")
    ring = preset_ring(f"scroll({n},{deg_g})")
    h, f = ring.gen("h"), ring.gen("f")
    return VarietyCatalogEntry(
        variety_id=f"scroll_generic({n};g={genus};deg={deg_g})",
        kind="scroll_generic",
        dimension=n,
        ring=ring,
        polarization=h,
        canonical=-n * h + (deg_g + 2 * genus - 2) * f,
        chi_O=1 - genus,
        c2_omega=_scroll_c2_omega(ring, deg_g, genus) if n == 3 else None,
        is_acm=False,
        genus=genus,
        deg_g=deg_g,
    )


def curve(genus: int, deg_h: int, model: str = "generic") -> VarietyCatalogEntry:
    """Smooth curve of the given genus with a polarization of degree ``deg_h``.

    ``model`` is ``exact_p1`` (genus 0, everything exact) or ``generic``
    (general Brill-Noether position; flagged as an assumption on outputs).
    """
    if model not in ("exact_p1", "generic"):
        raise UnknownVarietyError(f"unknown curve model {model!r}")
    if model == "exact_p1" and genus != 0:
        raise UnknownVarietyError("the exact_p1 curve model requires genus 0")
    if genus < 0 or deg_h < 1:
        raise UnknownVarietyError(f"curve(genus={genus}, deg_h={deg_h}) is not admissible")
    ring = preset_ring(f"curve({genus})")
    P = ring.gen("H")
    return VarietyCatalogEntry(
        variety_id=f"curve({genus};deg={deg_h};{model})",
        kind="curve",
        dimension=1,
        ring=ring,
        polarization=deg_h * P,
        canonical=(2 * genus - 2) * P,
        chi_O=1 - genus,
        is_acm=True,
        genus=genus,
        deg_h=deg_h,
        curve_model=model,
    )


def prime_fano(genus: int) -> VarietyCatalogEntry:
    """Prime Fano 3-fold of index 1 and genus g (h^3 = 2g - 2), numerical model.

    c_2 of the cotangent sheaf is carried as the pairing c_2 . h = 24 (it is
    not an integer multiple of H^2 once 2g - 2 does not divide 24).
    """
    if genus < 3:
        raise UnknownVarietyError("prime Fano 3-folds have genus >= 3")
    ring = cyclic_numerical_ring(3, 2 * genus - 2, f"prime_fano({genus})")
    H = ring.gen("H")
    return VarietyCatalogEntry(
        variety_id=ring.variety_id,
        kind="prime_fano",
        dimension=3,
        ring=ring,
        polarization=H,
        canonical=-H,
        chi_O=1,
        c2_omega_dot_h=24,
        is_acm=True,
        genus=genus,
        fano_index=1,
    )


# --------------------------------------------------------------------------
# Line-bundle coordinates
#
# Coordinates follow the entry's divisor basis: (t) on cyclic entries
# (meaning O(t H)), (a1, a2) on the flag, (a1, a2, a3) on the triple product,
# (t, a) meaning t*h + a*f on scrolls, and the plain degree (d) on curves.
# --------------------------------------------------------------------------


def check_coords(entry: VarietyCatalogEntry, coords: tuple[int, ...]) -> tuple[int, ...]:
    coords = tuple(int(c) for c in coords)
    if len(coords) != entry.picard_rank():
        raise ValueError(
            f"{entry.variety_id} expects {entry.picard_rank()} line-bundle coordinates, got {coords}"
        )
    return coords


def twist_coords(entry: VarietyCatalogEntry, coords: tuple[int, ...], t: int) -> tuple[int, ...]:
    """Coordinates of ``L(t h)``."""
    coords = check_coords(entry, coords)
    kind = entry.kind
    if kind in ("projective_space", "quadric", "prime_fano"):
        return (coords[0] + t * entry.u,)
    if kind == "flag3":
        return (coords[0] + t, coords[1] + t)
    if kind == "triple_p1":
        return (coords[0] + t, coords[1] + t, coords[2] + t)
    if kind in ("scroll_p1", "scroll_generic"):
        return (coords[0] + t, coords[1])
    if kind == "curve":
        return (coords[0] + t * entry.deg_h,)
    raise UnknownVarietyError(entry.kind)


def canonical_coords(entry: VarietyCatalogEntry) -> tuple[int, ...]:
    """Coordinates of K_X in the entry's divisor basis."""
    kind = entry.kind
    n = entry.dimension
    if kind == "projective_space":
        return (-(n + 1),)
    if kind == "quadric":
        return (-n,)
    if kind == "prime_fano":
        return (-1,)
    if kind == "flag3":
        return (-2, -2)
    if kind == "triple_p1":
        return (-2, -2, -2)
    if kind in ("scroll_p1", "scroll_generic"):
        return (-n, entry.deg_g + 2 * (entry.genus or 0) - 2)
    if kind == "curve":
        return (2 * entry.genus - 2,)
    raise UnknownVarietyError(entry.kind)


def line_bundle_class(entry: VarietyCatalogEntry, coords: tuple[int, ...]) -> ChowClass:
    """First Chern class of the line bundle with the given coordinates."""
    coords = check_coords(entry, coords)
    ring = entry.ring
    gens = ring.gens()
    acc = ring.zero()
    for c, g in zip(coords, gens):
        acc = acc + c * g
    return acc


def canonical_twist_coords(entry: VarietyCatalogEntry, m: int) -> tuple[int, ...]:
    """Coordinates of ``omega_X(m h)``."""
    K = canonical_coords(entry)
    h = twist_coords(entry, tuple([0] * entry.picard_rank()), m)
    return tuple(k + t for k, t in zip(K, h))


def parse_variety(text: str) -> VarietyCatalogEntry:
    """Resolve a short CLI-style variety name to a catalog entry.

    Examples: ``p3``, ``p3:h=2``, ``q4``, ``flag3``, ``triple-p1``,
    ``scroll-p1:1,1,2``, ``scroll:n=3,g=1,deg=4``, ``curve:g=2,deg=4``,
    ``curve:g=2,deg=4,model=generic``, ``fano:g=5``.
    """
    text = text.strip().lower().replace("_", "-")
    head, _, rest = text.partition(":")
    opts: dict[str, str] = {}
    plain: list[str] = []
    for chunk in filter(None, rest.split(",")):
        if "=" in chunk:
            k, _, v = chunk.partition("=")
            opts[k] = v
        else:
            plain.append(chunk)
    if head in ("flag3", "flag"):
        return flag3()
    if head in ("triple-p1", "p1p1p1", "p1xp1xp1"):
        return triple_p1()
    if head.startswith("p") and head[1:].isdigit():
        return projective_space(int(head[1:]), u=int(opts.get("h", 1)))
    if head == "pn" and plain:
        return projective_space(int(plain[0]), u=int(opts.get("h", 1)))
    if head.startswith("q") and head[1:].isdigit():
        return quadric(int(head[1:]), u=int(opts.get("h", 1)))
    if head == "quadric" and plain:
        return quadric(int(plain[0]), u=int(opts.get("h", 1)))
    if head == "scroll-p1":
        degrees = tuple(int(x) for x in plain)
        return scroll_p1(degrees)
    if head == "scroll":
        return scroll_generic(int(opts["n"]), int(opts.get("g", 0)), int(opts["deg"]))
    if head == "curve":
        return curve(int(opts.get("g", 0)), int(opts.get("deg", 1)), opts.get("model", "generic"))
    if head == "fano":
        return prime_fano(int(opts["g"]))
    raise UnknownVarietyError(f"cannot parse variety {text!r}")
