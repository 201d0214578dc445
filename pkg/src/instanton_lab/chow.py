"""Exact graded-ring arithmetic in the Chow rings of the variety catalog.

Each catalog variety gets a finite presentation of (the numerical shadow of)
its Chow ring: degree-one generators, monomial rewrite rules, and a degree
map on the top graded piece.  A :class:`ChowClass` is an integer combination
of normal-form monomials; products are normalized eagerly so classes are
always reduced, and intersection numbers come from :func:`integrate`.

The presentations shipped here are complete rewrite systems: rewriting any
monomial of degree above the variety dimension reaches zero, and all rewrite
orders agree (both facts are exercised by the test suite via
:func:`all_normal_forms`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UnknownVarietyError, VarietyMismatchError

#: Exponent vector over a presentation's generators.
Monomial = tuple[int, ...]

Terms = tuple[tuple[Monomial, int], ...]


def _freeze(terms: Mapping[Monomial, int]) -> Terms:
    return tuple(sorted((m, c) for m, c in terms.items() if c != 0))


@dataclass(frozen=True)
class RewriteRule:
    """A monomial rewrite rule ``lhs -> sum(coeff * monomial)``.

    Both sides are homogeneous of the same degree; the right-hand side is a
    normal-form combination.
    """

    lhs: Monomial
    rhs: Terms

    def divides(self, mono: Monomial) -> bool:
        return all(l <= e for l, e in zip(self.lhs, mono))

    def apply(self, mono: Monomial) -> dict[Monomial, int]:
        quot = tuple(e - l for l, e in zip(self.lhs, mono))
        out: dict[Monomial, int] = {}
        for m, c in self.rhs:
            key = tuple(a + b for a, b in zip(m, quot))
            out[key] = out.get(key, 0) + c
        return out


@dataclass(frozen=True)
class ChowRingPresentation:
    """Presentation of the (numerical) Chow ring of one catalog variety."""

    variety_id: str
    generators: tuple[str, ...]
    relations: tuple[RewriteRule, ...]
    top_degree: int
    degree_map: Terms

    def degree(self, mono: Monomial) -> int:
        return sum(mono)

    def monomial(self, **exponents: int) -> Monomial:
        exps = [0] * len(self.generators)
        for name, e in exponents.items():
            exps[self.generators.index(name)] = e
        return tuple(exps)

    def gen(self, name: str) -> "ChowClass":
        return ChowClass(self.variety_id, ((self.monomial(**{name: 1}), 1),))

    def gens(self) -> tuple["ChowClass", ...]:
        return tuple(self.gen(name) for name in self.generators)

    def one(self) -> "ChowClass":
        return ChowClass(self.variety_id, (((0,) * len(self.generators), 1),))

    def zero(self) -> "ChowClass":
        return ChowClass(self.variety_id, ())

    def from_dict(self, terms: Mapping[Monomial, int]) -> "ChowClass":
        acc: dict[Monomial, int] = {}
        for mono, coeff in terms.items():
            for m, c in self.normalize_monomial(mono).items():
                acc[m] = acc.get(m, 0) + c * coeff
        return ChowClass(self.variety_id, _freeze(acc))

    def is_normal(self, mono: Monomial) -> bool:
        return not any(rule.divides(mono) for rule in self.relations)

    def normalize_monomial(self, mono: Monomial, truncate: bool = True) -> dict[Monomial, int]:
        """Reduce ``mono`` to a combination of normal-form monomials.

        Applies the first applicable rule at each step (a fixed order, so the
        result is deterministic; confluence of the presets is a separate
        tested invariant).  With ``truncate`` the components of degree above
        ``top_degree`` are dropped, which is how every preset behaves anyway.
        """
        pending: dict[Monomial, int] = {mono: 1}
        done: dict[Monomial, int] = {}
        guard = 0
        while pending:
            guard += 1
            if guard > 100_000:
                raise RuntimeError(f"rewrite did not terminate on {self.variety_id}")
            m, c = pending.popitem()
            if c == 0:
                continue
            if truncate and self.degree(m) > self.top_degree:
                continue
            for rule in self.relations:
                if rule.divides(m):
                    for m2, c2 in rule.apply(m).items():
                        pending[m2] = pending.get(m2, 0) + c * c2
                    break
            else:
                done[m] = done.get(m, 0) + c
        return {m: c for m, c in done.items() if c != 0}

    def degree_value(self, mono: Monomial) -> int:
        for m, v in self.degree_map:
            if m == mono:
                return v
        raise KeyError(f"{mono} is not a top-degree normal monomial of {self.variety_id}")


def all_normal_forms(ring: ChowRingPresentation, mono: Monomial) -> set[Terms]:
    """All fully reduced results of ``mono`` over every rewrite order.

    No truncation is performed; a confluent, degree-killing presentation
    returns a one-element set (the empty combination when the degree exceeds
    the top degree).  Used by the invariant tests.
    """
    results: set[Terms] = set()

    def reduce(terms: dict[Monomial, int]) -> None:
        for m in sorted(terms):
            if terms[m] == 0:
                continue
            applicable = [r for r in ring.relations if r.divides(m)]
            if not applicable:
                continue
            for rule in applicable:
                nxt = dict(terms)
                c = nxt.pop(m)
                for m2, c2 in rule.apply(m).items():
                    nxt[m2] = nxt.get(m2, 0) + c * c2
                reduce(nxt)
            return
        results.add(_freeze(terms))

    reduce({mono: 1})
    return results


@dataclass(frozen=True)
class ChowClass:
    """Integer combination of normal-form monomials, graded by degree."""

    variety_id: str
    terms: Terms

    @property
    def ring(self) -> ChowRingPresentation:
        return ring_for(self.variety_id)

    def coefficient(self, mono: Monomial) -> int:
        for m, c in self.terms:
            if m == mono:
                return c
        return 0

    def component(self, r: int) -> "ChowClass":
        ring = self.ring
        return ChowClass(self.variety_id, tuple((m, c) for m, c in self.terms if ring.degree(m) == r))

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self, r: int) -> bool:
        ring = self.ring
        return all(ring.degree(m) == r for m, _ in self.terms)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        acc = {m: c for m, c in self.terms}
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return ChowClass(self.variety_id, _freeze(acc))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.variety_id, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other: "ChowClass | int") -> "ChowClass":
        if isinstance(other, int):
            if other == 0:
                return ChowClass(self.variety_id, ())
            return ChowClass(self.variety_id, tuple((m, c * other) for m, c in self.terms))
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowClass":
        if k < 0:
            raise ValueError("negative powers are not defined in the Chow ring")
        out = self.ring.one()
        for _ in range(k):
            out = multiply(out, self)
        return out

    def _check(self, other: "ChowClass") -> None:
        if self.variety_id != other.variety_id:
            raise VarietyMismatchError(
                f"classes on {self.variety_id!r} and {other.variety_id!r} cannot be combined"
            )

    def to_json(self) -> list[list]:
        return [[list(m), c] for m, c in self.terms]

    @staticmethod
    def from_json(variety_id: str, data: Iterable) -> "ChowClass":
        ring = ring_for(variety_id)
        return ring.from_dict({tuple(m): c for m, c in data})

    def __str__(self) -> str:
        ring = self.ring
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            names = "*".join(
                f"{g}^{e}" if e > 1 else g for g, e in zip(ring.generators, m) if e
            )
            if not names:
                parts.append(str(c))
            elif c == 1:
                parts.append(names)
            elif c == -1:
                parts.append(f"-{names}")
            else:
                parts.append(f"{c}*{names}")
        return " + ".join(parts).replace("+ -", "- ")


def multiply(a: ChowClass, b: ChowClass) -> ChowClass:
    """Product in the Chow ring, in normal form (degrees above n drop to 0)."""
    a._check(b)
    ring = a.ring
    acc: dict[Monomial, int] = {}
    for m1, c1 in a.terms:
        for m2, c2 in b.terms:
            raw = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
            for m, c in ring.normalize_monomial(raw).items():
                acc[m] = acc.get(m, 0) + c1 * c2 * c
    return ChowClass(a.variety_id, _freeze(acc))


def integrate(a: ChowClass) -> int:
    """Degree of the top-dimensional component of ``a``; lower degrees are ignored."""
    ring = a.ring
    total = 0
    for m, c in a.terms:
        if ring.degree(m) == ring.top_degree:
            total += c * ring.degree_value(m)
    return total


# --------------------------------------------------------------------------
# Preset rings
# --------------------------------------------------------------------------

_REGISTRY: dict[str, ChowRingPresentation] = {}


def _register(ring: ChowRingPresentation) -> ChowRingPresentation:
    _REGISTRY[ring.variety_id] = ring
    return ring


def cyclic_numerical_ring(n: int, top_value: int, variety_id: str) -> ChowRingPresentation:
    """``Z[H]/(H^(n+1))`` with ``deg(H^n) = top_value``.

    The shared numerical model for projective spaces, quadrics and other
    cyclic entries: only powers of the ample generator are represented.
    """
    if variety_id in _REGISTRY:
        return _REGISTRY[variety_id]
    return _register(
        ChowRingPresentation(
            variety_id=variety_id,
            generators=("H",),
            relations=(RewriteRule((n + 1,), ()),),
            top_degree=n,
            degree_map=(((n,), top_value),),
        )
    )


def _flag3_ring() -> ChowRingPresentation:
    # Z[h1,h2]/(h1^3, h2^3, h1^2 - h1 h2 + h2^2); normal forms have h1-exponent <= 1.
    return ChowRingPresentation(
        variety_id="flag3",
        generators=("h1", "h2"),
        relations=(
            RewriteRule((3, 0), ()),
            RewriteRule((0, 3), ()),
            RewriteRule((2, 0), (((0, 2), -1), ((1, 1), 1))),
        ),
        top_degree=3,
        degree_map=(((1, 2), 1),),
    )


def _triple_p1_ring() -> ChowRingPresentation:
    return ChowRingPresentation(
        variety_id="triple_p1",
        generators=("h1", "h2", "h3"),
        relations=(
            RewriteRule((2, 0, 0), ()),
            RewriteRule((0, 2, 0), ()),
            RewriteRule((0, 0, 2), ()),
        ),
        top_degree=3,
        degree_map=(((1, 1, 1), 1),),
    )


def _scroll_ring(n: int, deg_g: int) -> ChowRingPresentation:
    # Z[h,f]/(f^2, h^n - deg_g * f h^(n-1)); the intersection numbers are
    # h^n = deg_g, f h^(n-1) = 1, f^2 = 0.
    lhs_h = tuple([n, 0])
    return ChowRingPresentation(
        variety_id=f"scroll({n},{deg_g})",
        generators=("h", "f"),
        relations=(
            RewriteRule((0, 2), ()),
            RewriteRule(lhs_h, (((n - 1, 1), deg_g),)),
        ),
        top_degree=n,
        degree_map=(((n - 1, 1), 1),),
    )


_ID_RE = re.compile(r"^(?P<name>[a-z_0-9]+?)\((?P<args>[-0-9,]+)\)$")


def preset_ring(variety_id: str) -> ChowRingPresentation:
    """Presentation for one of the catalog keys.

    Accepted keys: ``projective_space(n)``, ``quadric(n)`` (alias
    ``quadric_numerical(n)``), ``flag3``, ``triple_p1``, ``scroll(n,deg_g)``,
    ``curve(g)``.  The degree map fixes the polarization degrees
    ``h^n = 1`` on projective space, ``2`` on the quadric, ``6`` on the two
    sextic del Pezzo entries and ``deg_g`` on scrolls.
    """
    if variety_id in _REGISTRY:
        return _REGISTRY[variety_id]
    if variety_id == "flag3":
        return _register(_flag3_ring())
    if variety_id == "triple_p1":
        return _register(_triple_p1_ring())
    m = _ID_RE.match(variety_id)
    if m:
        name = m.group("name")
        args = [int(x) for x in m.group("args").split(",")]
        if name == "projective_space" and len(args) == 1 and args[0] >= 1:
            return cyclic_numerical_ring(args[0], 1, variety_id)
        if name in ("quadric", "quadric_numerical") and len(args) == 1 and args[0] >= 2:
            return cyclic_numerical_ring(args[0], 2, f"quadric({args[0]})")
        if name == "scroll" and len(args) == 2 and args[0] >= 2 and args[1] >= 1:
            return _register(_scroll_ring(args[0], args[1]))
        if name == "curve" and len(args) == 1 and args[0] >= 0:
            return cyclic_numerical_ring(1, 1, variety_id)
    raise UnknownVarietyError(f"unknown variety key {variety_id!r}")


def ring_for(variety_id: str) -> ChowRingPresentation:
    """Resolve a registered ring, building catalog presets on demand."""
    if variety_id in _REGISTRY:
        return _REGISTRY[variety_id]
    m = _ID_RE.match(variety_id)
    if m and m.group("name") == "prime_fano":
        g = int(m.group("args"))
        return cyclic_numerical_ring(3, 2 * g - 2, variety_id)
    return preset_ring(variety_id)
