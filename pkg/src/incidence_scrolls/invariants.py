"""Degree, genus, speciality and directrix data of incidence scrolls.

The degree comes straight from the product of special Schubert cycles.  The
genus is computed by recursively degenerating the configuration: two base
spaces are pushed into a hyperplane, the scroll breaks into two smaller
incidence scrolls sharing kappa generators, and the genera add up as
g = g1 + g2 + kappa - 1.  Every computation records its degeneration tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bases import (
    IncidenceBase,
    canonicalize,
    conditions_count,
    format_base,
    is_nondegenerate,
    join,
    restrict_to_span,
    satisfies_is,
)
from .grassmann import GrassmannSpec, SchubertIndex, intersection_number, product_of_specials

PENCIL_CLASS = SchubertIndex((0, 2))


class UnresolvedDegenerationError(RuntimeError):
    """No admissible pair was found while degenerating a base (never observed)."""


def _require_is(base: IncidenceBase) -> None:
    if not satisfies_is(base):
        raise ValueError(
            f"{format_base(base)} is not an incidence-scroll base: "
            f"conditions={conditions_count(base)}, required {2 * base.ambient - 3}")


def degree(base: IncidenceBase) -> int:
    """Degree of the scroll: coefficient of w(0,2) in the base's cycle product.

    Valid for degenerate configurations as well; the product does not care
    where the scroll actually spans.
    """
    base = canonicalize(base)
    _require_is(base)
    spec = GrassmannSpec(1, base.ambient)
    product = product_of_specials(spec, base.dims)
    return product.coefficient(PENCIL_CLASS)


def kappa(base: IncidenceBase, i: int, j: int) -> int:
    """Number of generators shared by the two components of a join at (i, j).

    A common generator lies in the hyperplane, passes through the P^m cut
    out by the pair, and meets the trace of every other base space; the
    count is the corresponding intersection number one ambient down.
    """
    _require_is(base)
    n = base.ambient
    di, dj = base.dims[i], base.dims[j]
    m = di + dj - n + 1
    if m < 0:
        raise ValueError("pair admits no hyperplane specialization (m < 0)")
    others = [d for k, d in enumerate(base.dims) if k not in (i, j)]
    if any(d == 0 for d in others):
        raise ValueError("cannot compute kappa with a point outside the pair")
    value = intersection_number(GrassmannSpec(1, n - 1),
                                [m] + [d - 1 for d in others])
    assert value >= 1, f"kappa must be positive, got {value}"
    return value


@dataclass(frozen=True)
class DegenerationNode:
    """One step of the genus recursion, with exact degree/genus bookkeeping."""

    base: IncidenceBase
    action: str  # "leaf" | "restrict" | "join"
    degree: int
    genus: int
    pair: Optional[tuple[int, int]] = None  # dimensions of the joined pair
    m: Optional[int] = None
    kappa: Optional[int] = None
    children: tuple["DegenerationNode", ...] = ()

    def to_dict(self) -> dict:
        out = {
            "base": format_base(self.base),
            "action": self.action,
            "degree": self.degree,
            "genus": self.genus,
        }
        if self.action == "join":
            out["pair"] = list(self.pair)
            out["m"] = self.m
            out["kappa"] = self.kappa
        if self.children:
            out["children"] = [child.to_dict() for child in self.children]
        return out


_MEMO: dict[tuple[int, tuple[int, ...]], DegenerationNode] = {}


def clear_memo() -> None:
    _MEMO.clear()


def _choose_pair(base: IncidenceBase) -> tuple[int, int]:
    """Deterministic join pair: minimal m, then smallest dimension pair."""
    n = base.ambient
    best = None
    for i in range(len(base.dims)):
        for j in range(i + 1, len(base.dims)):
            m = base.dims[i] + base.dims[j] - n + 1
            if m < 0:
                continue
            cand = (m, base.dims[i], base.dims[j])
            if best is None or cand < best[0]:
                best = (cand, (i, j))
    if best is None:
        raise UnresolvedDegenerationError(
            f"no admissible join pair for {format_base(base)}")
    return best[1]


def degeneration_tree(base: IncidenceBase,
                      first_pair: tuple[int, int] | None = None) -> DegenerationNode:
    """Witness tree of the genus recursion.

    With first_pair the root join is forced to those base-space indices;
    the subtrees still follow the deterministic rule.  Results of the
    deterministic path are memoized on the canonical base key.
    """
    base = canonicalize(base)
    _require_is(base)
    key = (base.ambient, base.dims)
    if first_pair is None and key in _MEMO:
        return _MEMO[key]

    if base.ambient <= 2 or 0 in base.dims:
        # a point in the base (or a planar ambient) sweeps a plane pencil
        node = DegenerationNode(base=base, action="leaf", degree=1, genus=0)
    elif not is_nondegenerate(base):
        child = degeneration_tree(restrict_to_span(base))
        node = DegenerationNode(base=base, action="restrict",
                                degree=child.degree, genus=child.genus,
                                children=(child,))
    else:
        i, j = first_pair if first_pair is not None else _choose_pair(base)
        di, dj = base.dims[i], base.dims[j]
        result = join(base, i, j)
        shared = kappa(base, i, j)
        if result.m == 0:
            assert shared == 1, f"m=0 join must share one generator, got {shared}"
        dot = degeneration_tree(result.dot)
        ddot = degeneration_tree(result.ddot)
        node = DegenerationNode(base=base, action="join",
                                degree=dot.degree + ddot.degree,
                                genus=dot.genus + ddot.genus + shared - 1,
                                pair=(di, dj), m=result.m, kappa=shared,
                                children=(dot, ddot))

    if first_pair is None:
        _MEMO[key] = node
    return node


def genus(base: IncidenceBase) -> tuple[int, DegenerationNode]:
    """Genus of the scroll together with its degeneration witness."""
    node = degeneration_tree(base)
    return node.genus, node


def directrix_degree(base: IncidenceBase, which: int) -> int:
    """Degree of the curve the scroll cuts on base space number `which`.

    Lower the chosen space's special cycle by one and intersect: the count
    of generators meeting a generic hyperplane trace of that space.
    """
    _require_is(base)
    a = base.dims[which]
    if a == 0:
        raise ValueError("a point carries no directrix curve")
    hs = list(base.dims)
    hs[which] = a - 1
    return intersection_number(GrassmannSpec(1, base.ambient), hs)


def speciality(n: int, d: int, g: int) -> int:
    """Speciality index h1 = n - d + 2g - 1 of a linearly normal scroll in P^n."""
    h1 = n - d + 2 * g - 1
    if h1 < 0:
        raise ValueError(
            f"negative speciality h1={h1} for (n={n}, d={d}, g={g}); "
            f"scroll cannot be linearly normal")
    return h1


@dataclass(frozen=True)
class ScrollReport:
    """Full classification record of the incidence scroll of one base."""

    base: IncidenceBase
    span: int
    degree: int
    genus: int
    h1: int
    special: bool
    directrix: tuple[tuple[int, int, int], ...]  # (space_dim, curve_degree, curve_genus)
    tree: DegenerationNode = field(compare=False, repr=False, default=None)

    def to_dict(self, include_tree: bool = False) -> dict:
        out = {
            "ambient": self.base.ambient,
            "dims": list(self.base.dims),
            "span": self.span,
            "degree": self.degree,
            "genus": self.genus,
            "h1": self.h1,
            "special": self.special,
            "directrix": [
                {"space_dim": a, "curve_degree": d, "curve_genus": g}
                for a, d, g in self.directrix
            ],
        }
        if include_tree:
            out["tree"] = self.tree.to_dict()
        return out


def classify(base: IncidenceBase) -> ScrollReport:
    """Compute degree, genus, speciality and directrix table of a base."""
    base = canonicalize(base)
    _require_is(base)
    node = degeneration_tree(base)
    d = degree(base)
    assert d == node.degree, (
        f"ring degree {d} disagrees with degeneration bookkeeping {node.degree} "
        f"for {format_base(base)}")
    g = node.genus

    effective = restrict_to_span(base)
    span = effective.ambient
    h1 = speciality(span, d, g)

    directrix = tuple(
        (a, directrix_degree(effective, effective.dims.index(a)), g)
        for a in sorted(set(effective.dims))
        if a >= 1
    )
    return ScrollReport(base=base, span=span, degree=d, genus=g, h1=h1,
                        special=h1 > 0, directrix=directrix, tree=node)
