"""Open book presentation: the page, a Dehn-twist word, and surgery twists.

Each rectangle curve contributes one positive twist, in construction order.
Contact (+1)-surgery on a link component appends a negative twist about
it and (-1)-surgery a positive one.  The page never changes, so its genus
bounds the support genus of the surgered contact structure.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from .region import RegionDecomposition
from .ribbon import (
    Fatgraph,
    PageStats,
    SkeletonCycle,
    kappa,
    page_stats,
    rectangle_cycle,
    torus_fatgraph,
)
from .sbd import DiagramError, SquareBridgeDiagram, components

__all__ = [
    "Twist",
    "TwistWord",
    "SurgerySpec",
    "OpenBookPresentation",
    "TorusComparison",
    "UnknownComponent",
    "SurgeryAlreadyApplied",
    "monodromy",
    "surgery_spec",
    "presentation",
    "apply_surgery",
    "compare_torus",
    "torus_genus",
    "sg_bound",
]


class UnknownComponent(DiagramError):
    condition = "surgery"


class SurgeryAlreadyApplied(ValueError):
    pass


@dataclass(frozen=True)
class Twist:
    curve: SkeletonCycle
    exponent: int

    def as_dict(self) -> dict:
        out = self.curve.as_dict()
        out["exponent"] = self.exponent
        return out


TwistWord = tuple[Twist, ...]


@dataclass(frozen=True)
class SurgerySpec:
    """Coefficients in ``{+1, -1}`` keyed by component id."""

    coefficients: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> SurgerySpec:
        for cid, c in mapping.items():
            if c not in (1, -1):
                raise ValueError(f"surgery coefficient on component {cid} must be +1 or -1, got {c}")
        return cls(tuple(sorted(mapping.items())))

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coefficients)


@dataclass(frozen=True)
class OpenBookPresentation:
    page: PageStats
    fatgraph: Fatgraph
    word: TwistWord
    surgered: tuple[int, ...] = ()

    @property
    def sg_upper_bound(self) -> int:
        return self.page.genus


@dataclass(frozen=True)
class TorusComparison:
    p: int
    q: int
    kappa: int
    genus: int
    torus_genus: int
    strict: bool
    # pq - kappa counts the bands missing from the torus page; pq - kappa - p >= 0
    # is the inequality behind strictness
    missing_bands: int
    slack: int

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "kappa": self.kappa,
            "genus": self.genus,
            "torus_genus": self.torus_genus,
            "strict": self.strict,
            "pq_minus_kappa": self.missing_bands,
            "pq_minus_kappa_minus_p": self.slack,
        }


def monodromy(decomp: RegionDecomposition, fg: Fatgraph) -> TwistWord:
    """One positive twist about each rectangle curve, in order."""
    return tuple(Twist(rectangle_cycle(fg, r), 1) for r in decomp.rectangles)


def surgery_spec(d: SquareBridgeDiagram) -> SurgerySpec:
    """The surgery lines of ``d``, checked against its components."""
    n = len(components(d))
    for cid, _ in d.surgery:
        if not 1 <= cid <= n:
            raise UnknownComponent(
                f"surgery on component {cid}, but the diagram has {n} component(s)"
            )
    return SurgerySpec.of(dict(d.surgery))


def presentation(
    decomp: RegionDecomposition, fg: Fatgraph, d: SquareBridgeDiagram | None = None
) -> OpenBookPresentation:
    stats = page_stats(fg, None if d is None else kappa(d))
    return OpenBookPresentation(stats, fg, monodromy(decomp, fg))


def apply_surgery(
    ob: OpenBookPresentation, s: SurgerySpec, cycles: list[SkeletonCycle]
) -> OpenBookPresentation:
    """Append the twist for each surgered component, in component order.

    ``cycles[k]`` must be the page curve of component ``k + 1``.
    """
    extra = []
    for cid, coef in s.coefficients:
        if not 1 <= cid <= len(cycles):
            raise UnknownComponent(
                f"surgery on component {cid}, but {len(cycles)} component(s) are on the page"
            )
        if cid in ob.surgered:
            raise SurgeryAlreadyApplied(f"component {cid} has already been surgered")
        extra.append(Twist(cycles[cid - 1], -coef))
    surgered = tuple(sorted(ob.surgered + tuple(c for c, _ in s.coefficients)))
    return replace(ob, word=ob.word + tuple(extra), surgered=surgered)


def torus_genus(p: int, q: int) -> int:
    """Genus of the torus page ``F_{p,q}``, read off its fatgraph."""
    return page_stats(torus_fatgraph(p, q)).genus


def compare_torus(d: SquareBridgeDiagram, stats: PageStats) -> TorusComparison:
    """Our page genus against the torus-link page for the same grid size."""
    p, q = d.p, d.q
    tg = torus_genus(p, q)
    k = kappa(d)
    strict = stats.genus < tg
    if p > 3 and q > 3:
        assert strict, (
            f"page genus {stats.genus} is not below the torus genus {tg} for p={p}, q={q}"
        )
    return TorusComparison(p, q, k, stats.genus, tg, strict, p * q - k, p * q - k - p)


def sg_bound(ob: OpenBookPresentation) -> int:
    """Upper bound for the support genus of the (surgered) contact structure."""
    return ob.sg_upper_bound

