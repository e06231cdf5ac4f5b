"""Bundled reference designs and the ten-member power-set family on 7 points."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .designs import BlockDesign, complement_design, design, full_design
from .families import FriendlyFamily, build_family

FANO_BLOCKS = [
    (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7), (1, 2, 4),
]

NINE_POINT_BLOCKS = [
    (1, 2, 4, 5, 7, 8), (2, 3, 5, 6, 8, 9), (1, 3, 4, 6, 7, 9),
    (1, 3, 5, 6, 7, 8), (1, 2, 4, 6, 8, 9), (2, 3, 4, 5, 7, 9),
    (1, 2, 5, 6, 7, 9), (1, 3, 4, 5, 8, 9), (2, 3, 4, 6, 7, 8),
    (4, 5, 6, 7, 8, 9), (1, 2, 3, 4, 5, 6), (1, 2, 3, 7, 8, 9),
]

STS13_SHARED_BLOCKS = [
    (1, 2, 3), (1, 4, 5), (1, 6, 7), (1, 8, 9), (1, 10, 11), (1, 12, 13),
    (2, 4, 6), (2, 5, 7), (2, 8, 10), (2, 9, 12), (2, 11, 13),
    (4, 3, 8), (4, 7, 9), (4, 10, 13), (4, 11, 12),
    (7, 3, 11), (7, 8, 13), (7, 10, 12),
    (8, 5, 11), (8, 6, 12), (6, 9, 11), (3, 5, 12),
]
STS13_S1_EXTRA = [(3, 6, 10), (3, 9, 13), (5, 6, 13), (5, 9, 10)]
STS13_S2_EXTRA = [(3, 6, 13), (3, 9, 10), (5, 6, 10), (5, 9, 13)]


def fano() -> BlockDesign:
    return design(7, FANO_BLOCKS, name="fano")


def nine_point_design() -> BlockDesign:
    return design(9, NINE_POINT_BLOCKS, name="design_9_12_8_6_5")


def sts13_s1() -> BlockDesign:
    return design(13, STS13_SHARED_BLOCKS + STS13_S1_EXTRA, name="sts13_s1")


def sts13_s2() -> BlockDesign:
    return design(13, STS13_SHARED_BLOCKS + STS13_S2_EXTRA, name="sts13_s2")


def non_fano_triples() -> BlockDesign:
    """Every 3-subset of {1..7} that is not a line of the Fano plane."""
    lines = {frozenset(b) for b in FANO_BLOCKS}
    rest = [t for t in combinations(range(1, 8), 3) if frozenset(t) not in lines]
    return design(7, rest, name="non-fano-triples")


def fano_complement() -> BlockDesign:
    """Complements of the Fano lines: 7 blocks of size 4."""
    return complement_design(fano(), name="fano-complement")


def non_fano_quads() -> BlockDesign:
    """Every 4-subset of {1..7} that is not the complement of a Fano line."""
    return complement_design(non_fano_triples(), name="non-fano-quads")


def fano_family_members() -> tuple[BlockDesign, ...]:
    """The ten designs that partition the power set of {1..7} by profile
    against the Fano plane: full designs of sizes 0,1,2,5,6,7 plus the four
    Fano-derived classes at sizes 3 and 4."""
    return (
        full_design(7, 0),
        full_design(7, 1),
        full_design(7, 2),
        fano(),
        non_fano_triples(),
        fano_complement(),
        non_fano_quads(),
        full_design(7, 5),
        full_design(7, 6),
        full_design(7, 7),
    )


def fano_family() -> FriendlyFamily:
    return build_family(fano_family_members())


@dataclass(frozen=True)
class CatalogEntry:
    """Either a single design or a whole family, with a short origin note."""

    name: str
    design: BlockDesign | None
    members: tuple[BlockDesign, ...] | None
    provenance: str


def catalog() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            "fano", fano(), None,
            "projective plane of order 2 on points 1..7, fixed block labeling",
        ),
        CatalogEntry(
            "design_9_12_8_6_5", nine_point_design(), None,
            "2-design with parameters (9,12,8,6,5) from the classical tables",
        ),
        CatalogEntry(
            "sts13_s1", sts13_s1(), None,
            "Steiner triple system on 13 points; shares 22 blocks with sts13_s2",
        ),
        CatalogEntry(
            "sts13_s2", sts13_s2(), None,
            "Steiner triple system on 13 points; shares 22 blocks with sts13_s1",
        ),
        CatalogEntry(
            "fano_family", None, fano_family_members(),
            "ten pairwise-friend designs partitioning the power set of {1..7}",
        ),
    ]


def catalog_design(name: str) -> BlockDesign:
    for entry in catalog():
        if entry.name == name and entry.design is not None:
            return entry.design
    raise KeyError(f"no single-design catalog entry named {name!r}")
