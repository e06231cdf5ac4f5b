"""The friendship relation between block designs.

Two designs on the same ground set are friends when the profile of each
against a single block of the other does not depend on which block was
chosen.  The check is symmetric and O(b1*b2) popcounts; it is run on a
numpy intersection-size matrix so that all-pairs sweeps over large
families stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .designs import BlockDesign, DesignError, full_design
from .profiles import (
    IntersectionProfile,
    self_friend_case,
    theoretical_self_profile,
)


class ProfileMismatch(NamedTuple):
    """Two probe blocks of the partner design that give different profiles.

    side is 1 or 2: profiles of that design differ when probed by blocks
    i and j of the other design.
    """

    side: int
    i: int
    j: int


@dataclass(frozen=True)
class FriendshipVerdict:
    friends: bool
    profile_1_2: IntersectionProfile | None
    profile_2_1: IntersectionProfile | None
    witness: ProfileMismatch | None
    inputs_are_designs: tuple[bool, bool]
    theorem_case: str | None = None


def _intersection_matrix(d1: BlockDesign, d2: BlockDesign) -> np.ndarray:
    a = np.array(d1.blocks, dtype=np.uint64)
    b = np.array(d2.blocks, dtype=np.uint64)
    return np.bitwise_count(a[:, None] & b[None, :]).astype(np.uint8)


def _histogram(column: np.ndarray, k: int, m: int) -> IntersectionProfile:
    z = np.bincount(column, minlength=k + 1)
    return IntersectionProfile(tuple(int(x) for x in z[: k + 1]), m)


def _first_unequal(sorted_axis: np.ndarray) -> int:
    diff = (sorted_axis != sorted_axis[:, :1]).any(axis=0)
    return int(np.flatnonzero(diff)[0])


def are_friends(d1: BlockDesign, d2: BlockDesign) -> FriendshipVerdict:
    """Decide friendship; d1 and d2 may be the same design.

    On success the two common profiles are returned.  On failure the witness
    names a pair of probe blocks whose profiles differ and which side failed.
    Raw non-design families are accepted and flagged via inputs_are_designs.
    """
    if d1.v != d2.v:
        raise DesignError(f"ground sets differ: {d1.v} vs {d2.v}")
    flags = (d1.counts_as_design, d2.counts_as_design)
    inter = _intersection_matrix(d1, d2)
    cols = np.sort(inter, axis=0)
    if not bool((cols == cols[:, :1]).all()):
        j = _first_unequal(cols)
        return FriendshipVerdict(False, None, None, ProfileMismatch(1, 0, j), flags)
    rows = np.sort(inter.T, axis=0)
    if not bool((rows == rows[:, :1]).all()):
        i = _first_unequal(rows)
        return FriendshipVerdict(False, None, None, ProfileMismatch(2, 0, i), flags)
    p12 = _histogram(inter[:, 0], d1.k, d2.k)
    p21 = _histogram(inter[0, :], d2.k, d1.k)
    return FriendshipVerdict(True, p12, p21, None, flags)


def check_count_identity(verdict: FriendshipVerdict, b1: int, b2: int) -> bool:
    """Verify b2 * phi(D1,D2) = b1 * phi(D2,D1), aligned by intersection size."""
    if not verdict.friends:
        raise DesignError("count identity only applies to friends")
    z12 = verdict.profile_1_2.z
    z21 = verdict.profile_2_1.z
    n = max(len(z12), len(z21))
    ext12 = z12 + (0,) * (n - len(z12))
    ext21 = z21 + (0,) * (n - len(z21))
    return all(b2 * a == b1 * c for a, c in zip(ext12, ext21))


def complement_transfer(p: IntersectionProfile, k_d: int, v: int) -> IntersectionProfile:
    """Profile against the complemented partner: reverse the vector.

    A block of size k_d meets the complement of S in exactly k_d - |block & S|
    points, so the transfer is exact for every probe size.
    """
    if len(p.z) != k_d + 1:
        raise DesignError(f"profile length {len(p.z)} does not match block size {k_d}")
    return IntersectionProfile(tuple(reversed(p.z)), v - p.m)


def is_self_friend(d: BlockDesign, verify: bool = False) -> FriendshipVerdict:
    """Decide whether a design is friends with itself.

    When the parameters fall under a known structural case the forced profile
    is used directly; `verify=True` also runs the brute-force sweep and checks
    that the two agree.  The applicable case, if any, is recorded on the
    verdict even when brute force was used.
    """
    case = self_friend_case(d.params) if d.params else None
    if case is not None and not verify:
        p = theoretical_self_profile(d.params)
        flags = (d.counts_as_design, d.counts_as_design)
        return FriendshipVerdict(True, p, p, None, flags, theorem_case=case)
    verdict = are_friends(d, d)
    if case is not None:
        predicted = theoretical_self_profile(d.params)
        if not verdict.friends or verdict.profile_1_2 != predicted:
            raise AssertionError(
                f"structural case {case} predicts {predicted}, sweep found "
                f"{verdict.profile_1_2}"
            )
    return FriendshipVerdict(
        verdict.friends,
        verdict.profile_1_2,
        verdict.profile_2_1,
        verdict.witness,
        verdict.inputs_are_designs,
        theorem_case=case,
    )


def transitivity_counterexample(d1: BlockDesign, d2: BlockDesign) -> bool:
    """True iff d1 and d2 are both friends with the (v-1)-subsets design but
    not with each other, exhibiting non-transitivity."""
    if d1.v != d2.v:
        raise DesignError(f"ground sets differ: {d1.v} vs {d2.v}")
    v = d1.v
    if d1.k >= v - 1 or d2.k >= v - 1:
        raise DesignError("both designs need block size below v-1")
    penultimate = full_design(v, v - 1)
    f1 = are_friends(d1, penultimate)
    f2 = are_friends(d2, penultimate)
    f12 = are_friends(d1, d2)
    return f1.friends and f2.friends and not f12.friends
