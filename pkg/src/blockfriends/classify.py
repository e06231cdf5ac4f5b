"""Power-set classification against a parent design.

Every n-subset of the ground set is mapped to its intersection profile
against the parent; subsets sharing a profile form a class.  Ranging n over
0..v partitions the whole power set.  Levels above v/2 are derived from
their complements (a subset and its complement have reversed profiles),
which halves the sweep; a cross-check flag recomputes them directly.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .blocks import full_mask, labels_from_mask
from .designs import BlockDesign, DesignError, DesignParams, detect_design
from .friendship import are_friends
from .profiles import IntersectionProfile

SWEEP_LIMIT = 24


@dataclass(frozen=True)
class SubsetClass:
    """All n-subsets sharing one intersection profile against the parent."""

    v: int
    n: int
    signature: IntersectionProfile
    size: int
    members: tuple[int, ...] | None  # lexicographic by label tuple; None if dropped
    params: DesignParams | None
    witness: str

    def to_family(self, name: str = "") -> BlockDesign:
        if self.members is None:
            raise DesignError("class members were not retained")
        return BlockDesign(self.v, self.members, self.params, name)


@dataclass(frozen=True)
class Subdivision:
    parent: BlockDesign
    levels: tuple[tuple[SubsetClass, ...], ...]  # index = subset size n

    @property
    def v(self) -> int:
        return self.parent.v

    def all_classes(self) -> list[tuple[int, int, SubsetClass]]:
        return [
            (n, j, cls)
            for n, level in enumerate(self.levels)
            for j, cls in enumerate(level)
        ]


def _level_masks(v: int, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros(1, dtype=np.uint64)
    flat = np.fromiter(
        (i for c in combinations(range(v), n) for i in c),
        dtype=np.int64,
        count=comb(v, n) * n,
    ).reshape(-1, n)
    return np.bitwise_or.reduce(
        np.left_shift(np.uint64(1), flat.astype(np.uint64)), axis=1
    )


def _signature_of(row: np.ndarray, k: int, n: int) -> IntersectionProfile:
    z = np.bincount(row, minlength=k + 1)
    return IntersectionProfile(tuple(int(x) for x in z[: k + 1]), n)


def _annotate(v: int, members: tuple[int, ...]) -> tuple[DesignParams | None, str]:
    if len(members) == 1 and members[0] == 0:
        return None, "the empty set is not a block of any design"
    return detect_design(members, v)


def classify_level(
    parent: BlockDesign, n: int, keep_members: bool = True
) -> tuple[SubsetClass, ...]:
    """Group all n-subsets of the ground set by profile against the parent.

    Classes come back sorted by signature; members within a class keep the
    lexicographic enumeration order.
    """
    v = parent.v
    if not 0 <= n <= v:
        raise DesignError(f"subset size {n} outside 0..{v}")
    k = parent.k
    subs = _level_masks(v, n)
    blocks = np.array(parent.blocks, dtype=np.uint64)
    inter = np.bitwise_count(subs[:, None] & blocks[None, :]).astype(np.uint8)
    rows = np.sort(inter, axis=1)
    uniq, inverse, counts = np.unique(
        rows, axis=0, return_inverse=True, return_counts=True
    )
    inverse = inverse.reshape(-1)
    classes = []
    for g in range(len(uniq)):
        sig = _signature_of(uniq[g], k, n)
        if keep_members:
            members = tuple(int(m) for m in subs[inverse == g])
            params, witness = _annotate(v, members)
        else:
            members, (params, witness) = None, (None, "members not retained")
        classes.append(
            SubsetClass(v, n, sig, int(counts[g]), members, params, witness)
        )
    return tuple(sorted(classes, key=lambda c: c.signature.z))


def _derive_complement_level(
    source: tuple[SubsetClass, ...], v: int, k: int, keep_members: bool
) -> tuple[SubsetClass, ...]:
    fm = full_mask(v)
    derived = []
    for cls in source:
        sig = IntersectionProfile(tuple(reversed(cls.signature.z)), v - cls.n)
        if keep_members and cls.members is not None:
            members = tuple(
                sorted((fm ^ m for m in cls.members), key=labels_from_mask)
            )
            params, witness = _annotate(v, members)
        else:
            members = None
            if cls.params is not None:
                p = cls.params
                params = DesignParams(v, p.b, p.b - p.r, v - p.k, p.b - 2 * p.r + p.lam)
                witness = ""
            elif cls.witness == "members not retained":
                params, witness = None, cls.witness
            elif cls.n == 0:
                params, witness = DesignParams(v, 1, 1, v, 1), ""
            else:
                params, witness = None, "complement of a non-design class"
        derived.append(
            SubsetClass(v, v - cls.n, sig, cls.size, members, params, witness)
        )
    return tuple(sorted(derived, key=lambda c: c.signature.z))


def classify_all(
    parent: BlockDesign,
    sweep_limit: int = SWEEP_LIMIT,
    threads: int | None = None,
    use_complement: bool = True,
    cross_check: bool = False,
    keep_members: bool = True,
) -> Subdivision:
    """Classify every level 0..v.  Results never depend on the thread count."""
    v = parent.v
    if v > sweep_limit:
        raise DesignError(
            f"v={v} exceeds sweep limit {sweep_limit}; classify levels one at a time"
        )
    direct = range(0, v // 2 + 1) if use_complement else range(0, v + 1)
    if threads is None:
        threads = os.cpu_count() or 1
    levels: dict[int, tuple[SubsetClass, ...]] = {}
    if threads > 1 and len(direct) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {
                n: pool.submit(classify_level, parent, n, keep_members) for n in direct
            }
            for n, fut in futures.items():
                levels[n] = fut.result()
    else:
        for n in direct:
            levels[n] = classify_level(parent, n, keep_members)
    if use_complement:
        for n in range(v // 2 + 1, v + 1):
            levels[n] = _derive_complement_level(levels[v - n], v, parent.k, keep_members)
            if cross_check:
                recomputed = classify_level(parent, n, keep_members)
                if not _levels_equal(levels[n], recomputed):
                    raise AssertionError(
                        f"complement-derived level {n} disagrees with direct sweep"
                    )
    return Subdivision(parent, tuple(levels[n] for n in range(v + 1)))


def _levels_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    for ca, cb in zip(a, b):
        if (ca.signature, ca.size, ca.params) != (cb.signature, cb.size, cb.params):
            return False
        if ca.members is not None and cb.members is not None:
            if sorted(ca.members) != sorted(cb.members):
                return False
    return True


@dataclass(frozen=True)
class SubdivisionReport:
    """Design and friendship verdicts over every class of a subdivision."""

    subdivision: Subdivision
    class_keys: tuple[tuple[int, int], ...]  # (n, j) in flat order
    is_design: tuple[bool, ...]  # degenerate levels 0 and v count by convention
    self_friend: tuple[bool, ...]
    friends_matrix: tuple[tuple[bool, ...], ...]
    level_friendly: tuple[bool, ...]
    family_friendly: bool
    alpha_ok: bool
    conjecture: bool

    def key_index(self, n: int, j: int) -> int:
        return self.class_keys.index((n, j))


def analyze(sub: Subdivision, threads: int | None = None) -> SubdivisionReport:
    """Check which classes are designs and whether they form a friendly family.

    Non-design classes still take part in the friendship sweep as raw
    families.  The headline verdict is true when every class is a design
    (degenerate levels by convention) and all distinct pairs are friends.
    """
    flat = sub.all_classes()
    v = sub.v
    fams = []
    keys = []
    designs_flags = []
    for n, j, cls in flat:
        if cls.members is None:
            raise DesignError("analysis needs retained class members")
        fams.append(cls.to_family(name=f"class-{n}-{j}"))
        keys.append((n, j))
        designs_flags.append(cls.params is not None or n == 0 or n == v)

    m = len(fams)
    matrix = [[True] * m for _ in range(m)]

    def pair(i: int, j: int) -> tuple[int, int, bool]:
        return i, j, are_friends(fams[i], fams[j]).friends

    tasks = [(i, j) for i in range(m) for j in range(i, m)]
    if threads is None:
        threads = os.cpu_count() or 1
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda t: pair(*t), tasks))
    else:
        results = [pair(i, j) for i, j in tasks]
    for i, j, ok in results:
        matrix[i][j] = matrix[j][i] = ok

    self_friend = tuple(matrix[i][i] for i in range(m))
    level_friendly = []
    for n in range(v + 1):
        idx = [t for t, (nn, _) in enumerate(keys) if nn == n]
        level_friendly.append(
            all(matrix[a][b] for x, a in enumerate(idx) for b in idx[x + 1 :])
        )
    family_friendly = all(
        matrix[i][j] for i in range(m) for j in range(i + 1, m)
    )
    seen: set[int] = set()
    duplicated = False
    for fam in fams:
        for blk in fam.blocks:
            if blk in seen:
                duplicated = True
            seen.add(blk)
    alpha_ok = not duplicated and len(seen) == 1 << v
    conjecture = all(designs_flags) and family_friendly
    return SubdivisionReport(
        sub,
        tuple(keys),
        tuple(designs_flags),
        self_friend,
        tuple(tuple(row) for row in matrix),
        tuple(level_friendly),
        family_friendly,
        alpha_ok,
        conjecture,
    )


def theorem_k3_classes(
    parent: BlockDesign,
) -> tuple[tuple[SubsetClass, DesignParams], tuple[SubsetClass, DesignParams]]:
    """Closed-form level-3 classes for a parent with block size 3.

    The triples split into the parent's own blocks and everything else; the
    second class is a design with b' = C(v,3)-b, r' = C(v-1,2)-r, and
    lambda' = v-2-lambda.  Verified against the exhaustive sweep before
    returning.
    """
    p = parent.params
    if p is None or p.k != 3:
        raise DesignError("needs a validated parent with block size 3")
    v = p.v
    predicted2 = DesignParams(
        v, comb(v, 3) - p.b, comb(v - 1, 2) - p.r, 3, v - 2 - p.lam
    )
    classes = classify_level(parent, 3)
    if len(classes) != 2:
        raise AssertionError(f"expected 2 classes at level 3, found {len(classes)}")
    block_set = frozenset(parent.blocks)
    if frozenset(classes[0].members) == block_set:
        c1, c2 = classes
    elif frozenset(classes[1].members) == block_set:
        c2, c1 = classes
    else:
        raise AssertionError("neither level-3 class matches the parent blocks")
    if c1.params != p or c2.params != predicted2:
        raise AssertionError(
            f"level-3 params {c1.params}, {c2.params} != predicted {p}, {predicted2}"
        )
    if not are_friends(parent, c2.to_family("non-blocks-3")).friends:
        raise AssertionError("non-block triples are not friends with the parent")
    return (c1, p), (c2, predicted2)


def theorem_k4_classes(
    parent: BlockDesign,
) -> tuple[tuple[SubsetClass, DesignParams], tuple[SubsetClass, DesignParams]]:
    """Closed-form level-4 classes for a parent with block size 3, lambda 1.

    Quadruples containing a parent block form one class (b(v-3) of them);
    the rest form the other.  Checks the predicted parameters, friendship
    with the parent, and the anchor entries z_3 = v-3 and z_3 = 1 of the
    two cross profiles.
    """
    p = parent.params
    if p is None or p.k != 3 or p.lam != 1:
        raise DesignError("needs a validated parent with block size 3 and lambda 1")
    v = p.v
    extensions = {
        blk | (1 << x)
        for blk in parent.blocks
        for x in range(v)
        if not (blk >> x) & 1
    }
    if len(extensions) != p.b * (v - 3):
        raise AssertionError("block extensions are not all distinct")
    r1 = p.r * (v - 3) + (p.b - p.r)
    lam1 = v - 3 + 2 * (p.r - 1)
    predicted1 = DesignParams(v, p.b * (v - 3), r1, 4, lam1)
    predicted2 = DesignParams(
        v, comb(v, 4) - predicted1.b, comb(v - 1, 3) - r1, 4, comb(v - 2, 2) - lam1
    )
    classes = classify_level(parent, 4)
    if len(classes) != 2:
        raise AssertionError(f"expected 2 classes at level 4, found {len(classes)}")
    if frozenset(classes[0].members) == extensions:
        c1, c2 = classes
    elif frozenset(classes[1].members) == extensions:
        c2, c1 = classes
    else:
        raise AssertionError("neither level-4 class matches the block extensions")
    if c1.params != predicted1 or c2.params != predicted2:
        raise AssertionError(
            f"level-4 params {c1.params}, {c2.params} != predicted "
            f"{predicted1}, {predicted2}"
        )
    v1 = are_friends(c1.to_family("contains-a-block-4"), parent)
    v2 = are_friends(c2.to_family("avoids-blocks-4"), parent)
    if not (v1.friends and v2.friends):
        raise AssertionError("level-4 classes are not friends with the parent")
    if v1.profile_1_2.z[3] != v - 3 or v1.profile_2_1.z[3] != 1:
        raise AssertionError("anchor entries of the cross profiles are off")
    return (c1, predicted1), (c2, predicted2)
