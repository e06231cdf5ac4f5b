from math import comb

import pytest

from blockfriends import (
    DesignError,
    DesignParams,
    analyze,
    are_friends,
    classify_all,
    classify_level,
    fano,
    fano_family_members,
    full_design,
    nine_point_design,
    non_fano_triples,
    prime_field,
    projective_plane,
    sts13_s1,
    sts13_s2,
    theorem_k3_classes,
    theorem_k4_classes,
)
from oracle_util import brute_classify, labels


def sizes(classes):
    return {c.signature.display: c.size for c in classes}


S1_LEVELS = {
    3: {(10, 15, 0, 1): 26, (11, 12, 3, 0): 260},
    4: {(7, 15, 3, 1): 260, (8, 12, 6, 0): 455},
    5: {(5, 13, 7, 1): 780, (4, 16, 4, 2): 195, (6, 10, 10, 0): 312},
    6: {(2, 15, 6, 3): 208, (1, 18, 3, 4): 13, (4, 9, 12, 1): 468,
        (3, 12, 9, 2): 988, (5, 6, 15, 0): 39},
}
S2_LEVEL6 = {(2, 15, 6, 3): 228, (1, 18, 3, 4): 8, (4, 9, 12, 1): 488,
             (3, 12, 9, 2): 958, (5, 6, 15, 0): 34}


def test_sts13_levels():
    s1 = sts13_s1()
    for n, want in S1_LEVELS.items():
        assert sizes(classify_level(s1, n)) == want
    assert sizes(classify_level(sts13_s2(), 6)) == S2_LEVEL6
    for n in (3, 4, 5):
        assert sizes(classify_level(sts13_s2(), n)) == S1_LEVELS[n]


def test_level_zero_and_top():
    s1 = sts13_s1()
    lv0 = classify_level(s1, 0)
    assert len(lv0) == 1 and lv0[0].members == (0,) and lv0[0].signature.z[0] == 26
    lv13 = classify_level(s1, 13)
    assert len(lv13) == 1 and lv13[0].signature.z[3] == 26
    assert lv13[0].params == DesignParams(13, 1, 1, 13, 1)


def test_classes_match_oracle_at_level_4():
    s1 = sts13_s1()
    got = {c.signature.z: sorted(c.to_family().block_labels())
           for c in classify_level(s1, 4)}
    want = {sig: sorted(members)
            for sig, members in brute_classify(labels(s1), 3, 13, 4).items()}
    assert got == want


def test_members_lexicographic_and_disjoint():
    s1 = sts13_s1()
    for n in (2, 5):
        classes = classify_level(s1, n)
        seen = set()
        for c in classes:
            lab = c.to_family().block_labels()
            assert list(lab) == sorted(lab)
            assert not (set(c.members) & seen)
            seen.update(c.members)
        assert sum(c.size for c in classes) == comb(13, n)


def test_classify_all_fano():
    sub = classify_all(fano())
    assert sum(len(level) for level in sub.levels) == 10
    got = {(n, c.signature.display): c.size
           for n, level in enumerate(sub.levels) for c in level}
    assert got == {
        (0, (7,)): 1, (1, (4, 3)): 7, (2, (2, 4, 1)): 21,
        (3, (0, 6, 0, 1)): 7, (3, (1, 3, 3, 0)): 28,
        (4, (0, 3, 3, 1)): 28, (4, (1, 0, 6, 0)): 7,
        (5, (0, 1, 4, 2)): 21, (6, (0, 0, 3, 4)): 7, (7, (0, 0, 0, 7)): 1,
    }
    assert sum(c.size for level in sub.levels for c in level) == 2 ** 7


def test_classify_all_matches_fano_family():
    sub = classify_all(fano())
    class_sets = {frozenset(c.members) for level in sub.levels for c in level}
    member_sets = {frozenset(d.blocks) for d in fano_family_members()}
    assert class_sets == member_sets


def test_complement_shortcut_cross_check():
    classify_all(fano(), cross_check=True)
    classify_all(sts13_s1(), cross_check=True)
    classify_all(nine_point_design(), cross_check=True)


def test_complement_shortcut_equals_direct():
    s1 = sts13_s1()
    fast = classify_all(s1, use_complement=True)
    slow = classify_all(s1, use_complement=False)
    for a_level, b_level in zip(fast.levels, slow.levels):
        assert [(c.signature, c.size, c.params) for c in a_level] == [
            (c.signature, c.size, c.params) for c in b_level]
        for ca, cb in zip(a_level, b_level):
            assert sorted(ca.members) == sorted(cb.members)


def test_signature_reversal_between_complementary_levels():
    sub = classify_all(sts13_s1())
    v = 13
    for n in range(v + 1):
        low = {c.signature.z for c in sub.levels[n]}
        high = {tuple(reversed(c.signature.z)) for c in sub.levels[v - n]}
        assert low == high


def test_determinism_across_thread_counts():
    base = classify_all(fano(), threads=1)
    for threads in (2, 4):
        other = classify_all(fano(), threads=threads)
        assert [
            (c.signature, c.size, c.members) for lv in base.levels for c in lv
        ] == [(c.signature, c.size, c.members) for lv in other.levels for c in lv]


def test_counts_only_mode():
    sub = classify_all(sts13_s1(), keep_members=False)
    assert sizes(sub.levels[6]) == S1_LEVELS[6]
    assert all(c.members is None for lv in sub.levels for c in lv)
    full = classify_all(sts13_s1())
    for lv_fast, lv_full in zip(sub.levels, full.levels):
        assert [(c.signature, c.size) for c in lv_fast] == [
            (c.signature, c.size) for c in lv_full]
    with pytest.raises(DesignError):
        analyze(sub)


def test_sweep_limit():
    big = full_design(25, 1)
    with pytest.raises(DesignError, match="sweep limit"):
        classify_all(big)


def test_analyze_fano():
    rep = analyze(classify_all(fano()))
    assert all(rep.is_design)
    assert rep.family_friendly
    assert rep.alpha_ok
    assert rep.conjecture
    assert all(rep.level_friendly)
    assert all(rep.self_friend)
    m = rep.friends_matrix
    assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))


def test_analyze_sts13():
    rep = analyze(classify_all(sts13_s1()))
    keys = rep.class_keys
    assert rep.level_friendly[3] and rep.level_friendly[4]
    assert not rep.level_friendly[5]
    assert not rep.family_friendly
    assert not rep.conjecture
    assert rep.alpha_ok  # classes always partition the power set
    for t, (n, j) in enumerate(keys):
        if n == 6:
            assert not rep.is_design[t]
        if n in (3, 4):
            assert rep.is_design[t] and rep.self_friend[t]
        if n == 5:
            assert rep.is_design[t] and not rep.self_friend[t]


def test_analyze_pg23():
    rep = analyze(classify_all(projective_plane(prime_field(3))))
    assert all(rep.is_design)
    assert rep.family_friendly
    assert rep.conjecture
    assert len(rep.class_keys) == 30


def test_theorem_k3():
    (c1, p1), (c2, p2) = theorem_k3_classes(sts13_s1())
    assert p1 == DesignParams(13, 26, 6, 3, 1)
    assert p2 == DesignParams(13, 260, 60, 3, 10)
    assert c1.size == 26 and c2.size == 260
    (f1, _), (f2, pf2) = theorem_k3_classes(fano())
    assert pf2 == DesignParams(7, 28, 12, 3, 4)
    assert f2.to_family() == non_fano_triples()
    with pytest.raises(DesignError):
        theorem_k3_classes(projective_plane(prime_field(3)))  # k = 4


def test_theorem_k4():
    s1 = sts13_s1()
    (c1, p1), (c2, p2) = theorem_k4_classes(s1)
    assert p1 == DesignParams(13, 260, 80, 4, 20)
    assert p2 == DesignParams(13, 455, 140, 4, 35)
    assert c2.size == 455
    v1 = are_friends(c1.to_family(), s1)
    assert v1.profile_2_1.z == (7, 15, 3, 1)
    assert v1.profile_1_2.z == (70, 150, 30, 10, 0)
    with pytest.raises(DesignError):
        theorem_k4_classes(non_fano_triples())  # lambda = 4


def test_theorem_matches_exhaustive_for_all_k3_parents():
    for parent in (fano(), sts13_s1(), sts13_s2()):
        (c1, p1), (c2, p2) = theorem_k3_classes(parent)
        classes = classify_level(parent, 3)
        assert {frozenset(c.members) for c in classes} == {
            frozenset(c1.members), frozenset(c2.members)}
        assert {c.params for c in classes} == {p1, p2}
        if parent.params.lam == 1:
            (d1, q1), (d2, q2) = theorem_k4_classes(parent)
            lv4 = classify_level(parent, 4)
            assert {frozenset(c.members) for c in lv4} == {
                frozenset(d1.members), frozenset(d2.members)}
            assert {c.params for c in lv4} == {q1, q2}
