"""Built-in regression table: re-derives every bundled reference result.

Each check recomputes something about the shipped designs (the Fano plane,
the 9-point (9,12,8,6,5) design, the two triple systems on 13 points, small
projective planes) and compares against the recorded values.
"""

from __future__ import annotations

from .designs import (
    DesignParams,
    admissible,
    complement_design,
    full_design,
)
from .families import (
    alpha,
    build_family,
    check_alpha_hypotheses,
    check_order_preservation,
    less_than,
    order_relation,
    transitive_reduction,
)
from .files import save_design
from .friendship import (
    are_friends,
    check_count_identity,
    is_self_friend,
    transitivity_counterexample,
)
from .classify import analyze, classify_all, classify_level, theorem_k3_classes, theorem_k4_classes
from .catalog import (
    fano,
    fano_family,
    nine_point_design,
    non_fano_triples,
    sts13_s1,
    sts13_s2,
)
from .fields import prime_field
from .planes import projective_plane
from .profiles import (
    IntersectionProfile,
    check_moment_identities,
    full_design_self_profile,
    penultimate_full_profiles,
    profile,
    theoretical_self_profile,
)

Check = tuple[str, bool, str]


def _eq(name: str, got, want) -> Check:
    ok = got == want
    return name, ok, "" if ok else f"got {got}, want {want}"


def _true(name: str, got: bool, detail: str = "") -> Check:
    return name, bool(got), detail if not got else ""


def _sizes(classes) -> dict:
    return {cls.signature.display: cls.size for cls in classes}


def run_selfcheck() -> list[Check]:
    checks: list[Check] = []
    add = checks.append

    f = fano()
    nine = nine_point_design()
    s1 = sts13_s1()
    s2 = sts13_s2()
    d5 = full_design(7, 5)

    add(_true("admissible (7,7,3,3,1)", admissible(DesignParams(7, 7, 3, 3, 1))))
    add(_true("admissible (9,12,8,6,5)", admissible(DesignParams(9, 12, 8, 6, 5))))
    add(_true("inadmissible (7,7,3,3,2)", not admissible(DesignParams(7, 7, 3, 3, 2))))
    add(_eq("detect fano", f.params, DesignParams(7, 7, 3, 3, 1)))
    add(_eq("detect 9-point design", nine.params, DesignParams(9, 12, 8, 6, 5)))
    add(_eq("detect sts13 pair", (s1.params, s2.params),
            (DesignParams(13, 26, 6, 3, 1),) * 2))
    add(_eq("sts13 shared blocks", len(set(s1.blocks) & set(s2.blocks)), 22))
    add(_eq("9-point first block", nine.block_labels()[0], (1, 2, 4, 5, 7, 8)))
    add(_eq("full design size-5 on 7 points", (d5.b, d5.params),
            (21, DesignParams(7, 21, 15, 5, 10))))
    add(_eq("complement of fano", complement_design(f).params,
            DesignParams(7, 7, 4, 4, 2)))

    text = save_design(f)
    data_lines = [l for l in text.splitlines() if l and not l.startswith(("#", "v="))]
    add(_true("fano file form", len(data_lines) == 7 and "2 3 5" in data_lines
              and "1 2 4" in data_lines))

    p_f5 = profile(f, (1, 2, 3, 4, 5))
    p_5f = profile(d5, (2, 3, 5))
    add(_eq("profile fano vs a 5-set", p_f5.display, (0, 1, 4, 2)))
    add(_eq("profile size-5 design vs a fano block", p_5f.display, (0, 3, 12, 6)))
    add(_true("moment identities fano/5-set", check_moment_identities(p_f5, f.params)))
    add(_true("moment identities 9-point self",
              check_moment_identities(
                  IntersectionProfile((0, 0, 0, 2, 9, 0, 1), 6), nine.params)))
    add(_true("perturbed vector fails moments",
              not check_moment_identities(
                  IntersectionProfile((1, 1, 4, 1), 5), f.params)))

    add(_eq("forced self profile (13,26,6,3,1)",
            theoretical_self_profile(DesignParams(13, 26, 6, 3, 1)).z, (10, 15, 0, 1)))
    add(_eq("forced self profile fano",
            theoretical_self_profile(f.params).z, (0, 6, 0, 1)))
    add(_eq("forced self profile (7,7,4,4,2)",
            theoretical_self_profile(DesignParams(7, 7, 4, 4, 2)).z, (0, 0, 6, 0, 1)))
    add(_eq("full-design self profile (7,3)",
            full_design_self_profile(7, 3).z, (4, 18, 12, 1)))

    zf, wf = penultimate_full_profiles(f.params)
    add(_eq("fano vs 6-sets", (zf.z, wf.display), ((0, 0, 3, 4), (0, 0, 3, 4))))
    zs, ws = penultimate_full_profiles(s1.params)
    add(_eq("sts13 vs 12-sets", (zs.z[2], zs.z[3], ws.z[2], ws.z[3]), (6, 20, 3, 10)))
    add(_true("sts13 vs 12-sets by sweep",
              are_friends(s1, full_design(13, 12)).profile_1_2.z == zs.z))

    v_f5 = are_friends(f, d5)
    add(_true("fano and size-5 design are friends", v_f5.friends))
    add(_eq("fano/size-5 profiles",
            (v_f5.profile_1_2.display, v_f5.profile_2_1.display),
            ((0, 1, 4, 2), (0, 3, 12, 6))))
    add(_true("count identity fano/size-5", check_count_identity(v_f5, f.b, d5.b)))

    v_nine = is_self_friend(nine, verify=True)
    add(_true("9-point design self-friend", v_nine.friends))
    add(_eq("9-point self profile", v_nine.profile_1_2.display, (0, 0, 0, 2, 9, 0, 1)))
    add(_eq("9-point outside the forced cases", v_nine.theorem_case, None))
    add(_eq("pg(2,2) self profile",
            is_self_friend(projective_plane(prime_field(2))).profile_1_2.z,
            (0, 6, 0, 1)))

    lv3 = classify_level(s1, 3)
    add(_eq("sts13 level-3 classes", _sizes(lv3),
            {(10, 15, 0, 1): 26, (11, 12, 3, 0): 260}))
    lv4 = classify_level(s1, 4)
    add(_eq("sts13 level-4 classes", _sizes(lv4),
            {(7, 15, 3, 1): 260, (8, 12, 6, 0): 455}))
    lv5 = classify_level(s1, 5)
    add(_eq("sts13 level-5 classes", _sizes(lv5),
            {(5, 13, 7, 1): 780, (4, 16, 4, 2): 195, (6, 10, 10, 0): 312}))
    add(_eq("sts13 level-6 classes (s1 vs s2)",
            (_sizes(classify_level(s1, 6)), _sizes(classify_level(s2, 6))),
            ({(2, 15, 6, 3): 208, (1, 18, 3, 4): 13, (4, 9, 12, 1): 468,
              (3, 12, 9, 2): 988, (5, 6, 15, 0): 39},
             {(2, 15, 6, 3): 228, (1, 18, 3, 4): 8, (4, 9, 12, 1): 488,
              (3, 12, 9, 2): 958, (5, 6, 15, 0): 34})))
    add(_true("sts13 level-6 classes are not designs",
              all(c.params is None for c in classify_level(s1, 6))))

    fams5 = [c.to_family(f"level5-{i}") for i, c in enumerate(lv5)]
    add(_true("level-5 classes are designs", all(c.params is not None for c in lv5)))
    add(_true("level-5 classes friend the parent",
              all(are_friends(g, s1).friends for g in fams5)))
    add(_true("level-5 classes are not self-friends",
              not any(are_friends(g, g).friends for g in fams5)))
    add(_true("level-5 classes are not mutual friends",
              not any(are_friends(fams5[i], fams5[j]).friends
                      for i in range(3) for j in range(i + 1, 3))))
    add(_true("non-transitivity witness on 13 points",
              transitivity_counterexample(fams5[0], fams5[1])))
    add(_true("fano and its non-lines are friends (no counterexample)",
              not transitivity_counterexample(f, non_fano_triples())))

    chain = build_family([full_design(7, k) for k in range(8)])
    chain_rel = order_relation(chain)
    add(_eq("full-design chain is a friendly total order",
            (len(chain.members), len(chain_rel.pairs)), (8, 28)))

    fams4 = [c.to_family(f"level4-{i}") for i, c in enumerate(lv4)]
    add(_true("sts13 level-4 classes form a friendly family",
              are_friends(fams4[0], fams4[1]).friends
              and all(are_friends(g, g).friends for g in fams4)))

    fam = fano_family()
    add(_eq("fano family sizes",
            {fam.member_label(i): d.b for i, d in enumerate(fam.members)},
            {"full-0": 1, "full-1": 7, "full-2": 21, "fano": 7,
             "non-fano-triples": 28, "fano-complement": 7, "non-fano-quads": 28,
             "full-5": 21, "full-6": 7, "full-7": 1}))
    rel = order_relation(fam)
    names = [fam.member_label(i) for i in range(10)]
    covering = sorted(
        (names[i], names[j]) for (i, j) in transitive_reduction(rel)
    )
    expected = sorted([
        ("full-0", "full-1"), ("full-1", "full-2"), ("full-2", "fano"),
        ("full-2", "non-fano-triples"), ("fano", "non-fano-quads"),
        ("non-fano-triples", "fano-complement"),
        ("non-fano-triples", "non-fano-quads"),
        ("fano-complement", "full-5"), ("non-fano-quads", "full-5"),
        ("full-5", "full-6"), ("full-6", "full-7"),
    ])
    add(_eq("fano family covering relation", covering, expected))
    add(_true("fano below the non-complement quads",
              less_than(fam, names.index("fano"), names.index("non-fano-quads"))))
    add(_true("fano not below its complement",
              not less_than(fam, names.index("fano"),
                            names.index("fano-complement"))))
    add(_true("fano family order transitive here", rel.is_transitive))
    add(_true("fano family partitions the power set", check_alpha_hypotheses(fam)))
    add(_true("fano family preserves subset order", check_order_preservation(fam)))
    add(_eq("alpha sends a fano block to fano",
            fam.member_label(alpha(fam, (2, 3, 5))), "fano"))
    add(_eq("alpha sends a non-line to the non-lines",
            fam.member_label(alpha(fam, (1, 2, 3))), "non-fano-triples"))
    add(_eq("alpha sends the empty set to the empty design",
            fam.member_label(alpha(fam, ())), "full-0"))

    try:
        build_family(fams5[:2])
        add(("level-5 pair is rejected as a family", False, "no error raised"))
    except Exception:
        add(("level-5 pair is rejected as a family", True, ""))

    sub_f = classify_all(f)
    by_level = {
        (n, cls.signature.display): cls.size
        for n, level in enumerate(sub_f.levels)
        for cls in level
    }
    add(_eq("fano power-set classes", by_level, {
        (0, (7,)): 1, (1, (4, 3)): 7, (2, (2, 4, 1)): 21,
        (3, (0, 6, 0, 1)): 7, (3, (1, 3, 3, 0)): 28,
        (4, (0, 3, 3, 1)): 28, (4, (1, 0, 6, 0)): 7,
        (5, (0, 1, 4, 2)): 21, (6, (0, 0, 3, 4)): 7, (7, (0, 0, 0, 7)): 1,
    }))
    rep_f = analyze(sub_f)
    add(_true("fano power-set family verdict",
              rep_f.conjecture and rep_f.alpha_ok and all(rep_f.is_design)))

    pg3 = projective_plane(prime_field(3))
    add(_eq("pg(2,3) parameters", pg3.params, DesignParams(13, 13, 4, 4, 1)))
    rep3 = analyze(classify_all(pg3))
    add(_true("pg(2,3) power-set family verdict",
              rep3.conjecture and rep3.alpha_ok and all(rep3.is_design)))

    (c1, p1), (c2, p2) = theorem_k3_classes(s1)
    add(_eq("sts13 level-3 closed form", p2, DesignParams(13, 260, 60, 3, 10)))
    (d1, q1), (d2, q2) = theorem_k4_classes(s1)
    add(_eq("sts13 level-4 closed form", (q1, q2.b),
            (DesignParams(13, 260, 80, 4, 20), 455)))
    add(_eq("sts13 vs its level-4 class",
            are_friends(s1, d1.to_family()).profile_1_2.display, (7, 15, 3, 1)))
    (c1f, _), (c2f, p2f) = theorem_k3_classes(f)
    add(_eq("fano level-3 closed form", p2f, DesignParams(7, 28, 12, 3, 4)))

    return checks
