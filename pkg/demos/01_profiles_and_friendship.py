"""Profiles and the friendship relation, on the bundled designs.

Walks through: what an intersection profile is, the three counting
identities it satisfies, two designs that are friends, a design that is
friends with itself outside the forced cases, and why friendship is not
transitive.
"""

from blockfriends import (
    are_friends,
    check_count_identity,
    check_moment_identities,
    classify_level,
    complement_design,
    complement_transfer,
    fano,
    full_design,
    is_self_friend,
    nine_point_design,
    profile,
    sts13_s1,
    transitivity_counterexample,
)

f = fano()
print("the Fano plane:", f.params)
for labels in f.block_labels():
    print("  block", labels)

# Profile of a design against a probe set: entry j counts the blocks
# meeting the probe in exactly j points.
p = profile(f, (1, 2, 3, 4, 5))
print("\nphi(fano, {1,2,3,4,5}) =", p)
print("moment identities hold:", check_moment_identities(p, f.params))

# The probe can be anything, including blocks of another design.
d5 = full_design(7, 5)
verdict = are_friends(f, d5)
print("\nfano and the full 5-subset design:")
print("  friends:", verdict.friends)
print("  phi(fano, d5) =", verdict.profile_1_2)
print("  phi(d5, fano) =", verdict.profile_2_1)
print("  b2*phi12 == b1*phi21:", check_count_identity(verdict, f.b, d5.b))

# A design friends with itself, with none of the structural shortcuts
# (lambda=1, k=3, symmetric) applying.
nine = nine_point_design()
self_verdict = is_self_friend(nine, verify=True)
print("\nthe (9,12,8,6,5) design is friends with itself:", self_verdict.friends)
print("  profile:", self_verdict.profile_1_2)
print("  forced case used:", self_verdict.theorem_case)

# Complementing one side of a friendship reverses the profile.
cof = complement_design(f)
before = are_friends(f, f).profile_1_2
after = are_friends(f, cof).profile_1_2
print("\nphi(fano, fano) =", before, " -> phi(fano, complement) =", after)
print("  reversal formula agrees:", after == complement_transfer(before, f.k, f.v))

# Friendship is not transitive: both level-5 classes of a Steiner triple
# system are friends with the full 12-subset design but not with each other.
s1 = sts13_s1()
lv5 = [c.to_family(f"level5-{i}") for i, c in enumerate(classify_level(s1, 5))]
print("\nnon-transitivity witness on 13 points:",
      transitivity_counterexample(lv5[0], lv5[1]))
