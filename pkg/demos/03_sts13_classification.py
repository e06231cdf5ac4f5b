"""Two Steiner triple systems on 13 points, classified level by level.

The two systems share 22 of their 26 blocks.  Their subset classes agree in
signature everywhere and in size up to level 5; at level 6 the sizes split,
which distinguishes the systems.  Levels 3 and 4 give friendly families,
level 5 gives designs that befriend the parent but not each other, and
level 6 classes are not designs at all.
"""

from blockfriends import (
    are_friends,
    classify_level,
    sts13_s1,
    sts13_s2,
    theorem_k3_classes,
    theorem_k4_classes,
)

s1, s2 = sts13_s1(), sts13_s2()
print("S1:", s1.params)
print("S2:", s2.params)
print("shared blocks:", len(set(s1.blocks) & set(s2.blocks)), "of 26")

for n in (3, 4, 5, 6):
    print(f"\nlevel {n}:")
    for name, parent in (("S1", s1), ("S2", s2)):
        parts = []
        for cls in classify_level(parent, n):
            tag = "design" if cls.params else "not-a-design"
            parts.append(f"{cls.signature}x{cls.size} {tag}")
        print(f"  {name}: " + ";  ".join(parts))

print("\nlevel-5 classes of S1, in detail:")
classes5 = classify_level(s1, 5)
fams5 = [c.to_family(f"level5-{i}") for i, c in enumerate(classes5)]
for cls, fam in zip(classes5, fams5):
    print(f"  {cls.signature}: params {cls.params}, "
          f"friends with S1: {are_friends(fam, s1).friends}, "
          f"self-friend: {are_friends(fam, fam).friends}")
print("  mutual friendships:",
      [(i, j, are_friends(fams5[i], fams5[j]).friends)
       for i in range(3) for j in range(i + 1, 3)])

# For block size 3 the two level-3 classes have closed-form parameters,
# and with lambda=1 so do the two level-4 classes.
(c1, p1), (c2, p2) = theorem_k3_classes(s1)
print("\nclosed-form level 3:", p1, "and", p2)
(d1, q1), (d2, q2) = theorem_k4_classes(s1)
print("closed-form level 4:", q1, "and", q2)
v = are_friends(d1.to_family(), s1)
print("cross profiles with the parent:", v.profile_1_2, "and", v.profile_2_1)
