# Which cohomological representations sit alone in the unitary dual?
#
# A parameter is isolated when no small deformation of its partition pair
# lands on another valid parameter. The package answers this question twice
# for unitary groups: once by searching over actual neighbors, and once by a
# purely visual criterion that only looks at the shape of the two boundary
# paths. This survey runs both on every parameter of a few groups and tallies
# the outcomes.

from collections import Counter

from cohomreps import (
    Family,
    enumerate_reps,
    isolated_O,
    isolated_Sp,
    isolated_U_explicit,
    isolated_U_search,
    isolated_d0,
    t1intro_inequalities,
    text_form,
)

print("Unitary survey, all signatures with p + q <= 7")
print(f"{'group':10} {'parameters':>10} {'isolated':>9} {'agree':>6}")
for p in range(1, 7):
    for q in range(1, 8 - p):
        fam = Family("U", p, q)
        reps = enumerate_reps(fam)
        tally = Counter()
        for rep in reps:
            s = isolated_U_search(rep).isolated
            e = isolated_U_explicit(rep).isolated
            tally["isolated"] += s
            tally["agree"] += s == e
        print(
            f"U({p},{q}){'':4} {len(reps):>10} "
            f"{tally['isolated']:>9} {tally['agree']:>6}/{len(reps)}"
        )
print()

# When a parameter fails to be isolated the verdict carries witnesses. For
# the search criterion these are the neighboring parameters themselves; for
# the shape criterion they describe the geometric defect.

rep = next(
    r
    for r in enumerate_reps(Family("U", 2, 3))
    if not isolated_U_search(r).isolated
)
print(f"A non-isolated example in U(2,3): {text_form(rep)}")
print(f"  neighbors: {isolated_U_search(rep).witnesses}")
print(f"  shape defects: {isolated_U_explicit(rep).witnesses}")
print()

# An isolated one, for contrast. The 3x3 block between (1,1,1) and (3,3,3)
# keeps both boundary paths away from each other.

from cohomreps import make_rep

rep = make_rep(Family("U", 3, 4), (1, 1, 1), (3, 3, 3))
print(f"{text_form(rep)} isolated: {isolated_U_search(rep).isolated}")
print()

# Orthogonal groups use a two-box search since single boxes break the
# half-turn symmetry. For the rectangular partitions (r, ..., r) the verdict
# reproduces a simple battery of inequalities in p, q, r.

print("Orthogonal rectangles, p + q <= 9:")
rows = []
for p in range(1, 9):
    for q in range(1, 10 - p):
        if (p, q) == (1, 1):
            continue
        for r in range(q // 2 + 1):
            rep = make_rep(Family("O", p, q), (r,) * p if r else ())
            got = isolated_O(rep).isolated
            want = t1intro_inequalities(p, q, r)
            rows.append(got == want)
            if got:
                print(f"  O({p},{q}) with r = {r} is isolated")
print(f"  search matched the inequalities on {sum(rows)}/{len(rows)} cases")
print()

# Quaternionic parameters come with a flag choice, and for the zero flag
# isolation additionally requires the distinguished corner block to have
# side lengths summing to at least 3.

for lam, mu, flag in [((), (1, 1), 0), ((1,), (1, 1), 0), ((), (2, 2), 1)]:
    rep = make_rep(Family("Sp", 2, 2), lam, mu, flag=flag)
    v = isolated_Sp(rep)
    tail = "" if v.isolated else f"   witnesses: {v.witnesses[:2]}"
    print(f"{text_form(rep):22} isolated: {v.isolated}{tail}")
print()

# Isolation inside the degree-zero part of the spectrum is a weaker
# condition: only enlargements of the skew shape count as neighbors, so a
# parameter whose shape cannot grow is automatically isolated there.

rep = make_rep(Family("U", 2, 2), (1,), (1, 1))
print(f"{text_form(rep)} in the degree-zero sense:")
print(f"  {isolated_d0(rep).witnesses}")
full = make_rep(Family("U", 2, 2), (), (2, 2))
print(f"{text_form(full)} cannot grow, isolated: {isolated_d0(full).isolated}")
