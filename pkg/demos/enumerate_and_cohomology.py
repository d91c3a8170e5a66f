# Enumerating cohomological parameters and computing their Poincare polynomials
#
# Every parameter in this package is a pair of nested partitions drawn inside
# a p x q rectangle. This script walks through a few small groups, lists all
# of their parameters, and evaluates the relative Lie algebra cohomology of
# each one in two unrelated ways to show that they agree.

from cohomreps import (
    Family,
    enumerate_reps,
    full_cohomology,
    hodge_type,
    poincare_closed,
    poincare_oracle,
    text_form,
)

# A family is a kind ("U", "O", or "Sp") plus a signature. The smallest
# interesting unitary group has signature (1, 1).

fam = Family("U", 1, 1)
print(f"Parameters for {fam.kind}({fam.p},{fam.q}):")
for rep in enumerate_reps(fam):
    print(f"  {text_form(rep)}   lowest degree R = {rep.R}")
print()

# The trivial representation corresponds to the empty partition pair. Its
# cohomology is the cohomology of the compact dual symmetric space, here a
# projective line, so we expect 1 + t^2.

triv = next(r for r in enumerate_reps(fam) if r.R == 0)
print(f"Cohomology of the trivial parameter: {poincare_closed(triv)}")
print()

# Signature (2, 2) has eighteen parameters. The closed product formula and
# the invariant-theory evaluation are implemented with no shared code paths,
# so printing both side by side is a real consistency check, not an echo.

fam = Family("U", 2, 2)
reps = enumerate_reps(fam)
print(f"{fam.kind}({fam.p},{fam.q}) has {len(reps)} parameters.")
print(f"{'parameter':28} {'closed form':22} oracle")
for rep in reps:
    closed = poincare_closed(rep)
    oracle = poincare_oracle(rep)
    marker = "" if closed == oracle else "  <-- MISMATCH"
    print(f"{text_form(rep):28} {str(closed):22} {oracle}{marker}")
print()

# Unitary parameters carry a Hodge bidegree: the weight of the inner
# partition and the codimension of the outer one.

print("Hodge types in U(2,2):")
for rep in reps[:6]:
    print(f"  {text_form(rep):28} (p,q) = {hodge_type(rep)}")
print()

# The quaternionic family works the same way but the polynomial lives in
# powers of t^4 when the skew shape is a single rectangle filling the box.

fam = Family("Sp", 1, 2)
triv = next(r for r in enumerate_reps(fam) if r.R == 0)
print(f"Trivial parameter of Sp(1,2): {text_form(triv)}")
print(f"  polynomial: {poincare_closed(triv)}")
print(f"  nonzero degrees: {full_cohomology(triv)}")
print()

# Orthogonal parameters are single partitions that fit inside the rectangle
# together with their own half-turn complement.

fam = Family("O", 2, 2)
print("All parameters for the connected group of O(2,2):")
for rep in enumerate_reps(fam):
    print(f"  {text_form(rep):14} cohomology " f"{full_cohomology(rep)}")
