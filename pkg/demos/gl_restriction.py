# Restricting representations of the general linear group to one rank down
#
# A representation here is a sum of blocks, each a discrete piece u(m, j)
# with m in {1, 2} and a positive integer j, optionally twisted by a
# complementary series parameter in (0, 1/2). Restriction from GL(n) to
# GL(n-1) is predicted by an interleaving rule on an exact rational matrix.

from fractions import Fraction

from cohomreps import (
    hyp_chain_epsilon,
    hyp_transfer,
    parse_glrep,
    prediction_modes_disagree,
    rel_threshold_met,
    repka_diagonal,
    restrict_prediction,
    rho_rank1,
    t_matrix,
)

# Blocks are written in a compact text form. Twists are exact fractions.

rep = parse_glrep("u(1,3)+u(2,2)[1/3]")
print(f"parsed blocks: {rep.blocks}")
print(f"total rank n = {rep.n}")
print()

# The T matrix lists the exponents of all blocks in decreasing order. It is
# always symmetric about zero because each block contributes a mirrored set.

T = t_matrix(rep)
print(f"T = {[str(x) for x in T]}")
print()

# Prediction for the restriction to GL(m): shift by the difference of half
# sums of positive roots, keep m of the n entries, clip at zero. The two
# keeping conventions ("outer" takes slots from both ends, "top" takes them
# all from the top) usually agree, but not always.

probe = parse_glrep("u(1,1)[1/3]+u(1,1)")
Tp = t_matrix(probe)
outer = restrict_prediction(Tp, 2, "outer")
top = restrict_prediction(Tp, 2, "top")
print(f"probe T = {[str(x) for x in Tp]}")
print(f"  outer: {[str(x) for x in outer]}")
print(f"  top:   {[str(x) for x in top]}")
print(f"  modes disagree: {prediction_modes_disagree(Tp, 2)}")
print()

# For the trivial representation of a rank n group the first predicted entry
# is (m - 1)/2 regardless of n, a useful smoke test.

for n in (3, 4, 5):
    T = t_matrix(parse_glrep(f"u(1,{n})"))
    row = [str(restrict_prediction(T, m)[0]) for m in range(1, n + 1)]
    print(f"n={n}: first entries {row}")
print()

# Two helpers for rank one groups. rho_rank1 gives the half sum of positive
# roots and hyp_transfer moves a spectral parameter between members of a
# chain of hyperbolic spaces. Iterating the transfer yields the sequence
# n - 6/5, strictly below the endpoint n - 1 at every step.

print(f"rho for SU(2,1): {rho_rank1('SU', 2)}")
print(f"rho for SO(4,1): {rho_rank1('SO', 4)}")
print()
print("chain values:")
for n in range(2, 8):
    eps = hyp_chain_epsilon(n)
    print(
        f"  n={n}: epsilon = {eps} = n - {Fraction(n) - eps}, "
        f"below n - 1: {Fraction(n - 1) > eps}"
    )
print()

# The threshold test compares twice a half sum against a restricted half sum
# plus a spectral gap, strictly. The diagonal branching rule rounds out the
# toolkit.

met = rel_threshold_met(7, Fraction(29, 5), hyp_chain_epsilon(7))
print(f"threshold met at (7, 29/5, chain eps): {met}")
out = repka_diagonal(Fraction(3, 5), Fraction(3, 5))
print(f"diagonal branching at (3/5, 3/5): {out.kind} with parameter {out.parameter}")
