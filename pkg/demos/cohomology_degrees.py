# Degrees in which automorphic forms can contribute cohomology
#
# For a unitary group attached to a division algebra of degree n and a
# signature (p, q), the possible cohomological degrees of certain automorphic
# representations form a finite symmetric set around the middle degree pq.
# This script computes those sets and the combinatorial defect number that
# controls their radius.

from cohomreps import N, degree_support, lemC_bruteforce, li_coverage, relth_coverage

# The defect N(b, n, p) measures how far from the middle degree a parameter
# built from blocks of size b can reach. A quick table for n = 6:

n = 6
print(f"defect table for n = {n}")
print(f"{'b':>3} {'p=0':>4} {'p=1':>4} {'p=2':>4} {'p=3':>4}")
for b in (1, 2, 3, 6):
    vals = [N(b, n, p) for p in range(4)]
    print(f"{b:>3} " + " ".join(f"{v:>4}" for v in vals))
print()

# Each closed-form value is backed by a brute force over the lattice of
# admissible exponent patterns. The second return value reports whether all
# optima share the parity of the formula's value.

best, uniform = lemC_bruteforce(3, 2, 2)
print(f"brute force for a=3 b=2 p=2: max defect {best}, parity uniform: {uniform}")
print()

# degree_support assembles the full degree set for a signature by taking the
# union over divisors. The classical rank 4 example with signature (2, 2):

n, p, q = 4, 2, 2
ds = degree_support(n, p, q)
print(f"n={n}, signature ({p},{q}): degrees {ds.degrees}, centered at {ds.center}")
for b in (2, 4):
    radius = N(b, n, p)
    print(f"  block size {b}: defect {radius}, "
          f"interval [{p * q - radius}, {p * q + radius}]")
print()

# Prime n leaves only the middle degree since the lone proper divisor is 1.

for n in (3, 5, 7):
    ds = degree_support(n, 1, n - 1)
    print(f"n={n}, signature (1,{n - 1}): degrees {ds.degrees}")
print()

# Composite n with an odd divisor mixes parities across divisor intervals.

ds = degree_support(6, 1, 5)
print(f"n=6, signature (1,5): degrees {ds.degrees}")
print(f"  uniform parity: {ds.is_parity_uniform}")
print()

# The package also reports which existing construction, if any, certifies
# that a given parameter is attached to an automorphic representation. Tags
# come in two quality levels; Q1 constructions give the full expected
# multiplicity while Q2 only produce a nonzero one.

from cohomreps import Family, make_rep, text_form

cases = [
    ("U", 2, 3, (1, 1), (2, 2), None),
    ("O", 3, 4, (1, 1, 1), None, None),
    ("O", 3, 6, (2, 2, 2), None, None),
    ("Sp", 2, 2, (), (2, 2), 0),
]
for kind, p, q, lam, mu, flag in cases:
    rep = make_rep(Family(kind, p, q), lam, mu, flag=flag)
    li = li_coverage(rep)
    rel = relth_coverage(rep)
    print(f"{text_form(rep):24} li: {li}  relative: {rel}")
