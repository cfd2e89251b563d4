"""Which k make K_{n,m} equitably k-choosable?

Walks the closed-form criteria over two instances whose spectra have
holes, then shows the interval families that explain the holes.
"""

from eqchoose import Status, no_intervals, spectrum, yes_intervals


def show(n, m):
    report = spectrum(n, m, n + m)
    yes = sorted(report.statuses(Status.YES))
    no = sorted(report.statuses(Status.NO))
    unknown = sorted(report.statuses(Status.UNKNOWN))
    print(f"K_{{{n},{m}}} over k = 1..{n + m}")
    print(f"  YES at      {yes}")
    print(f"  NO at       {no}")
    if unknown:
        print(f"  UNKNOWN at  {unknown}")
    print()


print("=" * 72)
print("Choosability spectra")
print("=" * 72)

# A star with a gappy spectrum: equitable choosability is not monotone in
# k.  K_{1,25} works at k = 6 but fails at k = 7, works at 8, fails at 9...
show(1, 25)

# With both sides of size >= 3 the criteria leave gaps (UNKNOWN)
show(3, 3)

print("=" * 72)
print("Interval families")
print("=" * 72)

# The NO intervals for K_{2,139}: each one pins the k where the uniform
# assignment defeats every coloring.  Note the isolated point k = 47 inside
# the long YES tail: 141 = 3*47 exactly, so ceil(141/47)*46 = 138 < 139.
print("K_{2,139} NO intervals containing at least one integer:")
for iv in no_intervals(2, 139):
    members = iv.integer_members()
    if members:
        print(f"  i={iv.index:>3}: [{iv.lower}, {iv.upper})  ->  k in {members}")
print()

print("K_{1,25} YES intervals (every integer inside is provably YES):")
for iv in yes_intervals(1, 25):
    print(f"  i={iv.index}: [{iv.lower}, {iv.upper})  ->  k in {iv.integer_members()}")
