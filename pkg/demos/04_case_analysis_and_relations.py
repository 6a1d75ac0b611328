"""The complete case table, and the regimes where several cycles are non-zero.

Only four cycles can carry a non-zero value when 0 < a,b,c < p: (1,1), (1,2),
(2,2) and (1,3).  For most parameters at most one of them is non-zero; in
three inequality regimes (R1, R2, R3) exactly three values coexist and are
locked together by -1/2 * first = second = third.

Run:  python demos/04_case_analysis_and_relations.py
"""

import collections
import itertools

from fpselberg import (
    SelbergParams,
    classify,
    condition_set,
    describe,
    relations_check,
    skew_symmetry_check,
)

p = 7

# Census of branches over the whole parameter window.
census = collections.Counter()
regimes = collections.Counter()
for a, b, c in itertools.product(range(1, p), repeat=3):
    params = SelbergParams(a, b, c, p)
    regimes[condition_set(params)] += 1
    for l1 in range(1, 5):
        for l2 in range(l1, 5):
            census[str(classify(params, l1, l2))] += 1

print(f"branch census at p={p} (cycles l1 <= l2 <= 4):")
for branch, count in sorted(census.items()):
    print(f"  {branch:<22} {count}")
print(f"\nregime membership: {dict(regimes)}")

# A full explanation for one point, as the `classify` command prints it.
print("\n" + describe(SelbergParams(3, 4, 3, p), 1, 1))

# Relations in each regime, verified against brute force.
for a, b, c in [(3, 4, 3), (6, 6, 3), (6, 6, 6), (1, 1, 1)]:
    report = relations_check(SelbergParams(a, b, c, p))
    values = {cycle: int(v) for cycle, v in report.values.items() if v}
    if report.condition_set:
        print(f"\n({a},{b},{c}) lies in {report.condition_set}: "
              f"non-zero values {values}, relation holds: {report.relation_holds}")
    else:
        print(f"\n({a},{b},{c}) lies in no regime: non-zero values {values or '{}'}"
              f", uniqueness holds: {report.uniqueness_holds}")

# The R3 relation has a coefficient-level explanation: over F_p the factor
# (x1-x2)^(2c) splits off (x1^p - x2^p), whose skew symmetry forces the -1/2.
print(f"\nskew-symmetry certificate at (6,6,6): {skew_symmetry_check(SelbergParams(6, 6, 6, p))}")
