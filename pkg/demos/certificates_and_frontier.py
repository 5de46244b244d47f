"""
Deciding triples and mapping the certified frontier
===================================================

For which (d, j, k) can every j nice measures in R^d be bisected
simultaneously by k affine hyperplanes?  The verdict engine answers with
a certificate naming the criterion that decided, and the frontier table
shows, for each j, the smallest d each criterion can certify.
"""

from hyperbisect import (certificate_checks, frontier_svg, frontier_table,
                         verdict)

# A few triples across the three possible statuses.  Necessity: interval
# measures on the moment curve force d*k >= j, so (1, 3, 2) is out.
for d, j, k in [(1, 1, 1), (2, 4, 2), (3, 7, 3), (1, 3, 2), (3, 5, 2)]:
    v = verdict(d, j, k)
    print(f"(d={d}, j={j}, k={k}): {v.status.name:8s} via {v.certificate}")
    # every certificate is re-derivable from scratch
    assert certificate_checks(v)

# The frontier for k = 2: per j, the minimal d certified by each
# criterion, next to the conjectured optimum ceil(j/2).  Power-of-two
# structure is clearly visible in the d_thm1 column.
table = frontier_table(k=2, j_max=24)
print()
print("   j  conj  thm1  thm25i")
for row in table.rows:
    t1 = row.d_thm1 if row.d_thm1 is not None else "-"
    ti = row.d_thm25i if row.d_thm25i is not None else "-"
    print(f"  {row.j:2d}  {row.d_conjecture:4d}  {t1:>4}  {ti:>6}")

# At j = 2^m - 1 the ideal criterion certifies d = 2^(m-1), half the
# naive bound -- the best rows of the table.
for m in (2, 3, 4):
    j, d = 2 ** m - 1, 2 ** (m - 1)
    v = verdict(d, j, 2)
    print(f"\nj = 2^{m}-1 = {j}: certified already at d = {d} ({v.certificate})")

# The same data as a scatter figure (rings mark criteria, dots the
# conjectured frontier).
svg = frontier_svg(frontier_table(k=3, j_max=30))
with open("frontier_k3.svg", "w") as fh:
    fh.write(svg)
print("\nwrote frontier_k3.svg,", len(svg), "bytes")
