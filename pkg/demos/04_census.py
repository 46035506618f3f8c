"""Classify every graph on at most six vertices and tabulate the verdicts."""
from collections import Counter

from raagout.classify import trichotomy
from raagout.corpus import corpus

rows = Counter()
witnesses = Counter()
for g in corpus(6):
    c = trichotomy(g)
    rows[len(g), c.star_condition.holds, c.has_sil] += 1
    if c.largeness is not None:
        witnesses[c.largeness.to_json()["type"]] += 1

print(" n  (*)    SIL   graphs")
for (n, star, sil), count in sorted(rows.items()):
    print(f"{n:2d}  {str(star):5s}  {str(sil):5s} {count:5d}")
print("largeness witnesses:", dict(witnesses))
