# expect: Chain Compare=1, List Comprehension=1
import itertools
hits = []
for a, b, c in itertools.product(range(3), repeat=3):
    if a < b and b < c:
        hits.append((a, b, c))
print(hits)
