# expect: Chain Compare=1, List Comprehension=1
lo, hi = 2, 6
inside = []
for x in range(9):
    inside.append(x > lo and x < hi)
print(inside)
