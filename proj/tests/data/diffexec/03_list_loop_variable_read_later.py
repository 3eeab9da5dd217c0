# expect: List Comprehension=0, Assign Multi Targets=1
xs = [3, 1, 2]
a = []
for e in xs:
    a.append(e + 1)
print(a, e)
