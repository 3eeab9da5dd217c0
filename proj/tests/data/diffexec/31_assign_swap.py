# expect: Assign Multi Targets=2
d = [10, 20, 30]
e = 2
f = d[0]
d[0] = d[e]
d[e] = f
print(d)
