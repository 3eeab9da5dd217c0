# expect: Assign Multi Targets=1
class P:
    x = 0
p = P()
q = p
p.x = 5
y = q.x
print(y)
