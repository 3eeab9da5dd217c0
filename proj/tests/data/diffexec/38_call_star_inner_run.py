# expect: Call Star=1
a = [10, 20]
x, y = 1, 2
f = lambda *t: t
print(f(x, a[0], a[1], y))
