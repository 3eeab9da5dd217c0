# expect: Assign Multi Targets=0
x = 1
y = x
print(x, y)
