# expect: Assign Multi Targets=0
def current():
    return x * 10

x = 1
y = current()
print(x, y)
