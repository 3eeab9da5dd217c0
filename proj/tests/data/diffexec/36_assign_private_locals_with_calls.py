# expect: Assign Multi Targets=1
def stats(xs):
    total = sum(xs)
    count = len(xs)
    return total / count

print(stats([1, 2, 3, 6]))
