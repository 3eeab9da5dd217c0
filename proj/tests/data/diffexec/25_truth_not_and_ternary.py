# expect: Truth Value Test=3, Assign Multi Targets=1
xs = [1, 2]
x = 0
if not (x == 0):
    print("nonzero")
assert len(xs) != 0
label = "div3" if len(xs) % 3 == 0 else "other"
print(label)
