# expect: Truth Value Test=1, Assign Multi Targets=1
count = 5
steps = 0
while count != 0:
    count -= 1
    steps += 1
print(steps)
