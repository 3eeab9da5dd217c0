# expect: For Else=0, Assign Multi Targets=1
grid = [[1, 2], [3, -4]]
clean = True
for row in grid:
    for v in row:
        if v < 0:
            clean = False
            break
if clean:
    print("clean")
print(clean)
