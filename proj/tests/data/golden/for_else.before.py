finishedForLoop = True
for x in range(2, n):
    if not n % x:
        finishedForLoop = False
        break
if finishedForLoop:
    pass
