a = []
for e in range(10):
    a.append(e)
