b = {}
for k, v in a.items():
    b[k] = v
