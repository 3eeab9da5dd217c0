# expect: Truth Value Test=1, Assign Multi Targets=1
items = []
ready = True
if ready and len(items) == 0:
    print("empty")
