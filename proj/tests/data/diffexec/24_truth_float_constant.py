# expect: Truth Value Test=0
x = 0.5
if x == 0.5:
    print("half")
