# expect: Truth Value Test=0
n = 0
flag = n == 0
print(flag)
