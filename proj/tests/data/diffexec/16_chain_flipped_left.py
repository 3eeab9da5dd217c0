# expect: Chain Compare=1
n1, n2 = 3, 4
print([i for i in range(12) if i > n1 and i <= n1 + n2])
