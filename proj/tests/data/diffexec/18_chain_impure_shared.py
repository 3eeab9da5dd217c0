# expect: Chain Compare=0
calls = []
def probe(x):
    calls.append(x)
    return x
ok = probe(2) > 0 and probe(2) < 5
print(ok, calls)
