# expect: For Else=0
ok = True
for x in range(5):
    if x > 3:
        ok = False
        break
if ok:
    print("never")
print(ok)
