# expect: For Multi Targets=1, List Comprehension=1
def totals(sales):
    out = []
    for item in sales:
        out.append(item[0] + item[2])
    return out

print(totals([(1, 2, 3), (4, 5, 6)]))
