# expect: List Comprehension=1
def evens(limit):
    result = []
    for n in range(0,
                   limit):
        if n % 2 != 1:
            result.append(n)
    return result

print(evens(9))
