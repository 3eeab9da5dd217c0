# expect: Truth Value Test=2
def kind(x):
    if isinstance(x, int) is True:
        return "int"
    if callable(x) is False:
        return "value"
    return "callable"
print(kind(3), kind("s"), kind(len))
