# expect: List Comprehension=1
class Bag:
    def __init__(self, xs):
        self.items = []
        for x in xs:
            self.items.append(str(x))

print(Bag([1, 2, 3]).items)
