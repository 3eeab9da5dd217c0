"""Syntax coverage fixture for range checks."""
from __future__ import annotations

import os.path as osp
from . import sibling
from ..pkg import (a, b as c,)


@decorator
@other.decorator(arg, *rest, key=value, **extra)
class Thing(Base, metaclass=Meta):
    attr: int = 3
    other: "str"

    def __init__(self, x, /, y=1, *args, z, w=2, **kwargs) -> None:
        self.x = x
        self.values = [v ** 2 for v in range(10) if v % 3 if v]
        self.lookup = {k: v for k, v in zip("ab", (1, 2))}
        self.unique = {c for c in "hello"}
        self.lazy = (n for n in y)
        super().__init__()

    @property
    async def fetch(self, *, timeout=None):
        async with session() as s, other() as (p, q):
            async for chunk in s:
                await chunk
        return [i async for i in aiter()]

    def gen(self):
        x = yield
        y = yield from self.fetch()
        yield x, y


def slices(seq):
    head, *tail = seq
    print(seq[1:2], seq[::2], seq[a:b, c], seq[...], seq[-1])
    x = seq[0] if seq else None
    y = lambda p, q=1, *r, **s: p + q
    z = not -x ** 2 // 3 @ m << 1 | 2 & 3 ^ 4
    w = (yield) if False else 0
    if (n := len(seq)) > 10 and n < 20 or not n:
        pass
    elif n == 0:
        pass
    else:
        del seq[0], seq[1]
    assert x is not None, "message"
    return (
        x,
        y,
    )


def control(items):
    global counter
    for i, (a, b) in enumerate(items):
        if a in b and b not in a:
            continue
        while i:
            i -= 1
            break
        else:
            pass
    else:
        pass
    try:
        raise ValueError("x") from None
    except (TypeError, ValueError) as exc:
        print(exc)
    except Exception:
        raise
    else:
        pass
    finally:
        pass
    with open("f") as fh, open("g"):
        fh.read()


def strings(name, width):
    s = "implicit" 'concat' """triple
    quoted"""
    t = f"{name!r:>{width}} and {width + 1:.2f} {{escaped}}"
    u = rb"\d+" + b"bytes"
    v = (f"multi"
         f"{name}")
    return s, t, u, v


def patterns(command):
    match command.split():
        case [action]:
            pass
        case [action, obj] if obj:
            pass
        case Point(x=0, y=0) | Point(x=1):
            pass
        case {"key": value, **rest}:
            pass
        case [1, 2, *others] as whole:
            pass
        case -1 | 1.5 | 2 + 3j | "s" | None | True:
            pass
        case _:
            pass


numbers = [1, 2.5, 3j, 0x1F, 0o7, 0b1, 1_000, 1e-3, .5]
nested = {**base, "k": [*a, *b], "t": (1,), "e": ()}
chained = a < b <= c != d is not e in f
call = func(a)(b)[c].d(e, *f, g=h, **i)
genarg = sum(x for x in range(3))
starred = print(*args, sep="")
cond = a if b else c if d else e
walrus = [y := f(x), y ** 2]
