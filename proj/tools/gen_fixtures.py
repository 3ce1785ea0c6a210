#!/usr/bin/env python3
"""Regenerate the bundled Cayley-table fixtures under data/groups/.

Each group is given by generators in a faithful representation (permutations
or tuples with an explicit product). Elements are numbered in BFS order from
the identity so that index 0 is always the identity.
"""
import itertools
import pathlib
import sys


def perm_mul(p, q):
    # (p*q)(i) = p(q(i)); composition acting on the left
    return tuple(p[i] for i in q)


def cyclic_perm(n):
    return tuple((i + 1) % n for i in range(n))


def closure(identity, gens, mul):
    elems = [identity]
    index = {identity: 0}
    head = 0
    while head < len(elems):
        x = elems[head]
        head += 1
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
    return elems, index


def table_of(identity, gens, mul):
    elems, index = closure(identity, gens, mul)
    return [[index[mul(x, y)] for y in elems] for x in elems]


def abelian(orders):
    identity = tuple(0 for _ in orders)
    gens = []
    for k in range(len(orders)):
        gens.append(tuple(1 if i == k else 0 for i in range(len(orders))))

    def mul(x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, orders))

    return table_of(identity, gens, mul)


def perm_group(n, gens):
    return table_of(tuple(range(n)), [tuple(g) for g in gens], perm_mul)


def dihedral(n):
    # symmetries of the n-gon acting on vertices
    rot = cyclic_perm(n)
    ref = tuple((-i) % n for i in range(n))
    return perm_group(n, [rot, ref])


def quaternion():
    # unit quaternions as (sign, basis) with basis in 1,i,j,k
    prod = {
        ('1', '1'): (1, '1'), ('1', 'i'): (1, 'i'), ('1', 'j'): (1, 'j'), ('1', 'k'): (1, 'k'),
        ('i', '1'): (1, 'i'), ('i', 'i'): (-1, '1'), ('i', 'j'): (1, 'k'), ('i', 'k'): (-1, 'j'),
        ('j', '1'): (1, 'j'), ('j', 'i'): (-1, 'k'), ('j', 'j'): (-1, '1'), ('j', 'k'): (1, 'i'),
        ('k', '1'): (1, 'k'), ('k', 'i'): (1, 'j'), ('k', 'j'): (-1, 'i'), ('k', 'k'): (-1, '1'),
    }

    def mul(x, y):
        s, b = prod[(x[1], y[1])]
        return (x[0] * y[0] * s, b)

    return table_of((1, '1'), [(1, 'i'), (1, 'j')], mul)


def dicyclic3():
    # Dic3 = <x, y | x^6, y^2 = x^3, y x y^-1 = x^-1>; elements x^a y^b, b in {0,1}
    def mul(p, q):
        a, b = p
        c, d = q
        if b == 0:
            return ((a + c) % 6, d)
        # y x^c = x^-c y
        if d == 0:
            return ((a - c) % 6, 1)
        return ((a - c + 3) % 6, 0)

    return table_of((0, 0), [(1, 0), (0, 1)], mul)


FIXTURES = {
    'C1': lambda: abelian([1]),
    'V4': lambda: abelian([2, 2]),
    'S3': lambda: perm_group(3, [(1, 0, 2), (1, 2, 0)]),
    'D4': lambda: dihedral(4),
    'Q8': quaternion,
    'C2xC2xC2': lambda: abelian([2, 2, 2]),
    'C4xC2': lambda: abelian([4, 2]),
    'C3xC3': lambda: abelian([3, 3]),
    'D5': lambda: dihedral(5),
    'D6': lambda: dihedral(6),
    'A4': lambda: perm_group(4, [(1, 2, 0, 3), (1, 0, 3, 2)]),
    'Dic3': dicyclic3,
    'C6xC2': lambda: abelian([6, 2]),
}
for n in range(2, 13):
    FIXTURES[f'C{n}'] = (lambda n=n: abelian([n]))


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else 'data/groups')
    out.mkdir(parents=True, exist_ok=True)
    for name, make in sorted(FIXTURES.items()):
        table = make()
        lines = [f'order: {len(table)}'] + [' '.join(map(str, row)) for row in table]
        (out / f'{name}.tbl').write_text('\n'.join(lines) + '\n')


if __name__ == '__main__':
    main()
