"""Slow, loop-based reference implementations used to cross-check the package.

Nothing here imports the vectorized code paths: every check is written from
the definitions with plain Python loops over nested lists.
"""
import itertools


def to_lists(cube):
    n = cube.order
    return [[[int(cube.table[x, y, z]) for z in range(n)] for y in range(n)] for x in range(n)]


def associative(t):
    n = len(t)
    for x, y, z, u, v in itertools.product(range(n), repeat=5):
        a = t[t[x][y][z]][u][v]
        if a != t[x][t[y][z][u]][v] or a != t[x][y][t[z][u][v]]:
            return False
    return True


def solvable(t):
    """Every one-slot equation [x a b] = c, [a y b] = c, [a b z] = c has a solution."""
    n = len(t)
    for a, b in itertools.product(range(n), repeat=2):
        for images in ({t[x][a][b] for x in range(n)}, {t[a][y][b] for y in range(n)},
                       {t[a][b][z] for z in range(n)}):
            if len(images) != n:
                return False
    return True


def is_ternary_group(t):
    return associative(t) and solvable(t)


def skew(t):
    n = len(t)
    out = []
    for x in range(n):
        sols = [z for z in range(n) if t[x][x][z] == x]
        assert len(sols) == 1
        out.append(sols[0])
    return out


def semicommutative(t):
    n = len(t)
    return all(t[x][y][z] == t[z][y][x] for x, y, z in itertools.product(range(n), repeat=3))


def medial(t):
    n = len(t)
    for m in itertools.product(range(n), repeat=9):
        rows = [t[m[0]][m[1]][m[2]], t[m[3]][m[4]][m[5]], t[m[6]][m[7]][m[8]]]
        cols = [t[m[0]][m[3]][m[6]], t[m[1]][m[4]][m[7]], t[m[2]][m[5]][m[8]]]
        if t[rows[0]][rows[1]][rows[2]] != t[cols[0]][cols[1]][cols[2]]:
            return False
    return True


def regular_matrix(t, kind, x, y):
    """Column z holds the basis vector of the image of z."""
    n = len(t)
    m = [[0] * n for _ in range(n)]
    for z in range(n):
        img = {"left": t[x][y][z], "right": t[z][x][y], "middle": t[x][z][y]}[kind]
        m[img][z] = 1
    return m


def relabel(t, h):
    n = len(t)
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for x, y, z in itertools.product(range(n), repeat=3):
        out[h[x]][h[y]][h[z]] = h[t[x][y][z]]
    return out


def flat(t):
    return [v for plane in t for row in plane for v in row]


def canonical(t):
    n = len(t)
    return min(flat(relabel(t, h)) for h in itertools.permutations(range(n)))


def isomorphic(t1, t2):
    n = len(t1)
    if n != len(t2):
        return False
    return any(relabel(t1, h) == t2 for h in itertools.permutations(range(n)))


def binary_associative(b):
    n = len(b)
    return all(b[b[x][y]][z] == b[x][b[y][z]] for x, y, z in itertools.product(range(n), repeat=3))


def b_derived(b, elem):
    n = len(b)
    return [[[b[b[b[x][y]][z]][elem] for z in range(n)] for y in range(n)] for x in range(n)]


def center(b):
    n = len(b)
    return {c for c in range(n) if all(b[c][x] == b[x][c] for x in range(n))}


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def latin_squares(n):
    out = []
    for rows in itertools.product(itertools.permutations(range(n)), repeat=n):
        if all(len({r[c] for r in rows}) == n for c in range(n)):
            out.append([list(r) for r in rows])
    return out


def latin_cubes(n):
    """All n x n x n cubes whose every line is a permutation.

    Layers are latin squares chosen one at a time; a layer is compatible
    when no (y, z) cell repeats a value used by an earlier layer.
    """
    squares = latin_squares(n)

    def rec(chosen, used):
        if len(chosen) == n:
            yield [[list(r) for r in layer] for layer in chosen]
            return
        for sq in squares:
            if any(sq[y][z] in used[y][z] for y in range(n) for z in range(n)):
                continue
            for y in range(n):
                for z in range(n):
                    used[y][z].add(sq[y][z])
            yield from rec(chosen + [sq], used)
            for y in range(n):
                for z in range(n):
                    used[y][z].discard(sq[y][z])

    yield from rec([], [[set() for _ in range(n)] for _ in range(n)])


def ternary_group_classes(n):
    """Canonical forms of ternary groups of order n, by scanning latin cubes.

    A finite ternary group has every one-slot map bijective, so it is a
    latin cube; this scan needs no Gluskin-Hosszu input.
    """
    return {tuple(canonical(t)) for t in latin_cubes(n) if associative(t)}
