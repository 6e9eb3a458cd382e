"""Independent brute-force reference implementations.

Everything here works on plain lists of 0/1 lists and never touches the
package's bitset representation, so the two code paths can be compared.
"""

from itertools import product


def bool_product(a, b):
    """Triple-loop boolean matrix product."""
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for m in range(n):
                if a[i][m] and b[m][j]:
                    out[i][j] = 1
                    break
    return out


def fold_word(matrices):
    acc = matrices[0]
    for m in matrices[1:]:
        acc = bool_product(acc, m)
    return acc


def freeze(matrix):
    return tuple(tuple(row) for row in matrix)


def all_words_upto(generators, k):
    """Matrices of every word of length 1..k, as a set of frozen matrices."""
    out = set()
    for length in range(1, k + 1):
        for word in product(range(len(generators)), repeat=length):
            out.add(freeze(fold_word([generators[g] for g in word])))
    return out


def pairwise_closure(generators):
    """Closure under products of every known pair, iterated to a fixpoint."""
    closed = {freeze(g) for g in generators}
    while True:
        fresh = set()
        for a in closed:
            for b in closed:
                p = freeze(bool_product([list(r) for r in a], [list(r) for r in b]))
                if p not in closed:
                    fresh.add(p)
        if not fresh:
            return closed
        closed |= fresh


def column(matrices, l, j):
    return tuple(m[l][j] for m in matrices)


def person_hierarchy_cell(matrices, l, i, j):
    """Containment of i in j seen from l, by scanning the plane columns."""
    ci = column(matrices, l, i)
    if not any(ci):
        return 0
    cj = column(matrices, l, j)
    return int(all(a <= b for a, b in zip(ci, cj)))


def is_transitive(cells):
    n = len(cells)
    for i in range(n):
        for m in range(n):
            if cells[i][m]:
                for j in range(n):
                    if cells[m][j] and not cells[i][j]:
                        return False
    return True


def covering_pairs(strict):
    """Transitive reduction of a strict order given as a 0/1 matrix."""
    n = len(strict)
    out = set()
    for a in range(n):
        for b in range(n):
            if strict[a][b] and not any(strict[a][c] and strict[c][b]
                                        for c in range(n)):
                out.add((a, b))
    return out


def profiles_match(generators, i, j):
    """Structural equivalence of i and j by full profile comparison."""
    for g in generators:
        n = len(g)
        for m in range(n):
            if m in (i, j):
                continue
            if g[i][m] != g[j][m] or g[m][i] != g[m][j]:
                return False
        if g[i][j] != g[j][i] or g[i][i] != g[j][j]:
            return False
    return True


def se_partition(generators):
    """Structural-equivalence classes as a set of frozensets of indices."""
    n = len(generators[0])
    classes = []
    for i in range(n):
        for cls in classes:
            if profiles_match(generators, i, next(iter(cls))):
                cls.add(i)
                break
        else:
            classes.append({i})
    return {frozenset(c) for c in classes}


def random_matrix(rng, n, density=0.5):
    return [[1 if rng.random() < density else 0 for _ in range(n)]
            for _ in range(n)]
