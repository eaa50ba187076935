"""Independent reference implementations used only by the tests.

They work on plain integers / parity lists and share no code with the
package, so agreement is evidence rather than tautology.
"""
import itertools
from bisect import bisect_right


def schensted(word):
    """Classical row insertion on integers: bump the least entry > x."""
    rows = []
    for x in word:
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return rows


def is_row(seq, parity):
    return all(a < b or (a == b and parity[a] == 0) for a, b in zip(seq, seq[1:]))


def is_column(seq, parity):
    return all(b < a or (a == b and parity[a] == 1) for a, b in zip(seq, seq[1:]))


def greene_bruteforce(word, k, parity, kind="row"):
    """Try every assignment of positions to k labelled sequences or none."""
    test = is_row if kind == "row" else is_column
    best = 0
    n = len(word)
    for labels in itertools.product(range(k + 1), repeat=n):
        used = sum(1 for l in labels if l)
        if used <= best:
            continue
        ok = True
        for s in range(1, k + 1):
            seq = [word[i] for i in range(n) if labels[i] == s]
            if not test(seq, parity):
                ok = False
                break
        if ok:
            best = used
    return best


def naive_fillings(outer, inner, parity):
    """All fillings of outer/inner by range(len(parity)), filtered afterwards."""
    cells = [(i, j) for i, v in enumerate(outer) for j in range(inner[i] if i < len(inner) else 0, v)]
    out = []
    for values in itertools.product(range(len(parity)), repeat=len(cells)):
        f = dict(zip(cells, values))
        good = True
        for (i, j), a in f.items():
            b = f.get((i, j + 1))
            if b is not None and not (a < b or (a == b and parity[a] == 0)):
                good = False
                break
            b = f.get((i + 1, j))
            if b is not None and not (a < b or (a == b and parity[a] == 1)):
                good = False
                break
        if good:
            out.append(tuple(f[c] for c in cells))
    return out


def lr_lattice(lam, mu, nu):
    """Classical LR coefficient: semistandard fillings of lam/mu of content nu
    whose reverse reading word is a lattice word."""
    n = sum(lam) - sum(mu)
    if sum(nu) != n:
        return 0
    mu = list(mu) + [0] * (len(lam) - len(mu))
    rows = [(mu[i], lam[i]) for i in range(len(lam))]
    cells = [(i, j) for i, (a, b) in enumerate(rows) for j in range(a, b)]
    count = 0
    letters = range(len(nu))
    for values in itertools.product(letters, repeat=n):
        if any(values.count(v) != nu[v] for v in letters):
            continue
        f = dict(zip(cells, values))
        ok = all(
            (f.get((i, j + 1)) is None or f[(i, j)] <= f[(i, j + 1)])
            and (f.get((i + 1, j)) is None or f[(i, j)] < f[(i + 1, j)])
            for (i, j) in cells
        )
        if not ok:
            continue
        # reverse reading: rows top to bottom, each right to left
        seen = [0] * len(nu)
        lattice = True
        for i in range(len(lam)):
            for j in range(rows[i][1] - 1, rows[i][0] - 1, -1):
                v = f[(i, j)]
                seen[v] += 1
                if v and seen[v] > seen[v - 1]:
                    lattice = False
        if lattice:
            count += 1
    return count
