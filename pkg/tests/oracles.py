"""Brute-force reference computations, independent of the package internals."""

from itertools import permutations
from math import gcd


def admissible_pairs(max_n):
    out = []
    for n in range(3, max_n + 1):
        for k in range(1, n - 1):
            if gcd(n, k) == 1 and gcd(n, k + 1) == 1:
                out.append((n, k))
    return out


def series_class(letters, n):
    """Degree <= 2 noncommutative series product, as {(I, J): coeff} with I < J.

    letters: iterable of (index, sign). Index 0 is dropped. Series are dicts
    keyed by tuples of generator indices.
    """
    s = {(): 1}
    for i, e in letters:
        if i % n == 0:
            continue
        i %= n
        f = {(): 1, (i,): 1} if e == 1 else {(): 1, (i,): -1, (i, i): 1}
        t = {}
        for a, x in s.items():
            for b, y in f.items():
                m = a + b
                if len(m) <= 2:
                    t[m] = t.get(m, 0) + x * y
        s = {m: v for m, v in t.items() if v}
    quad = {m: v for m, v in s.items() if len(m) == 2}
    return {(i, j): v for (i, j), v in quad.items() if i < j}, quad


def enumerated_coefficients(n, k):
    """c_{I,J} by enumerating j = 1..c-1 for both congruence cases and adding."""
    c = next(x for x in range(1, n) if (x * (k + 1)) % n == 1)
    out = {}
    for I in range(1, n):
        for J in range(I + 1, n):
            v = 0
            for j in range(1, c):
                if (J - I - j * (k + 1)) % n == 0:
                    v += 1
                if (J - I - (j * (k + 1) - 1)) % n == 0:
                    v -= 1
            if v:
                out[(I, J)] = v
    return out


def t_sum(n, coeffs):
    """sum_r t_r sum_i [E_i]^[E_{i+r}] as {(I, J): coeff}, E_0 = 0."""
    out = {}
    for r, t in coeffs.items():
        for i in range(n):
            a, b = i % n, (i + r) % n
            if a == 0 or b == 0 or a == b:
                continue
            s = t
            if a > b:
                a, b, s = b, a, -s
            out[(a, b)] = out.get((a, b), 0) + s
    return {key: v for key, v in out.items() if v}


def pfaffian(m):
    """Pfaffian by expansion along the first row (fine up to size ~10)."""
    size = len(m)
    if size == 0:
        return 1
    if size % 2:
        return 0
    total = 0
    for j in range(1, size):
        if m[0][j] == 0:
            continue
        keep = [x for x in range(size) if x not in (0, j)]
        minor = [[m[a][b] for b in keep] for a in keep]
        total += (-1) ** (j + 1) * m[0][j] * pfaffian(minor)
    return total


def leibniz_det(m):
    size = len(m)
    total = 0
    for perm in permutations(range(size)):
        inv = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        prod = 1
        for r, c in enumerate(perm):
            prod *= m[r][c]
            if not prod:
                break
        total += (-1) ** inv * prod
    return total


def dense(n, terms):
    m = [[0] * (n - 1) for _ in range(n - 1)]
    for (i, j), v in terms.items():
        m[i - 1][j - 1] = v
        m[j - 1][i - 1] = -v
    return m


def _fold(n, coeffs):
    # move T_r with r > (n-1)/2 to -T_{n-r}
    out = {}
    for r, t in coeffs.items():
        r %= n
        if r == 0:
            continue
        if r > (n - 1) // 2:
            r, t = n - r, -t
        out[r] = out.get(r, 0) + t
    return {r: t for r, t in out.items() if t}


def family_clauses(n):
    """(name, k, expected t-coefficients) for every special-k family that applies at n."""
    half = (n - 1) // 2
    out = [
        ("k=1", 1, {r: (-1) ** r for r in range(1, half + 1)}),
        ("k=2", 2, {r: (1 if r % 3 == 0 else -1) for r in range(1, half + 1)
                    if r % 3 == 0 or (r - n) % 3 == 0}),
        ("k=n-2", n - 2, {1: -1}),
        ("k=n-3", n - 3, {r: (-1) ** (r - 1) for r in range(2, half + 1)}),
        ("k=(n-1)/2", half, {half: -1}),
        ("k=(n-3)/2", (n - 3) // 2, _fold(n, {half: 1, 1: -1})),
    ]
    if n % 3 == 2:
        k = (n - 2) // 3
        out.append(("n=2 mod 3", k, _fold(n, {k + 1: 1, k: -1})))
    if n % 3 == 1:
        k = (2 * n - 2) // 3
        out.append(("n=1 mod 3", k, _fold(n, {(k + 2) // 2: 1, k // 2: -1})))
    return [(name, k, t) for name, k, t in out
            if 1 <= k <= n - 2 and (n, k) in admissible_pairs(n)]
