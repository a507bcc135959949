"""Cross-verification sweep over all valid (n, k).

Each pair is checked independently; ``check_pair`` returns one result per
named property and never raises on a failed property.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import covering, homology, modsym, params, words
from .homology import H1Class, WedgeClass


@dataclass
class PairReport:
    n: int
    k: int
    results: list = field(default_factory=list)  # (property, ok)
    seconds: float = 0.0

    @property
    def ok(self):
        return all(ok for _, ok in self.results)

    def failures(self):
        return [name for name, ok in self.results if not ok]


def eps_matrix(p):
    """Matrix of epsilon on H_1; column i-1 is the image of [E_i]."""
    m = np.zeros((p.n - 1, p.n - 1), dtype=np.int64)
    for i in range(1, p.n):
        for j, c in homology.eps_basis_image(p, i).items():
            m[j - 1, i - 1] = c
    return m


def _matpow(m, e):
    out = np.eye(m.shape[0], dtype=np.int64)
    while e:
        if e & 1:
            out = out @ m
        m = m @ m
        e >>= 1
    return out


def eps_order(p):
    """Multiplicative order of epsilon on H_1, assuming it divides n; None otherwise.

    Every power of epsilon sends [E_i] to [E_{i+j}] - [E_j], so int64 is exact.
    """
    m = eps_matrix(p)
    ident = np.eye(p.n - 1, dtype=np.int64)
    if not np.array_equal(_matpow(m, p.n), ident):
        return None
    order = p.n
    for q in _prime_factors(p.n):
        while order % q == 0 and np.array_equal(_matpow(m, order // q), ident):
            order //= q
    return order


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def three_routes(p):
    """(closed form, Magnus class of L^{-1}, negated ordering-rule class of L)."""
    _, L = covering.lift_boundary_loop(p)
    return (
        homology.closed_form_delta(p),
        words.magnus_class(L.inverse()),
        -words.ordering_class(L),
    )


def _abelianize(w):
    return H1Class(w.n, words.strip_placeholders(w).exponent_sums()[1:])


def check_pair(n, k, modsym_depth=1):
    """Run every property on one pair. ``modsym_depth`` 0 skips the shift-law sample."""
    t0 = time.perf_counter()
    rep = PairReport(n, k)
    add = rep.results.append
    p = params.validate(n, k)

    s = params.s_set(p)
    kinv = p.k_inverse
    add(("params", p.c * (k + 1) % n == 1 and len(s) == p.c - 1 and sum(p.inertia) % n == 0
         and params.fermat_auto_image(p, 1, n - kinv) == 0))

    table = covering.gluing_table(p)
    add(("gluing", all(
        sorted(table.permutation(kind)) == list(range(n)) for kind in covering.EdgeKind
    ) and table.target(0, covering.EdgeKind.ALPHA) == (-(k + 1)) % n))

    log, L = covering.lift_boundary_loop(p)
    step = n - k - 1
    add(("lift_vs_formula", L == covering.boundary_word_formula(p)
         and log.sheets() == [(j * step) % n for j in range(n)]
         and len(log.cancellations) == 2 * n))

    sums = L.exponent_sums()
    counts = {}
    for l in L:
        counts[(l.index, l.sign)] = counts.get((l.index, l.sign), 0) + 1
    add(("word_shape", not any(sums) and len(counts) == 2 * n
         and all(v == 1 for v in counts.values())
         and words.free_reduce(L) == L
         and len(words.strip_placeholders(L)) == 2 * n - 2))

    add(("between_formula", all(
        words.between(L, i) == covering.between_formula(p, i) for i in range(n)
    )))

    closed = homology.closed_form_delta(p)
    magnus = words.magnus_class(L.inverse())
    ordering = -words.ordering_class(L)
    add(("three_routes", closed == magnus == ordering))

    quad = np.array(words.magnus_expansion(L).quadratic)
    add(("magnus_antisymmetric", np.array_equal(quad, -quad.T)))

    add(("pfaffian", homology.pfaffian_check(p, closed) == 1))

    half = (n - 1) // 2
    td = homology.t_decomposition(p)
    Ts = {r: homology.expand_T(p, r) for r in range(1, n)}
    refl = all(
        homology.difference_coefficient(p, n - r) == -homology.difference_coefficient(p, r)
        for r in range(1, n)
    )
    add(("t_decomposition", td.recompose(p) == closed and refl
         and all(Ts[n - r] == -Ts[r] for r in range(1, n))))

    add(("eps_invariance", all(homology.eps_wedge(p, Ts[r]) == Ts[r] for r in range(1, half + 1))
         and homology.eps_wedge(p, closed) == closed))
    add(("eps_order", eps_order(p) == n and all(
        homology.eps_h1(p, H1Class.basis(n, i)) == homology.eps_basis_image(p, i)
        for i in range(n)
    )))

    add(("fermat_image", all(
        homology.fermat_image(p, i, j) == _abelianize(words.Word(
            [((j * k) % n, 1), ((i + j * k) % n, -1), (i % n, 1)], n))
        for i in range(n) for j in range(min(n, 3))
    ) and homology.fermat_image(p, 0, 0).is_zero()))

    ok = True
    units = [j for j in (2, 3, n - 1) if gcd(j, n) == 1 and 1 < j < n]
    for j in units:
        jinv = pow(j, -1, n)
        ok &= homology.substitute(p, homology.substitute(p, closed, j), jinv) == closed
        ok &= homology.substitute(p, closed, j) == words.magnus_class(
            words.relabel(L, j).inverse())
        inertia = (j, (j * k) % n, (-j * (k + 1)) % n)
        ok &= homology.substitute(p, homology.general_inertia_delta(n, inertia), j) == closed
    add(("substitution", bool(ok)))

    add(("modsym", modsym_checks(p, depth=modsym_depth)))

    rep.seconds = time.perf_counter() - t0
    return rep


def modsym_checks(p, depth=1):
    n, k = p.n, p.k
    S = modsym.SymbolCombination
    ok = modsym.cycle_space_rank(p) == n - 1 and abs(modsym.rho_basis_det(p)) == 1
    # [A^r tau] runs from A^r . 1 = 2r + 1 to A^r . 0 = 2r
    for r in range(n):
        g = modsym.mat_mul(modsym.mat_pow(modsym.A, r), modsym.TAU)
        ok &= modsym.endpoints(g) == (2 * r + 1, 2 * r)
    for r in range(1, n):
        rho = S.rho(n, r)
        ok &= modsym.is_cycle(p, rho) and modsym.boundary(p, rho).is_zero()
        ok &= modsym.rho_to_E(p, rho) == H1Class.basis(n, r)
        ok &= modsym.E_to_symbols(p, H1Class.basis(n, r)) == rho
        shifted = modsym.rho_to_E(p, rho.shift(1))
        ok &= shifted == homology.eps_h1(p, H1Class.basis(n, r))
    for r in range(n):
        red = modsym.reduce_symbols(p, S.plain_symbol(n, r))
        ok &= red.is_reduced() and sum(red.tau) == 0
    a, b = modsym.GammaWord.power("A", 1), modsym.GammaWord.power("B", 1)
    comm = modsym.commutator(a, b)
    ok &= comm.matrix() == modsym.mat_mul(
        modsym.mat_mul(modsym.A, modsym.B),
        modsym.mat_mul(modsym.mat_inverse(modsym.A), modsym.mat_inverse(modsym.B)),
    )
    for g in modsym.phi_generators(p) + [comm]:
        ok &= modsym.coset_of(p, g) == 0 == modsym.coset_walk(p, g)
    if depth:
        kinv = p.k_inverse
        for r in range(0, n, max(1, n // 5)):
            for s in range(0, n, max(1, n // 5)):
                base = modsym.coset_of(p, modsym.GammaWord([("A", r), ("B", s)]))
                for m in (1, n - 1):
                    other = modsym.GammaWord([("A", r + m), ("B", s - m * kinv)])
                    ok &= modsym.coset_of(p, other) == base
    return bool(ok)


def substitution_remark_sign():
    """Sign s with relabel_3(-[E1]^[E2] - [E2]^[E3] - [E3]^[E4]) = s * Delta_{5,2}."""
    p = params.validate(5, 2)
    element = WedgeClass(5, {(1, 2): -1, (2, 3): -1, (3, 4): -1})
    relabelled = homology.substitute(p, element, 3)
    delta = homology.closed_form_delta(p)
    if relabelled == delta:
        return 1
    if relabelled == -delta:
        return -1
    return 0


def _check(args):
    return check_pair(*args)


def sweep(max_n, jobs=1, min_n=3):
    pairs = params.valid_pairs(max_n, min_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check, pairs, chunksize=4))
    return [check_pair(n, k) for n, k in pairs]
