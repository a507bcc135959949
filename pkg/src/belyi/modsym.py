"""Modular symbols for W_k = X_{Phi_k}, Phi_k a subgroup of Gamma(2) of index n.

Gamma(2)/{+-I} is free on
    A = [[1, 2], [0, 1]],   B = [[1, 0], [2, 1]].
The right cosets of Phi_k are Phi_k A^r, r in Z/n, and Phi_k A^r B^s = Phi_k A^{r+ks}.
Modular symbols are combinations of [A^r tau] (free basis) and, before
reduction, [A^r], with [A^0] = [{0, i oo}] taken to be 0.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotACycleError, UnreducedError
from .homology import H1Class
from .linalg import integer_det, integer_rank
from .params import CurveParams, Residue

A = ((1, 2), (0, 1))
B = ((1, 0), (2, 1))
TAU = ((0, -1), (1, -1))
IDENTITY = ((1, 0), (0, 1))

INFINITY = None  # the cusp i*oo


def mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][t] * y[t][j] for t in range(2)) for j in range(2)) for i in range(2)
    )


def mat_inverse(x):
    """Inverse of a determinant-one integer matrix."""
    (a, b), (c, d) = x
    if a * d - b * c != 1:
        raise ValueError("matrix is not in SL_2(Z)")
    return ((d, -b), (-c, a))


def mat_pow(x, e):
    if e < 0:
        x, e = mat_inverse(x), -e
    out = IDENTITY
    for _ in range(e):
        out = mat_mul(out, x)
    return out


def act(g, z):
    """Mobius action of g on a cusp z in Q or INFINITY."""
    (a, b), (c, d) = g
    if z is INFINITY:
        num, den = a, c
    else:
        z = Fraction(z)
        num, den = a * z.numerator + b * z.denominator, c * z.numerator + d * z.denominator
    if den == 0:
        return INFINITY
    return Fraction(num, den)


def endpoints(g):
    """(g . 0, g . i oo), the start and end cusps of the symbol [g]."""
    return act(g, 0), act(g, INFINITY)


class GammaWord:
    """Word in A^{+-1}, B^{+-1}, stored as syllables (generator, nonzero exponent)."""

    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        out = []
        for gen, e in syllables:
            if gen not in ("A", "B"):
                raise ValueError(f"unknown generator {gen!r}")
            e = int(e)
            if e == 0:
                continue
            if out and out[-1][0] == gen:
                e += out.pop()[1]
                if e == 0:
                    continue
            out.append((gen, e))
        self.syllables = tuple(out)

    @classmethod
    def parse(cls, text):
        """Parse 'A^2 B^-3 a b' (lower case letters are inverses)."""
        syl = []
        for gen, exp in re.findall(r"([ABab])(?:\^(-?\d+))?", text.replace(" ", "")):
            e = int(exp) if exp else 1
            syl.append((gen.upper(), -e if gen.islower() else e))
        return cls(syl)

    @classmethod
    def power(cls, gen, e):
        return cls([(gen, e)])

    def __mul__(self, other):
        return GammaWord(self.syllables + other.syllables)

    def inverse(self):
        return GammaWord([(g, -e) for g, e in reversed(self.syllables)])

    def exponent_sums(self):
        a = sum(e for g, e in self.syllables if g == "A")
        b = sum(e for g, e in self.syllables if g == "B")
        return a, b

    def matrix(self):
        out = IDENTITY
        for g, e in self.syllables:
            out = mat_mul(out, mat_pow(A if g == "A" else B, e))
        return out

    def __eq__(self, other):
        return isinstance(other, GammaWord) and self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)

    def __repr__(self):
        return f"GammaWord({self})"


def commutator(x: GammaWord, y: GammaWord) -> GammaWord:
    return x * y * x.inverse() * y.inverse()


def phi_generators(p: CurveParams):
    """A B^{-(k^{-1} mod n)}, A^n, B^n; together with Gamma(2)' they generate Phi_k."""
    return [
        GammaWord([("A", 1), ("B", -p.k_inverse)]),
        GammaWord.power("A", p.n),
        GammaWord.power("B", p.n),
    ]


class Coset(Residue):
    """The right coset Phi_k A^r, stored as r mod n."""

    def __repr__(self):
        return f"Phi_k A^{self.value}"


def coset_of(p: CurveParams, w: GammaWord) -> Coset:
    a, b = w.exponent_sums()
    return Coset(a + p.k * b, p.n)


def coset_walk(p: CurveParams, w: GammaWord) -> Coset:
    """Same coset, found by letting each letter act on the coset index in turn."""
    r = 0
    step = {"A": 1, "B": p.k}
    for g, e in w.syllables:
        for _ in range(abs(e)):
            r = (r + (step[g] if e > 0 else -step[g])) % p.n
    return Coset(r, p.n)


# -- symbols -----------------------------------------------------------------------


class SymbolCombination:
    """Integer combination of [A^r tau] and (unreduced) [A^r], r in Z/n."""

    __slots__ = ("n", "tau", "plain")

    def __init__(self, n, tau=None, plain=None):
        self.n = n
        self.tau = tuple(tau) if tau is not None else (0,) * n
        self.plain = tuple(plain) if plain is not None else (0,) * n
        if len(self.tau) != n or len(self.plain) != n:
            raise ValueError("coefficient vectors must have length n")

    @classmethod
    def tau_symbol(cls, n, r, coeff=1):
        v = [0] * n
        v[int(r) % n] = coeff
        return cls(n, tau=v)

    @classmethod
    def plain_symbol(cls, n, r, coeff=1):
        v = [0] * n
        v[int(r) % n] = coeff
        return cls(n, plain=v)

    @classmethod
    def rho(cls, n, r):
        """rho_r = [A^r tau] - [tau]."""
        return cls.tau_symbol(n, r) - cls.tau_symbol(n, 0)

    def is_reduced(self):
        return not any(self.plain)

    def __add__(self, other):
        if other.n != self.n:
            raise TypeError("symbol combinations for different n")
        return SymbolCombination(
            self.n,
            [a + b for a, b in zip(self.tau, other.tau)],
            [a + b for a, b in zip(self.plain, other.plain)],
        )

    def __neg__(self):
        return SymbolCombination(self.n, [-a for a in self.tau], [-a for a in self.plain])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return SymbolCombination(self.n, [c * a for a in self.tau], [c * a for a in self.plain])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymbolCombination):
            return NotImplemented
        return (self.n, self.tau, self.plain) == (other.n, other.tau, other.plain)

    def __hash__(self):
        return hash((self.n, self.tau, self.plain))

    def __str__(self):
        parts = [(f"[A^{r}τ]" if r else "[τ]", c) for r, c in enumerate(self.tau) if c]
        parts += [(f"[A^{r}]", c) for r, c in enumerate(self.plain) if c]
        if not parts:
            return "0"
        out = []
        for i, (sym, c) in enumerate(parts):
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else ("" if i == 0 else "+")
            out.append(f"{sign}{mag}{sym}" if i == 0 else f" {sign} {mag}{sym}")
        return "".join(out)

    def __repr__(self):
        return f"SymbolCombination(n={self.n}, {self})"

    def shift(self, m=1):
        """Left multiplication by A^m: [A^r g] -> [A^{r+m} g]."""
        n = self.n
        return SymbolCombination(
            n,
            [self.tau[(r - m) % n] for r in range(n)],
            [self.plain[(r - m) % n] for r in range(n)],
        )


def reduced_plain_symbol(p: CurveParams, r) -> tuple:
    """[A^r] over the [A^s tau] basis, by [A^r] = [A^{r-1}] + [A^{r-1} tau] - [A^{r-k} tau]."""
    n = p.n
    v = [0] * n
    for s in range(1, int(r) % n + 1):
        v[(s - 1) % n] += 1
        v[(s - p.k) % n] -= 1
    return tuple(v)


def reduce_symbols(p: CurveParams, s: SymbolCombination) -> SymbolCombination:
    n = p.n
    tau = list(s.tau)
    for r, c in enumerate(s.plain):
        if c:
            for t, x in enumerate(reduced_plain_symbol(p, r)):
                tau[t] += c * x
    return SymbolCombination(n, tau)


@dataclass(frozen=True)
class CuspDivisor:
    """Multiplicities on the cusps over u = 0, 1, oo (the points eta_0, eta_1, eta_oo)."""

    eta0: int = 0
    eta1: int = 0
    eta_inf: int = 0

    def is_zero(self):
        return self.eta0 == self.eta1 == self.eta_inf == 0

    def as_tuple(self):
        return (self.eta0, self.eta1, self.eta_inf)


def boundary(p: CurveParams, s: SymbolCombination) -> CuspDivisor:
    """End minus start of each symbol; [A^r tau] runs from the eta_1 cusp to the eta_0 cusp.

    tau . 0 = 1 and tau . i oo = 0, and total ramification sends every A^r . 1
    to the cusp of 1 and every A^r . 0 to the cusp of 0.
    """
    if not s.is_reduced():
        raise UnreducedError(f"boundary needs a reduced combination, got {s}")
    total = sum(s.tau)
    return CuspDivisor(eta0=total, eta1=-total, eta_inf=0)


def is_cycle(p: CurveParams, s: SymbolCombination) -> bool:
    return boundary(p, s).is_zero()


def rho_coordinates(p: CurveParams, s: SymbolCombination) -> tuple:
    """(a_1, ..., a_{n-1}) with s = sum a_r rho_r; s must be a reduced cycle."""
    if not is_cycle(p, s):
        raise NotACycleError(f"{s} has boundary {boundary(p, s).as_tuple()}")
    return s.tau[1:]


def rho_to_E(p: CurveParams, s: SymbolCombination) -> H1Class:
    """Homology class with rho_i read as [E_i]."""
    return H1Class(p.n, rho_coordinates(p, s))


def E_to_symbols(p: CurveParams, v: H1Class) -> SymbolCombination:
    out = SymbolCombination(p.n)
    for i, c in v.items():
        out = out + c * SymbolCombination.rho(p.n, i)
    return out


def boundary_matrix(p: CurveParams):
    """3 x n matrix of the boundary map on the [A^r tau] basis."""
    cols = [boundary(p, SymbolCombination.tau_symbol(p.n, r)).as_tuple() for r in range(p.n)]
    return [[col[i] for col in cols] for i in range(3)]


def cycle_space_rank(p: CurveParams) -> int:
    return p.n - integer_rank(boundary_matrix(p))


def rho_basis_det(p: CurveParams) -> int:
    """det of [tau], rho_1, ..., rho_{n-1} in [A^r tau] coordinates; +-1 iff they form a Z-basis."""
    rows = [SymbolCombination.tau_symbol(p.n, 0).tau]
    rows += [SymbolCombination.rho(p.n, r).tau for r in range(1, p.n)]
    return integer_det(rows)
