"""Curve parameters for W_{n,k}: v^n = u(1-u)^k and residue arithmetic mod n."""

from dataclasses import dataclass
from math import gcd

from .errors import RamificationError, RangeError


@dataclass(frozen=True)
class Residue:
    """Canonical representative of a class in Z/nZ.

    Compares and hashes like its integer representative, so ``Residue(7, 5) == 2``
    and residues can be mixed with ints in sets and dict keys.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise RangeError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def inverse(self):
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class CurveParams:
    n: int
    k: int
    c: int
    g: int
    inertia: tuple

    def res(self, x) -> Residue:
        return Residue(int(x), self.n)

    @property
    def k_inverse(self) -> int:
        """k^{-1} mod n, the B-exponent shift in the coset law."""
        return pow(self.k, -1, self.n)


def validate(n: int, k: int) -> CurveParams:
    """Check (n, k) and derive c = (k+1)^{-1} mod n, the genus and the inertia type.

    Raises RangeError for n < 3 or k outside [1, n-2], RamificationError when
    gcd(n, k(k+1)) != 1 (this covers every even n).
    """
    n, k = int(n), int(k)
    if n < 3:
        raise RangeError(f"n must be at least 3, got {n}")
    if not 1 <= k <= n - 2:
        raise RangeError(f"k must lie in [1, {n - 2}] for n = {n}, got {k}")
    g = gcd(n, k * (k + 1))
    if g != 1:
        raise RamificationError(n, k, g)
    c = pow(k + 1, -1, n)
    inertia = (1 % n, k % n, (-(k + 1)) % n)
    return CurveParams(n=n, k=k, c=c, g=(n - 1) // 2, inertia=inertia)


def valid_pairs(max_n: int, min_n: int = 3):
    """All valid (n, k) with min_n <= n <= max_n, in lexicographic order."""
    return [
        (n, k)
        for n in range(max(min_n, 3), max_n + 1)
        for k in range(1, n - 1)
        if gcd(n, k * (k + 1)) == 1
    ]


def s_set(p: CurveParams) -> set:
    """The residues j(k+1) mod n for 1 <= j <= c-1."""
    return {p.res(j * (p.k + 1)) for j in range(1, p.c)}


def fermat_auto_image(p: CurveParams, i, j) -> Residue:
    """Power of epsilon that the Fermat automorphism eps_0^i eps_1^j descends to.

    From u = x^n, v = x y^k: eps_0 scales v by zeta, eps_1 by zeta^k.
    """
    return p.res(int(i) + p.k * int(j))
