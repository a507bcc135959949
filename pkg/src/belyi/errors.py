"""Exception hierarchy shared by every module."""


class BelyiError(ValueError):
    """Base class for invalid input to any computation in this package."""


class RangeError(BelyiError):
    pass


class RamificationError(BelyiError):
    """(n, k) violates gcd(n, k(k+1)) = 1, so the cover is not totally ramified."""

    def __init__(self, n, k, g):
        self.n, self.k, self.gcd = n, k, g
        msg = f"gcd(n, k(k+1)) = gcd({n}, {k * (k + 1)}) = {g}, expected 1"
        if n % 2 == 0:
            msg += f"; n = {n} is even and k(k+1) is always even"
        super().__init__(msg)


class MultiplicityError(BelyiError):
    pass


class NotACommutatorError(BelyiError):
    def __init__(self, exponent_sums):
        self.exponent_sums = exponent_sums
        super().__init__(
            f"word is not in the commutator subgroup; exponent sums {exponent_sums}"
        )


class NotCoprimeError(BelyiError):
    pass


class UnsupportedInertiaError(BelyiError):
    pass


class UnreducedError(BelyiError):
    pass


class NotACycleError(BelyiError):
    pass
