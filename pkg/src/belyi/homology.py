"""Integer homology H_1 and its exterior square for W_{n,k}.

H_1 has basis [E_1], ..., [E_{n-1}]; [E_0] = 0. Classes in the exterior square
are stored sparsely over the basis [E_I] ^ [E_J], I < J.
"""

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprimeError, RangeError, UnsupportedInertiaError, BelyiError
from .linalg import integer_det
from .params import CurveParams, validate


class H1Class:
    """Integer vector over [E_1], ..., [E_{n-1}]."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        if coords is None:
            coords = (0,) * (n - 1)
        coords = tuple(int(x) for x in coords)
        if len(coords) != n - 1:
            raise ValueError(f"expected {n - 1} coordinates, got {len(coords)}")
        self.coords = coords

    @classmethod
    def _trusted(cls, n, coords):
        out = object.__new__(cls)
        out.n = n
        out.coords = tuple(coords)
        return out

    @classmethod
    def basis(cls, n, i, coeff=1):
        """coeff * [E_i]; index 0 mod n gives the zero class."""
        i = int(i) % n
        v = [0] * (n - 1)
        if i:
            v[i - 1] = int(coeff)
        return cls._trusted(n, v)

    def __getitem__(self, i):
        """Coefficient of [E_i] (0 for i = 0)."""
        i = int(i) % self.n
        return self.coords[i - 1] if i else 0

    def items(self):
        return [(i + 1, c) for i, c in enumerate(self.coords) if c]

    def _check(self, other):
        if not isinstance(other, H1Class) or other.n != self.n:
            raise TypeError("H1Class operands must share n")

    def __add__(self, other):
        self._check(other)
        return H1Class._trusted(self.n, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return H1Class._trusted(self.n, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return H1Class._trusted(self.n, [-a for a in self.coords])

    def __mul__(self, scalar):
        return H1Class(self.n, [scalar * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, H1Class):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, self.coords))

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        return _format_terms([(f"[E_{i}]", c) for i, c in self.items()], " ")

    def __repr__(self):
        return f"H1Class(n={self.n}, {self})"


class WedgeClass:
    """Sparse integer element of the exterior square of H_1.

    Keys are pairs (I, J) with 1 <= I < J <= n-1; zero coefficients are never
    stored. The constructor accepts arbitrary index pairs and normalizes them:
    indices are reduced mod n, index 0 and repeated indices drop out, and
    (J, I) is rewritten as -(I, J).
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        acc = {}
        for (i, j), c in (terms or {}).items():
            _accumulate(acc, n, i, j, c)
        self.terms = {key: c for key, c in acc.items() if c}

    @classmethod
    def from_triples(cls, n, triples):
        """Sum c [E_i] ^ [E_j] over (i, j, c); indices are taken mod n."""
        acc = {}
        get = acc.get
        for i, j, c in triples:
            i %= n
            j %= n
            if not c or not i or not j or i == j:
                continue
            if i > j:
                i, j, c = j, i, -c
            acc[(i, j)] = get((i, j), 0) + c
        return _raw(n, acc)

    @classmethod
    def from_canonical(cls, n, terms):
        """Trusted constructor: keys already (I, J) with 1 <= I < J < n."""
        return _raw(n, terms)

    @classmethod
    def wedge(cls, u: H1Class, v: H1Class):
        if u.n != v.n:
            raise TypeError("H1Class operands must share n")
        return cls.from_triples(
            u.n, ((i, j, a * b) for i, a in u.items() for j, b in v.items())
        )

    def coeff(self, i, j):
        i, j = int(i) % self.n, int(j) % self.n
        if i == 0 or j == 0 or i == j:
            return 0
        if i < j:
            return self.terms.get((i, j), 0)
        return -self.terms.get((j, i), 0)

    def items(self):
        """Terms sorted by (I, J)."""
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, WedgeClass) or other.n != self.n:
            raise TypeError("WedgeClass operands must share n")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return _raw(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return _raw(self.n, {key: -c for key, c in self.terms.items()})

    def __mul__(self, scalar):
        return _raw(self.n, {key: scalar * c for key, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WedgeClass):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    def to_matrix(self):
        """Dense antisymmetric (n-1) x (n-1) list-of-lists, row/col I-1 for [E_I]."""
        m = [[0] * (self.n - 1) for _ in range(self.n - 1)]
        for (i, j), c in self.terms.items():
            m[i - 1][j - 1] = c
            m[j - 1][i - 1] = -c
        return m

    def __str__(self):
        return _format_terms(
            [(f"[E_{i}]∧[E_{j}]", c) for (i, j), c in self.items()], " "
        )

    def latex(self):
        return _format_terms(
            [(rf"[E_{_sub(i)}]\wedge[E_{_sub(j)}]", c) for (i, j), c in self.items()],
            "",
        )

    def __repr__(self):
        return f"WedgeClass(n={self.n}, {self})"


def _accumulate(acc, n, i, j, c):
    i, j = int(i) % n, int(j) % n
    if c == 0 or i == 0 or j == 0 or i == j:
        return
    if i > j:
        i, j, c = j, i, -c
    acc[(i, j)] = acc.get((i, j), 0) + c


def _raw(n, terms):
    out = WedgeClass(n)
    out.terms = {key: c for key, c in terms.items() if c}
    return out


def _sub(i):
    return str(i) if i < 10 else "{%d}" % i


def _format_terms(pairs, space):
    """Render [(symbol, coeff)] as '-x + 2y' (space=' ') or '-x+2y' (space='')."""
    if not pairs:
        return "0"
    out = []
    for idx, (sym, c) in enumerate(pairs):
        mag = "" if abs(c) == 1 else str(abs(c))
        if idx == 0:
            out.append(("-" if c < 0 else "") + mag + sym)
        else:
            out.append(f"{space}{'-' if c < 0 else '+'}{space}{mag}{sym}")
    return "".join(out)


# -- the classifying element --------------------------------------------------


def _in_s_window(p: CurveParams, d):
    # d = j(k+1) mod n for some 1 <= j <= c-1  <=>  c*d mod n lies in [1, c-1]
    return 1 <= (p.c * d) % p.n <= p.c - 1


def difference_coefficient(p: CurveParams, d):
    """Coefficient attached to an index difference d = J - I (mod n).

    plus(d) - minus(d), where plus fires when d = j(k+1) and minus when
    d = j(k+1) - 1 for some 1 <= j <= c-1. Both can fire at once (first at
    n = 11, k = 6, d = 6) and then cancel.
    """
    return int(_in_s_window(p, d)) - int(_in_s_window(p, d + 1))


def closed_form_delta(p: CurveParams) -> WedgeClass:
    n = p.n
    coeff = [difference_coefficient(p, d) for d in range(n)]
    terms = {}
    for i in range(1, n):
        for j in range(i + 1, n):
            c = coeff[j - i]
            if c:
                terms[(i, j)] = c
    return _raw(n, terms)


def expand_T(p: CurveParams, r) -> WedgeClass:
    """T_r = sum_{i=0}^{n-1} [E_i] ^ [E_{i+r}] expanded over the (I<J) basis."""
    r = int(r)
    if not 1 <= r <= p.n - 1:
        raise RangeError(f"r must lie in [1, {p.n - 1}], got {r}")
    return WedgeClass.from_triples(p.n, ((i, i + r, 1) for i in range(p.n)))


@dataclass(frozen=True)
class TDecomposition:
    """Coefficients t_1, ..., t_{(n-1)/2} with Delta = sum t_r T_r."""

    n: int
    coeffs: tuple

    def items(self):
        return [(r, t) for r, t in enumerate(self.coeffs, start=1) if t]

    def __getitem__(self, r):
        return self.coeffs[r - 1]

    def recompose(self, p: CurveParams) -> WedgeClass:
        out = WedgeClass(self.n)
        for r, t in self.items():
            out = out + t * expand_T(p, r)
        return out

    def __str__(self):
        return _format_terms([(f"T_{r}", t) for r, t in self.items()], " ")

    def latex(self):
        return _format_terms([(f"T_{_sub(r)}", t) for r, t in self.items()], "")


def t_decomposition(p: CurveParams) -> TDecomposition:
    half = (p.n - 1) // 2
    return TDecomposition(
        p.n, tuple(difference_coefficient(p, r) for r in range(1, half + 1))
    )


# -- the automorphism epsilon ---------------------------------------------------


def _eps_terms(n, i):
    # epsilon([E_i]) = [E_{i+1}] - [E_1], with [E_n] = [E_0] = 0
    if i == 0:
        return ()
    out = {1: -1}
    if i + 1 < n:
        out[i + 1] = out.get(i + 1, 0) + 1
    return tuple((a, c) for a, c in out.items() if c)


def eps_basis_image(p: CurveParams, i) -> H1Class:
    """epsilon([E_i]) = [E_{i+1}] - [E_1]; zero for i = 0."""
    v = [0] * (p.n - 1)
    for a, c in _eps_terms(p.n, int(i) % p.n):
        v[a - 1] += c
    return H1Class._trusted(p.n, v)


def eps_h1(p: CurveParams, v: H1Class) -> H1Class:
    out = [0] * (p.n - 1)
    for i, c in v.items():
        for a, x in _eps_terms(p.n, i):
            out[a - 1] += c * x
    return H1Class._trusted(p.n, out)


def eps_wedge(p: CurveParams, w: WedgeClass) -> WedgeClass:
    n = p.n
    images = [_eps_terms(n, i) for i in range(n)]
    return WedgeClass.from_triples(
        n,
        (
            (a, b, c * x * y)
            for (i, j), c in w.terms.items()
            for a, x in images[i]
            for b, y in images[j]
        ),
    )


# -- relabelling and other inertia types ----------------------------------------


def substitute(p: CurveParams, w: WedgeClass, j) -> WedgeClass:
    """Replace every [E_i] by [E_{j*i mod n}]; requires gcd(j, n) = 1."""
    n = p.n
    j = int(j) % n
    if gcd(j, n) != 1:
        raise NotCoprimeError(f"gcd({j}, {n}) = {gcd(j, n)}, relabelling needs 1")
    return WedgeClass.from_triples(n, ((j * a, j * b, c) for (a, b), c in w.terms.items()))


@dataclass(frozen=True)
class InertiaType:
    a: int
    b: int
    c: int
    n: int

    def __post_init__(self):
        for f in ("a", "b", "c"):
            object.__setattr__(self, f, getattr(self, f) % self.n)
        if (self.a + self.b + self.c) % self.n:
            raise UnsupportedInertiaError(
                f"inertia components {self.as_tuple()} do not sum to 0 mod {self.n}"
            )
        bad = [x for x in self.as_tuple() if gcd(x, self.n) != 1]
        if bad:
            raise UnsupportedInertiaError(
                f"inertia component {bad[0]} shares a factor with n = {self.n}"
            )

    def as_tuple(self):
        return (self.a, self.b, self.c)


def inertia_parameters(n, t):
    """Return (j, k) with t = (j, jk, -j(k+1)) mod n, or raise UnsupportedInertiaError."""
    if not isinstance(t, InertiaType):
        t = InertiaType(*t, n=n)
    j = t.a
    k = (t.b * pow(j, -1, n)) % n
    try:
        validate(n, k)
    except BelyiError as exc:
        raise UnsupportedInertiaError(
            f"inertia type {t.as_tuple()} gives k = {k}, which is not admissible: {exc}"
        ) from exc
    return j, k


def general_inertia_delta(n, t) -> WedgeClass:
    """Classifying element for inertia type (j, jk, -j(k+1)), up to overall sign.

    Obtained by relabelling the standard element for k with j^{-1}, so that
    relabelling the result by j gives back closed_form_delta(n, k).
    """
    j, k = inertia_parameters(n, t)
    p = validate(n, k)
    return substitute(p, closed_form_delta(p), pow(j, -1, n))


# -- Fermat curve comparison ----------------------------------------------------


def fermat_image(p: CurveParams, i, j) -> H1Class:
    """Homology image of the Fermat loop E_{i,j}: [E_{jk}] - [E_{i+jk}] + [E_i]."""
    n = p.n
    i = int(i)
    jk = int(j) * p.k
    v = [0] * n
    v[jk % n] += 1
    v[(i + jk) % n] -= 1
    v[i % n] += 1
    return H1Class._trusted(n, v[1:])


def pfaffian_check(p: CurveParams, w: WedgeClass) -> int:
    """Exact determinant of the antisymmetric Gram matrix of w (the Pfaffian squared)."""
    if w.n != p.n:
        raise TypeError("class and params disagree on n")
    return integer_det(w.to_matrix())
