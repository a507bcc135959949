"""Words in the loops E_0, ..., E_{n-1} and their classes in the exterior square.

Words compose left to right, like paths. Two independent ways of reading off
the class of a commutator word are provided:

* ``magnus_class``: degree-2 truncation of the Magnus expansion;
* ``ordering_class``: the combinatorial rule that each E' lying between
  E_i^{-1} and E_i contributes -[E_i] ^ [E'].
"""

import re
from dataclasses import dataclass

import numpy as np

from .errors import MultiplicityError, NotACommutatorError
from .homology import WedgeClass


@dataclass(frozen=True)
class Letter:
    index: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.index < 0:
            raise ValueError(f"generator index must be non-negative, got {self.index}")

    def inverse(self):
        return Letter(self.index, -self.sign)

    def __str__(self):
        return f"E_{self.index}" if self.sign == 1 else f"E_{self.index}^-1"


class Word:
    """Finite sequence of letters E_i^{+-1}, 0 <= i < n. Not necessarily reduced."""

    __slots__ = ("n", "letters", "_positions")

    def __init__(self, letters, n):
        letters = tuple(
            l if isinstance(l, Letter) else Letter(int(l[0]) % n, int(l[1]))
            for l in letters
        )
        for l in letters:
            if l.index >= n:
                raise ValueError(f"letter {l} out of range for n = {n}")
        self.n = n
        self.letters = letters
        self._positions = None

    def positions(self, index, sign):
        """All positions holding E_index^sign."""
        if self._positions is None:
            pos = {}
            for p, l in enumerate(self.letters):
                pos.setdefault((l.index, l.sign), []).append(p)
            self._positions = pos
        return self._positions.get((index, sign), [])

    _TOKEN = re.compile(r"E_\{?(\d+)\}?(\^-1)?")

    @classmethod
    def parse(cls, text, n):
        """Parse 'E_1·E_4^-1·...' (separators '·', '*', '.' or whitespace)."""
        tokens = [t for t in re.split(r"[·*.\s]+", text.strip()) if t]
        letters = []
        for tok in tokens:
            m = cls._TOKEN.fullmatch(tok)
            if not m:
                raise ValueError(f"cannot parse letter {tok!r}")
            letters.append(Letter(int(m.group(1)), -1 if m.group(2) else 1))
        return cls(letters, n)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def __hash__(self):
        return hash((self.n, self.letters))

    def __mul__(self, other):
        if other.n != self.n:
            raise ValueError("words over different generator sets")
        return Word(self.letters + other.letters, self.n)

    def inverse(self):
        return Word([l.inverse() for l in reversed(self.letters)], self.n)

    def conjugate(self, g):
        """g . self . g^{-1}"""
        return g * self * g.inverse()

    def exponent_sums(self):
        sums = [0] * self.n
        for l in self.letters:
            sums[l.index] += l.sign
        return sums

    def __str__(self):
        return "·".join(str(l) for l in self.letters) if self.letters else "1"

    def __repr__(self):
        return f"Word({self}, n={self.n})"


def free_reduce(w: Word) -> Word:
    out = []
    for l in w:
        if out and out[-1].index == l.index and out[-1].sign == -l.sign:
            out.pop()
        else:
            out.append(l)
    return Word(out, w.n)


def strip_placeholders(w: Word) -> Word:
    """Drop every E_0^{+-1}; E_0 = e_0^{-1} . e_0 is the trivial loop."""
    return Word([l for l in w if l.index != 0], w.n)


def relabel(w: Word, j) -> Word:
    """Replace each E_i by E_{j*i mod n}."""
    return Word([Letter((int(j) * l.index) % w.n, l.sign) for l in w], w.n)


def _position(w, index, sign):
    hits = w.positions(index, sign)
    if len(hits) != 1:
        name = f"E_{index}" if sign == 1 else f"E_{index}^-1"
        raise MultiplicityError(f"{name} occurs {len(hits)} times, expected exactly once")
    return hits[0]


def between(w: Word, i) -> tuple:
    """Letters strictly between E_i^{-1} and E_i once the word is rotated to start at E_i^{-1}."""
    i = int(i) % w.n
    start = _position(w, i, -1)
    stop = _position(w, i, 1)
    if start < stop:
        return w.letters[start + 1:stop]
    return w.letters[start + 1:] + w.letters[:stop]


@dataclass(frozen=True)
class DegreeTwoExpansion:
    """Magnus series 1 + sum linear[I] X_I + sum quadratic[I][J] X_I X_J, truncated.

    Index I of both arrays is generator E_{I+1}.
    """

    n: int
    linear: tuple
    quadratic: tuple


def _magnus_arrays(w):
    m = w.n - 1
    lin = np.zeros(m, dtype=np.int64)
    quad = np.zeros((m, m), dtype=np.int64)
    for l in w:
        if l.index == 0:
            continue
        a = l.index - 1
        if l.sign == 1:
            quad[:, a] += lin
            lin[a] += 1
        else:
            quad[:, a] -= lin
            quad[a, a] += 1
            lin[a] -= 1
    return lin, quad


def magnus_expansion(w: Word) -> DegreeTwoExpansion:
    """Degree-2 Magnus expansion of w with E_0 killed.

    E_I maps to 1 + X_I and E_I^{-1} to 1 - X_I + X_I^2; factors multiply in
    word order. Coefficients are bounded by len(w)**2, far inside int64.
    """
    lin, quad = _magnus_arrays(w)
    return DegreeTwoExpansion(w.n, tuple(lin.tolist()), tuple(map(tuple, quad.tolist())))


def magnus_class(w: Word) -> WedgeClass:
    """Class in the exterior square of a word in the commutator subgroup.

    Raises NotACommutatorError if some generator other than E_0 has nonzero
    exponent sum.
    """
    sums = strip_placeholders(w).exponent_sums()
    if any(sums):
        raise NotACommutatorError(sums[1:])
    _, quad = _magnus_arrays(w)
    rows, cols = np.nonzero(np.triu(quad, 1))
    terms = {
        (int(i) + 1, int(j) + 1): int(quad[i, j]) for i, j in zip(rows.tolist(), cols.tolist())
    }
    return WedgeClass.from_canonical(w.n, terms)


def ordering_class(w: Word) -> WedgeClass:
    """Class of w read off from the cyclic ordering of its letters.

    Every nonzero generator occurring in w must occur exactly once with each
    sign. For each such E_i, a letter E_m^{s} between E_i^{-1} and E_i
    contributes -s [E_i] ^ [E_m]. A linked pair is seen from both of its
    indices with the same contribution, so only the view from the smaller
    index is kept.
    """
    present = sorted({l.index for l in w if l.index != 0})
    triples = []
    for i in present:
        for l in between(w, i):
            if l.index > i:
                triples.append((i, l.index, -l.sign))
    return WedgeClass.from_triples(w.n, triples)
