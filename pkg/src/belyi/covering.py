"""The slit cover of P^1 by W_{n,k} as n glued sheets, and the lift of the loop around infinity.

Sheet R_i carries three labelled edges: the tau edge over [0, 1], the alpha
edge over [1, oo) and the xi edge over the short slit at the base point. The
inertia type (1, k, -(k+1)) fixes how each edge glues to another sheet.
"""

from dataclasses import dataclass, field
from enum import Enum

from .params import CurveParams
from .words import Letter, Word


class EdgeKind(Enum):
    TAU = "tau"
    ALPHA = "alpha"
    XI = "xi"


@dataclass(frozen=True)
class GluingTable:
    """For each edge kind, the tuple sending sheet i to the sheet its edge glues to."""

    n: int
    targets: dict = field(repr=False)
    _sources: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sources = {}
        for kind, perm in self.targets.items():
            inv = [None] * self.n
            for s, t in enumerate(perm):
                if inv[t] is not None:
                    raise ValueError(f"{kind.value} gluing is not a bijection at sheet {t}")
                inv[t] = s
            sources[kind] = tuple(inv)
        object.__setattr__(self, "_sources", sources)

    def target(self, sheet, kind: EdgeKind) -> int:
        return self.targets[kind][int(sheet) % self.n]

    def source(self, kind: EdgeKind, sheet) -> int:
        """The sheet whose ``kind`` edge glues onto ``sheet``."""
        return self._sources[kind][int(sheet) % self.n]

    def permutation(self, kind: EdgeKind) -> tuple:
        return self.targets[kind]

    def rows(self):
        """(kind, sheet, target) in a fixed display order."""
        return [(kind, s, t) for kind in EdgeKind for s, t in enumerate(self.targets[kind])]


def gluing_table(p: CurveParams) -> GluingTable:
    n = p.n
    a, _, c_inf = p.inertia
    targets = {
        EdgeKind.TAU: tuple((i - a) % n for i in range(n)),
        # crossing alpha counterclockwise around eta_inf multiplies by zeta^{-(k+1)}
        EdgeKind.ALPHA: tuple((i + c_inf) % n for i in range(n)),
        EdgeKind.XI: tuple(range(n)),
    }
    return GluingTable(n, targets)


@dataclass(frozen=True)
class Segment:
    """An edge path epsilon^sheet(kind), traversed forwards (sign +1) or backwards."""

    kind: EdgeKind
    sheet: int
    sign: int

    def inverse(self):
        return Segment(self.kind, self.sheet, -self.sign)

    def __str__(self):
        s = f"eps^{self.sheet} {self.kind.value}"
        return s if self.sign == 1 else f"({s})^-1"


@dataclass(frozen=True)
class Revolution:
    start: int
    segments: tuple
    letters: tuple
    next: int


@dataclass(frozen=True)
class TraversalLog:
    revolutions: tuple
    cancellations: tuple  # (revolution index, first Segment, second Segment)

    def sheets(self):
        return [rev.start for rev in self.revolutions]


def _revolution_segments(table: GluingTable, sheet: int):
    """One clockwise revolution starting above S on ``sheet``.

    Passes eta_1, eta_0, eta_1, eta_inf, eta_1 and ends at the base point on
    the sheet reached through the alpha edge.
    """
    up = table.source(EdgeKind.TAU, sheet)
    nxt = table.target(sheet, EdgeKind.ALPHA)
    segs = (
        Segment(EdgeKind.XI, sheet, -1),
        Segment(EdgeKind.TAU, up, 1),
        Segment(EdgeKind.TAU, sheet, -1),
        Segment(EdgeKind.ALPHA, sheet, 1),
        Segment(EdgeKind.ALPHA, sheet, -1),
        Segment(EdgeKind.XI, nxt, 1),
    )
    return segs, nxt


def lift_boundary_loop(p: CurveParams):
    """Lift the loop around infinity to W, starting on sheet R_0.

    Returns the traversal log and the word L = L_0 L_1 ... L_{n-1} (with the
    E_0 placeholders). The alpha out-and-back inside each revolution cancels,
    as does each xi edge against the next revolution's opening xi^{-1},
    cyclically; the surviving tau edges eps^a tau . (eps^b tau)^{-1} are
    E_a . E_b^{-1}.
    """
    table = gluing_table(p)
    revs = []
    cancelled = []
    sheet = 0
    for idx in range(p.n):
        segs, nxt = _revolution_segments(table, sheet)
        kept = []
        for s in segs:
            if kept and kept[-1].kind is EdgeKind.ALPHA and kept[-1] == s.inverse():
                cancelled.append((idx, kept.pop(), s))
            else:
                kept.append(s)
        revs.append((sheet, kept, nxt))
        sheet = nxt
    if sheet != 0:
        raise AssertionError("boundary loop did not close up on sheet R_0")

    for idx, (_, kept, _) in enumerate(revs):
        follower = revs[(idx + 1) % p.n][1]
        last, first = kept[-1], follower[0]
        if last.kind is EdgeKind.XI and first == last.inverse():
            cancelled.append((idx, last, first))
            kept.pop()
            follower.pop(0)
    # after both passes only tau edges remain
    revolutions = []
    word = []
    for start, kept, nxt in revs:
        if any(s.kind is not EdgeKind.TAU for s in kept):
            raise AssertionError(f"uncancelled edges on sheet {start}: {kept}")
        letters = tuple(Letter(s.sheet, s.sign) for s in kept)
        full = _revolution_segments(table, start)[0]
        revolutions.append(Revolution(start, full, letters, nxt))
        word.extend(letters)
    return TraversalLog(tuple(revolutions), tuple(cancelled)), Word(word, p.n)


def boundary_word_formula(p: CurveParams) -> Word:
    """L_0 ... L_{n-1} with L_j = E_{j(n-k-1)+1} . E_{j(n-k-1)}^{-1}, written down directly."""
    n, step = p.n, p.n - p.k - 1
    letters = []
    for j in range(n):
        a = (j * step) % n
        letters.append(Letter((a + 1) % n, 1))
        letters.append(Letter(a, -1))
    return Word(letters, n)


def between_formula(p: CurveParams, i):
    """E_{i+j(n-k-1)+1}, E_{i+j(n-k-1)}^{-1} for j = 1, ..., c-1, in that order."""
    n, step = p.n, p.n - p.k - 1
    out = []
    for j in range(1, p.c):
        a = int(i) + j * step
        out.append(Letter((a + 1) % n, 1))
        out.append(Letter(a % n, -1))
    return tuple(out)
