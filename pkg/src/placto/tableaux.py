"""Semistandard tableaux over graded alphabets.

A tableau stores its display rows (tuples of letters) together with the
display skew shape.  Rows weakly increase left to right and columns weakly
increase top to bottom; degree-0 letters are strict down columns and
degree-1 letters strict along rows.

Rotated tableaux (the duals T-vee living on 180-degree rotated shapes) are
stored in display orientation with ``vbase`` remembering the pre-rotation
(outer, inner) pair, so dual() is an exact involution.
"""

from dataclasses import dataclass, field

from . import diagrams
from .alphabets import GluedAlphabet, NATURAL, alphabet_from_json, parse_letter
from .diagrams import SkewShape, normalize, row_inner


@dataclass(frozen=True)
class Tableau:
    alphabet: object
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()
    rows: tuple[tuple, ...] = ()
    vbase: tuple[tuple[int, ...], tuple[int, ...]] | None = field(default=None)

    def __post_init__(self):
        outer = normalize(self.outer)
        inner = normalize(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) != len(outer):
            raise ValueError("row count does not match outer shape")
        for r, row in enumerate(self.rows):
            if len(row) != outer[r] - row_inner(inner, r):
                raise ValueError(f"row {r} has wrong length")

    # -- basic structure ---------------------------------------------------

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def is_vshaped(self) -> bool:
        return self.vbase is not None

    def entry(self, r: int, c: int):
        """Display entry at 0-based cell (r, c)."""
        return self.rows[r][c - row_inner(self.inner, r)]

    def cells(self):
        return diagrams.skew_cells(self.outer, self.inner)

    def is_semistandard(self) -> bool:
        deg = self.alphabet.degree
        for r, row in enumerate(self.rows):
            off = row_inner(self.inner, r)
            for k, x in enumerate(row):
                if not self.alphabet.contains(x):
                    return False
                if k > 0:
                    left = row[k - 1]
                    if not (left < x or (left == x and deg(x) == 0)):
                        return False
                if r > 0:
                    c = off + k
                    up_off = row_inner(self.inner, r - 1)
                    if up_off <= c < self.outer[r - 1]:
                        up = self.rows[r - 1][c - up_off]
                        if not (up < x or (up == x and deg(x) == 1)):
                            return False
        return True

    # -- reading words and weights -----------------------------------------

    def column_word(self) -> tuple:
        """Columns right to left, top to bottom within each column."""
        if not self.outer:
            return ()
        out = []
        for c in range(self.outer[0] - 1, -1, -1):
            for r in range(len(self.outer)):
                off = row_inner(self.inner, r)
                if off <= c < self.outer[r]:
                    out.append(self.rows[r][c - off])
        return tuple(out)

    def row_word(self) -> tuple:
        """Rows top to bottom, right to left within each row."""
        out = []
        for row in self.rows:
            out.extend(reversed(row))
        return tuple(out)

    def weight(self) -> dict:
        wt = {}
        for row in self.rows:
            for x in row:
                wt[x] = wt.get(x, 0) + 1
        return wt

    def first_column(self) -> tuple:
        """Entries of the leftmost occupied display column, top to bottom."""
        if not self.outer:
            return ()
        c = min(row_inner(self.inner, r) for r in range(len(self.outer)))
        return tuple(row[0] for r, row in enumerate(self.rows) if row_inner(self.inner, r) == c and row)

    # -- dual and glue -------------------------------------------------------

    def dual(self) -> "Tableau":
        """180-degree rotation with every entry dualized; an involution."""
        if not self.outer:
            return Tableau(self.alphabet.dual(), (), (), (), None)
        nrows, ncols = len(self.outer), self.outer[0]
        new_outer = tuple(ncols - row_inner(self.inner, nrows - 1 - k) for k in range(nrows))
        new_inner = tuple(ncols - self.outer[nrows - 1 - k] for k in range(nrows))
        dl = self.alphabet.dual_letter
        new_rows = tuple(tuple(dl(x) for x in reversed(self.rows[nrows - 1 - k])) for k in range(nrows))
        if self.vbase is not None:
            base_outer, base_inner = self.vbase
            if (normalize(new_outer), normalize(new_inner)) != (base_outer, base_inner):
                raise AssertionError("vbase inconsistent with rotation")
            return Tableau(self.alphabet.dual(), base_outer, base_inner, new_rows, None)
        return Tableau(self.alphabet.dual(), new_outer, new_inner, new_rows, (self.outer, self.inner))

    def glue(self, other: "Tableau") -> "Tableau":
        """S*T for straight S of shape mu and T of shape lambda/mu."""
        if self.inner or self.is_vshaped or other.is_vshaped:
            raise ValueError("glue needs a straight first factor and unrotated shapes")
        if normalize(other.inner) != self.outer:
            raise ValueError("shapes do not glue: inner of second factor must equal first shape")
        alphabet = GluedAlphabet(self.alphabet, other.alphabet)
        outer = other.outer
        rows = []
        for r in range(len(outer)):
            left = tuple((0, x) for x in (self.rows[r] if r < len(self.rows) else ()))
            right = tuple((1, x) for x in other.rows[r])
            rows.append(left + right)
        return Tableau(alphabet, outer, (), tuple(rows), None)

    # -- serialization -------------------------------------------------------

    def to_json(self):
        data = {
            "shape": {"outer": list(self.outer), "inner": list(self.inner)},
            "alphabet": self.alphabet.to_json(),
            "rows": [[self.alphabet.format(x) for x in row] for row in self.rows],
        }
        if self.vbase is not None:
            data["vbase"] = {"outer": list(self.vbase[0]), "inner": list(self.vbase[1])}
        return data

    @staticmethod
    def from_json(data) -> "Tableau":
        alphabet = alphabet_from_json(data["alphabet"])
        rows = tuple(tuple(parse_letter(tok, alphabet) for tok in row) for row in data["rows"])
        vbase = None
        if "vbase" in data:
            vbase = (tuple(data["vbase"]["outer"]), tuple(data["vbase"]["inner"]))
        return Tableau(alphabet, tuple(data["shape"]["outer"]), tuple(data["shape"]["inner"]), rows, vbase)


def from_rows(alphabet, rows, inner=(), vbase=None, check: bool = True) -> Tableau:
    rows = tuple(tuple(r) for r in rows)
    outer = tuple(row_inner(tuple(inner), r) + len(rows[r]) for r in range(len(rows)))
    t = Tableau(alphabet, outer, tuple(inner), rows, vbase)
    if check and not t.is_semistandard():
        raise ValueError(f"not semistandard: {rows} over {alphabet}")
    return t


def empty(alphabet=NATURAL) -> Tableau:
    return Tableau(alphabet, (), (), (), None)


def vshaped_from_straight(straight: Tableau) -> Tableau:
    """The rotated tableau T-vee for a straight T (convenience wrapper)."""
    if straight.inner or straight.is_vshaped:
        raise ValueError("expected a straight, unrotated tableau")
    return straight.dual()


def weight_of_word(word) -> dict:
    wt = {}
    for x in word:
        wt[x] = wt.get(x, 0) + 1
    return wt


def enumerate_sst(shape: SkewShape, alphabet, cap: int = 0):
    """All semistandard fillings of `shape`, letters capped for natural alphabets.

    Deterministic order: cells row-major, candidate letters ascending, i.e.
    lexicographic on the left-to-right row reading word.
    """
    letters = alphabet.letters(cap)
    deg = alphabet.degree
    outer, inner = shape.outer, shape.inner
    cell_list = list(diagrams.skew_cells(outer, inner))
    grid = {}

    def candidates(r, c):
        left = grid.get((r, c - 1))
        up = grid.get((r - 1, c))
        for x in letters:
            if left is not None and not (left < x or (left == x and deg(x) == 0)):
                continue
            if up is not None and not (up < x or (up == x and deg(x) == 1)):
                continue
            yield x

    def rec(i):
        if i == len(cell_list):
            rows = []
            for r in range(len(outer)):
                off = row_inner(inner, r)
                rows.append(tuple(grid[(r, c)] for c in range(off, outer[r])))
            yield Tableau(alphabet, outer, inner, tuple(rows), None)
            return
        r, c = cell_list[i]
        for x in candidates(r, c):
            grid[(r, c)] = x
            yield from rec(i + 1)
            del grid[(r, c)]

    yield from rec(0)
