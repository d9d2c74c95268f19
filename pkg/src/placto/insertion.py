"""Schensted insertion for graded alphabets, with exact reverses.

The kernel works on raw row tuples (tuple of weakly increasing tuples of
letters, straight shapes).  Bumping rules, with `odd` the set of degree-1
letters:

* row insert x:    bump the leftmost entry  > x (x even) / >= x (x odd)
* column insert x: bump the topmost entry  >= x (x even) /  > x (x odd)

so even letters repeat along rows and odd letters repeat down columns.
Reading columns top to bottom, ``column_word(w -> empty) == w`` up to
Knuth equivalence, matching the plactic conventions used throughout.
"""

from . import diagrams
from .tableaux import Tableau, from_rows

EMPTY_ODD = frozenset()


class InternalInvariantError(AssertionError):
    """A theorem the algorithms rely on failed; indicates an implementation bug."""


# -- row insertion ----------------------------------------------------------


def _row_bump_pos(row, x, odd=EMPTY_ODD):
    if x in odd:
        for k, y in enumerate(row):
            if y >= x:
                return k
        return None
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] > x:
            hi = mid
        else:
            lo = mid + 1
    return lo if lo < len(row) else None


def row_insert(rows, x, odd=EMPTY_ODD):
    """Insert x by rows; returns (new_rows, (r, c)) with the added cell."""
    rows = list(rows)
    r = 0
    while True:
        if r == len(rows):
            rows.append((x,))
            return tuple(rows), (r, 0)
        row = rows[r]
        pos = _row_bump_pos(row, x, odd)
        if pos is None:
            rows[r] = row + (x,)
            return tuple(rows), (r, len(row))
        x, rows[r] = row[pos], row[:pos] + (x,) + row[pos + 1 :]
        r += 1


def reverse_row_insert(rows, r, odd=EMPTY_ODD):
    """Un-insert from the corner at the end of row r; returns (rows, letter)."""
    rows = list(rows)
    row = rows[r]
    if not row or (r + 1 < len(rows) and len(rows[r + 1]) >= len(row)):
        raise ValueError(f"row {r} has no removable corner")
    v = row[-1]
    rows[r] = row[:-1]
    if not rows[r]:
        rows.pop()
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        pos = None
        for k in range(len(row) - 1, -1, -1):
            z = row[k]
            if z < v or (z == v and z in odd):
                pos = k
                break
        if pos is None:
            raise InternalInvariantError("reverse row insertion found no bumper")
        v, rows[rr] = row[pos], row[:pos] + (v,) + row[pos + 1 :]
    return tuple(rows), v


# -- column insertion --------------------------------------------------------


def column_insert(rows, x, odd=EMPTY_ODD):
    """Insert x by columns; returns (new_rows, (r, c)) with the added cell."""
    rows = list(rows)
    c = 0
    while True:
        strict = x in odd
        hit = None
        for r in range(len(rows)):
            if c >= len(rows[r]):
                break
            y = rows[r][c]
            if y > x or (y == x and not strict):
                hit = r
                break
        if hit is None:
            for r in range(len(rows) + 1):
                if r == len(rows):
                    rows.append((x,))
                    return tuple(rows), (r, c)
                if len(rows[r]) == c:
                    rows[r] = rows[r] + (x,)
                    return tuple(rows), (r, c)
        else:
            row = rows[hit]
            x, rows[hit] = row[c], row[:c] + (x,) + row[c + 1 :]
            c += 1


def reverse_column_insert(rows, r, c, odd=EMPTY_ODD):
    """Un-insert from the corner cell (r, c); returns (rows, letter)."""
    rows = list(rows)
    if c != len(rows[r]) - 1 or (r + 1 < len(rows) and len(rows[r + 1]) > c):
        raise ValueError(f"({r}, {c}) is not a removable corner")
    v = rows[r][-1]
    rows[r] = rows[r][:-1]
    if not rows[r]:
        rows.pop()
    for cc in range(c - 1, -1, -1):
        pos = None
        for rr in range(len(rows) - 1, -1, -1):
            if cc >= len(rows[rr]):
                continue
            z = rows[rr][cc]
            if z < v or (z == v and z not in odd):
                pos = rr
                break
        if pos is None:
            raise InternalInvariantError("reverse column insertion found no bumper")
        row = rows[pos]
        v, rows[pos] = row[cc], row[:cc] + (v,) + row[cc + 1 :]
    return tuple(rows), v


# -- jeu de taquin -------------------------------------------------------------


def jdt_remove(rows, r0, c0, odd=EMPTY_ODD):
    """Remove the entry at (r0, c0) and slide the hole out.

    Returns (new_rows, corner_row): the shape loses its outer corner in row
    `corner_row`.  Slide rule: move the smaller of the right/below entries
    into the hole, ties broken below for even letters and right for odd.
    """
    grid = [list(row) for row in rows]
    r, c = r0, c0
    while True:
        right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        below = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        if right is None and below is None:
            break
        if below is None:
            move_right = True
        elif right is None:
            move_right = False
        elif right < below:
            move_right = True
        elif below < right:
            move_right = False
        else:
            move_right = right in odd
        if move_right:
            grid[r][c] = right
            c += 1
        else:
            grid[r][c] = below
            r += 1
    grid[r].pop()
    if not grid[r]:
        grid.pop()
    return tuple(tuple(row) for row in grid), r


def jdt_insert(rows, corner_r, value, odd=EMPTY_ODD):
    """Reverse of jdt_remove: grow an outer corner in row `corner_r`, slide
    the hole back to column 0 and place `value` there.

    Returns new_rows, or None if `value` cannot legally land in column 0.
    """
    grid = [list(row) for row in rows]
    if corner_r > len(grid):
        return None
    if corner_r == len(grid):
        grid.append([])
    c = len(grid[corner_r])
    if corner_r > 0 and len(grid[corner_r - 1]) < c + 1:
        return None
    grid[corner_r].append(None)
    r = corner_r
    while True:
        left = grid[r][c - 1] if c > 0 else None
        above = grid[r - 1][c] if r > 0 and c < len(grid[r - 1]) else None
        if c == 0:
            if above is None or above < value:
                break
            grid[r][c] = above
            r -= 1
            continue
        if above is None:
            move_left = True
        elif left is None:
            move_left = False
        elif left > above:
            move_left = True
        elif above > left:
            move_left = False
        else:
            move_left = left in odd
        if move_left:
            grid[r][c] = left
            c -= 1
        else:
            grid[r][c] = above
            r -= 1
    grid[r][0] = value
    t = tuple(tuple(row) for row in grid)
    if r + 1 < len(t) and t[r + 1]:
        below = t[r + 1][0]
        if not (value < below or (value == below and value in odd)):
            return None
    if len(t[r]) > 1:
        right = t[r][1]
        if not (value < right or (value == right and value not in odd)):
            return None
    return t


# -- words and tableau-level wrappers -----------------------------------------


def insert_word(tableau: Tableau, word, direction: str = "column") -> Tableau:
    """Fold single insertions of `word` into a straight tableau.

    Column direction computes (word -> T); row direction (T <- word).
    """
    if tableau.inner or tableau.is_vshaped:
        raise ValueError("insertion target must be a straight tableau")
    odd = tableau.alphabet.odd_letters()
    rows = tableau.rows
    for x in word:
        if not tableau.alphabet.contains(x):
            raise ValueError(f"letter {x!r} not in the tableau's alphabet")
        if direction == "column":
            rows, _ = column_insert(rows, x, odd)
        elif direction == "row":
            rows, _ = row_insert(rows, x, odd)
        else:
            raise ValueError(f"unknown direction {direction!r}")
    return from_rows(tableau.alphabet, rows, check=False)


def column_insert_tableau(x, tableau: Tableau) -> Tableau:
    """(x -> T)."""
    return insert_word(tableau, (x,), "column")


def row_insert_tableau(tableau: Tableau, x) -> Tableau:
    """(T <- x)."""
    return insert_word(tableau, (x,), "row")


def product_into(target: Tableau, source: Tableau) -> Tableau:
    """(source -> target): column insertion of the column word."""
    return insert_word(target, source.column_word(), "column")


def product_row(target: Tableau, source: Tableau) -> Tableau:
    """(target <- source): row insertion of the reversed row word."""
    return insert_word(target, tuple(reversed(source.row_word())), "row")


def jdt_rectify_after_removal(tableau: Tableau, cell: tuple[int, int]) -> Tableau:
    """Vacate `cell` (0-based, in the leftmost column) and slide it out."""
    if tableau.inner or tableau.is_vshaped:
        raise ValueError("expected a straight tableau")
    r0, c0 = cell
    if c0 != 0:
        raise ValueError("vacated cell must lie in the leftmost column")
    rows, _ = jdt_remove(tableau.rows, r0, c0, tableau.alphabet.odd_letters())
    return from_rows(tableau.alphabet, rows, check=False)


def rows_shape(rows) -> tuple[int, ...]:
    return diagrams.normalize(tuple(len(r) for r in rows))
