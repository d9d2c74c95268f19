"""Generalized nonnegative integer matrices and their biwords.

A matrix in M_{A,B} has finitely many nonzero entries and entry at most 1
whenever the row and column letters have different degrees.  Its biword
lists the pairs (i, j) with multiplicity, sorted by

    (i,j) < (k,l)  iff  i < k,  or  i = k and |i| = 0 and j > l,
                        or  i = k and |i| = 1 and j < l,

weakly increasing overall and strictly increasing on mixed-degree pairs.
"""

from dataclasses import dataclass

from .alphabets import alphabet_from_json, parse_letter


@dataclass(frozen=True)
class GeneralizedMatrix:
    row_alphabet: object
    col_alphabet: object
    entries: tuple[tuple[object, object, int], ...]

    def __post_init__(self):
        ent = {}
        for i, j, m in self.entries:
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                ent[(i, j)] = ent.get((i, j), 0) + m
        for (i, j), m in ent.items():
            if not self.row_alphabet.contains(i):
                raise ValueError(f"row letter {i!r} not in alphabet")
            if not self.col_alphabet.contains(j):
                raise ValueError(f"column letter {j!r} not in alphabet")
            if m > 1 and self.row_alphabet.degree(i) != self.col_alphabet.degree(j):
                raise ValueError(f"entry at {(i, j)} exceeds 1 on mixed degrees")
        object.__setattr__(self, "entries", tuple(sorted((i, j, m) for (i, j), m in ent.items())))

    @property
    def total(self) -> int:
        return sum(m for _, _, m in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_dict(self) -> dict:
        return {(i, j): m for i, j, m in self.entries}

    def transpose(self) -> "GeneralizedMatrix":
        return GeneralizedMatrix(
            self.col_alphabet, self.row_alphabet, tuple((j, i, m) for i, j, m in self.entries)
        )

    def row_weight(self) -> dict:
        wt = {}
        for i, _, m in self.entries:
            wt[i] = wt.get(i, 0) + m
        return wt

    def col_weight(self) -> dict:
        wt = {}
        for _, j, m in self.entries:
            wt[j] = wt.get(j, 0) + m
        return wt

    def to_json(self):
        return {
            "rows": self.row_alphabet.to_json(),
            "cols": self.col_alphabet.to_json(),
            "entries": [
                [self.row_alphabet.format(i), self.col_alphabet.format(j), m]
                for i, j, m in self.entries
            ],
        }

    @staticmethod
    def from_json(data) -> "GeneralizedMatrix":
        rows = alphabet_from_json(data["rows"])
        cols = alphabet_from_json(data["cols"])
        entries = tuple(
            (parse_letter(i, rows), parse_letter(j, cols), int(m)) for i, j, m in data["entries"]
        )
        return GeneralizedMatrix(rows, cols, entries)


def matrix(row_alphabet, col_alphabet, entries) -> GeneralizedMatrix:
    if isinstance(entries, dict):
        entries = tuple((i, j, m) for (i, j), m in entries.items())
    return GeneralizedMatrix(row_alphabet, col_alphabet, tuple(entries))


def zero_matrix(row_alphabet, col_alphabet) -> GeneralizedMatrix:
    return GeneralizedMatrix(row_alphabet, col_alphabet, ())


def _pair_sort_key(row_alphabet):
    def key(pair):
        i, j = pair
        return (i, -j) if row_alphabet.degree(i) == 0 else (i, j)

    return key


def matrix_to_biword(a: GeneralizedMatrix) -> tuple[tuple, tuple]:
    pairs = []
    for i, j, m in a.entries:
        pairs.extend([(i, j)] * m)
    pairs.sort(key=_pair_sort_key(a.row_alphabet))
    return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)


def biword_to_matrix(top, bottom, row_alphabet, col_alphabet) -> GeneralizedMatrix:
    if len(top) != len(bottom):
        raise ValueError("biword components differ in length")
    pairs = list(zip(top, bottom))
    key = _pair_sort_key(row_alphabet)
    for s in range(len(pairs) - 1):
        k0, k1 = key(pairs[s]), key(pairs[s + 1])
        if k0 > k1:
            raise ValueError(f"biword out of order at position {s}")
        if k0 == k1 and row_alphabet.degree(pairs[s][0]) != col_alphabet.degree(pairs[s][1]):
            raise ValueError(f"repeated mixed-degree pair at position {s}")
    ent = {}
    for p in pairs:
        ent[p] = ent.get(p, 0) + 1
    return matrix(row_alphabet, col_alphabet, ent)


def enumerate_matrices(row_alphabet, col_alphabet, total_cap: int, col_cap: int = 0):
    """All matrices in M_{A,B} with total entry sum <= total_cap.

    `col_cap` truncates natural column alphabets; row alphabets must be
    finite.  Deterministic order: cells sorted, entry vectors enumerated
    with smaller counts first.
    """
    row_letters = row_alphabet.letters(0)
    col_letters = col_alphabet.letters(col_cap)
    cells = [(i, j) for i in row_letters for j in col_letters]
    mixed = [
        row_alphabet.degree(i) != col_alphabet.degree(j) for i, j in cells
    ]
    out_entries = []

    def rec(k, budget):
        if k == len(cells):
            yield matrix(row_alphabet, col_alphabet, tuple(out_entries))
            return
        i, j = cells[k]
        top = min(budget, 1) if mixed[k] else budget
        for m in range(top + 1):
            if m:
                out_entries.append((i, j, m))
            yield from rec(k + 1, budget - m)
            if m:
                out_entries.pop()

    yield from rec(0, total_cap)
