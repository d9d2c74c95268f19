"""Linearly ordered Z2-graded alphabets and their letter encoding.

Letters are plain ints ordered by the usual int order:

* ``Natural``      -- 1 < 2 < 3 < ...              (all degree 0)
* ``NaturalDual``  -- i-dual encoded as -i, so ... < -2 < -1 matches
  ... < 2v < 1v.  The same encoding serves the negative alphabet -N
  (-1 > -2 > ...) used by reverse lattice words.
* ``FiniteAlphabet`` -- letters 1..n with a degree signature; the dual
  alphabet reverses the order (letter k of the dual is (n+1-k)-dual).

Glued alphabets use (layer, letter) pairs so every A-letter sorts below
every B-letter.  Cross-alphabet comparisons are never meaningful and are
guarded by `contains` checks at API boundaries.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Natural:
    def degree(self, letter: int) -> int:
        return 0

    def odd_letters(self) -> frozenset:
        return frozenset()

    def contains(self, letter) -> bool:
        return isinstance(letter, int) and letter >= 1

    def dual(self) -> "NaturalDual":
        return NaturalDual()

    def dual_letter(self, letter: int) -> int:
        return -letter

    def format(self, letter: int) -> str:
        return str(letter)

    def letters(self, cap: int) -> tuple[int, ...]:
        return tuple(range(1, cap + 1))

    def to_json(self):
        return {"kind": "natural"}


@dataclass(frozen=True)
class NaturalDual:
    def degree(self, letter: int) -> int:
        return 0

    def odd_letters(self) -> frozenset:
        return frozenset()

    def contains(self, letter) -> bool:
        return isinstance(letter, int) and letter <= -1

    def dual(self) -> Natural:
        return Natural()

    def dual_letter(self, letter: int) -> int:
        return -letter

    def format(self, letter: int) -> str:
        return f"{-letter}v"

    def letters(self, cap: int) -> tuple[int, ...]:
        return tuple(range(-cap, 0))

    def to_json(self):
        return {"kind": "natural_dual"}


@dataclass(frozen=True)
class FiniteAlphabet:
    """Letters 1..n; degrees[k-1] is the Z2-degree of letter k."""

    degrees: tuple[int, ...]
    is_dual: bool = False

    def __post_init__(self):
        if any(d not in (0, 1) for d in self.degrees):
            raise ValueError("degrees must be 0 or 1")
        object.__setattr__(self, "degrees", tuple(self.degrees))

    @property
    def size(self) -> int:
        return len(self.degrees)

    def degree(self, letter: int) -> int:
        return self.degrees[letter - 1]

    def odd_letters(self) -> frozenset:
        return frozenset(k + 1 for k, d in enumerate(self.degrees) if d == 1)

    def contains(self, letter) -> bool:
        return isinstance(letter, int) and 1 <= letter <= self.size

    def dual(self) -> "FiniteAlphabet":
        return FiniteAlphabet(tuple(reversed(self.degrees)), not self.is_dual)

    def dual_letter(self, letter: int) -> int:
        return self.size + 1 - letter

    def format(self, letter: int) -> str:
        return f"b:{letter}"

    def letters(self, cap: int = 0) -> tuple[int, ...]:
        return tuple(range(1, self.size + 1))

    def to_json(self):
        return {"kind": "finite", "degrees": list(self.degrees), "dual": self.is_dual}


@dataclass(frozen=True)
class GluedAlphabet:
    """A*B: every A-letter below every B-letter; letters are (layer, x)."""

    lower: object
    upper: object

    def degree(self, letter) -> int:
        layer, x = letter
        return (self.lower if layer == 0 else self.upper).degree(x)

    def odd_letters(self) -> frozenset:
        lows = {(0, x) for x in self.lower.odd_letters()}
        ups = {(1, x) for x in self.upper.odd_letters()}
        return frozenset(lows | ups)

    def contains(self, letter) -> bool:
        if not (isinstance(letter, tuple) and len(letter) == 2):
            return False
        layer, x = letter
        if layer == 0:
            return self.lower.contains(x)
        if layer == 1:
            return self.upper.contains(x)
        return False

    def format(self, letter) -> str:
        layer, x = letter
        part = (self.lower if layer == 0 else self.upper).format(x)
        return f"{'AB'[layer]}.{part}"

    def to_json(self):
        return {"kind": "glued", "lower": self.lower.to_json(), "upper": self.upper.to_json()}


NATURAL = Natural()
NATURAL_DUAL = NaturalDual()


def alphabet_from_json(data):
    kind = data["kind"]
    if kind == "natural":
        return NATURAL
    if kind == "natural_dual":
        return NATURAL_DUAL
    if kind == "finite":
        return FiniteAlphabet(tuple(data["degrees"]), bool(data.get("dual", False)))
    if kind == "glued":
        return GluedAlphabet(alphabet_from_json(data["lower"]), alphabet_from_json(data["upper"]))
    raise ValueError(f"unknown alphabet kind {kind!r}")


def finite_from_signature(bits: str, dual: bool = False) -> FiniteAlphabet:
    """Degree signature as a bitstring, e.g. "01" -> letters 1 (even), 2 (odd)."""
    if not bits or any(b not in "01" for b in bits):
        raise ValueError(f"bad degree signature {bits!r}")
    return FiniteAlphabet(tuple(int(b) for b in bits), dual)


def parse_letter(token: str, alphabet=None) -> int:
    """Parse a letter token: "3", "3v", or "b:2"."""
    token = token.strip()
    if token.startswith("b:"):
        value = int(token[2:])
    elif token.endswith("v"):
        value = -int(token[:-1])
    else:
        value = int(token)
    if alphabet is not None and not alphabet.contains(value):
        raise ValueError(f"letter {token!r} is not in alphabet {alphabet}")
    return value


def parse_word(text: str, alphabet=None) -> tuple[int, ...]:
    """Parse a space-separated word of letter tokens."""
    return tuple(parse_letter(tok, alphabet) for tok in text.split())


def format_word(word, alphabet=None) -> str:
    fmt = alphabet.format if alphabet is not None else _format_mixed
    return " ".join(fmt(x) for x in word)


def _format_mixed(letter: int) -> str:
    return str(letter) if letter > 0 else f"{-letter}v"
