"""Element and word model of the groups G_m = Z^m *_(g -> g^3).

An element is written uniquely as a^v t^s with v in Z[1/3]^m and s in Z,
stored as a tuple of triadic rationals plus the integer height s.  The
product rule is (u, s)(v, r) = (u + 3^s v, s + r) and the inverse of
(v, s) is (-3^(-s) v, -s).

Words use tokens 't', 'T' (its inverse) and 'a<i>', 'A<i>' for the i-th
lattice generator and its inverse.  For m <= 3 the letters a, b, c and
their upper-case inverses are accepted and emitted as aliases.  The
parser also accepts '^k' with an optional sign on any letter; rendering
never emits '^'.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True)
class TriadicRational:
    """num / 3**exp with exp >= 0 and 3 not dividing num unless exp == 0."""

    num: int
    exp: int

    @classmethod
    def make(cls, num: int, exp: int) -> "TriadicRational":
        if num == 0:
            return cls(0, 0)
        while exp < 0:
            num *= 3
            exp += 1
        while exp > 0 and num % 3 == 0:
            num //= 3
            exp -= 1
        return cls(num, exp)

    @property
    def is_integer(self) -> bool:
        return self.exp == 0

    def scale3(self, k: int) -> "TriadicRational":
        """Multiply by 3**k."""
        return TriadicRational.make(self.num, self.exp - k)

    def __add__(self, other: "TriadicRational") -> "TriadicRational":
        e = max(self.exp, other.exp)
        return TriadicRational.make(
            self.num * 3 ** (e - self.exp) + other.num * 3 ** (e - other.exp), e
        )

    def __neg__(self) -> "TriadicRational":
        return TriadicRational(-self.num, self.exp)

    def __sub__(self, other: "TriadicRational") -> "TriadicRational":
        return self + (-other)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 3**self.exp)

    def frac_part(self) -> "TriadicRational":
        """Value mod 1, in [0, 1)."""
        return TriadicRational.make(self.num % 3**self.exp, self.exp)


_TR_ZERO = TriadicRational(0, 0)


@dataclass(frozen=True)
class GroupElement:
    """a^coords t^tee."""

    coords: tuple[TriadicRational, ...]
    tee: int

    @property
    def m(self) -> int:
        return len(self.coords)

    @classmethod
    def identity(cls, m: int) -> "GroupElement":
        return cls((_TR_ZERO,) * m, 0)


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.m != h.m:
        raise ValueError("rank mismatch")
    s = g.tee
    coords = tuple(u + v.scale3(s) for u, v in zip(g.coords, h.coords))
    return GroupElement(coords, s + h.tee)


def inverse(g: GroupElement) -> GroupElement:
    s = g.tee
    return GroupElement(tuple((-u).scale3(-s) for u in g.coords), -s)


def tau(g: GroupElement) -> int:
    """Height of the element: the exponent of t in the normal form."""
    return g.tee


def is_horocyclic(g: GroupElement) -> bool:
    """True when g lies in the lattice Z^m (height 0, integer coordinates)."""
    return g.tee == 0 and all(c.is_integer for c in g.coords)


def in_positive_orthant(g: GroupElement) -> bool:
    """True when g is horocyclic with every coordinate at least 1."""
    return is_horocyclic(g) and all(c.num >= 1 for c in g.coords)


def coset_key(g: GroupElement):
    """Hashable invariant of the right coset g Z^m.

    g and h lie in the same coset iff they share the height s and the
    fractional parts of 3^(-s) v agree coordinatewise.
    """
    s = g.tee
    return (tuple(c.scale3(-s).frac_part() for c in g.coords), s)


def t_element(m: int, sign: int) -> GroupElement:
    return GroupElement((_TR_ZERO,) * m, 1 if sign > 0 else -1)


def gen_element(m: int, index: int, sign: int) -> GroupElement:
    """The lattice generator a_index (1-based) or its inverse."""
    if not 1 <= index <= m:
        raise ValueError(f"generator index {index} out of range for m={m}")
    coords = list((_TR_ZERO,) * m)
    coords[index - 1] = TriadicRational(1 if sign > 0 else -1, 0)
    return GroupElement(tuple(coords), 0)


# ---------------------------------------------------------------------------
# words

_ALIASES = "abc"


def _valid_token(tok: str, m: int) -> bool:
    if tok in ("t", "T"):
        return True
    if len(tok) >= 2 and tok[0] in "aA" and tok[1:].isdigit():
        return 1 <= int(tok[1:]) <= m
    return False


@dataclass(frozen=True)
class Word:
    """A word in the generators, stored as a tuple of tokens."""

    m: int
    tokens: tuple[str, ...]

    def __post_init__(self):
        for tok in self.tokens:
            if not _valid_token(tok, self.m):
                raise ValueError(f"invalid token {tok!r} for m={self.m}")

    @property
    def length(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, m: int) -> Word:
    """Parse a word like 'ttabbTBTab' or 't^2a1A3^2' (see module docstring)."""
    tokens: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "t":
            base, sign = "t", 1
            i += 1
        elif ch == "T":
            base, sign = "t", -1
            i += 1
        elif ch in "aA" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            idx = int(text[i + 1 : j])
            if not 1 <= idx <= m:
                raise ValueError(f"generator index {idx} out of range for m={m}")
            base, sign = f"a{idx}", (1 if ch == "a" else -1)
            i = j
        elif ch.lower() in _ALIASES and m <= 3:
            idx = _ALIASES.index(ch.lower()) + 1
            if idx > m:
                raise ValueError(f"generator {ch!r} out of range for m={m}")
            base, sign = f"a{idx}", (1 if ch.islower() else -1)
            i += 1
        else:
            raise ValueError(f"unexpected character {text[i]!r} in word")
        count = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            if j < n and text[j] == "-":
                j += 1
            if j >= n or not text[j].isdigit():
                raise ValueError("'^' must be followed by an integer")
            while j < n and text[j].isdigit():
                j += 1
            count = int(text[i:j])
            i = j
        if count < 0:
            sign, count = -sign, -count
        if base == "t":
            tok = "t" if sign > 0 else "T"
        else:
            tok = base if sign > 0 else "A" + base[1:]
        tokens.extend([tok] * count)
    return Word(m, tuple(tokens))


def format_word(word: Word) -> str:
    """Render tokens; single letters with case for m <= 3, indexed otherwise."""
    if word.m > 3:
        return "".join(word.tokens)
    out = []
    for tok in word.tokens:
        if tok in ("t", "T"):
            out.append(tok)
        else:
            name = _ALIASES[int(tok[1:]) - 1]
            out.append(name if tok[0] == "a" else name.upper())
    return "".join(out)


@lru_cache(maxsize=None)
def _token_element(m: int, tok: str) -> GroupElement:
    if tok == "t":
        return t_element(m, 1)
    if tok == "T":
        return t_element(m, -1)
    return gen_element(m, int(tok[1:]), 1 if tok[0] == "a" else -1)


def eval_word(word: Word) -> GroupElement:
    """Fold the product rule over the word's tokens."""
    g = GroupElement.identity(word.m)
    for tok in word.tokens:
        g = multiply(g, _token_element(word.m, tok))
    return g


def max_height(word: Word) -> int:
    """Largest height over the word's nonempty prefixes (0 for the empty word)."""
    h = 0
    best = None
    for tok in word.tokens:
        if tok == "t":
            h += 1
        elif tok == "T":
            h -= 1
        best = h if best is None else max(best, h)
    return 0 if best is None else best


# ---------------------------------------------------------------------------
# rendering and JSON

def _gen_name(m: int, index: int) -> str:
    return _ALIASES[index - 1] if m <= 3 else f"a{index}"


def element_str(g: GroupElement) -> str:
    """Normal-form rendering like 'a^10 b^16' or 'a^(1/3) t^-1'; 'e' for identity."""
    parts = []
    for i, c in enumerate(g.coords, start=1):
        if c.num == 0:
            continue
        name = _gen_name(g.m, i)
        if c.is_integer:
            if c.num == 1:
                parts.append(name)
            else:
                parts.append(f"{name}^{c.num}")
        else:
            parts.append(f"{name}^({c.num}/{3**c.exp})")
    if g.tee == 1:
        parts.append("t")
    elif g.tee:
        parts.append(f"t^{g.tee}")
    return " ".join(parts) if parts else "e"


def element_to_json(g: GroupElement) -> dict:
    return {
        "coords": [{"num": str(c.num), "exp3": c.exp} for c in g.coords],
        "tee": g.tee,
    }


def element_from_json(obj: dict) -> GroupElement:
    coords = tuple(
        TriadicRational.make(int(c["num"]), int(c["exp3"])) for c in obj["coords"]
    )
    return GroupElement(coords, int(obj["tee"]))
