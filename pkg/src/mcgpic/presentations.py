"""
Finite presentations and their abelianizations.

A :class:`Word` is a sequence of signed generator indices: ``3`` is the
third generator, ``-3`` its inverse. Indices start at 1. Words are kept
unreduced; abelianization only needs exponent sums.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Sequence

from .linalg import FgAbelianGroup, IntMatrix, cokernel


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if any(x == 0 for x in self.letters):
            raise ValueError("generator index 0 is not allowed; indices start at 1")

    @classmethod
    def gen(cls, i: int) -> Word:
        return cls((i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def inverse(self) -> Word:
        return Word(tuple(-x for x in reversed(self.letters)))

    def conjugate(self, by: Word) -> Word:
        """``by * self * by^-1``."""
        return by * self * by.inverse()

    def cyclic_shift(self, k: int) -> Word:
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k])

    def free_reduce(self) -> Word:
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return Word(tuple(out))

    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse ``"t1 t2 t1^-1"``. Any alphabetic prefix is accepted; ``"1"`` is the empty word."""
        letters: list[int] = []
        for tok in text.split():
            if tok == "1":
                continue
            mt = _LETTER.match(tok)
            if not mt:
                raise ValueError(f"cannot parse word letter {tok!r}")
            idx = int(mt.group(1))
            exp = int(mt.group(2)) if mt.group(2) is not None else 1
            if idx < 1:
                raise ValueError(f"generator index must be >= 1 in {tok!r}")
            letters.extend([idx if exp > 0 else -idx] * abs(exp))
        return cls(tuple(letters))

    def format(self, prefix: str = "t") -> str:
        if not self.letters:
            return "1"
        # Run-length encode consecutive equal letters.
        parts = []
        i = 0
        while i < len(self.letters):
            x = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == x:
                j += 1
            exp = (j - i) * (1 if x > 0 else -1)
            parts.append(f"{prefix}{abs(x)}" + ("" if exp == 1 else f"^{exp}"))
            i = j
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


_LETTER = re.compile(r"^[A-Za-z_]*(\d+)(?:\^(-?\d+))?$")


def word(*letters: int) -> Word:
    return Word(letters)


def exponent_sum_vector(w: Word, num_generators: int) -> list[int]:
    vec = [0] * num_generators
    for x in w:
        i = abs(x)
        if i > num_generators:
            raise ValueError(f"generator index {i} out of range 1..{num_generators}")
        vec[i - 1] += 1 if x > 0 else -1
    return vec


@dataclass(frozen=True)
class FinitePresentation:
    num_generators: int
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        rels = tuple(r if isinstance(r, Word) else Word(tuple(r)) for r in self.relators)
        object.__setattr__(self, "relators", rels)
        if self.num_generators < 0:
            raise ValueError("generator count must be non-negative")
        for r in rels:
            if r.max_index() > self.num_generators:
                raise ValueError(
                    f"relator {r} uses generator {r.max_index()} "
                    f"but only {self.num_generators} exist"
                )

    def to_dict(self) -> dict:
        return {"generators": self.num_generators, "relators": [list(r.letters) for r in self.relators]}

    @classmethod
    def from_dict(cls, data: dict) -> FinitePresentation:
        return cls(int(data["generators"]), tuple(Word(tuple(r)) for r in data["relators"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> FinitePresentation:
        return cls.from_dict(json.loads(text))


def relation_matrix(P: FinitePresentation) -> IntMatrix:
    return IntMatrix.from_rows(
        [exponent_sum_vector(r, P.num_generators) for r in P.relators],
        cols=P.num_generators,
    )


def abelianization(P: FinitePresentation) -> FgAbelianGroup:
    return cokernel(relation_matrix(P))


def quotient_by_words(P: FinitePresentation, ws: Sequence[Word]) -> FinitePresentation:
    """Present ``P`` modulo the normal closure of ``ws``."""
    return FinitePresentation(P.num_generators, P.relators + tuple(ws))


def commutator(x: Word, y: Word) -> Word:
    return x * y * x.inverse() * y.inverse()


def _braid_relators(num_generators: int) -> list[Word]:
    rels = []
    for i in range(1, num_generators):
        s, t = Word.gen(i), Word.gen(i + 1)
        rels.append((s * t * s) * (t * s * t).inverse())
    for i in range(1, num_generators + 1):
        for j in range(i + 2, num_generators + 1):
            s, t = Word.gen(i), Word.gen(j)
            rels.append((s * t) * (t * s).inverse())
    return rels


def artin_braid_presentation(n: int) -> FinitePresentation:
    """Artin presentation of the braid group on ``n`` strands."""
    if n < 2:
        raise ValueError(f"braid group needs at least 2 strands, got {n}")
    return FinitePresentation(n - 1, tuple(_braid_relators(n - 1)))


def _ascending(k: int) -> Word:
    return Word(tuple(range(1, k + 1)))


def braid_center_word(n: int) -> Word:
    """``(s_1 ... s_{n-1})^n``, the full twist generating the center."""
    if n < 2:
        raise ValueError(f"braid group needs at least 2 strands, got {n}")
    return _ascending(n - 1) ** n


def birman_hilden_presentation(n: int, d: int) -> FinitePresentation:
    """Symmetric mapping class group of a numerically admissible degree-``d``
    cyclic cover of the sphere branched over ``n`` points.

    Generators ``t_1..t_{n-1}`` with the braid relations, plus
    ``(t_1..t_{n-1} t_{n-1}..t_1)^d``, ``(t_1..t_{n-1})^n`` and the
    commutator ``[t_1..t_{n-1}, t_1]``. The commutator is always the last
    relator.
    """
    if n < 3:
        raise ValueError(f"need at least 3 branch points, got {n}")
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    up = _ascending(n - 1)
    down = Word(tuple(reversed(up.letters)))
    rels = _braid_relators(n - 1)
    rels.append((up * down) ** d)
    rels.append(up ** n)
    rels.append(commutator(up, Word.gen(1)))
    return FinitePresentation(n - 1, tuple(rels))

