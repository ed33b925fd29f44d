"""
Cyclic branched covers of the sphere given by ``y^d = prod (x - a_j)^{n_j}``.

Only the degree and the exponent list matter here; the branch positions
``a_j`` never enter. The point at infinity is a branch point exactly when
``sum(n_j)`` is not divisible by ``d``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Optional

from .errors import GenusRangeError, NotAdmissibleError, SpecParseError
from .linalg import FgAbelianGroup
from .presentations import abelianization, birman_hilden_presentation


@dataclass(frozen=True)
class CyclicCoverSpec:
    degree: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        d = self.degree
        if d < 2:
            raise ValueError(f"degree must be at least 2, got {d}")
        if not self.exponents:
            raise ValueError("need at least one exponent")
        for e in self.exponents:
            if not 1 <= e < d:
                raise ValueError(f"exponent {e} outside 1..{d - 1}")
        if math.gcd(d, *self.exponents) != 1:
            raise ValueError(
                f"gcd(d, exponents) = {math.gcd(d, *self.exponents)} != 1: the curve is reducible"
            )

    @property
    def k(self) -> int:
        return len(self.exponents)

    @property
    def infinity_exponent(self) -> int:
        """Local monodromy exponent at infinity; 0 when infinity is unbranched."""
        return -sum(self.exponents) % self.degree

    @classmethod
    def parse(cls, text: str) -> CyclicCoverSpec:
        """Parse ``"d=3; e=1,1,2"`` or the JSON form ``{"degree": 3, "exponents": [1, 1, 2]}``."""
        text = text.strip()
        try:
            if text.startswith("{"):
                return cls.from_dict(json.loads(text))
            fields = {}
            for part in filter(None, (p.strip() for p in text.split(";"))):
                key, sep, value = part.partition("=")
                if not sep:
                    raise SpecParseError(f"expected key=value, got {part!r}")
                fields[key.strip().lower()] = value.strip()
            d = fields.pop("d", fields.pop("degree", None))
            e = fields.pop("e", fields.pop("exponents", None))
            if d is None or e is None:
                raise SpecParseError("spec needs both d=<degree> and e=<exponents>")
            if fields:
                raise SpecParseError(f"unknown keys: {', '.join(sorted(fields))}")
            exps = tuple(int(x) for x in re.split(r"[,\s]+", e) if x)
            return cls(int(d), exps)
        except SpecParseError:
            raise
        except (ValueError, KeyError, TypeError) as exc:
            raise SpecParseError(f"cannot parse cover spec {text!r}: {exc}") from exc

    @classmethod
    def from_dict(cls, data: dict) -> CyclicCoverSpec:
        return cls(int(data["degree"]), tuple(data["exponents"]))

    def to_dict(self) -> dict:
        return {"degree": self.degree, "exponents": list(self.exponents)}

    def __str__(self) -> str:
        return f"d={self.degree}; e={','.join(map(str, self.exponents))}"


@dataclass(frozen=True)
class CoverAnalysis:
    genus: int
    branch_count: int
    admissible: Optional[int]
    balanced_superelliptic: Optional[tuple[int, int]] = None

    @property
    def is_admissible(self) -> bool:
        return self.admissible is not None

    @property
    def in_stable_range(self) -> bool:
        return self.genus >= 2


def analyze(spec: CyclicCoverSpec) -> CoverAnalysis:
    d = spec.degree
    local = list(spec.exponents)
    if spec.infinity_exponent:
        local.append(spec.infinity_exponent)
    # Riemann-Hurwitz: 2 - 2g = 2d - sum_p (d - gcd(n_p, d))
    ramification = sum(d - math.gcd(e, d) for e in local)
    euler = 2 * d - ramification
    assert euler % 2 == 0
    genus = (2 - euler) // 2
    balanced = None
    if d >= 3 and genus >= 2:
        n = is_balanced_superelliptic(genus, d)
        if n is not None and len(local) == 2 * n + 2:
            balanced = (d, n)
    return CoverAnalysis(
        genus=genus,
        branch_count=len(local),
        admissible=is_numerically_admissible(spec),
        balanced_superelliptic=balanced,
    )


def is_numerically_admissible(spec: CyclicCoverSpec) -> Optional[int]:
    """Which admissibility clause holds (1, 2 or 3), checked in order; None if none does.

    The clauses are stated on the affine data ``(d, n_1..n_k)``; a branch
    point at infinity is not counted in ``k``.
    """
    d, ns, k = spec.degree, spec.exponents, spec.k
    if len(set(ns)) == 1 and k % d in (0, d - 1):
        return 1
    if d >= 3 and k == 1:
        return 2
    if d >= 3 and k == 2 and (ns[0] + ns[1]) % d == 0:
        return 3
    return None


def admissibility_failure(spec: CyclicCoverSpec) -> str:
    """Human-readable reason each clause fails."""
    d, ns, k = spec.degree, spec.exponents, spec.k
    reasons = []
    if len(set(ns)) != 1:
        reasons.append("clause 1: exponents are not all equal")
    else:
        reasons.append(f"clause 1: k = {k} is {k % d} mod {d}, not 0 or -1")
    reasons.append("clause 2: needs d >= 3 and k = 1" + ("" if d >= 3 else f" (d = {d})") + f", k = {k}")
    if d < 3 or k != 2:
        reasons.append(f"clause 3: needs d >= 3 and k = 2 (d = {d}, k = {k})")
    else:
        reasons.append(f"clause 3: n_1 + n_2 = {ns[0] + ns[1]} is not 0 mod {d}")
    return "not numerically admissible; " + "; ".join(reasons)


def is_balanced_superelliptic(g: int, d: int) -> Optional[int]:
    """``n = g / (d - 1)`` when it is an integer, else None."""
    if d < 3:
        raise ValueError(f"superelliptic degree must be at least 3, got {d}")
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    return g // (d - 1) if g % (d - 1) == 0 else None


def smcg_abelianization(spec: CyclicCoverSpec) -> FgAbelianGroup:
    """Abelianized symmetric mapping class group, from its presentation."""
    info = analyze(spec)
    if info.admissible is None:
        raise NotAdmissibleError(admissibility_failure(spec))
    if info.genus < 2:
        raise GenusRangeError(f"genus {info.genus} is outside the g >= 2 regime")
    return abelianization(birman_hilden_presentation(info.branch_count, spec.degree))
