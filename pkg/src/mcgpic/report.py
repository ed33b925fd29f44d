"""Structured results shared by the command line and JSON output."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .linalg import FgAbelianGroup

SCHEMA_VERSION = 1

PRESENTATION = "presentation+SNF"
CLOSED_FORM = "closed-form"
BOTH_AGREE = "both-agree"
METHODS = (PRESENTATION, CLOSED_FORM, BOTH_AGREE)

# Stable citation tags. README.md carries the long-form statement for each.
CITATIONS = {
    "Thm-Pic-is-H1": "Pic of M_g^H is H_1 of the symmetric mapping class group when the latter is finite",
    "Thm-BH-presentation": "presentation of the symmetric mapping class group of a numerically admissible cyclic cover",
    "Cor-BH-abelianization": "that group abelianizes to Z/((n-1) gcd(n, 2d))",
    "Thm-GW-admissible": "numerical admissibility clauses for y^d = prod (x - a_j)^{n_j}",
    "Cor-hyperelliptic-pic": "Pic H_g = Z/(4g+2) for even g, Z/(8g+4) for odd g",
    "Thm-GW-balanced": "H_1 of the liftable mapping class group of a balanced superelliptic cover",
    "Prop-PutnamSato": "H_1 of the level-m congruence subgroup of Sp_g(Z), m >= 3",
    "Def-Lambda3-0": "Lambda^3 V_m modulo theta ^ V_m",
    "Cor-Mgc-torsion": "torsion of Pic M_g^c[m] = Lambda^3_0 V_m + H_1(Sp_g(Z)[m])",
    "Std-Sp-F2-order": "|Sp_2g(F_2)| = 2^(g^2) prod (4^k - 1)",
    "Formula-hyp-components": "component count of the hyperelliptic locus at even level",
    "Prop-Gg-abelianization": "H_1(G_g) = Z/2 for even g, Z/4 for odd g",
    "Thm-hyp-compact-type": "Pic H_g^c = Z^floor(g/2) + Z/2 or Z/4",
    "Lemma-Delta-level2": "H_1(Delta_g[2]) = Z^(g(2g+1)-1) + Z/2",
    "Lemma-PMod-sphere": "H_1 of the pure mapping class group of the n-punctured sphere is free of rank n(n-3)/2",
    "Thm-Arnold": "rational cohomology of B_n is Q in degrees 0 and 1, zero above",
}


@dataclass
class PicardReport:
    subject: str
    method: str
    citations: list[str]
    inputs: dict[str, Any]
    group: Optional[FgAbelianGroup] = None
    value: Optional[int] = None
    details: dict[str, Any] = field(default_factory=dict)
    routes: dict[str, FgAbelianGroup] = field(default_factory=dict)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if not self.citations:
            raise ValueError("a report needs at least one citation")
        unknown = [c for c in self.citations if c not in CITATIONS]
        if unknown:
            raise ValueError(f"unknown citation tags {unknown}")
        if self.method == BOTH_AGREE:
            if len(self.routes) < 2 or any(g != self.group for g in self.routes.values()):
                raise ValueError("both-agree needs at least two routes that all equal the group")

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "subject": self.subject,
            "group": self.group.to_dict() if self.group is not None else None,
            "group_text": str(self.group) if self.group is not None else None,
            "value": self.value,
            "method": self.method,
            "citations": list(self.citations),
            "inputs": dict(self.inputs),
            "details": dict(self.details),
            "routes": {k: v.to_dict() for k, v in self.routes.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> PicardReport:
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        group = data.get("group")
        return cls(
            subject=data["subject"],
            method=data["method"],
            citations=list(data["citations"]),
            inputs=dict(data["inputs"]),
            group=FgAbelianGroup.from_dict(group) if group is not None else None,
            value=data.get("value"),
            details=dict(data.get("details", {})),
            routes={k: FgAbelianGroup.from_dict(v) for k, v in data.get("routes", {}).items()},
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> PicardReport:
        return cls.from_dict(json.loads(text))

    @property
    def result_text(self) -> str:
        return str(self.group) if self.group is not None else str(self.value)

    def render(self) -> str:
        lines = [
            f"subject:   {self.subject}",
            f"result:    {self.result_text}",
            f"method:    {self.method}",
            f"citations: {', '.join(self.citations)}",
        ]
        if self.inputs:
            lines.append("inputs:    " + ", ".join(f"{k}={v}" for k, v in self.inputs.items()))
        for k, v in self.details.items():
            lines.append(f"{k}: {v}")
        return "\n".join(lines)
