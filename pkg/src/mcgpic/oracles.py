"""
Closed-form group computations for moduli spaces of curves with symmetry.

Each function checks its parameter range and returns either an
:class:`~mcgpic.linalg.FgAbelianGroup` in invariant-factor form or an
exact integer. :data:`REGISTRY` indexes them for the command line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .linalg import FgAbelianGroup, cokernel, reduce_mod, theta_wedge_matrix


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def hyperelliptic_pic(g: int) -> FgAbelianGroup:
    """Picard group of the hyperelliptic locus: ``Z/(4g+2)`` for even g, ``Z/(8g+4)`` for odd g."""
    _require(g >= 2, f"genus must be at least 2, got {g}")
    return FgAbelianGroup.cyclic(4 * g + 2 if g % 2 == 0 else 8 * g + 4)


def admissible_h1_order(n: int, d: int) -> int:
    _require(n >= 3, f"branch count must be at least 3, got {n}")
    _require(d >= 2, f"degree must be at least 2, got {d}")
    return (n - 1) * math.gcd(n, 2 * d)


def admissible_h1(n: int, d: int) -> FgAbelianGroup:
    return FgAbelianGroup.cyclic(admissible_h1_order(n, d))


def balanced_superelliptic_h1(n: int) -> FgAbelianGroup:
    """First homology of the liftable mapping class group of a balanced superelliptic cover over ``2n+2`` points."""
    _require(n >= 2, f"n must be at least 2, got {n}")
    if n % 2:
        return FgAbelianGroup.from_orders([2, 2, n * (n - 1) ** 2])
    return FgAbelianGroup.from_orders([2, 2 * n * (n - 1) ** 2])


def sp_level_h1(g: int, m: int) -> FgAbelianGroup:
    """Abelianization of the level-``m`` congruence subgroup of ``Sp_{2g}(Z)``, ``m >= 3``."""
    _require(g >= 2, f"genus must be at least 2, got {g}")
    _require(m >= 3, f"level must be at least 3, got {m}")
    if m % 2:
        return FgAbelianGroup.from_orders([m] * (g * (2 * g + 1)))
    return FgAbelianGroup.from_orders([m] * (g * (2 * g - 1)) + [2 * m] * (2 * g))


def lambda3_0(g: int, m: int) -> FgAbelianGroup:
    """``(Lambda^3 V / theta ^ V) (x) Z/m``, computed from the integral cokernel."""
    _require(g >= 3, f"genus must be at least 3, got {g}")
    _require(m >= 2, f"modulus must be at least 2, got {m}")
    return reduce_mod(cokernel(theta_wedge_matrix(g)), m)


def pic_mgc_torsion(g: int, m: int) -> FgAbelianGroup:
    """Torsion of the Picard group of compact-type curves with level-``m`` structure."""
    _require(g >= 3, f"genus must be at least 3, got {g}")
    _require(m >= 3, f"level must be at least 3, got {m}")
    return lambda3_0(g, m) + sp_level_h1(g, m)


def sp2_order(g: int) -> int:
    """``|Sp_{2g}(F_2)| = 2^{g^2} prod_{k=1}^{g} (4^k - 1)``."""
    _require(g >= 1, f"genus must be at least 1, got {g}")
    return 2 ** (g * g) * math.prod(4 ** k - 1 for k in range(1, g + 1))


def hyperelliptic_level_components(g: int, m: int) -> int:
    """Number of components of the hyperelliptic locus with level-``m`` structure.

    For even ``m`` this is ``|Sp_{2g}(F_2)| / (2g+2)!``, independent of ``m``.
    """
    _require(g >= 2, f"genus must be at least 2, got {g}")
    _require(m >= 1, f"level must be at least 1, got {m}")
    if m % 2:
        return 1
    num, den = sp2_order(g), math.factorial(2 * g + 2)
    if num % den:
        raise ArithmeticError(f"{num} / {den} is not an integer")
    return num // den


def gg_abelianization(g: int) -> FgAbelianGroup:
    """Abelianization of the image of the hyperelliptic mapping class group in ``Sp_g(Z)``."""
    _require(g >= 2, f"genus must be at least 2, got {g}")
    return FgAbelianGroup.cyclic(2 if g % 2 == 0 else 4)


def pic_hyp_compact_type(g: int) -> FgAbelianGroup:
    _require(g >= 2, f"genus must be at least 2, got {g}")
    return FgAbelianGroup(g // 2, (2,) if g % 2 == 0 else (4,))


def delta_g_level2_h1(g: int) -> FgAbelianGroup:
    _require(g >= 2, f"genus must be at least 2, got {g}")
    return FgAbelianGroup(g * (2 * g + 1) - 1, (2,))


def pmod_sphere_h1(n: int) -> FgAbelianGroup:
    """Pure mapping class group of the ``n``-punctured sphere, abelianized: ``Z^{n(n-3)/2}``."""
    _require(n >= 4, f"need at least 4 punctures, got {n}")
    return FgAbelianGroup(n * (n - 3) // 2)


def arnold_braid_cohomology(n: int, j: int) -> int:
    """Dimension of ``H^j(B_n; Q)``."""
    _require(n >= 2, f"need at least 2 strands, got {n}")
    _require(j >= 0, f"degree must be non-negative, got {j}")
    return 1 if j in (0, 1) else 0


@dataclass(frozen=True)
class Oracle:
    name: str
    func: Callable
    params: tuple[str, ...]
    subject: str
    citation: str


REGISTRY: dict[str, Oracle] = {
    o.name: o
    for o in [
        Oracle("hyperelliptic-pic", hyperelliptic_pic, ("g",), "H_g", "Cor-hyperelliptic-pic"),
        Oracle("admissible-h1", admissible_h1, ("n", "d"), "M_g^H for cyclic cover", "Cor-BH-abelianization"),
        Oracle("balanced-superelliptic", balanced_superelliptic_h1, ("n",),
               "coker(H -> Pic M_g^H), balanced superelliptic", "Thm-GW-balanced"),
        Oracle("sp-level-h1", sp_level_h1, ("g", "m"), "H_1(Sp_g(Z)[m])", "Prop-PutnamSato"),
        Oracle("lambda3-0", lambda3_0, ("g", "m"), "Lambda^3_0 V_m", "Def-Lambda3-0"),
        Oracle("pic-mgc-torsion", pic_mgc_torsion, ("g", "m"), "M_g^c[m] torsion", "Cor-Mgc-torsion"),
        Oracle("sp2-order", sp2_order, ("g",), "|Sp_2g(F_2)|", "Std-Sp-F2-order"),
        Oracle("components", hyperelliptic_level_components, ("g", "m"),
               "components of M_g^hyp[m]", "Formula-hyp-components"),
        Oracle("gg-abelianization", gg_abelianization, ("g",), "H_1(G_g)", "Prop-Gg-abelianization"),
        Oracle("pic-hyp-compact", pic_hyp_compact_type, ("g",), "H_g^c", "Thm-hyp-compact-type"),
        Oracle("delta-level2-h1", delta_g_level2_h1, ("g",), "H_1(Delta_g[2])", "Lemma-Delta-level2"),
        Oracle("pmod-sphere-h1", pmod_sphere_h1, ("n",), "H_1(PMod(S_0,n))", "Lemma-PMod-sphere"),
        Oracle("arnold", arnold_braid_cohomology, ("n", "j"), "dim H^j(B_n; Q)", "Thm-Arnold"),
    ]
}
