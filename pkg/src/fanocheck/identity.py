"""Exact verification of the weighted Betti / Chern number identities.

For a smooth projective variety of dimension n with no odd cohomology the
inequality

    sum_k h^{2k} (k - n/2)^2  <=  (1/6) c_1 c_{n-1} + (n/12) c_n

holds, with equality exactly when all off-diagonal Hodge numbers vanish;
the gap is the defect sum h^{p,q} ((q-p)/2)^2.  Everything here is computed
in exact rational arithmetic; equality always means exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .diamond import HodgeDiamond, chi_p, defect
from .errors import HypothesisViolated, LengthMismatch, NotPalindromic
from .invariants import ToricInvariants
from .lattice import FaceLattice, FanoPolytope, edge_interior_points


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of the identity plus the individual verdicts.

    rhs-dependent fields are None when the Chern numbers needed to compute
    them were not supplied; face_count_ok is only filled in toric mode.
    """

    n: int
    lhs: Fraction
    defect: Fraction
    rhs: Fraction | None = None
    equality: bool | None = None
    inequality_ok: bool | None = None
    chi_identity_ok: bool | None = None
    quarter_form_ok: bool | None = None
    face_count_ok: bool | None = None


def weighted_betti_sum(betti, n: int) -> Fraction:
    """sum_k betti[k] * (k - n/2)^2, exact."""
    if len(betti) != n + 1:
        raise LengthMismatch(f"expected {n + 1} entries, got {len(betti)}")
    half_n = Fraction(n, 2)
    return sum((b * (k - half_n) ** 2 for k, b in enumerate(betti)), Fraction(0))


def chern_side(c1_cn1: int, c_n: int, n: int) -> Fraction:
    """(1/6) c_1 c_{n-1} + (n/12) c_n, exact."""
    return Fraction(c1_cn1, 6) + Fraction(n, 12) * c_n


def chi_weighted_sum(chi, n: int) -> Fraction:
    """sum_p chi[p] * (p - n/2)^2, exact."""
    if len(chi) != n + 1:
        raise LengthMismatch(f"expected {n + 1} entries, got {len(chi)}")
    half_n = Fraction(n, 2)
    return sum((c * (p - half_n) ** 2 for p, c in enumerate(chi)), Fraction(0))


def verify_chi_identity(chi, c1_cn1: int, c_n: int, n: int) -> bool:
    """Exact test of sum_p chi_p (p - n/2)^2 = (1/6) c_1 c_{n-1} + (n/12) c_n.

    The chi list must be palindromic (chi_p = chi_{n-p}), which holds for
    any variety by Serre duality.
    """
    if len(chi) != n + 1:
        raise LengthMismatch(f"expected {n + 1} entries, got {len(chi)}")
    if tuple(chi) != tuple(chi)[::-1]:
        raise NotPalindromic(f"chi list {tuple(chi)} is not palindromic")
    return chi_weighted_sum(chi, n) == chern_side(c1_cn1, c_n, n)


def quarter_weighted_form(betti, c1_cn1: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the identity in its original normalization.

    lhs = (1/4) sum_k h^{2k} (k - (n-1)/2)(1 - k + (n-1)/2) and
    rhs = (1/24) ((3-n)/2 * chi(X) - c_1 c_{n-1}), with chi(X) taken as the
    sum of the Betti numbers.  The two sides agree exactly iff the rewritten
    (k - n/2)^2 form does.
    """
    if len(betti) != n + 1:
        raise LengthMismatch(f"expected {n + 1} entries, got {len(betti)}")
    mid = Fraction(n - 1, 2)
    lhs = Fraction(1, 4) * sum(
        (b * (k - mid) * (1 - k + mid) for k, b in enumerate(betti)), Fraction(0)
    )
    euler = sum(betti)
    rhs = Fraction(1, 24) * (Fraction(3 - n, 2) * euler - c1_cn1)
    return lhs, rhs


def check_betti_chern(
    diamond: HodgeDiamond, c1_cn1: int, c_n: int
) -> IdentityReport:
    """Full identity report for a diamond with known Chern numbers.

    Requires vanishing odd cohomology.  equality <=> defect == 0 for
    consistent inputs; chi_identity_ok records whether the chi-weighted sum
    matches the Chern side (true for every actual variety), and
    quarter_form_ok whether the original-normalization identity holds.
    """
    if not diamond.is_odd_vanishing:
        raise HypothesisViolated(
            "diamond has nonzero odd cohomology; the inequality does not apply"
        )
    n = diamond.n
    betti = diamond.even_betti()
    lhs = weighted_betti_sum(betti, n)
    rhs = chern_side(c1_cn1, c_n, n)
    gap = defect(diamond)
    quarter_lhs, quarter_rhs = quarter_weighted_form(betti, c1_cn1, n)
    return IdentityReport(
        n=n,
        lhs=lhs,
        defect=gap,
        rhs=rhs,
        equality=lhs == rhs,
        inequality_ok=lhs <= rhs,
        chi_identity_ok=chi_weighted_sum(chi_p(diamond), n) == rhs,
        quarter_form_ok=quarter_lhs == quarter_rhs,
    )


def verify_face_count_identity(delta: FanoPolytope, faces: FaceLattice) -> bool:
    """Combinatorial form of the identity on the dual polytope:

    #2-faces = (1/12) * (interior points summed over edges)
             + (n^2/8 - n/6) * #vertices,  exactly.
    """
    n = delta.dim
    fvec = faces.f_vector()
    two_faces = fvec[2] if n >= 2 else 0
    interior_total = sum(
        edge_interior_points(
            delta.vertices[e.vertex_indices[0]], delta.vertices[e.vertex_indices[1]]
        )
        for e in faces.faces(1)
    )
    rhs = Fraction(interior_total, 12) + (
        Fraction(n * n, 8) - Fraction(n, 6)
    ) * fvec[0]
    return Fraction(two_faces) == rhs


def toric_identity_report(
    delta: FanoPolytope, faces: FaceLattice, inv: ToricInvariants
) -> IdentityReport:
    """Identity report for a smooth toric Fano given its computed invariants.

    The diamond is the diagonal one built from the Betti numbers, so for a
    correct pipeline equality must hold with defect zero.
    """
    report = check_betti_chern(
        HodgeDiamond.from_betti(inv.betti), inv.c1_cn1, inv.c_n
    )
    return replace(report, face_count_ok=verify_face_count_identity(delta, faces))
