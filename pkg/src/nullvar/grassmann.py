"""Plucker vectors and the linear equations cutting the nullspace variety out of the Grassmannian.

Membership of a d-dimensional subspace in the variety is decided by a single
linear condition on its Plucker vector: the degree-lowering contraction with
the trilinear form must vanish.  The contraction's coordinates on degree d are
exactly the linear equation set; its row space matches, through the pairing
induced by the Killing form, the space of hyperplanes spanned by the wedge
images from degree d-3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieAlgebra, Subspace, orthogonal_complement
from .exterior import (
    MultiVector,
    binomial_dim,
    blocked_rank,
    degree_keys,
    delta_star,
    graded_matrix,
    key_index_map,
    wedge_rows,
)
from .linalg import Matrix, det, frac, rank
from .seeds import Lcg
from .variety import chart, is_nullspace, random_chart_parameters, random_subspace


def plucker(L: LieAlgebra, S: Subspace) -> MultiVector:
    """Wedge of the canonical basis rows of a d-dimensional subspace."""
    if S.dim != L.d:
        raise ValueError(f"Plucker vectors require dimension {L.d}, got {S.dim}")
    v = wedge_rows(L, S.basis_rows())
    if v.is_zero():
        raise AssertionError("independent rows wedge to zero")
    return v


def linear_membership(L: LieAlgebra, P: MultiVector) -> bool:
    """True iff the contraction of P by the trilinear form vanishes.

    For decomposable P this is equivalent to the spanning subspace being a
    nullspace; the map is total, so non-decomposable inputs are processed too.
    """
    if P.degree != L.d:
        raise ValueError("membership is defined on degree-d vectors")
    return delta_star(P).is_zero()


@dataclass(frozen=True)
class LinearEquationSet:
    """Coordinates of the degree-d contraction: one row per linear equation."""

    matrix: Matrix
    rank: int
    ambient_plucker_dim: int

    def to_json(self) -> dict:
        from .linalg import matrix_to_json

        data = matrix_to_json(self.matrix)
        data["rank"] = self.rank
        data["ambient_plucker_dim"] = self.ambient_plucker_dim
        return data


def equation_set(L: LieAlgebra) -> LinearEquationSet:
    op = graded_matrix(L, "delta_star", L.d)
    return LinearEquationSet(
        matrix=op.matrix,
        rank=blocked_rank(L, "delta_star", L.d),
        ambient_plucker_dim=binomial_dim(L.g, L.d),
    )


def equation_count(L: LieAlgebra) -> int:
    """Independent linear equations: rank of the wedge map from degree d-3."""
    if L.d - 3 < 0:
        return 0
    return blocked_rank(L, "delta", L.d - 3)


def residual_dimension(L: LieAlgebra) -> int:
    """Dimension of the linear span left after imposing the equations."""
    return binomial_dim(L.g, L.d) - equation_count(L)


# ---------------------------------------------------------------------------
# the kappa pairing on exterior powers and the transpose relation


def pairing_matrix(L: LieAlgebra, k: int) -> Matrix:
    """Gram matrix of the kappa-induced pairing on degree k basis wedges."""
    keys = degree_keys(L, k)
    index = key_index_map(L, k)
    n = len(keys)
    entries = [Fraction(0)] * (n * n)
    cartan = list(range(L.l))
    for row_idx, key in enumerate(keys):
        bits = []
        kk = key
        while kk:
            bits.append((kk & -kk).bit_length() - 1)
            kk &= kk - 1
        root_part = [i for i in bits if i >= L.l]
        h_count = len(bits) - len(root_part)
        partner_key = 0
        for i in root_part:
            partner_key |= 1 << L.partner(i)
        # candidates: partner of the root part plus any Cartan subset of equal size
        for h_subset in itertools.combinations(cartan, h_count):
            other = partner_key
            for i in h_subset:
                other |= 1 << i
            col_idx = index.get(other)
            if col_idx is None:
                continue
            other_bits = []
            kk = other
            while kk:
                other_bits.append((kk & -kk).bit_length() - 1)
                kk &= kk - 1
            gram = Matrix.from_rows(
                [[L.kappa[i, j] for j in other_bits] for i in bits]
            )
            entries[row_idx * n + col_idx] = det(gram)
    return Matrix(n, n, tuple(entries))


def transpose_identity_sign(L: LieAlgebra) -> int | None:
    """Sign s with M(contraction at d)^T G_{d-3} = s G_d M(wedge at d-3), or None.

    An exact matrix identity; its existence means the equation row space is the
    kappa-transpose of the wedge image from degree d-3.
    """
    low = L.d - 3
    if low < 0:
        return 1
    m_star = graded_matrix(L, "delta_star", L.d).matrix
    m_delta = graded_matrix(L, "delta", low).matrix
    g_low = pairing_matrix(L, low)
    g_high = pairing_matrix(L, L.d)
    lhs = m_star.transpose() @ g_low
    rhs = g_high @ m_delta
    if lhs == rhs:
        return 1
    if lhs == rhs.scale(-1):
        return -1
    return None


def stacked_rank_check(L: LieAlgebra) -> bool:
    """Row space of the equation matrix equals the pairing image of the wedge map.

    Stacks the contraction matrix over the pairing-transported wedge columns
    and verifies the rank does not grow.
    """
    low = L.d - 3
    if low < 0:
        return True
    m_star = graded_matrix(L, "delta_star", L.d).matrix
    transported = (pairing_matrix(L, L.d) @ graded_matrix(L, "delta", low).matrix).transpose()
    base = rank(m_star)
    stacked = rank(m_star.vstack(transported))
    return base == stacked == rank(transported)


# ---------------------------------------------------------------------------
# the agreement suite between the linear and the direct membership tests


@dataclass(frozen=True)
class MembershipReport:
    samples: int
    seed: int
    disagreements: int
    checked_true: int
    checked_false: int
    tautology_failures: int

    @property
    def ok(self) -> bool:
        return self.disagreements == 0 and self.tautology_failures == 0

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "samples": self.samples,
            "seed": self.seed,
            "disagreements": self.disagreements,
            "agree_true": self.checked_true,
            "agree_false": self.checked_false,
            "tautology_failures": self.tautology_failures,
        }


def membership_equivalence_suite(L: LieAlgebra, samples: int, seed: int) -> MembershipReport:
    """Seeded agreement check between the linear test and the direct predicate.

    Rotates through three sample kinds: random d-subspaces with entries in
    -3..3, random chart points, and kappa-orthogonals of random subspaces of
    dimension (g-l)/2.  For chart points also guards the tautologies that the
    double orthogonal complement returns the point and that the complement has
    dimension (g-l)/2.
    """
    rng = Lcg(seed)
    disagreements = 0
    agree_true = 0
    agree_false = 0
    tautology_failures = 0
    half = (L.g - L.l) // 2
    for i in range(samples):
        kind = i % 3
        if kind == 0:
            V = random_subspace(L, rng, L.d)
        elif kind == 1:
            V = chart(L, random_chart_parameters(L, rng))
        else:
            S = random_subspace(L, rng, half)
            V = orthogonal_complement(L, S)
        direct = is_nullspace(L, V)
        linear = linear_membership(L, plucker(L, V))
        if direct != linear:
            disagreements += 1
        elif direct:
            agree_true += 1
        else:
            agree_false += 1
        if kind == 1:
            comp = orthogonal_complement(L, V)
            if comp.dim != half:
                tautology_failures += 1
            back = orthogonal_complement(L, comp)
            if back != V or not linear_membership(L, plucker(L, back)):
                tautology_failures += 1
    return MembershipReport(
        samples=samples,
        seed=seed,
        disagreements=disagreements,
        checked_true=agree_true,
        checked_false=agree_false,
        tautology_failures=tautology_failures,
    )


def check_equivariance_matrices(L: LieAlgebra, degrees) -> bool:
    """Contraction commutes with every basis Lie action at the listed degrees."""
    from .exterior import lie_action_basis

    for k in degrees:
        for i in range(L.g):
            for key in degree_keys(L, k):
                u = MultiVector(L, k, {key: Fraction(1)})
                if delta_star(lie_action_basis(L, i, u)) != lie_action_basis(L, i, delta_star(u)):
                    return False
    return True
