"""Root systems of the classical families (plus G2), Weyl vector, dimension formula.

Roots are integer vectors over the simple roots; inner products come from the
rational Gram matrix of the simple roots.  The normalized form `inner` is
scaled so the Casimir scalar of the adjoint representation is 1, matching the
Killing form built downstream from structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, frac, inverse

SUPPORTED_FAMILIES = ("A", "B", "C", "D", "G")

# positive-root counts per family, used as a construction self-check
_POSITIVE_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "G": lambda l: 6,
}


class UnsupportedTypeError(ValueError):
    """Requested family/rank outside the supported range."""


def _min_rank(family: str) -> int:
    return {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}[family]


def _gram_matrix(family: str, l: int) -> list[list[Fraction]]:
    G = [[Fraction(0)] * l for _ in range(l)]
    if family == "A":
        for i in range(l):
            G[i][i] = Fraction(2)
        for i in range(l - 1):
            G[i][i + 1] = G[i + 1][i] = Fraction(-1)
    elif family == "B":
        # last simple root short (norm 1)
        for i in range(l):
            G[i][i] = Fraction(2)
        G[l - 1][l - 1] = Fraction(1)
        for i in range(l - 1):
            G[i][i + 1] = G[i + 1][i] = Fraction(-1)
    elif family == "C":
        # last simple root long (norm 4)
        for i in range(l):
            G[i][i] = Fraction(2)
        G[l - 1][l - 1] = Fraction(4)
        for i in range(l - 2):
            G[i][i + 1] = G[i + 1][i] = Fraction(-1)
        if l >= 2:
            G[l - 2][l - 1] = G[l - 1][l - 2] = Fraction(-2)
    elif family == "D":
        for i in range(l):
            G[i][i] = Fraction(2)
        for i in range(l - 2):
            G[i][i + 1] = G[i + 1][i] = Fraction(-1)
        G[l - 3][l - 1] = G[l - 1][l - 3] = Fraction(-1)
    elif family == "G":
        G = [[Fraction(2), Fraction(-3)], [Fraction(-3), Fraction(6)]]
    return G


@dataclass(frozen=True)
class RootDatum:
    """Simple roots, positive roots, Cartan matrix and normalized inner product."""

    family: str
    rank: int
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]  # root-basis coordinates, by height then lex
    cartan: tuple[tuple[int, ...], ...]  # cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
    fundamental_in_root: tuple[tuple[Fraction, ...], ...]  # omega_i in the root basis
    norm: Fraction  # <x,y> = norm * gram pairing

    @property
    def l(self) -> int:
        return self.rank

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def g(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def d(self) -> int:
        return (self.g + self.rank) // 2

    @property
    def rho_root(self) -> tuple[Fraction, ...]:
        acc = [Fraction(0)] * self.rank
        for root in self.positive_roots:
            for i, c in enumerate(root):
                acc[i] += c
        return tuple(x / 2 for x in acc)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def height(self, root) -> int:
        return sum(root)

    def pairing_gram(self, u, v) -> Fraction:
        acc = Fraction(0)
        for i, a in enumerate(u):
            if a:
                row = self.gram[i]
                for j, b in enumerate(v):
                    if b:
                        acc += frac(a) * row[j] * frac(b)
        return acc

    def inner(self, u, v) -> Fraction:
        """Killing-normalized inner product on root-basis coordinates."""
        return self.norm * self.pairing_gram(u, v)

    def weight_to_root(self, weight) -> tuple[Fraction, ...]:
        """Coordinates over the simple roots of sum_i weight[i] * omega_i."""
        if len(weight) != self.rank:
            raise ValueError("weight length mismatch")
        acc = [Fraction(0)] * self.rank
        for i, a in enumerate(weight):
            if a:
                for j, c in enumerate(self.fundamental_in_root[i]):
                    acc[j] += frac(a) * c
        return tuple(acc)

    def adjoint_weight(self) -> tuple[int, ...]:
        """Highest root expressed on the fundamental weights."""
        theta = self.highest_root
        coeffs = []
        for j in range(self.rank):
            alpha_j = tuple(1 if k == j else 0 for k in range(self.rank))
            val = 2 * self.pairing_gram(theta, alpha_j) / self.pairing_gram(alpha_j, alpha_j)
            if val.denominator != 1:
                raise ValueError("non-integral Cartan pairing")
            coeffs.append(int(val))
        return tuple(coeffs)

    def to_json(self) -> dict:
        return {
            "type": self.label(),
            "g": self.g,
            "l": self.rank,
            "d": self.d,
            "positive_roots": [list(r) for r in self.positive_roots],
        }


def _close_positive_roots(gram: list[list[Fraction]], l: int) -> list[tuple[int, ...]]:
    """Generate all positive roots from the simple ones by root strings."""

    def pair(u, v):
        return sum(frac(a) * gram[i][j] * frac(b) for i, a in enumerate(u) for j, b in enumerate(v) if a and b)

    simples = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    known = set(simples)
    by_height: dict[int, list[tuple[int, ...]]] = {1: list(simples)}
    h = 1
    while by_height.get(h):
        nxt: list[tuple[int, ...]] = []
        for beta in by_height[h]:
            for i, alpha in enumerate(simples):
                gamma = tuple(b + a for b, a in zip(beta, alpha))
                if gamma in known:
                    continue
                # beta - k*alpha_i string going down
                p = 0
                cur = tuple(b - a for b, a in zip(beta, alpha))
                while cur in known:
                    p += 1
                    cur = tuple(b - a for b, a in zip(cur, alpha))
                pairing = 2 * pair(beta, alpha) / pair(alpha, alpha)
                if p - pairing > 0:
                    known.add(gamma)
                    nxt.append(gamma)
        h += 1
        if nxt:
            by_height[h] = nxt
    # height first, then natural simple-root order within a height
    out = sorted(known, key=lambda r: (sum(r), tuple(-c for c in r)))
    return out


def build_root_datum(family: str, rank: int) -> RootDatum:
    """Root datum for the requested family and rank.

    Raises UnsupportedTypeError for families outside A/B/C/D/G or ranks below
    the family minimum (A: 1, B and C: 2, D: 3, G: exactly 2).
    """
    family = family.upper()
    if family not in SUPPORTED_FAMILIES:
        raise UnsupportedTypeError(f"unsupported family {family!r}")
    if rank < _min_rank(family) or (family == "G" and rank != 2):
        raise UnsupportedTypeError(f"unsupported rank {rank} for family {family}")
    gram = _gram_matrix(family, rank)
    positives = _close_positive_roots(gram, rank)
    expected = _POSITIVE_COUNT[family](rank)
    if len(positives) != expected:
        raise AssertionError(f"{family}{rank}: expected {expected} positive roots, got {len(positives)}")

    cartan_rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            val = 2 * gram[i][j] / gram[j][j]
            if val.denominator != 1:
                raise AssertionError("non-integral Cartan matrix")
            row.append(int(val))
        cartan_rows.append(tuple(row))

    # omega_i = sum_k (M^{-1})[i][k] alpha_k where M[k][j] = cartan[k][j]
    cartan_matrix = Matrix.from_rows([[Fraction(x) for x in row] for row in cartan_rows])
    cartan_inv = inverse(cartan_matrix)
    fundamental = tuple(tuple(cartan_inv.row(i)) for i in range(rank))

    rd = RootDatum(
        family=family,
        rank=rank,
        gram=tuple(tuple(row) for row in gram),
        positive_roots=tuple(positives),
        cartan=tuple(cartan_rows),
        fundamental_in_root=fundamental,
        norm=Fraction(1),
    )
    # fix the normalization so that <theta, theta + 2rho> = 1
    theta = rd.highest_root
    two_rho = tuple(2 * x for x in rd.rho_root)
    target = rd.pairing_gram(theta, tuple(t + r for t, r in zip(theta, two_rho)))
    rd = RootDatum(
        family=rd.family,
        rank=rd.rank,
        gram=rd.gram,
        positive_roots=rd.positive_roots,
        cartan=rd.cartan,
        fundamental_in_root=rd.fundamental_in_root,
        norm=Fraction(1) / target,
    )
    _validate(rd)
    return rd


def _validate(rd: RootDatum) -> None:
    assert rd.g == rd.rank + 2 * rd.n_positive
    assert 2 * rd.d == rd.g + rd.rank
    # every non-simple positive root is a sum of two positive roots
    pos = set(rd.positive_roots)
    for root in rd.positive_roots:
        if sum(root) == 1:
            continue
        ok = any(
            tuple(r - a for r, a in zip(root, alpha)) in pos
            for alpha in rd.positive_roots
            if alpha != root
        )
        if not ok:
            raise AssertionError(f"positive root {root} admits no decomposition")
    # Casimir on the adjoint representation is 1
    theta = rd.highest_root
    two_rho = tuple(2 * x for x in rd.rho_root)
    val = rd.inner(theta, tuple(t + r for t, r in zip(theta, two_rho)))
    if val != 1:
        raise AssertionError(f"Killing normalization broken: <theta, theta+2rho> = {val}")
    # rho on the fundamental-weight side is (1, ..., 1)
    if rd.weight_to_root((1,) * rd.rank) != rd.rho_root:
        raise AssertionError("rho is not the sum of the fundamental weights")


def parse_type_label(label: str) -> tuple[str, int]:
    """Split labels like 'A2' or 'C2' into (family, rank)."""
    label = label.strip()
    if len(label) < 2 or not label[0].isalpha():
        raise UnsupportedTypeError(f"malformed type label {label!r}")
    family = label[0].upper()
    try:
        rank = int(label[1:])
    except ValueError as exc:
        raise UnsupportedTypeError(f"malformed type label {label!r}") from exc
    return family, rank


def weyl_dim(rd: RootDatum, weight) -> int:
    """Dimension of the irreducible module with the given dominant weight.

    Product over positive roots of (weight+rho, alpha) / (rho, alpha); the
    normalization scalar cancels.
    """
    if any(frac(a) < 0 for a in weight):
        raise ValueError("weight is not dominant")
    lam = rd.weight_to_root(weight)
    rho = rd.rho_root
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    num = Fraction(1)
    den = Fraction(1)
    for alpha in rd.positive_roots:
        num *= rd.pairing_gram(lam_rho, alpha)
        den *= rd.pairing_gram(rho, alpha)
    value = num / den
    if value.denominator != 1 or value <= 0:
        raise AssertionError(f"Weyl dimension not a positive integer: {value}")
    return int(value)


def casimir_eigenvalue(rd: RootDatum, weight) -> Fraction:
    """Casimir scalar <weight, weight + 2 rho> in the Killing normalization."""
    if any(frac(a) < 0 for a in weight):
        raise ValueError("weight is not dominant")
    lam = rd.weight_to_root(weight)
    two_rho = tuple(2 * x for x in rd.rho_root)
    return rd.inner(lam, tuple(a + b for a, b in zip(lam, two_rho)))


def dominance_check(rd: RootDatum, lam, mu) -> bool:
    """True iff mu - lam is a non-negative integer combination of simple roots."""
    diff_root = tuple(
        b - a
        for a, b in zip(rd.weight_to_root(lam), rd.weight_to_root(mu))
    )
    return all(c.denominator == 1 and c >= 0 for c in diff_root)


def two_rho(rd: RootDatum) -> tuple[int, ...]:
    return (2,) * rd.rank


def dim_gamma_two_rho(rd: RootDatum) -> int:
    return weyl_dim(rd, two_rho(rd))
