"""Semisimple Lie algebras with exact structure constants from matrix realizations.

Each supported type is realized by trace-zero, symplectic or orthogonal
matrices with a diagonal Cartan part; root vectors are combinations of
elementary matrices.  Structure constants are extracted exactly, the Killing
form is the ad-trace form recomputed from them, and the trilinear form is
w(x, y, z) = kappa([x, y], z).

Basis order: h_1..h_l, then x_alpha for positive roots by height, then
x_{-alpha} in the same order.  Negative root vectors are rescaled so each
(x_alpha, x_{-alpha}, [x_alpha, x_{-alpha}]) is an sl2-triple with
alpha([x_alpha, x_{-alpha}]) = 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, frac, inverse, kernel_basis, rref, solve_in_span
from .roots import RootDatum, UnsupportedTypeError, build_root_datum

Vector = tuple[Fraction, ...]


class StructureError(AssertionError):
    """A structural identity of the algebra failed to hold."""


class InvolutionError(ValueError):
    """Sign data cannot be extended to a Lie algebra involution."""


# ---------------------------------------------------------------------------
# matrix realizations


def _elementary(n: int, i: int, j: int, c=1) -> dict[tuple[int, int], Fraction]:
    return {(i, j): frac(c)}


def _mat_add(*mats) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    for m in mats:
        for key, val in m.items():
            new = out.get(key, Fraction(0)) + val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def _mat_scale(m, c):
    c = frac(c)
    return {k: c * v for k, v in m.items() if c * v}


def _mat_commutator(a, b):
    out: dict[tuple[int, int], Fraction] = {}
    for (i, k), va in a.items():
        for (k2, j), vb in b.items():
            if k == k2:
                key = (i, j)
                new = out.get(key, Fraction(0)) + va * vb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    for (i, k), vb in b.items():
        for (k2, j), va in a.items():
            if k == k2:
                key = (i, j)
                new = out.get(key, Fraction(0)) - vb * va
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return out


def _root_evector(rd: RootDatum, root: Sequence[int]) -> tuple[int, ...]:
    """Root in the weight coordinates of the defining representation."""
    l = rd.rank
    if rd.family == "A":
        out = [0] * (l + 1)
        for k, c in enumerate(root):
            out[k] += c
            out[k + 1] -= c
    else:
        out = [0] * l
        for k, c in enumerate(root):
            if k < l - 1:
                out[k] += c
                out[k + 1] -= c
            elif rd.family == "B":
                out[k] += c
            elif rd.family == "C":
                out[k] += 2 * c
            elif rd.family == "D":
                out[l - 2] += c
                out[l - 1] += c
    return tuple(out)


def _realize_root_vector(rd: RootDatum, evec: tuple[int, ...]):
    """Matrix (sparse dict) of a root vector for the given weight pattern."""
    fam, l = rd.family, rd.rank
    support = [(i, c) for i, c in enumerate(evec) if c]
    if fam == "A":
        (i, a), (j, b) = support
        if a == 1 and b == -1:
            return _elementary(l + 1, i, j)
        return _elementary(l + 1, j, i)
    if len(support) == 1:
        (i, a) = support[0]
        if fam == "C":
            if a == 2:
                return _elementary(2 * l, i, l + i)
            return _elementary(2 * l, l + i, i)
        if fam == "B":
            last = 2 * l
            if a == 1:
                return _mat_add(_elementary(2 * l + 1, i, last), _mat_scale(_elementary(2 * l + 1, last, l + i), -1))
            return _mat_add(_elementary(2 * l + 1, l + i, last), _mat_scale(_elementary(2 * l + 1, last, i), -1))
    (i, a), (j, b) = support
    n = 2 * l + 1 if fam == "B" else 2 * l
    if a == 1 and b == -1:
        return _mat_add(_elementary(n, i, j), _mat_scale(_elementary(n, l + j, l + i), -1))
    if a == -1 and b == 1:
        return _mat_add(_elementary(n, j, i), _mat_scale(_elementary(n, l + i, l + j), -1))
    if a == 1 and b == 1:
        if fam == "C":
            return _mat_add(_elementary(n, i, l + j), _elementary(n, j, l + i))
        return _mat_add(_elementary(n, i, l + j), _mat_scale(_elementary(n, j, l + i), -1))
    if fam == "C":
        return _mat_add(_elementary(n, l + i, j), _elementary(n, l + j, i))
    return _mat_add(_elementary(n, l + i, j), _mat_scale(_elementary(n, l + j, i), -1))


def _realize(rd: RootDatum):
    """Cartan matrices, positive and negative root vector matrices, ambient size."""
    fam, l = rd.family, rd.rank
    if fam == "G":
        raise UnsupportedTypeError("no matrix realization shipped for G2")
    n = {"A": l + 1, "B": 2 * l + 1, "C": 2 * l, "D": 2 * l}[fam]
    if fam == "A":
        cartan = [_mat_add(_elementary(n, i, i), _mat_scale(_elementary(n, i + 1, i + 1), -1)) for i in range(l)]
    else:
        cartan = [_mat_add(_elementary(n, i, i), _mat_scale(_elementary(n, l + i, l + i), -1)) for i in range(l)]
    pos, neg = [], []
    for root in rd.positive_roots:
        evec = _root_evector(rd, root)
        pos.append(_realize_root_vector(rd, evec))
        neg.append(_realize_root_vector(rd, tuple(-c for c in evec)))
    return cartan, pos, neg, n


# ---------------------------------------------------------------------------
# the algebra proper


class LieAlgebra:
    """Basis-indexed structure constants with derived Killing and trilinear forms.

    Attributes are read-only by convention.  Derived data (kappa, its inverse,
    the table of w on basis triples) is recomputed from the bracket table, so
    a corrupted table yields an algebra whose verification suites fail.
    """

    def __init__(self, rd: RootDatum, labels, weights, brackets, realization=None):
        self.rd = rd
        self.g = rd.g
        self.l = rd.rank
        self.d = rd.d
        self.n_pos = rd.n_positive
        self.labels = tuple(labels)
        self.weights = tuple(tuple(w) for w in weights)
        # brackets[i][j]: dict k -> coefficient of b_k in [b_i, b_j]
        self.brackets = brackets
        self.realization = realization
        if len(self.labels) != self.g or len(self.weights) != self.g:
            raise ValueError("basis size mismatch")
        self.kappa = self._ad_trace_form()
        self._kappa_inv: Matrix | None = None
        self._w_table: dict[tuple[int, int, int], Fraction] | None = None
        self._cache: dict = {}

    # -- index layout -------------------------------------------------------

    def pos_index(self, a: int) -> int:
        """Basis index of x_alpha for the a-th positive root."""
        return self.l + a

    def neg_index(self, a: int) -> int:
        """Basis index of x_{-alpha} for the a-th positive root."""
        return self.l + self.n_pos + a

    def partner(self, i: int) -> int | None:
        """Index pairing x_alpha with x_{-alpha}; None on the Cartan part."""
        if i < self.l:
            return None
        if i < self.l + self.n_pos:
            return i + self.n_pos
        return i - self.n_pos

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.g))

    def root_of_index(self, i: int) -> tuple[int, ...] | None:
        if i < self.l:
            return None
        return self.weights[i]

    # -- brackets and forms ---------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return self.brackets[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """[x, y] for coordinate vectors of length g."""
        acc = [Fraction(0)] * self.g
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.brackets[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = frac(a) * frac(b)
                for k, c in row[j].items():
                    acc[k] += ab * c
        return tuple(acc)

    def _ad_trace_form(self) -> Matrix:
        g = self.g
        entries = [Fraction(0)] * (g * g)
        for i in range(g):
            row_i = self.brackets[i]
            for j in range(i, g):
                row_j = self.brackets[j]
                acc = Fraction(0)
                for k in range(g):
                    for m, c1 in row_i[k].items():
                        c2 = row_j[m].get(k)
                        if c2:
                            acc += c1 * c2
                entries[i * g + j] = acc
                entries[j * g + i] = acc
        return Matrix(g, g, tuple(entries))

    @property
    def kappa_inv(self) -> Matrix:
        if self._kappa_inv is None:
            self._kappa_inv = inverse(self.kappa)
        return self._kappa_inv

    def dual_basis_vector(self, i: int) -> Vector:
        """Vector b^i with kappa(b^i, b_j) = delta_ij."""
        return self.kappa_inv.row(i)

    def kappa_pair(self, x: Sequence, y: Sequence) -> Fraction:
        acc = Fraction(0)
        for i, a in enumerate(x):
            if not a:
                continue
            base = i * self.g
            for j, b in enumerate(y):
                if b:
                    acc += frac(a) * self.kappa.entries[base + j] * frac(b)
        return acc

    @property
    def w_table(self) -> dict[tuple[int, int, int], Fraction]:
        """Nonzero values w(b_i, b_j, b_k) on ascending basis triples."""
        if self._w_table is None:
            table = {}
            g = self.g
            for i in range(g):
                row = self.brackets[i]
                for j in range(i + 1, g):
                    bij = row[j]
                    if not bij:
                        continue
                    for k in range(j + 1, g):
                        acc = Fraction(0)
                        base_k = k
                        for m, c in bij.items():
                            val = self.kappa.entries[m * g + base_k]
                            if val:
                                acc += c * val
                        if acc:
                            table[(i, j, k)] = acc
            self._w_table = table
        return self._w_table

    def w_basis(self, i: int, j: int, k: int) -> Fraction:
        """w on a basis triple in any index order."""
        if i == j or j == k or i == k:
            return Fraction(0)
        sign = 1
        a, b, c = i, j, k
        if a > b:
            a, b, sign = b, a, -sign
        if b > c:
            b, c, sign = c, b, -sign
        if a > b:
            a, b, sign = b, a, -sign
        val = self.w_table.get((a, b, c))
        if not val:
            return Fraction(0)
        return val if sign > 0 else -val

    def w_eval(self, x: Sequence, y: Sequence, z: Sequence) -> Fraction:
        """w(x, y, z) = kappa([x, y], z) for arbitrary coordinate vectors."""
        acc = Fraction(0)
        for (i, j, k), val in self.w_table.items():
            det3 = (
                frac(x[i]) * (frac(y[j]) * frac(z[k]) - frac(y[k]) * frac(z[j]))
                - frac(x[j]) * (frac(y[i]) * frac(z[k]) - frac(y[k]) * frac(z[i]))
                + frac(x[k]) * (frac(y[i]) * frac(z[j]) - frac(y[j]) * frac(z[i]))
            )
            if det3:
                acc += val * det3
        return acc

    def ad_matrix(self, i: int) -> Matrix:
        g = self.g
        entries = [Fraction(0)] * (g * g)
        for j in range(g):
            for k, c in self.brackets[i][j].items():
                entries[k * g + j] = c
        return Matrix(g, g, tuple(entries))

    # -- root bookkeeping ----------------------------------------------------

    def positive_root_index(self, root) -> int:
        return self.rd.positive_roots.index(tuple(root))

    def decomposition(self, a: int) -> tuple[int, int]:
        """One fixed decomposition gamma = alpha + beta of a non-simple positive root.

        alpha is the lowest-height positive root (first in root order) with
        gamma - alpha again positive.
        """
        gamma = self.rd.positive_roots[a]
        pos = self.rd.positive_roots
        pos_set = {r: idx for idx, r in enumerate(pos)}
        for b, alpha in enumerate(pos):
            rest = tuple(gc - ac for gc, ac in zip(gamma, alpha))
            if rest in pos_set:
                return b, pos_set[rest]
        raise StructureError(f"positive root {gamma} admits no decomposition")

    def all_decompositions(self, a: int) -> list[tuple[int, int]]:
        gamma = self.rd.positive_roots[a]
        pos = self.rd.positive_roots
        pos_set = {r: idx for idx, r in enumerate(pos)}
        out = []
        for b, alpha in enumerate(pos):
            rest = tuple(gc - ac for gc, ac in zip(gamma, alpha))
            idx = pos_set.get(rest)
            if idx is not None and b <= idx:
                out.append((b, idx))
        return out

    def n_constant(self, i: int, j: int) -> Fraction:
        """Coefficient N with [b_i, b_j] = N x_{gamma} for root vectors, gamma the root sum."""
        br = self.brackets[i][j]
        nonzero = [(k, c) for k, c in br.items() if c]
        if len(nonzero) != 1:
            raise StructureError(f"bracket of indices {i},{j} is not a single root vector")
        return nonzero[0][1]

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        constants = []
        for i in range(self.g):
            for j in range(i + 1, self.g):
                for k in sorted(self.brackets[i][j]):
                    constants.append({"i": i, "j": j, "k": k, "c": str(self.brackets[i][j][k])})
        from .linalg import matrix_to_json

        return {
            "type": self.rd.label(),
            "g": self.g,
            "basis": list(self.labels),
            "constants": constants,
            "kappa": matrix_to_json(self.kappa),
        }

    def with_corrupted_constant(self, i: int, j: int, k: int, amount=1) -> "LieAlgebra":
        """Copy with C_{ij}^k shifted by ``amount`` (antisymmetry preserved)."""
        amount = frac(amount)
        brackets = [[dict(cell) for cell in row] for row in self.brackets]

        def bump(a, b, delta):
            new = brackets[a][b].get(k, Fraction(0)) + delta
            if new:
                brackets[a][b][k] = new
            else:
                brackets[a][b].pop(k, None)

        bump(i, j, amount)
        bump(j, i, -amount)
        return LieAlgebra(self.rd, self.labels, self.weights, brackets, self.realization)


def algebra_from_json(data: dict) -> LieAlgebra:
    """Rebuild an algebra from its JSON dump; bit-exact round trip with to_json."""
    from .roots import parse_type_label

    family, rank = parse_type_label(data["type"])
    rd = build_root_datum(family, rank)
    g = rd.g
    brackets = [[{} for _ in range(g)] for _ in range(g)]
    for rec in data["constants"]:
        i, j, k = rec["i"], rec["j"], rec["k"]
        c = Fraction(rec["c"])
        brackets[i][j][k] = c
        brackets[j][i][k] = -c
    labels = tuple(data["basis"])
    weights = _standard_weights(rd)
    return LieAlgebra(rd, labels, weights, brackets)


def _standard_weights(rd: RootDatum):
    zero = (0,) * rd.rank
    weights = [zero] * rd.rank
    weights += [tuple(r) for r in rd.positive_roots]
    weights += [tuple(-c for c in r) for r in rd.positive_roots]
    return tuple(weights)


def _standard_labels(rd: RootDatum):
    labels = [f"h{i + 1}" for i in range(rd.rank)]
    labels += ["x(" + ",".join(str(c) for c in r) + ")" for r in rd.positive_roots]
    labels += ["x(" + ",".join(str(-c) for c in r) + ")" for r in rd.positive_roots]
    return tuple(labels)


def build_algebra(rd: RootDatum) -> LieAlgebra:
    """Concrete algebra for the root datum, with sl2-normalized root vectors."""
    cartan, pos, neg, n = _realize(rd)
    l, n_pos = rd.rank, rd.n_positive
    g = rd.g

    def diag_value(mat, evec) -> Fraction:
        # evaluate the weight given by evec on a diagonal matrix
        acc = Fraction(0)
        for i, c in enumerate(evec):
            if c:
                acc += c * mat.get((i, i), Fraction(0))
        return acc

    # sl2 normalization: [x_a, y_a] = H with alpha(H) = 2
    for a, root in enumerate(rd.positive_roots):
        evec = _root_evector(rd, root)
        h_raw = _mat_commutator(pos[a], neg[a])
        c = diag_value(h_raw, evec)
        if c == 0:
            raise StructureError(f"degenerate root pairing for {root}")
        neg[a] = _mat_scale(neg[a], Fraction(2) / c)

    basis_mats = cartan + pos + neg
    labels = _standard_labels(rd)
    weights = _standard_weights(rd)

    # expansion solver: write any matrix of the algebra in the chosen basis
    flat_cols = sorted({key for m in basis_mats for key in m})
    col_of = {key: idx for idx, key in enumerate(flat_cols)}
    B = Matrix.from_rows(
        [[m.get(key, Fraction(0)) for key in flat_cols] for m in basis_mats]
    )
    red, pivots = rref(B)
    if len(pivots) != g:
        raise StructureError("realization basis is linearly dependent")
    sub = Matrix.from_rows([[B[i, p] for p in pivots] for i in range(g)])
    sub_inv_t = inverse(sub).transpose()

    def expand(mat) -> dict[int, Fraction]:
        restricted = [mat.get(flat_cols[p], Fraction(0)) for p in pivots]
        coeffs = sub_inv_t.matvec(restricted)
        # exact verification that mat equals the claimed combination
        residual = dict(mat)
        for i, c in enumerate(coeffs):
            if not c:
                continue
            for key, val in basis_mats[i].items():
                newv = residual.get(key, Fraction(0)) - c * val
                if newv:
                    residual[key] = newv
                else:
                    residual.pop(key, None)
        if residual:
            raise StructureError("bracket escapes the algebra span")
        return {i: c for i, c in enumerate(coeffs) if c}

    brackets = [[{} for _ in range(g)] for _ in range(g)]
    for i in range(g):
        for j in range(i + 1, g):
            cm = _mat_commutator(basis_mats[i], basis_mats[j])
            coeffs = expand(cm) if cm else {}
            brackets[i][j] = coeffs
            brackets[j][i] = {k: -c for k, c in coeffs.items()}

    L = LieAlgebra(rd, labels, weights, brackets, realization=basis_mats)
    _check_root_grading(L)
    return L


def _check_root_grading(L: LieAlgebra) -> None:
    """[h_i, x] = alpha(h_i) x must hold for every root vector of the built basis."""
    for i in range(L.l):
        for j in range(L.l, L.g):
            br = L.brackets[i][j]
            extra = [k for k in br if k != j]
            if extra:
                raise StructureError(f"[h{i + 1}, {L.labels[j]}] leaves the root line")


# ---------------------------------------------------------------------------
# validation suites over all basis triples


def check_antisymmetry(L: LieAlgebra) -> list[tuple]:
    bad = []
    for i in range(L.g):
        for j in range(L.g):
            lhs = L.brackets[i][j]
            rhs = L.brackets[j][i]
            if set(lhs) != set(rhs) or any(lhs[k] != -rhs[k] for k in lhs):
                bad.append((i, j))
    return bad


def check_jacobi(L: LieAlgebra) -> list[tuple]:
    """Triples (i, j, k) violating [[i,j],k] + [[j,k],i] + [[k,i],j] = 0."""
    bad = []
    g = L.g
    for i in range(g):
        for j in range(i + 1, g):
            bij = L.brackets[i][j]
            for k in range(j + 1, g):
                acc: dict[int, Fraction] = {}
                for m, c in bij.items():
                    for t, c2 in L.brackets[m][k].items():
                        acc[t] = acc.get(t, Fraction(0)) + c * c2
                for m, c in L.brackets[j][k].items():
                    for t, c2 in L.brackets[m][i].items():
                        acc[t] = acc.get(t, Fraction(0)) + c * c2
                for m, c in L.brackets[k][i].items():
                    for t, c2 in L.brackets[m][j].items():
                        acc[t] = acc.get(t, Fraction(0)) + c * c2
                if any(acc.values()):
                    bad.append((i, j, k))
    return bad


def check_kappa_invariance(L: LieAlgebra) -> list[tuple]:
    """Triples violating kappa([x,y],z) = -kappa(y,[x,z]) on the basis."""
    bad = []
    g = L.g
    kap = L.kappa
    for i in range(g):
        for j in range(g):
            bij = L.brackets[i][j]
            for k in range(g):
                lhs = Fraction(0)
                for m, c in bij.items():
                    lhs += c * kap.entries[m * g + k]
                rhs = Fraction(0)
                for m, c in L.brackets[i][k].items():
                    rhs += kap.entries[j * g + m] * c
                if lhs + rhs != 0:
                    bad.append((i, j, k))
    return bad


def check_w_antisymmetry(L: LieAlgebra) -> list[tuple]:
    """Ordered basis triples where kappa([b_i,b_j],b_k) deviates from the alternating table."""
    bad = []
    g = L.g
    kap = L.kappa
    for i in range(g):
        for j in range(g):
            bij = L.brackets[i][j]
            for k in range(g):
                direct = Fraction(0)
                for m, c in bij.items():
                    direct += c * kap.entries[m * g + k]
                if direct != L.w_basis(i, j, k):
                    bad.append((i, j, k))
    return bad


def check_root_space_pairing(L: LieAlgebra) -> list[tuple]:
    """Failures of kappa(h, x_a) = 0 and kappa(x_a, x_b) = 0 unless b = -a."""
    bad = []
    for i in range(L.g):
        for j in range(i, L.g):
            val = L.kappa[i, j]
            wi = L.weights[i]
            wj = L.weights[j]
            opposite = all(a + b == 0 for a, b in zip(wi, wj))
            if opposite:
                rooted = i >= L.l and j >= L.l
                if rooted and val == 0:
                    bad.append((i, j))  # root pairing must be nonzero
                continue
            if val != 0:
                bad.append((i, j))
    return bad


def trace_form_ratio(L: LieAlgebra) -> Fraction | None:
    """Scalar relating the realization trace form to kappa, if proportional."""
    if L.realization is None:
        return None
    mats = L.realization

    def tr_prod(a, b):
        acc = Fraction(0)
        for (i, k), va in a.items():
            vb = b.get((k, i))
            if vb:
                acc += va * vb
        return acc

    ratio = None
    for i in range(L.g):
        for j in range(i, L.g):
            t = tr_prod(mats[i], mats[j])
            k = L.kappa[i, j]
            if k == 0 and t == 0:
                continue
            if k == 0 or t == 0:
                return None
            r = k / t
            if ratio is None:
                ratio = r
            elif ratio != r:
                return None
    return ratio


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of the algebra, held as a canonical reduced echelon basis."""

    def __init__(self, L: LieAlgebra, rows):
        if isinstance(rows, Matrix):
            mat = rows
        else:
            rows = [list(r) for r in rows]
            mat = Matrix.from_rows(rows) if rows else Matrix(0, L.g, ())
        if mat.cols != L.g:
            raise ValueError("ambient dimension mismatch")
        red, pivots = rref(mat)
        keep = [list(red.row(i)) for i in range(len(pivots))]
        self.L = L
        self.matrix = Matrix.from_rows(keep) if keep else Matrix(0, L.g, ())
        self.pivots = pivots
        self.dim = len(pivots)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.L is other.L
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((id(self.L), self.matrix.entries))

    def basis_rows(self) -> list[Vector]:
        return [self.matrix.row(i) for i in range(self.dim)]

    def contains(self, vector) -> bool:
        return solve_in_span(self.matrix, [frac(x) for x in vector]) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis_rows())

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace(self.L, self.matrix.vstack(other.matrix))

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.L, Matrix(0, self.L.g, ()))
        stacked = Matrix.from_rows(
            [list(r) for r in self.basis_rows()] + [[-x for x in r] for r in other.basis_rows()]
        )
        ker = kernel_basis(stacked.transpose())
        rows = []
        for i in range(ker.rows):
            coeffs = ker.row(i)[: self.dim]
            vec = [Fraction(0)] * self.L.g
            for c, row in zip(coeffs, self.basis_rows()):
                if c:
                    for j, x in enumerate(row):
                        vec[j] += c * x
            rows.append(vec)
        return Subspace(self.L, rows)

    def to_json(self) -> dict:
        from .linalg import matrix_to_json

        data = matrix_to_json(self.matrix)
        data["dim"] = self.dim
        return data

    @staticmethod
    def from_json(L: LieAlgebra, data: dict) -> "Subspace":
        from .linalg import matrix_from_json

        mat = matrix_from_json(data)
        sub = Subspace(L, mat)
        if "dim" in data and sub.dim != data["dim"]:
            raise ValueError("declared dimension does not match basis rank")
        return sub


def cartan_subspace(L: LieAlgebra) -> Subspace:
    return Subspace(L, [L.basis_vector(i) for i in range(L.l)])


def standard_borel(L: LieAlgebra) -> Subspace:
    rows = [L.basis_vector(i) for i in range(L.l)]
    rows += [L.basis_vector(L.pos_index(a)) for a in range(L.n_pos)]
    return Subspace(L, rows)


def opposite_borel(L: LieAlgebra) -> Subspace:
    rows = [L.basis_vector(i) for i in range(L.l)]
    rows += [L.basis_vector(L.neg_index(a)) for a in range(L.n_pos)]
    return Subspace(L, rows)


def full_algebra(L: LieAlgebra) -> Subspace:
    return Subspace(L, Matrix.identity(L.g))


def root_pair_plane(L: LieAlgebra, a: int) -> Subspace:
    return Subspace(L, [L.basis_vector(L.pos_index(a)), L.basis_vector(L.neg_index(a))])


def orthogonal_complement(L: LieAlgebra, S: Subspace) -> Subspace:
    """Kappa-orthogonal complement; dim S + dim complement = g."""
    if S.dim == 0:
        return full_algebra(L)
    return Subspace(L, kernel_basis(S.matrix @ L.kappa))


# ---------------------------------------------------------------------------
# involutions


class Involution:
    """Automorphism of order two acting as -id on the Cartan subalgebra."""

    def __init__(self, L: LieAlgebra, signs, matrix: Matrix):
        self.L = L
        self.signs = tuple(signs)  # one sign per positive root
        self.matrix = matrix

    def apply(self, vector) -> Vector:
        return self.matrix.matvec([frac(x) for x in vector])

    def fixed_subspace(self) -> Subspace:
        m = self.matrix.sub(Matrix.identity(self.L.g))
        return Subspace(self.L, kernel_basis(m.transpose()))

    def minus_subspace(self) -> Subspace:
        m = self.matrix.add(Matrix.identity(self.L.g))
        return Subspace(self.L, kernel_basis(m.transpose()))


def build_involution(L: LieAlgebra, simple_signs) -> Involution:
    """Involution with sigma(h) = -h and sigma(x_alpha) = t_alpha x_{-alpha}.

    One sign per simple root is free; signs of the remaining positive roots
    are forced by the automorphism property and must come out as +1 or -1.
    """
    simple_signs = tuple(int(s) for s in simple_signs)
    if len(simple_signs) != L.l or any(s not in (1, -1) for s in simple_signs):
        raise InvolutionError("need one sign in {+1,-1} per simple root")
    n_pos = L.n_pos
    signs: list[Fraction | None] = [None] * n_pos
    for a in range(L.l):
        signs[a] = Fraction(simple_signs[a])
    for a in range(L.l, n_pos):
        b, c = L.decomposition(a)
        if signs[b] is None or signs[c] is None:
            raise StructureError("positive roots are not in height order")
        n_pp = L.n_constant(L.pos_index(b), L.pos_index(c))
        n_mm = L.n_constant(L.neg_index(b), L.neg_index(c))
        t = signs[b] * signs[c] * n_mm / n_pp
        if t not in (1, -1):
            raise InvolutionError(
                f"sign extension for root {L.rd.positive_roots[a]} gives {t}, not a unit"
            )
        # consistency over every decomposition
        for b2, c2 in L.all_decompositions(a):
            n2_pp = L.n_constant(L.pos_index(b2), L.pos_index(c2))
            n2_mm = L.n_constant(L.neg_index(b2), L.neg_index(c2))
            t2 = signs[b2] * signs[c2] * n2_mm / n2_pp
            if t2 != t:
                raise InvolutionError("decompositions disagree on the extended sign")
        signs[a] = t

    g = L.g
    cols = []
    for i in range(L.l):
        cols.append({i: Fraction(-1)})
    for a in range(n_pos):
        cols.append({L.neg_index(a): signs[a]})
    for a in range(n_pos):
        cols.append({L.pos_index(a): signs[a]})
    entries = [Fraction(0)] * (g * g)
    for j, col in enumerate(cols):
        for i, v in col.items():
            entries[i * g + j] = v
    sigma = Matrix(g, g, tuple(entries))

    if sigma @ sigma != Matrix.identity(g):
        raise InvolutionError("sigma squared is not the identity")
    for i in range(g):
        si = sigma.matvec(L.basis_vector(i))
        for j in range(i + 1, g):
            sj = sigma.matvec(L.basis_vector(j))
            lhs = sigma.matvec(
                [L.brackets[i][j].get(k, Fraction(0)) for k in range(g)]
            )
            rhs = L.bracket(si, sj)
            if tuple(lhs) != tuple(rhs):
                raise InvolutionError(f"sigma fails to be an automorphism on ({i},{j})")

    inv = Involution(L, signs, sigma)
    if inv.fixed_subspace().dim != (g - L.l) // 2 or inv.minus_subspace().dim != L.d:
        raise InvolutionError("eigenspace dimensions are off")
    return inv
