"""Named verification suites producing reproducible report records.

Each record carries the mathematical claim it checks, the expected and
observed values, and a pass flag.  Record computations are isolated: an
exception inside one check becomes a failing record naming that check, so a
corrupted algebra degrades to red records instead of a crash.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import __version__
from .algebra import (
    LieAlgebra,
    build_algebra,
    build_involution,
    check_antisymmetry,
    check_jacobi,
    check_kappa_invariance,
    check_root_space_pairing,
    check_w_antisymmetry,
    orthogonal_complement,
    root_pair_plane,
    standard_borel,
    trace_form_ratio,
)
from .exterior import (
    borel_top_wedge,
    casimir,
    check_operator_invariance,
    check_w_sharp_invariance,
    delta_kernel_vectors,
    delta_star_scalar,
    verify_exact_sequences,
    verify_zeta_identity,
    w_sharp,
)
from .grassmann import (
    check_equivariance_matrices,
    equation_count,
    membership_equivalence_suite,
    residual_dimension,
    stacked_rank_check,
    transpose_identity_sign,
)
from .repcheck import claims_for, verify_dimension_claim, verify_gamma_window
from .roots import build_root_datum, casimir_eigenvalue, dim_gamma_two_rho, two_rho
from .seeds import Lcg
from .variety import (
    chart,
    chart_consistency,
    check_d_relations,
    d_operator_corank,
    degenerate,
    is_nullspace,
    jacobian_corank_at,
    orbit_label,
    parabolic_profile,
    random_chart_parameters,
)

SUITES = ("structure", "exterior", "nullspace", "equations", "repthy")


@dataclass(frozen=True)
class Record:
    suite: str
    name: str
    claim: str
    expected: Any
    got: Any
    ok: bool

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "claim": self.claim,
            "expected": _jsonable(self.expected),
            "got": _jsonable(self.got),
            "ok": self.ok,
        }


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


@dataclass
class SuiteConfig:
    family: str
    rank: int
    suite: str = "all"
    seed: int = 42
    samples: int = 200
    chart_samples: int = 50
    zeta_samples: int = 100
    degree_cap: int | None = None
    corrupt: tuple[int, int, int] | None = None

    def type_label(self) -> str:
        return f"{self.family}{self.rank}"

    def to_json(self) -> dict:
        return {
            "type": self.type_label(),
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "chart_samples": self.chart_samples,
            "zeta_samples": self.zeta_samples,
            "degree_cap": self.degree_cap,
            "corrupt": list(self.corrupt) if self.corrupt else None,
        }


class _Collector:
    def __init__(self, suite: str):
        self.suite = suite
        self.records: list[Record] = []

    def add(self, name: str, claim: str, expected, fn: Callable[[], Any]):
        """Run one check; exceptions become failing records naming the check."""
        try:
            got = fn()
            ok = got == expected
        except Exception as exc:  # a broken algebra must yield a red record, not a crash
            got = f"error: {type(exc).__name__}: {exc}"
            ok = False
        self.records.append(
            Record(suite=self.suite, name=name, claim=claim, expected=expected, got=got, ok=ok)
        )

    def add_value(self, name: str, claim: str, fn: Callable[[], Any]):
        """Record an observed value with no independent expectation; errors fail."""
        try:
            got = fn()
            ok = True
        except Exception as exc:
            got = f"error: {type(exc).__name__}: {exc}"
            ok = False
        self.records.append(
            Record(suite=self.suite, name=name, claim=claim, expected="reported", got=got, ok=ok)
        )


# ---------------------------------------------------------------------------
# individual suites


def structure_records(L: LieAlgebra) -> list[Record]:
    col = _Collector("structure")
    rd = L.rd
    col.add(
        "dimension_bookkeeping",
        "g = l + 2 #positive roots and d = (g + l)/2",
        (rd.g, rd.l, rd.d),
        lambda: (L.g, L.l, L.d),
    )
    col.add(
        "dim_gamma_2rho",
        "Weyl dimension of the module with highest weight twice the Weyl vector",
        dim_gamma_two_rho(rd),
        lambda: dim_gamma_two_rho(rd),
    )
    col.add(
        "bracket_antisymmetry",
        "[x,y] = -[y,x] on all basis pairs",
        0,
        lambda: len(check_antisymmetry(L)),
    )
    col.add(
        "jacobi_identity",
        "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all basis triples",
        0,
        lambda: len(check_jacobi(L)),
    )
    col.add(
        "kappa_invariance",
        "kappa([x,y],z) = -kappa(y,[x,z]) on all basis triples",
        0,
        lambda: len(check_kappa_invariance(L)),
    )
    col.add(
        "w_total_antisymmetry",
        "w(x,y,z) alternates under every permutation of basis arguments",
        0,
        lambda: len(check_w_antisymmetry(L)),
    )
    col.add(
        "root_space_pairing",
        "kappa(h, x_a) = 0 and kappa(x_a, x_b) = 0 unless b = -a, nonzero on opposite pairs",
        0,
        lambda: len(check_root_space_pairing(L)),
    )
    col.add(
        "kappa_trace_proportionality",
        "ad-trace form is a nonzero multiple of the realization trace form",
        True,
        lambda: trace_form_ratio(L) is not None,
    )
    return col.records


def _default_full_degrees(L: LieAlgebra, cap: int | None):
    if cap is not None:
        return [k for k in range(0, L.g + 1) if k <= cap]
    if L.g <= 8:
        return list(range(0, L.g + 1))
    return list(range(0, 5))


def exterior_records(L: LieAlgebra, config: SuiteConfig) -> list[Record]:
    col = _Collector("exterior")
    col.add(
        "w_sharp_invariance",
        "the degree-3 form is killed by every basis Lie action",
        True,
        lambda: check_w_sharp_invariance(L),
    )
    col.add(
        "delta_star_w_nonzero",
        "the contraction of the form against itself is a nonzero scalar",
        True,
        lambda: delta_star_scalar(L) != 0,
    )
    col.add(
        "casimir_borel_top_wedge",
        "top wedge of the Borel is a Casimir eigenvector with the top-weight scalar",
        True,
        lambda: casimir(borel_top_wedge(L)) == borel_top_wedge(L).scale(casimir_eigenvalue(L.rd, two_rho(L.rd))),
    )

    full = _default_full_degrees(L, config.degree_cap)

    def zeta_report():
        return verify_zeta_identity(L, full_degrees=full, samples=config.zeta_samples, seed=config.seed)

    try:
        zrep = zeta_report()
    except Exception as exc:
        col.add("zeta_identity", "zeta = delta_star(w)(id - casimir/c_top) degreewise", True, lambda: (_raise(exc)))
        zrep = None
    if zrep is not None:
        col.add(
            "squares_vanish",
            "wedge and contraction operators square to zero at every degree",
            True,
            lambda: zrep.squares_ok,
        )
        for rec in zrep.records:
            col.add(
                f"zeta_identity_degree_{rec.k}",
                f"zeta = delta_star(w)(id - casimir/c_top) at degree {rec.k} ({rec.mode})",
                True,
                lambda rec=rec: rec.ok,
            )

    try:
        srep = verify_exact_sequences(L)
        for rec in srep.records:
            col.add(
                f"rank_nullity_degree_{rec.k}",
                "dim ker(delta_k) = rank(delta_(k-3)) + window multiplicity of the top module",
                True,
                lambda rec=rec: rec.ok,
            )
        col.add_value(
            "delta_rank_into_degree_d",
            "independent linear equations: rank of the wedge map into degree d",
            lambda: srep.records[L.d].rank_delta_in,
        )
    except Exception as exc:
        col.add("rank_nullity", "rank-nullity bookkeeping of the wedge complex", True, lambda: (_raise(exc)))

    if L.d - 3 == 3:

        def kernel_is_w_line():
            vectors = delta_kernel_vectors(L, 3)
            if len(vectors) != 1:
                return False
            ws = w_sharp(L)
            key = next(iter(ws.terms))
            ratio = vectors[0].terms.get(key, Fraction(0)) / ws.terms[key]
            return ratio != 0 and vectors[0].terms == ws.scale(ratio).terms

        col.add(
            "delta3_kernel_is_w_line",
            "kernel of the wedge map on degree 3 is exactly the line of the form",
            True,
            kernel_is_w_line,
        )

    col.add(
        "operator_invariance",
        "wedge and contraction commute with every basis Lie action",
        True,
        lambda: check_operator_invariance(L, range(0, min(L.g, 4) + 1), samples=25, seed=config.seed),
    )
    return col.records


def _raise(exc):
    raise exc


def nullspace_records(L: LieAlgebra, config: SuiteConfig) -> list[Record]:
    col = _Collector("nullspace")
    rng = Lcg(config.seed)

    def chart_sample_failures():
        bad = 0
        for _ in range(config.chart_samples):
            V = chart(L, random_chart_parameters(L, rng))
            if V.dim != L.d or not is_nullspace(L, V):
                bad += 1
        return bad

    col.add(
        "chart_points_are_nullspaces",
        f"{config.chart_samples} seeded chart points have dimension d and kill the form",
        0,
        chart_sample_failures,
    )
    col.add(
        "chart_zero_is_borel",
        "all-zero parameters give the standard Borel subalgebra",
        True,
        lambda: chart(L, (0,) * L.l) == standard_borel(L),
    )
    col.add(
        "chart_consistency",
        "every decomposition of a non-simple root determines the same line",
        True,
        lambda: chart_consistency(L, tuple(Fraction(k + 1) for k in range(L.l))).ok,
    )

    def involution_failures():
        bad = 0
        for signs in itertools.product((1, -1), repeat=L.l):
            inv = build_involution(L, signs)
            minus = inv.minus_subspace()
            if minus.dim != L.d:
                bad += 1
            elif not is_nullspace(L, minus):
                bad += 1
            elif minus != orthogonal_complement(L, inv.fixed_subspace()):
                bad += 1
        return bad

    col.add(
        "involution_minus_eigenspaces",
        "each sign pattern gives a d-dimensional nullspace equal to the orthogonal of the fixed part",
        0,
        involution_failures,
    )
    col.add(
        "d_operator_corank",
        "corank of D on the Borel wedge cube equals d",
        L.d,
        lambda: d_operator_corank(L),
    )
    col.add(
        "jacobian_corank_borel",
        "corank of the cubic-system Jacobian at the Borel equals d",
        L.d,
        lambda: jacobian_corank_at(L, standard_borel(L)),
    )

    def open_orbit_coranks():
        out = []
        for _ in range(5):
            V = chart(L, random_chart_parameters(L, rng, nonzero=True))
            out.append(jacobian_corank_at(L, V))
        return out

    col.add(
        "jacobian_corank_open_orbit",
        "corank of the Jacobian at 5 seeded open-orbit points equals d",
        [L.d] * 5,
        open_orbit_coranks,
    )

    def orbit_check():
        profiles = []
        for pattern in itertools.product((0, 1), repeat=L.l):
            t = tuple(Fraction(x) for x in pattern)
            label = orbit_label(L, t)
            prof = parabolic_profile(L, chart(L, t))
            if label.codim != L.l - len(label.nonzero):
                return "codim mismatch"
            if prof[1] != label.nonzero:
                return "profile does not recover the label"
            profiles.append(prof)
        if len(set(profiles)) != 2 ** L.l:
            return "profiles not distinct"
        return "distinct"

    col.add(
        "orbit_zero_patterns",
        "the 2^l zero patterns give distinct parabolic profiles recovering their labels",
        "distinct",
        orbit_check,
    )

    def profile_depends_on_pattern_only():
        for pattern in itertools.product((0, 1), repeat=L.l):
            t1 = tuple(Fraction(2) * x for x in pattern)
            t2 = tuple(Fraction(-3) * x for x in pattern)
            if parabolic_profile(L, chart(L, t1)) != parabolic_profile(L, chart(L, t2)):
                return False
        return True

    col.add(
        "parabolic_profile_pattern_invariance",
        "the parabolic closure profile depends only on the zero pattern of the parameters",
        True,
        profile_depends_on_pattern_only,
    )

    def degeneration_check():
        t = tuple(Fraction(rng.randint_nonzero(-3, 3)) for _ in range(L.l))
        V = chart(L, t)
        weight = tuple(range(L.l + 1, 1, -1))  # strictly positive, regular
        limit = degenerate(L, V, weight)
        if limit != standard_borel(L):
            return "wrong limit"
        if degenerate(L, limit, weight) != limit:
            return "not idempotent"
        return "borel"

    col.add(
        "degeneration_to_borel",
        "a dominant regular weight degenerates a generic chart point onto the standard Borel",
        "borel",
        degeneration_check,
    )

    def line_intersections():
        V = chart(L, tuple(Fraction(k + 2) for k in range(L.l)))
        return all(V.intersection(root_pair_plane(L, a)).dim == 1 for a in range(L.n_pos))

    col.add(
        "chart_meets_root_planes_in_lines",
        "a chart point meets each root plane in exactly a line",
        True,
        line_intersections,
    )
    col.add(
        "d_operator_relations",
        "sampled grading identities for D on the Borel hold",
        True,
        lambda: check_d_relations(L, 25, config.seed),
    )
    return col.records


def equations_records(L: LieAlgebra, config: SuiteConfig) -> list[Record]:
    col = _Collector("equations")

    def suite_report():
        return membership_equivalence_suite(L, config.samples, config.seed).to_json()

    col.add(
        "membership_equivalence",
        "linear membership of the Plucker vector agrees with the direct nullspace predicate",
        True,
        lambda: membership_equivalence_suite(L, config.samples, config.seed).ok,
    )
    col.add_value(
        "membership_counts",
        "seeded sample tallies for the equivalence suite",
        suite_report,
    )
    col.add_value(
        "equation_count",
        "rank of the linear equation set on Plucker coordinates",
        lambda: equation_count(L),
    )
    col.add_value(
        "residual_dimension",
        "ambient Plucker dimension minus the equation rank",
        lambda: residual_dimension(L),
    )
    col.add(
        "equation_transpose_relation",
        "the contraction matrix is the pairing transpose of the wedge map up to one global sign",
        True,
        lambda: transpose_identity_sign(L) is not None,
    )
    if L.g <= 8:
        col.add(
            "equation_rowspace_stack",
            "stacking pairing-transported wedge rows does not grow the equation row space",
            True,
            lambda: stacked_rank_check(L),
        )
    col.add(
        "contraction_equivariance",
        "the contraction commutes with every basis Lie action at low degrees",
        True,
        lambda: check_equivariance_matrices(L, range(0, 4)),
    )
    return col.records


def repthy_records(L: LieAlgebra) -> list[Record]:
    col = _Collector("repthy")
    for claim in claims_for(L.rd):
        col.add(
            f"claim_{claim.label}",
            "multiplicity-weighted Weyl dimensions sum to the ambient dimension",
            True,
            lambda claim=claim: verify_dimension_claim(L.rd, claim).ok,
        )
    try:
        window = verify_gamma_window(L)
        for rec in window.records:
            col.add(
                f"gamma_window_degree_{rec.k}",
                "Casimir eigenspace of the top scalar matches the window multiplicity",
                rec.expected,
                lambda rec=rec: rec.eigenspace_dim,
            )
        col.add(
            "gamma_window_symmetry",
            "eigenspace dimensions are symmetric under degree reflection k to g-k",
            True,
            lambda: window.symmetric,
        )
    except Exception as exc:
        col.add("gamma_window", "Casimir eigenspace window bookkeeping", True, lambda: (_raise(exc)))
    return col.records


# ---------------------------------------------------------------------------
# orchestration


def run_suites(config: SuiteConfig) -> dict:
    """Build the algebra, run the selected suites, return the report payload."""
    rd = build_root_datum(config.family, config.rank)
    L = build_algebra(rd)
    if config.corrupt is not None:
        i, j, k = config.corrupt
        L = L.with_corrupted_constant(i, j, k)
    selected = SUITES if config.suite == "all" else (config.suite,)
    records: list[Record] = []
    for name in selected:
        if name == "structure":
            records.extend(structure_records(L))
        elif name == "exterior":
            records.extend(exterior_records(L, config))
        elif name == "nullspace":
            records.extend(nullspace_records(L, config))
        elif name == "equations":
            records.extend(equations_records(L, config))
        elif name == "repthy":
            records.extend(repthy_records(L))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return {
        "version": __version__,
        "config": config.to_json(),
        "records": [r.to_json() for r in records],
        "ok": all(r.ok for r in records),
    }
