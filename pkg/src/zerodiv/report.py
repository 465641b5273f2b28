"""Text and machine renderings of analysis results.

The machine format is a flat list of ``key = value`` lines. Keys are
dotted paths with ``[i]`` list indices; values use the exact element
syntax of the field module. Booleans print as ``true``/``false``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import Algebra, AxiomReport
from .algfile import format_combination
from .factor import FactorReport, ResidualAnalysis
from .ideals import IdealList
from .linalg import Subspace
from .poly import MultiPoly
from .tameness import CrossCheckReport, OpenQuestionRow, TamenessReport, ZDecomposition

Pairs = list[tuple[str, str]]


def _bool(value: bool | None) -> str:
    return "undetermined" if value is None else str(bool(value)).lower()


def _vector(v: Sequence) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def algebra_pairs(A: Algebra) -> Pairs:
    field = "Q" + "".join(f"(sqrt({d}))" for d in A.tower.radicands)
    return [
        ("algebra.name", A.name),
        ("algebra.dim", str(A.n)),
        ("algebra.field", field),
        ("algebra.basis", " ".join(A.basis_names)),
    ]


def axiom_pairs(ax: AxiomReport) -> Pairs:
    out = [
        ("axioms.associative", _bool(ax.associative)),
        ("axioms.commutative", _bool(ax.commutative)),
        ("axioms.identity", _vector(ax.identity) if ax.identity is not None else "none"),
        ("axioms.aa_dim", str(ax.aa_dim)),
        ("axioms.aa_full", _bool(ax.aa_full)),
    ]
    out += [(f"axioms.notes[{i}]", note) for i, note in enumerate(ax.notes)]
    return out


def form_pairs(A: Algebra, D: MultiPoly, fr: FactorReport | None, ra: ResidualAnalysis | None) -> Pairs:
    names = A.basis_names
    out = [("d.poly", D.format(names)), ("d.degree", str(D.degree))]
    if fr is None:
        return out
    out.append(("factors.content", str(fr.content)))
    for i, (f, m) in enumerate(fr.linear_factors):
        out.append((f"factors[{i}].form", f.format(names)))
        out.append((f"factors[{i}].multiplicity", str(m)))
    out.append(("factors.residual", fr.residual.format(names)))
    out.append(("factors.search", fr.complete))
    if ra is not None and ra.split is not None:
        s = ra.split
        out += [
            ("residual.power", str(ra.power)),
            ("residual.core", ra.core.format(names)),
            ("residual.kind", s.kind),
            ("residual.rank", str(s.rank)),
            ("residual.signature", f"({s.positives}, {s.negatives})"),
            ("residual.definite", _bool(s.definite)),
        ]
    return out


def subspace_pairs(prefix: str, W: Subspace) -> Pairs:
    out = [(f"{prefix}.dim", str(W.dim))]
    out += [(f"{prefix}.basis[{j}]", _vector(b)) for j, b in enumerate(W.basis)]
    return out


def z_pairs(z: ZDecomposition, A: Algebra) -> Pairs:
    out = [("z.kind", z.kind)]
    for i, W in enumerate(z.components):
        out += subspace_pairs(f"z.components[{i}]", W)
    if z.residual is not None:
        out.append(("z.residual", z.residual.format(A.basis_names)))
    out += [(f"z.justification[{i}]", j) for i, j in enumerate(z.justification)]
    return out


def ideal_pairs(il: IdealList) -> Pairs:
    out = [("ideals.complete", _bool(il.complete)), ("ideals.infinite", _bool(il.infinite))]
    for i, W in enumerate(il.ideals):
        out += subspace_pairs(f"ideals[{i}]", W)
    out += [(f"ideals.bounds[{i}]", b) for i, b in enumerate(il.bounds_used)]
    out += [(f"ideals.notes[{i}]", n) for i, n in enumerate(il.notes)]
    return out


def open_question_pairs(row: OpenQuestionRow, prefix: str = "open_question") -> Pairs:
    return [
        (f"{prefix}.real_tame", _bool(row.real_tame)),
        (f"{prefix}.splits", row.splits),
        (f"{prefix}.flagged", _bool(row.flagged)),
    ]


def tameness_pairs(A: Algebra, r: TamenessReport) -> Pairs:
    out = algebra_pairs(A) + axiom_pairs(r.axioms)
    out += form_pairs(A, r.D, r.factor_report, r.residual)
    out += z_pairs(r.z, A)
    out += [("tame.verdict", _bool(r.tame)), ("tame.proper", _bool(r.proper))]
    out += [(f"tame.notes[{i}]", n) for i, n in enumerate(r.notes)]
    out += open_question_pairs(r.open_question_row)
    return out


def cross_check_pairs(c: CrossCheckReport) -> Pairs:
    out = [
        ("sample.passed", _bool(c.passed)),
        ("sample.inside_checked", str(c.inside_checked)),
        ("sample.ambient_checked", str(c.ambient_checked)),
        ("sample.annihilator_checked", str(c.annihilator_checked)),
        ("sample.no_solvable_slice", _bool(c.no_solvable_slice)),
    ]
    for i, (msg, x) in enumerate(c.violations):
        out += [(f"sample.violations[{i}].message", msg), (f"sample.violations[{i}].witness", _vector(x))]
    return out


def render_machine(pairs: Iterable[tuple[str, str]]) -> str:
    return "".join(f"{k} = {v}\n" for k, v in pairs)


# text rendering


def _component(W: Subspace, names: Sequence[str]) -> str:
    if W.dim == 0:
        return "{0}"
    if W.dim == W.ambient_dim:
        return "all of A"
    kind = {1: "line", 2: "plane"}.get(W.dim, f"{W.dim}-dim subspace")
    gens = ", ".join(format_combination(b, names) for b in W.basis)
    return f"{kind} spanned by {gens}"


def text_header(A: Algebra) -> list[str]:
    field = "Q" + "".join(f"(sqrt {d})" for d in A.tower.radicands)
    return [f"algebra {A.name}: dimension {A.n} over {field}, basis {' '.join(A.basis_names)}"]


def text_axioms(A: Algebra, ax: AxiomReport) -> list[str]:
    lines = [
        f"  associative: {_bool(ax.associative)}",
        f"  commutative: {_bool(ax.commutative)}",
        "  identity: " + (format_combination(ax.identity, A.basis_names) if ax.identity is not None else "none"),
        f"  span of products AA: dimension {ax.aa_dim}" + (" (AA = A)" if ax.aa_full else " (AA != A)"),
    ]
    if ax.associativity_witness is not None:
        i, j, k = (A.basis_names[t] for t in ax.associativity_witness)
        lines.append(f"  associativity fails at ({i}*{j})*{k}")
    lines += [f"  note: {n}" for n in ax.notes]
    return lines


def text_form(A: Algebra, D: MultiPoly, fr: FactorReport | None, ra: ResidualAnalysis | None) -> list[str]:
    names = A.basis_names
    lines = [f"  D = {D.format(names)}"]
    if fr is None:
        return lines
    for f, m in fr.linear_factors:
        lines.append(f"  linear factor: {f.format(names)}" + (f"  (multiplicity {m})" if m > 1 else ""))
    if fr.residual.degree > 0:
        lines.append(f"  residual: {fr.residual.format(names)}")
    lines.append(f"  content: {fr.content}")
    if fr.complete != "complete_over_tower":
        lines.append("  factor search: best effort")
    if ra is not None and ra.split is not None:
        s = ra.split
        power = "" if ra.power == 1 else f" (residual is a constant times its square)"
        lines.append(
            f"  quadratic core: rank {s.rank}, signature ({s.positives}, {s.negatives}), {s.kind}{power}"
        )
    return lines


def text_z(A: Algebra, z: ZDecomposition) -> list[str]:
    lines = [f"  Z: {z.kind}"]
    lines += [f"    {_component(W, A.basis_names)}" for W in z.components]
    if z.residual is not None:
        lines.append(f"    unresolved residual: {z.residual.format(A.basis_names)}")
    lines += [f"    because: {j}" for j in z.justification]
    return lines


def text_ideals(A: Algebra, il: IdealList) -> list[str]:
    status = "complete" if il.complete else "incomplete"
    if il.infinite:
        status = "infinitely many"
    lines = [f"  maximal left ideals ({status}):"]
    lines += [f"    {_component(W, A.basis_names)}" for W in il.ideals]
    lines += [f"    bound: {b}" for b in il.bounds_used]
    lines += [f"    note: {n}" for n in il.notes]
    return lines


def text_tameness(A: Algebra, r: TamenessReport) -> str:
    lines = text_header(A) + text_axioms(A, r.axioms) + text_form(A, r.D, r.factor_report, r.residual)
    lines += text_z(A, r.z)
    lines.append(f"  right tame: {_bool(r.tame)}    proper: {_bool(r.proper)}")
    row = r.open_question_row
    lines.append(
        f"  D splits over the closure: {row.splits}" + ("    [open-question evidence]" if row.flagged else "")
    )
    lines += [f"  note: {n}" for n in r.notes]
    return "\n".join(lines) + "\n"


def text_open_question_table(rows: list[OpenQuestionRow]) -> str:
    width = max([len(r.name) for r in rows] + [7])
    lines = [f"{'algebra':<{width}}  real_tame     splits        flagged"]
    for r in rows:
        flag = "open-question evidence" if r.flagged else ""
        lines.append(f"{r.name:<{width}}  {_bool(r.real_tame):<12}  {r.splits:<12}  {flag}".rstrip())
    return "\n".join(lines) + "\n"


def text_cross_check(c: CrossCheckReport) -> str:
    lines = [
        f"cross-check: {'pass' if c.passed else 'FAIL'}",
        f"  component points checked: {c.inside_checked}",
        f"  ambient zero-divisor points checked: {c.ambient_checked}",
        f"  annihilated points checked: {c.annihilator_checked}",
    ]
    if c.no_solvable_slice:
        lines.append("  no solvable slice: random lines through D had no roots in the field")
    lines += [f"  violation: {msg} at {_vector(x)}" for msg, x in c.violations]
    return "\n".join(lines) + "\n"
