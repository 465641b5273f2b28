"""Tabulate real tameness against splitting of D over the closure.

Runs the catalog plus a few extra constructions (direct sums with the
quaternions, a twisted 4-dim quotient) and prints one row per algebra.

    python3 scripts/open_question_table.py
"""

from __future__ import annotations

from zerodiv.algebra import direct_sum
from zerodiv.catalog import catalog, lookup
from zerodiv.errors import PreconditionError
from zerodiv.families import field_algebra, polynomial_quotient
from zerodiv.report import text_open_question_table
from zerodiv.tameness import tameness_report


def extra_algebras():
    yield polynomial_quotient([1, 0, 2, 0], name="quotient[X^4+2X^2+1]")
    yield polynomial_quotient([-1, 0, 0, 0], name="quotient[X^4-1]")
    yield polynomial_quotient([2, 0, 0, 0], name="quotient[X^4+2]")
    yield direct_sum(field_algebra(), polynomial_quotient([1, 0, 0]), "F+quotient[X^3+1]")
    yield direct_sum(polynomial_quotient([1, 0]), polynomial_quotient([1, 0]), "C_like+C_like")


def main() -> None:
    rows = []
    algebras = [e.algebra for e in catalog()] + list(extra_algebras())
    for A in algebras:
        try:
            rows.append(tameness_report(A).open_question_row)
        except PreconditionError as exc:
            print(f"skipped {A.name}: {exc}")
    print(text_open_question_table(rows), end="")
    flagged = [r.name for r in rows if r.flagged]
    print(f"\n{len(flagged)} of {len(rows)} rows disagree: {', '.join(flagged) or 'none'}")
    q = lookup("quaternions").algebra
    print(f"quaternion D = {tameness_report(q).D.format(q.basis_names)}")


if __name__ == "__main__":
    main()
