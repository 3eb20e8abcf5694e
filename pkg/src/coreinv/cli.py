"""Command-line front end.

Exit status: 0 success / theorem holds, 1 inverse nonexistent (compute) or
axiom check failed (verify), 2 usage or input error, 3 violation found
(check, oracle) or an inner inverse outside a formula's class (compute).

Matrices are written to stdout in the matrix-file format so they can be
fed back in; certificates and progress go to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .criteria import THEOREMS
from .errors import GenerationExhausted, MatrixFormatError, NonExistent, PremiseViolation
from .formulas import CATALOG, apply_formula
from .inverses import (
    InverseKind,
    check_axioms,
    compute,
    group_inverse,
    group_via_units,
    mp_inverse,
    one_three,
    sample_inner_inverse,
)
from .matfile import format_matrix, parse_matrix
from .scalars import FieldSpec

MAX_DIM = 16
MAX_K = 5

EXIT_OK, EXIT_NONEXISTENT, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    """Bad command line or unreadable input; reported on one line, exit 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _k_value(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer, got {text!r}") from None
    if not 1 <= k <= MAX_K:
        raise argparse.ArgumentTypeError(f"k={k} out of range [1, {MAX_K}]")
    return k


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= s < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2^64)")
    return s


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    from .lab.runner import theorem_names

    kinds = [k.value for k in InverseKind]
    parser = _Parser(prog="coreinv", description="Exact generalized inverses over *-rings of matrices.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute an inverse, optionally through a catalog formula")
    p.add_argument("--field", type=_field, help="reinterpret the input entries over this field (Q, Qi, Fp:p)")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--inner", type=Path, help="inner inverse g used by --formula (or by --kind group)")
    p.add_argument("--formula", help="catalog id, e.g. C1, D2, G1, M3")
    p.add_argument("--k", type=_k_value, default=1)
    p.add_argument("--seed", type=_seed, default=0, help="seed for sampling g when --inner is omitted")

    p = sub.add_parser("verify", help="check a candidate against the defining equations")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--candidate", required=True, type=Path)

    p = sub.add_parser("check", help="run seeded property trials of a theorem")
    p.add_argument("--theorem", required=True, choices=theorem_names())
    p.add_argument("--field", type=_field, default=FieldSpec("Q"))
    p.add_argument("--dim", type=_positive, default=3)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", type=Path, help="also write the report here")

    p = sub.add_parser("oracle", help="exhaustive oracle over M_n(F_p)")
    p.add_argument("--p", type=int, choices=[2, 3], required=True)
    p.add_argument("--n", type=int, choices=[1, 2, 3], default=2)
    p.add_argument("--compare", action="store_true", help="compare the solvers with the table")
    p.add_argument("--out", type=Path, help="write the table here")
    return parser


# -- helpers ----------------------------------------------------------------------


def _read(path: Path, field: FieldSpec | None = None):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    if field is not None:
        lines = text.splitlines()
        if lines:
            lines[0] = field.header()
        text = "\n".join(lines)
    try:
        return parse_matrix(text, max_dim=MAX_DIM)
    except MatrixFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _default_inner(cls: str, a, seed: int):
    if cls == "any":
        return sample_inner_inverse(a, random.Random(seed))
    solver = {"13": one_three, "mp": mp_inverse, "group": group_inverse}[cls]
    return solver(a).value


# -- verbs ---------------------------------------------------------------------


def _compute(args, out, err) -> int:
    kind = InverseKind.parse(args.kind)
    a = _read(args.input, args.field)
    g = _read(args.inner, args.field) if args.inner else None
    if g is not None and (g.field != a.field or g.n != a.n):
        raise UsageError(f"{args.inner}: inner inverse must be {a.n}x{a.n} over {a.field}")
    try:
        if args.formula:
            f = CATALOG.get(args.formula)
            if f is None:
                raise UsageError(f"unknown formula id {args.formula!r}")
            if f.kind is not kind:
                raise UsageError(f"formula {f.id} computes the {f.kind.value} inverse, not {kind.value}")
            if g is None and f.inner_class != "none":
                g = _default_inner(f.inner_class, a, args.seed)
            cert = apply_formula(f.id, a, g if f.inner_class != "none" else None, args.k)
        elif g is not None:
            if kind is not InverseKind.GROUP:
                raise UsageError("--inner needs --formula unless --kind group")
            cert = group_via_units(a, g, args.k)
        else:
            cert = compute(kind, a)
    except NonExistent as exc:
        out.write(f"NonExistent: {exc.reason}\n")
        return EXIT_NONEXISTENT
    except PremiseViolation as exc:
        out.write(f"PremiseViolation: {exc}\n")
        if exc.value is not None:
            out.write(format_matrix(exc.value))
        return EXIT_VIOLATION
    out.write(format_matrix(cert.value))
    err.write(cert.summary() + "\n")
    return EXIT_OK


def _verify(args, out, err) -> int:
    kind = InverseKind.parse(args.kind)
    a = _read(args.input)
    x = _read(args.candidate)
    if a.field != x.field or a.n != x.n:
        raise UsageError(f"{args.candidate}: candidate must be {a.n}x{a.n} over {a.field}")
    checks = check_axioms(kind, a, x)
    for name, ok in checks.items():
        out.write(f"{name}: {'ok' if ok else 'FAIL'}\n")
    passed = all(checks.values())
    out.write(f"{kind.value}: {'verified' if passed else 'rejected'}\n")
    return EXIT_OK if passed else EXIT_NONEXISTENT


def _check(args, out, err) -> int:
    from .lab.runner import run_check

    if args.dim > MAX_DIM:
        raise UsageError(f"--dim {args.dim} exceeds the limit {MAX_DIM}")
    try:
        report = run_check(args.theorem, args.field, args.dim, args.trials, args.seed)
    except GenerationExhausted as exc:  # pragma: no cover - runner absorbs these
        raise UsageError(str(exc)) from None
    text = report.to_text()
    out.write(text)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    err.write(report.summary_line() + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _oracle_table_text(table) -> str:
    from .lab.oracle import UNIQUE_KINDS
    from .matfile import format_inline

    lines = [f"# oracle p={table.p} n={table.n} elements={table.size}"]
    for idx in table.elements():
        parts = [f"a=[{format_inline(table.decode(idx))}]"]
        for kind in UNIQUE_KINDS:
            v = table.value(idx, kind)
            parts.append(f"{kind.value}=" + (f"[{format_inline(table.decode(v))}]" if v is not None else "-"))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def _oracle(args, out, err) -> int:
    from .lab.oracle import (
        build_oracle,
        exhaustive_double_commute,
        exhaustive_jacobson,
        exhaustive_reverse_order,
        oracle_vs_algorithms,
    )

    try:
        table = build_oracle(args.p, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"oracle M_{args.n}(F_{args.p}): {table.size} elements\n")
    for kind, count in table.counts().items():
        out.write(f"  {kind:>9}: {count}\n")
    if args.out:
        args.out.write_text(_oracle_table_text(table), encoding="utf-8")
    if not args.compare:
        return EXIT_OK
    ok = True
    for fn in (oracle_vs_algorithms, exhaustive_double_commute, exhaustive_reverse_order, exhaustive_jacobson):
        report = fn(table)
        out.write(report.summary_line() + "\n")
        if not report.ok:
            ok = False
            out.write(report.to_text())
    out.write("full agreement\n" if ok else "violations found\n")
    return EXIT_OK if ok else EXIT_VIOLATION


_VERBS = {"compute": _compute, "verify": _verify, "check": _check, "oracle": _oracle}


def run(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _VERBS[args.verb](args, out, err)
    except UsageError as exc:
        err.write(f"coreinv: error: {exc}\n")
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
