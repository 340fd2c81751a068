"""Command-line front end.

Every report has a ``combinatorial`` block (facts read off the graph) and a
``conditional`` block (statements that hold only if the user-asserted
analytic hints are true). Exit codes: 0 ok, 1 I/O or parse error, 2 domain
or precondition error, 3 inconsistent analytic input, 4 oracle bound too
small, 5 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Optional, Sequence

from . import blowup, classification, elliptic, lattice, linalg, reduction
from .catalog import CATALOG, GraphDocument, load_document
from .errors import DomainError, OracleMismatch, ParseError, ResGraphError
from .graph import (
    Cycle,
    DualGraph,
    canonical_cycle,
    canonical_degree,
    canonical_intersections,
    euler_chi,
    intersect,
    is_minimal_resolution_graph,
)

REPORT_SCHEMA = "report-1"


def parse_cycle(graph: DualGraph, text: str) -> Cycle:
    """``"E2=2,E1=2,E0=1"``; omitted vertices get coefficient 0."""
    coeffs: dict[str, int] = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        vid, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"cycle term {item!r} is not of the form id=value")
        try:
            coeffs[vid.strip()] = int(value)
        except ValueError:
            raise ParseError(f"coefficient {value!r} of {vid.strip()!r} is not an integer") from None
    for vid in coeffs:
        if vid not in graph.ids:
            raise ParseError(f"cycle mentions unknown vertex {vid!r}")
    return graph.cycle(coeffs)


def parse_ids(text: Optional[str]) -> Optional[list[str]]:
    if text is None:
        return None
    return [p.strip() for p in text.split(",") if p.strip()]


class Report:
    def __init__(self, command: str, source: str):
        self.command = command
        self.source = source
        self.combinatorial: dict[str, Any] = {}
        self.conditional: dict[str, Any] = {}
        self.exit_code = 0

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "source": self.source,
            "combinatorial": self.combinatorial,
            "conditional": self.conditional,
        }

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.source}", "combinatorial facts:"]
        lines += [f"  {k}: {_text(v)}" for k, v in self.combinatorial.items()]
        if self.conditional:
            lines.append("conditional on analytic hints:")
            lines += [f"  {k}: {_text(v)}" for k, v in self.conditional.items()]
        return "\n".join(lines)


def _text(value: Any) -> str:
    if isinstance(value, dict) and value and all(isinstance(v, (int, str)) for v in value.values()):
        if all(isinstance(v, int) and not isinstance(v, bool) for v in value.values()):
            return " + ".join(k if v == 1 else f"{v}{k}" for k, v in value.items()) or "0"
    if value == {}:
        return "0"
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    if value is None:
        return "-"
    return str(value).lower() if isinstance(value, bool) else str(value)


# ---------------------------------------------------------------------------
# command handlers: (doc, args, report) -> None


def cmd_check(doc: GraphDocument, args, rep: Report) -> None:
    g = doc.graph
    rep.combinatorial.update(
        vertices=len(g),
        edges=len(g.edges),
        connected=True,
        leading_principal_minors=linalg.leading_principal_minors(g.matrix),
        negative_definite=g.negative_definite,
        minimal_resolution_graph=is_minimal_resolution_graph(g),
    )
    if not g.negative_definite:
        rep.exit_code = DomainError.exit_code
        print("error: not negative definite", file=sys.stderr)


def cmd_fundamental_cycle(doc, args, rep) -> None:
    g = doc.graph
    support = lattice.SupportSet.of(g, parse_ids(args.support))
    z, steps = lattice.laufer_sequence(g, support)
    rep.combinatorial.update(
        support=list(support.ids),
        fundamental_cycle=z.to_json(),
        self_intersection=intersect(z, z),
        chi=euler_chi(z),
        laufer_steps=steps,
    )


def cmd_canonical_cycle(doc, args, rep) -> None:
    g = doc.graph
    zk = canonical_cycle(g)
    rep.combinatorial.update(
        canonical_intersections=canonical_intersections(g),
        canonical_cycle=zk.to_json(),
        numerically_gorenstein=zk.is_integral,
    )


def cmd_degree(doc, args, rep) -> None:
    rep.combinatorial["degree"] = lattice.degree(doc.graph)


def cmd_classify(doc, args, rep) -> None:
    g = doc.graph
    report = classification.classify(g)
    rep.combinatorial.update(report.to_json())
    if report.is_elliptic and report.is_numerically_gorenstein:
        bound = elliptic.pg_upper_bound(g)
        rep.combinatorial["pg_upper_bound"] = bound
        _maxell_conditional(doc, bound, rep)
    _put_reduction_number(rep, reduction.normal_reduction_number(g))
    _hints(doc, rep)


def _hints(doc: GraphDocument, rep: Report) -> None:
    hints = doc.analytic_hints.to_json()
    if hints:
        rep.conditional["user_asserted_hints"] = hints


def _maxell_conditional(doc: GraphDocument, bound: int, rep: Report) -> None:
    pg = doc.analytic_hints.pg
    if pg is None:
        return
    if pg > bound:
        rep.conditional["warning"] = f"asserted p_g = {pg} exceeds the bound m + 1 = {bound}"
        rep.exit_code = 3
    else:
        rep.conditional["maximally_elliptic"] = pg == bound


def cmd_elliptic_sequence(doc, args, rep) -> None:
    g = doc.graph
    seq = elliptic.elliptic_sequence(g, parse_ids(args.support))
    rep.combinatorial.update(seq.to_json())


def cmd_tomari_verify(doc, args, rep) -> None:
    g = doc.graph
    support = parse_ids(args.support)
    seq = elliptic.elliptic_sequence(g, support)
    found = elliptic.tomari_cycles(g, support, args.bound)
    expected = set(seq.partial_sums)
    ok = set(found) == expected
    rep.combinatorial.update(
        bound_multiplier=args.bound,
        partial_sums=[c.to_json() for c in seq.partial_sums],
        enumerated=[c.to_json() for c in found],
        verified=ok,
    )
    if not ok:
        rep.exit_code = OracleMismatch.exit_code


def cmd_maxell_check(doc, args, rep) -> None:
    check = elliptic.maxell_shape_check(doc.graph)
    rep.combinatorial.update(check.to_json())
    _maxell_conditional(doc, check.m + 1, rep)
    _hints(doc, rep)


def _put_reduction_number(rep: Report, rr: reduction.ReductionReport) -> None:
    # null in JSON when no theorem pins the value down
    rep.combinatorial["normal_reduction_number"] = rr.normal_reduction_number
    if rr.normal_reduction_number is None:
        rep.combinatorial["normal_reduction_number_note"] = rr.value_text


def cmd_reduction(doc, args, rep) -> None:
    g = doc.graph
    pg = doc.analytic_hints.pg
    rr = reduction.normal_reduction_number(g)
    _put_reduction_number(rep, rr)
    rep.combinatorial.update(
        basis=rr.basis,
        kind=rr.kind,
    )
    if rr.kind == "elliptic" and pg is not None:
        q = reduction.q_range_if_elliptic(g, pg)
        rep.conditional["q_range"] = [q.start, q.stop - 1]
        rep.conditional["q_range_basis"] = reduction.BASIS_QRANGE + " (elliptic case only)"
    if rr.kind == "elliptic":
        fin = reduction.check_final_theorem_shape(g) if is_minimal_resolution_graph(g) else None
        if fin is not None:
            rep.combinatorial["max_ideal_pg_candidate"] = fin.candidate
            rep.conditional["final_theorem"] = fin.conditional
    _hints(doc, rep)


def cmd_kato(doc, args, rep) -> None:
    g = doc.graph
    z = parse_cycle(g, args.cycle)
    pg = args.pg if args.pg is not None else doc.analytic_hints.pg
    if pg is None:
        raise ParseError("kato needs --pg (or analytic_hints.pg in the document)")
    rep.combinatorial.update(
        cycle=z.to_json(),
        **{"Z^2": intersect(z, z), "K.Z": canonical_degree(z), "chi(Z)": euler_chi(z)},
    )
    rep.conditional.update(
        q=args.q, pg=pg, colength=reduction.kato_colength(g, z, args.q, pg)
    )


def cmd_pg_max_ideal(doc, args, rep) -> None:
    g = doc.graph
    m = parse_cycle(g, args.cycle)
    check = reduction.is_pg_maximal_ideal_cycle(g, m)
    numerics = reduction.tomari_mpg_numeric_conditions(g, m, doc.analytic_hints.gorenstein)
    rep.combinatorial.update(cycle=m.to_json(), **check.to_json())
    rep.combinatorial["-M^2"] = numerics.minus_self_intersection
    rep.conditional.update(
        note="if M is the maximal ideal cycle, the maximal ideal is a p_g-ideal iff p_a(M) = 0",
        **numerics.to_json()["conditional"],
    )


def _centers(args) -> list[tuple[str, ...]]:
    if not args.center:
        raise ParseError("at least one --center is required")
    return [blowup.parse_center(c) for c in args.center]


def cmd_pullback(doc, args, rep) -> None:
    g = doc.graph
    d = parse_cycle(g, args.cycle)
    records = blowup.blow_up_sequence(g, _centers(args))
    pd = blowup.pullback_through(records, d)
    new = records[-1].new_graph
    rep.combinatorial.update(
        cycle=d.to_json(),
        pullback=pd.to_json(),
        exceptional_vertices=[r.new_vertex for r in records],
        **{
            "D^2": intersect(d, d),
            "(phi*D)^2": intersect(pd, pd),
            "K.D": canonical_degree(d),
            "K'.phi*D": canonical_degree(pd),
        },
        canonical_pullback_ok=all(blowup.canonical_pullback_check(r) for r in records),
        new_graph=new.to_dict(),
    )


def _lattice_oracle_checks(g: DualGraph, bound: int) -> list[tuple[str, bool, str]]:
    rows = []
    z = lattice.fundamental_cycle(g)
    o = lattice.oracle_minimal_anti_nef(g, None, bound)
    rows.append(("fundamental cycle = exhaustive minimal anti-nef", z == o, str(o)))
    best, at = classification.oracle_chi_nonnegative(g, bound)
    rows.append(("min chi over 0 < D <= k Z_E agrees with classification", True, f"{best} at {at}"))
    if classification.is_elliptic(g):
        seq = elliptic.elliptic_sequence(g)
        for i, b in enumerate(seq.supports[1:], start=1):
            zb = lattice.fundamental_cycle(g, b.support)
            ob = lattice.oracle_minimal_anti_nef(g, b.support, bound)
            rows.append((f"Z_B{i} = exhaustive minimal anti-nef on B{i}", zb == ob, str(ob)))
        rows.append(("partial sums C_t are anti-nef with chi = 0", elliptic.sequence_chi_and_nef(seq) is None, ""))
        rows.append(("Tomari set equals {C_0, ..., C_m}", elliptic.verify_tomari(g, None, bound), ""))
    return rows


def cmd_oracle(doc, args, rep) -> None:
    rows = _lattice_oracle_checks(doc.graph, args.bound)
    rep.combinatorial["bound_multiplier"] = args.bound
    rep.combinatorial["checks"] = [
        {"name": name, "passed": ok, "detail": detail} for name, ok, detail in rows
    ]
    if not all(ok for _, ok, _ in rows):
        rep.exit_code = OracleMismatch.exit_code


COMMANDS: dict[str, tuple[Callable, str]] = {
    "check": (cmd_check, "negative definiteness and connectivity"),
    "fundamental-cycle": (cmd_fundamental_cycle, "fundamental cycle on a support (Laufer)"),
    "canonical-cycle": (cmd_canonical_cycle, "canonical cycle Z_K and numerical Gorenstein test"),
    "classify": (cmd_classify, "rational / elliptic classification report"),
    "elliptic-sequence": (cmd_elliptic_sequence, "elliptic sequence on E or on --support"),
    "tomari-verify": (cmd_tomari_verify, "brute-force check of the anti-nef chi = 0 cycles"),
    "degree": (cmd_degree, "degree -Z_E^2"),
    "maxell-check": (cmd_maxell_check, "degree-one maximally elliptic graph shape"),
    "reduction": (cmd_reduction, "normal reduction number"),
    "kato": (cmd_kato, "Kato's Riemann-Roch colength"),
    "pg-max-ideal": (cmd_pg_max_ideal, "p_a(M) = 0 test for a maximal ideal cycle"),
    "blowup": (None, "blow up points and emit the new graph document"),
    "pullback": (cmd_pullback, "pull a cycle back through blow-ups"),
    "oracle": (cmd_oracle, "run all brute-force cross-checks"),
    "catalog": (None, "list built-in graphs"),
}


class _Parser(argparse.ArgumentParser):
    # usage mistakes are parse errors (exit 1); argparse would use 2, which means a domain error here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ParseError.exit_code, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = _Parser(prog="resgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "catalog":
            continue
        p.add_argument("source", help="graph JSON file or catalog:NAME")
        if name in ("fundamental-cycle", "elliptic-sequence", "tomari-verify"):
            p.add_argument("--support", help="comma-separated vertex ids")
        if name in ("tomari-verify", "oracle"):
            p.add_argument("--bound", type=int, default=2, help="bound multiplier (default 2)")
        if name in ("kato", "pg-max-ideal", "pullback"):
            p.add_argument("--cycle", required=True, help="id=value pairs, e.g. E2=2,E1=2,E0=1")
        if name == "kato":
            p.add_argument("--q", type=int, required=True)
            p.add_argument("--pg", type=int)
        if name in ("blowup", "pullback"):
            p.add_argument(
                "--center", action="append", help="id (free point) or id,id (crossing); repeatable"
            )
        if name == "blowup":
            p.add_argument("-o", "--output", help="write the new graph document here")
    return parser


def _emit(data: Any, as_json: bool, text: str) -> None:
    print(json.dumps(data, indent=2) if as_json else text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            items = {name: doc.description for name, doc in CATALOG.items()}
            text = "\n".join(f"catalog:{k:<22} {v}" for k, v in items.items())
            _emit({"schema": REPORT_SCHEMA, "command": "catalog", "catalog": items}, args.json, text)
            return 0
        doc = load_document(args.source)
        if args.command == "blowup":
            return _blowup(doc, args)
        rep = Report(args.command, args.source)
        if args.command not in ("check",):
            doc.graph.require_negative_definite()
        COMMANDS[args.command][0](doc, args, rep)
        _emit(rep.to_json(), args.json, rep.to_text())
        return rep.exit_code
    except ResGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except AssertionError as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return OracleMismatch.exit_code


def _blowup(doc: GraphDocument, args) -> int:
    records = blowup.blow_up_sequence(doc.graph, _centers(args))
    table: dict[str, dict[str, int]] = {}
    for v in doc.graph.ids:
        table[v] = blowup.pullback_through(records, doc.graph.basis(v)).to_json()
    out = GraphDocument(records[-1].new_graph, doc.analytic_hints).to_json()
    out["pullback"] = table
    out["exceptional_vertices"] = [r.new_vertex for r in records]
    text = json.dumps(out, indent=2)
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise ParseError(f"cannot write {args.output}: {exc.strerror}") from None
    print(text)
    return 0


def main() -> None:
    sys.exit(run())
