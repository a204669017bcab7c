"""Command-line entry point.

Exit codes: 0 property holds / computation succeeded, 1 property refuted,
2 indeterminate (non-split spectrum, truncated search, unsupported kernel
class), 3 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .braidcore import (
    BraidedVectorSpace,
    BraidingFormatError,
    SingularBraiding,
    check_braid_equation,
    check_rigidity,
    compute_c_flat,
    read_braiding,
    write_braiding,
    ybe_convert,
)
from .braidcore.fileio import dump_braiding
from .exactla import format_scalar
from .frt import DEFAULT_MAX_WORDS, ResourceLimit, reduced_report, rtt_relations
from .grouptype import (
    GroupFileError,
    InvalidYDData,
    UnsupportedGroupAction,
    crosscheck_group_reduction,
    group_braiding,
    read_group_yd,
    reduced_group_algebra,
    support_and_kernel,
    validate_group_yd,
)
from .triangular import HOLDS, INDETERMINATE, REFUTED, detect_diagonal, detect_triangular
from .uqsl2 import build_cf_braiding, build_simple_module, uq_report

SCHEMA = "braidlab/1"
EXIT = {HOLDS: 0, "ok": 0, REFUTED: 1, INDETERMINATE: 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if x < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return x


def _nonneg(text):
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if x < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="braidlab", description="Structural checks for finite-dimensional braided vector spaces.")
    p.add_argument("--version", action="version", version=f"braidlab {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("--emit-json", metavar="PATH", help="write the JSON report to PATH")
        sp.add_argument("--format", choices=("human", "json"), default="human", help="standard output format")

    for name, helptext in (
        ("braidcheck", "check the braid equation"),
        ("rigid", "check rigidity (invertibility of c-flat)"),
        ("diagonal", "search for a diagonal-type basis"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        common(sp)

    sp = sub.add_parser("triangular", help="search for a left or right triangular basis")
    sp.add_argument("file")
    sp.add_argument("--side", choices=("left", "right"), default="right")
    sp.add_argument("--branch-limit", type=_positive, default=1024)
    common(sp)

    sp = sub.add_parser("frt", help="truncated FRT bialgebra and its reduced quotient")
    sp.add_argument("file")
    sp.add_argument("--degree", type=_positive, default=2)
    sp.add_argument("--max-words", type=_positive, default=DEFAULT_MAX_WORDS)
    common(sp)

    sp = sub.add_parser("grouptype", help="braiding of group type and its reduced construction")
    sp.add_argument("file")
    sp.add_argument("--degree", type=_positive, default=2)
    sp.add_argument("--max-words", type=_positive, default=DEFAULT_MAX_WORDS)
    sp.add_argument("--emit-braiding", metavar="OUT")
    common(sp)

    sp = sub.add_parser("uq", help="braiding c^f on the simple quantum sl2 module L(n)")
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--degree", type=_positive, default=2)
    sp.add_argument("--max-words", type=_positive, default=DEFAULT_MAX_WORDS)
    sp.add_argument("--emit-braiding", metavar="OUT")
    common(sp)

    sp = sub.add_parser("convert", help="convert between Yang-Baxter operators R and braidings c = R∘τ")
    sp.add_argument("file")
    sp.add_argument("--direction", choices=("R-to-c", "c-to-R"), default="R-to-c")
    sp.add_argument("--emit-braiding", metavar="OUT")
    common(sp)
    return p


# ---------------------------------------------------------------------------
# subcommands: each returns (status, report dict, human lines)


def _triple(t):
    return [x + 1 for x in t]


def cmd_braidcheck(args):
    b = read_braiding(args.file)
    v = check_braid_equation(b)
    rep = {"holds": v.holds}
    lines = [f"braid equation: {'holds' if v.holds else 'fails'}"]
    if not v.holds:
        out, inp = v.first_failure
        rep["first_failure"] = {"output": _triple(out), "input": _triple(inp)}
        lines.append(f"first difference at output {tuple(_triple(out))}, input {tuple(_triple(inp))}")
    return (HOLDS if v.holds else REFUTED), rep, lines


def cmd_rigid(args):
    b = read_braiding(args.file)
    ok = check_rigidity(b)
    flat = compute_c_flat(b)
    rep = {"rigid": ok, "flat_rank": flat.matrix.rank()}
    return (HOLDS if ok else REFUTED), rep, [f"rigid: {'yes' if ok else 'no'} (rank of c-flat {rep['flat_rank']} of {b.n ** 2})"]


def cmd_triangular(args):
    b = read_braiding(args.file)
    res = detect_triangular(b, args.side, args.branch_limit)
    rep = {"side": args.side, "status": res.status, "reason": res.reason}
    lines = [f"{args.side} triangular: {res.status}" + (f" ({res.reason})" if res.reason else "")]
    if res.holds:
        rep["certificate"] = res.certificate.to_json()
        rep["flag_rebuilt"] = bool(res.details.get("flag_rebuilt"))
        for i, v in enumerate(res.certificate.basis):
            lines.append(f"  basis {i + 1}: ({', '.join(format_scalar(x) for x in v)})")
    return res.status, rep, lines


def cmd_diagonal(args):
    b = read_braiding(args.file)
    res = detect_diagonal(b)
    rep = {"status": res.status, "reason": res.reason}
    lines = [f"diagonal type: {res.status}" + (f" ({res.reason})" if res.reason else "")]
    if res.holds:
        n = b.n
        rep["basis"] = [[format_scalar(x) for x in v] for v in res.basis]
        rep["q"] = [[format_scalar(res.q[(x, y)]) for y in range(n)] for x in range(n)]
        for x in range(n):
            lines.append("  q: " + "  ".join(rep["q"][x]))
    return res.status, rep, lines


def _frt_lines(j):
    lines = [
        f"A dims: {tuple(j['A_dims'])}",
        f"A_red dims: {tuple(j['Ared_dims'])}",
        f"radical dims: {tuple(j['radical_dims'])}",
        "grouplikes: " + (", ".join("=".join(c) for c in j["grouplikes"]) or "none"),
        "skew-primitives: " + (", ".join(f"{s['x']} ({s['g']}, {s['h']})" for s in j["skew_primitives"]) or "none"),
        f"diagonal action: {j['diagonal_action']}",
        f"M-reduced quotient: {j['m_reduced']}",
        f"braiding reconstruction: {j['reconstruction']}",
    ]
    if j["inverse_pairs"]:
        lines.append("inverse pairs: " + ", ".join(f"{a}*{b} = 1" for a, b in j["inverse_pairs"]))
    if j["power_relations"]:
        lines.append("power relations: " + ", ".join(f"{g}^{k} = 1" for g, k in sorted(j["power_relations"].items())))
    return lines


def cmd_frt(args):
    b = read_braiding(args.file)
    rep_obj = reduced_report(b, args.degree, max_words=args.max_words)
    if not rep_obj.coideal_verified:
        raise AssertionError("radical failed the independent coideal check")
    j = rep_obj.to_json()
    j["relation_dim"] = len(rtt_relations(b))
    return "ok", j, [f"relation space dim: {j['relation_dim']}"] + _frt_lines(j)


def _fmt_elems(G, elems):
    return [G.format(x) for x in elems]


def _group_name(desc):
    if desc["kind"] == "fg_abelian":
        parts = ["Z" if k == 0 else f"Z/{k}" for k in desc["orders"]]
        return " x ".join(parts) or "trivial"
    return "table group"


def cmd_grouptype(args):
    d = read_group_yd(args.file)
    verdict = validate_group_yd(d)
    if not verdict.valid:
        return REFUTED, {"valid": False, "violation": verdict.violation}, [f"invalid data: {verdict.violation}"]
    b = group_braiding(d)
    if args.emit_braiding:
        write_braiding(b, args.emit_braiding)
    try:
        sk = support_and_kernel(d)
    except UnsupportedGroupAction as exc:
        return INDETERMINATE, {"valid": True, "reason": str(exc)}, [f"kernel: {exc}"]
    rga = reduced_group_algebra(d, sk)
    cc = crosscheck_group_reduction(d, args.degree, max_words=args.max_words)
    G = d.group
    Q = rga.quotient
    rep = {
        "valid": True,
        "kernel_method": sk.case,
        "support": _fmt_elems(G, sk.support),
        "quotient_group": Q.describe(),
        "quotient_order": rga.order,
        "induced_degrees": _fmt_elems(Q, rga.data.degrees),
        "rebuilt_braiding_matches": cc.rebuilt_matches,
        "quotient_m_reduced": cc.m_reduced,
        "mismatches": cc.mismatches,
    }
    if sk.n_elements is not None:
        rep["N"] = _fmt_elems(G, sk.n_elements)
        rep["H_order"] = sk.h_order
    if rga.h_invariants is not None:
        rep["H_invariants"] = list(rga.h_invariants)
    if rga.invariants is not None:
        rep["quotient_invariants"] = list(rga.invariants)
    if cc.frt is not None:
        rep["frt"] = cc.frt["report"].to_json()
        rep["predicted_profile"] = cc.frt["predicted_profile"]
    lines = [
        f"kernel method: {sk.case}",
        f"H/N: {_group_name(Q.describe())}" + (f" (order {rga.order})" if rga.order else " (infinite)"),
        f"rebuilt braiding matches: {cc.rebuilt_matches}",
        f"k(H/N) M-reduced: {cc.m_reduced}",
    ]
    if cc.frt is not None:
        lines += _frt_lines(rep["frt"])
    lines += [f"mismatch: {m}" for m in cc.mismatches]
    return ("ok" if cc.ok else REFUTED), rep, lines


def cmd_uq(args):
    m = build_simple_module(args.n)
    if args.emit_braiding:
        write_braiding(build_cf_braiding(m), args.emit_braiding)
    r = uq_report(m, D=args.degree, max_words=args.max_words)
    j = r.to_json()
    lines = [
        f"weights W: {list(r.W)}",
        f"support roots P: {['alpha'] * len(r.P)}",
        f"predicted G/N invariants: {list(r.quotient_invariants)}",
        "braiding eigenvalues: " + ", ".join(j["braiding_eigenvalues"]),
        f"right triangular: {r.right_triangular}",
    ] + _frt_lines(j["frt"])
    lines += [f"mismatch: {x}" for x in r.mismatches]
    return ("ok" if r.ok else REFUTED), j, lines


def cmd_convert(args):
    b = read_braiding(args.file, check=False)
    res = ybe_convert(b.matrix, args.direction)
    rep = {"direction": args.direction, "target": res.target, "holds": res.holds}
    name = "braid equation" if res.target == "braid" else "quantum Yang-Baxter equation"
    lines = [f"{name}: {'holds' if res.holds else 'fails'}"]
    if not res.holds:
        out, inp = res.first_failure
        rep["first_failure"] = {"output": _triple(out), "input": _triple(inp)}
    if args.emit_braiding:
        write_braiding(BraidedVectorSpace(res.matrix, b.labels, check=False), args.emit_braiding)
    rep["output"] = dump_braiding(BraidedVectorSpace(res.matrix, b.labels, check=False))
    return (HOLDS if res.holds else REFUTED), rep, lines


COMMANDS = {
    "braidcheck": cmd_braidcheck,
    "rigid": cmd_rigid,
    "triangular": cmd_triangular,
    "diagonal": cmd_diagonal,
    "frt": cmd_frt,
    "grouptype": cmd_grouptype,
    "uq": cmd_uq,
    "convert": cmd_convert,
}


def render(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        status, rep, lines = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"braidlab: usage error: {exc}", file=stderr)
        return 3
    except (BraidingFormatError, GroupFileError, InvalidYDData, SingularBraiding, ResourceLimit, ValueError) as exc:
        print(f"braidlab: {exc}", file=stderr)
        return 3
    doc = {"schema": SCHEMA, "command": args.command, "status": status}
    doc.update(rep)
    text = render(doc)
    if args.emit_json:
        Path(args.emit_json).write_text(text, encoding="utf-8")
    if args.format == "json":
        stdout.write(text)
    else:
        print(f"{args.command}: {status}", file=stdout)
        for line in lines:
            print(line, file=stdout)
    return EXIT[status]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
