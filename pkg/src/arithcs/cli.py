"""Command-line front end: ``arithcs <command> ...``.

Exit codes: 0 ok, 1 dictionary mismatch, 2 invalid input, 3 unit norm +1
without ``--force``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from itertools import combinations
from pathlib import Path

from .arith import DWValue, cs_profile
from .errors import NormNotMinusOne, ValidationError
from .genus import CSProfile, eval_on_e
from .linking import IntegerLinkingMatrix
from .ntcore import PrimeTuple, is_prime, mod2_linking_matrix
from .pell import cf_sqrt, fundamental_pell_solution, fundamental_unit_norm, validate_field
from .topo import LensSpaceParams, dictionary_profiles, lens_cs, lens_dw, lens_signed_sum, topo_dw, topo_profile

SCAN_HEADER = ["d", "primes", "unit_norm", "z", "profile"]
SKIPPED = "skipped(norm+1)"
UNSUPPORTED = "unsupported: fundamental unit has norm +1, so Cl+ may differ from Cl and the formula is not justified"
SCAN_DIR_ENV = "ARITHCS_SCAN_DIR"


def _emit_csv(rows, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    for row in rows:
        w.writerow(row)


def _profile_json(profile: CSProfile) -> list[dict]:
    out = []
    r = profile.r
    for rho, value in profile.entries:
        e_values = {f"{i},{j}": eval_on_e(rho, i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)}
        out.append({"coeffs": list(rho.coeffs), "e_values": e_values, "cs": value})
    return out


def _profile_table(profile: CSProfile) -> list[str]:
    r = profile.r
    pairs = [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    head = "  coeffs  " + " ".join(f"e{i}{j}" if r < 10 else f"e{i},{j}" for i, j in pairs) + "  CS"
    lines = [head]
    for rho, value in profile.entries:
        ev = " ".join(f"{eval_on_e(rho, i, j):>{len(f'e{i}{j}') if r < 10 else len(f'e{i},{j}')}}" for i, j in pairs)
        lines.append(f"  {rho.label():<7} {ev}  {value:>2}")
    return lines


# -- invariant ---------------------------------------------------------------


def _z_field(z: int, supported: bool) -> int | str:
    return z if supported else f"unsupported:{z}"


def invariant_report(t: PrimeTuple, force: bool = False) -> dict:
    report = validate_field(t)
    if not report.narrow_equals_wide and not force:
        raise NormNotMinusOne(t.d)
    profile = cs_profile(t, force=force)
    M = mod2_linking_matrix(t)
    dw = DWValue.from_values(profile.values)
    doc = {
        "primes": list(t.primes),
        "d": t.d,
        "unit_norm": report.unit_norm,
        "period_length": report.period_length,
        "supported": profile.supported,
        "lk2": [list(row) for row in M.entries],
        "lk2_pairs": [list(p) for p in M.pairs()],
        "characters": _profile_json(profile),
        "profile": profile.bits,
        "z": dw.value,
        "n0": dw.even_count,
        "n1": dw.odd_count,
    }
    if not profile.supported:
        doc["warning"] = UNSUPPORTED
    return doc


def parse_invariant_json(text: str) -> tuple[str, int]:
    """Recover (profile bits, Z) from ``invariant --json`` output."""
    doc = json.loads(text)
    bits = "".join(str(c["cs"]) for c in doc["characters"])
    if bits != doc["profile"]:
        raise ValidationError("profile string disagrees with character list")
    return bits, int(doc["z"])


def cmd_invariant(args, out) -> int:
    t = PrimeTuple.parse(args.primes)
    doc = invariant_report(t, args.force)
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.csv:
        z = _z_field(doc["z"], doc["supported"])
        _emit_csv([SCAN_HEADER, [doc["d"], t.label(), doc["unit_norm"], z, doc["profile"]]], out)
    else:
        r = t.r
        lines = [
            f"field       Q(sqrt({t.d})), d = {' * '.join(map(str, t.primes))}",
            f"unit norm   {doc['unit_norm']:+d} (period length of sqrt(d): {doc['period_length']})",
        ]
        if doc.get("warning"):
            lines.append(f"WARNING     {doc['warning']}")
        lines.append("lk2         " + (", ".join(f"lk2({t[i - 1]},{t[j - 1]})={v}" for i, j, v in doc["lk2_pairs"]) or "(no pairs)"))
        lines.append("lk2 matrix")
        lines += ["  " + " ".join(map(str, row)) for row in doc["lk2"]]
        lines.append(f"CS profile over {1 << (r - 1)} character(s)")
        lines += _profile_table(cs_profile(t, force=args.force))
        lines.append(f"profile     {doc['profile']}")
        lines.append(f"Z           {doc['z']}  (N0={doc['n0']}, N1={doc['n1']})")
        out.write("\n".join(lines) + "\n")
    return 0


# -- unit --------------------------------------------------------------------


def cmd_unit(args, out) -> int:
    text = args.value.strip()
    if "," in text:
        d = PrimeTuple.parse(text).d
    else:
        try:
            d = int(text)
        except ValueError:
            raise ValidationError(f"cannot parse {text!r} as an integer or prime list") from None
    norm = fundamental_unit_norm(d)
    x, y, sign = fundamental_pell_solution(d)
    ell = cf_sqrt(d).period_length
    assert sign == norm
    doc = {"d": d, "period_length": ell, "x": str(x), "y": str(y), "norm": norm}
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.csv:
        _emit_csv([["d", "period_length", "x", "y", "norm"], [d, ell, x, y, norm]], out)
    else:
        out.write(
            f"d              {d}\n"
            f"period length  {ell}\n"
            f"x              {x}\n"
            f"y              {y}\n"
            f"x^2 - d*y^2    {norm:+d}\n"
            f"unit norm      {norm:+d}\n"
        )
    return 0


# -- topo --------------------------------------------------------------------


def load_linking_matrix(path: str) -> IntegerLinkingMatrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc.msg})") from None
    return IntegerLinkingMatrix.from_json(obj, label=Path(path).stem)


def cmd_topo(args, out) -> int:
    L = load_linking_matrix(args.matrix)
    profile = topo_profile(L)
    dw = topo_dw(L)
    if args.json:
        doc = {
            "r": L.r,
            "lk": L.to_json()["lk"],
            "characters": _profile_json(profile),
            "profile": profile.bits,
            "z": dw.value,
            "n0": dw.even_count,
            "n1": dw.odd_count,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.csv:
        _emit_csv([["label", "r", "z", "profile"], [L.label, L.r, dw.value, profile.bits]], out)
    else:
        lines = [f"link        {L.label} ({L.r} components)", "linking numbers"]
        lines += ["  " + " ".join(f"{v:>3}" for v in row) for row in L.entries]
        lines.append(f"CS profile over {1 << (L.r - 1)} character(s)")
        lines += _profile_table(profile)
        lines.append(f"profile     {profile.bits}")
        lines.append(f"Z           {dw.value}  (N0={dw.even_count}, N1={dw.odd_count})")
        out.write("\n".join(lines) + "\n")
    return 0


# -- lens --------------------------------------------------------------------


def cmd_lens(args, out) -> int:
    params = LensSpaceParams(args.a, args.b)
    s = lens_signed_sum(params)
    cs = lens_cs(params)
    z = lens_dw(params).value
    doc = {"a": params.a, "b": params.b, "signed_sum": s, "cs": cs, "z": z}
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.csv:
        _emit_csv([list(doc), list(doc.values())], out)
    else:
        out.write(
            f"lens space     L({params.a},{params.b})\n"
            f"signed sum     {s}\n"
            f"CS (rho != 0)  {cs}\n"
            f"Z              {z}\n"
        )
    return 0


# -- scan --------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    d: int
    primes: tuple[int, ...]
    unit_norm: int
    z: int | str
    profile: str

    def row(self) -> list:
        return [self.d, "-".join(map(str, self.primes)), self.unit_norm, self.z, self.profile]

    def as_dict(self) -> dict:
        return dict(zip(SCAN_HEADER, [self.d, list(self.primes), self.unit_norm, self.z, self.profile]))


def scan_record(primes: tuple[int, ...], force: bool = False) -> ScanRecord:
    t = PrimeTuple(primes)
    report = validate_field(t)
    if not report.narrow_equals_wide and not force:
        return ScanRecord(t.d, t.primes, report.unit_norm, SKIPPED, "")
    profile = cs_profile(t, force=True)
    return ScanRecord(t.d, t.primes, report.unit_norm, _z_field(DWValue.from_values(profile.values).value, profile.supported), profile.bits)


def scan_tuples(r: int, bound: int) -> list[tuple[int, ...]]:
    """Strictly increasing r-tuples of primes = 1 mod 4 below ``bound``, lexicographic."""
    primes = [p for p in range(5, bound, 4) if is_prime(p)]
    return list(combinations(primes, r))


def run_scan(r: int, bound: int, force: bool = False, jobs: int = 1) -> list[ScanRecord]:
    tuples = scan_tuples(r, bound)
    if jobs > 1 and len(tuples) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() yields in submission order, so rows stay lexicographic
            return list(pool.map(scan_record, tuples, [force] * len(tuples), chunksize=max(1, len(tuples) // (4 * jobs))))
    return [scan_record(tp, force) for tp in tuples]


def render_scan(records: list[ScanRecord], r: int, bound: int, as_json: bool, meta: bool) -> str:
    stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    if as_json:
        doc: dict = {"r": r, "bound": bound}
        if meta:
            doc["generated"] = stamp
        doc["records"] = [rec.as_dict() for rec in records]
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    if meta:
        buf.write(f"# arithcs scan r={r} bound={bound} generated={stamp}\n")
    _emit_csv([SCAN_HEADER] + [rec.row() for rec in records], buf)
    return buf.getvalue()


def _write_atomic(path: Path, text: str) -> None:
    parent = path.parent if str(path.parent) else Path(".")
    try:
        fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=parent)
    except OSError as exc:
        raise ValidationError(f"cannot write to {path}: {exc.strerror}") from None
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException as exc:
        Path(tmp).unlink(missing_ok=True)
        if isinstance(exc, OSError):
            raise ValidationError(f"cannot write to {path}: {exc.strerror}") from None
        raise


def cmd_scan(args, out) -> int:
    if args.r < 1:
        raise ValidationError(f"r must be >= 1, got {args.r}")
    if args.bound < 5:
        raise ValidationError(f"bound must be >= 5, got {args.bound}")
    if args.jobs < 1:
        raise ValidationError(f"--jobs must be >= 1, got {args.jobs}")
    if args.out:
        path = Path(args.out)
    else:
        base = Path(os.environ.get(SCAN_DIR_ENV, "."))
        path = base / f"scan_r{args.r}_b{args.bound}.{'json' if args.json else 'csv'}"
    records = run_scan(args.r, args.bound, args.force, args.jobs)
    _write_atomic(path, render_scan(records, args.r, args.bound, args.json, not args.no_meta))
    hist = Counter(rec.z if isinstance(rec.z, int) or rec.z == SKIPPED else rec.z.split(":")[0] for rec in records)
    out.write(f"wrote {len(records)} records to {path}\n")
    out.write("Z histogram\n")
    for key in sorted((k for k in hist if isinstance(k, int)), reverse=True):
        out.write(f"  {key:>8}  {hist[key]}\n")
    for key in (SKIPPED, "unsupported"):
        if hist[key]:
            out.write(f"  {key}  {hist[key]}\n")
    return 0


# -- dictionary --------------------------------------------------------------


def cmd_dictionary(args, out) -> int:
    t = PrimeTuple.parse(args.primes)
    arith, topo = dictionary_profiles(t, args.force)
    z_a = DWValue.from_values(arith.values).value
    z_t = DWValue.from_values(topo.values).value
    ok = arith.entries == topo.entries and z_a == z_t
    if args.json:
        doc = {"primes": list(t.primes), "arithmetic": arith.bits, "topological": topo.bits,
               "z_arithmetic": z_a, "z_topological": z_t, "verdict": "PASS" if ok else "FAIL"}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        lines = ["  coeffs   arith  topo"]
        for (rho, a), (_, b) in zip(arith.entries, topo.entries):
            lines.append(f"  {rho.label():<8} {a:>5} {b:>5}{'' if a == b else '  <-- mismatch'}")
        lines.append(f"  Z        {z_a:>5} {z_t:>5}")
        lines.append("PASS" if ok else "FAIL")
        out.write("\n".join(lines) + "\n")
    return 0 if ok else 1


# -- wiring ------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else False
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=default, help="JSON output")
    fmt.add_argument("--csv", action="store_true", default=default, help="CSV output")
    parser.add_argument("--force", action="store_true", default=default,
                        help="compute even when the fundamental unit has norm +1 (unsupported)")
    parser.add_argument("--no-meta", action="store_true", default=default,
                        help="omit the timestamp header from scan files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arithcs", description=(
        "Mod-2 arithmetic Chern-Simons and Dijkgraaf-Witten invariants of Q(sqrt(p1...pr)), "
        "and their analogues for double branched covers of S^3."))
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="CS profile and Z for a list of primes = 1 mod 4")
    p.add_argument("primes", help="comma-separated primes, e.g. 5,29,37")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("unit", help="period of sqrt(d), minimal Pell solution and unit norm")
    p.add_argument("value", help="squarefree d >= 2, or a comma-separated prime list")
    p.set_defaults(func=cmd_unit)

    p = sub.add_parser("topo", help="CS profile and Z from a linking-matrix JSON file")
    p.add_argument("matrix", help='path to {"r": ..., "lk": [[i, j, value], ...]}')
    p.set_defaults(func=cmd_topo)

    p = sub.add_parser("lens", help="lens space L(a,b) from the two-bridge link B(a,b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_lens)

    p = sub.add_parser("scan", help="tabulate every r-tuple of primes = 1 mod 4 below a bound")
    p.add_argument("r", type=int)
    p.add_argument("bound", type=int)
    p.add_argument("-o", "--out", help=f"output file (default: ${SCAN_DIR_ENV} or cwd)")
    p.add_argument("-j", "--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("dictionary", help="check arithmetic and topological profiles agree")
    p.add_argument("primes")
    p.set_defaults(func=cmd_dictionary)

    for sp in sub.choices.values():
        _global_flags(sp, suppress=True)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json and args.csv:
        parser.error("--json and --csv are mutually exclusive")
    # Render into a buffer so a failing command never leaves partial rows on stdout.
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except NormNotMinusOne as exc:
        err.write(f"error: {exc}\n")
        return 3
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
