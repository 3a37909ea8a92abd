"""Command-line front end: compute, verify, rootsum, tables, dump."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import paper_tables as pt
from .chevalley import structure_constants
from .cohomology import h1_u_with_coeffs, h2_b1, h_n_u1, h_n_u_ordinary, standard_module
from .rootsum import RootSumQuery, Variant, solve, to_csv
from .rootsystem import RootSystem, build_root_system

log = logging.getLogger("liecoh")

COMMANDS = ("compute", "verify", "rootsum", "tables", "dump")
GROUPS = ("u1", "u", "b1")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    kind: Optional[str] = None
    rank: Optional[int] = None
    swapped: bool = False
    prime: int = 2
    degree: int = 2
    group: str = "u1"
    module: Optional[str] = None
    lam: Tuple[int, ...] = ()
    fmt: str = "text"
    out: Optional[str] = None
    threads: Optional[int] = None
    verbose: int = 0
    all_systems: bool = False
    max_rank: Optional[int] = None
    variant: str = Variant.PLAIN_GENERAL.value
    admissible_only: bool = False
    tables: List[str] = field(default_factory=lambda: ["h2_u1", "h2_b1", "h1_coefficients", "explicit_classes"])

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        needs_system = not (self.command == "verify" and self.all_systems)
        if needs_system and (self.kind is None or self.rank is None):
            raise UsageError("--type and --rank are required")
        if self.all_systems and self.command != "verify":
            raise UsageError("--all is only valid with verify")
        if self.kind is not None and self.rank is not None:
            try:
                build_root_system(self.kind, self.rank)
            except ValueError as e:
                raise UsageError(f"--type/--rank: {e}") from None
        if self.prime < 2 or any(self.prime % d == 0 for d in range(2, int(self.prime ** 0.5) + 1)):
            raise UsageError(f"--prime: {self.prime} is not prime")
        if self.group not in GROUPS:
            raise UsageError(f"--group must be one of {', '.join(GROUPS)}")
        if self.command == "compute":
            if self.degree not in (0, 1, 2):
                raise UsageError("--degree must be 0, 1 or 2")
            if self.group in ("u1", "b1") and self.prime != 2:
                raise UsageError("--prime: groups u1 and b1 are only implemented for p = 2")
            if self.module is not None and (self.group != "u" or self.degree != 1):
                raise UsageError("--module requires --group u --degree 1")
            if self.lam and self.group != "b1":
                raise UsageError("--lambda requires --group b1")
            if self.group == "b1" and self.degree != 2:
                raise UsageError("--degree: group b1 is only computed in degree 2")
            if self.lam and len(self.lam) != self.rank:
                raise UsageError(f"--lambda needs {self.rank} coordinates")
            if self.fmt == "csv":
                raise UsageError("--format csv is only available for rootsum")
        if self.command == "rootsum" and self.prime != 2:
            raise UsageError("--prime: the root-sum equations are specialised to p = 2")
        if self.command in ("verify", "tables") and self.prime != 2:
            raise UsageError("--prime: the expected tables are for p = 2")
        if self.threads is not None and self.threads < 1:
            raise UsageError("--threads must be positive")

    def system(self) -> RootSystem:
        return build_root_system(self.kind, self.rank, self.swapped)


def _parse_lambda(text: Optional[str]) -> Tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--lambda: expected comma-separated integers, got {text!r}") from None


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liecoh", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", dest="kind", type=str.upper)
        p.add_argument("--rank", type=int)
        p.add_argument("--swapped", action="store_true", help="swap short/long labels (F4, G2)")
        p.add_argument("--prime", type=int, default=2)
        p.add_argument("--format", dest="fmt", default="text")
        p.add_argument("--out")
        p.add_argument("--threads", type=int)
        p.add_argument("-v", "--verbose", action="count", default=0)

    p = sub.add_parser("compute", help="cohomology of U_1, U or B_1")
    common(p)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--group", default="u1")
    p.add_argument("--module", help="coefficient module (N) for H^1(U, N)")
    p.add_argument("--lambda", dest="lam")

    p = sub.add_parser("verify", help="diff the engine against the encoded tables")
    common(p)
    p.add_argument("--all", dest="all_systems", action="store_true")
    p.add_argument("--max-rank", type=int)
    p.add_argument("--table", dest="tables", action="append",
                   choices=["h2_u1", "h2_b1", "h1_coefficients", "explicit_classes"])

    p = sub.add_parser("rootsum", help="solve the root-sum equations")
    common(p)
    p.add_argument("--variant", default=Variant.PLAIN_GENERAL.value, choices=[v.value for v in Variant])
    p.add_argument("--admissible-only", action="store_true",
                   help="drop pairs whose lone monomial cannot be a cocycle")

    p = sub.add_parser("tables", help="print the instantiated expected tables")
    common(p)

    p = sub.add_parser("dump", help="roots, Cartan matrix and structure constants")
    common(p)
    return ap


def config_from_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = _parser().parse_args(argv)
    d = vars(ns)
    cfg = RunConfig(
        command=d["command"], kind=d.get("kind"), rank=d.get("rank"), swapped=d.get("swapped", False),
        prime=d.get("prime", 2), degree=d.get("degree", 2), group=d.get("group", "u1"),
        module=d.get("module"), lam=_parse_lambda(d.get("lam")), fmt=d.get("fmt", "text"),
        out=d.get("out"), threads=d.get("threads"), verbose=d.get("verbose", 0),
        all_systems=d.get("all_systems", False), max_rank=d.get("max_rank"),
        variant=d.get("variant", Variant.PLAIN_GENERAL.value),
        admissible_only=d.get("admissible_only", False),
    )
    if d.get("tables"):
        cfg.tables = d["tables"]
    if cfg.threads is None and os.environ.get("LIECOH_THREADS"):
        cfg.threads = int(os.environ["LIECOH_THREADS"])
    return cfg


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _compute(cfg: RunConfig) -> Tuple[str, int]:
    rs = cfg.system()
    if cfg.group == "u1":
        res = h_n_u1(rs, cfg.degree, cfg.prime, cfg.threads)
    elif cfg.group == "b1":
        res = h2_b1(rs, cfg.lam or (0,) * rs.rank, cfg.prime, cfg.threads)
    elif cfg.module is not None:
        try:
            res = h1_u_with_coeffs(rs, standard_module(rs, cfg.module), cfg.prime)
        except ValueError as e:
            raise UsageError(f"--module: {e}") from None
    else:
        res = h_n_u_ordinary(rs, cfg.degree, cfg.prime, cfg.threads)
    if cfg.fmt == "json":
        return _dumps(res.to_json()), 0
    lines = [f"{rs.name} H^{res.degree}({res.group}) p={res.prime}: total dimension {res.total_dim}"]
    for w in sorted(res.classes):
        c = res.classes[w]
        if c.dim:
            lines.append(f"  fundamental {_vec(w)}  simple {_vec(c.simple)}  dim {c.dim}")
    return "\n".join(lines) + "\n", 0


def _verify(cfg: RunConfig) -> Tuple[str, int]:
    systems = pt.default_matrix(cfg.max_rank) if cfg.all_systems else [cfg.system()]
    verdicts = []
    for rs in systems:
        log.info("verifying %s", rs.name)
        verdicts.append(pt.verify(rs, cfg.prime, cfg.threads, tables=cfg.tables))
    code = 0 if all(v.ok for v in verdicts) else 1
    if cfg.fmt == "json":
        return _dumps({"ok": code == 0, "systems": [v.to_json() for v in verdicts]}), code
    lines = []
    for v in verdicts:
        lines.append(f"{v.system}: {'ok' if v.ok else 'MISMATCH'}")
        for t in v.tables:
            r = v.best(t)
            lines.append(f"  {t:<17} [{r.labeling}] expected {r.expected_total} computed {r.computed_total}"
                         f" matched {sum(r.matched.values())} missing {sum(r.missing_in_computed.values())}"
                         f" extra {sum(r.extra_in_computed.values())} flagged {len(r.flagged_known_issues)}")
    return "\n".join(lines) + "\n", code


def _rootsum(cfg: RunConfig) -> Tuple[str, int]:
    rs = cfg.system()
    sols = solve(rs, RootSumQuery(Variant(cfg.variant), p=cfg.prime, admissible_only=cfg.admissible_only))
    if cfg.fmt == "csv":
        return to_csv(rs, sols), 0
    roots = rs.positive_roots
    if cfg.fmt == "json":
        def r(i):
            return None if i is None else list(roots[i])
        rows = [{"alpha": r(s.alpha), "beta": r(s.beta), "beta1": r(s.beta1), "beta2": r(s.beta2),
                 "i": s.i, "m": s.m, "t": list(s.t), "sigma": list(s.sigma),
                 "weight": list(s.weight(rs))} for s in sols]
        return _dumps({"system": rs.name, "variant": cfg.variant, "solutions": rows}), 0
    lines = [f"{rs.name} {cfg.variant}: {len(sols)} solutions"]
    for s in sols:
        lines.append(f"  {_vec(roots[s.alpha])} + {_vec(roots[s.beta])} = {_vec(s.weight(rs))}"
                     f"  i={s.i} m={s.m} t={_vec(s.t)} sigma={_vec(s.sigma)}")
    return "\n".join(lines) + "\n", 0


def _tables(cfg: RunConfig) -> Tuple[str, int]:
    rs = cfg.system()
    out = []
    for fn in (pt.expected_h2_u1, pt.expected_h2_b1_trivial, pt.expected_coeff_basis):
        try:
            out.append(fn(rs))
        except ValueError:
            continue
    if cfg.fmt == "json":
        def frac(x):
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        data = [{"table": t.table, "coordinates": t.coordinates, "total": t.total,
                 "rows": [{"weight": [frac(x) for x in row.weight], "family": row.family,
                           "issue": row.issue} for row in t.rows]} for t in out]
        return _dumps({"system": rs.name, "tables": data}), 0
    lines = []
    for t in out:
        lines.append(f"{t.table} ({t.coordinates} coordinates): {t.total} rows")
        for row in t.rows:
            flag = f"  [{row.issue}]" if row.issue else ""
            lines.append(f"  {_vec(row.weight)}  family {row.family}{flag}")
    return "\n".join(lines) + "\n", 0


def _dump(cfg: RunConfig) -> Tuple[str, int]:
    rs = cfg.system()
    sc = structure_constants(rs)
    data = rs.to_json()
    data["structure_constants"] = [[list(a), list(b), n] for (a, b), n in sc.items()
                                   if rs.root_index(a) < rs.root_index(b)]
    if cfg.fmt == "json":
        return _dumps(data), 0
    lines = [f"{rs.name}: {len(rs.positive_roots)} positive roots"]
    lines += [f"  {_vec(r)}" for r in rs.positive_roots]
    lines.append("structure constants N(a, b):")
    lines += [f"  {_vec(a)} {_vec(b)} {n}" for a, b, n in data["structure_constants"]]
    return "\n".join(lines) + "\n", 0


_RUNNERS = {"compute": _compute, "verify": _verify, "rootsum": _rootsum, "tables": _tables, "dump": _dump}


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        if cfg.command != "rootsum" and cfg.fmt == "csv":
            raise UsageError("--format csv is only available for rootsum")
        text, code = _RUNNERS[cfg.command](cfg)
    except UsageError as e:
        print(f"liecoh: usage error: {e}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as e:
        print(f"liecoh: usage error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:  # argparse reports its own usage errors
        return 2 if e.code else 0
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbose, 2), format="%(name)s: %(message)s")
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
