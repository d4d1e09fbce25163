"""Command-line interface.

Exit codes: 0 success, 1 input or usage error, 2 mathematical precondition
violated (e.g. the matrix is not an involutive isometry), 3 a verification
or prediction mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classify import classify_involution, representatives
from .dsum import computed_dd_sum, predict_dd_sum
from .errors import CapExceeded, InvalidArgument, MirrorUndefined, NotAnInvolution, NotAnIsometry, ShapeError
from .gf2 import BitMatrix, format_matrix, read_matrix, str_to_bits
from .invariants import I_PROFILE_MAX_DIM, charge, dd_invariant, i_profile
from .isometries import check_cap, enumerate_group, group_order, validate_involution
from .semidirect import SemiDirectGroup, theta, theta_standard
from .spaces import BilinearSpace, SpaceType, check_parity, parse_stype, standard_space
from .verify import SUITES, VerifyConfig, run_suite

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CommandConfig:
    subcommand: str
    stype: SpaceType | None = None
    dim: int | None = None
    paths: tuple[str, ...] = ()
    output: str = "json"
    jobs: int = 1
    allow_large: bool = False
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim is not None and self.dim < 1:
            raise UsageError("dimension must be positive")
        if self.stype is not None and self.dim is not None:
            try:
                check_parity(self.stype, self.dim)
            except InvalidArgument as e:
                raise UsageError(str(e)) from None
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")


def _emit(cfg: CommandConfig, payload: dict, text: str | None = None) -> None:
    if cfg.output == "json" or text is None:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _space_for(matrix: BitMatrix, stype: SpaceType | None, gram_path: str | None) -> BilinearSpace:
    if not matrix.is_square:
        raise UsageError(f"matrix is {matrix.nrows}x{matrix.ncols}, not square")
    if gram_path:
        gram = read_matrix(gram_path)
        try:
            return BilinearSpace.from_gram(gram)
        except InvalidArgument as e:
            raise UsageError(str(e)) from None
    n = matrix.nrows
    if stype is None:
        stype = SpaceType.EVO if n % 2 == 0 else SpaceType.ODDO
    try:
        return standard_space(stype, n)
    except InvalidArgument as e:
        raise UsageError(str(e)) from None


def _load_involution(cfg: CommandConfig, path: str, stype: SpaceType | None = None):
    m = read_matrix(path)
    space = _space_for(m, stype or cfg.stype, cfg.options.get("gram"))
    return validate_involution(space, m)


def _invariant_payload(s) -> dict:
    dd = dd_invariant(s)
    out = {"space": s.space.stype.value, "dim": s.dim, **dd.as_dict(), "DD": list(dd), "DD_code": dd.code}
    if s.space.stype is SpaceType.EVO:
        out["charge"] = int(charge(s))
        if s.dim <= I_PROFILE_MAX_DIM:
            out["I"] = list(i_profile(s))
    return out


def cmd_classify(cfg: CommandConfig) -> int:
    s = _load_involution(cfg, cfg.paths[0])
    desc = classify_involution(s)
    payload = desc.as_dict()
    inv = _invariant_payload(s)
    for key in ("charge", "I"):
        if key in inv:
            payload[key] = inv[key]
    text = f"{desc.stype} dim {desc.dim}: DD={list(desc.dd)} family={desc.family} k={desc.k}"
    _emit(cfg, payload, text)
    return EXIT_OK


def cmd_invariants(cfg: CommandConfig) -> int:
    s = _load_involution(cfg, cfg.paths[0])
    payload = _invariant_payload(s)
    _emit(cfg, payload, " ".join(f"{k}={v}" for k, v in payload.items()))
    return EXIT_OK


def cmd_representatives(cfg: CommandConfig) -> int:
    reps = representatives(cfg.stype, cfg.dim)
    if cfg.output == "json":
        print(json.dumps([{**d.as_dict(), "matrix": format_matrix(s.matrix).splitlines()} for d, s in reps]))
        return EXIT_OK
    blocks = []
    for d, s in reps:
        dd = ",".join(map(str, d.dd))
        blocks.append(f"# DD=[{dd}] family={d.family} k={d.k}\n{format_matrix(s.matrix)}")
    print("\n\n".join(blocks))
    return EXIT_OK


def _enumerate_part(args: tuple[str, int, bool, bool, bool, int, int]) -> tuple[int, list[str]]:
    stype, dim, allow_large, involutions, count_only, index, parts = args
    space = standard_space(stype, dim)
    count = 0
    out = []
    for g in enumerate_group(space, allow_large=allow_large, part=(index, parts)):
        if involutions and not g.is_involution():
            continue
        count += 1
        if not count_only:
            out.append(format_matrix(g.matrix))
    return count, out


def cmd_enumerate(cfg: CommandConfig) -> int:
    count_only = cfg.options.get("count", False)
    involutions = cfg.options.get("involutions", False)
    check_cap(standard_space(cfg.stype, cfg.dim), cfg.allow_large)
    tasks = [(cfg.stype.value, cfg.dim, cfg.allow_large, involutions, count_only, i, cfg.jobs) for i in range(cfg.jobs)]
    if cfg.jobs == 1:
        results = [_enumerate_part(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_enumerate_part, tasks))
    total = sum(c for c, _ in results)
    if count_only:
        kind = "involutions" if involutions else "elements"
        _emit(cfg, {"space": cfg.stype.value, "dim": cfg.dim, kind: total}, str(total))
        return EXIT_OK
    blocks = [b for _, out in results for b in out]
    if blocks:
        print("\n\n".join(blocks))
    return EXIT_OK


def cmd_order(cfg: CommandConfig) -> int:
    n = group_order(cfg.stype, cfg.dim)
    _emit(cfg, {"space": cfg.stype.value, "dim": cfg.dim, "order": n}, str(n))
    return EXIT_OK


def cmd_dsum(cfg: CommandConfig) -> int:
    s = _load_involution(cfg, cfg.paths[0], cfg.options.get("type_a"))
    t = _load_involution(cfg, cfg.paths[1], cfg.options.get("type_b"))
    pred = predict_dd_sum(dd_invariant(s), s.space.stype, dd_invariant(t), t.space.stype)
    computed = computed_dd_sum(s, t)
    match = pred.result == computed
    payload = {
        "DD_a": list(dd_invariant(s)),
        "DD_b": list(dd_invariant(t)),
        **pred.as_dict(),
        "computed": list(computed),
        "verdict": "MATCH" if match else "MISMATCH",
    }
    text = f"predicted {list(pred.result)} computed {list(computed)} case ({pred.case}): {payload['verdict']}"
    _emit(cfg, payload, text)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_semidirect(cfg: CommandConfig) -> int:
    a = read_matrix(cfg.paths[0])
    if not a.is_square or a.nrows % 2:
        raise UsageError("A must be a square matrix of even size")
    group = SemiDirectGroup.standard(a.nrows)
    bits = cfg.options.get("v") or "0" * a.nrows
    if len(bits) != a.nrows or set(bits) - {"0", "1"}:
        raise UsageError(f"--v must be a 0/1 string of length {a.nrows}")
    lam = cfg.options.get("lam", 0)
    x = group.element(str_to_bits(bits), lam, a)
    iso = theta_standard(group.q, x) if cfg.options.get("standard") else theta(group.q, x)
    if cfg.output == "json":
        print(json.dumps({"dim": iso.dim, "standard": bool(cfg.options.get("standard")), "matrix": format_matrix(iso.matrix).splitlines()}))
    else:
        print(format_matrix(iso.matrix))
    return EXIT_OK


def cmd_verify(cfg: CommandConfig) -> int:
    name = cfg.options["suite"]
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    vcfg = VerifyConfig(seed=cfg.options.get("seed", 0), random_pairs=cfg.options.get("pairs", 10_000))
    ok = True
    reports = []
    for n in names:
        rep = run_suite(n, vcfg)
        ok &= rep.passed
        reports.append(rep)
        if cfg.output != "json":
            print("\n".join(rep.lines()))
    if cfg.output == "json":
        print(json.dumps([r.as_dict() for r in reports]))
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "representatives": cmd_representatives,
    "enumerate": cmd_enumerate,
    "order": cmd_order,
    "dsum": cmd_dsum,
    "semidirect": cmd_semidirect,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="f2invol", description="Involutions in isometry groups of F2 bilinear forms.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def space_args(sp, required: bool):
        sp.add_argument("--space", choices=[t.value for t in SpaceType], required=required)
        sp.add_argument("--dim", type=int, required=required)

    def fmt(sp, default: str):
        sp.add_argument("--format", choices=["text", "json"], default=default)

    for name in ("classify", "invariants"):
        sp = sub.add_parser(name, help=f"{name} of an involution read from a matrix file")
        sp.add_argument("path")
        sp.add_argument("--space", choices=[t.value for t in SpaceType], help="standard space type (default: dot product)")
        sp.add_argument("--gram", help="Gram matrix file for a non-standard space")
        fmt(sp, "json")

    sp = sub.add_parser("representatives", help="canonical class representatives")
    space_args(sp, True)
    fmt(sp, "text")

    sp = sub.add_parser("enumerate", help="enumerate the isometry group")
    space_args(sp, True)
    sp.add_argument("--involutions", action="store_true")
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--allow-large", action="store_true")
    fmt(sp, "text")

    sp = sub.add_parser("order", help="group order from the closed formula")
    space_args(sp, True)
    fmt(sp, "text")

    sp = sub.add_parser("dsum", help="predicted versus computed DD of a direct sum")
    sp.add_argument("path_a")
    sp.add_argument("path_b")
    sp.add_argument("--type-a", choices=[t.value for t in SpaceType])
    sp.add_argument("--type-b", choices=[t.value for t in SpaceType])
    fmt(sp, "json")

    sp = sub.add_parser("semidirect", help="semidirect product tools")
    ssub = sp.add_subparsers(dest="action", required=True)
    emb = ssub.add_parser("embed", help="matrix of theta((v, lambda), A)")
    emb.add_argument("path")
    emb.add_argument("--v", help="0/1 string for v (default zero)")
    emb.add_argument("--lambda", dest="lam", type=int, choices=[0, 1], default=0)
    emb.add_argument("--standard", action="store_true", help="express in the orthonormal basis")
    fmt(emb, "text")

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help=f"one of {', '.join(SUITES)}, or all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--pairs", type=int, default=10_000, help="random pairs for sampled checks")
    fmt(sp, "text")
    return p


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    stype = parse_stype(ns.space) if getattr(ns, "space", None) else None
    paths = tuple(getattr(ns, k) for k in ("path", "path_a", "path_b") if getattr(ns, k, None))
    options = {
        k: getattr(ns, k)
        for k in ("gram", "involutions", "count", "v", "lam", "standard", "suite", "seed", "pairs")
        if hasattr(ns, k)
    }
    for k in ("type_a", "type_b"):
        if getattr(ns, k, None):
            options[k] = parse_stype(getattr(ns, k))
    return CommandConfig(
        subcommand=ns.subcommand,
        stype=stype,
        dim=getattr(ns, "dim", None),
        paths=paths,
        output=ns.format,
        jobs=getattr(ns, "jobs", 1),
        allow_large=getattr(ns, "allow_large", False),
        options=options,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.subcommand](cfg)
    except (NotAnIsometry, NotAnInvolution, MirrorUndefined) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MATH
    except (UsageError, CapExceeded, ShapeError, InvalidArgument, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
