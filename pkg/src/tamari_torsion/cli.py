"""Command-line interface.

Exit status is 0 on success, 1 for invalid mathematical input (a malformed
bracket string, a vector that is not a bracket vector, a failed verification)
and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import export, tamari, verify
from .subcat import f_set

PRIMES = (2, 3, 5, 7)
FORMATS = ("json", "dot", "plain")
TILTING_BOUND = 6


@dataclass
class Config:
    n: int | None
    prime: int = 2
    format: str | None = None
    output: str | None = None
    jobs: int = 1
    unsafe_n: int | None = None
    poset: bool = False


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _add_common(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS lets the same flag appear before or after the subcommand
    s = argparse.SUPPRESS
    parser.add_argument("-n", type=_positive, default=s, help="rank of the quiver A_n")
    parser.add_argument("--prime", type=int, choices=PRIMES, default=s, help="field for matrix checks (default 2)")
    parser.add_argument("--format", choices=FORMATS, default=s, help="output format")
    parser.add_argument("-o", "--output", default=s, help="write output to this path")
    parser.add_argument("--jobs", type=_positive, default=s, help="worker processes for brute-force steps")
    parser.add_argument("--unsafe-n", type=_positive, default=s, help="raise verification and enumeration bounds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamari-torsion",
        description="Torsion classes of rep A_n and the Tamari lattice.",
    )
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_common(p)
        return p

    command("enumerate", "list bracket vectors (torsion classes)")
    command("hasse", "emit the Hasse diagram")
    p = command("encode", "bracket string -> bracket vector")
    p.add_argument("string")
    p = command("decode", "bracket vector -> bracket string")
    p.add_argument("vector")
    for name in ("meet", "join"):
        p = command(name, f"{name} of two bracket vectors")
        p.add_argument("a")
        p.add_argument("b")
    command("verify", "run every oracle suite")
    p = command("tilting", "list tilting objects and their Gen classes")
    p.add_argument("--poset", action="store_true", default=argparse.SUPPRESS, help="emit the tilting order instead")
    return parser


def _config(args: argparse.Namespace) -> Config:
    return Config(
        n=getattr(args, "n", None),
        prime=getattr(args, "prime", 2),
        format=getattr(args, "format", None),
        output=getattr(args, "output", None),
        jobs=getattr(args, "jobs", 1),
        unsafe_n=getattr(args, "unsafe_n", None),
        poset=getattr(args, "poset", False),
    )


class UsageError(Exception):
    pass


def _need_n(cfg: Config) -> int:
    if cfg.n is None:
        raise UsageError("-n is required for this command")
    return cfg.n


def _vector(text: str, cfg: Config) -> tamari.BracketVector:
    a = tamari.BracketVector.parse(text)
    if cfg.n is not None and a.n != cfg.n:
        raise ValueError(f"vector {text} has length {a.n}, expected {cfg.n}")
    return a


def cmd_enumerate(cfg: Config) -> str:
    n = _need_n(cfg)
    vectors = tamari.enumerate_bracket_vectors(n)
    fmt = cfg.format or "plain"
    if fmt == "json":
        rows = [
            {"a": list(a), "bracket": tamari.decode(a), "intervals": [[x.i, x.j] for x in sorted(f_set(a))]}
            for a in vectors
        ]
        return json.dumps({"n": n, "count": len(rows), "torsion_classes": rows}) + "\n"
    if fmt != "plain":
        raise UsageError(f"enumerate supports json or plain, not {fmt}")
    lines = [
        f"{a}\t{tamari.decode(a)}\t[{','.join(str(x) for x in sorted(f_set(a)))}]" for a in vectors
    ]
    lines.append(f"count={len(vectors)}")
    return "\n".join(lines) + "\n"


def cmd_hasse(cfg: Config) -> str:
    n = _need_n(cfg)
    return export.render(tamari.hasse(n, jobs=cfg.jobs), n, cfg.format or "json")


def cmd_encode(cfg: Config, string: str) -> str:
    return f"{tamari.encode(string, cfg.n)}\n"


def cmd_decode(cfg: Config, vector: str) -> str:
    return tamari.decode(_vector(vector, cfg)) + "\n"


def cmd_meet(cfg: Config, a: str, b: str) -> str:
    return f"{tamari.meet(_vector(a, cfg), _vector(b, cfg))}\n"


def cmd_join(cfg: Config, a: str, b: str) -> str:
    return f"{tamari.join(_vector(a, cfg), _vector(b, cfg))}\n"


def cmd_verify(cfg: Config) -> tuple[str, bool]:
    n = _need_n(cfg)
    results = verify.run_all(n, prime=cfg.prime, jobs=cfg.jobs, unsafe_n=cfg.unsafe_n)
    ok = all(r.passed for r in results)
    lines = [r.line() for r in results]
    lines.append("all suites passed" if ok else "verification FAILED")
    return "\n".join(lines) + "\n", ok


def cmd_tilting(cfg: Config) -> str:
    n = _need_n(cfg)
    bound = max(TILTING_BOUND, cfg.unsafe_n or 0)
    if n > bound:
        raise UsageError(f"tilting enumeration is limited to n <= {bound} (use --unsafe-n to raise it)")
    if cfg.poset:
        return export.render(tamari.rs_poset(n), n, cfg.format or "json", name="tilting")
    objects = tamari.enumerate_tilting(n)
    if (cfg.format or "plain") == "json":
        rows = [export.element_fields(t) for t in objects]
        return json.dumps({"n": n, "count": len(rows), "tilting": rows}) + "\n"
    if cfg.format not in (None, "plain"):
        raise UsageError(f"tilting listing supports json or plain, not {cfg.format}")
    lines = [f"{t}\tgen={tamari.gen(t.summands, n)}" for t in objects]
    lines.append(f"count={len(objects)}")
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config(args)
    ok = True
    try:
        if args.command == "enumerate":
            text = cmd_enumerate(cfg)
        elif args.command == "hasse":
            text = cmd_hasse(cfg)
        elif args.command == "encode":
            text = cmd_encode(cfg, args.string)
        elif args.command == "decode":
            text = cmd_decode(cfg, args.vector)
        elif args.command == "meet":
            text = cmd_meet(cfg, args.a, args.b)
        elif args.command == "join":
            text = cmd_join(cfg, args.a, args.b)
        elif args.command == "verify":
            text, ok = cmd_verify(cfg)
        else:
            text = cmd_tilting(cfg)
    except UsageError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.output:
        with open(cfg.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
