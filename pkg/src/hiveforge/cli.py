"""Command-line surface.

Exit codes: 0 success, 1 domain error, 2 budget error, 64 usage error.
Results go to stdout (`--json` for the machine form), diagnostics to
stderr.  Deterministic: any command run twice, with or without the
cache and at any worker count, prints byte-identical --json output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cache as cache_mod
from .errors import BudgetError, DomainError
from .oblade import BranchingTriple, count_fillings, enumerate_fillings
from .render import RenderSpec, render
from .rootsys import LieType
from .rpoly import (
    character_form_value,
    kappa_sets,
    r_coefficients,
    series_R,
    verify_r7,
)
from .stretch import evaluate, horn_volume, stretch_polynomial
from .tensor import kostka, tensor_decompose

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _parse_weight(text: str):
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise DomainError(f"cannot parse weight {text!r}; expected comma-separated integers")


def _su_n(type_text: str) -> int:
    lt = LieType.parse(type_text)
    if lt.series != "A":
        raise DomainError("this subcommand expects an A-series type (SU(n) = A(n-1))")
    return lt.rank + 1


def _weight_key(w) -> str:
    return ",".join(str(c) for c in w)


def _jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def build_parser() -> _Parser:
    # SUPPRESS keeps a subcommand's unset flags from clobbering values that
    # were already parsed before the subcommand
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, metavar="N")
    common.add_argument("--budget", type=int, metavar="M", help="max fillings counted")
    common.add_argument("--cache-dir")
    common.add_argument("--no-cache", action="store_true")

    p = _Parser(prog="hiveforge", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    lr = add("lr", help="one Littlewood-Richardson coefficient")
    for a in ("type", "lam", "mu", "nu"):
        lr.add_argument(a)

    tensor = add("tensor", help="full tensor-product decomposition")
    for a in ("type", "lam", "mu"):
        tensor.add_argument(a)

    ko = add("kostka", help="weight multiplicity")
    for a in ("type", "lam", "delta"):
        ko.add_argument(a)

    st = add("stretch", help="stretching polynomial")
    for a in ("type", "lam", "mu", "nu"):
        st.add_argument(a)
    st.add_argument("--no-guard", action="store_true", help="skip the extra consistency sample")
    st.add_argument("--at", type=int, default=None, metavar="S", help="also evaluate at scale S")

    vol = add("volume", help="Horn volume value")
    for a in ("type", "lam", "mu", "nu"):
        vol.add_argument(a)

    ka = add("kappa", help="K and K-hat supports")
    ka.add_argument("type")

    rp = add("rpoly", help="R (or R-hat) character combination")
    rp.add_argument("type")
    rp.add_argument("--hat", action="store_true")

    add("verify-r7", help="verify the stored SU(7) combination")

    sc = add("series-check", help="truncated series vs character form")
    sc.add_argument("n", type=int)
    sc.add_argument("angles")
    sc.add_argument("radius", type=int)

    rd = add("render", help="write SVG pictographs")
    rd.add_argument("kind", choices=["oblade", "honeycomb"])
    for a in ("type", "lam", "mu", "nu"):
        rd.add_argument(a)
    rd.add_argument("--index", type=int, default=0, help="filling index in canonical order")
    rd.add_argument("--out", default=".", help="output directory")
    rd.add_argument("--scale", type=int, default=40)
    rd.add_argument("--mark-zeros", action="store_true")

    ca = add("cache", help="cache maintenance")
    ca.add_argument("action", choices=["stats", "gc"])
    return p


def _emit(args, human: str, payload: dict) -> None:
    if args.json:
        print(_jdump(payload))
    else:
        print(human)


def _cached(args, cache, key, compute):
    hit = cache.get(key)
    if hit is not None:
        print(f"cache hit: {key}", file=sys.stderr)
        return hit
    value = compute()
    cache.put(key, value)
    return value


def _cmd_lr(args, cache):
    n = _su_n(args.type)
    lam, mu, nu = (_parse_weight(x) for x in (args.lam, args.mu, args.nu))
    key = f"{args.type}|lr|{_weight_key(lam)}|{_weight_key(mu)}|{_weight_key(nu)}"

    def compute():
        c = count_fillings(BranchingTriple(n, lam, mu, nu), workers=args.threads, budget=args.budget)
        return str(c)

    c = _cached(args, cache, key, compute)
    _emit(args, c, {"type": args.type, "lambda": list(lam), "mu": list(mu), "nu": list(nu), "multiplicity": c})
    return 0


def _cmd_tensor(args, cache):
    n = _su_n(args.type)
    lam, mu = _parse_weight(args.lam), _parse_weight(args.mu)
    key = f"{args.type}|tensor|{_weight_key(lam)}|{_weight_key(mu)}"

    def compute():
        dec = tensor_decompose(n, lam, mu, workers=args.threads, budget=args.budget)
        return [[list(nu), str(c)] for nu, c in dec.items()]

    entries = _cached(args, cache, key, compute)
    for nu, c in entries:
        print(_jdump({"nu": nu, "mult": c}))
    return 0


def _cmd_kostka(args, cache):
    n = _su_n(args.type)
    lam, delta = _parse_weight(args.lam), _parse_weight(args.delta)
    key = f"{args.type}|kostka|{_weight_key(lam)}|{_weight_key(delta)}"
    value = _cached(args, cache, key, lambda: str(kostka(n, lam, delta, budget=args.budget)))
    _emit(args, value, {"type": args.type, "lambda": list(lam), "delta": list(delta), "kostka": value})
    return 0


def _stretch_payload(args, cache):
    n = _su_n(args.type)
    lam, mu, nu = (_parse_weight(x) for x in (args.lam, args.mu, args.nu))
    guard = not getattr(args, "no_guard", False)
    key = f"{args.type}|stretch|{_weight_key(lam)}|{_weight_key(mu)}|{_weight_key(nu)}|guard={int(guard)}"

    def compute():
        poly = stretch_polynomial(n, lam, mu, nu, workers=args.threads, budget=args.budget, check_guard=guard)
        return {"coeffs": [str(c) for c in poly.coeffs], "text": str(poly)}

    return n, lam, mu, nu, _cached(args, cache, key, compute)


def _cmd_stretch(args, cache):
    from .stretch import StretchPolynomial

    n, lam, mu, nu, payload = _stretch_payload(args, cache)
    extra = {}
    if args.at is not None:
        poly = StretchPolynomial(
            tuple(Fraction(c) for c in payload["coeffs"]), (n - 1) * (n - 2) // 2, n, lam, mu, nu
        )
        extra["value_at"] = {"s": args.at, "value": str(evaluate(poly, args.at))}
    human = payload["text"]
    if extra:
        human += f"\ns={args.at}: {extra['value_at']['value']}"
    _emit(args, human, {**payload, **extra})
    return 0


def _cmd_volume(args, cache):
    n = _su_n(args.type)
    lam, mu, nu = (_parse_weight(x) for x in (args.lam, args.mu, args.nu))
    key = f"{args.type}|volume|{_weight_key(lam)}|{_weight_key(mu)}|{_weight_key(nu)}"

    def compute():
        v = horn_volume(n, lam, mu, nu, workers=args.threads, budget=args.budget)
        return {"value": str(v.value), "generic": v.generic}

    payload = _cached(args, cache, key, compute)
    _emit(args, payload["value"], payload)
    return 0


def _cmd_kappa(args, _cache):
    ks = kappa_sets(args.type)
    payload = {
        "type": str(ks.lie_type),
        "K": sorted([list(w) for w in ks.K]) if ks.K is not None else None,
        "K_hat": sorted([list(w) for w in ks.K_hat]) if ks.K_hat is not None else None,
        "rho_ring": list(ks.rho_ring),
        "rho_hat_ring": list(ks.rho_hat_ring),
        "equal": ks.equal,
    }
    human = [
        f"rho_ring = {ks.rho_ring}   rho_hat_ring = {ks.rho_hat_ring}   R == R-hat: {ks.equal}",
        f"K     = {payload['K']}",
        f"K-hat = {payload['K_hat']}",
    ]
    _emit(args, "\n".join(human), payload)
    return 0


def _cmd_rpoly(args, _cache):
    combo = r_coefficients(args.type, which="Rhat" if args.hat else "R", workers=args.threads, budget=args.budget)
    coeffs = {_weight_key(k): str(v) for k, v in sorted(combo.coeffs.items())}
    human = "\n".join(f"r[{{{k}}}] = {v}" for k, v in coeffs.items())
    if combo.note:
        human += f"\nnote: {combo.note}"
    _emit(args, human, {"type": str(combo.lie_type), "coeffs": coeffs, "note": combo.note})
    return 0


def _cmd_verify_r7(args, _cache):
    rep = verify_r7()
    payload = {
        "support_matches_kappa_set": rep.support_matches_kappa_set,
        "conjugate_pairs_share_coefficients": rep.conjugate_pairs_share_coefficients,
        "quoted_dimensions_match": rep.quoted_dimensions_match,
        "normalization": str(rep.normalization),
        "coefficients_nonnegative": rep.coefficients_nonnegative,
        "ok": rep.ok,
    }
    human = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, human, payload)
    return 0 if rep.ok else 1


def _cmd_series_check(args, _cache):
    u = tuple(float(x) for x in args.angles.split(","))
    s = series_R(args.n, u, args.radius)
    o = character_form_value(args.n, u)
    payload = {
        "n": args.n,
        "angles": list(u),
        "radius": args.radius,
        "series": f"{s:.12g}",
        "character_form": f"{o:.12g}",
        "abs_error": f"{abs(s - o):.6g}",
    }
    _emit(args, f"series = {payload['series']}\ncharacter form = {payload['character_form']}\n|error| = {payload['abs_error']}", payload)
    return 0


def _cmd_render(args, _cache):
    n = _su_n(args.type)
    lam, mu, nu = (_parse_weight(x) for x in (args.lam, args.mu, args.nu))
    spec = RenderSpec(kind=args.kind, scale=Fraction(args.scale), highlight_zero_edges=args.mark_zeros)
    triple = BranchingTriple(n, lam, mu, nu)
    for i, filling in enumerate(enumerate_fillings(triple)):
        if i == args.index:
            doc = render(filling, spec)
            name = f"{args.kind}_{args.type}_{_weight_key(lam)}_{_weight_key(mu)}_{_weight_key(nu)}_{args.index}.svg".replace(",", "-")
            path = os.path.join(args.out, name)
            os.makedirs(args.out, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(doc)
            _emit(args, path, {"written": path})
            return 0
    raise DomainError(f"filling index {args.index} out of range")


def _cmd_cache(args, cache):
    payload = cache.stats() if args.action == "stats" else cache.gc()
    _emit(args, _jdump(payload), payload)
    return 0


_COMMANDS = {
    "lr": _cmd_lr,
    "tensor": _cmd_tensor,
    "kostka": _cmd_kostka,
    "stretch": _cmd_stretch,
    "volume": _cmd_volume,
    "kappa": _cmd_kappa,
    "rpoly": _cmd_rpoly,
    "verify-r7": _cmd_verify_r7,
    "series-check": _cmd_series_check,
    "render": _cmd_render,
    "cache": _cmd_cache,
}


_GLOBAL_DEFAULTS = {
    "json": False,
    "threads": os.cpu_count() or 1,
    "budget": 10**8,
    "cache_dir": cache_mod.DEFAULT_DIR,
    "no_cache": False,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_EXIT
    for key, value in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    cache = cache_mod.Cache(args.cache_dir, enabled=not args.no_cache)
    try:
        return _COMMANDS[args.command](args, cache)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
