"""Command-line front end reproducing the packet tables and the Hecke checks.

Exit codes: 0 success or golden match, 1 golden mismatch, 2 usage error,
3 size-guard violation.
"""

from __future__ import annotations

import argparse
import difflib
import json
import os
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

import jsonschema

from . import affweyl, drpackets, dualcent, hecke, lfactors, weilparams
from .drpackets import ConstraintViolation
from .weilparams import FieldContext, SimilitudeCharacter, TameCharacter, TooLarge, is_prime_power

SCHEMA_VERSION = 1
TESTDATA_ENV = "DZPACKETS_TESTDATA"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(ValueError):
    """Invalid combination of command-line values."""


@dataclass(frozen=True)
class RunConfig:
    q: int = 3
    K: int = dualcent.AMBIENT_DEGREE
    N: int = 8
    tau: tuple[int, ...] | None = None
    emit: str = "md"
    seed: int = 0
    check_golden: bool = True
    extras: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not is_prime_power(self.q):
            raise UsageError(f"q = {self.q} is not a prime power")
        if self.N < 2 or self.N % 2:
            raise UsageError(f"N = {self.N} must be even")
        if self.K != dualcent.AMBIENT_DEGREE:
            raise UsageError(f"K = {self.K}: the dual-side cases live in F_(q^{dualcent.AMBIENT_DEGREE})")


def golden_dir() -> Path:
    override = os.environ.get(TESTDATA_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("dzpackets") / "data" / "golden"))


def load_schema() -> dict:
    text = (resources.files("dzpackets") / "data" / "output.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate(doc: dict) -> None:
    jsonschema.validate(doc, load_schema())


def _envelope(command: str, config: RunConfig, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "config": {"q": config.q, "K": config.K, "N": config.N, "seed": config.seed,
                       "tau": list(config.tau) if config.tau else None},
            "result": payload}


# ---------------------------------------------------------------------------
# payload builders
# ---------------------------------------------------------------------------


def packets_payload(shape: str) -> dict:
    return drpackets.table_records(shape)


def packets_markdown(payload: dict) -> str:
    return drpackets.render_markdown(payload)


BASE_FOR_CASE = {"plus": "+", "minus": "-", "dagger": "dagger", "ddagger": "ddagger"}


def generators_payload(case: str, m: int) -> dict:
    base = affweyl.affine_base(BASE_FOR_CASE[case], m)
    labels = base.datum.Xv.basis_labels
    rows = []
    for g in affweyl.s_theta(base):
        rows.append({"name": g.name, "element": g.element.describe(labels),
                     "preserves_theta": g.preserves_theta, "involution": g.involution})
    out = {"base": base.name, "theta": list(base.theta), "generators": rows}
    if case in ("plus", "minus"):
        nu = affweyl.nu_element(base)
        perm = affweyl.permutation_of(nu, base)
        sq = nu * nu
        out["nu"] = {"element": nu.describe(labels), "square": sq.describe(labels),
                     "permutation": {k: v for k, v in perm.items() if k != v}}
    return out


def generators_markdown(payload: dict) -> str:
    lines = [f"S_Θ for base {payload['base']}, Θ = {{{', '.join(payload['theta'])}}}", "",
             "| generator | element | preserves Θ | involution |", "|---|---|---|---|"]
    for g in payload["generators"]:
        lines.append(f"| {g['name']} | {g['element']} | {_yes(g['preserves_theta'])} | {_yes(g['involution'])} |")
    if "nu" in payload:
        nu = payload["nu"]
        swaps = ", ".join(f"{a} → {b}" for a, b in nu["permutation"].items())
        lines += ["", f"ν = {nu['element']}", f"ν² = {nu['square']}", f"ν permutes: {swaps}"]
    return "\n".join(lines) + "\n"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _witness(config: RunConfig) -> dualcent.Witness | None:
    return dualcent.Witness(config.q, config.tau) if config.tau else None


def centralizer_row(case: dualcent.DualCase, config: RunConfig) -> dict:
    cd = dualcent.centralizer_for(case, config.q, _witness(config))
    n = case.layout.n
    return {"vertex": case.name, "m": case.m, "case": case.subcase,
            "generators": [dualcent.format_dual_root(b, n) for b in cd.simple],
            "roots_I": sorted(dualcent.format_dual_root(b, n) for b in cd.roots_I),
            "type": cd.cartan_type, "orbits": dualcent.frob_orbit_count(cd),
            "parameter": dualcent.hecke_parameter(cd, config.q),
            "point": list(cd.point.coordinates)}


def centralizers_payload(config: RunConfig) -> dict:
    return {"q": config.q, "rows": [centralizer_row(c, config) for c in dualcent.all_cases()]}


def centralizers_markdown(payload: dict) -> str:
    lines = [f"Centralizer root systems at q = {payload['q']}", "",
             "| i | m | case | I generated by | type | orbits | p_i |", "|---|---|---|---|---|---|---|"]
    for r in payload["rows"]:
        case = str(r["case"]) if r["case"] else ""
        lines.append(f"| {r['vertex']} | {r['m']} | {case} | ⟨{', '.join(r['generators'])}⟩ | "
                     f"{r['type']} | {r['orbits']} | {r['parameter']} |")
    return "\n".join(lines) + "\n"


def hecke_payload(case: str, m: int | None, subcase: int | None, config: RunConfig) -> dict:
    report = hecke.reducibility_report(case, config.q, m, subcase, _witness(config)).to_json()
    q1, q2 = sorted(report["parameters"])
    alg = hecke.HeckeA1Tilde(q1, q2)
    special = [hecke.is_reducible(hecke.principal_series(alg, p)) for p in hecke.special_points(q1, q2)]
    sweep = [hecke.common_eigenvector_residual(hecke.principal_series(alg, z))
             for z in hecke.sample_irreducible_points(q1, q2, 50, config.seed)]
    report["reducible_at_special_points"] = all(special)
    report["sweep_min_residual"] = f"{min(sweep):.3e}"
    return report


def hecke_markdown(payload: dict) -> str:
    a, b = payload["vertices"]
    pa, pb = payload["parameters"]
    m1, m2 = payload["plancherel_masses"]
    ints = [_interval_text(i) for i in payload["complementary_series"]]
    lines = [
        f"Case pair ({a}, {b}), m = {payload['m']}, q = {payload['q']}",
        "",
        "| vertex | type | orbits | p |",
        "|---|---|---|---|",
        f"| {a} | {payload['types'][0]} | {payload['orbit_counts'][0]} | {pa} |",
        f"| {b} | {payload['types'][1]} | {payload['orbit_counts'][1]} | {pb} |",
        "",
        f"complementary series: {ints[0]} and {ints[1]}",
        f"Plancherel masses: {m1}, {m2}",
        f"two complementary series: {_yes(payload['two_complementary_series'])}",
        f"reducible at special points: {_yes(payload['reducible_at_special_points'])}",
        f"conclusion: {payload['conclusion']}",
    ]
    return "\n".join(lines) + "\n"


def _surd_text(v) -> str:
    if isinstance(v, list):
        c, r = v
        return c if r == 1 else f"{c}√{r}"
    return f"{v['rational']} + {v['surd'][0]}√{v['surd'][1]}"


def _interval_text(i: dict) -> str:
    lo, hi = _surd_text(i["lo"]), _surd_text(i["hi"])
    text = f"{'[' if i['lo_closed'] else '('}{lo}, {hi}{']' if i['hi_closed'] else ')'}"
    return text + (" (empty)" if i["empty"] else "")


def _similitude(args, config: RunConfig) -> SimilitudeCharacter:
    return SimilitudeCharacter(config.q, args.lam_inertia, args.lam_frob, config.N)


def _param_text(p: weilparams.InducedParameter) -> str:
    return " ⊕ ".join(f"V(η[d={c.degree}, a={c.inertia_exp}, f={c.frob_exp}])" for c in p.components)


def enumerate_payload(args, config: RunConfig) -> dict:
    lam = _similitude(args, config)
    params = weilparams.enumerate_trd(config.q, args.n, lam)
    classes = []
    for p in params:
        degrees = [c.degree for c in p.components]
        if args.degree and any(d != args.degree for d in degrees):
            continue
        classes.append({"parameter": _param_text(p),
                        "components": [[c.degree, c.inertia_exp, c.frob_exp] for c in p.components]})
    return {"n": args.n, "lambda": list(lam.as_tuple()), "count": len(classes), "classes": classes}


def enumerate_markdown(payload: dict) -> str:
    lines = [f"TRD parameters of dimension {2 * payload['n']}: {payload['count']} classes", ""]
    lines += [f"- {c['parameter']}" for c in payload["classes"]]
    return "\n".join(lines) + "\n"


def parse_eta(text: str, lam: SimilitudeCharacter, default_degree: int) -> TameCharacter:
    """``a[,f][,d]``; ``f`` may be ``z`` for the symplectic Frobenius value."""
    parts = [p.strip() for p in text.split(",")]
    if not 1 <= len(parts) <= 3 or not parts[0]:
        raise UsageError(f"bad character spec {text!r}; expected a[,f][,d]")
    d = int(parts[2]) if len(parts) == 3 else default_degree
    ctx = FieldContext(lam.q, d, lam.N)
    if len(parts) == 1 or parts[1] in ("z", ""):
        frob = d * lam.frob_exp + lam.N // 2
    else:
        frob = int(parts[1])
    return TameCharacter(ctx, int(parts[0]), frob)


def lfactor_payload(args, config: RunConfig) -> dict:
    lam = _similitude(args, config)
    etas = [parse_eta(t, lam, args.d) for t in (args.eta1, args.eta2) if t]
    if not etas:
        raise UsageError("at least --eta1 is required")
    for eta in etas:
        if config.q ** (2 * eta.degree) > weilparams.TRD_GUARD:
            raise TooLarge(f"q^(2d) exceeds the guard {weilparams.TRD_GUARD}")
    p1 = weilparams.single(etas[0], lam)
    p2 = weilparams.single(etas[-1], lam)
    rep = lfactors.tensor(lfactors.dual_rep(lfactors.parameter_rep(p1)), lfactors.parameter_rep(p2))
    L = lfactors.l_factor(rep)
    out = {"pair": [_param_text(p1), _param_text(p2)], "l_factor": str(L),
           "pole_order": lfactors.pole_order_at_zero(L), "hom_dim": weilparams.hom_dim(p1, p2)}
    if args.sym2:
        for eta in etas:
            if not weilparams.is_symplectic(eta, lam):
                raise UsageError("the symmetric-square check needs symplectic input")
        s2 = lfactors.tensor(lfactors.sym2(lfactors.parameter_rep(p1)),
                             lfactors.dual_rep(lfactors.character_rep(lam, 1)))
        L2 = lfactors.l_factor(s2)
        out["sym2"] = {"l_factor": str(L2), "pole_order": lfactors.pole_order_at_zero(L2),
                       "invariants": lfactors.pole_order_at_zero(L2)}
    if args.packets_agree:
        report = lfactors.packets_agree_check(p1)
        out["packets_agree"] = {"family_size": report.family_size, "unique": report.unique,
                                "passing": [_param_text(p) for p in report.passing]}
    return out


def lfactor_markdown(payload: dict) -> str:
    lines = [f"L(s, ({payload['pair'][0]})^∨ ⊗ {payload['pair'][1]}) = {payload['l_factor']}",
             f"pole order at s = 0: {payload['pole_order']}", f"dim Hom: {payload['hom_dim']}"]
    if "sym2" in payload:
        s = payload["sym2"]
        lines.append(f"L(s, Sym² ⊗ λ⁻¹) = {s['l_factor']}; invariants: {s['invariants']}")
    if "packets_agree" in payload:
        pa = payload["packets_agree"]
        lines.append(f"packets agree: {_yes(pa['unique'])} ({len(pa['passing'])} of {pa['family_size']} pass)")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# emission and golden comparison
# ---------------------------------------------------------------------------


def render(command: str, config: RunConfig, payload: dict, markdown: Callable[[dict], str]) -> str:
    if config.emit == "json":
        doc = _envelope(command, config, payload)
        validate(doc)
        return json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    return markdown(payload)


def compare_golden(name: str, text: str, out=None) -> int:
    out = out or sys.stderr
    path = golden_dir() / name
    if not path.exists():
        return EXIT_OK
    expected = path.read_text(encoding="utf-8")
    if expected == text:
        return EXIT_OK
    diff = difflib.unified_diff(expected.splitlines(True), text.splitlines(True),
                                fromfile=str(path), tofile="computed")
    out.writelines(diff)
    return EXIT_MISMATCH


def _golden_name(stem: str, config: RunConfig) -> str:
    return f"{stem}.{'json' if config.emit == 'json' else 'md'}"


def _emit(text: str, stem: str, config: RunConfig, out) -> int:
    out.write(text)
    if not config.check_golden:
        return EXIT_OK
    return compare_golden(_golden_name(stem, config), text)


def cmd_packets(args, config: RunConfig, out) -> int:
    payload = packets_payload(args.shape)
    text = render("packets", config, payload, packets_markdown)
    return _emit(text, f"packets_{args.shape}", config, out)


def cmd_generators(args, config: RunConfig, out) -> int:
    m = args.m or 1
    payload = generators_payload(args.case, m)
    text = render("generators", config, payload, generators_markdown)
    suffix = f"_m{m}" if args.case == "plus" else ""
    return _emit(text, f"generators_{args.case}{suffix}", config, out)


def cmd_centralizers(args, config: RunConfig, out) -> int:
    payload = centralizers_payload(config)
    text = render("centralizers", config, payload, centralizers_markdown)
    stem = f"centralizers_q{config.q}" if not config.tau else "centralizers_custom"
    return _emit(text, stem, config, out)


def cmd_hecke(args, config: RunConfig, out) -> int:
    payload = hecke_payload(args.case, args.m, args.subcase, config)
    text = render("hecke", config, payload, hecke_markdown)
    stem = f"hecke_{args.case}_m{payload['m']}_c{payload['case']}_q{config.q}"
    if config.tau or config.seed:
        stem += "_custom"
    return _emit(text, stem, config, out)


def cmd_enumerate(args, config: RunConfig, out) -> int:
    payload = enumerate_payload(args, config)
    text = render("enumerate", config, payload, enumerate_markdown)
    return _emit(text, f"enumerate_q{config.q}_n{args.n}_N{config.N}", config, out)


def cmd_lfactor(args, config: RunConfig, out) -> int:
    payload = lfactor_payload(args, config)
    out.write(render("lfactor", config, payload, lfactor_markdown))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _tau(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=3, help="residue field size (prime power)")
    common.add_argument("--K", type=int, default=dualcent.AMBIENT_DEGREE, help="ambient field degree")
    common.add_argument("--N", type=int, default=8, help="value modulus for ζ_N (even)")
    common.add_argument("--tau", type=_tau, help="exponents of τ (or τ1,τ2) in F_(q^4)^×")
    common.add_argument("--emit", choices=("md", "json"), default="md")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")
    common.add_argument("--no-golden", action="store_true", help="skip the golden-file comparison")

    parser = argparse.ArgumentParser(prog="dzpackets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("packets", parents=[common], help="the three depth-zero packet tables")
    p.add_argument("--shape", choices=[s.value for s in drpackets.Shape], required=True)
    p.set_defaults(func=cmd_packets)

    p = sub.add_parser("generators", parents=[common], help="generator sets S_Θ")
    p.add_argument("--case", choices=sorted(BASE_FOR_CASE), required=True)
    p.add_argument("--m", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("centralizers", parents=[common], help="all twelve centralizer rows")
    p.set_defaults(func=cmd_centralizers)

    p = sub.add_parser("hecke", parents=[common], help="Hecke parameters and reducibility data")
    p.add_argument("--case", choices=sorted(BASE_FOR_CASE), required=True)
    p.add_argument("--m", type=int, choices=(1, 2))
    p.add_argument("--subcase", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_hecke)

    for name, func, helptext in (("enumerate", cmd_enumerate, "TRD parameters up to isomorphism"),
                                 ("lfactor", cmd_lfactor, "L-factors and pole orders")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--lam-inertia", type=int, default=0, help="similitude inertia exponent mod q-1")
        p.add_argument("--lam-frob", type=int, default=0, help="similitude Frobenius exponent mod N")
        p.set_defaults(func=func)
        if name == "enumerate":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--degree", type=int, help="keep only parameters with all components of this degree")
        else:
            p.add_argument("--d", type=int, default=1, help="default component degree")
            p.add_argument("--eta1", required=True, help="a[,f][,d]; f = z picks the symplectic value")
            p.add_argument("--eta2")
            p.add_argument("--sym2", action="store_true")
            p.add_argument("--packets-agree", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = RunConfig(args.q, args.K, args.N, args.tau, args.emit, args.seed, not args.no_golden)
        if getattr(args, "subcase", None) and args.case != "ddagger":
            raise UsageError("--subcase applies to the ddagger case only")
        return args.func(args, config, out)
    except (UsageError, ConstraintViolation, weilparams.NotIrreducible, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD

