"""Command line interface.

Every command prints JSON lines carrying ``"schema": "blocklie.report/1"``.
Exit status: 0 on success, 1 when a checked property fails (the report holds
a counterexample), 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import catalog
from .algebra import bracket, derived_decomposition, derived_membership, one, split_bracket
from .exactfield import ScalarSyntaxError, format_scalar
from .isomorphism import (
    ChiUnsolvable,
    GammaNotMapped,
    InvalidParams,
    SpecMismatch,
    Theta,
    hom_verify,
    image_spec,
    iso_verify,
    omega_violations,
    params_from_dict,
    random_params,
)
from .lattice import ConfigError, DeltaZero, GammaSpec, InvalidSpecError, _violations, parse_config, spec_from_dict
from .notation import ArityError, ExpressionSyntaxError, JViolation, format_element, parse_element
from .realizations import READINGS, RealizationMap, crosscheck
from .sampling import Sampler
from .simplicity import NotInDerived, ReplayError, ZeroInput, reduce_to_one, replay, saturate_from_one
from .simplicity import trace_from_json, trace_to_json

SCHEMA = "blocklie.report/1"


class UsageError(Exception):
    pass


def emit(out, command, **fields):
    rec = {"schema": SCHEMA, "command": command}
    rec.update(fields)
    out.write(json.dumps(rec, sort_keys=True) + "\n")


def _read_json(source):
    if source.lstrip().startswith("{"):
        return json.loads(source)
    with open(source) as fh:
        return json.load(fh)


def load_config(source):
    """Raw config dict from a catalog name, a JSON file or inline JSON."""
    if source in catalog.CONFIGS:
        return catalog.get(source).to_json()
    if not source.lstrip().startswith("{") and not os.path.exists(source):
        raise UsageError(f"no such spec file or configuration: {source!r}")
    try:
        return _read_json(source)
    except json.JSONDecodeError as e:
        raise UsageError(f"bad JSON in {source!r}: {e}") from None


def load(source):
    return spec_from_dict(load_config(source))


def _element(spec, text):
    return parse_element(spec, text)


def _fmt_pair(u, v):
    return {"u": format_element(u), "v": format_element(v)}


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, out):
    gens, delta3, m, names = parse_config(load_config(args.spec))
    if delta3 == 0:
        raise DeltaZero("delta3 must be nonzero")
    gamma = GammaSpec(gens, None, names)
    bad = _violations(gamma, delta3, m)
    omega = omega_violations(m, delta3, gamma)
    checks = {
        "sigma_in_gamma": "sigma_not_in_gamma" not in bad,
        "delta_in_gamma": "delta_not_in_gamma" not in bad,
        "ker_pi4_not_inside_ker_pi2": "ker_pi4_inside_ker_pi2" not in bad,
        "J2_allowed": "J2_must_be_N" not in bad,
        "J4_allowed": "J4_must_be_N" not in bad,
    }
    ok = not bad and not omega
    emit(out, "validate", ok=ok, rank=gamma.rank, checks=checks, violations=bad, omega_violations=omega,
         pi_nonzero=[gamma.projection_nonzero(p) for p in range(1, 5)])
    return 0 if ok else 1


def cmd_bracket(args, out):
    spec = load(args.spec)
    u, v = _element(spec, args.u), _element(spec, args.v)
    a = bracket(spec, u, v, "expanded")
    b = bracket(spec, u, v, "definition")
    emit(out, "bracket", result=format_element(a), paths_agree=(a == b),
         definition=None if a == b else format_element(b))
    return 0 if a == b else 1


def cmd_derived(args, out):
    spec = load(args.spec)
    u = _element(spec, args.u)
    dec = derived_decomposition(spec, u)
    fields = {"member": dec is not None}
    if dec is not None:
        free, combos = dec
        fields["free"] = format_element(free)
        fields["spanning"] = [
            {"gamma": list(g), "i": list(i), "coefficient": format_scalar(c)} for (g, i), c in sorted(combos.items())
        ]
    emit(out, "derived", **fields)
    return 0


def cmd_reduce(args, out):
    spec = load(args.spec)
    u = _element(spec, args.u)
    tr = reduce_to_one(spec, u)
    doc = trace_to_json(tr)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
    else:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    try:
        replay(trace_from_json(json.loads(json.dumps(doc)), spec))
        status = "ok"
    except ReplayError as e:
        status = str(e)
    emit(out, "reduce", result=format_scalar(tr.result), steps=len(tr.steps), route=tr.route, replay=status)
    return 0 if status == "ok" else 1


def cmd_saturate(args, out):
    spec = load(args.spec)
    target = _element(spec, args.u)
    tr = saturate_from_one(spec, target)
    doc = trace_to_json(tr)
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    try:
        replay(trace_from_json(doc, spec))
        status = "ok"
    except ReplayError as e:
        status = str(e)
    emit(out, "saturate", target=format_element(target), steps=len(tr.steps), replay=status)
    return 0 if status == "ok" else 1


def cmd_replay(args, out):
    doc = _read_json(args.trace)
    tr = trace_from_json(doc)
    try:
        last = replay(tr)
    except ReplayError as e:
        emit(out, "replay", ok=False, error=str(e))
        return 1
    emit(out, "replay", ok=True, steps=len(tr.steps), final=format_element(last))
    return 0


def cmd_iso_check(args, out):
    a, b = load(args.speca), load(args.specb)
    params, chi = params_from_dict(_read_json(args.params), a.indeterminates)
    ok, diag = iso_verify(a, b, params)
    fields = {"iso_verify": ok, "diagnostics": diag}
    if not ok:
        emit(out, "iso-check", ok=False, **fields)
        return 1
    th = Theta(a, b, params, chi)
    rep = hom_verify(a, b, params, th.chi, samples=args.samples, seed=args.seed)
    fields["chi"] = th.chi.to_json()
    fields["theta_one"] = format_element(th(one(a)))
    fields["samples"] = rep["checked"]
    if not rep["ok"]:
        fields["counterexample"] = dict(_fmt_pair(rep["u"], rep["v"]), part=rep["part"],
                                        lhs=format_element(rep["lhs"]), rhs=format_element(rep["rhs"]))
    emit(out, "iso-check", ok=rep["ok"], **fields)
    return 0 if rep["ok"] else 1


def cmd_realize_check(args, out):
    readings = [args.reading] if args.reading else (list(READINGS) if args.case == 4 else ["printed"])
    passed = []
    for r in readings:
        rep = crosscheck(RealizationMap(args.case, args.m, r), args.samples, args.seed)
        fields = {k: rep[k] for k in ("case", "m", "reading", "ok", "checked")}
        if not rep["ok"]:
            fields["counterexample"] = dict(_fmt_pair(rep["u"], rep["v"]), abstract=str(rep["abstract"]),
                                            concrete=str(rep["concrete"]))
        if rep["ok"]:
            passed.append(r)
        emit(out, "realize-check", **fields)
    if len(readings) > 1:
        emit(out, "realize-check", case=args.case, m=args.m, selected=passed[0] if len(passed) == 1 else None)
        return 0 if len(passed) == 1 else 1
    return 0 if passed else 1


def _jacobi(spec, smp, rng):
    u, v, w = smp.element(), smp.element(), smp.element()
    j = bracket(spec, u, bracket(spec, v, w)) + bracket(spec, v, bracket(spec, w, u)) + bracket(spec, w, bracket(spec, u, v))
    if j:
        return dict(_fmt_pair(u, v), w=format_element(w), jacobiator=format_element(j))
    if bracket(spec, u, v) != -bracket(spec, v, u):
        return dict(_fmt_pair(u, v), failure="anticommutativity")
    return None


def _closure(spec, smp, rng):
    u, v = smp.derived_element(), smp.derived_element()
    if not derived_membership(spec, bracket(spec, u, v)):
        return _fmt_pair(u, v)
    return None


def _paths(spec, smp, rng):
    u, v = smp.element(), smp.element()
    a = bracket(spec, u, v, "expanded")
    if a != bracket(spec, u, v, "definition"):
        return dict(_fmt_pair(u, v), failure="paths")
    if a != split_bracket(spec, 1, u, v) + split_bracket(spec, 2, u, v):
        return dict(_fmt_pair(u, v), failure="split")
    return None


def _hom(spec, smp, rng):
    p = random_params(spec.m, rng)
    try:
        dst = image_spec(spec, p)
        rep = hom_verify(spec, dst, p, samples=1, seed=rng.randrange(1 << 30))
    except ChiUnsolvable:
        return None
    if not rep["ok"]:
        return dict(_fmt_pair(rep["u"], rep["v"]), params=p.to_json(), part=rep["part"])
    return None


SUITES = {"jacobi": _jacobi, "closure": _closure, "paths": _paths, "hom": _hom}


def cmd_fuzz(args, out):
    spec = load(args.spec)
    rng = random.Random(args.seed)
    smp = Sampler(spec, rng=rng)
    check = SUITES[args.suite]
    for k in range(args.samples):
        bad = check(spec, smp, rng)
        if bad:
            emit(out, "fuzz", suite=args.suite, ok=False, trial=k, seed=args.seed, counterexample=bad)
            return 1
    emit(out, "fuzz", suite=args.suite, ok=True, samples=args.samples, seed=args.seed)
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="blocklie", description="Exact computations in B(Gamma, J, delta).")
    p.add_argument("--spec", default="c1",
                   help="config JSON file, inline JSON or catalog name (default c1: Z^4, delta3=1, J={0})")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--spec", default=argparse.SUPPRESS)

    sub.add_parser("validate", parents=[common], help="check the validity conditions of an algebra configuration")
    s = sub.add_parser("bracket", parents=[common], help="bracket two elements along both code paths")
    s.add_argument("u")
    s.add_argument("v")
    s = sub.add_parser("derived", parents=[common], help="membership in the derived algebra")
    s.add_argument("u")
    s = sub.add_parser("reduce", parents=[common], help="emit and replay a reduction certificate")
    s.add_argument("u")
    s.add_argument("--out", help="write the trace JSON here instead of stdout")
    s = sub.add_parser("saturate", parents=[common], help="certificate building an element from 1")
    s.add_argument("u")
    s = sub.add_parser("replay", parents=[common], help="replay a trace JSON file")
    s.add_argument("trace")
    s = sub.add_parser("iso-check", parents=[common], help="verify the isomorphism given by parameters")
    s.add_argument("speca")
    s.add_argument("specb")
    s.add_argument("params", help="iso config JSON file or inline JSON")
    s.add_argument("--samples", type=int, default=200)
    s = sub.add_parser("realize-check", parents=[common], help="compare a concrete model with the abstract bracket")
    s.add_argument("--case", type=int, choices=(1, 2, 3, 4), required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--reading", choices=READINGS)
    s = sub.add_parser("fuzz", parents=[common], help="random property checks")
    s.add_argument("--suite", choices=sorted(SUITES), required=True)
    s.add_argument("--samples", type=int, default=200)
    return p


COMMANDS = {
    "validate": cmd_validate,
    "bracket": cmd_bracket,
    "derived": cmd_derived,
    "reduce": cmd_reduce,
    "saturate": cmd_saturate,
    "replay": cmd_replay,
    "iso-check": cmd_iso_check,
    "realize-check": cmd_realize_check,
    "fuzz": cmd_fuzz,
}

USAGE_ERRORS = (
    UsageError,
    ConfigError,
    DeltaZero,
    InvalidSpecError,
    ExpressionSyntaxError,
    ScalarSyntaxError,
    JViolation,
    ArityError,
    ZeroInput,
    NotInDerived,
    InvalidParams,
    SpecMismatch,
    GammaNotMapped,
    ChiUnsolvable,
    OSError,
    json.JSONDecodeError,
    KeyError,
)


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except USAGE_ERRORS as e:
        msg = str(e) if not isinstance(e, InvalidSpecError) else "invalid spec: " + ", ".join(e.violations)
        emit(sys.stderr, args.command, ok=False, error=type(e).__name__, message=msg)
        return 2


if __name__ == "__main__":
    sys.exit(main())
