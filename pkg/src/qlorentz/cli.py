"""Command-line front end: seeded experiments with JSON/CSV reports.

Five subcommands exercise the library end to end:

  invariants  scalar invariants of one state plus random-action invariance
  oracle      subset-sum vs trace-formula agreement on random states
  metric      Pauli correlation table and determinant/symmetry checks
  twirl       Haar-twirl Monte Carlo against the chi*I - zeta*F closed form
  boost       conjugate a state by per-qubit boosts, report entropy/trace

Reports embed the full effective configuration and are byte-identical for
identical configs and seeds, except for the wall_time_s field. Exit code 0
means every check passed, 1 means a property check failed, 2 means the
inputs were unusable.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from functools import partial
from pathlib import Path

import numpy as np

from .correlation import (
    correlator_symmetry_check,
    haar_twirl_mc,
    pauli_correlation_table,
    polarized_determinant,
    singlet_correlation,
)
from .invariants import (
    concurrence,
    invariant_report,
    linear_entropy,
    linear_mutual_info_subsets,
    linear_mutual_info_trace,
    spectral_invariants,
)
from .lorentz import (
    ETA,
    MinkowskiVector,
    boost_z,
    herm_from_vector,
    rotation_z,
    sample_sl2c,
    spin_hom,
)
from .linalg import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z
from .seeding import SEED_SPLIT_NAME, rng_from_seed, split_seed
from .states import (
    QubitState,
    apply_local,
    preset,
    random_state,
    state_from_json_dict,
    state_to_json_dict,
)

# fixed sub-seed streams so each randomness consumer is independent
STREAM_STATE = 0
STREAM_ACTION = 1
STREAM_SCALE = 2
STREAM_OBSERVABLE = 3
STREAM_SYMMETRY = 4

_PAULI_BY_NAME = {"I": PAULI_I, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}


def _rel_dev(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _check(deviation: float, tolerance: float, override: float | None = None) -> dict:
    if override is not None:
        tolerance = override
    return {
        "deviation": float(deviation),
        "tolerance": float(tolerance),
        "pass": bool(deviation <= tolerance),
    }


def _load_state(args, master_seed: int) -> tuple[QubitState, dict]:
    """Resolve the state source flags into a state and a config echo."""
    if getattr(args, "input", None):
        path = Path(args.input)
        payload = json.loads(path.read_text())
        return state_from_json_dict(payload), {"source": "input", "input_path": str(path)}
    if getattr(args, "random", None):
        n = args.n
        seed = split_seed(master_seed, STREAM_STATE)
        return random_state(n, args.random, seed), {
            "source": "random",
            "random_kind": args.random,
            "n": n,
        }
    name = getattr(args, "preset", None) or "singlet"
    return preset(name), {"source": "preset", "preset": name}


def _parse_observable(text: str, rng: np.random.Generator) -> np.ndarray:
    """Observable from a Pauli letter, 'random', or inline 't,x,y,z' coordinates."""
    token = text.strip()
    upper = token.upper()
    if upper in _PAULI_BY_NAME:
        return _PAULI_BY_NAME[upper].copy()
    if token.lower() == "random":
        return herm_from_vector(MinkowskiVector(*rng.standard_normal(4)))
    parts = token.split(",")
    if len(parts) == 4:
        try:
            coords = [float(p) for p in parts]
        except ValueError:
            raise ValueError(f"bad observable coordinates {text!r}") from None
        return herm_from_vector(MinkowskiVector(*coords))
    raise ValueError(
        f"observable {text!r} not understood; use I, X, Y, Z, random, or t,x,y,z"
    )


def _assemble(command: str, config: dict, trials: list, checks: dict, extra: dict,
              started: float) -> tuple[dict, bool]:
    ok = all(c["pass"] for c in checks.values())
    report = {
        "command": command,
        "config": dict(config, seed_split=SEED_SPLIT_NAME),
        "trials": trials,
        "checks": checks,
        "aggregate": {
            "max_deviation": max((c["deviation"] for c in checks.values()), default=0.0),
            "checks_passed": sum(1 for c in checks.values() if c["pass"]),
            "checks_total": len(checks),
        },
        "pass": ok,
        "wall_time_s": time.perf_counter() - started,
    }
    report.update(extra)
    return report, ok


def cmd_invariants(args) -> tuple[dict, bool]:
    started = time.perf_counter()
    check = partial(_check, override=args.tolerance)
    state, source_cfg = _load_state(args, args.seed)
    base = invariant_report(state)

    checks = {
        "subset_vs_trace": check(_rel_dev(base.i_l_subset, base.i_l_trace), 1e-8),
        "trace_nonnegative": check(max(0.0, -base.i_l_trace), 1e-9),
    }

    trials = []
    action_seed = split_seed(args.seed, STREAM_ACTION)
    worst = 0.0
    for i in range(args.trials):
        rng = rng_from_seed(split_seed(action_seed, i))
        factors = [sample_sl2c(rng, args.max_rapidity) for _ in range(state.n)]
        moved = apply_local(state, factors)
        dev = _rel_dev(linear_mutual_info_trace(moved), base.i_l_trace)
        for e_new, e_old in zip(spectral_invariants(moved), base.spectral_invariants):
            dev = max(dev, _rel_dev(e_new, e_old))
        if state.n == 2:
            dev = max(dev, _rel_dev(concurrence(moved), base.concurrence))
        worst = max(worst, dev)
        trials.append({"trial": i, "deviation": dev})
    if args.trials:
        checks["lorentz_invariance"] = check(worst, 1e-7)

    config = {
        "command": "invariants",
        "seed": args.seed,
        "tolerance": args.tolerance,
        "trials": args.trials,
        "max_rapidity": args.max_rapidity,
        **source_cfg,
    }
    extra = {"invariants": base.to_json_dict()}
    return _assemble("invariants", config, trials, checks, extra, started)


def cmd_oracle(args) -> tuple[dict, bool]:
    started = time.perf_counter()
    check = partial(_check, override=args.tolerance)
    if not 1 <= args.n <= 6:
        raise ValueError(f"oracle supports n in 1..6, got {args.n}")
    state_seed = split_seed(args.seed, STREAM_STATE)
    scale_seed = split_seed(args.seed, STREAM_SCALE)

    trials = []
    worst = 0.0
    for i in range(args.trials):
        kind = "pure" if i % 2 == 0 else "mixed"
        s = random_state(args.n, kind, split_seed(state_seed, i))
        scaled = i % 4 >= 2
        if scaled:
            c = float(rng_from_seed(split_seed(scale_seed, i)).uniform(0.2, 5.0))
            s = s.scaled(c)
        subset = linear_mutual_info_subsets(s)
        trace = linear_mutual_info_trace(s)
        dev = _rel_dev(subset, trace)
        worst = max(worst, dev)
        trials.append(
            {
                "trial": i,
                "kind": kind,
                "scaled": scaled,
                "i_l_subset": subset,
                "i_l_trace": trace,
                "deviation": dev,
            }
        )

    checks = {"trace_formula": check(worst, 1e-8)}
    config = {
        "command": "oracle",
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "tolerance": args.tolerance,
    }
    return _assemble("oracle", config, trials, checks, extra={}, started=started)


def cmd_metric(args) -> tuple[dict, bool]:
    started = time.perf_counter()
    check = partial(_check, override=args.tolerance)
    table = pauli_correlation_table()
    checks = {"pauli_table": check(float(np.abs(table - ETA).max()), 1e-12)}

    obs_rng = rng_from_seed(split_seed(args.seed, STREAM_OBSERVABLE))
    trials = []
    worst = 0.0
    for i in range(args.trials):
        o1 = herm_from_vector(MinkowskiVector(*obs_rng.standard_normal(4)))
        o2 = herm_from_vector(MinkowskiVector(*obs_rng.standard_normal(4)))
        corr = singlet_correlation(o1, o2)
        pol = polarized_determinant(o1, o2)
        dev = _rel_dev(corr, pol)
        worst = max(worst, dev)
        trials.append({"trial": i, "correlation": corr, "deviation": dev})
    checks["correlator_vs_determinant"] = check(worst, 1e-10)

    explicit = args.boost is not None or args.rotation is not None or args.parity
    sym_seed = split_seed(args.seed, STREAM_SYMMETRY)
    sym_rng = rng_from_seed(sym_seed)

    if args.boost is not None:
        lor = spin_hom(boost_z(args.boost))
        dev = correlator_symmetry_check(lor, args.sym_trials, split_seed(sym_seed, 0))
        checks["boost_symmetry"] = check(dev, 1e-8)
    elif not explicit:
        worst_boost = 0.0
        for i in range(args.sym_trials):
            lor = spin_hom(boost_z(float(sym_rng.uniform(-2.0, 2.0))))
            worst_boost = max(
                worst_boost,
                correlator_symmetry_check(lor, 5, split_seed(sym_seed, i)),
            )
        checks["boost_symmetry"] = check(worst_boost, 1e-8)

    if args.rotation is not None:
        lor = spin_hom(rotation_z(args.rotation))
        dev = correlator_symmetry_check(lor, args.sym_trials, split_seed(sym_seed, 10_000))
        checks["rotation_symmetry"] = check(dev, 1e-8)
    elif not explicit:
        worst_rot = 0.0
        for i in range(args.sym_trials):
            lor = spin_hom(rotation_z(float(sym_rng.uniform(0.0, 2.0 * np.pi))))
            worst_rot = max(
                worst_rot,
                correlator_symmetry_check(lor, 5, split_seed(sym_seed, 10_000 + i)),
            )
        checks["rotation_symmetry"] = check(worst_rot, 1e-8)

    if args.parity or not explicit:
        dev = correlator_symmetry_check("parity", args.sym_trials, split_seed(sym_seed, 20_000))
        checks["parity_symmetry"] = check(dev, 1e-8)

    config = {
        "command": "metric",
        "seed": args.seed,
        "tolerance": args.tolerance,
        "trials": args.trials,
        "sym_trials": args.sym_trials,
        "boost": args.boost,
        "rotation": args.rotation,
        "parity": args.parity,
    }
    extra = {"pauli_table": [[float(v) for v in row] for row in table]}
    return _assemble("metric", config, trials, checks, extra, started)


def cmd_twirl(args) -> tuple[dict, bool]:
    started = time.perf_counter()
    obs_rng = rng_from_seed(split_seed(args.seed, STREAM_OBSERVABLE))
    o1 = _parse_observable(args.o1, obs_rng)
    o2 = _parse_observable(args.o2, obs_rng)
    est = haar_twirl_mc(o1, o2, args.samples, split_seed(args.seed, STREAM_STATE))

    if args.tolerance is not None:
        twirl_check = _check(est.max_abs_deviation, args.tolerance)
    else:
        twirl_check = {
            "deviation": est.max_abs_deviation,
            "tolerance": 5.0 * est.std_error + 1e-12,
            "pass": est.passed,
        }
    checks = {"twirl_5sigma": twirl_check}
    config = {
        "command": "twirl",
        "seed": args.seed,
        "tolerance": args.tolerance,
        "samples": args.samples,
        "o1": args.o1,
        "o2": args.o2,
    }
    extra = {"twirl": est.to_json_dict()}
    return _assemble("twirl", config, trials=[], checks=checks, extra=extra, started=started)


def cmd_boost(args) -> tuple[dict, bool]:
    started = time.perf_counter()
    check = partial(_check, override=args.tolerance)
    state, source_cfg = _load_state(args, args.seed)
    factors = [boost_z(args.rapidity)] * state.n
    moved = apply_local(state, factors)

    s_before = linear_entropy(state)
    s_after = linear_entropy(moved)
    checks = {"entropy_preserved": check(_rel_dev(s_before, s_after), 1e-9)}

    config = {
        "command": "boost",
        "seed": args.seed,
        "tolerance": args.tolerance,
        "rapidity": args.rapidity,
        **source_cfg,
    }
    extra = {
        "state": state_to_json_dict(moved),
        "linear_entropy_before": s_before,
        "linear_entropy_after": s_after,
        "trace_before": state.trace(),
        "trace_after": moved.trace(),
    }
    return _assemble("boost", config, trials=[], checks=checks, extra=extra, started=started)


def _add_state_source_flags(p: argparse.ArgumentParser, default_preset: str):
    p.add_argument("--preset", default=default_preset,
                   help="named state: singlet, ghz<n>, wstate<n>, product_of_singlets<k>, "
                        "maximally_mixed<n>, basis0<n>")
    p.add_argument("--random", choices=["pure", "mixed"], default=None,
                   help="draw a random state instead of a preset")
    p.add_argument("--n", type=int, default=2, help="qubit count for --random")
    p.add_argument("--input", default=None, help="path to a state JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlorentz",
        description="Lorentz-invariant scalars of n-qubit states and the singlet metric",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariants of one state plus invariance trials")
    _add_state_source_flags(p_inv, "singlet")
    p_inv.add_argument("--trials", type=int, default=20,
                       help="random local actions for the invariance check")
    p_inv.add_argument("--max-rapidity", type=float, default=2.0)
    p_inv.set_defaults(func=cmd_invariants)

    p_orc = sub.add_parser("oracle", help="subset-sum vs trace-formula agreement")
    p_orc.add_argument("--n", type=int, default=3)
    p_orc.add_argument("--trials", type=int, default=200)
    p_orc.set_defaults(func=cmd_oracle)

    p_met = sub.add_parser("metric", help="Pauli table, determinant identity, symmetry checks")
    p_met.add_argument("--trials", type=int, default=1000,
                       help="random Hermitian pairs for the determinant identity")
    p_met.add_argument("--sym-trials", type=int, default=100)
    p_met.add_argument("--boost", type=float, default=None,
                       help="check symmetry under this fixed boost rapidity only")
    p_met.add_argument("--rotation", type=float, default=None,
                       help="check symmetry under this fixed rotation angle only")
    p_met.add_argument("--parity", action="store_true",
                       help="check symmetry under the parity map only")
    p_met.set_defaults(func=cmd_metric)

    p_twl = sub.add_parser("twirl", help="Haar-twirl Monte Carlo")
    p_twl.add_argument("--o1", default="Z", help="I, X, Y, Z, random, or t,x,y,z")
    p_twl.add_argument("--o2", default="Z", help="I, X, Y, Z, random, or t,x,y,z")
    p_twl.add_argument("--samples", type=int, default=100_000)
    p_twl.set_defaults(func=cmd_twirl)

    p_bst = sub.add_parser("boost", help="apply per-qubit boosts to a state")
    _add_state_source_flags(p_bst, "basis0")
    p_bst.add_argument("--rapidity", type=float, default=1.0)
    p_bst.set_defaults(func=cmd_boost)

    for p in (p_inv, p_orc, p_met, p_twl, p_bst):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tolerance", type=float, default=None,
                       help="override every check tolerance with this value")
        p.add_argument("--output", default=None, help="write the JSON report here (default stdout)")
        p.add_argument("--csv", default=None, help="write per-trial records as CSV here")

    return parser


def _emit(report: dict, args) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        rows = report.get("trials", [])
        fields = sorted({k for row in rows for k in row})
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            writer.writerows(rows)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, ok = args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
