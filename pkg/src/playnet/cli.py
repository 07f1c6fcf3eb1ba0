"""Command-line surface: decide, simulate, analyze, compare, frontier.

Exit codes are the only success/failure channel: 0 on success, 1 when an
input fails validation, 2 on usage errors. Every subcommand takes --json
for machine-readable output on stdout; file artifacts (logs, CSV
reports, DOT dumps) are written atomically with a sibling
<artifact>.manifest.json recording the resolved config, inputs, and
seed, and regenerate() rebuilds any artifact from its manifest.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import __version__
from .config import AppConfig, load_config
from .decision import DecisionPolicy, decide, ranked_options
from .dotexport import export_network_dot
from .estimators import default_suite, estimate_network
from .jsonio import (
    RunManifest,
    canonical_dumps,
    canonical_number,
    sha256_of_file,
    write_artifact,
)
from .sequence import (
    PossessionSequence,
    efficiency,
    pareto_frontier,
    security,
    sequence_from_obj,
    sequence_to_obj,
)
from .simulate import SimulationConfig, monte_carlo_compare, run_trials
from .state import load_match_state
from .style import LinearStyle


def _fmt(value: float) -> str:
    return json.dumps(canonical_number(float(value)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="playnet",
        description="Decision networks and possession simulation for football tactics.",
    )
    parser.add_argument("--config", help="config file path (also PLAYNET_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="shoot-or-pass decision for a match state")
    p.add_argument("--state", required=True, help="match state JSON file")
    p.add_argument("--style", required=True, help="style weights as x:y, e.g. 3:1")
    p.add_argument("--threshold", type=float, help="shoot threshold (default from config: 0.5)")
    p.add_argument("--tie-break", dest="tie_break", help="argmax tie-break rule")
    p.add_argument("--dot", help="also write the network as a DOT graph to this file")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("simulate", help="roll out seeded possessions")
    p.add_argument("--state", required=True)
    p.add_argument("--style", required=True)
    p.add_argument("--threshold", type=float)
    p.add_argument("--tie-break", dest="tie_break")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-steps", dest="max_steps", type=int)
    p.add_argument("--out", help="write the sequence log JSON to this file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("analyze", help="metrics of a recorded sequence log")
    p.add_argument("--log", required=True, help="sequence log JSON file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("compare", help="Monte Carlo comparison of styles")
    p.add_argument("--state", required=True)
    p.add_argument("--styles", required=True, help="comma-separated styles, e.g. 3:1,1:3,2:2")
    p.add_argument("--threshold", type=float)
    p.add_argument("--tie-break", dest="tie_break")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--csv", help="write the per-style report as CSV to this file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("frontier", help="Pareto frontier of sequences in a log")
    p.add_argument("--log", required=True)
    p.add_argument("--json", action="store_true")

    return parser


def _resolve_config(args: argparse.Namespace) -> AppConfig:
    cfg = load_config(args.config)
    overrides = {}
    if getattr(args, "threshold", None) is not None:
        overrides["threshold"] = args.threshold
    if getattr(args, "tie_break", None) is not None:
        overrides["tie_break"] = args.tie_break
    if getattr(args, "max_steps", None) is not None:
        overrides["max_steps"] = args.max_steps
    return dataclasses.replace(cfg, **overrides) if overrides else cfg


def _policy(cfg: AppConfig, style: LinearStyle) -> DecisionPolicy:
    return DecisionPolicy(style=style, threshold=cfg.threshold, tie_break=cfg.tie_break)


def _sim_config(cfg: AppConfig, style: LinearStyle, seed: int) -> SimulationConfig:
    return SimulationConfig(
        policy=_policy(cfg, style),
        estimators=default_suite(cfg.estimators),
        max_steps=cfg.max_steps,
        seed=seed,
        drift_m=cfg.drift_m,
    )


def _state_inputs(path: str) -> dict:
    return {"state": {"path": path, "sha256": sha256_of_file(path)}}


def _log_text(results) -> str:
    logs = [sequence_to_obj(r.sequence) for r in results]
    return canonical_dumps(logs[0] if len(logs) == 1 else logs)


def _sequences_from_log_obj(obj) -> list[PossessionSequence]:
    """A log file holds one sequence (array of steps) or an array of sequences."""
    if not isinstance(obj, list) or not obj:
        raise ValueError("sequence log: expected a nonempty array")
    if isinstance(obj[0], dict):
        return [sequence_from_obj(obj)]
    return [sequence_from_obj(item) for item in obj]


def _load_log(path: str) -> list[PossessionSequence]:
    with open(path, "rb") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as err:
            raise ValueError(f"log {path}: invalid JSON: {err}") from None
    return _sequences_from_log_obj(obj)


def _cmd_decide(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    style = LinearStyle.parse(args.style)
    state = load_match_state(args.state)
    network = estimate_network(state, default_suite(cfg.estimators))
    policy = _policy(cfg, style)
    decision = decide(network, policy)
    ranked = ranked_options(network, policy)
    if args.dot:
        manifest = RunManifest.build(
            "decide",
            cfg.to_dict(),
            {"style": str(style), "threshold": cfg.threshold, "tie_break": cfg.tie_break},
            _state_inputs(args.state),
            __version__,
        )
        write_artifact(args.dot, export_network_dot(network), manifest)
    if args.json:
        decision_obj: dict = {"type": decision.action}
        if decision.is_pass:
            decision_obj.update(
                {"target": decision.target, "score": decision.score, "degenerate": decision.degenerate}
            )
        out = {
            "decision": decision_obj,
            "ranked": [{"id": j, "score": score} for j, score in ranked],
            "network": network.to_json_dict(),
        }
        sys.stdout.write(canonical_dumps(out))
        return 0
    if decision.is_shoot:
        print(f"decision: shoot (s={_fmt(network.s)} >= threshold {_fmt(policy.threshold)})")
    else:
        extra = ", degenerate: every option scored zero" if decision.degenerate else ""
        print(f"decision: pass -> t{decision.target} (score {_fmt(decision.score)}{extra})")
    print("ranked options:")
    for rank, (j, score) in enumerate(ranked, start=1):
        print(f"  {rank:2d}. t{j:<2d} score {_fmt(score)}")
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    style = LinearStyle.parse(args.style)
    state = load_match_state(args.state)
    sim = _sim_config(cfg, style, args.seed)
    results = run_trials(state, sim, 0, args.trials, threads=args.threads)
    if args.out:
        manifest = RunManifest.build(
            "simulate",
            cfg.to_dict(),
            {
                "style": str(style),
                "trials": args.trials,
                "seed": args.seed,
                "threads": args.threads,
            },
            _state_inputs(args.state),
            __version__,
        )
        write_artifact(args.out, _log_text(results), manifest)
    summary = {
        "trials": args.trials,
        "goal_rate": sum(1 for r in results if r.scored) / args.trials,
        "mean_efficiency": sum(r.efficiency for r in results) / args.trials,
        "mean_security": sum(r.security for r in results) / args.trials,
        "mean_length": sum(len(r.sequence) for r in results) / args.trials,
    }
    if args.json:
        out = {
            "summary": summary,
            "sequences": [
                {
                    "steps": len(r.sequence),
                    "outcome": r.sequence.terminal_outcome.label(),
                    "efficiency": r.efficiency,
                    "security": r.security,
                }
                for r in results
            ],
        }
        sys.stdout.write(canonical_dumps(out))
        return 0
    for i, r in enumerate(results[:20]):
        print(
            f"trial {i}: {len(r.sequence)} steps, {r.sequence.terminal_outcome.label()}, "
            f"efficiency {_fmt(r.efficiency)}, security {_fmt(r.security)}"
        )
    if len(results) > 20:
        print(f"... ({len(results) - 20} more trials)")
    print(
        f"summary: goal rate {_fmt(summary['goal_rate'])}, "
        f"mean efficiency {_fmt(summary['mean_efficiency'])}, "
        f"mean security {_fmt(summary['mean_security'])}, "
        f"mean length {_fmt(summary['mean_length'])}"
    )
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    sequences = _load_log(args.log)
    rows = [
        {
            "index": i,
            "steps": len(seq),
            "terminal": seq.terminal_outcome.label(),
            "efficiency": efficiency(seq),
            "security": security(seq),
        }
        for i, seq in enumerate(sequences)
    ]
    if args.json:
        sys.stdout.write(canonical_dumps({"sequences": rows}))
        return 0
    for row in rows:
        print(
            f"sequence {row['index']}: steps {row['steps']}, terminal {row['terminal']}, "
            f"efficiency {_fmt(row['efficiency'])}, security {_fmt(row['security'])}"
        )
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    styles = [LinearStyle.parse(text) for text in args.styles.split(",") if text != ""]
    if not styles:
        raise ValueError("--styles must name at least one style")
    state = load_match_state(args.state)
    sim = _sim_config(cfg, styles[0], args.seed)
    reports = monte_carlo_compare(state, styles, args.trials, sim, threads=args.threads)
    if args.csv:
        lines = ["style,trials,mean_efficiency,mean_security,goal_rate,mean_length"]
        for rep in reports:
            lines.append(
                f"{rep.style},{rep.trials},{_fmt(rep.mean_efficiency)},"
                f"{_fmt(rep.mean_security)},{_fmt(rep.goal_rate)},{_fmt(rep.mean_length)}"
            )
        manifest = RunManifest.build(
            "compare",
            cfg.to_dict(),
            {
                "styles": [str(s) for s in styles],
                "trials": args.trials,
                "seed": args.seed,
                "threads": args.threads,
            },
            _state_inputs(args.state),
            __version__,
        )
        write_artifact(args.csv, "\n".join(lines) + "\n", manifest)
    if args.json:
        sys.stdout.write(canonical_dumps({"reports": [dataclasses.asdict(r) for r in reports]}))
        return 0
    header = f"{'style':<8}{'trials':>8}{'mean_eff':>12}{'mean_sec':>12}{'goal_rate':>12}{'mean_len':>12}"
    print(header)
    for rep in reports:
        print(
            f"{rep.style:<8}{rep.trials:>8}{rep.mean_efficiency:>12.4f}"
            f"{rep.mean_security:>12.4f}{rep.goal_rate:>12.4f}{rep.mean_length:>12.4f}"
        )
    return 0


def _cmd_frontier(args: argparse.Namespace) -> int:
    sequences = _load_log(args.log)
    frontier = pareto_frontier(sequences)
    if args.json:
        out = {
            "count": len(sequences),
            "frontier": [
                {"index": idx, "efficiency": eff, "security": sec} for eff, sec, idx in frontier
            ],
        }
        sys.stdout.write(canonical_dumps(out))
        return 0
    print(f"pareto frontier ({len(frontier)} of {len(sequences)} sequences):")
    for eff, sec, idx in frontier:
        print(f"  sequence {idx}: efficiency {_fmt(eff)}, security {_fmt(sec)}")
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "simulate": _cmd_simulate,
    "analyze": _cmd_analyze,
    "compare": _cmd_compare,
    "frontier": _cmd_frontier,
}


def run_cli(argv) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def regenerate(manifest: dict) -> str:
    """Rebuild an artifact's exact text from its manifest.

    Reads the recorded input files, verifies their digests, and re-runs
    the recorded command with the recorded config and seed.
    """
    if not isinstance(manifest, dict) or "command" not in manifest:
        raise ValueError("manifest: expected an object with a command")
    cfg = AppConfig.from_dict(manifest["config"])
    run = manifest["run"]
    state_input = manifest["inputs"]["state"]
    digest = sha256_of_file(state_input["path"])
    if digest != state_input["sha256"]:
        raise ValueError(
            f"input {state_input['path']}: digest {digest} does not match "
            f"the manifest ({state_input['sha256']})"
        )
    state = load_match_state(state_input["path"])
    command = manifest["command"]
    if command == "decide":
        network = estimate_network(state, default_suite(cfg.estimators))
        return export_network_dot(network)
    if command == "simulate":
        sim = _sim_config(cfg, LinearStyle.parse(run["style"]), run["seed"])
        results = run_trials(state, sim, 0, run["trials"], threads=1)
        return _log_text(results)
    if command == "compare":
        styles = [LinearStyle.parse(text) for text in run["styles"]]
        sim = _sim_config(cfg, styles[0], run["seed"])
        reports = monte_carlo_compare(state, styles, run["trials"], sim, threads=1)
        lines = ["style,trials,mean_efficiency,mean_security,goal_rate,mean_length"]
        for rep in reports:
            lines.append(
                f"{rep.style},{rep.trials},{_fmt(rep.mean_efficiency)},"
                f"{_fmt(rep.mean_security)},{_fmt(rep.goal_rate)},{_fmt(rep.mean_length)}"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"manifest: cannot regenerate command {command!r}")


def main(argv=None) -> int:
    return run_cli(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
