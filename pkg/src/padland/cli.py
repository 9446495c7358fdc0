"""Command-line entry point.

Subcommands: `run` (execute a campaign and write all outputs), `replay`
(feed a recorded detection log through gating and servo error
computation, no dynamics), `report` (re-render the comparison table from
an existing summary JSON), and `validate-config`. All outputs are a pure
function of config, seed, flags, and input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import ConfigError, build_campaign, default_config, load_config
from .experts import DetectionLogError, read_detection_log, replay_detect
from .gating import GateState, select_expert
from .harness import Mode, run_campaign
from .reporting import rebuild_results, write_campaign_outputs
from .servo import compute_errors
from .stats import compare_modes, format_comparison_table

REPLAY_HEADER = "frame,selected,tracking_lost,u_hat,v_hat,w_hat,h_hat,e_x,e_y,A,e_z"


def _parse_modes(text: str) -> list[Mode]:
    modes = []
    for name in text.split(","):
        name = name.strip()
        if not name:
            continue
        try:
            modes.append(Mode(name))
        except ValueError:
            raise ConfigError(
                f"--modes: unknown mode {name!r} (expected one of {[m.value for m in Mode]})"
            ) from None
    if not modes:
        raise ConfigError("--modes: at least one mode required")
    return modes


def cmd_run(args) -> int:
    doc = load_config(args.config)
    if args.seed is not None:
        doc.setdefault("trials", {})["seed"] = args.seed
    if args.trials is not None:
        doc.setdefault("trials", {})["n_trials"] = args.trials
    if args.modes is not None:
        doc.setdefault("trials", {})["modes"] = [m.value for m in _parse_modes(args.modes)]
    spec = build_campaign(doc)

    campaign = run_campaign(
        scenario=spec.scenario,
        config=spec.trials,
        modes=list(spec.modes),
        n_workers=args.workers,
    )
    out = Path(args.out)
    write_campaign_outputs(campaign, out)
    print((out / "comparison.txt").read_text(), end="")
    print(f"outputs written to {out}")
    return 0


def cmd_replay(args) -> int:
    doc = load_config(args.config)
    spec = build_campaign(doc)
    log = read_detection_log(args.log)

    cam = spec.scenario.camera
    gains = spec.scenario.gains
    gate = GateState(
        window_capacity=spec.scenario.window_size,
        coast_limit=spec.scenario.coast_limit,
    )

    lines = [REPLAY_HEADER]
    for frame in range(len(log)):
        det_far, det_near = replay_detect(log, frame)
        out = select_expert(det_far, det_near, gate, cam)
        if out.smoothed_box is not None:
            b = out.smoothed_box
            err = compute_errors(b, cam, gains)
            cells = [b.u, b.v, b.w, b.h, err.e_x, err.e_y, err.area, err.e_z]
            cell_text = ",".join(repr(c) for c in cells)
        else:
            cell_text = ",,,,,,,"
        selected = out.selected_expert.value if out.selected_expert else ""
        lines.append(f"{frame},{selected},{int(out.tracking_lost)},{cell_text}")

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / "replay.csv"
    out_path.write_text("\n".join(lines) + "\n")
    print(f"replayed {len(log)} frames -> {out_path}")
    return 0


def cmd_report(args) -> int:
    path = Path(args.summary)
    if not path.exists():
        raise ConfigError(f"summary file not found: {path}")
    summary = json.loads(path.read_text())
    results = rebuild_results(summary)
    print(format_comparison_table(compare_modes(results)))
    return 0


def cmd_validate_config(args) -> int:
    doc = load_config(args.config)
    spec = build_campaign(doc)
    print(
        f"config OK: {spec.trials.n_trials} trials, "
        f"modes {[m.value for m in spec.modes]}, seed {spec.trials.seed}"
    )
    return 0


def cmd_init_config(args) -> int:
    path = Path(args.out)
    path.write_text(json.dumps(default_config(), indent=2) + "\n")
    print(f"default config written to {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padland",
        description="Dual-expert helipad landing simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a landing campaign")
    p_run.add_argument("--config", required=True, help="campaign config JSON")
    p_run.add_argument("--out", required=True, help="output directory")
    p_run.add_argument("--seed", type=int, default=None, help="override trials.seed")
    p_run.add_argument("--modes", default=None, help="comma-separated mode list")
    p_run.add_argument("--trials", type=int, default=None, help="override trials.n_trials")
    p_run.add_argument("--workers", type=int, default=1, help="parallel trial workers")
    p_run.set_defaults(func=cmd_run)

    p_replay = sub.add_parser("replay", help="replay a detection log through the gate")
    p_replay.add_argument("--log", required=True, help="detection log CSV")
    p_replay.add_argument("--config", required=True, help="campaign config JSON")
    p_replay.add_argument("--out", required=True, help="output directory")
    p_replay.set_defaults(func=cmd_replay)

    p_report = sub.add_parser("report", help="re-render the table from a summary JSON")
    p_report.add_argument("--summary", required=True, help="summary.json from a prior run")
    p_report.set_defaults(func=cmd_report)

    p_val = sub.add_parser("validate-config", help="check a config file")
    p_val.add_argument("--config", required=True, help="campaign config JSON")
    p_val.set_defaults(func=cmd_validate_config)

    p_init = sub.add_parser("init-config", help="write the default config to a file")
    p_init.add_argument("--out", required=True, help="destination path")
    p_init.set_defaults(func=cmd_init_config)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DetectionLogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
