"""
Main entry point for the fair dynamic pricing simulator

Learns pricing policies with epsilon-greedy Q-learning on a synthetic
four-group market, trading revenue against group fairness.

Usage:
    python main.py list-presets
    python main.py run exp1 --seeds 3 --out outputs
    python main.py run my_config.json --epochs 50 --bids 200 --log-transitions
    python main.py evaluate outputs/exp1/weights_seed0.fqnet exp1
"""
import argparse
import logging
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent))

from dotenv import load_dotenv

from src.config import DEFAULT_SEED, resolve_output_root
from src.config_loader import list_presets, load_config
from src.errors import PricingError
from src.orchestrator import run_workflow
from src.presets import PRESETS

# Load environment variables
load_dotenv()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fair-pricing",
        description="Q-learning dynamic pricing with a fairness objective"
    )
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(sub):
        seeds = sub.add_mutually_exclusive_group()
        seeds.add_argument("--seed", type=int, help="Run a single seed")
        seeds.add_argument("--seeds", type=int, metavar="N", help="Run N seeds starting at --base-seed")
        sub.add_argument("--base-seed", type=int, default=DEFAULT_SEED)
        sub.add_argument("--out", metavar="DIR", help=f"Output root (default {resolve_output_root()})")
        sub.add_argument("--epochs", type=int, help="Override epochs E")
        sub.add_argument("--bids", type=int, help="Override bids per epoch I")
        sub.add_argument("--log-transitions", action="store_true", default=None,
                         help="Write one JSON record per bid")

    run = subparsers.add_parser("run", help="Train an experiment")
    run.add_argument("config", help="Preset name or path to a JSON config")
    add_run_flags(run)

    evaluate = subparsers.add_parser("evaluate", help="Greedy rollout of saved weights")
    evaluate.add_argument("weights", help="Weights file written by 'run'")
    evaluate.add_argument("config", help="Preset name or path to a JSON config")
    add_run_flags(evaluate)

    subparsers.add_parser("list-presets", help="Show built-in experiments")
    return parser


def collect_overrides(args: argparse.Namespace) -> dict:
    seeds = None
    if args.seed is not None:
        seeds = [args.seed]
    elif args.seeds is not None:
        seeds = list(range(args.base_seed, args.base_seed + args.seeds))
    return {
        "epochs": args.epochs,
        "bids": args.bids,
        "seeds": seeds,
        "log_transitions": args.log_transitions,
    }


def show_presets() -> int:
    print("=" * 70)
    print("📋 BUILT-IN EXPERIMENTS")
    print("=" * 70)
    for name in list_presets():
        config = load_config(name)
        r = config.reward
        pinned = config.agent.epsilon_pinned
        print(f"  {name}: {PRESETS[name]['description']}")
        print(f"     beta_p={r.beta_p} beta_f={r.beta_f} p_t={r.p_target} f_t={r.f_target}"
              + (f" epsilon={pinned}" if pinned is not None else ""))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )

    if args.command == "list-presets":
        try:
            return show_presets()
        except PricingError as e:
            print(f"\n❌ Error: {e}")
            return e.exit_code

    try:
        final_state = run_workflow(
            args.config,
            overrides=collect_overrides(args),
            mode="evaluate" if args.command == "evaluate" else "train",
            weights_path=getattr(args, "weights", None),
            output_root=args.out
        )
    except Exception as e:
        logging.getLogger(__name__).exception("Run aborted")
        print(f"\n❌ Error: {e}")
        return 2

    summary = final_state.get("summary")
    if summary:
        print("\n" + "=" * 70)
        print(f"📊 SUMMARY: {summary.name} (last {summary.window} epochs, seeds {summary.seeds})")
        print("=" * 70)
        for metric, stat in summary.metrics.items():
            print(f"   {metric:<18} {stat.mean:>12.4f} ± {stat.std:.4f}")
        print(f"   lr trend (rho)     {summary.lr_trend:>12.4f}")

    return (final_state.get("exit_code") or 2) if final_state.get("errors") else 0


if __name__ == "__main__":
    sys.exit(main())
