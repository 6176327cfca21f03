import argparse
import sys
from typing import List, Optional

from app.errors import InvalidParameterValueError
from app.settings import get_settings
from models.configs import RunConfig, SUBCOMMANDS
from scripts.runs.phmm_pen import main as run_pipeline, success_response, error_response


def _columns(value: str) -> List[int]:
    return [int(item) for item in value.split(",") if item.strip()]


class CommandLineParser(argparse.ArgumentParser):
    """Reports usage errors as domain errors so they reach the error JSON instead of exiting."""

    def error(self, message):
        raise InvalidParameterValueError(f"{self.prog}: {message}")


def _or_default(value, default):
    return default if value is None else value


def build_parser() -> argparse.ArgumentParser:
    parser = CommandLineParser(
        prog="phmm-pen",
        description="Penalized piecewise constant hazard mixed-effects survival models.",
    )
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("--input", help="input CSV with group,time,status and covariate columns")
    parser.add_argument("--output", help="output JSON (fit, select, estimate-r) or CSV (simulate, bench)")
    parser.add_argument("--env", default="PROD", choices=["DEV", "TEST", "PROD"])
    parser.add_argument("--intervals", "-J", type=int, default=None)
    parser.add_argument("--penalty", default="mcp", choices=["lasso", "mcp", "scad"])
    parser.add_argument("--gamma", type=float, default=None)
    parser.add_argument("--pi", type=float, default=1.0)
    parser.add_argument("--r", default="auto", help="number of latent factors or 'auto'")
    parser.add_argument("--n-lambda", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--max-em", type=int, default=25)
    parser.add_argument("--max-mstep", type=int, default=50)
    parser.add_argument("--burnin", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--lambda0", type=float, default=None)
    parser.add_argument("--lambda1", type=float, default=None)
    parser.add_argument("--random-columns", type=_columns, default=None,
                        help="comma-separated 0-based predictor indices carrying random effects")
    parser.add_argument("--replicates", type=int, default=1)
    parser.add_argument("--sim-preset", default="moderate", choices=["small", "moderate"])
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--p", type=int, default=None)
    parser.add_argument("--beta", type=float, default=None)
    parser.add_argument("--verbosity", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Fills unset options from the settings profile so the embedded config is complete."""
    settings = get_settings(env=args.env)
    return RunConfig(
        subcommand=args.subcommand,
        input=args.input,
        output=args.output,
        env=args.env,
        intervals=_or_default(args.intervals, settings.DEFAULT_INTERVALS),
        penalty=args.penalty,
        gamma=args.gamma,
        pi=args.pi,
        r=args.r,
        n_lambda=_or_default(args.n_lambda, settings.DEFAULT_N_LAMBDA),
        seed=_or_default(args.seed, settings.DEFAULT_SEED),
        max_em=args.max_em,
        max_mstep=args.max_mstep,
        burnin=_or_default(args.burnin, settings.DEFAULT_BURNIN),
        threads=_or_default(args.threads, settings.NUM_THREADS),
        lambda0=args.lambda0,
        lambda1=args.lambda1,
        random_columns=args.random_columns,
        replicates=args.replicates,
        sim_preset=args.sim_preset,
        n=args.n,
        k=args.k,
        p=args.p,
        beta=args.beta,
        verbosity=_or_default(args.verbosity, settings.LOG_LEVEL),
    )


def run(argv: Optional[List[str]] = None) -> int:
    try:
        config = resolve_config(build_parser().parse_args(argv))
        pipeline, runner = config.runner
        output = run_pipeline(env=config.env, runner=runner, logs_level=config.verbosity,
                              params=config.runner_params(), pipeline=pipeline)
        print(success_response(output))
        return 0
    except Exception as e:
        print(error_response(e))
        return 1


if __name__ == "__main__":
    sys.exit(run())
