"""``liepoisson`` command line: run, order, defect and compare studies."""
import argparse
import logging
import sys

from .. import __version__
from ..errors import ConfigError, ConvergenceError, DegenerateStudyError, DomainError
from .config import StudyConfig, coerce, read_config_file
from .output import write_report
from .study import compare, convergence_order, defect_study, run_trajectory

log = logging.getLogger("liepoisson")

EXIT_OK, EXIT_CONFIG, EXIT_SOLVER, EXIT_DEGENERATE = 0, 2, 3, 4

FLAGS = (
    ("--model", "model"),
    ("--inertia", "inertia"),
    ("--integrator", "integrator"),
    ("--scaling", "scaling"),
    ("--mu0", "mu0"),
    ("--h", "h"),
    ("--steps", "steps"),
    ("--t-final", "t_final"),
    ("--h-list", "h_list"),
    ("--tol", "tol"),
    ("--max-iterations", "max_iterations"),
    ("--ref-tol", "ref_tol"),
    ("--fd-step", "fd_step"),
    ("--format", "format"),
)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value study file; flags override it")
    for flag, dest in FLAGS:
        common.add_argument(flag, dest=dest, default=None)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--workers", type=int, default=1, help="threads for compare")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="liepoisson", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="kind", required=True)
    sub.add_parser("run", parents=[common], help="integrate one trajectory")
    sub.add_parser("order", parents=[common], help="convergence order vs the reference flow")
    sub.add_parser("defect", parents=[common], help="Poisson-map defect over step sizes")
    sub.add_parser("compare", parents=[common], help="side-by-side integrators (comma list)")
    return parser


def config_from_args(args):
    values = read_config_file(args.config) if args.config else {}
    for _, dest in FLAGS:
        raw = getattr(args, dest)
        if raw is not None:
            key, val = coerce(dest, raw)
            values[key] = val
    values["kind"] = args.kind
    if args.out is not None:
        values["out"] = args.out
    integrators = str(values.get("integrator", "midpoint")).split(",")
    cfgs = [StudyConfig(**{**values, "integrator": name.strip()}) for name in integrators]
    if args.kind != "compare" and len(cfgs) > 1:
        raise ConfigError("several integrators are only accepted by compare")
    return cfgs


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfgs = config_from_args(args)
        cfg = cfgs[0]
        if args.kind == "run":
            _, report = run_trajectory(cfg)
        elif args.kind == "order":
            report = convergence_order(cfg)
        elif args.kind == "defect":
            report = defect_study(cfg)
        else:
            report = compare(cfgs, workers=args.workers)
        write_report(report, cfg.format, cfg.out, sys.stdout)
        log.info("summary: %s", report.summary)
    except (ConfigError, DomainError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConvergenceError as exc:
        where = f" at step {exc.step_index}" if exc.step_index is not None else ""
        print(f"solver failure{where}: {exc} (residual {exc.residual:.3e})", file=sys.stderr)
        return EXIT_SOLVER
    except DegenerateStudyError as exc:
        print(f"degenerate study: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
