import argparse
import logging
import sys
from pathlib import Path

from constructions import (
    CompletedGame,
    GadgetId,
    GhrLayout,
    build_gadget,
    build_reduction,
    diagonal_embed,
    ghr_symmetrize,
    known_equilibria,
    pup_complete,
)
from errors import (
    EXIT_CHECK_FAILED,
    EXIT_DEGENERATE,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    CheckFailed,
    DegenerateGameError,
    WinLoseLabError,
)
from executors import CheckExecutor
from games import Game, is_nash
from games.serialization import profile_from_json, profile_to_json, read_game, read_json, write_game, write_json
from sat import CnfFormula, count_sat, parse_dimacs
from settings import get_settings, resolve_seed
from solvers import enumerate_ne_bimatrix, enumerate_pure_ne, enumerate_symmetric_ne
from verifiers import GadgetVerifier, GhrCountVerifier, ReductionVerifier, ScenarioId, ScenarioVerifier, Verifier

logger = logging.getLogger(__name__)


def read_cnf(path: Path) -> CnfFormula:
    with open(path, encoding="utf-8") as f:
        return parse_dimacs(f.read())


def load_gadget(source: str, h: int | None, k: int | None) -> tuple[Game, GadgetId | None]:
    """A gadget file when `source` names one, else a built-in gadget id."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        return read_game(path), None
    gadget_id = GadgetId.parse(source, h=h, k=k)
    return build_gadget(gadget_id), gadget_id


def run_checks(verifier: Verifier, report_dir: Path | None) -> int:
    executor = CheckExecutor(verifier, report_dir)
    if not executor.execute():
        raise CheckFailed(f"{verifier.name}: {len(verifier.failures())} check(s) failed")
    return EXIT_OK


def run_gadget(args) -> int:
    gadget_id = GadgetId.parse(args.id, h=args.h, k=args.k)
    game = build_gadget(gadget_id)
    if args.out:
        write_game(args.out, game)
    print(f"{gadget_id}: {game.player_count} players, shape {game.shape}")
    return EXIT_OK


def run_gadget_verify(args) -> int:
    gadget_id = GadgetId.parse(args.id, h=args.h, k=args.k)
    verifier = GadgetVerifier(gadget_id, samples=args.samples, seed=resolve_seed(args.seed), jobs=args.jobs)
    return run_checks(verifier, args.report_dir)


def run_sat_count(args) -> int:
    formula = read_cnf(args.cnf)
    result = count_sat(formula, witnesses=args.witnesses, jobs=args.jobs)
    print(f"#phi={result.count} parity={result.parity}")
    if args.witnesses:
        witnesses = [list(w.true_literals()) for w in result.witnesses]
        if args.out:
            write_json(args.out, witnesses)
        else:
            for literals in witnesses:
                print(" ".join(str(lit) for lit in literals))
    return EXIT_OK


def run_reduce(args) -> int:
    gadget, _ = load_gadget(args.gadget, args.h, args.k)
    game, layout = build_reduction(gadget, read_cnf(args.cnf), r=args.players)
    if args.out:
        write_game(args.out, game)
    if args.layout:
        write_json(args.layout, layout.to_json())
    print(f"reduction game: {game.player_count} players, shape {game.shape}")
    return EXIT_OK


def run_reduce_check(args) -> int:
    gadget, gadget_id = load_gadget(args.gadget, args.h, args.k)
    known = known_equilibria(gadget_id) if gadget_id is not None else None
    verifier = ReductionVerifier(
        gadget,
        read_cnf(args.cnf),
        gadget_ne=known,
        samples=args.samples,
        seed=resolve_seed(args.seed),
        jobs=args.jobs,
    )
    return run_checks(verifier, args.report_dir)


def run_symmetrize(args) -> int:
    image, layout = ghr_symmetrize(read_game(args.game))
    if args.out:
        write_game(args.out, image)
    if args.layout:
        write_json(args.layout, layout.to_json())
    print(f"symmetrized game: {image.shape[0]} strategies per player")
    return EXIT_OK


def run_embed_diagonal(args) -> int:
    layout = GhrLayout.from_json(read_json(args.layout))
    game = diagonal_embed(read_game(args.game), layout, args.k)
    if args.out:
        write_game(args.out, game)
    print(f"embedded game: {game.shape[0]} strategies per player")
    return EXIT_OK


def run_pup_complete(args) -> int:
    game = read_game(args.game)
    result = pup_complete(game)
    if isinstance(result, CompletedGame):
        if args.out:
            write_game(args.out, result.game)
        state = "extended by one strategy" if result.extended else "already has the positive utility property"
        print(f"completed game: {state}, shape {result.game.shape}")
    else:
        labels = [game.strategy_labels[i][s] for i, s in enumerate(result.profile)]
        print(f"pure equilibrium: ({', '.join(labels)})")
    return EXIT_OK


def run_enumerate(args) -> int:
    game = read_game(args.game)
    if not game.is_bimatrix:
        profiles = enumerate_pure_ne(game)
        print(f"{len(profiles)} pure equilibria")
        for profile in profiles:
            print("  (" + ", ".join(game.strategy_labels[i][s] for i, s in enumerate(profile)) + ")")
        return EXIT_OK
    if args.symmetric:
        result = enumerate_symmetric_ne(game, jobs=args.jobs)
    else:
        result = enumerate_ne_bimatrix(game, jobs=args.jobs)
    if result.degenerate:
        raise DegenerateGameError(f"degenerate game: aborted after {result.supports_scanned} support pairs")
    print(f"{result.count} equilibria")
    documents = [profile_to_json(game, sigma) for sigma in result.equilibria]
    for document in documents:
        print("  " + " | ".join(", ".join(f"{label}={p}" for label, p in dist.items()) for dist in document["distributions"]))
    if args.out:
        write_json(args.out, documents)
    return EXIT_OK


def run_verify(args) -> int:
    game = read_game(args.game)
    data = read_json(args.profile)
    if args.field:
        data = {**data, "field": args.field}
    sigma = profile_from_json(game, data)
    check = is_nash(game, sigma)
    if check:
        print("NASH")
        return EXIT_OK
    print(f"NOT NASH: {check.violation.describe()}")
    return EXIT_CHECK_FAILED


def run_ghr_count(args) -> int:
    verifier = GhrCountVerifier(read_game(args.game), jobs=args.jobs)
    code = run_checks(verifier, args.report_dir)
    return EXIT_DEGENERATE if verifier.degenerate else code


def run_scenario_command(args) -> int:
    scenario = ScenarioId.parse(args.id, k=args.k)
    formula = read_cnf(args.cnf) if args.cnf else None
    return run_checks(ScenarioVerifier(scenario, formula, jobs=args.jobs), args.report_dir)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="winlose-lab", description="Win-lose games: gadgets, reductions and checks.")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default from WINLOSE_LAB_JOBS)")
    parser.add_argument("--seed", type=int, default=None, help="seed for refutation sampling")
    sub = parser.add_subparsers(dest="command", required=True)

    def gadget_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--h", type=int, default=None, help="size of G1")
        p.add_argument("--k", type=int, default=None, help="size of G5")

    def report_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--report-dir", type=Path, default=None, help="write <name>_report.xml here")

    p = sub.add_parser("gadget", help="write a gadget game")
    p.add_argument("id")
    gadget_args(p)
    p.add_argument("-o", "--out", type=Path)
    p.set_defaults(func=run_gadget)

    p = sub.add_parser("gadget-verify", help="check a gadget's claims")
    p.add_argument("id")
    gadget_args(p)
    p.add_argument("--samples", type=int, default=2_000)
    report_args(p)
    p.set_defaults(func=run_gadget_verify)

    p = sub.add_parser("sat-count", help="count satisfying assignments")
    p.add_argument("cnf", type=Path)
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("-o", "--out", type=Path)
    p.set_defaults(func=run_sat_count)

    for name, func in (("reduce", run_reduce), ("reduce-check", run_reduce_check)):
        p = sub.add_parser(name, help="build the reduction game" if name == "reduce" else "check the reduction")
        p.add_argument("--gadget", required=True, help="gadget id or game JSON")
        p.add_argument("--cnf", type=Path, required=True)
        gadget_args(p)
        if name == "reduce":
            p.add_argument("--players", type=int, default=None)
            p.add_argument("-o", "--out", type=Path)
            p.add_argument("--layout", type=Path)
        else:
            p.add_argument("--samples", type=int, default=1_000)
            report_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("symmetrize", help="GHR symmetrization")
    p.add_argument("game", type=Path)
    p.add_argument("-o", "--out", type=Path)
    p.add_argument("--layout", type=Path)
    p.set_defaults(func=run_symmetrize)

    p = sub.add_parser("embed-diagonal", help="append the diagonal strategies")
    p.add_argument("game", type=Path)
    p.add_argument("--layout", type=Path, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--out", type=Path)
    p.set_defaults(func=run_embed_diagonal)

    p = sub.add_parser("pup-complete", help="pure equilibrium or PUP completion")
    p.add_argument("game", type=Path)
    p.add_argument("-o", "--out", type=Path)
    p.set_defaults(func=run_pup_complete)

    p = sub.add_parser("enumerate", help="all equilibria of a bimatrix game")
    p.add_argument("game", type=Path)
    p.add_argument("--symmetric", action="store_true", help="symmetric equilibria only")
    p.add_argument("-o", "--out", type=Path)
    p.set_defaults(func=run_enumerate)

    p = sub.add_parser("verify", help="test a profile for equilibrium")
    p.add_argument("game", type=Path)
    p.add_argument("profile", type=Path)
    p.add_argument("--field", choices=["rational", "quad_ext"], default=None)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("ghr-count", help="check |NE(GHR(G))| = N(N+2)")
    p.add_argument("game", type=Path)
    report_args(p)
    p.set_defaults(func=run_ghr_count)

    p = sub.add_parser("scenario", help="run a prebuilt scenario suite")
    p.add_argument("id", help="group1..group4, symmetric_nash_witness, rational_nash_witness")
    p.add_argument("--cnf", type=Path, default=None)
    p.add_argument("--k", type=int, default=None, help="diagonal size k, required by group4")
    report_args(p)
    p.set_defaults(func=run_scenario_command)

    return parser


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID_INPUT if exc.code else EXIT_OK

    settings = get_settings()
    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.log_level)
    if args.jobs is None:
        args.jobs = settings.jobs
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INVALID_INPUT

    try:
        return args.func(args)
    except WinLoseLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
