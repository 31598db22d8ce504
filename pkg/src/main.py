"""Command-line front end for the CWS code toolkit."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .bitgraph import enumerate_classes, from_graph6, random_graph
from .bounds import load_reference, lp_bound_table, lp_mismatches, reference_index, singleton_bound
from .config import (
    GA_CROSSOVER_PROB,
    GA_ELITISM,
    GA_GENERATIONS,
    GA_MUTATION_PROB,
    GA_POPULATION,
    GA_TOURNAMENT,
    GA_UNIFORM_EXCHANGE_PROB,
    OUTPUT_DIR,
    PLS_ATTEMPTS,
    PLS_MAX_SELECTIONS,
    REFERENCE_BOUNDS_FILE,
    RESULT_CACHE_FILE,
)
from .cwsmap import CodeFileError, load_code, read_code_file, verify_code
from .models import CROSSOVER_KINDS, MUTATION_KINDS, CwsCode, GaConfig, format_word
from .output import ReportWriter
from .pauli import parse_error_set_spec
from .qoracle import detection_check
from .rng import as_rng
from .search import (
    RELATION_NAMES,
    SearchCampaign,
    compare_crossovers,
    elitism_monotone,
    one_sided_pvalues,
    order_histogram,
)
from .state import ResultCache

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.StreamHandler(sys.stdout),
        ],
    )


def banner(title: str):
    logger.info("=" * 60)
    logger.info(title)
    logger.info("=" * 60)


def phase(title: str):
    logger.info("")
    logger.info(title)
    logger.info("-" * 40)


def _relation_for(args, error_set) -> str:
    if args.relation:
        return args.relation
    return "lc" if error_set.kind.family == "symmetric" else "iso"


def _solver_spec(args) -> str:
    if args.solver == "pls":
        return f"pls:{args.attempts}:{args.selections}"
    return args.solver


def _ga_config(args, n: int) -> GaConfig:
    params = dict(
        crossover_prob=args.ga_crossover_prob,
        mutation_prob=args.ga_mutation_prob,
        elitism=args.ga_elitism,
        crossover=args.ga_crossover,
        exchange_prob=args.ga_exchange_prob,
        mutation=args.ga_mutation,
        seed=args.seed,
    )
    sizes = dict(population=args.ga_population, generations=args.ga_generations, tournament=args.ga_tournament)
    params.update({k: v for k, v in sizes.items() if v is not None})
    if args.ga_production:
        return GaConfig.production(n, **params)
    return GaConfig(n=n, **params)


def cmd_enumerate(args) -> int:
    banner(f"Enumerating graph classes: n={args.n}, relation={args.relation}")
    classes = enumerate_classes(args.n, RELATION_NAMES[args.relation])
    writer = ReportWriter(args.out)
    listing, _ = writer.write_classes(args.n, args.relation, classes)
    logger.info(f"{len(classes)} classes covering {sum(c.class_size for c in classes)} labeled graphs")
    logger.info(f"Listing: {listing}")
    return 0


def cmd_search(args) -> int:
    error_set = parse_error_set_spec(args.error_set, args.n, args.d)
    relation = _relation_for(args, error_set)
    solver = _solver_spec(args)
    banner(f"CWS search: mode={args.mode}, n={args.n}, error set={error_set.descriptor} ({len(error_set)} ops)")

    cache = None if args.no_cache else ResultCache(args.cache)
    if cache is not None and cache.last_run():
        logger.info(f"Result cache last updated {cache.last_run().isoformat()}")

    campaign = SearchCampaign(
        mode=args.mode,
        error_set=error_set,
        solver=solver,
        seed=args.seed,
        jobs=args.jobs,
        relation=relation,
        samples=args.samples,
        ga_config=_ga_config(args, args.n) if args.mode == "ga" else None,
        ga_instances=args.ga_instances,
        min_order=args.min_order,
        escalate_attempts=args.escalate_attempts,
        cache=cache,
        oracle=not args.no_oracle,
        quiet=args.quiet,
    )

    phase("Phase 1: Solving candidate graphs...")
    report = campaign.run()

    phase("Phase 2: Writing results...")
    writer = ReportWriter(args.out)
    stem = f"search_{args.mode}_n{args.n}_{error_set.descriptor.replace(':', '-')}"
    writer.write_search_report(report, stem)
    best = report.best_rows()
    if best:
        row = best[0]
        code = CwsCode(from_graph6(row.graph6), tuple(row.codewords), error_set.content_hash, row.pure)
        writer.write_code(code, error_set, f"{stem}_best.code")

    summary = report.summary()
    fractions = summary["optimal_fractions"]
    banner("COMPLETE!")
    logger.info(f"Graphs solved: {len(report.rows)} (skipped {report.skipped}, failed {report.failures})")
    logger.info(f"Best K: {report.best_K}, attained by {len(best)} candidates")
    logger.info(f"Optimal fractions: classes {fractions['classes']:.3f}, "
                f"iso {fractions['iso']:.3f}, labeled {fractions['labeled']:.3f}")
    for K, counts in report.size_histogram().items():
        logger.info(f"  K={K}: {counts['classes']} classes, {counts['iso']} iso, {counts['labeled']} labeled")
    if report.verification_failures:
        logger.error(f"{report.verification_failures} best codes failed re-verification")
    return 1 if report.failures or report.verification_failures else 0


def cmd_verify(args) -> int:
    banner(f"Verifying code file: {args.code_file}")
    try:
        record = read_code_file(args.code_file)
        explicit = parse_error_set_spec(args.error_set, record.n, args.d) if args.error_set else None
        graph, error_set, words = load_code(record, explicit)
    except (CodeFileError, ValueError, OSError) as e:
        logger.error(f"Cannot read code file: {e}")
        return 2

    verdict = verify_code(graph, error_set, words)
    logger.info(f"n={record.n} K={len(words)} error set={error_set.descriptor}")
    if verdict.ok:
        logger.info(f"Classical conditions: OK ({'pure' if verdict.pure else 'impure'})")
    else:
        logger.error(f"Classical conditions: FAILED, {verdict.violation.describe(record.n)}")

    ok = verdict.ok
    if args.oracle:
        result = detection_check(graph, words, error_set)
        if result.ok:
            logger.info("Quantum oracle: OK")
        else:
            op, x_i, x_j = result.violation
            logger.error(f"Quantum oracle: FAILED on {op} between {format_word(x_i, record.n)} "
                         f"and {format_word(x_j, record.n)}")
        if result.ok != verdict.ok:
            logger.error("Oracle and classical conditions disagree")
        ok = ok and result.ok
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    banner(f"LP bounds: n={args.n_min}..{args.n_max}, d={args.d_min}..{args.d_max}")
    n_values = range(args.n_min, args.n_max + 1)
    d_values = range(args.d_min, args.d_max + 1)
    reference = load_reference(args.reference)
    index = reference_index(reference)

    phase("Phase 1: Solving LPs...")
    bounds = lp_bound_table(n_values, d_values)
    pure = {(b.n, b.d): b.integer for b in lp_bound_table(n_values, d_values, pure=True)} if args.pure else {}

    rows = []
    for b in bounds:
        ref = index.get(("nonadditive_K", b.n, b.d))
        mismatch = ref is not None and ref.upper is not None and ref.upper != b.integer
        rows.append([
            b.n, b.d, singleton_bound(b.n, b.d), b.integer, f"{float(b.real):.6f}", pure.get((b.n, b.d), ""),
            ref.lower if ref else "", ref.upper if ref and ref.upper is not None else "",
            ref.mark if ref else "", "yes" if mismatch else "",
        ])
        logger.info(f"n={b.n} d={b.d}: K <= {b.integer}")

    phase("Phase 2: Cross-checking reference bounds...")
    mismatches = lp_mismatches(bounds, reference)
    ReportWriter(args.out).write_table(
        f"bounds_n{args.n_min}-{args.n_max}_d{args.d_min}-{args.d_max}.csv",
        ["n", "d", "singleton", "lp_K", "lp_K_real", "pure_lp_K",
         "reference_lower", "reference_upper", "mark", "mismatch"],
        rows,
    )
    banner("COMPLETE!")
    logger.info(f"{len(bounds)} (n, d) pairs, {len(mismatches)} reference mismatches")
    return 0


def cmd_cluster_hist(args) -> int:
    error_set = parse_error_set_spec(args.error_set, args.n, args.d)
    banner(f"Clique graph order histogram: n={args.n}, error set={error_set.descriptor}")
    if args.samples:
        rng = as_rng(args.seed)
        graphs = [random_graph(args.n, rng) for _ in range(args.samples)]
        source = f"{args.samples} random graphs"
    else:
        relation = _relation_for(args, error_set)
        graphs = [c.representative for c in enumerate_classes(args.n, RELATION_NAMES[relation])]
        source = f"{len(graphs)} {relation} class representatives"
    histogram = order_histogram(graphs, error_set, args.jobs, args.quiet)
    logger.info(f"Histogram over {source}: {len(histogram)} distinct orders")
    name = f"cluster_hist_n{args.n}_{error_set.descriptor.replace(':', '-')}.csv"
    ReportWriter(args.out).write_histogram(name, histogram)
    return 0


def cmd_ga_compare(args) -> int:
    error_set = parse_error_set_spec(args.error_set, args.n, args.d)
    kinds = args.kinds.split(",")
    banner(f"Crossover comparison: n={args.n}, error set={error_set.descriptor}, kinds={kinds}")
    base = _ga_config(args, args.n)
    outcomes = compare_crossovers(base, error_set, kinds, args.instances, args.seed or 0, args.jobs, args.quiet)
    stem = f"ga_compare_n{args.n}_{error_set.descriptor.replace(':', '-')}"
    ReportWriter(args.out).write_ga_campaign(outcomes, stem)

    broken = [kind for kind, runs in outcomes.items() for o in runs if not elitism_monotone(o)]
    if broken and base.elitism >= 1:
        logger.error(f"Best fitness decreased in {len(broken)} instances")
    if "spectral" in outcomes:
        for kind, p in one_sided_pvalues(outcomes).items():
            logger.info(f"spectral > {kind}: one-sided Mann-Whitney p = {p:.4g}")
    return 1 if broken and base.elitism >= 1 else 0


def _add_error_set_args(p):
    p.add_argument("--n", type=int, required=True, help="Number of qubits / graph nodes")
    p.add_argument("--d", type=int, help="Distance for symmetric error sets")
    p.add_argument("--error-set", default="symmetric", help="symmetric[:d] or ad:t:{id|xz|yz}")


def _add_ga_args(p):
    p.add_argument("--ga-production", action="store_true", help="Short runs with small populations")
    p.add_argument("--ga-population", type=int, help=f"Default {GA_POPULATION}")
    p.add_argument("--ga-generations", type=int, help=f"Default {GA_GENERATIONS}")
    p.add_argument("--ga-crossover-prob", type=float, default=GA_CROSSOVER_PROB)
    p.add_argument("--ga-mutation-prob", type=float, default=GA_MUTATION_PROB)
    p.add_argument("--ga-tournament", type=int, help=f"Default {GA_TOURNAMENT}")
    p.add_argument("--ga-elitism", type=int, default=GA_ELITISM)
    p.add_argument("--ga-crossover", choices=CROSSOVER_KINDS, default="spectral")
    p.add_argument("--ga-exchange-prob", type=float, default=GA_UNIFORM_EXCHANGE_PROB)
    p.add_argument("--ga-mutation", choices=MUTATION_KINDS, default="toggle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cws", description="Construct and verify CWS quantum codes")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--quiet", action="store_true", help="No progress bars")
    parser.add_argument("--out", type=Path, default=OUTPUT_DIR, help="Output directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="List isomorphism or LC-isomorphism classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relation", choices=sorted(RELATION_NAMES), default="lc")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="Search graphs for codes")
    _add_error_set_args(p)
    p.add_argument("--mode", choices=("exhaustive", "random", "ga"), default="exhaustive")
    p.add_argument("--relation", choices=sorted(RELATION_NAMES), help="Class relation for exhaustive mode")
    p.add_argument("--solver", choices=("auto", "exact", "pls"), default="auto")
    p.add_argument("--attempts", type=int, default=PLS_ATTEMPTS)
    p.add_argument("--selections", type=int, default=PLS_MAX_SELECTIONS)
    p.add_argument("--samples", type=int, default=100, help="Graphs sampled in random mode")
    p.add_argument("--ga-instances", type=int, default=10)
    p.add_argument("--min-order", type=int, help="Skip graphs with a smaller clique graph order")
    p.add_argument("--escalate-attempts", type=int, help="Re-solve the best candidates with this many PLS attempts")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", type=Path, default=RESULT_CACHE_FILE)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--no-oracle", action="store_true", help="Skip the statevector re-check of best codes")
    _add_ga_args(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="Verify a code file")
    p.add_argument("code_file", type=Path)
    p.add_argument("--error-set", help="Error set to check against (required when the file stores a hash)")
    p.add_argument("--d", type=int)
    p.add_argument("--oracle", action="store_true", help="Also run the exact statevector check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="Tabulate LP bounds")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=15)
    p.add_argument("--d-min", type=int, default=2)
    p.add_argument("--d-max", type=int, default=5)
    p.add_argument("--pure", action="store_true", help="Also compute the pure-code LP bound")
    p.add_argument("--reference", type=Path, default=REFERENCE_BOUNDS_FILE)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cluster-hist", help="Histogram of clique graph orders")
    _add_error_set_args(p)
    p.add_argument("--samples", type=int, default=0, help="Random graphs to sample; 0 iterates class representatives")
    p.add_argument("--relation", choices=sorted(RELATION_NAMES))
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_cluster_hist)

    p = sub.add_parser("ga-compare", help="Compare crossover operators")
    _add_error_set_args(p)
    p.add_argument("--kinds", default="spectral,random")
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    _add_ga_args(p)
    p.set_defaults(func=cmd_ga_compare)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        return args.func(args)
    except ValueError as e:
        logger.error(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
