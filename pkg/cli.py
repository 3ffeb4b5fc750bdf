# cli.py - Command-line front end: reports, scans, word evaluation and exports
import argparse
import logging
import sys

from config import (
    DEFAULT_SCAN_FROM,
    DEFAULT_SCAN_TO,
    DILATATION_TOLERANCE,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    configure_logging,
)
from exact_linalg import char_poly
from exports import (
    graph_dot,
    graph_payload,
    label_sequence_payload,
    scan_csv,
    scan_json,
    spectral_payload,
    to_json,
    topology_payload,
    word_payload,
)
from mapping_class import word_matrix
from surface_model import farthest_graph, label_sequence, validate_k
from surface_topology import band_surface, topology_report
from verification import run_scan, verify
from word_tokens import parse_word

logger = logging.getLogger(__name__)


def cmd_labels(args):
    p = validate_k(args.k)
    sys.stdout.write(to_json(label_sequence_payload(label_sequence(p))))
    return EXIT_OK


def cmd_graph(args):
    p = validate_k(args.k)
    graph = farthest_graph(p)
    if args.format == "dot":
        sys.stdout.write(graph_dot(graph, name=f"G_{p.n}_{p.k}"))
    else:
        sys.stdout.write(to_json(graph_payload(p.k, graph)))
    return EXIT_OK


def cmd_topology(args):
    p = validate_k(args.k)
    report = topology_report(band_surface(p))
    sys.stdout.write(to_json(topology_payload(report)))
    return EXIT_OK


def cmd_word(args):
    p = validate_k(args.k)
    word = parse_word(args.word, p)
    matrix = word_matrix(p, word)
    sys.stdout.write(to_json(word_payload(p.k, word, matrix, char_poly(matrix))))
    return EXIT_OK


def cmd_verify(args):
    p = validate_k(args.k)
    spectral, topology, failures = verify(p, tol=args.tol)

    payload = spectral_payload(spectral)
    payload["topology"] = topology_payload(topology)
    payload["failures"] = list(failures)
    sys.stdout.write(to_json(payload))

    if failures:
        print(f"verification failed for k={p.k}: " + "; ".join(failures), file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_scan(args):
    rows = run_scan(args.k_from, args.k_to, jobs=args.jobs, tol=args.tol)
    if args.format == "json":
        sys.stdout.write(scan_json(rows))
    else:
        sys.stdout.write(scan_csv(rows))

    failing = [row.k for row in rows if not row.ok]
    if failing:
        print(f"verification failed for k in {failing}", file=sys.stderr)
        for row in rows:
            for failure in row.failures:
                print(f"  k={row.k}: {failure}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="golden-surfaces",
        description="Dehn twist matrices and golden-ratio dilatation on the surfaces Σ_{2k,k}.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to standard error (-vv for debug)")
    sub = parser.add_subparsers(dest="command", required=True)

    labels = sub.add_parser("labels", help="cyclic label word of the chord diagram as JSON")
    labels.add_argument("--k", type=int, required=True)
    labels.set_defaults(handler=cmd_labels)

    graph = sub.add_parser("graph", help="export the graph G_{2k,k}")
    graph.add_argument("--k", type=int, required=True)
    graph.add_argument("--format", choices=["dot", "json"], default="json")
    graph.set_defaults(handler=cmd_graph)

    topology = sub.add_parser("topology", help="Euler characteristic, boundary and genus of the band surface")
    topology.add_argument("--k", type=int, required=True)
    topology.set_defaults(handler=cmd_topology)

    word = sub.add_parser("word", help="evaluate a word in t<i>, r, r- (outermost first)")
    word.add_argument("--k", type=int, required=True)
    word.add_argument("--word", default="", help='e.g. "r t1 r r"')
    word.set_defaults(handler=cmd_word)

    verify_cmd = sub.add_parser("verify", help="full spectral and topology verification for one k")
    verify_cmd.add_argument("--k", type=int, required=True)
    verify_cmd.add_argument("--tol", type=float, default=DILATATION_TOLERANCE)
    verify_cmd.set_defaults(handler=cmd_verify)

    scan = sub.add_parser("scan", help="verify every odd k in a range")
    scan.add_argument("--from", dest="k_from", type=int, default=DEFAULT_SCAN_FROM)
    scan.add_argument("--to", dest="k_to", type=int, default=DEFAULT_SCAN_TO)
    scan.add_argument("--format", choices=["csv", "json"], default="csv")
    scan.add_argument("--jobs", type=int, default=1, help="worker processes")
    scan.add_argument("--tol", type=float, default=DILATATION_TOLERANCE)
    scan.set_defaults(handler=cmd_scan)

    return parser


def main(argv=None):
    """
    Run one subcommand.

    Returns:
    - 0 when every check passes, 1 on a verification failure, 2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad flags and 0 for --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging(args.verbose)

    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args)
    except ValueError as exc:
        # Every input problem (bad k, bad token, empty range) is a ValueError subclass
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        # A numeric step (eigenvalue iteration, exact division) failed to certify
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
