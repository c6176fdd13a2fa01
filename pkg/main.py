import argparse
import sys

import pandas as pd

import config
from chains import boundary_matrix
from core import connected_components, lattice_point
from documents import load_image, load_map, load_path
from errors import DigitalTopologyError, SearchBoundExceeded
from homology import homology_report, hurewicz_counterexample, induced_homology_map
from homotopy import are_homotopic, are_pointed_homotopic, loop_equivalence_witness
from logger_setup import logger
from maps import is_continuous
from validation import run_theorem_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


def _point(text):
    try:
        return lattice_point(int(c) for c in text.split(','))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def cmd_info(args):
    image = load_image(args.image)
    degrees = pd.Series([image.graph.degree(p) for p in image.points], dtype='int64')
    print(f"points: {len(image)}")
    print(f"dimension: {image.spec.n}")
    if image.is_explicit:
        print("adjacency: explicit")
    else:
        print(f"adjacency: {image.spec}")
    print(f"edges: {image.edge_count}")
    print(f"components: {len(connected_components(image))}")
    if len(image):
        histogram = degrees.value_counts().sort_index()
        print("degrees: " + ", ".join(f"{d}x{c}" for d, c in histogram.items()))
    return EXIT_OK


def cmd_components(args):
    image = load_image(args.image)
    for i, block in enumerate(connected_components(image)):
        print(f"component {i}: " + " ".join(str(list(p)) for p in block))
    return EXIT_OK


def cmd_homology(args):
    image = load_image(args.image)
    for line in homology_report(image, args.max_dim):
        print(line)
    if args.dump_matrices:
        for n in range(args.max_dim + 2):
            print(f"# boundary {n}")
            print(boundary_matrix(image, n).to_text())
    return EXIT_OK


def cmd_check_map(args):
    f = load_map(args.map)
    continuous = is_continuous(f)
    print(f"continuous: {'yes' if continuous else 'no'}")
    return EXIT_OK if continuous else EXIT_FAILED


def cmd_induced(args):
    f = load_map(args.map)
    matrix = induced_homology_map(f, args.dim)
    print(f"H_{args.dim} map: {matrix.rows}x{matrix.cols}")
    for row in matrix.to_dense():
        print(" ".join(str(v) for v in row))
    return EXIT_OK


def cmd_homotopy(args):
    f, g = load_map(args.first), load_map(args.second)
    if args.pointed:
        if args.base is None:
            raise argparse.ArgumentTypeError("--pointed needs --base")
        witness = are_pointed_homotopic(f, g, args.base, f(args.base))
    else:
        witness = are_homotopic(f, g)
    if witness is None:
        print("homotopic: no")
        return EXIT_FAILED
    print(f"homotopic: yes (m = {witness.m})")
    for t, frame in enumerate(witness.frames):
        print(f"frame {t}: " + " ".join(str(list(v)) for v in frame.values))
    return EXIT_OK


def cmd_loops_equal(args):
    f, g = load_path(args.first), load_path(args.second)
    witness = loop_equivalence_witness(f, g, args.bound)
    if witness is None:
        print(f"equivalent: not found within length {args.bound}")
        return EXIT_FAILED
    print(f"equivalent: yes (length {witness.extended_f.m}, m = {witness.homotopy.m})")
    return EXIT_OK


def cmd_verify(args):
    table = run_theorem_suite(seed=args.seed, size=args.size)
    print(table.to_string(index=False))
    return EXIT_OK if table['passed'].all() else EXIT_FAILED


def cmd_hurewicz_demo(args):
    report = hurewicz_counterexample()
    print(f"product equals g: {str(report.product_equals_g).lower()}")
    print(f"loops equivalent: {str(report.loops_equivalent).lower()}")
    print(f"h(f) != h(g): {str(report.images_differ).lower()}")
    return EXIT_OK if report.all_hold else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog='dighom', description='Digital topology and digital homology.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('info', help='sizes and adjacency counts of an image')
    p.add_argument('image')
    p.set_defaults(handler=cmd_info)

    p = sub.add_parser('components', help='connected components of an image')
    p.add_argument('image')
    p.set_defaults(handler=cmd_components)

    p = sub.add_parser('homology', help='homology groups of an image')
    p.add_argument('image')
    p.add_argument('--max-dim', type=int, default=config.DEFAULT_MAX_DIM)
    p.add_argument('--dump-matrices', action='store_true')
    p.set_defaults(handler=cmd_homology)

    p = sub.add_parser('check-map', help='digital continuity of a map')
    p.add_argument('map')
    p.set_defaults(handler=cmd_check_map)

    p = sub.add_parser('induced', help='induced map on homology')
    p.add_argument('map')
    p.add_argument('--dim', type=int, required=True)
    p.set_defaults(handler=cmd_induced)

    p = sub.add_parser('homotopy', help='search for a homotopy between two maps')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--pointed', action='store_true')
    p.add_argument('--base', type=_point)
    p.set_defaults(handler=cmd_homotopy)

    p = sub.add_parser('loops-equal', help='bounded digital loop equivalence')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--bound', type=int, required=True)
    p.set_defaults(handler=cmd_loops_equal)

    p = sub.add_parser('verify', help='run the theorem suite on a random corpus')
    p.add_argument('--corpus', choices=['random'], default='random')
    p.add_argument('--seed', type=int, default=7)
    p.add_argument('--size', type=int, default=25)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('hurewicz-demo', help='the equivalent loops with different h')
    p.set_defaults(handler=cmd_hurewicz_demo)
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logger.info("Running '%s'", args.command)
    try:
        status = args.handler(args)
    except SearchBoundExceeded as e:
        logger.error("%s gave up: %s", args.command, e)
        print(f"search bound exceeded: visited {e.visited} states, cap {e.cap} "
              f"(raise DIGHOM_STATE_CAP); the question is undecided", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (DigitalTopologyError, OSError, argparse.ArgumentTypeError) as e:
        logger.error("%s failed: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    logger.info("'%s' finished with status %d", args.command, status)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
