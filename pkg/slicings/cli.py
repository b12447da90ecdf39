"""
Command line front end: ``slicings <verb> ...``.
"""
import argparse
import logging
import sys
from typing import (
    List,
    Optional,
    Sequence,
    TextIO,
)

from slicings.chains import (
    Chain,
    hn_filtration,
)
from slicings.checks import (
    SUITES,
    SuiteConfig,
    run_suite,
)
from slicings.codec import (
    default_codec,
)
from slicings.constants import (
    DEFAULT_DIM_BOUND,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    SUITE_DIM_BOUND,
)
from slicings.exceptions import (
    DecodingError,
    ParseError,
)
from slicings.grammar import (
    parse_module,
)
from slicings.lattice import (
    lattice_for,
    maximal_green_sequences,
)
from slicings.space import (
    compactness_report,
    distance,
    distance_filt_formula,
    distance_matrix,
    nerve,
    separated_family,
)
from slicings.stability import (
    check_weak_seesaw,
    eta_pm,
    is_semistable,
)
from slicings.utils.numeric import (
    format_rational,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def _load_chain(path: str, n: Optional[int] = None) -> Chain:
    chain = default_codec.decode_chain(default_codec.load(path))
    if n is not None and chain.lattice.n != n:
        raise ValueError('{} describes a chain for n={}, not n={}'.format(
            path,
            chain.lattice.n,
            n,
        ))

    return chain


def _sequence_str(sequence: Sequence[int]) -> str:
    return ' > '.join(str(class_id) for class_id in sequence)


#
# Verbs
#
def cmd_tors(args: argparse.Namespace, out: TextIO) -> int:
    lattice = lattice_for(args.n)
    if args.json:
        out.write(default_codec.dumps(default_codec.encode_lattice(lattice)))
    elif args.dot:
        out.write(default_codec.lattice_to_dot(lattice))
    else:
        for torsion_class in lattice:
            out.write('{}\t{}\n'.format(torsion_class.id, torsion_class))
        out.write('count: {}\n'.format(len(lattice)))

    return EXIT_OK


def cmd_hasse(args: argparse.Namespace, out: TextIO) -> int:
    lattice = lattice_for(args.n)
    if args.dot:
        out.write(default_codec.lattice_to_dot(lattice))
        return EXIT_OK

    for edge in lattice.hasse_edges:
        out.write('{}\t{}\t{}\n'.format(edge.upper, edge.lower, edge.brick))

    return EXIT_OK


def cmd_mgs(args: argparse.Namespace, out: TextIO) -> int:
    sequences = maximal_green_sequences(lattice_for(args.n))
    for sequence in sequences:
        out.write(_sequence_str(sequence) + '\n')
    out.write('count: {}\n'.format(len(sequences)))

    return EXIT_OK


def cmd_hn(args: argparse.Namespace, out: TextIO) -> int:
    chain = _load_chain(args.chain, args.n)
    module = parse_module(args.module)
    filtration = hn_filtration(chain, module)

    out.write('layer\tphase\tfactor\n')
    for layer in filtration.layers:
        out.write('{}\t{}\t{}\n'.format(
            layer.subobject,
            format_rational(layer.phase),
            layer.factor,
        ))

    return EXIT_OK


def cmd_dist(args: argparse.Namespace, out: TextIO) -> int:
    if args.matrix:
        chains = [_load_chain(path) for path in args.matrix]
        matrix = distance_matrix(chains)
        if args.csv:
            out.write(default_codec.matrix_to_csv(args.matrix, matrix))
        else:
            for row in matrix:
                out.write('\t'.join(format_rational(value) for value in row) + '\n')
        return EXIT_OK

    if args.chain1 is None or args.chain2 is None:
        raise ValueError('dist needs --chain1 and --chain2, or --matrix')

    first, second = _load_chain(args.chain1), _load_chain(args.chain2)
    value = distance(first, second)
    out.write(format_rational(value) + '\n')

    if args.filt_check:
        reformulated = distance_filt_formula(first, second)
        out.write('filt: {}\n'.format(format_rational(reformulated)))
        if reformulated != value:
            return EXIT_CHECK_FAILED

    return EXIT_OK


def cmd_nerve(args: argparse.Namespace, out: TextIO) -> int:
    lattice = lattice_for(args.n)

    if args.separated:
        family = separated_family(lattice)
        labels = [str(torsion_class) for torsion_class in lattice]
        out.write(default_codec.matrix_to_csv(labels, distance_matrix(family)))
        return EXIT_OK

    complex_ = nerve(lattice)
    if args.json:
        out.write(default_codec.dumps(default_codec.encode_nerve(complex_)))
        return EXIT_OK

    report = compactness_report(lattice)
    out.write('f-vector: {}\n'.format(' '.join(str(count) for count in report.f_vector)))
    out.write('facets: {}\n'.format(report.facets))
    for facet in complex_.facets:
        out.write(_sequence_str(facet) + '\n')
    out.write(report.verdict + '\n')

    return EXIT_OK


def cmd_wsc(args: argparse.Namespace, out: TextIO) -> int:
    wsc = default_codec.decode_wsc(default_codec.load(args.spec))

    if args.etapm:
        plus, minus = eta_pm(wsc)
        out.write(default_codec.dumps({
            'eta_plus': default_codec.encode_chain(plus),
            'eta_minus': default_codec.encode_chain(minus),
        }))
        return EXIT_OK

    if args.seesaw:
        verdict = check_weak_seesaw(wsc, dim_bound=args.dim_bound)
        out.write('tested: {}\n'.format(verdict.tested))
        out.write('weak: {}\n'.format('pass' if verdict.passed else 'fail'))
        if verdict.witness is not None:
            out.write('witness: {}\n'.format(' -> '.join(str(m) for m in verdict.witness)))
        out.write('strict: {}\n'.format('pass' if verdict.strict_passed else 'fail'))
        if verdict.strict_witness is not None:
            out.write('strict witness: {}\n'.format(
                ' -> '.join(str(m) for m in verdict.strict_witness),
            ))
        return EXIT_OK if verdict.passed else EXIT_CHECK_FAILED

    module = parse_module(args.semistable)
    semistable = is_semistable(wsc, module, args.dim_bound)
    out.write('phase: {}\n'.format(format_rational(wsc.phase(module))))
    out.write('semistable: {}\n'.format('true' if semistable else 'false'))

    return EXIT_OK


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    config = SuiteConfig(args.n, args.dim_bound, args.seed, args.samples)
    results = run_suite(args.suite, config)
    for result in results:
        out.write(str(result) + '\n')

    failed = sum(1 for result in results if not result.passed)
    out.write('{} passed, {} failed\n'.format(len(results) - failed, failed))

    return EXIT_CHECK_FAILED if failed else EXIT_OK


#
# Parser
#
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true', help='log at DEBUG level')

    parser = argparse.ArgumentParser(
        prog='slicings',
        description='Chains of torsion classes, weak stability conditions and slicings '
                    'over linearly oriented type A quivers.',
    )
    verbs = parser.add_subparsers(dest='verb', metavar='verb')
    verbs.required = True

    tors = verbs.add_parser('tors', parents=[common], help='enumerate torsion classes')
    tors.add_argument('--n', type=int, required=True)
    output = tors.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true')
    output.add_argument('--dot', action='store_true')
    tors.set_defaults(handler=cmd_tors)

    hasse = verbs.add_parser('hasse', parents=[common], help='covering relations with bricks')
    hasse.add_argument('--n', type=int, required=True)
    hasse.add_argument('--dot', action='store_true')
    hasse.set_defaults(handler=cmd_hasse)

    mgs = verbs.add_parser('mgs', parents=[common], help='maximal green sequences')
    mgs.add_argument('--n', type=int, required=True)
    mgs.set_defaults(handler=cmd_mgs)

    hn = verbs.add_parser('hn', parents=[common], help='Harder-Narasimhan filtration')
    hn.add_argument('--n', type=int, required=True)
    hn.add_argument('--chain', required=True, metavar='FILE')
    hn.add_argument('--module', required=True, metavar='STR')
    hn.set_defaults(handler=cmd_hn)

    dist = verbs.add_parser('dist', parents=[common], help='distance between chains')
    dist.add_argument('--chain1', metavar='FILE')
    dist.add_argument('--chain2', metavar='FILE')
    dist.add_argument('--filt-check', action='store_true')
    dist.add_argument('--matrix', nargs='+', metavar='FILE')
    dist.add_argument('--csv', action='store_true')
    dist.set_defaults(handler=cmd_dist)

    nerve_ = verbs.add_parser('nerve', parents=[common], help='nerve of the torsion lattice')
    nerve_.add_argument('--n', type=int, required=True)
    nerve_.add_argument('--json', action='store_true')
    nerve_.add_argument('--separated', action='store_true')
    nerve_.set_defaults(handler=cmd_nerve)

    wsc = verbs.add_parser('wsc', parents=[common], help='weak stability condition queries')
    wsc.add_argument('--spec', required=True, metavar='FILE')
    wsc.add_argument('--dim-bound', type=int, default=DEFAULT_DIM_BOUND)
    query = wsc.add_mutually_exclusive_group(required=True)
    query.add_argument('--etapm', action='store_true')
    query.add_argument('--seesaw', action='store_true')
    query.add_argument('--semistable', metavar='STR')
    wsc.set_defaults(handler=cmd_wsc)

    check = verbs.add_parser('check', parents=[common], help='run invariant suites')
    check.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    check.add_argument('--n', type=int, required=True)
    check.add_argument('--dim-bound', type=int, default=SUITE_DIM_BOUND)
    check.add_argument('--seed', type=int, default=DEFAULT_SEED)
    check.add_argument('--samples', type=int, default=DEFAULT_SAMPLES)
    check.set_defaults(handler=cmd_check)

    return parser


def run(argv: Optional[List[str]] = None,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr

    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=err,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )
    logger.debug('Running %s', args.verb)

    try:
        return args.handler(args, out)
    except (ParseError, DecodingError, ValueError) as e:
        err.write('error: {}\n'.format(e))
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())
