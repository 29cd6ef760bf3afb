#!/usr/bin/env python

import sys
import argparse
from rich.console import Console
from rich.table import Table
from fermatlab import FermatLab, __version__
from fermatlab.fermatlab import GEOMETRY_COLUMNS, LATTICE_COLUMNS, NEARMISS_COLUMNS, PYTHAGOREAN_COLUMNS
from fermatlab.utilities import FermatlabError, FermatlabIOError, FermatlabSettingsError, ParserJSON, safe_execute
from fermatlab.utilities.defaults import bounds_presets
from fermatlab.writers import CsvWriter, JsonWriter


EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_IO = 3

SOLUTION_COLUMNS = ['a', 'b', 'c', 'n']


# =============
# Parse Options
# =============
def parse_options(argv=None):

    parser = argparse.ArgumentParser(prog='fermatlab',
                                     description='Exact-arithmetic checks around a^n + b^n = c^n.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-c',
                        metavar='CONFIG',
                        dest='config',
                        type=str,
                        help='Json configuration file. Default is the built-in configuration.',
                        default=None)
    parser.add_argument('--json',
                        dest='json',
                        help='Print results as JSON instead of tables.',
                        default=False,
                        action='store_true')
    parser.add_argument('--out',
                        metavar='PATH',
                        dest='out',
                        type=str,
                        help='Write results to PATH instead of standard output.',
                        default=None)
    parser.add_argument('--seed',
                        metavar='',
                        dest='seed',
                        type=int,
                        help='Random seed for randomized property samples. Default is taken from the configuration.',
                        default=None)
    parser.add_argument('--bounds',
                        metavar='',
                        dest='bounds',
                        type=str.lower,
                        help='Bounds preset. Choices are "small", "default" or "large".',
                        default=None,
                        choices=list(bounds_presets))
    parser.add_argument('-v',
                        metavar='VERBOSITY',
                        dest='verbosity',
                        type=int,
                        help='Verbosity of the log on stderr, from 0 (fatal only) to 5 (debug).',
                        default=None,
                        choices=range(6))

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    audit = subparsers.add_parser('audit', help='Run every registered claim and report verdicts.')
    audit.add_argument('--a-max', dest='a_max', type=int, default=None,
                       help='Largest leg of the exact-solution sweep.')
    audit.add_argument('--n-max', dest='n_max', type=int, default=None,
                       help='Largest exponent of the exact-solution sweep. 2 turns on validation mode.')

    check = subparsers.add_parser('check', help='Every applicable predicate on one (a, b, c, n).')
    for name in 'ABCN':
        check.add_argument(name, type=int)

    pyth = subparsers.add_parser('pyth', help='Primitive Pythagorean triples up to a hypotenuse limit.')
    pyth.add_argument('--hyp-limit', dest='hyp_limit', type=int, required=True)

    solve = subparsers.add_parser('solve', help='Real exponent n with a^n + b^n = c^n.')
    for name in 'ABC':
        solve.add_argument(name, type=int)

    bruteforce = subparsers.add_parser('bruteforce', help='Exhaustive search for exact solutions.')
    bruteforce.add_argument('--a-max', dest='a_max', type=int, required=True)
    bruteforce.add_argument('--n-max', dest='n_max', type=int, required=True)
    bruteforce.add_argument('--validation', dest='validation', default=False, action='store_true',
                            help='Include n = 2, where the primitive Pythagorean triples are expected hits.')

    sweep = subparsers.add_parser('sweep', help='Emit plot data and experiment tables.')
    kinds = sweep.add_subparsers(dest='kind', metavar='KIND')
    kinds.required = True

    geometry = kinds.add_parser('geometry', help='Triangle shape and angle over an (a, b, n) grid. CSV.')
    geometry.add_argument('--a', dest='a_range', type=float, nargs=2, metavar=('LO', 'HI'), required=True)
    geometry.add_argument('--b', dest='b_range', type=float, nargs=2, metavar=('LO', 'HI'), required=True)
    geometry.add_argument('--n', dest='n_range', type=float, nargs=2, metavar=('LO', 'HI'), required=True)
    geometry.add_argument('--step', dest='step', type=float, required=True)

    lattice = kinds.add_parser('lattice', help='Integer c on the arc per a. CSV.')
    lattice.add_argument('--a-min', dest='a_min', type=int, default=1)
    lattice.add_argument('--a-max', dest='a_max', type=int, required=True)
    lattice.add_argument('--n-min', dest='n_min', type=float, default=3.0)

    nearmiss = kinds.add_parser('nearmiss', help='Primitive triples with a small exact defect. CSV.')
    nearmiss.add_argument('--a-max', dest='a_max', type=int, required=True)
    nearmiss.add_argument('--n', dest='n_set', type=int, nargs='+', required=True)
    nearmiss.add_argument('--cap', dest='cap', type=int, required=True)

    conjecture1 = kinds.add_parser('conjecture1', help='Solved exponents of every triple in the arc. JSON.')
    conjecture1.add_argument('--a-max', dest='a_max', type=int, required=True)
    conjecture1.add_argument('--n-max', dest='n_max', type=int, required=True)

    args = parser.parse_args(argv)
    return args


# ====
# Main
# ====
def main(args):
    """Runs one command and returns its exit status."""
    try:
        lab = init_objects(args)
        commands = {'audit': run_audit, 'check': run_check, 'pyth': run_pyth, 'solve': run_solve,
                    'bruteforce': run_bruteforce, 'sweep': run_sweep}
        return commands[args.command](lab, args)
    except FermatlabIOError as error:
        error.report()
        return EXIT_IO
    except FermatlabError as error:
        error.report()
        return EXIT_USAGE


# =========
# Functions
# =========
@safe_execute(FermatlabSettingsError)
def _load_config_dict(config_file):
    if config_file is None:
        return {}
    return ParserJSON(json_file=config_file).parse()


def init_objects(args):
    config = dict(_load_config_dict(args.config))
    general = dict(config.get('general', {}))
    if args.bounds is not None:
        general['bounds'] = args.bounds
    if args.seed is not None:
        general['random_seed'] = args.seed
    if args.verbosity is not None:
        general['verbosity'] = args.verbosity
    config['general'] = general

    lab = FermatLab(config_dict=config)
    return lab


def _writers(lab):
    float_digits = lab.config.get('float_digits')
    return (JsonWriter(float_digits=float_digits, verbosity=lab.verbosity),
            CsvWriter(float_digits=float_digits, verbosity=lab.verbosity))


def emit_rows(lab, args, rows, columns, title, csv_default=False):
    """JSON with --json, CSV with --out or for sweeps, a rich table otherwise."""
    json_writer, csv_writer = _writers(lab)
    if args.json:
        json_writer.write([{column: row[column] for column in columns} for row in rows], args.out)
    elif args.out is not None or csv_default:
        csv_writer.write(rows, columns, args.out)
    else:
        print_rows_as_rich_table(rows, columns, title)


def emit_mapping(lab, args, content, title):
    json_writer, _ = _writers(lab)
    if args.json or args.out is not None:
        json_writer.write(content, args.out)
    else:
        print_mapping_as_rich_table(json_writer.clean(content), title)


def run_audit(lab, args):
    lab.update_bounds(flt_a_max=args.a_max, flt_n_max=args.n_max)
    report = lab.audit(seed=args.seed)

    json_writer, _ = _writers(lab)
    if args.json or args.out is not None:
        json_writer.write(report, args.out)
    else:
        rows = []
        for record in report.claims:
            evidence = record.evidence
            rows.append({'id': record.id, 'kind': record.kind.value, 'verdict': record.verdict.value,
                         'counterexamples': evidence.get('counterexample_count', ''),
                         'reason': evidence.get('reason', '')})
        print_rows_as_rich_table(rows, ['id', 'kind', 'verdict', 'counterexamples', 'reason'],
                                 title=f'Audit (fermatlab {report.tool_version})')
    return report.exit_status


def run_check(lab, args):
    bundle = lab.check(args.A, args.B, args.C, args.N)
    emit_mapping(lab, args, bundle, title=f'Check ({args.A}, {args.B}, {args.C}, n={args.N})')
    if not bundle['triple']['valid']:
        return EXIT_USAGE
    return EXIT_OK


def run_pyth(lab, args):
    rows = lab.pyth(args.hyp_limit)
    emit_rows(lab, args, rows, PYTHAGOREAN_COLUMNS, title=f'Primitive Pythagorean triples, hyp <= {args.hyp_limit}')
    return EXIT_OK


def run_solve(lab, args):
    solution = lab.solve(args.A, args.B, args.C)
    emit_mapping(lab, args, solution, title=f'Exponent of ({args.A}, {args.B}, {args.C})')
    return EXIT_OK


def run_bruteforce(lab, args):
    solutions = lab.bruteforce(args.a_max, args.n_max, validation=args.validation)
    rows = [solution.to_dict() for solution in solutions]
    emit_rows(lab, args, rows, SOLUTION_COLUMNS, title=f'Exact solutions, a <= {args.a_max}, n <= {args.n_max}')
    if any(solution.n >= 3 for solution in solutions):
        return EXIT_FALSIFIED
    return EXIT_OK


def run_sweep(lab, args):
    json_writer, csv_writer = _writers(lab)
    if args.kind == 'geometry':
        rows = lab.sweep_geometry(tuple(args.a_range), tuple(args.b_range), tuple(args.n_range), args.step)
        csv_writer.write(rows, GEOMETRY_COLUMNS, args.out)
    elif args.kind == 'lattice':
        rows = lab.sweep_lattice(args.a_min, args.a_max, args.n_min)
        csv_writer.write(rows, LATTICE_COLUMNS, args.out)
    elif args.kind == 'nearmiss':
        rows = lab.sweep_nearmiss(args.a_max, args.n_set, args.cap)
        csv_writer.write(rows, NEARMISS_COLUMNS, args.out)
    elif args.kind == 'conjecture1':
        report = lab.sweep_conjecture1(args.a_max, args.n_max)
        json_writer.write(report, args.out)
    return EXIT_OK


def _cell(value):
    if isinstance(value, float):
        return f'{value:.12g}'
    return str(value)


def print_rows_as_rich_table(rows, columns, title):
    console = Console()

    table = Table(show_header=True, header_style="bold red", title=title)
    table.add_column("N")
    for col in columns:
        table.add_column(col)

    for i, row in enumerate(rows):
        row_str = [f'{i + 1:d}'] + [_cell(row[col]) for col in columns]
        table.add_row(*row_str)

    console.print(table)


def print_mapping_as_rich_table(mapping, title):
    console = Console()

    table = Table(show_header=True, header_style="bold red", title=title)
    table.add_column("field")
    table.add_column("value")
    for key, value in mapping.items():
        table.add_row(key, _cell(value))

    console.print(table)


def entry_point(argv=None):
    args = parse_options(argv)
    sys.exit(main(args))


if __name__ == "__main__":
    entry_point()
