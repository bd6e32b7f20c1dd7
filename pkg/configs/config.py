import argparse
import os
from functools import lru_cache
from typing import List, Optional

import yaml

CONFIG_DIR = os.path.dirname(os.path.abspath(__file__))
DEFAULT_CONFIG = os.path.join(CONFIG_DIR, 'bpdl.yaml')
AXIOMS_FILE = os.path.join(CONFIG_DIR, 'axioms.yaml')

COMMANDS = ('check', 'sat', 'valid', 'global', 'fl', 'filtrate', 'translate', 'prove', 'search')


def str2bool(v):
    if isinstance(v, bool):
        return v
    if v.lower() in ('yes', 'true', 't', 'y', '1'):
        return True
    elif v.lower() in ('no', 'false', 'f', 'n', '0'):
        return False
    else:
        raise argparse.ArgumentTypeError('Boolean value expected.')


def load_yaml(path: str) -> dict:
    with open(path, mode='r', encoding='utf-8') as config_file:
        return yaml.load(config_file, Loader=yaml.FullLoader)


@lru_cache(maxsize=None)
def _cached(path: str) -> dict:
    return load_yaml(path)


def load_config(path: Optional[str] = None) -> dict:
    """Tool defaults; ``path`` defaults to configs/bpdl.yaml next to this module"""
    config = _cached(os.path.abspath(path or DEFAULT_CONFIG))
    # callers may edit their copy
    return {key: dict(value) if isinstance(value, dict) else value for key, value in config.items()}


class ArgumentError(Exception):
    """Raised instead of exiting when the command line is malformed"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def _formula_source(parser: argparse.ArgumentParser, required: bool = True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('-f', '--formula', default=None, type=str, help='Formula in concrete syntax')
    group.add_argument('--formula-file', default=None, type=str, help='File holding one formula')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='bpdl', description='Four-valued propositional dynamic logic toolkit')
    parser.add_argument('--config', default=None, type=str, help='YAML file overriding configs/bpdl.yaml')
    parser.add_argument('--log-dir', default=None, type=str, help='Write run and debug logs here')
    parser.add_argument('--verbose', default=False, type=str2bool, help='Log INFO messages to stderr')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    check = sub.add_parser('check', help='Per-state Belnap values of a formula in a model')
    check.add_argument('-m', '--model', required=True, type=str, help='Model file (JSON)')
    _formula_source(check)

    for name, text in (('sat', 'Decide satisfiability'), ('valid', 'Decide validity')):
        cmd = sub.add_parser(name, help=text)
        _formula_source(cmd)
        cmd.add_argument('--type-limit', default=None, type=int, help='Hintikka type ceiling')

    glob = sub.add_parser('global', help='Decide global consequence from premises')
    glob.add_argument('-p', '--premises', required=True, type=str, help='Premise file, one formula per line')
    _formula_source(glob)
    glob.add_argument('--type-limit', default=None, type=int, help='Hintikka type ceiling')

    fl = sub.add_parser('fl', help='Fischer-Ladner closure of a formula')
    _formula_source(fl)

    filtrate = sub.add_parser('filtrate', help='Filtrate a model through the closure of a formula')
    filtrate.add_argument('-m', '--model', required=True, type=str, help='Model file (JSON)')
    _formula_source(filtrate)

    translate = sub.add_parser('translate', help='Verification and falsification conditions')
    _formula_source(translate)

    prove = sub.add_parser('prove', help='Check a Hilbert-style proof file')
    prove.add_argument('--proof', required=True, nargs='+', type=str, help='Proof file(s) (JSON)')
    prove.add_argument('--n-jobs', default=None, type=int, help='Parallel workers for several files')

    search = sub.add_parser('search', help='Exhaustive search for a small model of a formula')
    _formula_source(search)
    search.add_argument('--max-states', default=None, type=int, help='Largest model size tried')
    return parser


def get_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse the command line and fill unset options from the YAML defaults

    Raises:
        ArgumentError: On a malformed command line
    """
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    args.seed = config.get('seed', 42)

    if getattr(args, 'type_limit', None) is None and hasattr(args, 'type_limit'):
        args.type_limit = config['decide']['type_limit']
    if getattr(args, 'max_states', None) is None and hasattr(args, 'max_states'):
        args.max_states = config['search']['max_states']
    if getattr(args, 'n_jobs', None) is None and hasattr(args, 'n_jobs'):
        args.n_jobs = config['proof']['n_jobs']
    args.filtration_max_states = config['filtration']['max_states']

    logging_config = config.get('logging', {})
    if args.log_dir is None:
        args.log_dir = logging_config.get('log_dir')
    args.console_level = 'INFO' if args.verbose else logging_config.get('console_level', 'WARNING')
    return args
