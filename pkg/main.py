import json
import sys
from typing import List, Optional, TextIO

from configs.config import ArgumentError, get_args
from decide import bounded_countermodel_search, countermodel, global_reduction, sat, translate
from models import dump_model, load_model, model_to_dict
from proof import check_proofs, load_proof
from semantics import belnap_table, check_filtration_lemma, filtrate, fl_closure, valid_in_model
from syntax import parse_formula
from utils import BPDLError, Logger, set_seed

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def _read(path: str) -> str:
    with open(path, mode='r', encoding='utf-8') as f:
        return f.read()


def _formula(args):
    text = args.formula if args.formula is not None else _read(args.formula_file).strip()
    return parse_formula(text)


def _premises(path: str):
    lines = [line.strip() for line in _read(path).splitlines()]
    return [parse_formula(line) for line in lines if line and not line.startswith('#')]


def _print_witness(out: TextIO, model, state: str):
    print(dump_model(model), file=out)
    print(f"state: {state}", file=out)


def _validity(out: TextIO, verdict) -> int:
    if not verdict.is_sat:
        print("VALID", file=out)
        return EXIT_OK
    print("NOT_VALID", file=out)
    _print_witness(out, verdict.witness, verdict.state)
    return EXIT_NEGATIVE


def dispatch(args, out: TextIO) -> int:
    """Run one parsed command, writing results to ``out``; returns the exit code"""
    logger = Logger("cli")
    logger.info(f"Run {Logger.get_run_id()}: {args.command}")
    if logger.get_logger_path() is not None:
        logger.debug(f"Logging to {logger.get_logger_path('run')} "
                     f"and {logger.get_logger_path('debug')}")

    if args.command == 'check':
        model = load_model(_read(args.model))
        phi = _formula(args)
        for name, value in belnap_table(model, phi):
            print(f"state {name}: {value}", file=out)
        print(f"valid: {'true' if valid_in_model(model, phi) else 'false'}", file=out)
        return EXIT_OK

    elif args.command == 'sat':
        verdict = sat(_formula(args), args.type_limit)
        if not verdict.is_sat:
            print("UNSAT", file=out)
            return EXIT_NEGATIVE
        print("SAT", file=out)
        _print_witness(out, verdict.witness, verdict.state)
        return EXIT_OK

    elif args.command == 'valid':
        return _validity(out, countermodel(_formula(args), args.type_limit))

    elif args.command == 'global':
        reduction = global_reduction(_premises(args.premises), _formula(args))
        logger.debug(f"Global consequence reduced to {reduction}")
        return _validity(out, countermodel(reduction, args.type_limit))

    elif args.command == 'fl':
        for member in fl_closure(_formula(args)):
            print(member, file=out)
        return EXIT_OK

    elif args.command == 'filtrate':
        model = load_model(_read(args.model))
        phi = _formula(args)
        filtration = filtrate(model, fl_closure(phi))
        if model.size <= args.filtration_max_states:
            report = check_filtration_lemma(model, phi, args.filtration_max_states)
            if not report.ok:
                logger.warning(f"Filtration lemma violations: {report.violations}")
        result = {"model": model_to_dict(filtration.quotient), "classes": filtration.class_map()}
        print(json.dumps(result, indent=2, sort_keys=True), file=out)
        return EXIT_OK

    elif args.command == 'translate':
        t, f = translate(_formula(args))
        print(f"t: {t}", file=out)
        print(f"f: {f}", file=out)
        return EXIT_OK

    elif args.command == 'prove':
        docs = [load_proof(_read(path), name=path) for path in args.proof]
        results = check_proofs(docs, args.n_jobs)
        for path, result in zip(args.proof, results):
            print(str(result) if len(docs) == 1 else f"{path}: {result}", file=out)
        return EXIT_OK if all(r.accepted for r in results) else EXIT_NEGATIVE

    elif args.command == 'search':
        found = bounded_countermodel_search(_formula(args), args.max_states)
        if found is None:
            print("NOT_FOUND", file=out)
            return EXIT_NEGATIVE
        print("FOUND", file=out)
        _print_witness(out, *found)
        return EXIT_OK

    else:
        logger.error(f"Unknown command: {args.command}")
        raise ValueError(f"Unknown command: {args.command}")


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Command-line entry point

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        stdout: Stream for results
        stderr: Stream for the one-line diagnostic on failure

    Returns:
        0 for SAT/VALID/FOUND/ACCEPTED and informational commands, 1 for
        UNSAT/NOT_VALID/NOT_FOUND/REJECTED, 2 for errors
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = get_args(argv)
        Logger.initialize(log_dir=args.log_dir, console_level=args.console_level)
        set_seed(args.seed)
        return dispatch(args, out)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except (ArgumentError, BPDLError, OSError, ValueError) as e:
        Logger("cli").debug(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=err)
        return EXIT_ERROR
    except RecursionError:
        Logger("cli").debug("Recursion limit reached")
        print("error: input is nested too deeply", file=err)
        return EXIT_ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
