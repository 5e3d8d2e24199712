"""
Command line surface: `pmb check|basis|verify|gen|betti|support|represent|birth`.

Exit codes are a stable contract: 0 on success, 1 on unreadable or invalid input, 2 when a freeness criterion or a
basis verification fails, 64 on usage errors. Reports go to standard output, diagnostics and logs to standard error.
"""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional

import click

from app.exceptions import EXIT_CRITERIA_FAILURE, EXIT_USAGE, ParseError, PmodError, format_degree
from app.modules.pmod import as_degree
from app.services.modules.basis import ModuleBasis
from app.services.modules.betti import ModuleBetti
from app.services.modules.birth_set import ModuleBirthSet
from app.services.modules.check import ModuleCheck
from app.services.modules.generate import ModuleGenerate
from app.services.modules.represent import ModuleRepresent
from app.services.modules.verify import ModuleVerify
from app.services.supports.classify import SupportClassify
from app.settings import settings
from app.utils.utils import describe_counts

logger = logging.getLogger(__name__)

EXIT_OK = 0


class PmbGroup(click.Group):
    """A command group whose commands return their exit code, with usage errors mapped to 64."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra) -> Any:
        """Run the group without click's own exit handling and return or exit with the command's code."""
        try:
            result = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
        except click.UsageError as e:
            e.show()
            exit_code = EXIT_USAGE
        except click.ClickException as e:
            e.show()
            exit_code = e.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            exit_code = 1
        else:
            exit_code = result if isinstance(result, int) else EXIT_OK
        if standalone_mode:
            sys.exit(exit_code)
        return exit_code


def _read(path: str) -> bytes:
    """Read a file, reporting failures as input errors."""
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror}") from e


def _write(path: Optional[str], data: bytes) -> None:
    """Write to `path`, or to standard output when no path is given."""
    if path is None:
        click.echo(data, nl=False)
        return
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise ParseError(f"Cannot write {path}: {e.strerror}") from e


def _emit_json(report: dict) -> None:
    """Print a report as indented JSON."""
    click.echo(json.dumps(report, indent=2))


def _degree(value: Any) -> str:
    """Render a JSON degree value the way errors render it."""
    return format_degree(as_degree(value))


def handle_errors(command: Callable[..., int]) -> Callable[..., int]:
    """Turn toolkit errors into a message on standard error and the error's exit code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs) -> int:
        """Run the command, returning the exit code of any toolkit error."""
        try:
            return command(*args, **kwargs)
        except PmodError as e:
            logger.debug("%s raised by %s", type(e).__name__, command.__name__)
            click.echo(f"Error: {e}", err=True)
            return e.exit_code

    return wrapper


format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Report format.",
)


@click.group(cls=PmbGroup)
@click.option("--verbose", "-v", is_flag=True, help="Log debug events to standard error.")
def cli(verbose: bool) -> None:
    """Freeness tests and homogeneous bases of persistence modules over Z and Z^2."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.LOG_LEVEL.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


@cli.command()
@click.argument("path")
@format_option
@handle_errors
def check(path: str, output_format: str) -> int:
    """Run the freeness criteria on the module at PATH."""
    report = ModuleCheck(document=_read(path)).get_check()
    if output_format == "json":
        _emit_json(report)
    else:
        for entry in report["checks"]:
            status = "pass" if entry["passed"] else "FAIL"
            reliability = "" if entry["reliable"] else " (unreliable)"
            click.echo(f"{entry['check']}: {status}{reliability} ({len(entry['cells'])} cells)")
            for note in entry["notes"]:
                click.echo(f"  note: {note}")
        click.echo(report["failure"] if report["failure"] else "all criteria hold")
    return EXIT_OK if report["passed"] else EXIT_CRITERIA_FAILURE


@cli.command()
@click.argument("path")
@click.option("--out", type=click.Path(dir_okay=False), help="Where to write the basis document.")
@format_option
@handle_errors
def basis(path: str, out: Optional[str], output_format: str) -> int:
    """Extract a homogeneous basis of the module at PATH."""
    service = ModuleBasis(document=_read(path))
    report = service.get_basis()
    if out is not None:
        _write(out, service.get_basis_document())
    if output_format == "json":
        _emit_json(report)
        return EXIT_OK
    counts = describe_counts({as_degree(entry["degree"]): entry["count"] for entry in report["counts"]})
    click.echo(f"counts: {counts}")
    click.echo(f"generators: {report['generators']}")
    click.echo(f"row operations: {report['rowOperations']}")
    click.echo(f"arithmetic operations: {report['arithOperations']}")
    if out is None:
        for element in report["elements"]:
            click.echo(f"{_degree(element['degree'])}: [{', '.join(element['vector'])}]")
    return EXIT_OK


@cli.command()
@click.argument("module_path")
@click.argument("basis_path")
@format_option
@handle_errors
def verify(module_path: str, basis_path: str, output_format: str) -> int:
    """Check that the basis at BASIS_PATH is a basis of the module at MODULE_PATH."""
    report = ModuleVerify(document=_read(module_path), basis_document=_read(basis_path)).get_verification()
    if output_format == "json":
        _emit_json(report)
    elif report["valid"]:
        click.echo("valid basis")
    else:
        click.echo(f"invalid at degree {_degree(report['degree'])}: {report['reason']}")
    return EXIT_OK if report["valid"] else EXIT_CRITERIA_FAILURE


@cli.command()
@click.option("--seed", type=int, required=True, help="Seed of the pseudorandom generator.")
@click.option("--window", required=True, help="Window bounds 'a,b' for Z or 'a,b,c,d' for Z^2.")
@click.option("--gens", required=True, help="Generator degrees '(d1);(d2);...', each optionally followed by '*k'.")
@click.option("--out", type=click.Path(dir_okay=False), help="Where to write the module document.")
@handle_errors
def gen(seed: int, window: str, gens: str, out: Optional[str]) -> int:
    """Generate a seeded free module fixture."""
    service = ModuleGenerate.from_flags(seed=seed, window=window, generators=gens)
    _write(out, service.get_module_document())
    return EXIT_OK


@cli.command()
@click.argument("path")
@format_option
@handle_errors
def betti(path: str, output_format: str) -> int:
    """Print the number of generators born at each degree of the module at PATH."""
    report = ModuleBetti(document=_read(path)).get_betti()
    if output_format == "json":
        _emit_json(report)
    else:
        for entry in report["table"]:
            click.echo(f"{_degree(entry['degree'])}: {entry['count']}")
        click.echo(f"total: {report['total']}")
    return EXIT_OK


@cli.command()
@click.argument("path")
@format_option
@handle_errors
def support(path: str, output_format: str) -> int:
    """Classify the indicator module of the support described at PATH."""
    report = SupportClassify(document=_read(path)).get_classification()
    if output_format == "json":
        _emit_json(report)
        return EXIT_OK
    minimals = " ".join(_degree(m) for m in report["minimalElements"]) or "none"
    click.echo(f"conclusion: {report['conclusion']}")
    click.echo(f"flat: {str(report['flat']).lower()}")
    click.echo(f"free by construction: {str(report['freeByConstruction']).lower()}")
    click.echo(f"not projective: {str(report['notProjective']).lower()}")
    click.echo(f"witness: {_degree(report['witness']) if report['witness'] else 'none'}")
    click.echo(f"minimal elements: {minimals}")
    for note in report["notes"]:
        click.echo(f"note: {note}")
    return EXIT_OK


@cli.command()
@click.argument("module_path")
@click.argument("basis_path")
@click.argument("element_path")
@format_option
@handle_errors
def represent(module_path: str, basis_path: str, element_path: str, output_format: str) -> int:
    """Write the element at ELEMENT_PATH in terms of the basis at BASIS_PATH."""
    report = ModuleRepresent(
        document=_read(module_path),
        basis_document=_read(basis_path),
        element_document=_read(element_path),
    ).get_representation()
    if output_format == "json":
        _emit_json(report)
        return EXIT_OK
    click.echo(f"degree: {_degree(report['degree'])}")
    for coefficient, element in zip(report["coefficients"], report["elements"]):
        click.echo(f"{coefficient} * {_degree(element['degree'])}: [{', '.join(element['vector'])}]")
    return EXIT_OK


@cli.command()
@click.argument("module_path")
@click.argument("element_path")
@format_option
@handle_errors
def birth(module_path: str, element_path: str, output_format: str) -> int:
    """Print the minimal degrees at which the element at ELEMENT_PATH is born."""
    report = ModuleBirthSet(document=_read(module_path), element_document=_read(element_path)).get_birth_set()
    if output_format == "json":
        _emit_json(report)
        return EXIT_OK
    click.echo(f"degree: {_degree(report['degree'])}")
    click.echo(f"decomposable: {str(report['decomposable']).lower()}")
    click.echo(f"minimal birth degrees: {' '.join(_degree(m) for m in report['minimals'])}")
    return EXIT_OK


def main() -> None:
    """Entry point of the `pmb` script."""
    cli()


if __name__ == "__main__":
    main()
