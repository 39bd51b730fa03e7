"""CLI for mixdiff - collapse-aware expansions of mixed partial derivatives."""
import json
from contextlib import contextmanager
from dataclasses import fields
from pathlib import Path
from typing import Iterator, Optional

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from . import __version__
from .config import ENV_VARS, current_guards, resolve_limit
from .core import bell, multiplicity, multiplicity_bruteforce, stirling2
from .cumulants import (
    CumulantAssignment,
    MomentAssignment,
    cumulants_from_moments,
    load_assignment,
    moment_from_cumulants,
)
from .errors import GuardExceededError, MixdiffError
from .expansion import expand_composition, expand_exponential, expand_product
from .parser import format_partition, format_signature, parse_partition, parse_signature
from .renderers import get_renderer

console = Console()
err_console = Console(stderr=True, soft_wrap=True)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_MISMATCH = 4

MODES = ("composition", "exponential", "product")
VERIFY_KINDS = ("multiplicity", "paths", "composition", "product", "cumulants")

app = typer.Typer(
    name="mixdiff",
    help="Expand mixed partial derivatives of f(y) and uv with collapse-aware coefficients.",
    add_completion=False,
    no_args_is_help=True,
)


def _fail(message: str, code: int) -> None:
    err_console.print(f"[red]Error:[/] {escape(message)}", highlight=False)
    raise typer.Exit(code)


@contextmanager
def handle_errors() -> Iterator[None]:
    """Map library exceptions onto the exit-code contract."""
    try:
        yield
    except GuardExceededError as e:
        _fail(str(e), EXIT_GUARD)
    except FileNotFoundError as e:
        _fail(f"File not found: {e.filename}", EXIT_INPUT)
    except (MixdiffError, ValueError, LookupError, OSError) as e:
        _fail(str(e), EXIT_INPUT)


@app.command("expand")
def cmd_expand(
    signature: str = typer.Argument(..., help='Derivative signature, e.g. "x1 x2^2"'),
    mode: str = typer.Option("composition", "--mode", "-m", help="composition, exponential or product"),
    output_format: str = typer.Option("text", "--format", "-f", help="text, latex or json"),
    max_size: Optional[int] = typer.Option(None, "--max-size", help="Override the multiset-size guard"),
):
    """Print the collected expansion of a mixed partial derivative."""
    with handle_errors():
        if mode not in MODES:
            raise ValueError(f"Unknown mode '{mode}'. Available: {', '.join(MODES)}")
        renderer = get_renderer(output_format)()
        tau = parse_signature(signature)

        if mode == "product":
            limit = resolve_limit(max_size, 'max_multiset_size')
            if tau.size > limit:
                raise GuardExceededError("Signature", tau.size, limit)
            expansion = expand_product(tau)
        elif mode == "exponential":
            expansion = expand_exponential(tau, max_size=max_size)
        else:
            expansion = expand_composition(tau, max_size=max_size)

        typer.echo(renderer.render(expansion))


@app.command("multiplicity")
def cmd_multiplicity(
    signature: str = typer.Argument(..., help='Signature, e.g. "x1^4 x5^2 x7 x8"'),
    partition: str = typer.Argument(..., help='Partition, e.g. "[x1^2 x5][x1^2 x5][x7 x8]"'),
    check: bool = typer.Option(False, "--check", help="Also count collapsing set partitions"),
    max_size: Optional[int] = typer.Option(None, "--max-size", help="Override the set-size guard for --check"),
):
    """Print how many set partitions collapse onto a multiset partition."""
    with handle_errors():
        tau = parse_signature(signature)
        mp = parse_partition(partition, signature=tau)
        value = multiplicity(tau, mp)
        typer.echo(str(value))

        if check:
            counted = multiplicity_bruteforce(tau, mp, max_size=max_size)
            if counted != value:
                console.print(f"[red]MISMATCH:[/] brute force counted {counted}")
                raise typer.Exit(EXIT_MISMATCH)
            console.print(f"[green]Brute force agrees:[/] {counted}")


@app.command("bell")
def cmd_bell(
    n: int = typer.Argument(..., min=0, help="Size of the set"),
    stirling: bool = typer.Option(False, "--stirling", "-s", help="Also list S(n, k) for every k"),
):
    """Print the Bell number B_n (the coefficient sum of an order-n expansion)."""
    with handle_errors():
        typer.echo(str(bell(n)))
        if stirling:
            for k in range(n + 1):
                typer.echo(f"S({n},{k}) = {stirling2(n, k)}")


@app.command("partitions")
def cmd_partitions(
    signature: str = typer.Argument(..., help='Signature, e.g. "x1 x2^2"'),
    max_size: Optional[int] = typer.Option(None, "--max-size", help="Override the multiset-size guard"),
):
    """List the partitions of a signature with their multiplicities."""
    with handle_errors():
        tau = parse_signature(signature)
        for term in expand_composition(tau, max_size=max_size).terms:
            typer.echo(f"{term.coefficient} {format_partition(term.shape)}".rstrip())


@app.command("verify")
def cmd_verify(
    kind: str = typer.Argument("multiplicity", help=", ".join(VERIFY_KINDS)),
    max_size: Optional[int] = typer.Option(None, "--max-size", help="Largest signature size to check"),
    trials: int = typer.Option(50, "--trials", "-n", help="Random trials (composition, product)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (defaults to the guards seed)"),
    orders: int = typer.Option(3, "--orders", help="Random orders per signature (paths)"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
):
    """Run an oracle check; exits 4 on any mismatch."""
    from .oracle import (
        print_summary,
        run_random_trials,
        sweep_cumulants,
        sweep_multiplicities,
        sweep_paths,
    )

    with handle_errors():
        if kind not in VERIFY_KINDS:
            raise ValueError(f"Unknown check '{kind}'. Available: {', '.join(VERIFY_KINDS)}")

        if kind == "multiplicity":
            report = sweep_multiplicities(max_size)
        elif kind == "paths":
            report = sweep_paths(7 if max_size is None else max_size, orders, seed)
        elif kind == "cumulants":
            report = sweep_cumulants(6 if max_size is None else max_size, seed)
        else:
            report, _ = run_random_trials(kind, trials, seed, max_size)

    if as_json:
        typer.echo(json.dumps(report.to_dict(), indent=2))
    else:
        print_summary([report], console)

    if not report.ok:
        typer.echo("MISMATCH")
        raise typer.Exit(EXIT_MISMATCH)
    typer.echo("all agree")


@app.command("cumulants")
def cmd_cumulants(
    direction: str = typer.Argument(..., help="moments (from cumulants) or cumulants (from moments)"),
    file: Path = typer.Argument(..., help="JSON assignment file"),
    target: Optional[str] = typer.Option(None, "--target", "-t", help='Single target, e.g. "x1^3"'),
):
    """Convert between joint moments and joint cumulants."""
    with handle_errors():
        if direction not in ("moments", "cumulants"):
            raise ValueError(f"Unknown direction '{direction}'. Available: moments, cumulants")

        expected = "cumulants" if direction == "moments" else "moments"
        assignment = load_assignment(file, default_kind=expected)

        if direction == "moments":
            if not isinstance(assignment, CumulantAssignment):
                raise ValueError(f"{file} holds moments; 'moments' needs a cumulant assignment")
            keys = assignment.joint
            convert, label = moment_from_cumulants, "E"
        else:
            if not isinstance(assignment, MomentAssignment):
                raise ValueError(f"{file} holds cumulants; 'cumulants' needs a moment assignment")
            keys = assignment.raw
            convert, label = cumulants_from_moments, "kappa"

        targets = [parse_signature(target)] if target is not None else sorted(keys, key=lambda m: m.sort_key())
        for part in targets:
            typer.echo(f"{label}[{format_signature(part)}] = {convert(part, assignment)}")


@app.command("config")
def cmd_config(
    init: bool = typer.Option(False, "--init", help="Write a default global config file"),
):
    """Show the resolved guards, or create a config file."""
    from .utils.config_file import create_default_config, get_global_config_path, load_config

    config_path = get_global_config_path()

    if init:
        if config_path.exists():
            console.print(f"[yellow]Config already exists:[/] {config_path}")
        else:
            create_default_config(config_path)
            console.print(f"[green]Created config:[/] {config_path}")
        return

    with handle_errors():
        guards = current_guards()
        source = load_config().source

    console.print(f"[bold]Config file:[/] {source or '(defaults)'}")

    table = Table()
    table.add_column("Guard", style="cyan")
    table.add_column("Value", justify="right")
    table.add_column("Env var", style="dim")
    for f in fields(guards):
        table.add_row(f.name, str(getattr(guards, f.name)), ENV_VARS[f.name])
    console.print(table)

    if not config_path.exists():
        console.print("[dim]To create: mixdiff config --init[/]")


@app.command("version")
def cmd_version():
    """Print the version."""
    typer.echo(f"mixdiff {__version__}")


def main():
    """Main entry point."""
    app()


if __name__ == "__main__":
    main()
