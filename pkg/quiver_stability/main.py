"""Command-line entry point."""

import logging
import sys
from pathlib import Path

import click

from . import __version__
from .config import ConfigurationManager
from .core import ErrorHandler
from .core.application_controller import ApplicationController, CommandRequest
from .core.validation import SUBCOMMANDS


def setup_logging(verbose: bool = False):
    """Setup basic logging configuration on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logging.captureWarnings(True)


ALGEBRA = click.option("--algebra", required=True, metavar="SRC",
                       help="Algebra file or builtin:ID (A2, A3:rl, kronecker, ...)")
BOUND = click.option("--bound", metavar="d1,d2,...",
                     help="Dimension-vector bound of the module window")
PRIME = click.option("--prime", type=int, help="Field characteristic for builtin algebras")
STABILITY = click.option("--stability", metavar="SPEC",
                         help="'charge a=.. b=..', 'slope num=.. den=..', 'table FILE', 'path FILE' "
                              "or 'starred s=..'")
PATH = click.option("--path", "path_file", metavar="FILE", help="Red path file")
OUT = click.option("--out", metavar="FILE", help="Write the output here instead of stdout")
SEED = click.option("--seed", type=int, default=0, show_default=True,
                    help="Seed for randomized checks")

COMMAND_OPTIONS = {
    "indec": [ALGEBRA, BOUND, PRIME, OUT],
    "king": [ALGEBRA, BOUND, PRIME, OUT,
             click.option("--theta", required=True, metavar="r1,r2,...",
                          help="King weight")],
    "hn": [ALGEBRA, BOUND, PRIME, OUT, STABILITY,
           click.option("--module", required=True, metavar="ID", help="Module id, e.g. P1")],
    "torsion": [ALGEBRA, BOUND, PRIME, OUT, STABILITY,
                click.option("--phase", required=True, metavar="PHASE",
                             help="Phase value: r, inf or r*k")],
    "chain": [ALGEBRA, BOUND, PRIME, OUT, STABILITY],
    "mgs": [ALGEBRA, BOUND, PRIME, OUT, STABILITY, PATH],
    "walls": [ALGEBRA, BOUND, PRIME, OUT, SEED],
    "chambers": [ALGEBRA, BOUND, PRIME, OUT],
    "path": [ALGEBRA, BOUND, PRIME, OUT, PATH],
    "render": [ALGEBRA, BOUND, PRIME, OUT, PATH,
               click.option("--format", "output_format", type=click.Choice(["svg", "pdf"]),
                            default="svg", show_default=True)],
}

HELP = {
    "indec": "List the indecomposable modules in the window.",
    "king": "King semistability of every indecomposable for one weight.",
    "hn": "Harder-Narasimhan filtration of one module.",
    "torsion": "Torsion pair (T_p, F_p) at one phase.",
    "chain": "Chain of torsion classes over the attained phases.",
    "mgs": "Decide whether the chain is a maximal green sequence.",
    "walls": "Walls of the indecomposables (at most three vertices).",
    "chambers": "Chambers of the two-vertex wall arrangement.",
    "path": "Validate a red path and report its crossings.",
    "render": "Draw walls, chambers and an optional path as SVG or PDF.",
}


@click.group()
@click.option("--config", "config_dir", type=click.Path(file_okay=False), default=None,
              help="Configuration directory (default ~/.quiver_stability)")
@click.option("--verbose", "-v", is_flag=True, help="Log debug output on stderr")
@click.version_option(version=__version__, prog_name="quiver-stability")
@click.pass_context
def cli(ctx, config_dir, verbose):
    """Exact stability data for small quiver algebras over F_p."""
    setup_logging(verbose)
    config_manager = ConfigurationManager(Path(config_dir) if config_dir else None)
    config = config_manager.load_config()
    error_handler = ErrorHandler(
        log_dir=Path(config.log_dir) if config.log_dir else config_manager.config_dir / "logs",
        console_level="DEBUG" if verbose else config.log_level,
    )
    ctx.obj = ApplicationController(config_manager, error_handler)


def _make_command(name: str):
    def command(ctx, **options):
        request = CommandRequest(
            subcommand=name,
            algebra=options.get("algebra"),
            bound=options.get("bound"),
            stability=options.get("stability"),
            path=options.get("path_file"),
            theta=options.get("theta"),
            phase=options.get("phase"),
            module=options.get("module"),
            out=options.get("out"),
            format=options.get("output_format", "json"),
            seed=options.get("seed", 0),
            prime=options.get("prime"),
        )
        result = ctx.obj.run(request)
        if not result.artifacts or not result.succeeded or request.format == "pdf":
            click.echo(result.output_text(), nl=False)
        ctx.exit(result.exit_status)

    command.__name__ = name
    command = click.pass_context(command)
    for option in reversed(COMMAND_OPTIONS[name]):
        command = option(command)
    return cli.command(name=name, help=HELP[name])(command)


for _name in SUBCOMMANDS:
    _make_command(_name)


def main():
    """Console-script entry point."""
    cli(prog_name="quiver-stability")


if __name__ == "__main__":
    main()
