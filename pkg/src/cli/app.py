"""
Command-Line Application
typer frontend that prints one certificate envelope per invocation
"""
import logging
from typing import Any, Dict, List, Optional

import click
import typer
from rich.markup import escape

from .. import __version__
from ..config import OutputFormat
from ..errors import InputError, ResourceGuardError
from ..graphs.io import load_text
from ..log import configure_logging, stderr_console
from .envelope import CertificateEnvelope, file_digest
from .procedures import Outcome, default_registry

logger = logging.getLogger(__name__)

registry = default_registry()

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Height-1 conditions, polymorphism indicators and 3-coloring gadgets",
)


@app.callback()
def main_options(
    ctx: typer.Context,
    max_vars: Optional[int] = typer.Option(None, "--max-vars", help="Cap on CSP variables"),
    max_vertices: Optional[int] = typer.Option(None, "--max-vertices", help="Cap on constructed vertices"),
    budget: Optional[int] = typer.Option(None, "--budget", help="Gadget search evaluations"),
    domain_cap: Optional[int] = typer.Option(None, "--domain-cap", help="Largest template domain"),
    output_format: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="Envelope format"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
):
    configure_logging(log_level)
    caps = {
        "max_vars": max_vars,
        "max_vertices": max_vertices,
        "budget": budget,
        "domain_cap": domain_cap,
    }
    ctx.obj = {k: v for k, v in caps.items() if v is not None}


def emit(command: str, paths: List[str], params: Dict[str, Any], outcome: Outcome) -> None:
    envelope = CertificateEnvelope(
        command=command,
        inputs=[file_digest(p) for p in paths],
        params=params,
        answer=outcome.answer,
        witness=outcome.witness,
        version=__version__,
    )
    typer.echo(envelope.to_json())


def dispatch(ctx: typer.Context, command: str, paths: List[str], params: Optional[Dict[str, Any]] = None) -> None:
    """Load the file arguments, run one procedure and print its envelope"""
    procedure = registry.get(command)
    merged = {**(params or {}), **(ctx.obj or {})}
    inputs = procedure.load([load_text(p) for p in paths])
    logger.debug("running %s on %d inputs", command, len(inputs))
    emit(command, paths, merged, procedure.execute(inputs, merged))


@app.command()
def sigma(ctx: typer.Context, graph: str):
    """Height-1 condition of a graph"""
    dispatch(ctx, "sigma", [graph])


@app.command()
def qnu(ctx: typer.Context, n: int):
    """Quasi near-unanimity condition of arity N"""
    dispatch(ctx, "qnu", [], {"n": n})


@app.command()
def trivial(ctx: typer.Context, condition: str):
    """Projection interpretation of a condition"""
    dispatch(ctx, "trivial", [condition])


@app.command()
def combine(ctx: typer.Context, first: str, second: str):
    """Pairwise combination of two conditions"""
    dispatch(ctx, "combine", [first, second])


@app.command()
def hom(ctx: typer.Context, source: str, target: str):
    """Homomorphism between two graphs"""
    dispatch(ctx, "hom", [source, target])


@app.command()
def color3(ctx: typer.Context, graph: str):
    """3-coloring of a graph"""
    dispatch(ctx, "color3", [graph])


@app.command()
def satisfies(ctx: typer.Context, struct: str, condition: str):
    """Polymorphisms of a template witnessing a condition"""
    dispatch(ctx, "satisfies", [struct, condition])


@app.command()
def fgraph(ctx: typer.Context, struct: str):
    """F-graph of a template"""
    dispatch(ctx, "fgraph", [struct])


@app.command("minion-p")
def minion_p(ctx: typer.Context, struct: str):
    """Minion homomorphism to the projections"""
    dispatch(ctx, "minion-p", [struct])


@app.command("qnu-check")
def qnu_check(ctx: typer.Context, source: str, target: str, n: int):
    """Homomorphism into the quasi near-unanimity quotient of a power"""
    dispatch(ctx, "qnu-check", [source, target], {"n": n})


@app.command("chain-tensor")
def chain_tensor(
    ctx: typer.Context,
    k: int,
    max_n: int,
    out_dir: Optional[str] = typer.Option(None, "--out-dir", help="Write step files here"),
):
    """Tensor chain of length K"""
    dispatch(ctx, "chain-tensor", [], {"k": k, "max_n": max_n, "out_dir": out_dir})


@app.command("chain-glue")
def chain_glue(
    ctx: typer.Context,
    k: int,
    gadget: str,
    max_n: int,
    out_dir: Optional[str] = typer.Option(None, "--out-dir", help="Write step files here"),
):
    """Glued chain of length K"""
    dispatch(ctx, "chain-glue", [gadget], {"k": k, "max_n": max_n, "out_dir": out_dir})


@app.command()
def critical(ctx: typer.Context, graph: str):
    """Non-3-colorable subgraph with a critical edge"""
    dispatch(ctx, "critical", [graph])


@app.command("gadget-verify")
def gadget_verify(ctx: typer.Context, gadget: str):
    """Check the three gadget properties"""
    dispatch(ctx, "gadget-verify", [gadget])


@app.command("gadget-search")
def gadget_search(ctx: typer.Context, max_vertices: int):
    """Search for a gadget with at most MAX_VERTICES vertices"""
    dispatch(ctx, "gadget-search", [], {"max_vertices_search": max_vertices})


@app.command()
def glue(
    ctx: typer.Context,
    first: str,
    u1: int,
    v1: int,
    second: str,
    u2: int,
    v2: int,
    gadget: str,
):
    """Glue two graphs along edges U V (1-based) through a gadget"""
    dispatch(ctx, "glue", [first, second, gadget], {"e": [u1, v1], "f": [u2, v2]})


@app.command("sigma-perm")
def sigma_perm(ctx: typer.Context, i: int, j: int):
    """Permutation for the pattern pair (I, J)"""
    dispatch(ctx, "sigma-perm", [], {"i": i, "j": j})


@app.command()
def css(ctx: typer.Context, graph: str, pattern: str):
    """Does GRAPH avoid homomorphic images of PATTERN"""
    dispatch(ctx, "css", [graph, pattern])


@app.command()
def growth(
    ctx: typer.Context,
    sizes: List[int],
    k_max: Optional[int] = typer.Option(None, "--k-max", help="Largest k to certify"),
):
    """Growth schedule for graph sizes"""
    dispatch(ctx, "growth", [], {"sizes": sizes, "k_max": k_max})


@app.command()
def verify(ctx: typer.Context, envelope: str, inputs: Optional[List[str]] = typer.Argument(None)):
    """Re-validate an envelope against the same input files"""
    paths = list(inputs or [])
    recorded = CertificateEnvelope.from_json(load_text(envelope))
    procedure = registry.get(recorded.command)
    if procedure is None:
        raise InputError(f"envelope names an unknown command: {recorded.command}")
    if len(paths) != len(recorded.inputs):
        raise InputError(f"{recorded.command} envelope records {len(recorded.inputs)} inputs, got {len(paths)}")
    texts = [load_text(p) for p in paths]
    for path, digest in zip(paths, recorded.inputs):
        if file_digest(path).sha256 != digest.sha256:
            raise InputError(f"{path} does not match the recorded digest of {digest.path}")

    problems = procedure.verify(
        procedure.load(texts),
        recorded.params,
        Outcome(recorded.answer, recorded.witness),
    )
    for problem in problems:
        logger.warning("%s: %s", recorded.command, problem)
    answer = "fail" if problems else "pass"
    emit("verify", [envelope] + paths, {}, Outcome(answer, {"problems": problems}))


def run(argv: List[str]) -> int:
    """Run one invocation; 0 answered, 2 input error, 3 resource guard"""
    try:
        result = app(args=argv, prog_name="minorgraph", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 2
    except click.Abort:
        return 2
    except ResourceGuardError as e:
        stderr_console.print(f"[red]resource guard:[/red] {escape(str(e))}")
        return 3
    except InputError as e:
        stderr_console.print(f"[red]input error:[/red] {escape(str(e))}")
        return 2
    return result if isinstance(result, int) else 0
