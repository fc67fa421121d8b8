"""Command line interface.

Exit codes for ``eval``: 0 converged, 2 diagnosed non-convergence
(oscillation, divergence, exhausted budget), 1 input or domain error.
``axioms`` exits 0 iff every mandatory characteristic passed or was
inapplicable.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import semantics as sem
from .axioms import check_all, implication_checks
from .axioms.runner import FALSIFIED
from .axioms.sut import sut_for_tag
from .direct import Damping, fixed_point_residual, propagation_matrix
from .document import fixture_names, load_fixture, parse_graph
from .errors import GradargError
from .outcomes import Converged, Diverging, NotWellDefined, Oscillating

SEMANTICS_CHOICES = ("gorgias", "dir", "sdir", "rsig", "rdamped", "dogged", "aggregation")


def _load_document(ref: str):
    path = Path(ref)
    if path.exists():
        return parse_graph(path.read_bytes())
    if ref in fixture_names():
        return load_fixture(ref)
    raise GradargError(f"graph {ref!r} is neither a file nor a bundled fixture "
                       f"(fixtures: {', '.join(fixture_names())})")


def _parse_damping(value: str):
    if value == "auto":
        return "auto"
    try:
        return float(value)
    except ValueError:
        raise GradargError(f"--damping must be a number or 'auto', got {value!r}") from None


@click.group()
def main():
    """Acceptability degrees for weighted argument graphs."""


@main.command("eval")
@click.option("--graph", "graph_ref", required=True,
              help="Path to a graph document, or the name of a bundled fixture.")
@click.option("--semantics", "tag", required=True, type=click.Choice(SEMANTICS_CHOICES))
@click.option("--damping", default="auto", show_default=True,
              help="Damping factor (number) or 'auto' for indegree+1.")
@click.option("--sigmoid", default="logistic", show_default=True,
              type=click.Choice(("logistic", "arctan", "fraction")))
@click.option("--tol", default=1e-9, show_default=True, type=float)
@click.option("--max-iter", default=None, type=int)
@click.option("--format", "fmt", default="table", show_default=True,
              type=click.Choice(("table", "records")))
@click.option("--show-propagation", is_flag=True,
              help="Print the propagation matrix (dir semantics only).")
def cmd_eval(graph_ref, tag, damping, sigmoid, tol, max_iter, fmt, show_propagation):
    """Evaluate a graph and print one degree per argument."""
    try:
        document = _load_document(graph_ref)
        graph = document.to_graph()
        outcome = sem.evaluate(
            graph, tag,
            damping=_parse_damping(damping),
            sigmoid_kind=sigmoid,
            tol=tol,
            max_iter=max_iter,
        )
        propagation = None
        if show_propagation:
            if tag != "dir":
                raise GradargError("--show-propagation is defined for --semantics dir")
            d = outcome.result.damping if isinstance(outcome, Converged) else \
                getattr(outcome, "damping", None)
            propagation = propagation_matrix(
                graph, Damping(d, "fixed"), check_damping=False).entries
    except GradargError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)

    ids = graph.arguments
    if isinstance(outcome, Converged):
        degrees = outcome.result.degrees
        if fmt == "records":
            record = {
                "outcome": "converged",
                "semantics": outcome.result.semantics,
                "damping": outcome.result.damping,
                "iterations": outcome.iterations,
                "degrees": {a: float(v) for a, v in zip(ids, degrees)},
            }
            if tag == "dir":
                record["residual"] = fixed_point_residual(graph, outcome.result.damping, outcome.result)
            if propagation is not None:
                record["propagation"] = [list(map(float, row)) for row in propagation]
            click.echo(json.dumps(record))
        else:
            click.echo(f"semantics: {outcome.result.semantics}"
                       + (f"   damping: {outcome.result.damping:g}" if outcome.result.damping else ""))
            width = max((len(a) for a in ids), default=2)
            for a, v in zip(ids, degrees):
                click.echo(f"  {a:<{width}}  {v:.6f}")
            if propagation is not None:
                click.echo("propagation matrix:")
                for row in propagation:
                    click.echo("  [" + ", ".join(f"{x: .6f}" for x in row) + "]")
        sys.exit(0)

    if fmt == "records":
        record = {"semantics": getattr(outcome, "semantics", tag),
                  "damping": getattr(outcome, "damping", None)}
        if isinstance(outcome, Oscillating):
            record.update(outcome="oscillating", period=outcome.period,
                          states=[{a: float(v) for a, v in zip(ids, s)} for s in outcome.states],
                          state_iterations=list(outcome.state_iterations))
        elif isinstance(outcome, Diverging):
            record.update(outcome="diverging", growth_rate=outcome.growth_rate,
                          iterations=outcome.iterations)
        else:
            record.update(outcome="not_well_defined", reason=outcome.reason,
                          iterations=outcome.iterations)
        click.echo(json.dumps(record))
    else:
        if isinstance(outcome, Oscillating):
            click.echo(f"did not converge: oscillating with period {outcome.period}")
            for it, state in zip(outcome.state_iterations, outcome.states):
                rendered = ", ".join(f"{a}={v:.6f}" for a, v in zip(ids, state))
                click.echo(f"  iteration {it}: {rendered}")
        elif isinstance(outcome, Diverging):
            click.echo(f"did not converge: diverging (growth ~x{outcome.growth_rate:.3g} "
                       f"per step after {outcome.iterations} iterations)")
        else:
            click.echo(f"did not converge: {outcome.reason}")
    sys.exit(2)


@main.command("axioms")
@click.option("--semantics", "tag", required=True,
              type=click.Choice(("gorgias", "dir", "sdir", "aggregation")))
@click.option("--damping", default="8", show_default=True,
              help="Damping factor (number) or 'auto'; used by dir/sdir.")
@click.option("--sigmoid", default="logistic", show_default=True,
              type=click.Choice(("logistic", "arctan", "fraction")))
@click.option("--trials", default=200, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--characteristic", "names", multiple=True,
              help="Check only the named characteristics (repeatable).")
@click.option("--implications/--no-implications", default=True, show_default=True,
              help="Also run the derived-theorem consistency checks.")
@click.option("--counterexamples", "ce_dir", default=None, type=click.Path(),
              help="Directory for falsified fixtures (written as JSON).")
@click.option("--format", "fmt", default="table", show_default=True,
              type=click.Choice(("table", "records")))
def cmd_axioms(tag, damping, sigmoid, trials, seed, names, implications, ce_dir, fmt):
    """Check the axiomatic characteristics of a semantics."""
    try:
        sut = sut_for_tag(tag, damping=_parse_damping(damping), sigmoid_kind=sigmoid)
        reports = check_all(sut, trials=trials, seed=seed, names=list(names) or None)
        if implications and not names:
            reports += implication_checks(sut, trials=trials, seed=seed)
    except GradargError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)

    failed_mandatory = False
    for report in reports:
        if fmt == "records":
            click.echo(json.dumps(report.to_dict()))
        else:
            mark = {"passed": "PASS", "falsified": "FAIL", "inapplicable": "n/a "}[report.verdict]
            suffix = f" ({report.trials} trials)" if report.verdict == "passed" else \
                (f" -- {report.reason}" if report.reason else "")
            click.echo(f"{mark}  {report.title}{suffix}")
        if report.failed and report.mandatory:
            failed_mandatory = True
        if report.failed and ce_dir and report.counterexample:
            directory = Path(ce_dir)
            directory.mkdir(parents=True, exist_ok=True)
            payload = report.to_dict()
            name = f"{tag}-{report.characteristic}-seed{seed}.json"
            (directory / name).write_text(json.dumps(payload, indent=2) + "\n")
    sys.exit(1 if failed_mandatory else 0)


@main.command("fixtures")
def cmd_fixtures():
    """List the bundled example graphs."""
    for name in fixture_names():
        click.echo(name)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int,
              envvar="GRADARG_PORT")
@click.option("--store-dir", default=None, type=click.Path(),
              envvar="GRADARG_STORE_DIR",
              help="Persist graphs to this directory across restarts.")
@click.option("--ui-dir", default=None, type=click.Path(), envvar="GRADARG_UI_DIR",
              help="Serve a built explorer UI from this directory under /ui.")
def cmd_serve(host, port, store_dir, ui_dir):
    """Run the what-if HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(store_dir=store_dir, ui_dir=ui_dir), host=host, port=port)


if __name__ == "__main__":
    main()
