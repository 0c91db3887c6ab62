"""Command-line interface: describe a molecule, ask one question, chat
interactively, run benchmarks (reports plus figures), serve HTTP, and list
the tools."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from ..agent import BackendConfig, make_backend, run
from ..benchmark import generate, run_benchmark, write_questions_csv, write_reports
from ..molkit import SmilesError, parse_smiles
from ..toolbox import default_registry, invoke
from .config import AppConfig, load_config


_FLAG_TO_FIELD = [
    ("backend", "backend_kind"),
    ("endpoint", "endpoint_url"),
    ("model", "model_id"),
    ("prompt", "prompt_strategy"),
    ("model_family", "model_family"),
    ("data_dir", "data_dir"),
    ("listen", "listen_address"),
]


def _build_config(ctx_params: dict) -> AppConfig:
    overrides = {field: ctx_params.get(flag) for flag, field in _FLAG_TO_FIELD}
    return load_config(config_file=ctx_params.get("config"), overrides=overrides)


def common_options(fn):
    options = [
        click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None,
                     help="Config file (key = value lines)."),
        click.option("--backend", type=click.Choice(["rule_oracle", "scripted", "http_openai_compatible"]),
                     default=None, help="Completion backend kind."),
        click.option("--endpoint", default=None, help="OpenAI-compatible endpoint base URL."),
        click.option("--model", default=None, help="Model identifier for the HTTP backend."),
        click.option("--prompt", type=click.Choice(["minimal", "domain"]), default=None,
                     help="Prompt strategy."),
        click.option("--model-family", default=None, help="Wrapper-token family (see model_tokens.tsv)."),
        click.option("--data-dir", type=click.Path(exists=True, file_okay=False), default=None,
                     help="Override directory for data assets."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


@click.group()
def main():
    """Cheminformatics tools behind a tool-using LLM agent."""


@main.command()
@click.argument("smiles")
@common_options
def describe(smiles, **params):
    """Print all ten tool outputs for SMILES."""
    config = _build_config(params)
    registry = default_registry(config.data_dir)
    try:
        parse_smiles(smiles)
    except SmilesError as exc:
        raise click.ClickException(f"invalid SMILES: {exc.message}")
    for tool in registry:
        click.echo(f"{tool.display_name}: {invoke(registry, tool.name, smiles).text}")


@main.command()
@common_options
def tools(**params):
    """List the available tools."""
    config = _build_config(params)
    for tool in default_registry(config.data_dir):
        click.echo(f"{tool.name}  [{tool.output_kind}]  {tool.description}")


@main.command()
@click.argument("question")
@click.option("--trace/--no-trace", default=True, help="Show the tool-call trace.")
@common_options
def ask(question, trace, **params):
    """Ask the agent one question."""
    config = _build_config(params)
    registry = default_registry(config.data_dir)
    outcome = run(question, config.agent_config(), registry)
    if trace:
        for step in outcome.steps:
            click.echo(f"thought : {step.thought}", err=True)
            click.echo(f"action  : {step.action.tool}({step.action.input})", err=True)
            click.echo(f"observed: {step.observation}", err=True)
    if outcome.final_answer is None:
        raise click.ClickException(f"no answer ({outcome.termination})")
    click.echo(outcome.final_answer)


@main.command()
@common_options
def chat(**params):
    """Interactive question loop (empty line or EOF exits)."""
    config = _build_config(params)
    registry = default_registry(config.data_dir)
    click.echo("chemagent chat; empty line quits.")
    while True:
        try:
            question = click.prompt(">", prompt_suffix=" ", default="", show_default=False)
        except (EOFError, KeyboardInterrupt, click.Abort):
            break
        if not question.strip():
            break
        outcome = run(question, config.agent_config(), registry)
        for step in outcome.steps:
            click.echo(f"  [{step.action.tool}] {step.action.input} -> {step.observation}")
        click.echo(outcome.final_answer if outcome.final_answer is not None
                   else f"(no answer: {outcome.termination})")


@main.command()
@click.option("--set", "set_name", type=click.Choice(["qualitative", "quantitative", "full"]),
              default="full", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--parallel", type=int, default=1, show_default=True)
@click.option("--per-tool", type=int, default=100, show_default=True,
              help="Questions generated per tool.")
@click.option("--model-label", default="rule_oracle", show_default=True)
@click.option("--node-label", default="local", show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default="bench-out", show_default=True)
@click.option("--figures/--no-figures", default=True, show_default=True)
@click.option("--flip-probability", type=float, default=0.0, show_default=True,
              help="Rule-oracle noise: chance to flip a qualitative answer.")
@common_options
def bench(set_name, seed, parallel, per_tool, model_label, node_label, out, figures,
          flip_probability, **params):
    """Generate a question set, run it through the agent, score, and report."""
    config = _build_config(params)
    registry = default_registry(config.data_dir)
    benchmark_set = generate(set_name, seed=seed, per_tool=per_tool,
                             registry=registry, data_dir=config.data_dir)
    agent_cfg = config.agent_config()
    if flip_probability > 0:
        if config.backend_kind != "rule_oracle":
            raise click.ClickException("--flip-probability requires the rule_oracle backend")
        noisy = BackendConfig(kind="rule_oracle", flip_probability=flip_probability,
                              noise_seed=seed)
        backend_factory = lambda: make_backend(noisy)
    else:
        backend_factory = None
    run_result, summary, per_tool_rows = run_benchmark(
        benchmark_set,
        agent_cfg,
        parallelism=parallel,
        model_label=model_label,
        node_label=node_label,
        registry=registry,
        backend_factory=backend_factory,
    )
    out_path = Path(out)
    paths = write_reports(run_result, summary, per_tool_rows, out_path, figures=figures)
    write_questions_csv(benchmark_set, out_path / "questions.csv")
    click.echo(
        f"{summary.model} | {summary.node} | {summary.question_set} | {summary.prompt} | "
        f"time {summary.time:.3f} min | accuracy {summary.accuracy:.1f}"
    )
    if run_result.backend_errors:
        click.echo(f"backend errors: {run_result.backend_errors}", err=True)
    for name, path in sorted(paths.items()):
        click.echo(f"wrote {path}")


@main.command()
@click.option("--listen", default=None, help="host:port to bind (default 127.0.0.1:8000).")
@common_options
def serve(**params):
    """Run the HTTP service."""
    from .service import serve as run_service

    config = _build_config(params)
    click.echo(f"listening on {config.listen_address}")
    run_service(config)


if __name__ == "__main__":
    sys.exit(main())
