#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from functools import wraps

import click

from erdosham.libs import harness
from erdosham.libs.common import *
from erdosham.subcommands.options import (
    display_options,
    handle_errors,
    solver_options,
    solver_settings,
)


def report_options(func):
    @click.option("--n", "n", type=int, required=True, help="Number of vertices")
    @click.option(
        "--timing", is_flag=True, help="Include wall time in the report"
    )
    @click.option(
        "--progress", is_flag=True, help="Show progress bars on stderr"
    )
    @solver_options
    @display_options
    @wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def exhaustive_options(func):
    @click.option(
        "--workers",
        type=click.IntRange(min=1),
        help="Worker processes, defaults to [verify] workers in settings",
    )
    @wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def random_options(func):
    @click.option(
        "--trials",
        type=click.IntRange(min=0),
        help="Random cases, defaults to [verify] trials in settings",
    )
    @click.option(
        "--seed", type=int, help="Random seed, defaults to [verify] seed in settings"
    )
    @wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def verify_value(ctx, key, given):
    if given is not None:
        return given
    return cfg_value(ctx.obj.get("CFG"), "verify", key)


def print_report(report, timing):
    ham_msg(f"theorem: {report.theorem}")
    params = " ".join(f"{key}={value}" for key, value in report.params.items())
    ham_msg(f"params: {params}")
    ham_msg_nonl("status: ")
    if report.counterexamples:
        ham_msg_red_nonl(report.status)
    else:
        ham_msg_green_nonl(report.status)
    ham_msg_nonl("\n")
    ham_msg(f"graphs examined: {report.graphs_examined}")
    if report.max_edges_found is not None:
        ham_msg(f"max edges: {report.max_edges_found}")
    for g6 in report.extremal_graph6:
        ham_msg(f"extremal: {g6}")
    for key, value in sorted(report.details.items()):
        ham_msg(f"{key}: {value}")
    for counterexample in report.counterexamples:
        ham_msg_nonl("counterexample: ")
        ham_msg_red_nonl(f"{counterexample['graph6'] or '-'}")
        ham_msg(f"\t{counterexample['reason']}")
    if timing:
        ham_msg(f"wall time: {report.wall_time:.3f}s")


def emit(ctx, report, use_json, timing):
    if use_json:
        ham_msg(report.to_json(timing))
    else:
        print_report(report, timing)
    if report.counterexamples:
        ctx.exit(1)


@click.group(help="Exhaustive and randomised checks of the edge bounds")
def verify():
    """Commands that produce verification reports."""
    pass


@verify.command()
@report_options
@exhaustive_options
@click.option(
    "--exhaustive",
    is_flag=True,
    help="Examine every graph instead of only those at or above the bound",
)
@click.pass_context
@handle_errors
def ore(ctx, n, timing, progress, timeout, use_json, workers, exhaustive):
    """Ore's bound C(n-1,2)+1 and its unique extremal graph."""
    report = harness.verify_ore(
        n,
        exhaustive=exhaustive,
        workers=verify_value(ctx, "workers", workers),
        solver=solver_settings(ctx, timeout),
        progress=progress,
    )
    emit(ctx, report, use_json, timing)


@verify.command()
@report_options
@exhaustive_options
@click.option("--d", "d", type=int, required=True, help="Minimum degree")
@click.option(
    "--exhaustive",
    is_flag=True,
    help="Examine every graph instead of only those at or above the bound",
)
@click.pass_context
@handle_errors
def erdos(ctx, n, timing, progress, timeout, use_json, workers, d, exhaustive):
    """Erdős's bound e(n,d) for minimum degree d."""
    report = harness.verify_erdos(
        n,
        d,
        exhaustive=exhaustive,
        workers=verify_value(ctx, "workers", workers),
        solver=solver_settings(ctx, timeout),
        progress=progress,
    )
    emit(ctx, report, use_json, timing)


@verify.command()
@report_options
@exhaustive_options
@click.option("--d", "d", type=int, required=True, help="Minimum degree")
@click.pass_context
@handle_errors
def stability(ctx, n, timing, progress, timeout, use_json, workers, d):
    """Every qualifying graph embeds into H_{n,d} or H'_{n,d}."""
    report = harness.verify_stability(
        n,
        d,
        workers=verify_value(ctx, "workers", workers),
        solver=solver_settings(ctx, timeout),
        progress=progress,
        oracle_max_vertices=cfg_value(ctx.obj.get("CFG"), "oracle", "max_vertices"),
    )
    emit(ctx, report, use_json, timing)


@verify.command()
@report_options
@random_options
@click.pass_context
@handle_errors
def posa(ctx, n, timing, progress, timeout, use_json, trials, seed):
    """Pósa witnesses and cycles through linear forests."""
    report = harness.verify_posa_theorems(
        n,
        verify_value(ctx, "trials", trials),
        verify_value(ctx, "seed", seed),
        solver=solver_settings(ctx, timeout),
        progress=progress,
    )
    emit(ctx, report, use_json, timing)


@verify.command()
@report_options
@random_options
@click.pass_context
@handle_errors
def saturation(ctx, n, timing, progress, timeout, use_json, trials, seed):
    """Saturation closures are saturated and keep degree sums below n."""
    report = harness.verify_saturation(
        n,
        verify_value(ctx, "trials", trials),
        verify_value(ctx, "seed", seed),
        solver=solver_settings(ctx, timeout),
        progress=progress,
    )
    emit(ctx, report, use_json, timing)


@verify.command()
@report_options
@random_options
@click.pass_context
@handle_errors
def solver(ctx, n, timing, progress, timeout, use_json, trials, seed):
    """Exact solvers against brute-force permutation search."""
    report = harness.verify_solver(
        n,
        verify_value(ctx, "trials", trials),
        verify_value(ctx, "seed", seed),
        solver=solver_settings(ctx, timeout),
        progress=progress,
    )
    emit(ctx, report, use_json, timing)
