#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json

import click

from erdosham.libs.common import *
from erdosham.libs.hamilton import is_hamiltonian
from erdosham.libs.posa import posa_witness_max
from erdosham.libs.saturation import check_ore_property, is_saturated
from erdosham.subcommands.options import (
    display_options,
    handle_errors,
    input_options,
    print_verdict,
    read_graphs,
    solver_options,
    solver_settings,
    vertex_list,
)


def run_checks(g, selected, solver):
    verdicts = {}
    if "ham" in selected:
        witness = is_hamiltonian(g, **solver)
        verdicts["hamiltonian"] = witness is not None
        verdicts["cycle"] = list(witness.order) if witness else None
    if "saturated" in selected:
        verdicts["saturated"] = is_saturated(g, **solver)
    if "posa" in selected:
        witness = posa_witness_max(g)
        verdicts["posa"] = (
            {"k": witness.k, "D": witness.D.to_list()} if witness else None
        )
    if "two_connected" in selected:
        verdicts["two_connected"] = g.is_two_connected()
    if "ore_property" in selected:
        pair = check_ore_property(g)
        verdicts["ore_property"] = pair is None
        verdicts["ore_violation"] = list(pair) if pair else None
    return verdicts


def print_checks(g6, verdicts):
    ham_msg_nonl(f"{g6}\t")
    if "hamiltonian" in verdicts:
        cycle = verdicts["cycle"]
        print_verdict("ham", verdicts["hamiltonian"], cycle and vertex_list(cycle))
    if "saturated" in verdicts:
        print_verdict("saturated", verdicts["saturated"])
    if "posa" in verdicts:
        witness = verdicts["posa"]
        detail = witness and f"k={witness['k']} D={vertex_list(witness['D'])}"
        print_verdict("posa", witness is not None, detail)
    if "two_connected" in verdicts:
        print_verdict("2-connected", verdicts["two_connected"])
    if "ore_property" in verdicts:
        pair = verdicts["ore_violation"]
        print_verdict("ore-property", verdicts["ore_property"], pair and f"{pair}")
    ham_msg_nonl("\n")


@click.command(help="Run hamiltonicity and structure checks on graph6 input")
@input_options
@click.option("--ham", is_flag=True, help="Hamiltonian cycle, with a witness")
@click.option("--saturated", is_flag=True, help="Edge-maximal nonhamiltonian")
@click.option("--posa", is_flag=True, help="Largest Pósa witness (k, D)")
@click.option("--two-connected", is_flag=True, help="2-connectivity")
@click.option(
    "--ore-property",
    is_flag=True,
    help="d(u)+d(v) <= n-1 for every non-edge uv",
)
@click.option("--all", "all_checks", is_flag=True, help="Run every check")
@solver_options
@display_options
@click.pass_context
@handle_errors
def check(
    ctx,
    infile,
    ham,
    saturated,
    posa,
    two_connected,
    ore_property,
    all_checks,
    timeout,
    use_json,
):
    flags = {
        "ham": ham,
        "saturated": saturated,
        "posa": posa,
        "two_connected": two_connected,
        "ore_property": ore_property,
    }
    if all_checks:
        selected = set(flags)
    else:
        selected = {name for name, on in flags.items() if on} or {"ham"}
    solver = solver_settings(ctx, timeout)

    results = []
    for g6, g in read_graphs(infile):
        verdicts = run_checks(g, selected, solver)
        if use_json:
            results.append({"graph6": g6, **verdicts})
        else:
            print_checks(g6, verdicts)
    if use_json:
        ham_msg(json.dumps(results, sort_keys=True))
