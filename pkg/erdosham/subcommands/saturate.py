#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json

import click

from erdosham.libs.common import *
from erdosham.libs.graph import encode_graph6
from erdosham.libs.saturation import saturate as saturate_graph
from erdosham.subcommands.options import (
    display_options,
    handle_errors,
    input_options,
    read_graphs,
    solver_options,
    solver_settings,
)


@click.command(help="Print the saturation closure of nonhamiltonian graphs")
@input_options
@solver_options
@display_options
@click.pass_context
@handle_errors
def saturate(ctx, infile, timeout, use_json):
    solver = solver_settings(ctx, timeout)
    results = []
    for g6, g in read_graphs(infile):
        closure = saturate_graph(g, **solver)
        added = closure.edge_count - g.edge_count
        ham_info(f"{g6}: {added} edges added")
        if use_json:
            results.append(
                {
                    "graph6": g6,
                    "saturated_graph6": encode_graph6(closure),
                    "edges_added": added,
                }
            )
        else:
            ham_msg(encode_graph6(closure))
    if use_json:
        ham_msg(json.dumps(results, sort_keys=True))
