#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json

import click

from erdosham.libs.common import *
from erdosham.libs.constructions import Family, build
from erdosham.libs.graph import encode_graph6
from erdosham.subcommands.options import display_options, handle_errors

FAMILIES = {
    "h": Family.H,
    "hprime": Family.HPRIME,
    "kminus": Family.K_MINUS_CLIQUE,
}


def construction_json(construction):
    graph = construction.graph
    return {
        "graph6": encode_graph6(graph),
        "family": construction.family.value,
        "n": graph.n,
        "d": construction.d,
        "edges": graph.edge_count,
        "min_degree": graph.min_degree,
        "parts": {
            name: part.to_list() for name, part in sorted(construction.parts.items())
        },
        "cut_vertex": construction.cut_vertex,
    }


@click.command(help="Build an extremal graph and print it as graph6")
@click.option(
    "--family",
    type=click.Choice(list(FAMILIES), case_sensitive=False),
    required=True,
    help="h: H_{n,d}, hprime: H'_{n,d}, kminus: K_n minus a clique",
)
@click.option("--n", "n", type=int, required=True, help="Number of vertices")
@click.option("--d", "d", type=int, help="Minimum degree parameter (h, hprime)")
@display_options
@handle_errors
def construct(family, n, d, use_json):
    construction = build(FAMILIES[family.lower()], n, d)
    if use_json:
        ham_msg(json.dumps(construction_json(construction), sort_keys=True))
        return
    ham_info(f"{family}: n={n} e={construction.graph.edge_count}")
    ham_msg(encode_graph6(construction.graph))
