#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json

import click

from erdosham.libs.certify import certify_stability
from erdosham.libs.common import *
from erdosham.subcommands.options import (
    display_options,
    handle_errors,
    input_options,
    read_graphs,
    solver_options,
    solver_settings,
    vertex_list,
)


def print_certificate(g6, cert):
    ham_msg(f"graph6: {g6}")
    ham_msg_nonl("variant: ")
    ham_msg_green_nonl(cert.variant.value)
    ham_msg_nonl("\n")
    ham_msg(f"d: {cert.d}")
    ham_msg(f"D: {vertex_list(cert.D)}")
    if cert.S is not None:
        ham_msg(f"S: {vertex_list(cert.S)}")
    else:
        ham_msg(f"B: {vertex_list(cert.B)}")
        ham_msg(f"c: {cert.c}")
    data = cert.to_dict()
    ham_msg(f"saturated: {data['saturated_graph6']}")
    ham_msg(f"coincident: {cert.coincident}")
    ham_msg(f"two_connected: {cert.two_connected}")


@click.command(help="Embed qualifying graphs into H_{n,d} or H'_{n,d}")
@click.option("--d", "d", type=int, required=True, help="Minimum degree parameter")
@input_options
@solver_options
@display_options
@click.pass_context
@handle_errors
def certify(ctx, d, infile, timeout, use_json):
    solver = solver_settings(ctx, timeout)
    certificates = []
    for g6, g in read_graphs(infile):
        cert = certify_stability(g, d, solver=solver)
        if use_json:
            data = cert.to_dict()
            data["graph6"] = g6
            certificates.append(data)
        else:
            print_certificate(g6, cert)
    if use_json:
        payload = certificates[0] if len(certificates) == 1 else certificates
        ham_msg(json.dumps(payload, sort_keys=True))
