#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json

import click

from erdosham.libs.common import *
from erdosham.libs.formulas import bound_table, hprime_qualifying_range
from erdosham.subcommands.options import display_options, handle_errors


def print_table(table, qualifying):
    ham_msg(f"n: {table.n}")
    ham_msg(f"d0: {table.d0}")
    ham_msg("d\th(n,d)\te(n,d)\te(H')\tqualifies")
    for row in table.rows:
        ham_msg_nonl(f"{row.d}\t{row.h}\t{row.e}\t{row.hprime}\t")
        if row.qualifies:
            ham_msg_green_nonl("yes")
        else:
            ham_msg_nonl("no")
        ham_msg_nonl("\n")
    ham_msg(f"H' qualifying d: {' '.join(str(d) for d in qualifying) or '-'}")


@click.command(help="Print h(n,d), e(n,d) and d0(n) for every valid d")
@click.option("--n", "n", type=int, required=True, help="Number of vertices")
@display_options
@handle_errors
def formulas(n, use_json):
    table = bound_table(n)
    qualifying = hprime_qualifying_range(n)
    if use_json:
        data = table.to_dict()
        data["hprime_qualifying"] = qualifying
        ham_msg(json.dumps(data, sort_keys=True))
        return
    print_table(table, qualifying)
