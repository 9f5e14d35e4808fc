#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging

import click

from erdosham.libs.common import *
from erdosham.subcommands import (
    certify,
    check,
    config,
    construct,
    formulas,
    saturate,
    verify,
)


@click.group(
    help="Constructions, hamiltonicity checks, stability certificates and "
    "exhaustive verification for the Erdős bound on nonhamiltonian graphs."
)
@click.version_option("0.1.0", prog_name="erdos-ham")
@click.option(
    "--settings",
    default=".erdos-ham.toml",
    help="Local settings file to use",
    required=False,
)
@click.option("--debug", is_flag=True, help="Enable debug info")
@click.pass_context
def cli(ctx, settings, debug):
    if debug:
        # DEBUG level is too verbose about included packages
        # use INFO instead
        logging.basicConfig(level=logging.INFO)

    ctx.obj = {"CFG": load_toml(settings)}
    ctx.obj["SETTINGS"] = settings
    fconfig = config_path(settings)
    if fconfig:
        ham_info(f"settings from {fconfig}")


def add_commands():
    cli.add_command(certify.certify)
    cli.add_command(check.check)
    cli.add_command(config.config)
    cli.add_command(construct.construct)
    cli.add_command(formulas.formulas)
    cli.add_command(saturate.saturate)
    cli.add_command(verify.verify)


def run():
    add_commands()
    cli()


if __name__ == "__main__":
    run()
