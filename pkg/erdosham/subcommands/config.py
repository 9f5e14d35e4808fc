#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
import shutil

import click

from erdosham.libs.common import *

EXAMPLE_CONFIGURATION = ".erdos-ham.toml.example"


def check_configuration(settings):
    if os.path.exists(settings):
        ham_err("Config file already present at: " + settings)
        raise click.Abort()

    home_dir = os.path.expanduser("~")
    user_path = os.path.join(home_dir, ".config", "erdos-ham", SETTINGS_NAME)
    if os.path.exists(user_path):
        ham_err("Config file already present at: " + user_path)
        raise click.Abort()

    global_path = os.path.join("/", "etc", SETTINGS_NAME)
    if os.path.exists(global_path):
        ham_err("Config file already present at: " + global_path)
        raise click.Abort()


def example_configuration():
    """Template shipped next to the package (pip) or at the repo root (poetry)."""
    here = os.path.dirname(__file__)
    candidates = [
        os.path.normpath(os.path.join(here, "../..", EXAMPLE_CONFIGURATION)),
        os.path.normpath(os.path.join(here, "..", EXAMPLE_CONFIGURATION)),
    ]
    for candidate in candidates:
        if os.path.isfile(candidate):
            return candidate
    ham_err("No template configfile found at:")
    for candidate in candidates:
        ham_err(candidate)
    raise click.Abort()


def add_config(fpath):
    fpath = os.path.expanduser(os.path.expandvars(fpath))
    dpath = os.path.dirname(fpath)

    if os.path.isdir(fpath) or fpath.endswith(os.sep):
        ham_err(fpath + " is a directory and not a config file")
        raise click.Abort()

    if os.path.exists(fpath):
        ham_err("A config file already exist at: " + fpath)
        raise click.Abort()

    template = example_configuration()
    ham_msg("Config file not present, adding a config file to " + fpath)
    if dpath and not os.path.exists(dpath):
        os.makedirs(dpath)
    shutil.copyfile(template, fpath)


@click.command(help="Config tool for creating a settings file")
@click.option(
    "--file-path",
    default="~/.config/erdos-ham/erdos-ham.toml",
    show_default=True,
    help="File path for the new settings file",
)
@click.pass_context
def config(ctx, file_path):
    settings = ctx.obj.get("SETTINGS")
    check_configuration(settings)
    add_config(file_path)
