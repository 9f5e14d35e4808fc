#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
import os
import sys

import click

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

SETTINGS_NAME = "erdos-ham.toml"

DEFAULT_SETTINGS = {
    "hamilton": {"dp_max_vertices": 24, "vector_min_vertices": 13},
    "verify": {"workers": 1, "trials": 1000, "seed": 42},
    "oracle": {"max_vertices": 16},
}


class ErdosHamError(Exception):
    pass


class GraphError(ErdosHamError, ValueError):
    pass


class Graph6Error(GraphError):
    pass


class PreconditionError(ErdosHamError):
    """An operation was called outside its hypothesis."""

    hypothesis = "precondition"

    def __init__(self, message):
        super().__init__(f"{self.hypothesis}: {message}")


class ParameterOutOfRange(PreconditionError):
    hypothesis = "ParameterOutOfRange"


class MinDegreeBelowD(PreconditionError):
    hypothesis = "MinDegreeBelowD"


class NotEnoughEdges(PreconditionError):
    hypothesis = "NotEnoughEdges"


class HamiltonianInput(PreconditionError):
    hypothesis = "HamiltonianInput"


class NotSaturated(PreconditionError):
    hypothesis = "NotSaturated"


class ForestError(PreconditionError):
    hypothesis = "ForestError"


class SizeCapExceeded(PreconditionError):
    hypothesis = "SizeCapExceeded"


class LemmaViolation(ErdosHamError):
    """
    An internal assertion failed. Every instance is a counterexample to one
    of the lemmas the certifier follows, so the offending graph is kept to
    make the failure replayable.
    """

    def __init__(self, message, graph6=None, cycle=None):
        super().__init__(message)
        self.graph6 = graph6
        self.cycle = cycle


class SearchCancelled(ErdosHamError):
    pass


def check_cancel(cancel):
    if cancel is not None and cancel.is_set():
        raise SearchCancelled("search cancelled")


def _merge_settings(config):
    merged = {section: dict(values) for section, values in DEFAULT_SETTINGS.items()}
    for section, values in (config or {}).items():
        if section not in merged or not isinstance(values, dict):
            ham_warning(f"Ignoring unknown settings section: {section}")
            continue
        merged[section].update(values)
    return merged


def load_toml(settings):
    config = None

    if os.path.exists(settings):
        if os.path.isfile(settings):
            with open(settings, "rb") as f:
                config = tomllib.load(f)
        else:
            ham_err("The --settings location is not an erdos-ham config file")
            raise click.Abort()
        return _merge_settings(config)

    home_dir = os.path.expanduser("~")
    user_path = os.path.join(home_dir, ".config", "erdos-ham", SETTINGS_NAME)
    if os.path.exists(user_path):
        with open(user_path, "rb") as f:
            config = tomllib.load(f)
        return _merge_settings(config)

    global_path = os.path.join("/", "etc", SETTINGS_NAME)
    if os.path.exists(global_path):
        with open(global_path, "rb") as f:
            config = tomllib.load(f)
        return _merge_settings(config)

    # settings are optional, built-in defaults apply
    return _merge_settings(config)


def config_path(settings):
    if os.path.exists(settings):
        return settings

    home_dir = os.path.expanduser("~")
    user_path = os.path.join(home_dir, ".config", "erdos-ham", SETTINGS_NAME)
    if os.path.exists(user_path):
        return user_path

    global_path = os.path.join("/", "etc", SETTINGS_NAME)
    if os.path.exists(global_path):
        return global_path


def cfg_value(cfg, section, key):
    if cfg is None:
        cfg = DEFAULT_SETTINGS
    return cfg.get(section, {}).get(key, DEFAULT_SETTINGS[section][key])


def ham_info(content):
    logging.info(content)


def ham_msg(content):
    click.echo(content)


def ham_log(content):
    click.secho(content, err=True)


def ham_warning(content):
    click.secho(content, fg="yellow", err=True)


def ham_err(content):
    click.secho(content, fg="red", err=True)


def ham_msg_nonl(content):
    click.echo(content, nl=False)


def ham_msg_green_nonl(content):
    click.secho(content, fg="green", nl=False)


def ham_msg_red_nonl(content):
    click.secho(content, fg="red", nl=False)


def ham_msg_yellow_nonl(content):
    click.secho(content, fg="bright_yellow", nl=False)
