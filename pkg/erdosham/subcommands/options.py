import threading
from functools import wraps

import click

from erdosham.libs.common import *
from erdosham.libs.graph import decode_graph6


def display_options(func):
    @click.option("--json", "use_json", is_flag=True, help="Displays output as json")
    @wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def input_options(func):
    @click.option(
        "--in",
        "infile",
        type=click.File("r"),
        default="-",
        show_default=True,
        help="graph6 file, one graph per line, or - for standard input",
    )
    @wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def solver_options(func):
    @click.option(
        "--timeout",
        type=click.FloatRange(min=0, min_open=True),
        help="Cancel hamiltonicity searches after this many seconds",
    )
    @wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def read_graphs(infile):
    """(graph6, Graph) per non-empty line; a >>graph6<< header is allowed."""
    graphs = []
    for line in infile:
        line = line.strip()
        if not line:
            continue
        graphs.append((line.removeprefix(">>graph6<<"), decode_graph6(line)))
    if not graphs:
        raise GraphError("no graph6 input")
    return graphs


def solver_settings(ctx, timeout=None):
    cfg = ctx.obj.get("CFG") if ctx.obj else None
    solver = {
        "dp_max_vertices": cfg_value(cfg, "hamilton", "dp_max_vertices"),
        "vector_min_vertices": cfg_value(cfg, "hamilton", "vector_min_vertices"),
    }
    if timeout:
        cancel = threading.Event()
        timer = threading.Timer(timeout, cancel.set)
        timer.daemon = True
        timer.start()
        solver["cancel"] = cancel
    return solver


def fail(ctx, code, message):
    ham_err(message)
    ctx.exit(code)


def handle_errors(func):
    """Map library exceptions onto the documented exit codes."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except (PreconditionError, GraphError) as exc:
            fail(ctx, 3, str(exc))
        except LemmaViolation as exc:
            ham_err(f"internal assertion failed: {exc}")
            if exc.graph6:
                ham_msg(exc.graph6)
            if exc.cycle:
                ham_log(f"cycle: {' '.join(str(v) for v in exc.cycle)}")
            ctx.exit(1)
        except SearchCancelled:
            fail(ctx, 1, "search cancelled by --timeout")

    return wrapper


def print_verdict(label, verdict, detail=None):
    ham_msg_nonl(f"{label}: ")
    if verdict is None:
        ham_msg_yellow_nonl("n/a")
    elif verdict:
        ham_msg_green_nonl("yes")
    else:
        ham_msg_red_nonl("no")
    if detail:
        ham_msg_nonl(f" ({detail})")
    ham_msg_nonl("\t")


def vertex_list(members):
    return " ".join(str(v) for v in members)
