"""Command-line front end: constructors, analysis, bounds, oracles, checks.

Conventions shared by every subcommand: numeric output is exact ("p/q" or a
plain integer) unless `--decimal` adds a clearly marked approximate column;
family listings print one set per line with ascending space-separated
elements, and metadata lines start with `#` so listings stay valid input
files; identical invocations produce byte-identical output.

Exit codes: 0 success/holds, 1 usage or input error, 2 counterexample,
3 capacity exceeded.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import bounds as bounds_mod
from .canonical import example15, frankl_family, full_star, hm_family
from .core import CapacityError, Family, KSet, binomial, mask_of
from .shadow import shadow_j, shadow_ratio
from .shift import is_shifted
from .structure import (
    base_decomposition,
    is_pseudo_t_intersecting,
    is_semistar,
    is_t_intersecting,
    is_t_star,
    width,
)
from .verify import (
    CHECKER_IDS,
    check_theorem,
    default_seed,
    min_shadow_table,
    min_shadow_table_csv,
    scan_example15,
)

JSON_META = {"version": "1"}

FAMILY_KINDS = ("frankl-h", "star", "hm", "example15", "layer")


def _fmt(value, decimal: bool) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        text = str(value)
        if decimal:
            text += f" approx={float(value):.6g}"
        return text
    return str(value)


def _echo_family(f: Family) -> None:
    for member in f:
        click.echo(" ".join(str(e) for e in member.elements))


def _build_family(kind: str, n: int, k: int, t: int, h: int | None, s: int | None) -> Family:
    if kind == "frankl-h":
        if h is None:
            raise click.UsageError("frankl-h needs --h")
        return frankl_family(n, k, t, h)
    if kind == "star":
        return full_star(n, k, t)
    if kind == "hm":
        return hm_family(n, k, t)
    if kind == "example15":
        if s is None:
            raise click.UsageError("example15 needs --s")
        return example15(n, k, t, s)
    if kind == "layer":
        from .core import enumerate_ksubsets

        return enumerate_ksubsets(n, k)
    raise click.UsageError(f"unknown family kind {kind!r}; choose from {FAMILY_KINDS}")


def parse_family_file(text: str) -> Family | None:
    """Parse the one-set-per-line format; None for a file with no sets.

    Elements are base-10 integers separated by single spaces, ascending;
    lines starting with `#` and blank lines are ignored.  Raises a click
    error carrying the offending line number on malformed input.
    """
    masks = []
    k = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            elements = [int(tok) for tok in line.split()]
        except ValueError:
            raise click.ClickException(f"parse error at line {lineno}: non-integer token")
        if any(e < 1 for e in elements):
            raise click.ClickException(f"parse error at line {lineno}: elements must be >= 1")
        if elements != sorted(elements) or len(set(elements)) != len(elements):
            raise click.ClickException(
                f"parse error at line {lineno}: elements must be strictly ascending"
            )
        if k is None:
            k = len(elements)
        elif len(elements) != k:
            raise click.ClickException(
                f"parse error at line {lineno}: set has {len(elements)} elements, expected {k}"
            )
        masks.append(mask_of(elements))
    if k is None:
        return None
    return Family.from_masks(masks, k)


@click.group()
def cli() -> None:
    """Exact set-family calculus: constructors, shadows, bounds, oracles."""


@cli.command("family")
@click.argument("kind", type=click.Choice(FAMILY_KINDS))
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--t", type=int, default=1, show_default=True)
@click.option("--h", type=int, default=None, help="height for frankl-h")
@click.option("--s", type=int, default=None, help="prefix surplus for example15")
@click.option("--check", is_flag=True, help="report the t-intersecting flag")
@click.option("--width", "show_width", is_flag=True, help="report the pseudo width")
@click.option("--base", "show_base", is_flag=True, help="report base level counts")
@click.option("--semistar", "show_semistar", is_flag=True, help="report star/semistar flags")
def cmd_family(kind, n, k, t, h, s, check, show_width, show_base, show_semistar):
    """Print a named family, one set per line, with metadata comment lines."""
    fam = _build_family(kind, n, k, t, h, s)
    _echo_family(fam)
    click.echo(f"# size: {len(fam)}")
    if check:
        click.echo(f"# t-intersecting: {_fmt(is_t_intersecting(fam, t), False)}")
    if show_width:
        click.echo(f"# width: {width(fam, t)}")
    if show_base:
        counts = base_decomposition(fam, k, t).counts
        rendered = " ".join(f"{ell}:{c}" for ell, c in sorted(counts.items()))
        click.echo(f"# base-levels: {rendered}")
    if show_semistar:
        click.echo(f"# t-star: {_fmt(is_t_star(fam, t), False)}")
        click.echo(f"# semistar: {_fmt(is_semistar(fam, t), False)}")


@cli.command("analyze")
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--kind", type=click.Choice(FAMILY_KINDS), default=None,
              help="analyze a named constructor instead of a file")
@click.option("--n", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--t", type=int, required=True)
@click.option("--h", type=int, default=None)
@click.option("--s", type=int, default=None)
@click.option("--j", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--decimal", is_flag=True, help="add approximate decimal columns")
def cmd_analyze(input_file, kind, n, k, t, h, s, j, fmt, decimal):
    """Structural report for a family from a file or a named constructor."""
    if input_file is None and kind is None:
        raise click.UsageError("give an input file or --kind with parameters")
    if input_file is not None:
        with open(input_file, "r", encoding="utf-8") as fh:
            fam = parse_family_file(fh.read())
    else:
        if n is None or k is None:
            raise click.UsageError("--kind needs --n and --k")
        fam = _build_family(kind, n, k, t, h, s)
    rows: dict[str, object] = {}
    if fam is None or len(fam) == 0:
        rows["size"] = 0
    else:
        rows["size"] = len(fam)
        rows["k"] = fam.k
        if 0 < j < fam.k:
            rows["shadow_size"] = len(shadow_j(fam, j))
            rows["shadow_ratio"] = shadow_ratio(fam, j)
        rows["shifted"] = is_shifted(fam)
        rows["t_intersecting"] = is_t_intersecting(fam, t)
        pseudo = is_pseudo_t_intersecting(fam, t)
        rows["pseudo_t_intersecting"] = pseudo
        if pseudo:
            rows["width"] = width(fam, t)
        counts = base_decomposition(fam, fam.k, t).counts
        rows["base_levels"] = {str(ell): c for ell, c in sorted(counts.items())}
        rows["t_star"] = is_t_star(fam, t)
        rows["semistar"] = is_semistar(fam, t)
    if fmt == "json":
        payload = {
            "params": {"t": t, "j": j, "source": input_file or kind},
            "results": [
                {key: (str(v) if isinstance(v, Fraction) else v) for key, v in rows.items()}
            ],
            "meta": JSON_META,
        }
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for key, value in rows.items():
            if isinstance(value, dict):
                value = " ".join(f"{a}:{b}" for a, b in value.items())
                click.echo(f"{key}: {value}")
            else:
                click.echo(f"{key}: {_fmt(value, decimal)}")


_BOUND_SPECS: dict[str, tuple[tuple[str, ...], object]] = {
    "sperner": (("n", "k", "j"), bounds_mod.sperner_ratio),
    "katona": (("k", "t", "ell"), bounds_mod.katona_ratio),
    "thm14": (("k", "t", "j"), bounds_mod.thm14_bound),
    "thm14-threshold": (("k", "t", "j"), bounds_mod.thm14_threshold),
    "thm210": (("t", "w", "j"), bounds_mod.thm210_bound),
    "gamma": (("w", "t", "j"), bounds_mod.gamma),
    "alpha3": (("k", "t", "j"), bounds_mod.alpha3),
    "beta3": (("k", "t", "j"), bounds_mod.beta3),
    "alpha7": (("w", "k", "t", "j"), bounds_mod.alpha7),
    "beta7": (("w", "t", "j"), bounds_mod.beta7),
    "semistar": (("t", "j"), bounds_mod.semistar_bound),
    "star": (("t", "j"), bounds_mod.star_bound),
    "universal": (("n", "k", "t"), bounds_mod.universal_bound),
    "cor68-threshold": (("n", "k", "t"), bounds_mod.cor68_threshold),
    "thm73-threshold": (("n", "k", "t", "w", "j"), bounds_mod.thm73_threshold),
    "prop211": (("t", "j", "h", "w", "r"), bounds_mod.prop211_check),
}


@cli.command("bounds")
@click.argument("name", type=click.Choice(sorted(_BOUND_SPECS)))
@click.option("--n", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--j", type=int, default=None)
@click.option("--ell", "--l", "ell", type=int, default=None)
@click.option("--w", type=int, default=None)
@click.option("--h", type=int, default=None)
@click.option("--r", type=int, default=None)
@click.option("--decimal", is_flag=True)
def cmd_bounds(name, n, k, t, j, ell, w, h, r, decimal):
    """Evaluate one closed-form bound; prints an exact rational or integer."""
    arg_names, fn = _BOUND_SPECS[name]
    supplied = {"n": n, "k": k, "t": t, "j": j, "ell": ell, "w": w, "h": h, "r": r}
    args = []
    for an in arg_names:
        if supplied[an] is None:
            raise click.UsageError(f"bound {name!r} needs --{an}")
        args.append(supplied[an])
    try:
        value = fn(*args)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if isinstance(value, tuple):
        click.echo(" ".join(_fmt(v, decimal) for v in value))
    else:
        click.echo(_fmt(Fraction(value), decimal) if not isinstance(value, bool) else _fmt(value, decimal))


@cli.command("verify")
@click.argument("theorem", type=click.Choice(CHECKER_IDS))
@click.option("--n", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--j", type=int, default=None)
@click.option("--ell", "--l", "ell", type=int, default=None)
@click.option("--w", type=int, default=None)
@click.option("--count", type=int, default=200, show_default=True,
              help="seeded families per sampled checker")
@click.option("--seed0", type=int, default=None, help="base seed (default SHADOWLAB_SEED)")
@click.option("--s", "s_values", type=int, multiple=True, help="scan values for prop1.6")
@click.option("--n-min", type=int, default=None)
@click.option("--n-max", type=int, default=None)
def cmd_verify(theorem, n, k, t, j, ell, w, count, seed0, s_values, n_min, n_max):
    """Run one theorem checker; exit 0 on holds, 2 on counterexample."""
    params: dict = {}
    for key, val in (("n", n), ("k", k), ("t", t), ("j", j), ("ell", ell), ("w", w)):
        if val is not None:
            params[key] = val
    if theorem == "prop1.6":
        if s_values:
            params["s_values"] = tuple(s_values)
        if n_min is not None and n_max is not None:
            params["n_values"] = tuple(range(n_min, n_max + 1))
        params.pop("n", None)
    elif theorem not in ("thm1.3", "thm6.2"):
        params["count"] = count
        params["seed0"] = seed0 if seed0 is not None else default_seed()
    try:
        report = check_theorem(theorem, **params)
    except TypeError as exc:
        raise click.UsageError(f"bad or missing parameters for {theorem}: {exc}")
    except KeyError as exc:
        raise click.UsageError(f"missing parameter for {theorem}: {exc}")
    click.echo(f"theorem: {report.theorem}")
    click.echo(f"params: {json.dumps(report.params, sort_keys=True, default=str)}")
    click.echo(f"verdict: {report.verdict}")
    for key, value in sorted(report.details.items(), key=lambda kv: kv[0]):
        click.echo(f"{key}: {value}")
    if report.witness is not None:
        click.echo("witness:")
        _echo_family(report.witness)
    click.echo(f"runtime_s: {report.runtime_s:.3f}")
    if not report.holds:
        sys.exit(2)


@cli.command("oracle")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--t", type=int, required=True)
@click.option("--j", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="text")
def cmd_oracle(n, k, t, j, fmt):
    """Exhaustive per-size minimum shadow table with witnesses."""
    table = min_shadow_table(n, k, t, j)
    if fmt == "csv":
        click.echo(min_shadow_table_csv(table), nl=False)
    elif fmt == "json":
        payload = {
            "params": {"n": n, "k": k, "t": t, "j": j},
            "results": [
                {
                    "size": size,
                    "min_shadow": table.rows[size],
                    "witness": [f"0x{m:x}" for m in sorted(table.witnesses[size])],
                }
                for size in sorted(table.rows)
            ],
            "meta": JSON_META,
        }
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(f"minimum |shadow^{j}| over t-intersecting families, n={n} k={k} t={t}")
        for size in sorted(table.rows):
            witness = Family.from_masks(table.witnesses[size], k)
            members = "; ".join(" ".join(str(e) for e in m.elements) for m in witness)
            click.echo(f"size {size}: min {table.rows[size]}  [{members}]")


@cli.command("scan-example15")
@click.option("--k", type=int, required=True)
@click.option("--t", type=int, required=True)
@click.option("--j", type=int, required=True)
@click.option("--s", "s_values", type=int, multiple=True, required=True)
@click.option("--n-min", type=int, required=True)
@click.option("--n-max", type=int, required=True)
@click.option("--verify-explicit", is_flag=True,
              help="rebuild the first witness explicitly and re-measure it")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="text")
def cmd_scan_example15(k, t, j, s_values, n_min, n_max, verify_explicit, fmt):
    """Scan the union construction for points beating the large-family bound."""
    report = scan_example15(k, t, j, s_values, range(n_min, n_max + 1),
                            verify_explicit=verify_explicit)
    if fmt == "csv":
        click.echo("s,n,family_size,shadow_size,ratio,bound,epsilon,"
                   "t_intersecting,exceeds_layer,beats_bound")
        for r in report.rows:
            click.echo(
                f"{r.s},{r.n},{r.family_size},{r.shadow_size},{r.ratio},{r.bound},"
                f"{r.epsilon},{_fmt(r.t_intersecting, False)},"
                f"{_fmt(r.exceeds_layer, False)},{_fmt(r.beats_bound, False)}"
            )
    elif fmt == "json":
        payload = {
            "params": {"k": k, "t": t, "j": j, "s_values": list(s_values),
                       "n_min": n_min, "n_max": n_max},
            "results": [
                {
                    "s": r.s, "n": r.n, "family_size": r.family_size,
                    "shadow_size": r.shadow_size, "ratio": str(r.ratio),
                    "bound": str(r.bound), "epsilon": str(r.epsilon),
                    "t_intersecting": r.t_intersecting,
                    "exceeds_layer": r.exceeds_layer,
                    "beats_bound": r.beats_bound,
                }
                for r in report.rows
            ],
            "meta": JSON_META,
        }
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for r in report.rows:
            flags = []
            if r.exceeds_layer:
                flags.append("exceeds-layer")
            if r.beats_bound:
                flags.append("beats-bound")
            click.echo(
                f"s={r.s} n={r.n} size={r.family_size} shadow={r.shadow_size} "
                f"ratio={r.ratio} bound={r.bound} {' '.join(flags)}".rstrip()
            )
        for note in report.notes:
            click.echo(f"# {note}")
        click.echo(f"# witnesses: {len(report.witnesses)}")


def main(argv: list[str] | None = None) -> int:
    """Invoke the CLI with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except SystemExit as exc:
        return int(exc.code or 0)
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except CapacityError as exc:
        click.echo(f"capacity error: {exc}", err=True)
        return 3
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
