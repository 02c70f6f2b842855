"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors (bad flags, malformed or
inconsistent partitions), 2 on computation errors.  Results go to stdout
exclusively; diagnostics go to stderr.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path
from typing import Optional

import click

from . import config
from .errors import ComputationError
from .hwv import hwv_space
from .partitions import format_partition, parse_partition
from .plethystic import enumerate_pssyt, enumerate_pssyt_weight, format_pssyt, maximal_weights
from .symfunc import decompose, default_letters, plethysm_coefficient
from . import verify as verify_mod

CACHE_ENV = "PLETHYSM_CACHE_DIR"


class PartitionParam(click.ParamType):
    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return parse_partition(value)
        except ValueError as exc:
            raise click.UsageError(f"{param.get_error_hint(ctx)}: {exc}") from None


PARTITION = PartitionParam()


def _emit(data: dict, fmt: str, text_renderer) -> None:
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))
    else:
        click.echo(text_renderer(data))


@click.group()
@click.option("--threads", type=int, default=1, show_default=True,
              help="Worker-thread cap for parallelizable core routines.")
def cli(threads: int) -> None:
    """Exact plethysm of Schur functions: decompositions, coefficients,
    plethystic tableaux, highest-weight vectors, and identity checks."""
    config.set_threads(threads)


@cli.command("decompose")
@click.option("--nu", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--d", type=int, default=None, help="Letter count (default: enough for a complete expansion).")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.option("--cache", type=click.Path(file_okay=False), default=None,
              help=f"Directory for persisted decompositions (or ${CACHE_ENV}).")
def decompose_cmd(nu, mu, d, fmt, cache):
    """Schur expansion of the plethysm of s_nu into s_mu."""
    if d is None:
        d = default_letters(nu, mu)
    cache_dir = cache or os.environ.get(CACHE_ENV)
    payload = None
    cache_file: Optional[Path] = None
    if cache_dir:
        name = "decompose_nu-{}_mu-{}_d{}.json".format(
            "-".join(map(str, nu)) or "0", "-".join(map(str, mu)) or "0", d
        )
        cache_file = Path(cache_dir) / name
        if cache_file.is_file():
            payload = json.loads(cache_file.read_text())
    if payload is None:
        payload = decompose(nu, mu, d).to_json()
        if cache_file is not None:
            cache_file.parent.mkdir(parents=True, exist_ok=True)
            cache_file.write_text(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")

    def text(data):
        lines = [f"plethysm of degree {data['degree']}:"]
        for term in data["terms"]:
            lines.append(f"  {term['coeff']:>3}  s{format_partition(term['lambda'])}")
        return "\n".join(lines)

    _emit(payload, fmt, text)


@cli.command("coeff")
@click.option("--nu", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
def coeff_cmd(nu, mu, lam, fmt):
    """Single Schur coefficient of the plethysm."""
    value = plethysm_coefficient(nu, mu, lam)
    data = {
        "nu": list(nu), "mu": list(mu), "lambda": list(lam), "coefficient": value,
    }
    _emit(data, fmt, lambda d: str(d["coefficient"]))


@cli.command("maximal")
@click.option("--nu", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--d", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
def maximal_cmd(nu, mu, d, fmt):
    """Dominance-maximal constituents with multiplicities."""
    weights = maximal_weights(mu, nu, d)
    data = {
        "nu": list(nu), "mu": list(mu),
        "weights": [
            {"lambda": list(w), "count": c}
            for w, c in sorted(weights.items(), reverse=True)
        ],
    }

    def text(d_):
        return "\n".join(
            f"{format_partition(w['lambda'])}: {w['count']}" for w in d_["weights"]
        ) or "(none)"

    _emit(data, fmt, text)


@cli.command("pssyt")
@click.option("--nu", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--weight", type=PARTITION, default=None)
@click.option("--d", type=int, default=None)
@click.option("--limit", type=int, default=None, help="Emit at most this many tableaux.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
def pssyt_cmd(nu, mu, weight, d, limit, fmt):
    """Enumerate plethystic semistandard tableaux."""
    if weight is not None:
        tabs = enumerate_pssyt_weight(mu, nu, weight, d)
    else:
        if d is None:
            d = sum(mu) * sum(nu)
        tabs = enumerate_pssyt(mu, nu, d)
    total = len(tabs)
    if limit is not None:
        tabs = tabs[:limit]
    data = {
        "nu": list(nu), "mu": list(mu), "count": total,
        "tableaux": [
            {"tableau": format_pssyt(T), "weight": list(T.weight())} for T in tabs
        ],
    }

    def text(d_):
        lines = [f"count: {d_['count']}"]
        lines += [f"  {t['tableau']}   weight {format_partition(t['weight'])}" for t in d_["tableaux"]]
        return "\n".join(lines)

    _emit(data, fmt, text)


@cli.command("hwv")
@click.option("--nu", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--d", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
def hwv_cmd(nu, mu, lam, d, fmt):
    """Integral basis of highest-weight vectors of the given weight."""
    vectors = hwv_space(mu, nu, lam, d)
    data = {
        "nu": list(nu), "mu": list(mu), "lambda": list(lam),
        "dimension": len(vectors),
        "vectors": [v.to_json() for v in vectors],
    }

    def text(d_):
        lines = [f"dimension: {d_['dimension']}"]
        for i, v in enumerate(d_["vectors"], start=1):
            lines.append(f"vector {i} (weight {format_partition(v['weight'])}):")
            for term in v["terms"]:
                lines.append(f"  {term['coeff']:>3}  {term['tableau']}")
        return "\n".join(lines)

    _emit(data, fmt, text)


@cli.command("verify")
@click.option("--theorem", type=click.Choice(["1", "1t", "2", "3", "5"]), required=True)
@click.option("--nu", type=PARTITION, default=None)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--lambda", "lam", type=PARTITION, default=None)
@click.option("--r", type=int, default=None)
@click.option("--n-max", type=int, default=3, show_default=True)
@click.option("--n", type=int, default=None)
@click.option("--n-star", type=int, default=None)
@click.option("--lambda-star", "lamstar", type=PARTITION, default=None)
@click.option("--witnesses/--no-witnesses", default=False,
              help="For --theorem 3, also build and check product witnesses.")
def verify_cmd(theorem, nu, mu, lam, r, n_max, n, n_star, lamstar, witnesses):
    """Check one identity instance; emits a JSON-lines report."""
    if theorem in {"1", "1t", "2"}:
        if nu is None or lam is None or r is None:
            raise click.UsageError(f"--theorem {theorem} needs --nu, --lambda and --r")
        if theorem == "1":
            report = verify_mod.verify_theorem1(nu, mu, lam, r)
        elif theorem == "1t":
            report = verify_mod.verify_theorem1_twisted(nu, mu, lam, r)
        else:
            report = verify_mod.verify_theorem2(nu, mu, lam, r, n_max)
    elif theorem == "3":
        if n is None or n_star is None or lam is None or lamstar is None:
            raise click.UsageError("--theorem 3 needs --n, --n-star, --lambda and --lambda-star")
        report = verify_mod.verify_theorem3(n, n_star, mu, lam, lamstar, witnesses)
    else:
        if nu is None:
            raise click.UsageError("--theorem 5 needs --nu")
        report = verify_mod.verify_theorem5(nu, mu)
    click.echo(json.dumps(report.to_json(), sort_keys=True, separators=(",", ":")))
    if report.verdict == "fail":
        sys.exit(2)


def main(argv: Optional[list[str]] = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        print(f"usage error: {exc.format_message()}", file=sys.stderr)
        return 1
    except click.ClickException as exc:
        print(f"error: {exc.format_message()}", file=sys.stderr)
        return 1
    except click.exceptions.Abort:
        return 1
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
