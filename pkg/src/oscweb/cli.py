"""Command-line front end.

Commands speak newline-delimited JSON on stdin/stdout (``-`` means the
standard stream), emit tab-separated summaries for the verification suites,
and write DOT or SVG files for webs.  Exit codes: 0 success, 1 a
verification found a counterexample, 2 bad usage or invalid input.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .errors import ContainsIdentityWeb, InternalError, ValidationError
from .render import (
    parse_dot,
    render_dot,
    render_svg,
    save_count_figure,
    save_csp_figure,
)
from .rotation import (
    promotion_order,
    rotate_string,
    rotate_string_oracle,
    rotate_word_allblack,
)
from .sieving import (
    csp_check,
    enumerate_dominant_strings,
    enumerate_got,
    enumerate_syt,
)
from .strings import (
    first_return_by_counting,
    first_return_indices,
    format_word,
    got_from_string,
    parse_word,
    string_from_got,
    string_from_json,
    string_of_word,
    string_to_json,
    word_from_syt,
)
from .tableaux import (
    GeneralizedOscillatingTableau,
    classical_promotion,
    promote_growth,
    promote_tableau,
)
from .webs import (
    POLICIES,
    Web,
    canonical_form,
    contains_identity_component,
    grow_order_independent,
    grow_web,
    left_cut,
    right_cut,
    rotate_web,
    validate_web,
)

# ---------------------------------------------------------------------------
# verification suites (stable entry points for the CLI and the test harness)


def run_equivalence_suite(max_length: int, parts: int = 3):
    """Growth-rule and sliding promotion on every tableau up to the bound."""
    rows, failures = [], []
    for k in range(max_length + 1):
        before = len(failures)
        checked = 0
        for got in enumerate_got(k, parts):
            checked += 1
            grown, _ = promote_growth(got)
            slid = promote_tableau(got)
            if grown != slid:
                failures.append(
                    {"suite": "equivalence", "k": k, "tableau": got.to_json()}
                )
        rows.append((k, checked, len(failures) - before))
    return rows, failures


def run_main_theorem_suite(max_length: int):
    """Promotion equals rotation on every dominant string up to the bound.

    Each length is handled as one batch: every string is grown once and
    indexed by the canonical form of its web, so the rotated web can be
    matched back to its unique source string by lookup instead of search.
    The batch also certifies that distinct strings grow distinct webs.
    """
    rows, failures = [], []
    for k in range(max_length + 1):
        before = len(failures)
        by_canon = {}
        batch = []
        checked = 0
        for string in enumerate_dominant_strings(k):
            checked += 1
            web = grow_web(string)
            canon = canonical_form(web)
            if canon in by_canon:
                failures.append(
                    {
                        "suite": "main-theorem",
                        "k": k,
                        "reason": "two strings grew the same web",
                        "string": string_to_json(string),
                        "other": string_to_json(by_canon[canon]),
                    }
                )
                continue
            by_canon[canon] = string
            batch.append(
                (
                    string,
                    canonical_form(rotate_web(web)),
                    contains_identity_component(web),
                )
            )
        for string, rotated_canon, has_identity in batch:
            promoted, _ = promote_growth(got_from_string(string))
            left = string_from_got(promoted)
            right = by_canon.get(rotated_canon)
            ok = right is not None and left == right
            if ok and not has_identity:
                ok = rotate_string(string) == left
            if not ok:
                failures.append(
                    {
                        "suite": "main-theorem",
                        "k": k,
                        "string": string_to_json(string),
                        "promoted": string_to_json(left),
                        "rotated": None if right is None else string_to_json(right),
                    }
                )
        rows.append((k, checked, len(failures) - before))
    return rows, failures


def run_structural_suite(max_length: int):
    """Grow every dominant string under both policies and validate the web:
    bipartite, trivalent and tricolored inside, all internal faces with at
    least six sides, policies agreeing edge for edge."""
    rows, failures = [], []
    for k in range(max_length + 1):
        before = len(failures)
        checked = 0
        for string in enumerate_dominant_strings(k):
            checked += 1
            try:
                validate_web(grow_order_independent(string))
            except Exception as exc:  # any breakage is a counterexample
                failures.append(
                    {
                        "suite": "invariants",
                        "check": "structure",
                        "k": k,
                        "string": string_to_json(string),
                        "error": str(exc),
                    }
                )
        rows.append((k, checked, len(failures) - before))
    return rows, failures


def run_orbit_suite(max_length: int):
    """Promotion applied k times fixes every string-derived tableau."""
    rows, failures = [], []
    for k in range(max_length + 1):
        before = len(failures)
        checked = 0
        for string in enumerate_dominant_strings(k):
            checked += 1
            try:
                order = promotion_order(got_from_string(string), limit=max(k, 1))
            except InternalError:
                order = 0
            if order == 0 or k % order:
                failures.append(
                    {
                        "suite": "invariants",
                        "check": "orbit",
                        "k": k,
                        "string": string_to_json(string),
                        "order": order,
                    }
                )
        rows.append((k, checked, len(failures) - before))
    return rows, failures


def run_ppr_suite(max_word_length: int = 12):
    """All-black consistency sweep: first returns by wall-crossing, by
    letter counting, and by cutting the web all agree; the three marked
    vertices are distinct; rotating the word is classical promotion."""
    rows, failures = [], []
    for n in range(1, max_word_length // 3 + 1):
        before = len(failures)
        checked = 0
        for tableau in enumerate_syt((n, n, n)):
            checked += 1
            word = word_from_syt(tableau)
            string = string_of_word(word)
            returns = first_return_by_counting(word)
            problems = []
            if first_return_indices(string) != returns:
                problems.append("wall-crossing first returns disagree")
            web = grow_web(string)
            first = web.boundary[0]
            ends = (left_cut(web, first), right_cut(web, first))
            if ends != (returns[0] - 1, returns[1] - 1):
                problems.append("cut endpoints disagree with letter counts")
            if len({first, *ends}) != 3:
                problems.append("marked vertices are not distinct")
            if rotate_word_allblack(word) != word_from_syt(
                classical_promotion(tableau)
            ):
                problems.append("word rotation differs from promotion")
            for problem in problems:
                failures.append(
                    {
                        "suite": "ppr",
                        "n": n,
                        "word": format_word(word),
                        "reason": problem,
                    }
                )
        rows.append((3 * n, checked, len(failures) - before))
    return rows, failures


DEFAULT_CSP_GRID = tuple(
    [(2, n) for n in range(1, 7)] + [(3, n) for n in range(1, 5)]
)


def run_csp_suite(pairs=DEFAULT_CSP_GRID, tolerance: float = 1e-6):
    reports = [csp_check(rows, cols, tolerance=tolerance) for rows, cols in pairs]
    failures = [
        {
            "suite": "csp",
            "rows": report.rows,
            "cols": report.cols,
            "max_error": report.max_error,
            "fixed_counts": list(report.fixed_counts),
        }
        for report in reports
        if not report.ok
    ]
    return reports, failures


# ---------------------------------------------------------------------------
# command plumbing


def _translated(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValidationError as exc:
            raise click.UsageError(str(exc)) from exc
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"bad JSON input: {exc}") from exc

    return wrapper


def _json_lines(handle):
    for line in handle:
        line = line.strip()
        if line:
            yield json.loads(line)


def _got_from_data(data) -> GeneralizedOscillatingTableau:
    if isinstance(data, dict):
        try:
            return GeneralizedOscillatingTableau.from_json(data)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"not a tableau object: {data!r}") from exc
    if isinstance(data, list):
        return got_from_string(string_from_json(data))
    raise ValidationError(f"expected a tableau object or a string array, got {data!r}")


def _web_from_data(data) -> Web:
    if isinstance(data, dict):
        return Web.from_json(data)
    if isinstance(data, list):
        return grow_web(string_from_json(data))
    raise ValidationError(f"expected a web object or a string array, got {data!r}")


def _emit_summary(name, header, rows, failures, figure, figure_title):
    click.echo("\t".join(header))
    for row in rows:
        click.echo("\t".join(str(item) for item in row))
    click.echo(f"result\t{'FAIL' if failures else 'PASS'}")
    for failure in failures:
        click.echo(json.dumps(failure), err=True)
    if figure:
        counts = {row[0]: row[1] for row in rows}
        save_count_figure(
            counts,
            figure,
            title=figure_title,
            xlabel="length",
            ylabel="cases checked",
        )
    if failures:
        sys.exit(1)


@click.group()
@click.version_option(package_name="oscweb")
def main():
    """Generalized oscillating tableaux, webs, promotion, and rotation."""


@main.command("enumerate")
@click.option("--length", "-k", type=click.IntRange(min=0), required=True)
@click.option("--parts", "-n", type=click.IntRange(min=1), default=3, show_default=True)
@click.option(
    "--webs-only",
    is_flag=True,
    help="Emit only dominant signature/state strings (three parts).",
)
@_translated
def cmd_enumerate(length, parts, webs_only):
    """List tableaux of a given length, or the dominant strings, as JSON lines."""
    if webs_only:
        if parts != 3:
            raise click.UsageError("--webs-only requires --parts 3")
        for string in enumerate_dominant_strings(length):
            click.echo(json.dumps(string_to_json(string)))
    else:
        for got in enumerate_got(length, parts):
            click.echo(json.dumps(got.to_json()))


@main.command("promote")
@click.argument("source", type=click.File("r"), default="-")
@click.option(
    "--mode",
    type=click.Choice(["growth", "tableau"]),
    default="growth",
    show_default=True,
)
@click.option("--steps", type=click.IntRange(min=0), default=1, show_default=True)
@click.option(
    "--check", is_flag=True, help="Run both modes each step and insist they agree."
)
@_translated
def cmd_promote(source, mode, steps, check):
    """Promote tableaux (or dominant strings) read as JSON lines."""
    for data in _json_lines(source):
        cursor = _got_from_data(data)
        for _ in range(steps):
            grown = None
            if mode == "growth" or check:
                grown, _ = promote_growth(cursor)
            if mode == "tableau" or check:
                slid = promote_tableau(cursor)
            if check and grown != slid:
                click.echo(
                    json.dumps({"disagreement": cursor.to_json()}), err=True
                )
                sys.exit(1)
            cursor = grown if mode == "growth" else slid
        click.echo(json.dumps(cursor.to_json()))


@main.command("grow")
@click.argument("source", type=click.File("r"), default="-")
@click.option(
    "--policy", type=click.Choice(POLICIES), default="leftmost-first", show_default=True
)
@click.option(
    "--check-policies",
    is_flag=True,
    help="Grow under both scanning policies and insist the webs agree.",
)
@click.option("--word", default=None, help="Grow one all-black word such as 1101m00mm.")
@_translated
def cmd_grow(source, policy, check_policies, word):
    """Grow webs from dominant strings (JSON lines in, web JSON lines out)."""
    if word is not None:
        strings = [string_of_word(parse_word(word))]
    else:
        strings = (string_from_json(data) for data in _json_lines(source))
    for string in strings:
        if check_policies:
            web = grow_order_independent(string, policy)
        else:
            web = grow_web(string, policy)
        click.echo(json.dumps(web.to_json()))


@main.command("rotate")
@click.argument("source", type=click.File("r"), default="-")
@click.option(
    "--method",
    type=click.Choice(["auto", "table", "search"]),
    default="auto",
    show_default=True,
    help="Three-position rule, web search, or the rule with search fallback.",
)
@click.option("--steps", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--word", default=None, help="Rotate one all-black word such as 110m0m.")
@_translated
def cmd_rotate(source, method, steps, word):
    """Rotate dominant strings one boundary vertex at a time."""
    if word is not None:
        cursor = parse_word(word)
        for _ in range(steps):
            cursor = rotate_word_allblack(cursor)
        click.echo(format_word(cursor))
        return
    for data in _json_lines(source):
        string = string_from_json(data)
        for _ in range(steps):
            if method == "table":
                string = rotate_string(string)
            elif method == "search":
                string = rotate_string_oracle(string)
            else:
                try:
                    string = rotate_string(string)
                except ContainsIdentityWeb:
                    string = rotate_string_oracle(string)
        click.echo(json.dumps(string_to_json(string)))


@main.command("verify")
@click.argument(
    "suite", type=click.Choice(["main-theorem", "equivalence", "invariants", "csp"])
)
@click.option("--max-length", type=click.IntRange(min=0), default=None)
@click.option("--parts", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--rows", type=click.IntRange(min=1), default=None)
@click.option("--cols", type=click.IntRange(min=1), default=None)
@click.option(
    "--figure",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Also draw the summary as an SVG figure.",
)
@_translated
def cmd_verify(suite, max_length, parts, rows, cols, figure):
    """Run an exhaustive suite; summary to stdout, failures as JSON on stderr."""
    if suite == "equivalence":
        bound = max_length if max_length is not None else (6 if parts >= 3 else 8)
        table, failures = run_equivalence_suite(bound, parts)
        _emit_summary(
            suite,
            ("length", "checked", "failed"),
            table,
            failures,
            figure,
            f"promotion equivalence, {parts} parts",
        )
    elif suite == "main-theorem":
        bound = max_length if max_length is not None else 8
        table, failures = run_main_theorem_suite(bound)
        _emit_summary(
            suite,
            ("length", "checked", "failed"),
            table,
            failures,
            figure,
            "promotion = rotation",
        )
    elif suite == "invariants":
        bound = max_length if max_length is not None else 8
        structure, fail_structure = run_structural_suite(bound)
        orbit, fail_orbit = run_orbit_suite(min(bound, 8))
        click.echo("\t".join(("check", "length", "checked", "failed")))
        for name, table in (("structure", structure), ("orbit", orbit)):
            for row in table:
                click.echo("\t".join((name,) + tuple(str(x) for x in row)))
        failures = fail_structure + fail_orbit
        click.echo(f"result\t{'FAIL' if failures else 'PASS'}")
        for failure in failures:
            click.echo(json.dumps(failure), err=True)
        if figure:
            save_count_figure(
                {row[0]: row[1] for row in structure},
                figure,
                title="web invariants",
                xlabel="length",
                ylabel="cases checked",
            )
        if failures:
            sys.exit(1)
    else:  # csp
        if (rows is None) != (cols is None):
            raise click.UsageError("--rows and --cols go together")
        pairs = DEFAULT_CSP_GRID if rows is None else ((rows, cols),)
        reports, failures = run_csp_suite(pairs)
        click.echo(
            "\t".join(
                ("rows", "cols", "order", "tableaux", "max_error", "ok")
            )
        )
        for report in reports:
            click.echo(
                "\t".join(
                    str(x)
                    for x in (
                        report.rows,
                        report.cols,
                        report.order,
                        report.tableau_count,
                        f"{report.max_error:.3g}",
                        report.ok,
                    )
                )
            )
        click.echo(f"result\t{'FAIL' if failures else 'PASS'}")
        for failure in failures:
            click.echo(json.dumps(failure), err=True)
        if figure:
            save_csp_figure(reports, figure)
        if failures:
            sys.exit(1)


@main.command("csp")
@click.option("--rows", "-b", type=click.IntRange(min=1), required=True)
@click.option("--cols", "-n", type=click.IntRange(min=1), required=True)
@click.option("--tolerance", type=float, default=1e-6, show_default=True)
@click.option(
    "--figure",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Also draw the d-table as an SVG figure.",
)
@_translated
def cmd_csp(rows, cols, tolerance, figure):
    """Fixed points of promotion powers against the q-analog at roots of unity."""
    report = csp_check(rows, cols, tolerance=tolerance)
    click.echo("\t".join(("d", "fixed", "value", "error")))
    for d, (fixed, value) in enumerate(
        zip(report.fixed_counts, report.evaluations), start=1
    ):
        error = abs(value - fixed)
        click.echo(f"{d}\t{fixed}\t{value.real:.6f}{value.imag:+.6f}j\t{error:.3g}")
    click.echo(f"result\t{'PASS' if report.ok else 'FAIL'}")
    if figure:
        save_csp_figure([report], figure)
    if not report.ok:
        sys.exit(1)


@main.command("render")
@click.argument("source", type=click.File("r"), default="-")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["dot", "svg"]),
    default="svg",
    show_default=True,
)
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, writable=True, allow_dash=True),
    required=True,
)
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option(
    "--spacing",
    type=float,
    default=None,
    help="Preferred interior edge length for the layout.",
)
@click.option("--no-labels", is_flag=True, help="Skip edge state labels in SVG.")
@_translated
def cmd_render(source, fmt, output, radius, spacing, no_labels):
    """Draw one web (JSON or DOT in) as SVG, or export annotated DOT text."""
    text = source.read().strip()
    if not text:
        raise click.UsageError("no web on input")
    if text.startswith("graph"):
        web = parse_dot(text)
    else:
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise click.UsageError("render expects exactly one web")
        web = _web_from_data(json.loads(lines[0]))
    if fmt == "dot":
        dot = render_dot(web)
        if output == "-":
            click.echo(dot, nl=False)
        else:
            with open(output, "w") as handle:
                handle.write(dot)
    else:
        if output == "-":
            raise click.UsageError("SVG output needs a file path")
        render_svg(web, output, radius=radius, spacing=spacing, labels=not no_labels)


if __name__ == "__main__":
    main()
