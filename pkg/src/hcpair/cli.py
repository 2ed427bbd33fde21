"""Command-line entry point: ``hcpair <command> FILE [options]``.

Exit codes: 0 all checks pass, 1 a verification fails, 2 bad input,
3 unsupported characteristic.
"""
from __future__ import annotations

import sys
import time
from pathlib import Path
from typing import Any, Callable

import click

from .dhcp import (
    DHCPData,
    EnvelopingH,
    LieAxiomError,
    alpha_roundtrip,
    build_H,
    from_lie_superalgebra,
    roundtrip_pair,
    verify_dhcp,
)
from .hcp import (
    associated_dhcp,
    RestrictionError,
    beta_roundtrip,
    build_A,
    pair_H_A,
    roundtrip_hcp,
    unipotence_check,
    verify_hcp,
)
from .hopfcore import (
    HopfSuperAlgebraData,
    dual,
    is_irreducible,
    is_semisimple_algebra,
    verify_hopf,
    verify_super_cocommutative,
    verify_super_commutative,
)
from .io import Document, SchemaError, dump_hopf, dumps, load
from .report import Report
from .rewrite import NonTermination, OrderViolation, PresentationError, check_overlaps, normalize
from .superlin import FieldSpec, UnsupportedCharacteristic
from .superlin.field import FieldError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CHAR = 0, 1, 2, 3


class Failure(Exception):
    """Carries an exit code and a message up to :func:`_run`."""

    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


class Ctx:
    def __init__(self, field: str | None, out: str, degree_bound: int, strict: bool, timings: bool) -> None:
        self.field = field
        self.out = out
        self.degree_bound = degree_bound
        self.strict = strict
        self.timings = timings

    def fieldspec(self) -> FieldSpec | None:
        if self.field is None:
            return None
        try:
            return FieldSpec.from_string(self.field)
        except FieldError as exc:
            raise Failure(EXIT_INPUT, f"--field: {exc}") from None

    def load(self, path: str, kinds: tuple[str, ...]) -> Document:
        doc = load(path, self.fieldspec())
        if doc.kind not in kinds:
            raise Failure(EXIT_INPUT, f"{path}: expected kind {' or '.join(kinds)}, got {doc.kind!r}")
        return doc


def _pair_of(doc: Document) -> DHCPData:
    if doc.kind == "lie_superalgebra":
        return from_lie_superalgebra(doc.obj, doc.name)
    return doc.obj


def _emit(ctx: Ctx, payload: dict, reports: list[Report], elapsed: float) -> int:
    passed = all(r.passed for r in reports)
    out = {"status": "pass" if passed else "fail"}
    out.update(payload)
    out["reports"] = [r.to_dict() for r in reports]
    if ctx.timings:
        out["timings"] = {"seconds": round(elapsed, 3)}
    if ctx.out == "json":
        click.echo(dumps(out), nl=False)
    else:
        for k, v in payload.items():
            if isinstance(v, (str, int, float, bool)) or v is None:
                click.echo(f"{k}: {v}")
        for r in reports:
            click.echo(r.table())
        if ctx.timings:
            click.echo(f"time: {elapsed:.3f}s")
    return EXIT_OK if passed else EXIT_FAIL


def _run(ctx: Ctx, body: Callable[[], tuple[dict, list[Report]]]) -> None:
    t0 = time.perf_counter()
    try:
        payload, reports = body()
        code = _emit(ctx, payload, reports, time.perf_counter() - t0)
    except Failure as exc:
        click.echo(f"error: {exc}", err=True)
        code = exc.code
    except UnsupportedCharacteristic as exc:
        click.echo(f"unsupported characteristic: {exc}", err=True)
        code = EXIT_CHAR
    except (SchemaError, FieldError, PresentationError, LieAxiomError, OSError) as exc:
        click.echo(f"input error: {exc}", err=True)
        code = EXIT_INPUT
    except (RestrictionError, NonTermination, OrderViolation) as exc:
        click.echo(f"verification failed: {exc}", err=True)
        code = EXIT_FAIL
    sys.exit(code)


def common(f):
    f = click.option("--timings", is_flag=True, help="Add wall-clock timings in a separate field.")(f)
    f = click.option("--strict", is_flag=True, help="Assert that every rewrite step decreases the word order.")(f)
    f = click.option("--degree-bound", type=click.IntRange(0), default=4, show_default=True,
                     help="Degree bound for checks on infinite-dimensional objects.")(f)
    f = click.option("--out", type=click.Choice(["json", "table"]), default="json", show_default=True)(f)
    f = click.option("--field", default=None, help="Q or Fp:<p>; overrides the field declared in the file.")(f)
    return f


def _ctx(field, out, degree_bound, strict, timings) -> Ctx:
    return Ctx(field, out, degree_bound, strict, timings)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Build and verify Hopf superalgebras from (dual) Harish-Chandra pairs."""


# -- Hopf superalgebras ---------------------------------------------------------------

def _hopf_reports(h: HopfSuperAlgebraData) -> list[Report]:
    return [verify_hopf(h)]


def _flags(h: HopfSuperAlgebraData) -> dict:
    return {
        "dim": h.dim,
        "super_commutative": verify_super_commutative(h).passed,
        "super_cocommutative": verify_super_cocommutative(h).passed,
    }


@main.command("verify-hopf")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def verify_hopf_cmd(path, **opts):
    """Check the Hopf superalgebra axioms of a structure-constant file."""
    ctx = _ctx(**opts)

    def body():
        h = ctx.load(path, ("hopf",)).obj
        return _flags(h), _hopf_reports(h)

    _run(ctx, body)


# -- dual pairs -------------------------------------------------------------------------

@main.command("build-h")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def build_h_cmd(path, **opts):
    """Construct H(J, V); finite J gives structure constants."""
    ctx = _ctx(**opts)

    def body():
        d = _pair_of(ctx.load(path, ("dhcp", "lie_superalgebra")))
        if d.J.kind == "enveloping":
            eh = EnvelopingH(d)
            reps = [eh.verify_upto(min(ctx.degree_bound, 3))]
            payload = {"dim": "infinite", "filtration_dims": _filtration_dims(eh, ctx.degree_bound)}
            return payload, reps
        h = build_H(d)
        rep = verify_hopf(h.hopf)
        return {"dim": h.hopf.dim, "structure": dump_hopf(h.hopf), **_flags(h.hopf)}, [rep]

    _run(ctx, body)


def _filtration_dims(eh: EnvelopingH, bound: int) -> list[int]:
    basis = eh.basis_upto(bound)
    return [sum(1 for m, S in basis if len(m) + len(S) <= n) for n in range(bound + 1)]


@main.command("verify-dhcp")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def verify_dhcp_cmd(path, **opts):
    """Check conditions (a) to (d) of a dual Harish-Chandra pair."""
    ctx = _ctx(**opts)

    def body():
        doc = ctx.load(path, ("dhcp", "lie_superalgebra"))
        if doc.kind == "lie_superalgebra":
            lrep = doc.obj.verify()
            if not lrep.passed:
                return {}, [lrep]
        d = _pair_of(doc)
        reps = [verify_dhcp(d)]
        if d.J.kind == "enveloping" and d.field.characteristic == 0 and reps[0].passed and doc.kind == "lie_superalgebra":
            reps.append(EnvelopingH(d).kostant_check(ctx.degree_bound))
        return {"X": list(d.X)}, reps

    _run(ctx, body)


@main.command("check-overlaps")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def check_overlaps_cmd(path, **opts):
    """Resolve every overlap ambiguity of the rewriting system."""
    ctx = _ctx(**opts)

    def body():
        d = _pair_of(ctx.load(path, ("dhcp", "lie_superalgebra")))
        return {}, [check_overlaps(d.presentation, strict=ctx.strict)]

    _run(ctx, body)


@main.command("normalize")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--word", required=True, help="Space-separated letters from J and X, e.g. 'x g y'.")
@common
def normalize_cmd(path, word, **opts):
    """Normal form of a word in the J-ring of a dual pair."""
    ctx = _ctx(**opts)

    def body():
        d = _pair_of(ctx.load(path, ("dhcp", "lie_superalgebra")))
        P = d.presentation
        try:
            w = P.word(*word.split())
        except KeyError as exc:
            raise Failure(EXIT_INPUT, f"--word: {exc.args[0]}") from None
        nf = normalize(w, P, strict=ctx.strict)
        return {"word": P.fmt_word(next(iter(w))), "normal_form": nf.fmt(), "terms": nf.to_dict()}, []

    _run(ctx, body)


# -- Harish-Chandra pairs ---------------------------------------------------------------

@main.command("verify-hcp")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def verify_hcp_cmd(path, **opts):
    """Check the axioms of a Harish-Chandra pair (C, W)."""
    ctx = _ctx(**opts)

    def body():
        h = ctx.load(path, ("hcp",)).obj
        return {"dim_C": h.C.dim, "dim_W": h.dim_W}, [verify_hcp(h)]

    _run(ctx, body)


@main.command("build-a")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def build_a_cmd(path, **opts):
    """Construct A(C, W) with its structure constants."""
    ctx = _ctx(**opts)

    def body():
        h = ctx.load(path, ("hcp",)).obj
        rep = verify_hcp(h)
        if not rep.passed:
            return {}, [rep]
        a = build_A(h)
        res = Report("restriction residuals")
        for k, v in sorted(a.residuals.items()):
            res.add(k, v == 0, None, str(v))
        return {"dim": a.hopf.dim, "structure": dump_hopf(a.hopf), **_flags(a.hopf)}, [verify_hopf(a.hopf), res]

    _run(ctx, body)


@main.command("pair")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def pair_cmd(path, **opts):
    """Pair H(C*, W*) with A(C, W) and check the Hopf-pairing laws."""
    ctx = _ctx(**opts)

    def body():
        h = ctx.load(path, ("hcp",)).obj
        rep = verify_hcp(h)
        if not rep.passed:
            return {}, [rep]
        a = build_A(h)
        p = pair_H_A(associated_dhcp(h), a)
        F = h.field
        matrix = [[F.format(x) for x in row] for row in p.matrix]
        return {"dim": a.hopf.dim, "H_basis": list(p.h.hopf.names), "A_basis": list(a.hopf.names), "matrix": matrix}, [p.report]

    _run(ctx, body)


@main.command("roundtrip")
@click.argument("path", type=click.Path(dir_okay=False))
@common
def roundtrip_cmd(path, **opts):
    """Round trips through the equivalences, verified as isomorphisms."""
    ctx = _ctx(**opts)

    def body():
        doc = ctx.load(path, ("hopf", "dhcp", "hcp"))
        reps = []
        if doc.kind == "dhcp":
            if doc.obj.J.kind != "finite":
                raise Failure(EXIT_INPUT, "roundtrip needs a finite-dimensional J")
            reps.append(roundtrip_pair(doc.obj)[1])
            reps.append(alpha_roundtrip(build_H(doc.obj).hopf)[1])
        elif doc.kind == "hcp":
            reps.append(roundtrip_hcp(doc.obj)[1])
            reps.append(beta_roundtrip(build_A(doc.obj).hopf).report)
        else:
            h = doc.obj
            reps.append(verify_hopf(h))
            if verify_super_cocommutative(h).passed:
                reps.append(alpha_roundtrip(h)[1])
            if verify_super_commutative(h).passed:
                reps.append(beta_roundtrip(h).report)
            if len(reps) == 1:
                raise Failure(EXIT_INPUT, "neither super-commutative nor super-cocommutative")
        return {}, reps

    _run(ctx, body)


# -- classification -----------------------------------------------------------------------

def _predicates(h: HopfSuperAlgebraData) -> dict:
    F = h.field
    row: dict[str, Any] = _flags(h)
    row["purely_even"] = h.is_purely_even()
    row["irreducible"] = is_irreducible(h)
    row["semisimple"] = is_semisimple_algebra(h)
    hd = dual(h)
    row["dual_irreducible"] = is_irreducible(hd)
    row["dual_semisimple"] = is_semisimple_algebra(hd)
    if row["super_commutative"]:
        u = unipotence_check(h)
        row["unipotent"] = u["A_irreducible"]
        row["unipotent_even_part"] = u["Abar_irreducible"]
        row["unipotence_agree"] = u["agree"]
    if F.characteristic and h.dim < F.characteristic:
        row["nagata_consistent"] = all(
            not (irr and ss) or h2.is_purely_even()
            for h2, irr, ss in ((h, row["irreducible"], row["semisimple"]), (hd, row["dual_irreducible"], row["dual_semisimple"]))
        )
    return row


def classify_file(path: Path, field: FieldSpec | None) -> dict:
    """One summary row; never raises for bad input."""
    row: dict[str, Any] = {"file": path.name}
    try:
        doc = load(path, field)
        row["kind"] = doc.kind
        row["field"] = doc.field.name()
        if doc.kind == "hopf":
            rep, h = verify_hopf(doc.obj), doc.obj
        elif doc.kind == "hcp":
            rep = verify_hcp(doc.obj)
            h = build_A(doc.obj).hopf if rep.passed else None
        elif doc.kind == "lie_superalgebra" and not doc.obj.verify().passed:
            rep, h = doc.obj.verify(), None
        else:
            d = _pair_of(doc)
            rep = verify_dhcp(d)
            h = build_H(d).hopf if rep.passed and d.J.kind == "finite" else None
        row["valid"] = rep.passed
        if not rep.passed:
            row["failed"] = [c.name for c in rep.failures()]
        if h is not None:
            row.update(_predicates(h))
        elif rep.passed:
            row["dim"] = "infinite"
    except UnsupportedCharacteristic as exc:
        row["error"] = f"unsupported characteristic: {exc}"
        row["exit"] = EXIT_CHAR
    except (SchemaError, FieldError, PresentationError, LieAxiomError) as exc:
        row["error"] = str(exc)
        row["exit"] = EXIT_INPUT
    return row


_COLUMNS = ("file", "kind", "valid", "dim", "super_commutative", "super_cocommutative", "purely_even",
            "irreducible", "semisimple", "dual_irreducible", "dual_semisimple", "unipotence_agree")


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


@main.command("classify")
@click.argument("directory", type=click.Path(file_okay=False, exists=True))
@common
def classify_cmd(directory, **opts):
    """Run the predicate battery over every JSON file in a directory."""
    ctx = _ctx(**opts)
    t0 = time.perf_counter()
    try:
        field = ctx.fieldspec()
    except Failure as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(exc.code)
    except UnsupportedCharacteristic as exc:
        click.echo(f"unsupported characteristic: {exc}", err=True)
        sys.exit(EXIT_CHAR)
    rows = [classify_file(p, field) for p in sorted(Path(directory).glob("*.json"))]
    consistent = all(r.get("unipotence_agree", True) and r.get("nagata_consistent", True) for r in rows)
    errors = [r for r in rows if "error" in r]
    code = EXIT_OK if consistent else EXIT_FAIL
    if errors and code == EXIT_OK:
        code = max(r["exit"] for r in errors)
    if ctx.out == "json":
        out: dict[str, Any] = {"status": "pass" if code == EXIT_OK else "fail", "rows": rows}
        if ctx.timings:
            out["timings"] = {"seconds": round(time.perf_counter() - t0, 3)}
        click.echo(dumps(out), nl=False)
    else:
        table = [list(_COLUMNS)] + [[_cell(r.get(c)) if "error" not in r or c == "file" else "error" for c in _COLUMNS] for r in rows]
        widths = [max(len(t[i]) for t in table) for i in range(len(_COLUMNS))]
        for t in table:
            click.echo("  ".join(s.ljust(w) for s, w in zip(t, widths)).rstrip())
        for r in errors:
            click.echo(f"{r['file']}: {r['error']}")
    sys.exit(code)


if __name__ == "__main__":  # pragma: no cover
    main()
