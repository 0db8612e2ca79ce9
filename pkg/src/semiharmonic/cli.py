"""Command-line front end.

Subcommands write plain tables (CSV with a ``#`` header, or JSON with the
same structure) to standard output or ``--out``:

    semiharmonic bound          bound energies, SH and free-particle reference
    semiharmonic resonances     first n resonances
    semiharmonic dwell          phase shift, dwell time and peaks
    semiharmonic wavefunction   bound, Siegert or scattering state samples
    semiharmonic darboux        complex partner potential and Argand samples

Exit codes: 0 ok, 1 usage, 2 bound solver failure, 3 too few resonances,
4 unwrap ambiguity (without --force), 5 missing state, 6 darboux on a delta kind.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .darboux import argand_samples, darboux_partner
from .errors import InsufficientRootsWarning, UnwrapAmbiguityWarning
from .jost import KINDS, PotentialSpec, free_particle_bound_states
from .rootfinder import DEFAULT_TOL, default_box, find_bound_states, find_resonances
from .timedelay import E_MAX, E_MIN, E_STEP, adaptive_energy_grid, default_energy_grid, dwell_time_curve
from .wavefun import assemble_bound, assemble_scattering, assemble_siegert, default_grid

__all__ = ["main", "build_parser", "RunConfig", "Section", "Document", "read_table", "format_float"]

SCHEMA = "semiharmonic-table/1"
TABLE1_A = (0.0, 0.5, 1.0, 1.5, 2.0)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def format_float(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    if isinstance(v, str):
        return v
    return "%.9g" % float(v)


@dataclass
class Section:
    name: str
    columns: list[str]
    rows: list[list] = field(default_factory=list)


@dataclass
class Document:
    meta: dict
    sections: list[Section]

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(f"# schema: {SCHEMA}\n")
        for key, val in self.meta.items():
            out.write(f"# {key}: {format_float(val)}\n")
        for sec in self.sections:
            out.write(f"# section: {sec.name}\n")
            out.write(",".join(sec.columns) + "\n")
            for row in sec.rows:
                out.write(",".join(format_float(v) for v in row) + "\n")
        return out.getvalue()

    def to_json(self) -> str:
        def cell(v):
            if v is None or isinstance(v, str):
                return v
            if isinstance(v, (int, np.integer)):
                return int(v)
            return float(format_float(v))

        doc = {
            "schema": SCHEMA,
            "meta": {k: cell(v) for k, v in self.meta.items()},
            "sections": {
                s.name: {"columns": s.columns, "rows": [[cell(v) for v in r] for r in s.rows]}
                for s in self.sections
            },
        }
        return json.dumps(doc, indent=1) + "\n"


def _parse_cell(text: str):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def read_table(source) -> dict:
    """Parse CSV or JSON table text (or a Path) into {'schema', 'meta', 'sections'}."""
    text = source.read_text() if isinstance(source, Path) else str(source)
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        if doc.get("schema") != SCHEMA:
            raise ValueError("unknown schema")
        return doc
    meta, sections, current, expect_header = {}, {}, None, False
    schema = None
    for line in text.splitlines():
        if line.startswith("# section: "):
            current = line[len("# section: "):].strip()
            sections[current] = {"columns": [], "rows": []}
            expect_header = True
        elif line.startswith("# "):
            key, _, val = line[2:].partition(": ")
            if key == "schema":
                schema = val
            else:
                meta[key] = _parse_cell(val)
        elif current is not None and line:
            cells = line.split(",")
            if expect_header:
                sections[current]["columns"] = cells
                expect_header = False
            else:
                sections[current]["rows"].append([_parse_cell(c) for c in cells])
    if schema != SCHEMA:
        raise ValueError("unknown schema")
    return {"schema": schema, "meta": meta, "sections": sections}


@dataclass(frozen=True)
class RunConfig:
    """Validated top-level options shared by every subcommand."""

    subcommand: str
    output_path: str | None
    fmt: str
    tol: float
    n: int
    force: bool


def _spec_from_args(args, default_kind: str, default_a: float) -> PotentialSpec:
    try:
        return _build_spec(args, default_kind, default_a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _build_spec(args, default_kind: str, default_a: float) -> PotentialSpec:
    kind = args.kind or default_kind
    if kind.startswith("delta"):
        if args.a not in (None, 0.0):
            raise UsageError("delta kinds take no --a")
        return PotentialSpec(0.0, 1.0, kind)
    a = default_a if args.a is None else args.a
    if a == 0:
        return PotentialSpec(0.0, 1.0, "delta_barrier" if kind == "barrier" else "delta_well")
    if a < 0:
        raise UsageError("--a must be positive")
    if args.v0 is not None and not args.unit_area:
        return PotentialSpec(a, args.v0, kind)
    return PotentialSpec.unit_area(a, barrier=(kind == "barrier"))


def _meta(cmd: str, spec: PotentialSpec | None, tol: float) -> dict:
    meta = {"command": cmd}
    if spec is not None:
        meta.update({"kind": spec.kind, "a": spec.a, "V0": spec.V0})
    meta["tol"] = tol
    return meta


def cmd_bound(args) -> tuple[int, Document]:
    if args.a is None and args.kind in (None, "well", "delta_well") and args.v0 is None:
        specs = [PotentialSpec.unit_area(a) for a in TABLE1_A]
    else:
        specs = [_spec_from_args(args, "well", 2.0)]
    sec = Section("bound", ["a", "V0", "n", "E_FP", "E_SH"])
    for spec in specs:
        try:
            sh = find_bound_states(spec, tol=args.tol)
        except Exception as exc:  # solver failure is reported, not hidden
            print(f"bound-state solver failed for {spec}: {exc}", file=sys.stderr)
            return 2, Document(_meta("bound", specs[0], args.tol), [sec])
        fp = [] if spec.is_barrier else free_particle_bound_states(spec.a, spec.V0)
        for i, root in enumerate(sh):
            sec.rows.append([spec.a, spec.V0, i, fp[i] if i < len(fp) else None, root.energy])
    meta = _meta("bound", specs[0] if len(specs) == 1 else None, args.tol)
    if len(specs) > 1:
        meta["kind"] = "well"
        meta["area"] = 1.0
    return 0, Document(meta, [sec])


def _resonance_list(spec, n, tol):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", InsufficientRootsWarning)
        roots = find_resonances(spec, n, default_box(n), tol)
    short = any(issubclass(w.category, InsufficientRootsWarning) for w in caught)
    return roots, short or len(roots) < n


def cmd_resonances(args) -> tuple[int, Document]:
    spec = _spec_from_args(args, "delta_well", 2.0)
    roots, short = _resonance_list(spec, args.n, args.tol)
    sec = Section("resonances", ["m", "re_eps", "im_eps", "re_k", "im_k", "residual"])
    for m, r in enumerate(roots):
        sec.rows.append([m, r.epsilon.real, r.epsilon.imag, r.k.real, r.k.imag, r.residual])
    doc = Document(_meta("resonances", spec, args.tol), [sec])
    if short:
        print(f"found {len(roots)} resonances, wanted {args.n}", file=sys.stderr)
        return 3, doc
    return 0, doc


def cmd_dwell(args) -> tuple[int, Document]:
    specs = [PotentialSpec(0.0, 1.0, "delta_well"), PotentialSpec(0.0, 1.0, "delta_barrier")]
    if args.kind is not None or args.a is not None:
        specs = [_spec_from_args(args, "well", 2.0)]
    emin = E_MIN if args.emin is None else args.emin
    emax = E_MAX if args.emax is None else args.emax
    estep = E_STEP if args.estep is None else args.estep
    if not (0 < emin < emax) or estep <= 0:
        raise UsageError("need 0 < emin < emax and estep > 0")
    sections = []
    ambiguous = False
    for spec in specs:
        grid = default_energy_grid(emin, emax, estep)
        if not spec.is_delta:
            grid = adaptive_energy_grid(spec, emin, emax, estep)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", UnwrapAmbiguityWarning)
            curve = dwell_time_curve(spec, grid)
        if any(issubclass(w.category, UnwrapAmbiguityWarning) for w in caught):
            ambiguous = True
            print(f"phase unwrap ambiguous for {spec.kind}", file=sys.stderr)
        cols = ["E", "delta", "tau"] + (["tau_analytic"] if curve.tau_analytic is not None else [])
        sec = Section(f"curve_{spec.kind}", cols)
        for i in range(len(curve.E)):
            row = [curve.E[i], curve.delta_unwrapped[i], curve.tau[i]]
            if curve.tau_analytic is not None:
                row.append(curve.tau_analytic[i])
            sec.rows.append(row)
        peaks = Section(f"peaks_{spec.kind}", ["j", "E_peak", "tau_peak"])
        for j, (e, t) in enumerate(curve.peaks):
            peaks.rows.append([j, e, t])
        sections += [sec, peaks]
    doc = Document(_meta("dwell", specs[0] if len(specs) == 1 else None, args.tol), sections)
    if ambiguous and not args.force:
        return 4, doc
    return 0, doc


def _x_grid(args, spec):
    base = default_grid(spec, args.points or 2001)
    lo = base[0] if args.xmin is None else args.xmin
    hi = base[-1] if args.xmax is None else args.xmax
    if not hi > lo:
        raise UsageError("need xmin < xmax")
    return np.linspace(lo, hi, args.points or 2001)


def cmd_wavefunction(args) -> tuple[int, Document]:
    spec = _spec_from_args(args, "well", 2.0)
    state = args.state or "bound"
    index = 1 if args.index is None else args.index
    if index < 1:
        raise UsageError("--index is 1-based")
    x = _x_grid(args, spec)
    meta = _meta("wavefunction", spec, args.tol)
    meta["state"] = state
    if state == "scattering":
        energy = 1.0 if args.energy is None else args.energy
        if energy <= 0:
            raise UsageError("--energy must be positive")
        table = assemble_scattering(spec, energy, x)
        meta["E"] = energy
    else:
        if state == "bound":
            roots = find_bound_states(spec, tol=args.tol)
        else:
            roots, _ = _resonance_list(spec, index, args.tol)
        if len(roots) < index:
            print(f"no {state} state with index {index}", file=sys.stderr)
            return 5, Document(meta, [])
        root = roots[index - 1]
        table = (assemble_bound if state == "bound" else assemble_siegert)(spec, root, x)
        meta.update({"index": index, "re_eps": root.epsilon.real, "im_eps": root.epsilon.imag})
    meta["continuity_defect"] = table.continuity_defect
    sec = Section("wavefunction", ["x", "re_psi", "im_psi", "region"])
    for xi, p, reg in zip(table.x, table.psi, table.region):
        sec.rows.append([xi, p.real, p.imag, str(reg)])
    return 0, Document(meta, [sec])


def cmd_darboux(args) -> tuple[int, Document]:
    kind = args.kind or "barrier"
    if kind.startswith("delta") or args.a == 0:
        print("Darboux partners are not built for delta kinds", file=sys.stderr)
        return 6, Document(_meta("darboux", None, args.tol), [])
    spec = _spec_from_args(args, "barrier", 2.0)
    # sixth computed root, ε ≈ 12.865 - 2.874i
    index = 6 if args.index is None else args.index
    if index < 1:
        raise UsageError("--index is 1-based")
    roots, _ = _resonance_list(spec, index, args.tol)
    if len(roots) < index:
        print(f"no resonance with index {index}", file=sys.stderr)
        return 5, Document(_meta("darboux", spec, args.tol), [])
    root = roots[index - 1]
    table = darboux_partner(spec, root, _x_grid(args, spec))
    meta = _meta("darboux", spec, args.tol)
    meta.update({"index": index, "re_eps": root.epsilon.real, "im_eps": root.epsilon.imag})
    partner = Section("partner", ["x", "V", "re_Vt", "im_Vt", "re_beta", "im_beta"])
    for xi, v, vt, b in zip(table.x, table.V_original, table.V_tilde, table.beta):
        partner.rows.append([xi, v, vt.real, vt.imag, b.real, b.imag])
    argand = Section("argand", ["re_Vt", "im_Vt", "endpoint"])
    for p in argand_samples(table):
        argand.rows.append([p.re, p.im, p.endpoint])
    return 0, Document(meta, [partner, argand])


COMMANDS = {
    "bound": cmd_bound,
    "resonances": cmd_resonances,
    "dwell": cmd_dwell,
    "wavefunction": cmd_wavefunction,
    "darboux": cmd_darboux,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", choices=KINDS)
    common.add_argument("--a", type=float)
    common.add_argument("--v0", type=float)
    common.add_argument("--unit-area", action="store_true", help="set V0 = 1/(2a)")
    common.add_argument("-n", type=int, default=5, help="number of resonances")
    common.add_argument("--emin", type=float)
    common.add_argument("--emax", type=float)
    common.add_argument("--estep", type=float)
    common.add_argument("--xmin", type=float)
    common.add_argument("--xmax", type=float)
    common.add_argument("--points", type=int)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out")
    common.add_argument("--force", action="store_true", help="write output despite unwrap warnings")
    common.add_argument("--state", choices=("bound", "resonance", "scattering"))
    common.add_argument("--index", type=int, help="1-based state index")
    common.add_argument("--energy", type=float, help="scattering energy")
    parser = _Parser(prog="semiharmonic", description="Semi-harmonic box potential tables.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.error("a subcommand is required")
    if args.n < 1:
        parser.error("-n must be >= 1")
    if args.points is not None and args.points < 3:
        parser.error("--points must be >= 3")
    if args.tol <= 0:
        parser.error("--tol must be positive")
    config = RunConfig(args.command, args.out, args.format, args.tol, args.n, args.force)
    try:
        code, doc = COMMANDS[config.subcommand](args)
    except UsageError as exc:
        parser.error(str(exc))
    text = doc.to_json() if config.fmt == "json" else doc.to_csv()
    if config.output_path:
        Path(config.output_path).write_text(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            sys.stderr.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
