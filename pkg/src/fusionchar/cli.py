"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 computation or verification
failure, 3 I/O, parse or structural error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field

from .builders.fixtures import rep_ring_of_group
from .builders.groups import CayleyTable, burnside_chartable, conjugacy_data, load_cayley
from .chartable import (CharacterTable, canonical_elements, compute_character_table,
                        integrality_check, match_character_tables, verify_idempotents,
                        verify_orthogonality)
from .errors import (ComputationError, FusionCharError, MismatchError, NotModularError,
                     ParseError, StructureError)
from .fusion import (FusionRing, _read_json, global_dimension, is_commutative,
                     semisimplicity_report, validate_fusion_ring)
from .hopf import (HopfAlgebra, center, character_span, check_character_laws, class_functions,
                   cointegrals, fourier, fourier_roundtrip, integrals, maschke_indicator,
                   normalized_integrals, pivotal_elements, radford_check, random_class_function,
                   validate_hopf)
from .modular import ModularDatum, check_q_homomorphism, cross_check, smatrix_chartable
from .reports import Check, Report
from .scalar import DEFAULT_TOL
from .scalar.literals import scalar_to_literal, to_complex

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTATION, EXIT_INPUT = 0, 1, 2, 3
RADFORD_SAMPLES = 10


class _Abort(Exception):
    """Stop the pipeline; the run report already records why."""


@dataclass
class RunReport:
    command: list
    sections: list = field(default_factory=list)  # (Report, exit code if it fails)
    artifacts: dict = field(default_factory=dict)
    error: str = ""
    error_code: int = EXIT_OK
    table: CharacterTable | None = None

    def add(self, rep: Report, code: int = EXIT_COMPUTATION) -> Report:
        self.sections.append((rep, code))
        return rep

    def fail(self, code: int, message: str):
        self.error, self.error_code = message, code
        raise _Abort(message)

    @property
    def exit_code(self) -> int:
        codes = [self.error_code] + [code for rep, code in self.sections if not rep.passed]
        return max(codes)

    def to_dict(self) -> dict:
        out = {"command": list(self.command), "exit_code": self.exit_code,
               "reports": [rep.to_dict() for rep, _ in self.sections]}
        if self.artifacts:
            out["artifacts"] = self.artifacts
        if self.table is not None:
            out["table"] = self.table.to_dict()
        if self.error:
            out["error"] = self.error
        return out

    def to_text(self) -> str:
        parts = [str(rep) for rep, _ in self.sections]
        for key, value in self.artifacts.items():
            parts.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        if self.table is not None:
            parts.append(self.table.to_text())
        if self.error:
            parts.append(f"error: {self.error}")
        parts.append(f"exit code {self.exit_code}")
        return "\n".join(parts)

    def to_csv(self) -> str:
        if self.table is not None and self.exit_code == EXIT_OK:
            return self.table.to_csv()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["report", "check", "passed", "residual", "counterexample", "detail"])
        for rep, _ in self.sections:
            for c in rep.checks:
                w.writerow([rep.title, c.name, c.passed,
                            "" if c.residual is None else repr(float(c.residual)),
                            "" if c.counterexample is None else " ".join(map(str, c.counterexample)),
                            c.detail])
        if self.error:
            w.writerow(["error", "", False, "", "", self.error])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_text() + "\n"


def _one(name: str, ok: bool, detail: str = "", **kw) -> Report:
    rep = Report(name)
    rep.add(Check(name, ok, detail=detail, **kw))
    return rep


def _load(path, cls):
    return cls.from_dict(_read_json(path))


def _run(command, body) -> RunReport:
    run = RunReport(command)
    try:
        body(run)
    except _Abort:
        pass
    except (ParseError, StructureError) as exc:
        run.error, run.error_code = str(exc), EXIT_INPUT
    except ComputationError as exc:
        run.error, run.error_code = str(exc), EXIT_COMPUTATION
    except FusionCharError as exc:
        run.error, run.error_code = str(exc), EXIT_INPUT
    return run


# -- fusion rings ----------------------------------------------------------------------------


def _fusion_pipeline(run: RunReport, F: FusionRing, tol: float, seed: int) -> CharacterTable:
    val = run.add(validate_fusion_ring(F), EXIT_VALIDATION)
    if not val.passed:
        run.fail(EXIT_VALIDATION, "fusion ring failed validation")
    comm = run.add(_one("commutativity", is_commutative(F)))
    if not comm.passed:
        run.fail(EXIT_COMPUTATION, "the fusion ring is not commutative; no character table")
    run.add(semisimplicity_report(F))
    gd = global_dimension(F)
    run.artifacts["global_dimension"] = scalar_to_literal(gd.value)
    if not gd.nondegenerate:
        run.fail(EXIT_COMPUTATION, "the Grothendieck algebra is not semisimple")
    T = compute_character_table(F, tol=tol, seed=seed)
    run.table = T
    sizes_sum = complex(sum(T.class_sizes))
    dim_c = to_complex(gd.value)
    res = abs(sizes_sum - dim_c)
    run.add(_one("class_sizes_sum", res <= tol * max(1.0, abs(dim_c)), residual=res))
    run.add(verify_idempotents(T, F, tol))
    run.add(verify_orthogonality(T, F, tol))
    run.add(integrality_check(T, F, tol))
    E = canonical_elements(T, F)
    run.artifacts["cointegral"] = [_json_complex(z, tol) for z in E.cointegral]
    return T


def _json_complex(z, tol):
    z = complex(z)
    re = z.real + 0.0 if abs(z.real) >= tol else 0.0
    im = z.imag + 0.0 if abs(z.imag) >= tol else 0.0
    return re if im == 0 else [re, im]


def cmd_validate(path, tol=DEFAULT_TOL, seed=0) -> RunReport:
    def body(run):
        obj = _read_json(path)
        if not isinstance(obj, dict):
            raise ParseError("top-level JSON must be an object")
        if "fusion" in obj:
            run.add(validate_fusion_ring(FusionRing.from_dict(obj)), EXIT_VALIDATION)
        elif "mult" in obj:
            run.add(validate_hopf(HopfAlgebra.from_dict(obj)), EXIT_VALIDATION)
        elif "s" in obj:
            M = ModularDatum.from_dict(obj)
            try:
                run.add(check_q_homomorphism(M), EXIT_VALIDATION)
            except NotModularError as exc:
                run.add(_one("verlinde_ring", False, detail=str(exc)), EXIT_VALIDATION)
        elif "table" in obj:
            C = CayleyTable.from_dict(obj)
            run.add(_one("group_axioms", True, detail=f"order {C.order}"), EXIT_VALIDATION)
        else:
            raise ParseError("unrecognized file: expected a fusion ring, modular datum, "
                             "Hopf algebra or Cayley table")
    return _run(["validate", str(path)], body)


def cmd_chartable(path, tol=DEFAULT_TOL, seed=0) -> RunReport:
    def body(run):
        F = _load(path, FusionRing)
        _fusion_pipeline(run, F, tol, seed)
    return _run(["chartable", str(path), f"--tol={tol!r}", f"--seed={seed}"], body)


# -- modular data ----------------------------------------------------------------------------


def cmd_modular_chartable(path, tol=DEFAULT_TOL, seed=0) -> RunReport:
    def body(run):
        M = _load(path, ModularDatum)
        run.table = smatrix_chartable(M, tol=tol)
        run.add(check_q_homomorphism(M))
    return _run(["modular", "chartable", str(path), f"--tol={tol!r}"], body)


def cmd_modular_crosscheck(path, tol=DEFAULT_TOL, seed=0) -> RunReport:
    def body(run):
        M = _load(path, ModularDatum)
        run.add(check_q_homomorphism(M))
        try:
            run.add(cross_check(M, tol=tol, seed=seed))
        except MismatchError as exc:
            run.artifacts["diff"] = exc.diff
            run.fail(EXIT_COMPUTATION, str(exc))
    return _run(["modular", "crosscheck", str(path), f"--tol={tol!r}", f"--seed={seed}"], body)


# -- Hopf algebras ---------------------------------------------------------------------------


def _hopf_valid(run, H):
    val = run.add(validate_hopf(H), EXIT_VALIDATION)
    if not val.passed:
        run.fail(EXIT_VALIDATION, "Hopf algebra failed validation")


def cmd_hopf_report(path, tol=DEFAULT_TOL, seed=0) -> RunReport:
    def body(run):
        H = _load(path, HopfAlgebra)
        _hopf_valid(run, H)
        lit = H.field.to_literal
        cf, ce = class_functions(H), center(H)
        I, C = integrals(H), cointegrals(H)
        art = run.artifacts
        art["dim"] = H.dim
        art["class_functions_dim"] = len(cf)
        art["center_dim"] = len(ce)
        art["integrals"] = {"left_dim": len(I.left), "right_dim": len(I.right),
                            "categorical_dim": len(I.categorical),
                            "left": [[lit(c) for c in v] for v in I.left],
                            "right": [[lit(c) for c in v] for v in I.right]}
        art["cointegrals"] = {"right_dim": len(C.right_cointegrals),
                              "ad_invariant_dim": len(C.ad_invariant),
                              "categorical_dim": len(C.categorical)}
        art["unimodular_algebra"] = I.unimodular_algebra
        art["unimodular"] = I.unimodular_category
        pivots = [H.sparse(H.pivotal)] if H.pivotal is not None else pivotal_elements(H, seed=seed)
        art["pivotal_elements"] = [{str(k): lit(v) for k, v in sorted(g.items())} for g in pivots]
        if H.modules and pivots:
            laws = run.add(check_character_laws(H, pivots[0], H.modules))
            if all(X.simple for X in H.modules) and laws.passed:
                art["character_span_dim"] = character_span(H, pivots[0], H.modules)[0]
        if I.unimodular_category and C.categorical:
            N = normalized_integrals(H)
            art["maschke_indicator"] = lit(maschke_indicator(H, N.integral))
            art["semisimple"] = bool(maschke_indicator(H, N.integral))
            run.add(fourier_roundtrip(H))
            rng = random.Random(seed)
            rad = Report("Radford trace formula")
            for m in range(RADFORD_SAMPLES):
                c = radford_check(H, N.cointegral, N.integral, random_class_function(H, rng, cf))
                chk = c.checks[0]
                chk.name = f"radford_{m}"
                rad.add(chk)
            run.add(rad)
    return _run(["hopf", "report", str(path), f"--seed={seed}"], body)


def cmd_hopf_fourier(path, tol=DEFAULT_TOL, seed=0) -> RunReport:
    def body(run):
        H = _load(path, HopfAlgebra)
        _hopf_valid(run, H)
        N = normalized_integrals(H)
        lit = H.field.to_literal
        run.artifacts["cointegral"] = [lit(c) for c in N.cointegral]
        run.artifacts["integral"] = {str(k): lit(v) for k, v in sorted(N.integral.items())}
        run.artifacts["center_images"] = [[lit(c) for c in fourier(H, N.cointegral, H.sparse(z))]
                                          for z in center(H)]
        run.add(fourier_roundtrip(H))
    return _run(["hopf", "fourier", str(path)], body)


# -- groups ----------------------------------------------------------------------------------


def cmd_group_chartable(path, method="burnside", ring=None, tol=DEFAULT_TOL, seed=0) -> RunReport:
    def body(run):
        C = load_cayley(path)
        data = conjugacy_data(C)
        run.artifacts["class_sizes"] = list(data.sizes)
        B = burnside_chartable(C, tol=tol, seed=seed)
        if method == "burnside":
            run.table = B
            return
        if ring is not None:
            F = _load(ring, FusionRing)
        else:
            try:
                F = rep_ring_of_group(C.name.lower())
            except KeyError:
                raise ParseError("no bundled representation ring for this group; pass --ring")
        T = _fusion_pipeline(run, F, tol, seed)
        m = match_character_tables(T, B, tol=1e-8)
        if m is None:
            run.add(_one("agrees_with_group_table", False))
            return
        run.add(_one("agrees_with_group_table", True, residual=m.residual,
                     detail=f"columns {list(m.columns)}, rows {list(m.rows)}"))
        true_sizes = sorted(data.sizes)
        got = sorted(round(complex(z).real) for z in T.class_sizes)
        run.add(_one("class_sizes_match_group", got == true_sizes,
                     detail=f"{got} vs {true_sizes}"))
    cmd = ["group", "chartable", str(path), f"--method={method}"]
    if ring is not None:
        cmd.append(f"--ring={ring}")
    return _run(cmd, body)


# -- argument parsing ------------------------------------------------------------------------


def _common(p):
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", choices=("text", "csv", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusionchar",
                                     description="Character tables of fusion rings and Hopf algebras")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("validate", help="check the axioms of any supported input file"))
    _common(sub.add_parser("chartable", help="character table of a fusion ring"))
    mod = sub.add_parser("modular", help="modular data").add_subparsers(dest="action", required=True)
    _common(mod.add_parser("chartable", help="table s_ij / s_0j"))
    _common(mod.add_parser("crosscheck", help="compare with the Verlinde-ring table"))
    hopf = sub.add_parser("hopf", help="Hopf algebras").add_subparsers(dest="action", required=True)
    _common(hopf.add_parser("report", help="integrals, class functions, pivotal data"))
    _common(hopf.add_parser("fourier", help="Fourier transform on the center"))
    grp = sub.add_parser("group", help="finite groups").add_subparsers(dest="action", required=True)
    gc = grp.add_parser("chartable", help="classical character table")
    _common(gc)
    gc.add_argument("--method", choices=("burnside", "repring"), default="burnside")
    gc.add_argument("--ring", default=None, help="representation-ring JSON for --method repring")
    return parser


COMMANDS = {
    ("validate", None): cmd_validate,
    ("chartable", None): cmd_chartable,
    ("modular", "chartable"): cmd_modular_chartable,
    ("modular", "crosscheck"): cmd_modular_crosscheck,
    ("hopf", "report"): cmd_hopf_report,
    ("hopf", "fourier"): cmd_hopf_fourier,
}


def run_command(argv) -> tuple[RunReport, str]:
    args = build_parser().parse_args(argv)
    action = getattr(args, "action", None)
    if args.command == "group":
        run = cmd_group_chartable(args.path, args.method, args.ring, args.tol, args.seed)
    else:
        run = COMMANDS[(args.command, action)](args.path, tol=args.tol, seed=args.seed)
    return run, run.render(args.out)


def main(argv=None) -> int:
    run, text = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return run.exit_code


if __name__ == "__main__":
    sys.exit(main())
