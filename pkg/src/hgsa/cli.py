"""Command-line surface: partition / synth / vqe / counts / fci.

Every JSON/CSV output embeds the run configuration, the input file's
sha256, and the package version.  Exit codes: 0 success, 1 numeric or
contract failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .baselines import count_report
from .grouping import partition, verify_partition
from .pauli import HamParseError, load_hamiltonian
from .stabilizer import independent_generators
from .vqe import build_ansatz, energy, fci_energy, hf_energy, init_params, optimize

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _load(path_str: str):
    path = Path(path_str)
    if not path.exists():
        raise InputError(f"input file not found: {path}")
    try:
        h = load_hamiltonian(path)
    except HamParseError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return h, {"path": str(path), "name": h.name, "sha256": _sha256(path)}


def _envelope(args, fixture=None) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    out = {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "config": config,
        "generated_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    if fixture is not None:
        out["fixture"] = fixture
    return out


def _write_atomic(path: Path, data: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(data)
    os.replace(tmp, path)


def _write_json(path: Path, obj: dict) -> None:
    _write_atomic(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_partition(args) -> int:
    h, fixture = _load(args.input)
    gh = partition(h, order=args.group_order)
    report = verify_partition(gh, h)
    obj = _envelope(args, fixture)
    obj.update(
        {
            "n": h.n,
            "offset": h.offset,
            "num_groups": gh.num_groups,
            "groups": [
                {
                    "index": i,
                    "is_diagonal": g.is_diagonal,
                    "norm1": g.norm1,
                    "size": len(g),
                    "num_generators": independent_generators(g).k,
                    "members": [
                        {"coeff": c, "pauli": p.label()} for c, p in g.members
                    ],
                }
                for i, g in enumerate(gh.groups)
            ],
            "verification": report.to_json_obj(),
        }
    )
    _write_json(Path(args.out) / "groups.json", obj)
    print(f"partition: {gh.num_groups} groups, verification "
          f"{'passed' if report.passed else 'FAILED'}")
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_synth(args) -> int:
    h, fixture = _load(args.input)
    plan = build_ansatz(h, layers=1, group_order=args.group_order)
    groups = []
    all_ok = True
    for block, group in zip(plan.blocks, plan.grouped.groups):
        from .graphsynth import verify_diagonalization

        ok = verify_diagonalization(block.uz, group)
        all_ok &= ok
        groups.append(
            {
                "index": block.group_id,
                "adjacency": block.graph_form.adjacency.astype(int).tolist(),
                "local_ops": [
                    [
                        {"kind": g.kind, "qubits": list(g.qubits)}
                        for g in ops
                    ]
                    for ops in block.graph_form.local_ops
                ],
                "gates": block.uz.to_json_obj(),
                "two_qubit_count": block.uz.two_qubit_count,
                "verified": ok,
            }
        )
    obj = _envelope(args, fixture)
    obj.update({"n": h.n, "num_groups": len(groups), "groups": groups})
    _write_json(Path(args.out) / "circuits.json", obj)
    print(f"synth: {len(groups)} circuits, "
          f"{'all verified' if all_ok else 'VERIFICATION FAILED'}")
    return EXIT_OK if all_ok else EXIT_FAILURE


def cmd_vqe(args) -> int:
    h, fixture = _load(args.input)
    seeds = [int(s) for s in args.seeds.split(",") if s]
    if not seeds:
        raise InputError("need at least one seed")
    plan = build_ansatz(h, layers=args.layers, group_order=args.group_order)
    e_fci = fci_energy(h)
    e_hf = hf_energy(h)

    per_seed = []
    trace_rows = []
    for seed in seeds:
        theta0 = init_params(plan, seed)
        result = optimize(plan, theta0, h, max_iter=args.max_iter, gtol=args.gtol)
        err = result.energy - e_fci
        per_seed.append(
            {
                "seed": seed,
                "energy": result.energy,
                "error_vs_fci": err,
                "status": result.trace.status,
                "n_iter": result.trace.n_iter,
                "wall_time": result.trace.wall_time,
            }
        )
        for it, (e, gn) in enumerate(zip(result.trace.energies, result.trace.grad_norms)):
            trace_rows.append((seed, it, e, gn))

    errors = [abs(s["error_vs_fci"]) for s in per_seed]
    obj = _envelope(args, fixture)
    obj.update(
        {
            "n": h.n,
            "num_terms": h.num_terms,
            "num_groups": plan.grouped.num_groups,
            "num_parameters": plan.num_parameters,
            "fci_energy": e_fci,
            "hf_energy": e_hf,
            "seeds": per_seed,
            "summary": {
                "min_error": min(errors),
                "mean_error": sum(errors) / len(errors),
                "max_error": max(errors),
            },
        }
    )
    out = Path(args.out)
    _write_json(out / "result.json", obj)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["seed", "iteration", "energy", "grad_inf_norm"])
    for row in trace_rows:
        writer.writerow([row[0], row[1], repr(row[2]), repr(row[3])])
    _write_atomic(out / "trace.csv", buf.getvalue())

    print(f"vqe: fci={e_fci:.10f} hf={e_hf:.10f}")
    for s in per_seed:
        print(f"  seed {s['seed']}: E={s['energy']:.10f} "
              f"|E-FCI|={abs(s['error_vs_fci']):.3e} iters={s['n_iter']} {s['status']}")
    any_finite = any(np.isfinite(s["energy"]) for s in per_seed)
    return EXIT_OK if any_finite else EXIT_FAILURE


def cmd_counts(args) -> int:
    rows = []
    for path in args.inputs:
        h, _ = _load(path)
        plan = build_ansatz(h, layers=args.layers)
        rows.append(count_report(h, plan).to_row())
    fields = [
        "molecule", "n_electrons", "n_qubits",
        "tvha_gates", "tvha_params", "dvha_gates", "dvha_params",
        "mvha_gates", "mvha_params",
        "hgsa_gates", "hgsa_params_all_free", "hgsa_params_gamma_only",
    ]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    _write_atomic(Path(args.out) / "counts.csv", buf.getvalue())
    for row in rows:
        print(f"{row['molecule']}: tvha={row['tvha_gates']} dvha={row['dvha_gates']} "
              f"mvha={row['mvha_gates']} hgsa={row['hgsa_gates']}")
    return EXIT_OK


def cmd_fci(args) -> int:
    h, _ = _load(args.input)
    print(repr(fci_energy(h)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgsa",
        description="Graph-state ansatz VQE pipeline",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--group-order", choices=("desc", "asc"), default="desc")
        if out:
            p.add_argument("--out", default="out", help="output directory")

    p = sub.add_parser("partition", help="write commuting groups + verification")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("synth", help="write per-group diagonalization circuits")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("vqe", help="run VQE for one or more seeds")
    p.add_argument("--input", required=True)
    p.add_argument("--seeds", default="0", help="comma-separated integer seeds")
    p.add_argument("--layers", type=int, default=1)
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--gtol", type=float, default=1e-6)
    common(p)
    p.set_defaults(func=cmd_vqe)

    p = sub.add_parser("counts", help="gate/parameter counts for all ansaetze")
    p.add_argument("--input", dest="inputs", nargs="*", default=[])
    p.add_argument("--layers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("fci", help="print the exact ground-state energy")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_fci)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, RuntimeError, ValueError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
