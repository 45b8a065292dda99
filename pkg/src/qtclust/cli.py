"""Command-line entry point: reproducible pipelines over CSV/JSON artifacts."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import experiments, io
from .datasets import (
    ari,
    gen_annuli,
    gen_gaussian_clouds,
    gen_sticks,
    gen_tetrahedron,
    radius_proportional_counts,
)
from .ensemble import consensus_matrix, majority_partition, run_qtc
from .errors import InputError, NumericError, ParameterError
from .graph import PointSet
from .kernels import jsd_matrix, laplace_similarity, spectral_cluster, transition_kernel
from .pipeline import build_graph, qtc
from .spectral import eigendecompose, gap_stats
from .transport import LaplaceParams, laplace_wavefunction, select_s

SCHEMA = "qtclust/1"


def _json_default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _write_json(path: Path, payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    path.write_text(json.dumps(payload, indent=2, default=_json_default, sort_keys=True) + "\n")


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_run_json(out: Path, args, derived: dict) -> None:
    resolved = {k: v for k, v in vars(args).items() if k != "func" and not callable(v)}
    _write_json(out / "run.json", {"command": args.command, "config": resolved, "derived": derived})


def _load_points(args) -> PointSet:
    if not getattr(args, "input", None):
        raise ParameterError("--input is required")
    return io.load_points_csv(args.input)


def _laplace_params(args) -> LaplaceParams:
    return LaplaceParams(rule=args.s_rule, multiplier=args.s_mult)


def _parse_floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _parse_counts(text: str):
    values = [int(v) for v in text.split(",") if v.strip()]
    return values[0] if len(values) == 1 else values


def _parse_centers(text: str) -> list[list[float]]:
    return [_parse_floats(part) for part in text.split(";") if part.strip()]


def cmd_gen(args) -> None:
    kind = args.kind
    if kind == "gaussian-clouds":
        if not args.centers:
            raise ParameterError("--centers is required for gaussian-clouds")
        points = gen_gaussian_clouds(_parse_centers(args.centers), args.sigma, _parse_counts(args.n_per), args.seed)
    elif kind in ("sticks-uniform", "sticks-nonuniform"):
        profile = "uniform" if kind == "sticks-uniform" else "nonuniform"
        points = gen_sticks(
            args.n_sticks,
            length=args.length,
            gap=args.gap,
            n_per=_parse_counts(args.n_per),
            density_profile=profile,
            jitter=args.jitter,
            seed=args.seed,
        )
    elif kind == "annuli":
        radii = _parse_floats(args.radii)
        counts = radius_proportional_counts(radii, args.base_count) if args.counts is None else _parse_counts(args.counts)
        points = gen_annuli(radii, args.width, counts, args.seed)
    elif kind == "tetrahedron":
        points = gen_tetrahedron(q=args.q or 4, sigma=args.sigma, n_per=_parse_counts(args.n_per), seed=args.seed)
    else:  # argparse choices already guard this
        raise ParameterError(f"unknown generator kind {kind!r}")
    target = Path(args.out)
    if target.suffix == ".csv":
        target.parent.mkdir(parents=True, exist_ok=True)
    else:
        target.mkdir(parents=True, exist_ok=True)
        target = target / "points.csv"
    io.save_points_csv(target, points)
    print(f"wrote {target} ({points.m} points, d={points.dim})")


def cmd_eigen(args) -> None:
    points = _load_points(args)
    out = _out_dir(args)
    graph = build_graph(points, args.eps)
    eig = eigendecompose(graph.hamiltonian)
    q = args.q if args.q else max(2, gap_stats(eig, 2).low_count)
    gaps = gap_stats(eig, min(q, eig.size))
    payload = {
        "energies": eig.energies,
        "low_count": gaps.low_count,
        "first_gap": gaps.first_gap,
        "avg_gap": gaps.avg_gap,
        "r_eps": graph.proximity,
    }
    _write_json(out / "eigen.json", payload)
    _write_run_json(out, args, {"r_eps": graph.proximity, "q": q})
    print(f"wrote {out / 'eigen.json'}")


def cmd_phases(args) -> None:
    points = _load_points(args)
    out = _out_dir(args)
    graph = build_graph(points, args.eps)
    eig = eigendecompose(graph.hamiltonian)
    gaps = gap_stats(eig, max(args.q or 2, 2))
    s = select_s(gaps, _laplace_params(args))
    wave = laplace_wavefunction(eig, args.init_node, s)
    path = out / "phases.csv"
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["node_index", "phase", "amplitude_re", "amplitude_im"])
        for i in range(eig.size):
            writer.writerow(
                [
                    i,
                    "%.17g" % wave.phases[i],
                    "%.17g" % wave.amplitudes[i].real,
                    "%.17g" % wave.amplitudes[i].imag,
                ]
            )
    _write_run_json(out, args, {"s": s, "r_eps": graph.proximity})
    print(f"wrote {path}")


def _run_ensemble(args):
    points = _load_points(args)
    result = qtc(
        points,
        args.eps,
        args.q,
        laplace=_laplace_params(args),
        m_prime=args.m_prime,
        label_method=args.label_method,
        seed=args.seed,
        summary=args.summary,
    )
    return points, result


def cmd_cluster(args) -> None:
    points, result = _run_ensemble(args)
    out = _out_dir(args)
    report = {
        "q": args.q,
        "m_prime": result.omega.n_init,
        "s": result.s,
        "method": args.label_method,
        "r_eps": result.graph.proximity,
    }
    if result.labels is not None:
        io.save_labels_csv(out / "labels.csv", result.labels)
        report["weights"] = {str(k): v for k, v in result.tally.weights.items()}
        if points.truth is not None:
            report["ari_vs_truth"] = ari(result.labels, points.truth)
    if result.consensus is not None:
        io.save_matrix_csv(out / "consensus.csv", result.consensus)
    _write_json(out / "report.json", report)
    _write_run_json(out, args, {"s": result.s, "r_eps": result.graph.proximity, "init_nodes": result.omega.init_nodes})
    print(f"wrote {out / 'report.json'}")


def cmd_consensus(args) -> None:
    args.summary = "consensus"
    points, result = _run_ensemble(args)
    out = _out_dir(args)
    io.save_matrix_csv(out / "consensus.csv", result.consensus)
    _write_run_json(out, args, {"s": result.s, "r_eps": result.graph.proximity, "init_nodes": result.omega.init_nodes})
    print(f"wrote {out / 'consensus.csv'}")


def cmd_spectral(args) -> None:
    points = _load_points(args)
    out = _out_dir(args)
    graph = build_graph(points, args.eps)
    eig = eigendecompose(graph.hamiltonian)
    labels = spectral_cluster(eig, args.q, seed=args.seed, normalization=args.normalization)
    io.save_labels_csv(out / "labels.csv", labels)
    report = {"q": args.q, "normalization": args.normalization, "seed": args.seed}
    if points.truth is not None:
        report["ari_vs_truth"] = ari(labels, points.truth)
    _write_json(out / "report.json", report)
    _write_run_json(out, args, {"r_eps": graph.proximity})
    print(f"wrote {out / 'labels.csv'}")


def cmd_kernel(args) -> None:
    points = _load_points(args)
    out = _out_dir(args)
    graph = build_graph(points, args.eps)
    eig = eigendecompose(graph.hamiltonian)
    if args.kind == "P":
        matrix = transition_kernel(eig)
    elif args.kind == "S":
        s = args.s if args.s else select_s(gap_stats(eig, 2), _laplace_params(args))
        matrix = laplace_similarity(eig, s)
    else:
        matrix = jsd_matrix(eig)
    path = out / f"kernel_{args.kind}.csv"
    io.save_matrix_csv(path, matrix)
    _write_run_json(out, args, {"r_eps": graph.proximity})
    print(f"wrote {path}")


def cmd_experiment(args) -> None:
    out = _out_dir(args)
    if args.name == "two-cloud":
        result = experiments.two_cloud_experiment(
            seed=args.seed,
            sigma=args.sigma,
            ell_over_sigma=args.ell_sigma,
            n_per=_parse_counts(args.n_per) if isinstance(args.n_per, str) else args.n_per,
            partition=args.partition,
        )
        payload = {
            "s": result["s"],
            "r_eps": result["r_eps"],
            "init_node": result["init_node"],
            "empirical_phases": result["empirical_phases"],
            "exact_theory": result["exact_theory"],
            "born_1": result["born_phases"][1],
            "born_2": result["born_phases"][2],
            "born_3": result["born_phases"][3],
            "born_errors": {str(k): v for k, v in result["born_errors"].items()},
            "max_phase_error": result["max_phase_error"],
        }
        _write_json(out / "two_cloud.json", payload)
        derived = {"s": result["s"], "init_node": result["init_node"]}
    elif args.name == "outlier-sweep":
        rows = experiments.outlier_sweep(seed=args.seed, sigma=args.sigma, ell=args.ell, eps=args.eps or 0.11)
        path = out / "outlier_sweep.csv"
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["alpha_out", "phase_left_mean", "phase_right_mean", "phase_outlier"])
            for row in rows:
                writer.writerow(
                    [
                        "%.17g" % row["alpha_out"],
                        "%.17g" % row["phase_left_mean"],
                        "%.17g" % row["phase_right_mean"],
                        "%.17g" % row["phase_outlier"],
                    ]
                )
        derived = {"n_alphas": len(rows)}
    elif args.name == "spectrum-count":
        n_per = _parse_counts(args.n_per) if isinstance(args.n_per, str) else args.n_per
        result = experiments.spectrum_count_experiment(seed=args.seed, sigma=args.sigma, eps=args.eps or 0.1, n_per=n_per)
        _write_json(out / "spectrum_count.json", {"counts": {str(k): v for k, v in result.items()}})
        derived = {"low_counts": {str(k): v["low_count"] for k, v in result.items()}}
    else:  # eps-sweep
        points = _load_points(args)
        if args.eps_grid is None:
            raise ParameterError("--eps-grid is required for eps-sweep")
        rows = experiments.eps_sweep(
            points,
            args.q,
            _parse_floats(args.eps_grid),
            seed=args.seed,
            laplace=_laplace_params(args),
            m_prime=args.m_prime,
            label_method=args.label_method,
        )
        path = out / "eps_sweep.csv"
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["eps", "ari_qtc", "ari_spectral"])
            for row in rows:
                writer.writerow(["%.17g" % row["eps"], "%.17g" % row["ari_qtc"], "%.17g" % row["ari_spectral"]])
        derived = {"n_eps": len(rows)}
    _write_run_json(out, args, derived)
    print(f"experiment {args.name} artifacts in {out}")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtclust", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, eps=True, ensemble=False):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default="qtclust-out", help="output directory")
        if eps:
            p.add_argument("--eps", type=float, default=None, help="quantile fraction for the bandwidth")
        if ensemble:
            p.add_argument("--q", type=int, required=True, help="number of clusters")
            p.add_argument("--s-rule", choices=("first_gap", "avg_gap", "explicit"), default="avg_gap")
            p.add_argument("--s-mult", type=float, default=1.2)
            p.add_argument("--m-prime", type=int, default=None)
            p.add_argument("--label-method", choices=("circle", "diff"), default="circle")
            p.add_argument("--summary", choices=("majority", "consensus", "both"), default="both")

    gen = sub.add_parser("gen", help="generate a synthetic point set")
    gen.add_argument("--kind", required=True, choices=("gaussian-clouds", "sticks-uniform", "sticks-nonuniform", "annuli", "tetrahedron"))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default="points.csv", help="points CSV path or output directory")
    gen.add_argument("--centers", default=None, help="semicolon-separated coordinate tuples, e.g. '0,0;1,0'")
    gen.add_argument("--sigma", type=float, default=0.1)
    gen.add_argument("--n-per", default="100", help="points per component (int or comma list)")
    gen.add_argument("--n-sticks", type=int, default=3)
    gen.add_argument("--length", type=float, default=1.0)
    gen.add_argument("--gap", type=float, default=0.2)
    gen.add_argument("--jitter", type=float, default=0.01)
    gen.add_argument("--radii", default="0.4,0.8,1.2,1.6,2.0")
    gen.add_argument("--width", type=float, default=0.1)
    gen.add_argument("--counts", default=None, help="per-ring counts (comma list); default scales with radius")
    gen.add_argument("--base-count", type=int, default=40)
    gen.add_argument("--q", type=int, default=None)
    gen.set_defaults(func=cmd_gen)

    eigen = sub.add_parser("eigen", help="spectrum and gap diagnostics")
    add_common(eigen)
    eigen.add_argument("--input", required=True)
    eigen.add_argument("--q", type=int, default=None)
    eigen.set_defaults(func=cmd_eigen)
    eigen.set_defaults(s_rule="avg_gap", s_mult=1.2)

    phases = sub.add_parser("phases", help="phase field of one initialization")
    add_common(phases)
    phases.add_argument("--input", required=True)
    phases.add_argument("--init-node", type=int, required=True)
    phases.add_argument("--q", type=int, default=None)
    phases.add_argument("--s-rule", choices=("first_gap", "avg_gap", "explicit"), default="avg_gap")
    phases.add_argument("--s-mult", type=float, default=1.2)
    phases.set_defaults(func=cmd_phases)

    cluster = sub.add_parser("cluster", help="full transport clustering run")
    add_common(cluster, ensemble=True)
    cluster.add_argument("--input", required=True)
    cluster.set_defaults(func=cmd_cluster)

    consensus = sub.add_parser("consensus", help="co-clustering frequency matrix")
    add_common(consensus, ensemble=True)
    consensus.add_argument("--input", required=True)
    consensus.set_defaults(func=cmd_consensus)

    spectral = sub.add_parser("spectral", help="spectral clustering baseline")
    add_common(spectral)
    spectral.add_argument("--input", required=True)
    spectral.add_argument("--q", type=int, required=True)
    spectral.add_argument("--normalization", choices=("none", "approach1", "approach2"), default="approach1")
    spectral.set_defaults(func=cmd_spectral)

    kernel = sub.add_parser("kernel", help="quantum similarity kernel matrices")
    add_common(kernel)
    kernel.add_argument("--input", required=True)
    kernel.add_argument("--kind", required=True, choices=("P", "S", "jsd"))
    kernel.add_argument("--s", type=float, default=None)
    kernel.add_argument("--s-rule", choices=("first_gap", "avg_gap", "explicit"), default="avg_gap")
    kernel.add_argument("--s-mult", type=float, default=1.2)
    kernel.set_defaults(func=cmd_kernel)

    experiment = sub.add_parser("experiment", help="reproducible validation experiments")
    experiment.add_argument("name", choices=("two-cloud", "outlier-sweep", "spectrum-count", "eps-sweep"))
    add_common(experiment, ensemble=False)
    experiment.add_argument("--input", default=None)
    experiment.add_argument("--sigma", type=float, default=0.1)
    experiment.add_argument("--ell", type=float, default=0.4)
    experiment.add_argument("--ell-sigma", type=float, default=3.0)
    experiment.add_argument("--n-per", default="100")
    experiment.add_argument("--partition", choices=("truth", "qtc"), default="truth")
    experiment.add_argument("--q", type=int, default=3)
    experiment.add_argument("--eps-grid", default=None, help="comma-separated quantile fractions")
    experiment.add_argument("--s-rule", choices=("first_gap", "avg_gap", "explicit"), default="avg_gap")
    experiment.add_argument("--s-mult", type=float, default=1.2)
    experiment.add_argument("--m-prime", type=int, default=None)
    experiment.add_argument("--label-method", choices=("circle", "diff"), default="circle")
    experiment.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        args.func(args)
    except (InputError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    return 0


def console_main() -> None:
    raise SystemExit(main())
