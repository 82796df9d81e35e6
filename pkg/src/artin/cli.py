"""Command-line interface: ``artin <command> [graph.json] [--json]``.

Verdicts go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 bad input, 2 violated precondition, 3 failed self-check.
"""

from __future__ import annotations

import argparse
import json
import sys

from artin import __version__
from artin.abelian import abelianization, parabolic_commutator_check, relation_matrix
from artin.chordal import CliqueSplit, is_chordal
from artin.classifier import (
    coherence,
    derived_subgroup,
    irreducible_factors,
    is_abelian,
    is_even,
    is_even_fc,
    is_fc,
    spherical_type,
)
from artin.decompose import (
    bass_serre_kernel,
    coherent_decomposition,
    iter_amalgams,
    normal_subgroup_report,
    render_tree,
    tree_to_dict,
    vertex_split,
)
from artin.errors import ArtinError, InputError, MalformedInput, PreconditionError, TooLarge
from artin.evenfc import (
    acyl_report,
    normalizer_classify,
    pair_centralizer_bound,
    parabolic_centralizer_generators,
    vertex_centralizer,
)
from artin.graph import LabeledGraph, graph_to_dict, parse_graph
from artin.oracles import (
    IntegerMatrix,
    bounded_rewrite_equal,
    brute_chordal,
    brute_clique_condition,
    brute_pattern,
    cosine_matrix_pd,
    smith_normal_form,
)
from artin.presentation import emit_presentation
from artin.words import GeneratorWord

DEFAULT_MAX_BRUTE = 7
REPORT_VERSION = 1


def _subset(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [x.strip() for x in text.split(",") if x.strip()]


def _read_graph(path: str | None) -> LabeledGraph:
    if path in (None, "-"):
        data = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                data = fh.read()
        except OSError as exc:
            raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(data)


# -- command payloads -------------------------------------------------------------------
# every command returns (summary line, JSON payload)


def cmd_validate(g, args):
    d = graph_to_dict(g)
    return f"valid graph: {len(g)} vertices, {g.num_edges()} edges", {"valid": True, "graph": d}


def _classify(g: LabeledGraph) -> dict:
    sph = spherical_type(g, crosscheck=all(m <= 1000 for m in g.labels()))
    return {
        "even": is_even(g),
        "fc": is_fc(g),
        "even_fc": is_even_fc(g),
        "spherical": sph.to_dict(),
        "coherent": coherence(g).coherent,
        "derived_subgroup": derived_subgroup(g).to_dict(),
        "abelian": is_abelian(g),
        "irreducible_factors": [list(f) for f in irreducible_factors(g)],
        "irreducible": len(irreducible_factors(g)) <= 1,
    }


def cmd_classify(g, args):
    d = _classify(g)
    flags = [k for k in ("even", "fc", "even_fc", "coherent", "abelian", "irreducible") if d[k]]
    if d["spherical"]["spherical"]:
        flags.append("spherical")
    return "properties: " + (", ".join(flags) or "none"), d


def cmd_coherence(g, args):
    v = coherence(g)
    return v.describe(), {"verdict": v.describe(), **v.to_dict()}


def cmd_abelianize(g, args):
    a = abelianization(g, verify=True)
    return f"abelianization: Z^{a.rank}", a.to_dict()


def cmd_decompose(g, args):
    t = coherent_decomposition(g)
    return render_tree(t), {"text": render_tree(t), "tree": tree_to_dict(t, g)}


def cmd_kernel(g, args):
    given = (args.g1, args.g2, args.delta)
    if any(x is not None for x in given):
        if any(x is None for x in given):
            raise MalformedInput("--g1, --g2 and --delta must be given together")
        k = bass_serre_kernel(g, _subset(args.g1), _subset(args.g2), _subset(args.delta))
        split = CliqueSplit(g.sort(_subset(args.g1)), g.sort(_subset(args.g2)), g.sort(_subset(args.delta)))
        rep = normal_subgroup_report(g, split)
    else:
        rep = normal_subgroup_report(g)
        k = rep.kernel
    return f"kernel S = {{{','.join(k.S)}}}", rep.to_dict()


def cmd_split(g, args):
    s = vertex_split(g, args.vertex)
    d = s.to_dict()
    return d["text"], d


def cmd_centralizer(g, args):
    if (args.vertex is None) == (args.subset is None):
        raise MalformedInput("give exactly one of --vertex or --subset")
    if args.vertex is not None:
        c = vertex_centralizer(g, args.vertex)
        text, pres = emit_presentation(c)
        return text, {"structure": c.to_dict(), "presentation": pres["text"]}
    s = _subset(args.subset)
    gens = parabolic_centralizer_generators(g, s)
    d = {"S": list(g.vertex_set(s)), "generators": [str(w) for w in gens], "generator_words": [w.to_json() for w in gens]}
    if len(s) == 2 and not g.adjacent(*s) and s[0] != s[1]:
        d["pair_bound"] = list(pair_centralizer_bound(g, *s))
    return "C(A_S) generated by: " + ", ".join(d["generators"]), d


def cmd_normalizer(g, args):
    v = normalizer_classify(g, _subset(args.subset))
    return v.describe(), v.to_dict()


def cmd_acyl(g, args):
    r = acyl_report(g, _subset(args.subset))
    return r.overall, r.to_dict()


def cmd_presentation(g, args):
    text, d = emit_presentation(g, coxeter=args.coxeter)
    return text, d


def _skip(skipped, section, exc):
    skipped.append({"section": section, "reason": str(exc)})


def build_report(g: LabeledGraph, max_brute: int = DEFAULT_MAX_BRUTE) -> dict:
    """Everything applicable to ``g``; sections whose preconditions fail are
    listed under ``skipped``."""
    skipped: list[dict] = []
    verdict = coherence(g)
    ab = abelianization(g, verify=True)
    rep: dict = {
        "report_version": REPORT_VERSION,
        "graph": graph_to_dict(g),
        "classification": _classify(g),
        "coherent": verdict.coherent,
        "coherence": {"verdict": verdict.describe(), **verdict.to_dict()},
        "abelianization": ab.to_dict(),
        "presentation": emit_presentation(g)[0],
        "coxeter_presentation": emit_presentation(g, coxeter=True)[0],
    }
    try:
        t = coherent_decomposition(g)
        rep["decomposition"] = {"text": render_tree(t), "tree": tree_to_dict(t, g)}
        rep["parabolic_checks"] = [
            {
                "over": list(a.over),
                "left": list(a.left.support),
                "right": list(a.right.support),
                "holds": all(parabolic_commutator_check(g, p) for p in (a.left.support, a.right.support, a.over)),
            }
            for a in iter_amalgams(t)
        ]
    except PreconditionError as exc:
        _skip(skipped, "decomposition", exc)
    try:
        rep["normal_subgroups"] = normal_subgroup_report(g).to_dict()
    except PreconditionError as exc:
        _skip(skipped, "normal_subgroups", exc)
    splits = []
    for w in g.vertices:
        try:
            splits.append(vertex_split(g, w).to_dict())
        except PreconditionError:
            pass
    if splits:
        rep["vertex_splits"] = splits
    else:
        skipped.append({"section": "vertex_splits", "reason": "every vertex is dominating"})
    if is_even_fc(g):
        rep["centralizers"] = {a: vertex_centralizer(g, a).to_dict() for a in g.vertices}
        rep["normalizers"] = {a: normalizer_classify(g, [a]).to_dict() for a in g.vertices}
        if len(g):
            rep["normalizers"][",".join(g.vertices)] = normalizer_classify(g, g.vertices).to_dict()
        rep["acylindricity"] = acyl_report(g).to_dict()
    else:
        reason = "requires even FC-type"
        for s in ("centralizers", "normalizers", "acylindricity"):
            skipped.append({"section": s, "reason": reason})
    checks: dict = {"smith_normal_form_rank": smith_normal_form(relation_matrix(g)).free_rank}
    if all(m <= 1000 for m in g.labels()):
        checks["cosine_form_positive_definite"] = cosine_matrix_pd(g)
    else:
        skipped.append({"section": "oracles.cosine", "reason": "label above the cosine table cap"})
    try:
        checks["brute_chordal"] = brute_chordal(g, max_brute)
        checks["brute_clique_condition"] = brute_clique_condition(g, max_brute)
        checks["brute_pattern"] = [list(p) for p in brute_pattern(g, max_brute)]
        brute = checks["brute_chordal"] and checks["brute_clique_condition"] and not checks["brute_pattern"]
        checks["brute_coherent_agrees"] = brute == verdict.coherent
    except TooLarge as exc:
        _skip(skipped, "oracles.brute", exc)
    rep["oracles"] = checks
    rep["skipped"] = skipped
    _self_check(rep)
    return rep


def _self_check(rep: dict) -> None:
    from artin.errors import InternalInconsistency

    o = rep["oracles"]
    if o["smith_normal_form_rank"] != rep["abelianization"]["rank"]:
        raise InternalInconsistency("Smith form rank disagrees with the odd components")
    if o.get("brute_coherent_agrees") is False:
        raise InternalInconsistency("brute-force coherence disagrees with the classifier")
    if any(not p["holds"] for p in rep.get("parabolic_checks", ())):
        raise InternalInconsistency("a decomposition piece fails the odd-component restriction test")
    pd = o.get("cosine_form_positive_definite")
    if pd is not None and pd != rep["classification"]["spherical"]["spherical"]:
        raise InternalInconsistency("cosine form disagrees with the spherical catalog")


def cmd_report(g, args):
    rep = build_report(g, args.max_brute)
    return f"report: {rep['coherence']['verdict']}", rep


def cmd_oracle(g, args):
    kind = args.oracle
    if kind == "snf":
        if args.matrix is not None:
            try:
                rows = json.loads(args.matrix)
                m = IntegerMatrix.from_rows(rows, ncols=len(rows[0]) if rows else 0)
            except (ValueError, TypeError, IndexError) as exc:
                raise MalformedInput(f"bad matrix: {exc}") from None
        else:
            m = relation_matrix(g)
        s = smith_normal_form(m)
        return f"divisors {list(s.divisors)}, free rank {s.free_rank}", {"divisors": list(s.divisors), "free_rank": s.free_rank}
    if kind == "pd":
        v = cosine_matrix_pd(g)
        return f"positive definite: {v}", {"positive_definite": v}
    if kind == "chordal":
        v = brute_chordal(g, args.max_brute)
        fast, cert = is_chordal(g)
        return f"chordal: {v}", {"chordal": v, "agrees": v == fast}
    if kind == "pattern":
        pats = [list(p) for p in brute_pattern(g, args.max_brute)]
        return f"{len(pats)} pattern(s)", {"patterns": pats}
    r = bounded_rewrite_equal(args.k * 2, GeneratorWord.parse(args.w1), GeneratorWord.parse(args.w2), args.depth)
    return r.status, {"status": r.status, "states": r.states, "budget_exceeded": r.budget_exceeded}


# -- argument parsing ----------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, graph: bool = True) -> None:
    if graph:
        p.add_argument("graph", nargs="?", help="graph JSON file (default: stdin)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--max-brute", type=int, default=DEFAULT_MAX_BRUTE, help="vertex cap for brute-force oracles")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artin", description="Analyse Artin groups given by labeled graphs.")
    parser.add_argument("--version", action="version", version=f"artin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    simple = {
        "validate": ("check the graph file", cmd_validate),
        "classify": ("even / FC / spherical / coherent / irreducible summary", cmd_classify),
        "coherence": ("coherence verdict with witness", cmd_coherence),
        "abelianize": ("abelianization rank and generator classes", cmd_abelianize),
        "decompose": ("decomposition tree of a coherent group", cmd_decompose),
        "report": ("every applicable analysis", cmd_report),
    }
    for name, (hlp, fn) in simple.items():
        p = sub.add_parser(name, help=hlp)
        _common(p)
        p.set_defaults(func=fn)
    p = sub.add_parser("kernel", help="Bass-Serre kernel of a free abelian split")
    _common(p)
    for opt in ("--g1", "--g2", "--delta"):
        p.add_argument(opt, help="comma-separated vertices")
    p.set_defaults(func=cmd_kernel)
    p = sub.add_parser("split", help="splitting along the star of a vertex")
    _common(p)
    p.add_argument("--vertex", required=True)
    p.set_defaults(func=cmd_split)
    p = sub.add_parser("centralizer", help="centralizer of a vertex or of A_S")
    _common(p)
    p.add_argument("--vertex")
    p.add_argument("--subset", help="comma-separated vertices")
    p.set_defaults(func=cmd_centralizer)
    p = sub.add_parser("normalizer", help="normalizer verdict for A_S")
    _common(p)
    p.add_argument("--subset", required=True, help="comma-separated vertices")
    p.set_defaults(func=cmd_normalizer)
    p = sub.add_parser("acyl", help="acylindrical hyperbolicity per factor")
    _common(p)
    p.add_argument("--subset", help="comma-separated vertices (default: all)")
    p.set_defaults(func=cmd_acyl)
    p = sub.add_parser("presentation", help="Artin or Coxeter presentation")
    _common(p)
    p.add_argument("--coxeter", action="store_true", help="add the relations x^2 = 1")
    p.set_defaults(func=cmd_presentation)
    p = sub.add_parser("oracle", help="brute-force and numeric oracles (debugging)")
    osub = p.add_subparsers(dest="oracle", required=True)
    for name in ("snf", "pd", "chordal", "pattern"):
        q = osub.add_parser(name)
        _common(q)
        if name == "snf":
            q.add_argument("--matrix", help="JSON list of integer rows instead of a graph")
        q.set_defaults(func=cmd_oracle)
    q = osub.add_parser("rewrite", help="bounded search for u = v in a dihedral group of label 2k")
    _common(q, graph=False)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--w1", required=True)
    q.add_argument("--w2", required=True)
    q.add_argument("--depth", type=int, default=10**5)
    q.set_defaults(func=cmd_oracle)
    return parser


def flatten(data, prefix: str = "") -> list[str]:
    """``path: value`` lines covering every leaf of a JSON payload."""
    if isinstance(data, dict):
        if not data:
            return [f"{prefix}: {{}}"] if prefix else []
        out = []
        for k in sorted(data):
            out.extend(flatten(data[k], f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(data, list) and any(isinstance(x, (dict, list)) for x in data):
        out = []
        for i, x in enumerate(data):
            out.extend(flatten(x, f"{prefix}[{i}]"))
        return out
    return [f"{prefix}: {json.dumps(data, sort_keys=True)}"]


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        standalone = getattr(args, "matrix", None) is not None
        g = _read_graph(args.graph) if hasattr(args, "graph") and not standalone else None
        summary, payload = args.func(g, args)
    except ArtinError as exc:
        kind = "input error" if isinstance(exc, InputError) else (
            "precondition violated" if isinstance(exc, PreconditionError) else "self-check failed"
        )
        print(f"artin: {kind}: {exc}", file=stderr)
        return exc.exit_code
    except RecursionError as exc:  # pragma: no cover
        print(f"artin: self-check failed: {exc}", file=stderr)
        return 3
    if args.json:
        stdout.write(dumps(payload) + "\n")
    else:
        stdout.write(summary + "\n")
        for line in flatten(payload):
            stdout.write(line + "\n")
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":  # pragma: no cover
    main()
