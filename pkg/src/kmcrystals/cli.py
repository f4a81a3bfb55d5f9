"""Batch front end.

Exit codes: 0 = success / property holds; 1 = a checked property was violated
(report still written); 2 = input error (diagnostic on stderr).  Identical
inputs produce byte-identical outputs: orderings are deterministic and JSON is
emitted with sorted keys.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - 3.10 fallback
    import tomli as tomllib

from . import quiver as qv
from . import ratmat as rm
from .binf import eps_star, from_word, standard_iota, star
from .cartan import fold, graph_cartan, is_finite_type, validate_cartan
from .commutor import cactus_check, commute, decompose
from .crystal import TensorElem, hw_reduce, replay
from .errors import CartanError, FoldingError, NodeCapError, TransportError
from .hw import enumerate_crystal, highest, serialize as serialize_hw


class InputError(Exception):
    pass


def _load_config(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if path.endswith(".json"):
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON in {path}: {exc}") from exc
    try:
        cfg = tomllib.loads(raw.decode("utf-8"))
    except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"malformed TOML in {path}: {exc}") from exc
    # allow `automorphism` inside a [graph] section as well as at top level
    if isinstance(cfg.get("graph"), dict) and "automorphism" in cfg["graph"]:
        cfg.setdefault("automorphism", cfg["graph"].pop("automorphism"))
    return cfg


def _graph_from_config(cfg):
    graph = cfg["graph"]
    nodes = list(graph["nodes"])
    pos = {label: k for k, label in enumerate(nodes)}
    if len(pos) != len(nodes):
        raise InputError("duplicate node labels")
    try:
        edges = [(pos[i], pos[j]) for i, j in graph["edges"]]
    except KeyError as exc:
        raise InputError(f"edge endpoint {exc} is not a node") from exc
    return nodes, pos, edges


def _fold_from_config(cfg):
    nodes, pos, edges = _graph_from_config(cfg)
    perm_labels = cfg["automorphism"]
    if sorted(perm_labels, key=str) != sorted(nodes, key=str):
        raise InputError("automorphism must permute the node labels")
    perm = [pos[perm_labels[k]] for k in range(len(nodes))]
    try:
        return fold(len(nodes), edges, perm)
    except (FoldingError, CartanError) as exc:
        raise InputError(str(exc)) from exc


def load_algebra(path):
    """CartanData from a TOML/JSON file holding `cartan`, or `graph` with an
    optional `automorphism` (in which case the folded matrix is used)."""
    cfg = _load_config(path)
    try:
        if "cartan" in cfg:
            return validate_cartan(cfg["cartan"])
        if "graph" in cfg:
            if "automorphism" in cfg:
                return _fold_from_config(cfg).cartan
            _, _, edges = _graph_from_config(cfg)
            return graph_cartan(len(cfg["graph"]["nodes"]), edges)
    except (CartanError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad algebra file {path}: {exc}") from exc
    raise InputError(f"{path} must define 'cartan' or 'graph'")


def _parse_ints(text):
    text = text.strip()
    if text in ("", "-"):
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _weight(cartan, text):
    coords = _parse_ints(text)
    if len(coords) != cartan.rank:
        raise InputError(f"weight {text!r} must have {cartan.rank} coordinates")
    if any(c < 0 for c in coords):
        raise InputError(f"weight {text!r} must be dominant")
    return cartan.weight(lam=coords)


def _word(cartan, text):
    word = _parse_ints(text)
    for i in word:
        if not 0 <= i < cartan.rank:
            raise InputError(f"word entry {i} is not a node (0..{cartan.rank - 1})")
    return word


def _emit(payload, out, as_json=True):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n" if as_json else payload
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_depth(cartan, depth, what):
    if depth is None and not is_finite_type(cartan):
        raise InputError(
            f"Cartan matrix is not of finite type, so {what} is infinite; pass --depth"
        )


def _hw_element(cartan, weight_text, word_text):
    lam = _weight(cartan, weight_text)
    word = _word(cartan, word_text)
    try:
        return replay(highest(cartan, lam), word)
    except TransportError as exc:
        raise InputError(f"word {word_text!r} vanishes in B({weight_text})") from exc


def cmd_graph(args):
    cartan = load_algebra(args.algebra)
    lam = _weight(cartan, args.weight)
    _require_depth(cartan, args.depth, "the crystal")
    graph = enumerate_crystal(cartan, lam, depth=args.depth)
    if args.format == "dot":
        _emit(graph.to_dot(), args.out, as_json=False)
    else:
        _emit(graph.to_json_dict(), args.out)
    return 0


def cmd_star(args):
    cartan = load_algebra(args.algebra)
    word = _word(cartan, args.word)
    b = from_word(standard_iota(cartan), word)
    sb = star(b)
    payload = {
        "iota_period": list(b.iota.period),
        "word": word,
        "coords": {str(p): v for p, v in b.coords},
        "weight_root": list(b.wt().root),
        "eps_star": list(eps_star(b).lam),
        "star_word": hw_reduce(sb)[1],
        "star_coords": {str(p): v for p, v in sb.coords},
    }
    _emit(payload, args.out)
    return 0


def cmd_commutor(args):
    cartan = load_algebra(args.algebra)
    if len(args.weights) != 2 or len(args.words) != 2:
        raise InputError("commutor needs exactly two weights and two words")
    x = _hw_element(cartan, args.weights[0], args.words[0])
    y = _hw_element(cartan, args.weights[1], args.words[1])
    left, right = commute(x, y)
    payload = {
        "input": [serialize_hw(x), serialize_hw(y)],
        "output": [serialize_hw(left), serialize_hw(right)],
    }
    _emit(payload, args.out)
    return 0


def cmd_cactus(args):
    cartan = load_algebra(args.algebra)
    if len(args.weights) != 3:
        raise InputError("cactus needs exactly three weights")
    lams = [_weight(cartan, w) for w in args.weights]
    _require_depth(cartan, args.depth, "the tensor crystal")
    report = cactus_check(
        cartan, lams, depth=args.depth, all_elements=args.all_elements
    )
    _emit(report, args.out)
    return 0 if report["holds"] else 1


def cmd_decompose(args):
    cartan = load_algebra(args.algebra)
    if len(args.weights) != len(args.words):
        raise InputError("need one word per weight")
    factors = [
        _hw_element(cartan, w, word) for w, word in zip(args.weights, args.words)
    ]
    elem = factors[0] if len(factors) == 1 else TensorElem(tuple(factors))
    points = _parse_ints(args.points)
    try:
        d = decompose(elem, points, args.flavor)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    slots = []
    for body, part in d.slots:
        slots.append(
            {
                "body_word": hw_reduce(body)[1],
                "part": None
                if part is None
                else [serialize_hw(x) for x in _leaves(part)],
            }
        )
    _emit({"points": points, "flavor": args.flavor, "slots": slots}, args.out)
    return 0


def _leaves(elem):
    from .crystal import leaves

    return leaves(elem)


def cmd_fold(args):
    cfg = _load_config(args.algebra)
    if "graph" not in cfg or "automorphism" not in cfg:
        raise InputError("fold needs an algebra file with 'graph' and 'automorphism'")
    folded = _fold_from_config(cfg)
    nodes = list(cfg["graph"]["nodes"])
    payload = {
        "orbits": [[nodes[i] for i in orb] for orb in folded.orbits],
        "m": [list(row) for row in folded.m],
        "d": list(folded.d),
        "cartan": [list(row) for row in folded.cartan.matrix],
        "symmetrizer": list(folded.cartan.d),
        "finite_type": is_finite_type(folded.cartan),
    }
    _emit(payload, args.out)
    return 0


_QUIVER_SHAPES = {
    "a1": (1, ()),
    "a2": (2, ((0, 1),)),
    "a3": (3, ((0, 1), (1, 2))),
}


def _random_point(quiver, rng, max_dim):
    v = tuple(rng.randint(0, max_dim) for _ in range(quiver.num_nodes))
    w = tuple(rng.randint(0, max_dim) for _ in range(quiver.num_nodes))
    pool = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2)]

    def rand_mat(r, c):
        return rm.mat([[rng.choice(pool) for _ in range(c)] for _ in range(r)], (r, c))

    x = {
        a: rand_mat(v[quiver.inc_node(a)], v[quiver.out_node(a)])
        for a in quiver.arrows()
    }
    s = [rand_mat(v[i], w[i]) for i in range(quiver.num_nodes)]
    t = [rand_mat(w[i], v[i]) for i in range(quiver.num_nodes)]
    return qv.make_point(quiver, v, w, x, s, t)


def _check_point(point, checks):
    cartan = graph_cartan(
        point.quiver.num_nodes, [tuple(e) for e in point.quiver.edges]
    )
    results = []
    for name in checks:
        ok = True
        detail = None
        if name == "nilpotent":
            ok = qv.is_nilpotent(point)
        elif name == "moment":
            ok = qv.moment_is_zero(point)
            if not ok:
                detail = "mu(x,s,t) != 0"
        elif name == "stable":
            ok = qv.is_stable(point)
        elif name == "costable":
            ok = qv.is_costable(point)
        elif name == "duality":
            dp = qv.dagger(point)
            mu_p = qv.nakajima_moment(point)
            mu_dp = qv.nakajima_moment(dp)
            checks_ok = [
                qv.dagger(dp) == point,
                all(rm.transpose(a) == b for a, b in zip(mu_p, mu_dp)),
                qv.is_stable(point) == qv.is_costable(dp),
                qv.is_costable(point) == qv.is_stable(dp),
                qv.is_nilpotent(point) == qv.is_nilpotent(dp),
            ]
            ok = all(checks_ok)
            if not ok:
                detail = f"duality subchecks: {checks_ok}"
        elif name == "lemma":
            if not qv.is_nilpotent(point) or not qv.moment_is_zero(point):
                ok = False
                detail = "precondition failed: need nilpotent x and mu = 0"
            else:
                eps_zero = all(
                    qv.eps_i_point(point, i) == 0
                    for i in range(point.quiver.num_nodes)
                )
                ok = qv.is_costable(point) == eps_zero
        elif name == "phi":
            if not qv.moment_is_zero(point):
                ok = False
                detail = "precondition failed: mu != 0"
            else:
                ok = all(
                    qv.phi_i_point(point, i)
                    == qv.eps_i_point(point, i) + qv.weight_pairing(point, cartan, i)
                    for i in range(point.quiver.num_nodes)
                )
        else:
            raise InputError(f"unknown check {name!r}")
        results.append({"check": name, "ok": ok, "detail": detail})
    return results


def cmd_quiver(args):
    checks = [c for c in args.checks.split(",") if c]
    if not checks:
        raise InputError("no checks requested")
    if args.random is not None:
        if args.shape not in _QUIVER_SHAPES:
            raise InputError(f"unknown shape {args.shape!r}")
        n, edges = _QUIVER_SHAPES[args.shape]
        quiver = qv.QuiverData(n, edges)
        rng = random.Random(args.seed)
        reports = []
        for k in range(args.random):
            point = _random_point(quiver, rng, args.max_dim)
            results = _check_point(point, checks)
            if any(not r["ok"] for r in results):
                reports.append({"index": k, "results": results})
        payload = {
            "seed": args.seed,
            "shape": args.shape,
            "points": args.random,
            "violations": reports,
            "holds": not reports,
        }
        print(f"seed={args.seed}", file=sys.stderr)
        _emit(payload, args.out)
        return 0 if payload["holds"] else 1
    if not args.input:
        raise InputError("quiver needs --input or --random")
    cfg = _load_config(args.input)
    try:
        point = qv.point_from_json(cfg)
    except (ValueError, KeyError, AssertionError) as exc:
        raise InputError(f"bad point file {args.input}: {exc}") from exc
    results = _check_point(point, checks)
    payload = {
        "v": list(point.v),
        "w": list(point.w),
        "results": results,
        "holds": all(r["ok"] for r in results),
    }
    _emit(payload, args.out)
    return 0 if payload["holds"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kmcrystals",
        description="crystal graphs, the star involution, the commutor and its "
        "cactus relation, diagram folding, and exact quiver-point checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def alg(p):
        p.add_argument("--algebra", required=True, help="TOML/JSON algebra file")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("graph", help="crystal graph of B(lambda)")
    alg(p)
    p.add_argument("--weight", required=True, help="fundamental coordinates, e.g. 1,0")
    p.add_argument("--depth", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("star", help="star involution of a lowering-word element")
    alg(p)
    p.add_argument("--word", required=True, help="comma-separated nodes, '-' for empty")
    p.set_defaults(fn=cmd_star)

    p = sub.add_parser("commutor", help="swap a pair of highest-weight crystal elements")
    alg(p)
    p.add_argument("--weights", nargs=2, required=True)
    p.add_argument("--words", nargs=2, required=True)
    p.set_defaults(fn=cmd_commutor)

    p = sub.add_parser("cactus", help="verify the cactus relation on a weight triple")
    alg(p)
    p.add_argument("--weights", nargs=3, required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--all-elements", action="store_true")
    p.set_defaults(fn=cmd_cactus)

    p = sub.add_parser("decompose", help="split data of a tensor element")
    alg(p)
    p.add_argument("--weights", nargs="+", required=True)
    p.add_argument("--words", nargs="+", required=True)
    p.add_argument("--points", required=True, help="split positions, e.g. 1,2")
    p.add_argument("--flavor", choices=("nested", "flat"), default="nested")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("fold", help="fold a graph along an admissible automorphism")
    alg(p)
    p.set_defaults(fn=cmd_fold)

    p = sub.add_parser("quiver", help="exact checks on a framed quiver point")
    p.add_argument("--input", help="point JSON file")
    p.add_argument("--checks", required=True, help="comma-separated check names")
    p.add_argument("--random", type=int, help="check N random points instead of a file")
    p.add_argument("--seed", type=int, default=20240801)
    p.add_argument("--shape", default="a2", choices=sorted(_QUIVER_SHAPES))
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_quiver)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, matching the input-error contract
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (InputError, OSError, CartanError, FoldingError, NodeCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
