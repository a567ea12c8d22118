"""
Subcommand handlers and the dispatcher.

Exit codes: 0 success, 2 rejected input (including guard caps), 1 internal
invariant violation, always reported with the invariant's name.
"""
import logging
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

import numpy as np

from core.characters import (
    character_table, verify_burnside_relation, verify_orthogonality, verify_root_of_unity_sums,
)
from core.cobordism import closed_surface_word, evaluate, format_word, relation_suite, typecheck
from core.dijkgraaf_witten import (
    SurfaceSignature, count_homs_surface_group, labels_from_representatives, mednykh_exact, npoint_function,
)
from core.errors import InvariantViolation, ValidationError
from core.frobenius import (
    genus_invariant, handle_element, is_semisimple, rescale_trace, verify_frobenius_structure,
)
from core.group import centralizer, class_structure_constants
from core.lattice import (
    cylinder_bridge_check, group_algebra_tensors, lattice_bridge_check, pachner_invariance_check,
    partition_function, random_moves, surface_from_name,
)
from core.modular import (
    ModularData, burnside_orbit_oracle, drinfeld_double, fusion_genus_dim, label_names,
    modular_relations_check, su2_level_k, verlinde_dim, verlinde_fusion,
)
from core.open_closed import (
    build_open_algebra, cardy_check, classify_branes, closed_string_algebra, random_brane_config,
    verify_boundary_maps,
)
from core.reports import CheckReport
from core.settings import get_settings, replace_settings
from core.yang_mills import (
    finite_group_spectrum, gluing_consistency_check, nmax_for_tail, partition_function as ym_partition_function,
    su2_spectrum,
)
from persistence.loaders import load_algebra, load_group, load_triangulation, load_word
from persistence.serializer import exact_value, render, save_result
from .args import parse_args
from .selftest import run_selftest

logger = logging.getLogger('cli')


def _require(report: CheckReport) -> CheckReport:
    """Raise InvariantViolation naming the first failing relation of a report."""
    failing = report.failing()
    if failing:
        name, value = next(iter(failing.items()))
        raise InvariantViolation(f"{report.name}.{name}", f"defect {value:.3e} exceeds {report.tol:g}")
    return report


def _real_if_close(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M)
    if np.iscomplexobj(M) and np.max(np.abs(M.imag), initial=0.0) <= get_settings().tol_eq:
        return M.real
    return M


def handle_group(args) -> Dict[str, Any]:
    G = load_group(args.group)
    payload: Dict[str, Any] = {"group": G.name, "order": G.order}
    if args.query == 'summary':
        payload.update({
            "abelian": G.is_abelian(),
            "exponent": G.exponent,
            "num_classes": len(G.classes),
            "class_sizes": [c.size for c in G.classes],
        })
    elif args.query == 'classes':
        payload["classes"] = [{"representative": c.representative, "size": c.size, "members": list(c.members)}
                              for c in G.classes]
        payload["sizes"] = [c.size for c in G.classes]
    elif args.query == 'orders':
        payload["element_orders"] = G.element_orders
    elif args.query == 'centralizers':
        payload["centralizer_orders"] = [centralizer(G, c.representative).order for c in G.classes]
    elif args.query == 'cayley':
        payload["cayley"] = G.cayley
    else:
        payload["class_structure_constants"] = class_structure_constants(G)
    return payload


def handle_chartable(args) -> Dict[str, Any]:
    G = load_group(args.group)
    table = character_table(G, args.seed)
    payload = {
        "group": G.name,
        "dims": table.dims,
        "class_sizes": table.class_sizes,
        "class_representatives": [c.representative for c in table.classes],
        "characters": _real_if_close(table.characters),
    }
    if args.checks:
        payload["checks"] = [_require(verify_orthogonality(table)), _require(verify_burnside_relation(table)),
                             _require(verify_root_of_unity_sums(table))]
    return payload


def handle_frob(args) -> Dict[str, Any]:
    A = load_algebra(args.algebra)
    if args.rescale is not None:
        A = rescale_trace(A, args.rescale)
    omega = handle_element(A)
    return {
        "algebra": A.name,
        "dim": A.dim,
        "commutative": A.commutative,
        "semisimple": is_semisimple(A),
        "handle_element": _real_if_close(omega.coordinates),
        "genus_invariants": [_real_if_close(np.array(genus_invariant(A, g))).item()
                             for g in range(args.max_genus + 1)],
        "structure": _require(verify_frobenius_structure(A)),
    }


def handle_cob(args) -> Dict[str, Any]:
    A = load_algebra(args.algebra)
    if args.suite or args.action == 'suite':
        return {"algebra": A.name, "relations": _require(relation_suite(A))}
    if args.genus is not None:
        word = closed_surface_word(args.genus)
    elif args.word:
        word = load_word(args.word)
    else:
        raise ValidationError("cob eval needs --word or --genus")
    ins, outs = typecheck(word)
    return {
        "algebra": A.name,
        "word": format_word(word).splitlines(),
        "in_circles": ins,
        "out_circles": outs,
        "matrix": _real_if_close(evaluate(word, A)),
    }


def handle_openclosed(args) -> Dict[str, Any]:
    if args.random:
        rng = np.random.default_rng(args.seed)
        cardy, boundary = 0.0, 0.0
        for _ in range(args.random):
            B, k = random_brane_config(rng)
            cardy = max(cardy, _require(cardy_check(B, k)).max_defect)
            boundary = max(boundary, _require(verify_boundary_maps(B, k, seed=args.seed)).max_defect)
        return {"configurations": args.random, "cardy_defect": cardy, "boundary_defect": boundary}
    if not args.traces:
        raise ValidationError("openclosed needs --traces or --random")
    B = closed_string_algebra(args.traces, args.signs)
    k = args.branes if args.branes else [1] * B.n
    if args.action == 'cardy':
        return {"points": B.n, "branes": list(k), "cardy": _require(cardy_check(B, k))}
    A = build_open_algebra(B, k)
    k0 = classify_branes(B)
    return {
        "points": B.n,
        "branes": list(A.k),
        "open_dim": A.dim,
        "k0": {"rank": k0.rank, "description": k0.description},
        "cardy": _require(cardy_check(B, k)),
        "boundary_maps": _require(verify_boundary_maps(B, k, seed=args.seed)),
    }


def handle_dw(args) -> Dict[str, Any]:
    G = load_group(args.group)
    if args.boundary or args.points:
        labels = tuple(args.boundary) if args.boundary else labels_from_representatives(G, args.points)
        sig = SurfaceSignature(args.genus, labels)
        value = npoint_function(G, sig, 'both')
        return {"group": G.name, "genus": args.genus, "boundary_labels": list(sig.boundary_labels),
                "value": exact_value(value)}
    count = count_homs_surface_group(G, args.genus, args.method)
    payload = {
        "group": G.name,
        "genus": args.genus,
        "method": args.method,
        "count": count,
        "value": f"{count}/{G.order}",
        "decimal": count / G.order,
        "reduced": exact_value(Fraction(count, G.order)),
    }
    if args.compare:
        payload["character_formula"] = exact_value(mednykh_exact(G, args.genus))
    return payload


def _genus_of_closed(surface) -> int:
    if surface.boundary:
        raise ValidationError("this check needs a closed surface")
    return (2 - surface.euler_characteristic()) // 2


def handle_lattice(args) -> Dict[str, Any]:
    G = load_group(args.group)
    if args.surface.endswith('.json'):
        surface = load_triangulation(args.surface)
    else:
        surface = surface_from_name(args.surface)
    if args.check == 'cylinder':
        return {"group": G.name, "cylinder": _require(cylinder_bridge_check(G))}
    if args.check == 'pachner':
        g = _genus_of_closed(surface)
        moves = args.moves or 50
        return {"group": G.name, "pachner": _require(pachner_invariance_check(G, g, moves, args.seed, surface))}
    if args.check == 'bridge':
        return {"group": G.name, "bridge": _require(lattice_bridge_check(G, _genus_of_closed(surface)))}
    if args.moves:
        surface = random_moves(surface, args.moves, args.seed)
    value = partition_function(surface, group_algebra_tensors(G))
    return {
        "group": G.name,
        "surface": surface.name,
        "moves": args.moves,
        "triangles": surface.num_triangles,
        "vertices": surface.num_vertices,
        "edges": surface.num_edges,
        "euler_characteristic": surface.euler_characteristic(),
        "boundary_circles": len(surface.boundary),
        "value": value,
    }


def _emit_modular(md: ModularData, emit: Sequence[str], labels: List[str]) -> Dict[str, Any]:
    """Merge the requested outputs; 'dims' is an alias of 'qdims'."""
    payload: Dict[str, Any] = {}
    for item in emit:
        payload.update(_emit_one(md, item, labels))
    return payload


def _emit_one(md: ModularData, emit: str, labels: List[str]) -> Dict[str, Any]:
    if emit == 's':
        return {"S": _real_if_close(md.S)}
    if emit == 't':
        return {"twists": md.twists}
    if emit == 'c':
        return {"C": md.C.astype(int)}
    if emit in ('qdims', 'dims'):
        return {"qdims": _real_if_close(md.qdims)}
    if emit == 'fusion':
        return {"fusion": verlinde_fusion(md)}
    if emit == 'relations':
        return {"relations": modular_relations_check(md)}
    return {
        "rank": md.rank,
        "labels": labels,
        "qdims": _real_if_close(md.qdims),
        "D": md.D,
        "p_plus": md.p_plus,
        "zeta": md.zeta,
        "twists": md.twists,
    }


def handle_double(args) -> Dict[str, Any]:
    G = load_group(args.group)
    md = drinfeld_double(G, args.seed)
    payload = {"name": md.name}
    payload.update(_emit_modular(md, args.emit, label_names(G, md)))
    if args.genus is not None:
        payload["verlinde_dim"] = verlinde_dim(md, args.genus)
        payload["burnside_orbits"] = burnside_orbit_oracle(G, args.genus)
        payload["fusion_genus_dim"] = fusion_genus_dim(verlinde_fusion(md), args.genus)
    return payload


def handle_su2k(args) -> Dict[str, Any]:
    md = su2_level_k(args.level, args.sign)
    payload = {
        "name": md.name,
        "level": args.level,
        "twist_sign": md.details["twist_sign"],
        "central_charge": md.details["central_charge"],
    }
    payload.update(_emit_modular(md, args.emit, [str(x) for x in md.labels]))
    if args.genus is not None:
        payload["verlinde_dim"] = verlinde_dim(md, args.genus)
        payload["fusion_genus_dim"] = fusion_genus_dim(verlinde_fusion(md), args.genus)
    return payload


def handle_ym(args) -> Dict[str, Any]:
    if args.spectrum == 'finite':
        if not args.group:
            raise ValidationError("the finite spectrum needs --group")
        spectrum = finite_group_spectrum(character_table(load_group(args.group), args.seed))
    else:
        n_max = args.nmax or nmax_for_tail(args.genus, args.area, args.tol, args.casimir_scale)
        spectrum = su2_spectrum(n_max, args.casimir_scale)
    result = ym_partition_function(spectrum, args.genus, args.area)
    payload = {
        "spectrum": spectrum.kind,
        "genus": args.genus,
        "area": args.area,
        "n_terms": result.n_terms,
        "value": result.value,
        "tail_bound": result.tail_bound,
    }
    if result.exact is not None:
        payload["exact"] = exact_value(result.exact)
    if args.gluing:
        payload["gluing"] = _require(gluing_consistency_check(spectrum, args.genus, args.area, seed=args.seed))
    return payload


def handle_selftest(args) -> Dict[str, Any]:
    return run_selftest(args.seed, args.only, args.inject)


HANDLERS: Dict[str, Callable[[Any], Dict[str, Any]]] = {
    'group': handle_group,
    'chartable': handle_chartable,
    'frob': handle_frob,
    'cob': handle_cob,
    'openclosed': handle_openclosed,
    'dw': handle_dw,
    'lattice': handle_lattice,
    'double': handle_double,
    'su2k': handle_su2k,
    'ym': handle_ym,
    'selftest': handle_selftest,
}


def dispatch(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    """
    Parse argv, run one subcommand and write its result.

    Returns:
        The process exit code
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2
    if args.threads:
        replace_settings(threads=max(1, args.threads))
    logger.debug(f"Running {args.command} with {vars(args)}")
    try:
        payload = HANDLERS[args.command](args)
    except ValidationError as e:
        logger.warning(f"{args.command}: rejected input: {e}")
        err.write(f"error: {e}\n")
        return 2
    except InvariantViolation as e:
        logger.error(f"{args.command}: invariant {e.name} violated: {e.message}")
        err.write(f"invariant violation [{e.name}]: {e.message}\n")
        return 1
    out.write(render(args.command, payload, args.format))
    if args.output and not save_result(args.command, payload, args.output):
        err.write(f"error: could not write {args.output}\n")
        return 2
    if args.command == 'selftest' and not payload["passed"]:
        err.write(f"selftest failures: {', '.join(payload['failures'])}\n")
        return 1
    return 0
