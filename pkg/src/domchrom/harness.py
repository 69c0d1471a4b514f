"""Verification campaigns: exhaustive sweeps with replayable reports.

Each campaign enumerates a finite corpus, solves every instance exactly, and
emits one record per instance with enough encoded state to replay it.  A
counterexample never aborts a sweep; it lands in the summary and flips the
``holds`` flag.  Instances are independent, so campaigns parallelize over
processes; workers return (ordered) records and the writer keeps enumeration
order, which makes reports byte-identical for any job count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from .errors import TooLargeError
from .formulas import (
    _directed_spine,
    caterpillar_upper_coloring,
    central_path,
    chi_path_orientation_min,
    chi_rooted,
    directed_spine_coloring,
    gs_layered_bound,
    gs_uniform_chi,
)
from .generators import (
    CaterpillarSpec,
    caterpillar,
    free_trees,
    gs_base,
    orient,
    path,
    rooted_orientation,
    star,
)
from .io import certificate_to_obj, encode_base, encode_tree, decode_tree
from .reports import ExperimentReport, ReportWriter
from .solver import solve_exact
from .trees import BaseTree, OrientedTree, classify_rooted, delete_leaf


def _map_ordered(fn, payloads: list, jobs: int) -> list:
    if jobs <= 1 or len(payloads) <= 1:
        return [fn(p) for p in payloads]
    chunk = max(1, len(payloads) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, payloads, chunksize=chunk))


def _chi(t: OrientedTree) -> int:
    return solve_exact(t).chi


# ---------------------------------------------------------------------------
# reversal invariance


def _invariance_record(payload: tuple[str, int, int]) -> dict:
    base_code, n, mask = payload
    base = _decode_base_edges(base_code, n)
    width = max(n - 1, 0)
    mask_rev = mask ^ ((1 << width) - 1) if width else 0
    t = orient(base, mask)
    t_rev = orient(base, mask_rev)
    chi = _chi(t)
    chi_rev = _chi(t_rev)
    record = {
        "n": n,
        "base": base_code,
        "mask": mask,
        "mask_rev": mask_rev,
        "instance": encode_tree(t),
        "instance_rev": encode_tree(t_rev),
        "chi": chi,
        "chi_rev": chi_rev,
        "equal": chi == chi_rev,
    }
    rc = classify_rooted(t)
    if rc.out_root is not None or rc.in_root is not None:
        formula = chi_rooted(t)
        record["rooted_formula"] = formula
        record["rooted_ok"] = formula == chi
    return record


def _decode_base_edges(code: str, n: int) -> BaseTree:
    from .io import decode_base

    base = decode_base(code)
    assert base.n == n
    return base


def check_reversal_invariance(max_n: int, jobs: int = 1) -> ExperimentReport:
    """Solve every orientation of every free tree up to ``max_n`` and compare
    each orientation with its reversal.

    Complementary masks are mutual reversals, so each record covers one
    mask/complement pair and the sweep touches every orientation exactly once.
    """
    if not (1 <= max_n <= 10):
        raise TooLargeError("reversal sweep supports 1 <= max_n <= 10")
    payloads = []
    for n in range(1, max_n + 1):
        half = 1 << max(n - 2, 0)
        for base in free_trees(n):
            code = encode_base(base)
            for mask in range(half):
                payloads.append((code, n, mask))
    writer = ReportWriter("reversal_invariance", {"max_n": max_n})
    records = _map_ordered(_invariance_record, payloads, jobs)
    counterexamples = []
    max_chi = -1
    max_instance = ""
    for rec in records:
        writer.add(rec)
        if not rec["equal"] or not rec.get("rooted_ok", True):
            counterexamples.append(rec["instance"])
        for key, inst in (("chi", "instance"), ("chi_rev", "instance_rev")):
            if rec[key] > max_chi:
                max_chi = rec[key]
                max_instance = rec[inst]
    return writer.finish(
        counterexamples,
        {"max_chi": max_chi, "max_chi_instance": max_instance},
    )


# ---------------------------------------------------------------------------
# leaf deletion


def _leafdel_records(payload: str) -> list[dict]:
    t = decode_tree(payload)
    chi = _chi(t)
    records = []
    for v in t.underlying_leaves:
        sub, _ = delete_leaf(t, v)
        chi_sub = _chi(sub)
        delta = chi - chi_sub
        u = t.neighbors[v][0]
        unique_out_target = t.out_neighbors[u] == (v,)
        unique_source = t.sources == (v,)
        drop_predicted = unique_out_target or unique_source
        source_rule_applicable = delta == 1 and t.in_degree(v) == 0
        source_rule_ok = (t.in_degree(u) == 1) if source_rule_applicable else None
        violations = []
        if delta not in (0, 1):
            violations.append("delta_range")
        if (delta == 1) != drop_predicted:
            violations.append("drop_characterization")
        if source_rule_applicable and not source_rule_ok:
            violations.append("source_neighbor_indegree")
        records.append(
            {
                "n": t.n,
                "instance": payload,
                "leaf": v,
                "neighbor": u,
                "chi": chi,
                "chi_sub": chi_sub,
                "delta": delta,
                "drop_predicted": drop_predicted,
                "unique_out_target": unique_out_target,
                "unique_source": unique_source,
                "source_rule_applicable": source_rule_applicable,
                "source_rule_ok": source_rule_ok,
                "violations": violations,
            }
        )
    return records


def check_leaf_deletion(max_n: int, jobs: int = 1) -> ExperimentReport:
    """Delete every underlying leaf of every orientation of every free tree.

    Records the drop ``delta = chi(T) - chi(T minus leaf)`` and evaluates the
    two deletion predicates: the iff-characterization of delta = 1 (leaf is
    its neighbor's only out-neighbor, or is the unique source) and the
    source-leaf rule (a dropped source leaf's neighbor has in-degree 1).
    Violations are findings; they carry a replayable instance encoding.
    """
    if not (2 <= max_n <= 9):
        raise TooLargeError("leaf-deletion sweep supports 2 <= max_n <= 9")
    payloads = []
    for n in range(2, max_n + 1):
        for base in free_trees(n):
            for mask in range(1 << (n - 1)):
                payloads.append(encode_tree(orient(base, mask)))
    writer = ReportWriter("leaf_deletion", {"max_n": max_n})
    grouped = _map_ordered(_leafdel_records, payloads, jobs)
    counterexamples = []
    for records in grouped:
        for rec in records:
            writer.add(rec)
            if rec["violations"]:
                counterexamples.append(
                    {"instance": rec["instance"], "leaf": rec["leaf"],
                     "violations": rec["violations"]}
                )
    return writer.finish(counterexamples)


# ---------------------------------------------------------------------------
# generalized-star conjecture exploration


def _gs_record(payload: tuple[int, int]) -> dict:
    m, k = payload
    base = gs_base(m, k)
    width = len(base.edges)
    min_chi = None
    min_mask = 0
    max_chi = None
    max_mask = 0
    uniform_chis = {}
    for mask in range(1 << width):
        chi = _chi(orient(base, mask))
        if min_chi is None or chi < min_chi:
            min_chi, min_mask = chi, mask
        if max_chi is None or chi > max_chi:
            max_chi, max_mask = chi, mask
        if mask in (0, (1 << width) - 1):
            uniform_chis[mask] = chi
    t_min = orient(base, min_mask)
    t_max = orient(base, max_mask)
    cert_min = solve_exact(t_min).certificate
    cert_max = solve_exact(t_max).certificate
    conjectured_min = 3 + m * (k // 2 - 1)
    conjectured_max = gs_uniform_chi(m, k)
    if m <= 2:
        regime = "path-degenerate"
    elif k == 1:
        regime = "star"
    else:
        regime = "general"
    return {
        "m": m,
        "k": k,
        "n": m * k + 1,
        "regime": regime,
        "orientations": 1 << width,
        "min_chi": min_chi,
        "min_mask": min_mask,
        "min_instance": encode_tree(t_min),
        "min_certificate": certificate_to_obj(cert_min),
        "max_chi": max_chi,
        "max_mask": max_mask,
        "max_instance": encode_tree(t_max),
        "max_certificate": certificate_to_obj(cert_max),
        "conjectured_min": conjectured_min,
        "min_agrees": min_chi == conjectured_min,
        "conjectured_max": conjectured_max,
        "max_agrees": max_chi == conjectured_max,
        "uniform_chi_out": uniform_chis[0],
        "uniform_chi_in": uniform_chis[(1 << width) - 1],
        "max_at_uniform": max_chi in uniform_chis.values(),
    }


def explore_conjecture_gs(
    m_max: int, k_max: int, n_cap: int = 10, jobs: int = 1
) -> ExperimentReport:
    """Exact min/max over all orientations of each generalized star.

    Agreement with the conjectured extremes is reported per (m, k);
    disagreements are findings, never failures, so the summary always holds
    when the sweep completes and every witness re-verifies.
    """
    if not (1 <= n_cap <= 10):
        raise TooLargeError("conjecture exploration supports n_cap <= 10")
    payloads = [
        (m, k)
        for m in range(1, m_max + 1)
        for k in range(1, k_max + 1)
        if m * k + 1 <= n_cap
    ]
    writer = ReportWriter(
        "gs_minmax", {"m_max": m_max, "k_max": k_max, "n_cap": n_cap}
    )
    records = _map_ordered(_gs_record, payloads, jobs)
    findings = []
    for rec in records:
        writer.add(rec)
        if not rec["min_agrees"] or not rec["max_agrees"]:
            findings.append(
                {
                    "m": rec["m"],
                    "k": rec["k"],
                    "min_chi": rec["min_chi"],
                    "conjectured_min": rec["conjectured_min"],
                    "max_chi": rec["max_chi"],
                    "conjectured_max": rec["conjectured_max"],
                }
            )
    return writer.finish([], {"findings": findings})


# ---------------------------------------------------------------------------
# stars


def _star_records(payload: int) -> list[dict]:
    m = payload
    base = star(m)
    records = []
    uniform_masks = {0, (1 << m) - 1}
    for mask in range(1 << m):
        t = orient(base, mask)
        chi = _chi(t)
        uniform = mask in uniform_masks
        records.append(
            {
                "m": m,
                "mask": mask,
                "instance": encode_tree(t),
                "chi": chi,
                "uniform": uniform,
                "ok": chi in (2, 3) and (chi == 2) == uniform,
            }
        )
    return records


def check_star_values(m_max: int, jobs: int = 1) -> ExperimentReport:
    """Solve all orientations of stars with up to ``m_max`` leaves.

    Expected: every value lies in {2, 3}, with 2 exactly on the two
    orientations whose arcs all agree.
    """
    if not (1 <= m_max <= 10):
        raise TooLargeError("star sweep supports 1 <= m_max <= 10")
    writer = ReportWriter("star_values", {"m_max": m_max})
    grouped = _map_ordered(_star_records, list(range(1, m_max + 1)), jobs)
    counterexamples = []
    for records in grouped:
        for rec in records:
            writer.add(rec)
            if not rec["ok"]:
                counterexamples.append(rec["instance"])
    return writer.finish(counterexamples)


# ---------------------------------------------------------------------------
# caterpillars


def sample_caterpillar_specs(
    samples: int,
    seed: int,
    n_max: int = 12,
    spine_min: int = 3,
    spine_max: int = 8,
) -> tuple[list[CaterpillarSpec], int]:
    """Deterministic seeded sample of oriented caterpillar specs.

    Oversized draws are skipped (and counted); every fifth accepted sample
    forces an all-forward spine so the directed-spine case stays covered.
    """
    rng = random.Random(seed)
    specs: list[CaterpillarSpec] = []
    skipped = 0
    while len(specs) < samples:
        m = rng.randint(spine_min, spine_max)
        legs = []
        for idx in range(1, max(m - 1, 1)):
            count = rng.choice((0, 0, 0, 1, 1, 2))
            if count:
                legs.append((idx, count))
        total_legs = sum(c for _, c in legs)
        if m + total_legs > n_max:
            skipped += 1
            continue
        spine_mask = rng.randrange(1 << (m - 1)) if m > 1 else 0
        if len(specs) % 5 == 0:
            spine_mask = 0
        legs_mask = rng.randrange(1 << total_legs) if total_legs else 0
        specs.append(CaterpillarSpec(m, tuple(legs), spine_mask, legs_mask))
    return specs, skipped


def _caterpillar_record(payload: tuple[int, int, tuple, int, int]) -> dict:
    index, spine_len, legs, spine_mask, legs_mask = payload
    spec = CaterpillarSpec(spine_len, tuple(legs), spine_mask, legs_mask)
    t = caterpillar(spec)
    view = central_path(t)
    m = view.m
    spine_arcs = []
    pos = {v: i for i, v in enumerate(view.spine)}
    arcset = set(t.arcs)
    for i in range(m - 1):
        a, b = view.spine[i], view.spine[i + 1]
        spine_arcs.append((i, i + 1) if (a, b) in arcset else (i + 1, i))
    spine_tree = OrientedTree(m, tuple(spine_arcs))
    chi = _chi(t)
    chi_spine = _chi(spine_tree)
    upper = caterpillar_upper_coloring(t)
    directed = _directed_spine(t, view.spine) is not None
    directed_ok = None
    directed_cert = None
    if directed:
        cert = directed_spine_coloring(t)
        directed_cert = certificate_to_obj(cert)
        directed_ok = chi == m and cert.coloring.k == m
    lower_ok = chi_spine <= chi
    upper_ok = chi <= upper.coloring.k <= 2 * m - 1
    record = {
        "index": index,
        "spec": {
            "spine_len": spine_len,
            "legs": [list(pair) for pair in legs],
            "spine_mask": spine_mask,
            "legs_mask": legs_mask,
        },
        "instance": encode_tree(t),
        "n": t.n,
        "m": m,
        "spine": list(view.spine),
        "spine_directed": directed,
        "chi": chi,
        "chi_spine": chi_spine,
        "upper_colors": upper.coloring.k,
        "upper_certificate": certificate_to_obj(upper),
        "directed_certificate": directed_cert,
        "lower_ok": lower_ok,
        "upper_ok": upper_ok,
        "directed_ok": directed_ok,
        "ok": lower_ok and upper_ok and directed_ok is not False,
    }
    return record


def check_caterpillar_bounds(
    samples: int,
    seed: int,
    n_max: int = 12,
    spine_min: int = 3,
    spine_max: int = 8,
    jobs: int = 1,
) -> ExperimentReport:
    """Spine lower bound, 2m-1 upper bound, and directed-spine equality on a
    seeded random sample of oriented caterpillars."""
    specs, skipped = sample_caterpillar_specs(samples, seed, n_max, spine_min, spine_max)
    payloads = [
        (i, s.spine_len, tuple(s.legs), s.spine_mask, s.legs_mask)
        for i, s in enumerate(specs)
    ]
    writer = ReportWriter(
        "caterpillar_bounds",
        {
            "samples": samples,
            "seed": seed,
            "n_max": n_max,
            "spine_min": spine_min,
            "spine_max": spine_max,
        },
    )
    records = _map_ordered(_caterpillar_record, payloads, jobs)
    counterexamples = []
    directed_cases = 0
    for rec in records:
        writer.add(rec)
        if rec["spine_directed"]:
            directed_cases += 1
        if not rec["ok"]:
            counterexamples.append(rec["instance"])
    return writer.finish(
        counterexamples, {"skipped": skipped, "directed_spines": directed_cases}
    )


# ---------------------------------------------------------------------------
# path orientation minimum


def _path_min_record(payload: int) -> dict:
    n = payload
    base = path(n)
    min_chi = None
    min_mask = 0
    max_chi = None
    max_mask = 0
    for mask in range(1 << (n - 1)):
        chi = _chi(orient(base, mask))
        if min_chi is None or chi < min_chi:
            min_chi, min_mask = chi, mask
        if max_chi is None or chi > max_chi:
            max_chi, max_mask = chi, mask
    formula = chi_path_orientation_min(n)
    return {
        "n": n,
        "orientations": 1 << (n - 1),
        "min_chi": min_chi,
        "min_mask": min_mask,
        "min_instance": encode_tree(orient(base, min_mask)),
        "max_chi": max_chi,
        "max_mask": max_mask,
        "formula": formula,
        "equal": min_chi == formula,
        "extension": n <= 3,
    }


def check_path_minimum(n_lo: int = 4, n_hi: int = 13, jobs: int = 1) -> ExperimentReport:
    """Exact minimum over all orientations of paths versus the closed form.

    Rows with n <= 3 are labeled as extensions of the formula (they come from
    the stored brute-force table rather than the piecewise expression).
    """
    if not (1 <= n_lo <= n_hi <= 13):
        raise TooLargeError("path sweep supports 1 <= n_lo <= n_hi <= 13")
    writer = ReportWriter("path_minimum", {"n_lo": n_lo, "n_hi": n_hi})
    records = _map_ordered(_path_min_record, list(range(n_lo, n_hi + 1)), jobs)
    counterexamples = []
    for rec in records:
        writer.add(rec)
        if not rec["equal"]:
            counterexamples.append(rec["min_instance"])
    return writer.finish(counterexamples)


# ---------------------------------------------------------------------------
# rooted-tree formula


def _rooted_record(payload: tuple[str, int, int, str]) -> dict:
    base_code, n, root, sense = payload
    base = _decode_base_edges(base_code, n)
    t = rooted_orientation(base, root, sense)
    chi = _chi(t)
    leaves = len(t.sinks) if sense == "out" else len(t.sources)
    formula = t.n - leaves + 1
    return {
        "n": n,
        "base": base_code,
        "root": root,
        "sense": sense,
        "instance": encode_tree(t),
        "directed_leaves": leaves,
        "formula": formula,
        "chi": chi,
        "equal": chi == formula and chi_rooted(t) == formula,
    }


def check_rooted_formula(max_n: int, jobs: int = 1) -> ExperimentReport:
    """Out- and in-orientations from every root of every free tree, solved
    exactly and compared against n - leaves + 1."""
    if not (1 <= max_n <= 10):
        raise TooLargeError("rooted sweep supports 1 <= max_n <= 10")
    payloads = []
    for n in range(1, max_n + 1):
        for base in free_trees(n):
            code = encode_base(base)
            for root in range(n):
                for sense in ("out", "in"):
                    payloads.append((code, n, root, sense))
    writer = ReportWriter("rooted_formula", {"max_n": max_n})
    records = _map_ordered(_rooted_record, payloads, jobs)
    counterexamples = [rec["instance"] for rec in records if not rec["equal"]]
    for rec in records:
        writer.add(rec)
    return writer.finish(counterexamples)


# ---------------------------------------------------------------------------
# layered generalized stars (constructive, no solving)


def check_layered_gs(n_cap: int = 17) -> ExperimentReport:
    """Verify the layered construction for every even k with mk+1 <= n_cap."""
    from .formulas import build_layered_gs

    writer = ReportWriter("layered_gs", {"n_cap": n_cap})
    counterexamples = []
    for k in range(2, n_cap):
        if k % 2:
            continue
        for m in range(1, n_cap):
            if m * k + 1 > n_cap:
                break
            result = build_layered_gs(m, k)
            bound = gs_layered_bound(m, k)
            ok = result.verifies and result.colors_used == bound
            record = {
                "m": m,
                "k": k,
                "n": m * k + 1,
                "colors_used": result.colors_used,
                "bound": bound,
                "verifies": result.verifies,
                "instance": encode_tree(result.tree),
                "certificate": certificate_to_obj(result.certificate)
                if result.certificate
                else None,
                "ok": ok,
            }
            writer.add(record)
            if not ok:
                counterexamples.append(record["instance"])
    return writer.finish(counterexamples)
