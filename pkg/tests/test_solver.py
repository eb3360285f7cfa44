import numpy as np
import pytest

from imvc import (
    SolverConfig,
    SolverState,
    fit,
    initialize,
    load_state,
    objective,
    save_state,
    update_basis,
    update_codes,
    update_consensus,
    update_weights,
    view_costs,
    write_trace,
)
from imvc.graph import identity_fused_graph

from synthetic import masked_problem, multiview_blobs, random_problem, random_state


def naive_objective(ds, graphs, inds, state, lam, beta, r):
    """Triple-loop evaluation of the weighted cost, straight from the formula."""
    total = 0.0
    for view, graph, ind, u, p, a in zip(
        ds.views, graphs, inds, state.bases, state.codes, state.weights
    ):
        x = view.data
        recon = x - u @ p
        rec = 0.0
        for i in range(recon.shape[0]):
            for j in range(recon.shape[1]):
                rec += recon[i, j] ** 2
        l1 = 0.0
        for i in range(p.shape[0]):
            for j in range(p.shape[1]):
                l1 += abs(p[i, j])
        ids = ind.sample_ids
        gr = 0.0
        for i in range(p.shape[1]):
            for j in range(p.shape[1]):
                w = graph.w[i, j]
                if w != 0.0:
                    d = 0.0
                    for kk in range(p.shape[0]):
                        d += (p[kk, i] - state.consensus[kk, ids[j]]) ** 2
                    gr += w * d
        total += a**r * (rec + beta * l1 + lam * gr)
    return total


def consensus_term(qmat, codes, graphs, inds, weights, r):
    """The part of the cost that depends on the consensus matrix."""
    total = 0.0
    for p, graph, ind, a in zip(codes, graphs, inds, weights):
        gathered = qmat[:, ind.sample_ids]
        sq = ((p[:, :, None] - gathered[:, None, :]) ** 2).sum(axis=0)
        total += a**r * float((graph.w * sq).sum())
    return total


def grid_prox(target, threshold, step=1e-4):
    span = abs(target) + 1.0
    grid = np.arange(-span, span + step, step)
    vals = threshold * np.abs(grid) + 0.5 * (grid - target) ** 2
    return grid[np.argmin(vals)]


# ----------------------------------------------------------------- objective


def test_objective_zero_state_is_zero():
    ds, graphs, inds = random_problem(0, l=2, n=6, c=2)
    state = random_state(ds, 2, seed=1, zero=True)
    cfg = SolverConfig(lam=2.0, beta=0.5, r=3.0, n_components=2)
    # bases are arbitrary orthonormal; codes, consensus, data terms all vanish
    zero_views = ds.views
    zero_ds = type(ds)(
        views=tuple(
            type(v)(view_id=v.view_id, data=np.zeros_like(v.data)) for v in zero_views
        ),
        n=ds.n,
        availability=ds.availability,
    )
    assert objective(zero_ds, graphs, inds, state, cfg) == 0.0


def test_objective_single_view_reduces_to_two_terms():
    ds, _, inds = random_problem(2, l=1, n=7, c=2, rate=0.0, k=3)
    graphs = (identity_fused_graph(ds.views[0].n_available),)
    state = random_state(ds, 2, seed=3)
    state = SolverState(
        bases=state.bases,
        codes=state.codes,
        consensus=state.consensus,
        weights=np.array([1.0]),
    )
    cfg = SolverConfig(lam=1.7, beta=0.0, r=2.0, n_components=2)
    x, u, p = ds.views[0].data, state.bases[0], state.codes[0]
    gathered = state.consensus[:, inds[0].sample_ids]
    expect = np.sum((x - u @ p) ** 2) + 1.7 * np.sum((p - gathered) ** 2)
    assert objective(ds, graphs, inds, state, cfg) == pytest.approx(expect, rel=1e-14)
    # with a single view and unit weight the objective is the view cost itself
    assert view_costs(ds, graphs, inds, state, cfg)[0] == objective(
        ds, graphs, inds, state, cfg
    )


def test_objective_matches_triple_loop_oracle():
    for seed in range(5):
        ds, graphs, inds = random_problem(seed, l=2, n=6, c=2, k=2)
        state = random_state(ds, 2, seed=seed + 10)
        cfg = SolverConfig(lam=0.9, beta=0.3, r=2.5, n_components=2)
        got = objective(ds, graphs, inds, state, cfg)
        want = naive_objective(ds, graphs, inds, state, lam=0.9, beta=0.3, r=2.5)
        assert got == pytest.approx(want, rel=1e-12)


def test_view_costs_zero_state():
    ds, graphs, inds = random_problem(4, l=3, n=8, c=2, k=2)
    zero_ds = type(ds)(
        views=tuple(
            type(v)(view_id=v.view_id, data=np.zeros_like(v.data)) for v in ds.views
        ),
        n=ds.n,
        availability=ds.availability,
    )
    state = random_state(zero_ds, 2, seed=0, zero=True)
    cfg = SolverConfig(lam=1.0, beta=1.0, r=2.0, n_components=2)
    assert np.array_equal(view_costs(zero_ds, graphs, inds, state, cfg), np.zeros(3))


def test_objective_is_weighted_sum_of_view_costs():
    for seed in range(5):
        ds, graphs, inds = random_problem(seed + 20, l=3, n=7, c=2, k=2)
        state = random_state(ds, 2, seed=seed)
        cfg = SolverConfig(lam=1.3, beta=0.2, r=4.0, n_components=2)
        costs = view_costs(ds, graphs, inds, state, cfg)
        expect = sum(a**4.0 * e for a, e in zip(state.weights, costs))
        assert objective(ds, graphs, inds, state, cfg) == pytest.approx(expect, rel=1e-10)


# -------------------------------------------------------------- basis update


def test_basis_fixed_point_when_target_orthonormal():
    rng = np.random.default_rng(0)
    q, _ = np.linalg.qr(rng.normal(size=(5, 3)))
    x = q  # codes = identity makes the SVD target equal q itself
    codes = np.eye(3)
    u = update_basis(x, codes)
    assert np.allclose(u, q, atol=1e-12)


def test_basis_2x2_case_against_rotation_grid():
    target = np.array([[0.0, 2.0], [1.0, 0.0]])
    u = update_basis(target, np.eye(2))
    assert np.allclose(u, np.array([[0.0, 1.0], [1.0, 0.0]]), atol=1e-12)
    got = np.trace(u.T @ target)
    best = -np.inf
    for theta in np.arange(0.0, 2 * np.pi, 1e-4):
        c, s = np.cos(theta), np.sin(theta)
        rot = np.array([[c, -s], [s, c]])
        ref = np.array([[c, s], [s, -c]])
        best = max(best, np.trace(rot.T @ target), np.trace(ref.T @ target))
    assert got >= best - 1e-6
    assert got == pytest.approx(3.0, abs=1e-10)  # singular values 2 and 1


def test_basis_trace_equals_singular_value_sum():
    rng = np.random.default_rng(1)
    for _ in range(10):
        x = rng.normal(size=(6, 9))
        codes = rng.normal(size=(3, 9))
        target = x @ codes.T
        u = update_basis(x, codes)
        sigma_sum = np.linalg.svd(target, compute_uv=False).sum()
        assert np.trace(u.T @ target) == pytest.approx(sigma_sum, abs=1e-8)
        assert np.max(np.abs(u.T @ u - np.eye(3))) < 1e-10


def test_basis_rejects_non_finite():
    with pytest.raises(ValueError, match="non-finite"):
        update_basis(np.array([[np.nan]]), np.array([[1.0]]))


# -------------------------------------------------------------- codes update


def build_hb(x, u, q, ind, graph, lam):
    gathered = q[:, ind.sample_ids]
    h = 1.0 + lam * graph.degree
    b_rows = []
    for i in range(x.shape[1]):
        b_rows.append(x[:, i] @ u + lam * (graph.w[i] @ gathered.T))
    return h, np.array(b_rows)


def test_codes_beta_zero_is_plain_ridge():
    ds, graphs, inds = random_problem(6, l=1, n=8, c=3, dims=(5,), rate=0.0, k=3)
    rng = np.random.default_rng(2)
    u, _ = np.linalg.qr(rng.normal(size=(5, 3)))
    q = rng.normal(size=(3, ds.n))
    p = update_codes(ds.views[0].data, u, q, inds[0], graphs[0], lam=1.4, beta=0.0)
    h, b = build_hb(ds.views[0].data, u, q, inds[0], graphs[0], lam=1.4)
    assert np.allclose(p, b.T / h, rtol=1e-12, atol=1e-14)


def test_codes_scalar_cases_match_grid_prox():
    rng = np.random.default_rng(3)
    for _ in range(25):
        h = float(rng.uniform(1.1, 3.0))
        b = float(rng.uniform(-4.0, 4.0))
        beta = float(rng.uniform(0.0, 3.0))
        lam = h - 1.0
        graph = identity_fused_graph(1)
        from imvc import build_indicator

        ind = build_indicator([0], n=1)
        p = update_codes(
            np.array([[b]]), np.array([[1.0]]), np.array([[0.0]]), ind, graph, lam, beta
        )
        want = grid_prox(b / h, beta / (2 * h))
        assert abs(float(p[0, 0]) - want) <= 1e-4


def test_codes_threshold_dead_zone_outputs_zero():
    # |b/h| below beta/(2h) lands at exactly zero
    graph = identity_fused_graph(1)
    from imvc import build_indicator

    ind = build_indicator([0], n=1)
    p = update_codes(
        np.array([[0.3]]), np.array([[1.0]]), np.array([[0.0]]), ind, graph,
        lam=0.0001, beta=1.0,
    )
    assert p[0, 0] == 0.0


def test_codes_local_optimality_probe():
    ds, graphs, inds = random_problem(7, l=1, n=4, c=3, dims=(6,), rate=0.0, k=2)
    rng = np.random.default_rng(4)
    u, _ = np.linalg.qr(rng.normal(size=(6, 3)))
    q = rng.normal(size=(3, ds.n))
    lam, beta = 0.8, 0.6
    x = ds.views[0].data
    p_star = update_codes(x, u, q, inds[0], graphs[0], lam, beta)
    h, b = build_hb(x, u, q, inds[0], graphs[0], lam)

    def cost(p):
        return float(np.trace(p @ np.diag(h) @ p.T) + beta * np.abs(p).sum() - 2 * np.trace(p @ b))

    base = cost(p_star)
    for _ in range(10_000):
        delta = rng.normal(size=p_star.shape)
        delta *= 1e-3 / np.linalg.norm(delta)
        assert base <= cost(p_star + delta) + 1e-12


# ---------------------------------------------------------- consensus update


def test_consensus_single_complete_view_returns_codes():
    ds, _, inds = random_problem(8, l=1, n=6, c=2, rate=0.0, k=2)
    graphs = (identity_fused_graph(6),)
    p = np.random.default_rng(5).normal(size=(2, 6))
    q = update_consensus([p], graphs, inds, np.array([1.0]), r=2.0)
    assert np.array_equal(q, p)


def test_consensus_two_views_equal_weights_average():
    ds, _, inds = random_problem(9, l=2, n=5, c=2, rate=0.0, k=2)
    graphs = (identity_fused_graph(5), identity_fused_graph(5))
    rng = np.random.default_rng(6)
    p1, p2 = rng.normal(size=(2, 5)), rng.normal(size=(2, 5))
    q = update_consensus([p1, p2], graphs, inds, np.array([0.5, 0.5]), r=1.0)
    assert np.allclose(q, (p1 + p2) / 2, rtol=1e-15, atol=0)


def test_consensus_zeroes_gradient():
    for seed in range(5):
        ds, graphs, inds = random_problem(seed + 30, l=2, n=5, c=2, k=2)
        rng = np.random.default_rng(seed)
        codes = [rng.normal(size=(2, v.n_available)) for v in ds.views]
        weights = np.array([0.3, 0.7])
        q = update_consensus(codes, graphs, inds, weights, r=2.0)
        h = 1e-5
        grad = np.zeros_like(q)
        for i in range(q.shape[0]):
            for j in range(q.shape[1]):
                q_plus, q_minus = q.copy(), q.copy()
                q_plus[i, j] += h
                q_minus[i, j] -= h
                grad[i, j] = (
                    consensus_term(q_plus, codes, graphs, inds, weights, 2.0)
                    - consensus_term(q_minus, codes, graphs, inds, weights, 2.0)
                ) / (2 * h)
        assert np.max(np.abs(grad)) <= 1e-6


def test_consensus_rejects_uncovered_sample():
    ds, graphs, inds = random_problem(10, l=2, n=6, c=2, k=2)
    codes = [np.zeros((2, v.n_available)) for v in ds.views]
    # zero weight on one view starves the samples that live only there
    only_in_second = set(ds.availability[1]) - set(ds.availability[0])
    assert only_in_second  # the mask left at least one such sample
    with pytest.raises(ValueError, match="no positive weight"):
        update_consensus(codes, graphs, inds, np.array([1.0, 0.0]), r=2.0)


# ------------------------------------------------------------- weight update


def test_weights_uniform_for_equal_costs():
    for l in (2, 3, 5):
        w = update_weights(np.ones(l), r=3.0)
        assert np.allclose(w, np.full(l, 1.0 / l), rtol=1e-15, atol=0)


def test_weights_closed_form_example():
    w = update_weights(np.array([1.0, 4.0]), r=2.0)
    assert np.allclose(w, [0.8, 0.2], rtol=0, atol=1e-15)


def test_weights_flatten_as_r_grows():
    w = update_weights(np.array([1.0, 4.0]), r=11.0)
    assert np.max(np.abs(w - 0.5)) <= 0.04


def test_weights_match_simplex_grid_search():
    rng = np.random.default_rng(7)
    grid = np.linspace(0.0, 1.0, 5001)
    for _ in range(10):
        e = rng.uniform(0.1, 5.0, size=2)
        r = float(rng.uniform(1.5, 6.0))
        w = update_weights(e, r)
        vals = grid**r * e[0] + (1 - grid) ** r * e[1]
        best = grid[np.argmin(vals)]
        assert abs(w[0] - best) <= 1e-3


def test_weights_zero_cost_views_take_all_weight():
    assert np.array_equal(update_weights(np.array([0.0, 5.0]), 2.0), [1.0, 0.0])
    assert np.array_equal(update_weights(np.array([0.0, 0.0]), 2.0), [0.5, 0.5])


def test_weights_reject_negative_costs():
    with pytest.raises(ValueError, match="non-negative"):
        update_weights(np.array([-1.0, 2.0]), 2.0)


def test_weights_stay_on_simplex():
    rng = np.random.default_rng(8)
    for _ in range(50):
        e = rng.uniform(1e-8, 1e4, size=int(rng.integers(2, 6)))
        w = update_weights(e, float(rng.uniform(1.1, 15.0)))
        assert abs(w.sum() - 1.0) <= 1e-12
        assert w.min() >= 0.0


# ------------------------------------------------------------- initialization


def test_initialize_orthonormal_and_deterministic():
    ds, _, _ = random_problem(11, l=3, n=10, c=3, dims=(5, 6, 7), k=3)
    cfg = SolverConfig(lam=1.0, beta=0.1, r=2.0, n_components=3, seed=42)
    a = initialize(ds, cfg)
    b = initialize(ds, cfg)
    for u, p, view in zip(a.bases, a.codes, ds.views):
        assert np.max(np.abs(u.T @ u - np.eye(3))) < 1e-10
        assert p.shape == (3, view.n_available)
        assert np.allclose(p, u.T @ view.data, rtol=0, atol=0)
    for ua, ub in zip(a.bases, b.bases):
        assert np.array_equal(ua, ub)
    assert np.array_equal(a.consensus, np.zeros((3, ds.n)))
    assert np.allclose(a.weights, np.full(3, 1 / 3))


def test_initialize_rejects_c_larger_than_view_dim():
    ds, _, _ = random_problem(12, l=2, n=8, c=2, dims=(3, 4), k=2)
    cfg = SolverConfig(lam=1.0, beta=0.1, r=2.0, n_components=4)
    with pytest.raises(ValueError, match="n_components"):
        initialize(ds, cfg)


def test_initialize_ones_flag_sets_raw_weights():
    ds, _, _ = random_problem(13, l=2, n=8, c=2, k=2)
    cfg = SolverConfig(lam=1.0, beta=0.1, r=2.0, n_components=2, alpha_init="ones")
    state = initialize(ds, cfg)
    assert np.array_equal(state.weights, np.ones(2))


# ----------------------------------------------------------------------- fit


def test_fit_blobs_monotone_and_converges():
    full = multiview_blobs(n=150, n_clusters=3, dims=(6, 8, 10), noise=0.5, seed=10)
    masked, graphs, inds = masked_problem(full, rate=0.3, mask_seed=11)
    cfg = SolverConfig(lam=1.0, beta=0.001, r=3.0, n_components=3, seed=0)
    state = fit(masked, graphs, inds, cfg)
    trace = state.objective_trace
    assert state.n_iterations < 200
    assert np.all(trace[1:] <= trace[:-1] * (1 + 1e-9))
    assert trace[-1] >= 0.0


def test_fit_beats_random_states_on_plain_model():
    ds, graphs, inds = random_problem(14, l=2, n=12, c=2, k=3)
    cfg = SolverConfig(
        lam=0.5, beta=0.0, r=2.0, n_components=2, seed=1,
        weight_on=False, sparsity_on=False, graph_on=False,
    )
    state = fit(ds, graphs, inds, cfg)
    final = state.objective_trace[-1]
    for seed in range(50):
        rand = random_state(ds, 2, seed=seed)
        rand = SolverState(
            bases=rand.bases, codes=rand.codes, consensus=rand.consensus,
            weights=np.full(2, 0.5),
        )
        assert final <= objective(ds, graphs, inds, rand, cfg)


def test_fit_graph_off_equals_explicit_identity_graphs():
    ds, graphs, inds = random_problem(15, l=2, n=9, c=2, k=3)
    base = dict(lam=1.2, beta=0.05, r=2.0, n_components=2, seed=3, max_iter=40)
    off = fit(ds, graphs, inds, SolverConfig(graph_on=False, **base))
    eye = tuple(identity_fused_graph(g.n, g.view_id) for g in graphs)
    on = fit(ds, eye, inds, SolverConfig(**base))
    assert np.array_equal(off.objective_trace, on.objective_trace)
    assert np.array_equal(off.consensus, on.consensus)


def test_fit_weight_off_keeps_weights_uniform():
    ds, graphs, inds = random_problem(16, l=3, n=10, c=2, k=3)
    cfg = SolverConfig(
        lam=1.0, beta=0.01, r=2.0, n_components=2, seed=0, max_iter=20, weight_on=False
    )
    state = fit(ds, graphs, inds, cfg)
    assert np.allclose(state.weights, np.full(3, 1 / 3), rtol=0, atol=0)
    assert np.all(state.weight_trace == 1 / 3)


def test_fit_constraints_hold_every_iteration():
    ds, graphs, inds = random_problem(17, l=2, n=10, c=3, dims=(6, 7), k=3)
    cfg = SolverConfig(lam=1.0, beta=0.02, r=3.0, n_components=3, seed=5, max_iter=30)
    seen = []

    def check(it, bases, codes, consensus, weights):
        for u in bases:
            assert np.max(np.abs(u.T @ u - np.eye(3))) <= 1e-8
        assert abs(weights.sum() - 1.0) <= 1e-12
        assert weights.min() >= 0.0
        seen.append(it)

    fit(ds, graphs, inds, cfg, callback=check)
    assert seen and seen == list(range(1, len(seen) + 1))


def test_fit_alpha_ones_start_costs_sum():
    ds, graphs, inds = random_problem(18, l=2, n=8, c=2, k=2)
    cfg = SolverConfig(
        lam=1.0, beta=0.01, r=2.0, n_components=2, seed=2, max_iter=5, alpha_init="ones"
    )
    state0 = initialize(ds, cfg)
    costs0 = view_costs(ds, graphs, inds, state0, cfg)
    state = fit(ds, graphs, inds, cfg)
    assert state.objective_trace[0] == pytest.approx(costs0.sum(), rel=1e-14)


def test_fit_warm_start_continues_descending():
    ds, graphs, inds = random_problem(19, l=2, n=10, c=2, k=3)
    cfg = SolverConfig(lam=1.0, beta=0.01, r=2.0, n_components=2, seed=0, max_iter=10)
    first = fit(ds, graphs, inds, cfg)
    second = fit(ds, graphs, inds, cfg, init_state=first)
    assert second.objective_trace[0] <= first.objective_trace[-1] * (1 + 1e-12)
    assert second.objective_trace[-1] <= second.objective_trace[0] * (1 + 1e-9)


def test_doubling_lam_never_shrinks_graph_share():
    # e_v(lam) = rest_v + lam * g_v, so two evaluations isolate both parts
    for seed in range(5):
        ds, graphs, inds = random_problem(seed + 40, l=2, n=8, c=2, k=2)
        state = random_state(ds, 2, seed=seed)
        lam1, lam2 = 0.7, 1.4
        e1 = view_costs(
            ds, graphs, inds, state, SolverConfig(lam=lam1, beta=0.1, r=2.0, n_components=2)
        )
        e2 = view_costs(
            ds, graphs, inds, state, SolverConfig(lam=lam2, beta=0.1, r=2.0, n_components=2)
        )
        g = (e2 - e1) / (lam2 - lam1)
        rest = e1 - lam1 * g
        assert np.all(g > 0) and np.all(rest >= 0)
        share1 = lam1 * g / (rest + lam1 * g)
        share2 = lam2 * g / (rest + lam2 * g)
        assert np.all(share2 >= share1 - 1e-15)


# ------------------------------------------------------------- serialization


def test_state_roundtrip_bit_exact(tmp_path):
    ds, graphs, inds = random_problem(21, l=2, n=9, c=2, k=3)
    cfg = SolverConfig(lam=1.0, beta=0.02, r=2.0, n_components=2, seed=4, max_iter=15)
    state = fit(ds, graphs, inds, cfg)
    save_state(state, tmp_path / "state")
    back = load_state(tmp_path / "state")
    for a, b in zip(state.bases, back.bases):
        assert np.array_equal(a, b)
    for a, b in zip(state.codes, back.codes):
        assert np.array_equal(a, b)
    assert np.array_equal(state.consensus, back.consensus)
    assert np.array_equal(state.weights, back.weights)
    assert np.array_equal(state.objective_trace, back.objective_trace)


def test_warm_start_from_disk(tmp_path):
    ds, graphs, inds = random_problem(22, l=2, n=9, c=2, k=3)
    cfg = SolverConfig(lam=1.0, beta=0.02, r=2.0, n_components=2, seed=4, max_iter=8)
    state = fit(ds, graphs, inds, cfg)
    save_state(state, tmp_path / "warm")
    resumed = fit(ds, graphs, inds, cfg, init_state=load_state(tmp_path / "warm"))
    assert resumed.objective_trace[0] <= state.objective_trace[-1] * (1 + 1e-12)


def test_write_trace_roundtrip(tmp_path):
    ds, graphs, inds = random_problem(23, l=2, n=8, c=2, k=2)
    cfg = SolverConfig(lam=1.0, beta=0.01, r=2.0, n_components=2, seed=1, max_iter=10)
    state = fit(ds, graphs, inds, cfg)
    path = tmp_path / "trace.csv"
    write_trace(state, path)
    lines = path.read_text().strip().splitlines()
    assert lines[0].startswith("iteration,objective,e_0,e_1,alpha_0,alpha_1")
    assert len(lines) == len(state.objective_trace) + 1
    for t, line in enumerate(lines[1:]):
        cells = line.split(",")
        assert float(cells[1]) == state.objective_trace[t]
        assert float(cells[2]) == state.cost_trace[t, 0]
        assert float(cells[4]) == state.weight_trace[t, 0]


# ------------------------------------------------------------- config checks


def test_fit_rejects_mismatched_inputs():
    ds, graphs, inds = random_problem(24, l=2, n=8, c=2, k=2)
    cfg = SolverConfig(lam=1.0, beta=0.01, r=2.0, n_components=2)
    with pytest.raises(ValueError, match="one fused graph"):
        fit(ds, graphs[:1], inds, cfg)
    wrong = tuple(identity_fused_graph(3, g.view_id) for g in graphs)
    with pytest.raises(ValueError, match="does not match"):
        fit(ds, wrong, inds, cfg)


def test_config_validation():
    with pytest.raises(ValueError, match="lam"):
        SolverConfig(lam=0.0, beta=0.1, r=2.0, n_components=2)
    with pytest.raises(ValueError, match="beta"):
        SolverConfig(lam=1.0, beta=-0.1, r=2.0, n_components=2)
    with pytest.raises(ValueError, match="r must be greater"):
        SolverConfig(lam=1.0, beta=0.1, r=1.0, n_components=2)
    with pytest.raises(ValueError, match="n_components"):
        SolverConfig(lam=1.0, beta=0.1, r=2.0, n_components=0)
    with pytest.raises(ValueError, match="alpha_init"):
        SolverConfig(lam=1.0, beta=0.1, r=2.0, n_components=2, alpha_init="zeros")
