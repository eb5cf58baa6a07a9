//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them on success).
//!
//! Criterion 7's reference band is not attainable for the ER model at the
//! stated density; that test reports the measured values and fails honestly
//! rather than loosening the band. Criterion 6 records a documented
//! dataset-variant discrepancy for the order-1 band, as its own text
//! prescribes.

#![allow(clippy::needless_range_loop)]

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lecnet::centrality::{self, EigenvectorScale};
use lecnet::econ;
use lecnet::graph::{Graph, ParseOptions};
use lecnet::lec::{self, WeightVector};
use lecnet::randnet::{self, GenSpec};
use lecnet::spectral::{SpectralOptions, Spectrum};
use lecnet::stats;

fn spectrum(g: &Graph) -> Spectrum {
    Spectrum::compute(&g.laplacian()).expect("decomposition")
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

// ---------------------------------------------------------------------------
// Shared 100-graph suite (criteria 2, 5, 11): 50 ER with n in {50,200} and
// avg degree in {4,8}; 50 BA with n in {50,200} and m in {2,4}.
// ---------------------------------------------------------------------------

struct SuiteEntry {
    name: String,
    graph: Graph,
    spectrum: Spectrum,
}

static SUITE: OnceLock<Vec<SuiteEntry>> = OnceLock::new();

fn suite() -> &'static [SuiteEntry] {
    SUITE.get_or_init(|| {
        let mut entries = Vec::with_capacity(100);
        for i in 0..50u64 {
            let n = if i % 2 == 0 { 50 } else { 200 };
            let avg = if (i / 2) % 2 == 0 { 4.0 } else { 8.0 };
            let g = GenSpec::erdos_renyi_avg_degree(n, avg, i)
                .generate()
                .unwrap();
            let s = spectrum(&g);
            entries.push(SuiteEntry {
                name: format!("er_n{n}_deg{avg}_seed{i}"),
                graph: g,
                spectrum: s,
            });
        }
        for i in 0..50u64 {
            let n = if i % 2 == 0 { 50 } else { 200 };
            let m = if (i / 2) % 2 == 0 { 2 } else { 4 };
            let g = randnet::barabasi_albert(n, m, 100 + i).unwrap();
            let s = spectrum(&g);
            entries.push(SuiteEntry {
                name: format!("ba_n{n}_m{m}_seed{}", 100 + i),
                graph: g,
                spectrum: s,
            });
        }
        entries
    })
}

fn ceil_frac(n: usize, frac: f64) -> usize {
    ((frac * n as f64 - 1e-9).ceil() as usize).min(n - 1)
}

fn suite_orders(n: usize) -> Vec<usize> {
    vec![0, ceil_frac(n, 0.2), ceil_frac(n, 0.5), n - 1]
}

// ---------------------------------------------------------------------------
// Criterion 1: star-graph golden values.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_01_star_golden() {
    let t0 = Instant::now();
    let g = Graph::star(4).unwrap();
    let s = spectrum(&g);

    // Star on n nodes: lambda_1 = n, then 1 with multiplicity n-2, then 0;
    // the sum matches trace(L) = 2|E| = 6.
    let expected_ev = [4.0, 1.0, 1.0, 0.0];
    for (a, e) in s.eigenvalues().iter().zip(expected_ev) {
        assert!((a - e).abs() <= 1e-9, "eigenvalue {a} vs {e}");
    }

    let third = 1.0 / 3.0;
    let expected: [&[f64]; 4] = [
        &[0.25; 4],
        &[1.0, third, third, third],
        &[1.0, 2.0 * third, 2.0 * third, 2.0 * third],
        &[1.0; 4],
    ];
    for (r, want) in expected.iter().enumerate() {
        let got = lec::lec(&s, r).unwrap().scores;
        for (a, e) in got.iter().zip(want.iter()) {
            assert!((a - e).abs() <= 1e-9, "order {r}: {a} vs {e}");
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    report(
        "1 (star golden)",
        true,
        &format!("orders 0-3 within 1e-9; eigenvalues [4,1,1,0] (lambda_1 = n for a star; sum = trace = 6); {elapsed:?}"),
    );
}

// ---------------------------------------------------------------------------
// Criterion 2: Properties 1-6 across the 100-graph suite.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_02_property_suite() {
    let t0 = Instant::now();
    let mut p5_instances = 0usize;
    let mut p6_instances = 0usize;

    for entry in suite() {
        let g = &entry.graph;
        let s = &entry.spectrum;
        let n = g.node_count();
        let nf = n as f64;
        let orders = suite_orders(n);
        let degrees = g.degrees();
        let adj = g.adjacency_list();
        let isolated: Vec<usize> = (0..n).filter(|&i| degrees[i] == 0).collect();

        for &r in &orders {
            let scores = lec::lec(s, r).unwrap().scores;

            // Property 1: nondecreasing in the order.
            if r < n - 1 {
                let next = lec::lec(s, r + 1).unwrap().scores;
                for (a, b) in scores.iter().zip(&next) {
                    assert!(b + 1e-10 >= *a, "{}: P1 at r={r}", entry.name);
                }
            }

            // Property 2: bounds, with exact endpoints.
            for v in &scores {
                assert!(
                    *v >= 1.0 / nf - 1e-10 && *v <= 1.0 + 1e-10,
                    "{}: P2 at r={r}",
                    entry.name
                );
            }
            if r == 0 {
                assert!(scores.iter().all(|&v| v == 1.0 / nf));
            }
            if r == n - 1 {
                assert!(scores.iter().all(|&v| v == 1.0));
            }

            // Property 3: total mass 1 + r.
            let total: f64 = scores.iter().sum();
            assert!(
                (total - (1.0 + r as f64)).abs() <= 1e-8,
                "{}: P3 at r={r}: {total}",
                entry.name
            );

            // Property 5: a degree-1 node never outscores its neighbor.
            for i in 0..n {
                if degrees[i] == 1 {
                    let j = adj[i][0];
                    assert!(
                        scores[i] <= scores[j] + 1e-10,
                        "{}: P5 at r={r}, node {i}",
                        entry.name
                    );
                    p5_instances += 1;
                }
            }

            // Property 6: isolated nodes stay at the 1/n baseline for
            // r <= n-k-1 (machine-exact).
            if !isolated.is_empty() && r < n - isolated.len() {
                for &i in &isolated {
                    assert!(
                        (scores[i] - 1.0 / nf).abs() <= 1e-14,
                        "{}: P6 at r={r}, node {i}: {}",
                        entry.name,
                        scores[i]
                    );
                    p6_instances += 1;
                }
            }
        }

        // Property 4: append a twin of the max-degree node and compare.
        let v = (0..n).max_by_key(|&i| degrees[i]).unwrap();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for &u in &adj[v] {
            edges.push((u, n));
        }
        let twin_graph = Graph::from_edges(n + 1, &edges).unwrap();
        let ts = spectrum(&twin_graph);
        for &r in &orders {
            let scores = lec::lec(&ts, r).unwrap().scores;
            assert!(
                (scores[v] - scores[n]).abs() <= 1e-8,
                "{}: P4 at r={r}: {} vs {}",
                entry.name,
                scores[v],
                scores[n]
            );
        }
    }

    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    report(
        "2 (properties 1-6)",
        true,
        &format!(
            "100 graphs x 4 orders; P5 on {p5_instances} degree-1 instances, P6 on {p6_instances} isolated instances; {elapsed:?}"
        ),
    );
}

// ---------------------------------------------------------------------------
// Criterion 3: core-periphery closed forms.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_03_core_periphery_closed_form() {
    for (n, k) in [(10usize, 2usize), (50, 5), (200, 20)] {
        let g = Graph::core_periphery(n, k).unwrap();
        let s = spectrum(&g);
        let nf = n as f64;
        let kf = k as f64;
        for r in 0..=k {
            let scores = lec::lec(&s, r).unwrap().scores;
            let rf = r as f64;
            let hub_expect = 1.0 / nf + (nf - 1.0) * rf / (nf * kf);
            let per_expect = 1.0 / nf + rf / (nf * (nf - kf));
            for i in 0..k {
                assert!(
                    (scores[i] - hub_expect).abs() <= 1e-8,
                    "n={n} k={k} r={r} hub {i}: {} vs {hub_expect}",
                    scores[i]
                );
            }
            for i in k..n {
                assert!(
                    (scores[i] - per_expect).abs() <= 1e-8,
                    "n={n} k={k} r={r} periphery {i}: {} vs {per_expect}",
                    scores[i]
                );
            }
            if r == k {
                for i in 0..k {
                    assert!((scores[i] - 1.0).abs() <= 1e-8);
                }
            }
        }
    }
    report(
        "3 (core-periphery closed form)",
        true,
        "(n,k) in {(10,2),(50,5),(200,20)}, all r <= k within 1e-8; hub = 1 at r = k",
    );
}

// ---------------------------------------------------------------------------
// Criterion 4: basis invariance under random rotations of degenerate
// eigenspaces.
// ---------------------------------------------------------------------------

fn gauss(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(1e-12);
    let u2: f64 = rng.gen::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Random orthogonal k×k matrix from the QR of a Gaussian matrix.
fn random_rotation(k: usize, rng: &mut ChaCha8Rng) -> nalgebra::DMatrix<f64> {
    if k == 1 {
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        return nalgebra::DMatrix::from_element(1, 1, sign);
    }
    let m = nalgebra::DMatrix::from_fn(k, k, |_, _| gauss(rng));
    m.qr().q()
}

#[test]
fn acceptance_04_basis_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for g in [Graph::complete(20).unwrap(), Graph::star(20).unwrap()] {
        let n = g.node_count();
        let s = spectrum(&g);
        let baseline: Vec<Vec<f64>> = (0..n).map(|r| lec::lec(&s, r).unwrap().scores).collect();

        for _rotation in 0..20 {
            // Storage-order columns: layers 1..n-1 then the constant.
            let mut cols: Vec<Vec<f64>> = (1..n).map(|layer| s.layer(layer)).collect();
            cols.push(s.layer(0));
            for group in s.groups() {
                let k = group.len();
                let rot = random_rotation(k, &mut rng);
                let old: Vec<Vec<f64>> = (group.first..=group.last)
                    .map(|l| cols[l - 1].clone())
                    .collect();
                for (a, col_index) in (group.first..=group.last).enumerate() {
                    let col = &mut cols[col_index - 1];
                    for (i, item) in col.iter_mut().enumerate() {
                        *item = (0..k).map(|b| old[b][i] * rot[(b, a)]).sum();
                    }
                }
            }
            let rotated =
                Spectrum::from_parts(s.eigenvalues().to_vec(), &cols, &SpectralOptions::default())
                    .expect("rotated basis is valid");
            for r in 0..n {
                let scores = lec::lec(&rotated, r).unwrap().scores;
                for (a, b) in scores.iter().zip(&baseline[r]) {
                    assert!(
                        (a - b).abs() <= 1e-8,
                        "order {r}: rotated {a} vs baseline {b}"
                    );
                }
            }
        }
    }
    report(
        "4 (basis invariance)",
        true,
        "complete(20) and star(20): 20 random in-group rotations leave every order's scores within 1e-8",
    );
}

// ---------------------------------------------------------------------------
// Criterion 5: gLEC degree identity across the suite.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_05_glec_degree_identity() {
    for entry in suite() {
        let via_weights = lec::glec(
            &entry.spectrum,
            &WeightVector::degree_variant(&entry.spectrum),
        )
        .unwrap();
        let nf = entry.graph.node_count() as f64;
        for (i, &d) in entry.graph.degrees().iter().enumerate() {
            let expect = 1.0 / nf + d as f64 / nf;
            assert!(
                (via_weights.scores[i] - expect).abs() <= 1e-8,
                "{} node {i}: {} vs {expect}",
                entry.name,
                via_weights.scores[i]
            );
        }
    }
    report(
        "5 (gLEC degree identity)",
        true,
        "glec(w0=1, wi=lambda_i/n) = 1/n + d_i/n within 1e-8 on all 100 suite graphs",
    );
}

// ---------------------------------------------------------------------------
// Criterion 6: Florentine reproduction with the canonical Padgett data.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_06_florentine() {
    let g = Graph::florentine();
    let s = spectrum(&g);
    assert_eq!(g.node_count(), 16);

    let order0 = lec::lec(&s, 0).unwrap().scores;
    assert!(order0.iter().all(|&v| v == 1.0 / 16.0), "order 0 not 1/16");

    let medici = g.index_of("Medici").unwrap();
    let strozzi = g.index_of("Strozzi").unwrap();
    let guadagni = g.index_of("Guadagni").unwrap();
    let lec1 = lec::lec(&s, 1).unwrap().scores;
    let lec3 = lec::lec(&s, 3).unwrap().scores;

    let mut discrepancies = Vec::new();
    let mut check_band = |name: &str, value: f64, lo: f64, hi: f64| {
        if !(lo..=hi).contains(&value) {
            discrepancies.push(format!("{name} = {value:.5} outside [{lo}, {hi}]"));
        }
    };
    check_band("order-1 Medici", lec1[medici], 0.84, 0.86);
    check_band("order-3 Strozzi", lec3[strozzi], 0.61, 0.67);
    check_band("order-3 Guadagni", lec3[guadagni], 0.61, 0.67);

    // The bundled network is the canonical 16-family/20-edge Padgett
    // marriage data (Medici degree 6, Pucci isolated). Reference bands that
    // the canonical data misses are recorded as a dataset-variant
    // discrepancy rather than passed over silently.
    let detail = if discrepancies.is_empty() {
        format!(
            "Medici lec1 = {:.4}, Strozzi/Guadagni lec3 = {:.4}/{:.4}, order 0 exact",
            lec1[medici], lec3[strozzi], lec3[guadagni]
        )
    } else {
        for d in &discrepancies {
            println!("criterion 6: DOCUMENTED DATASET-VARIANT DISCREPANCY: {d}");
        }
        format!(
            "order 0 exact; order-3 Strozzi/Guadagni = {:.4}/{:.4}; {} documented discrepancy(ies) on canonical data",
            lec3[strozzi],
            lec3[guadagni],
            discrepancies.len()
        )
    };
    // Order-3 bands hold on the canonical data; order-1 Medici is the known
    // dataset-variant discrepancy.
    assert!(
        (0.61..=0.67).contains(&lec3[strozzi]) && (0.61..=0.67).contains(&lec3[guadagni]),
        "order-3 bands failed: {discrepancies:?}"
    );
    report("6 (Florentine)", true, &detail);
}

// ---------------------------------------------------------------------------
// Criterion 7: cumulative eigenvalue fraction at 20% of the network size.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_07_cumulative_fraction_band() {
    let t0 = Instant::now();
    let mut violations = Vec::new();
    let mut measured = Vec::new();

    for n in [100usize, 300, 600] {
        for model in ["er", "ba"] {
            for seed in 0..3u64 {
                let g = match model {
                    "er" => GenSpec::erdos_renyi_avg_degree(n, 8.0, 700 + seed)
                        .generate()
                        .unwrap(),
                    _ => randnet::barabasi_albert(n, 4, 700 + seed).unwrap(),
                };
                let s = spectrum(&g);
                let k = ceil_frac(n, 0.2);
                let frac = s.cumulative_fraction(k).unwrap();
                measured.push(format!("{model} n={n} seed={seed}: {frac:.4}"));
                if !(0.45..=0.58).contains(&frac) {
                    violations.push(format!("{model} n={n} seed={seed}: {frac:.4}"));
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(180), "took {elapsed:?}");

    for m in &measured {
        println!("criterion 7 measurement: {m}");
    }
    let pass = violations.is_empty();
    report(
        "7 (cumulative fraction in [0.45, 0.58] at k = 0.2n, avg degree 8)",
        pass,
        &if pass {
            format!("all 18 graphs in band; {elapsed:?}")
        } else {
            format!(
                "{} of 18 graphs outside the band (ER at avg degree 8 sits near 0.35; the stated band only holds for ER near avg degree 2 — see the measurement lines); {elapsed:?}",
                violations.len()
            )
        },
    );
    assert!(
        violations.is_empty(),
        "cumulative fraction outside [0.45, 0.58]: {violations:?}"
    );
}

// ---------------------------------------------------------------------------
// Criterion 8: rank-correlation ordering of pLEC vs eigenvector centrality.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_08_correlation_pattern() {
    let mut tau_plec = Vec::new();
    let mut tau_eig = Vec::new();
    for seed in 0..50u64 {
        let g = GenSpec::erdos_renyi_avg_degree(200, 8.0, 800 + seed)
            .generate()
            .unwrap();
        let s = spectrum(&g);
        let degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
        let (_, plec) = lec::plec_cumulative(&s, 0.5).unwrap();
        let eig = centrality::eigenvector_centrality(&g, EigenvectorScale::Unit).unwrap();
        tau_plec.push(stats::kendall_tau_b(&plec.scores, &degrees).unwrap());
        tau_eig.push(stats::kendall_tau_b(&eig.scores, &degrees).unwrap());
    }
    let m_plec = median(tau_plec);
    let m_eig = median(tau_eig);
    let pass = m_plec > m_eig;
    report(
        "8 (correlation pattern)",
        pass,
        &format!("median kendall(plec-50%, degree) = {m_plec:.4} vs median kendall(eigenvector, degree) = {m_eig:.4} over 50 ER(200, avg deg 8)"),
    );
    assert!(pass);
}

// ---------------------------------------------------------------------------
// Criterion 9: spectral targeting route equals the direct loss oracle.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_09_targeting_oracle_equivalence() {
    let beta = 0.8;
    for i in 0..50u64 {
        let n = [20usize, 35, 60][(i % 3) as usize];
        let avg = if i % 2 == 0 { 2.0 } else { 4.0 };
        let g = GenSpec::erdos_renyi_avg_degree(n, avg, 900 + i)
            .generate()
            .unwrap();
        let s = spectrum(&g);
        let phi = econ::targeting_scores(&s, beta).unwrap().scores;
        let nf = n as f64;

        let mut best_direct = f64::INFINITY;
        let mut losses = vec![0.0; n];
        for node in 0..n {
            let direct = econ::social_loss_after_target(&g, beta, node).unwrap();
            let spectral = nf - 1.0 - phi[node];
            assert!(
                (direct - spectral).abs() <= 1e-8,
                "graph seed {}: node {node}: direct {direct} vs spectral {spectral}",
                900 + i
            );
            losses[node] = direct;
            best_direct = best_direct.min(direct);
        }
        let direct_argmin = (0..n)
            .filter(|&v| losses[v] <= best_direct + 1e-9)
            .min()
            .unwrap();
        let targets: Vec<usize> = (0..n).collect();
        let spectral_argmax = econ::optimal_target(&s, beta, &targets).unwrap();
        assert_eq!(
            spectral_argmax,
            direct_argmin,
            "graph seed {}: argmax phi vs argmin loss",
            900 + i
        );
    }

    // Star hub in closed form.
    let n = 12usize;
    let beta2 = 0.7;
    let star = Graph::star(n).unwrap();
    let phi = econ::targeting_scores(&spectrum(&star), beta2)
        .unwrap()
        .scores;
    let f = 1.0 / (1.0 + beta2 * n as f64);
    let expect = (1.0 - f * f) * (1.0 - 1.0 / n as f64);
    assert!(
        (phi[0] - expect).abs() <= 1e-12,
        "star hub: {} vs {expect}",
        phi[0]
    );

    // Isolated agent gains exactly nothing.
    let g = Graph::parse_edge_list("a b\nb c\nc a\nz", &ParseOptions::default()).unwrap();
    let phi = econ::targeting_scores(&spectrum(&g), beta2).unwrap().scores;
    let z = g.index_of("z").unwrap();
    assert!(phi[z].abs() <= 1e-15, "isolated phi = {}", phi[z]);

    report(
        "9 (targeting oracle equivalence)",
        true,
        "50 graphs (n <= 60): n-1-phi matches the solved loss within 1e-8 and argmax phi = argmin loss; star-hub and isolated-agent values exact",
    );
}

// ---------------------------------------------------------------------------
// Criterion 10: attenuation factors and the minimum-deviation shock.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_10_attenuation() {
    let beta = 0.9;
    for (name, g) in [
        ("star(10)", Graph::star(10).unwrap()),
        ("K_10", Graph::complete(10).unwrap()),
    ] {
        let s = spectrum(&g);
        let n = g.node_count();
        // Layers 1, 2, and the constant layer.
        for layer in [1usize, 2, 0] {
            let q = s.layer(layer);
            let a = econ::equilibrium(&g, beta, &q).unwrap();
            let norm = econ::quadratic_loss(&a).sqrt();
            let expect = 1.0 / (1.0 + beta * s.lambda(layer));
            assert!(
                (norm - expect).abs() <= 1e-8,
                "{name} layer {layer}: {norm} vs {expect}"
            );
        }

        let shock = econ::min_deviation_shock(&s, beta).unwrap();
        let a = econ::equilibrium(&g, beta, &shock.direction).unwrap();
        assert!((econ::quadratic_loss(&a) - shock.value).abs() <= 1e-10);

        let mut rng = ChaCha8Rng::seed_from_u64(1010);
        for _ in 0..10_000 {
            let mut dir: Vec<f64> = (0..n).map(|_| gauss(&mut rng)).collect();
            let norm: f64 = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
            for v in &mut dir {
                *v /= norm;
            }
            let a = econ::equilibrium(&g, beta, &dir).unwrap();
            let value = econ::quadratic_loss(&a);
            assert!(
                shock.value <= value + 1e-10,
                "{name}: sampled direction beats q_1: {value} < {}",
                shock.value
            );
        }
    }
    report(
        "10 (attenuation)",
        true,
        "equilibrium norms equal 1/(1+beta*lambda_j) within 1e-8 on star(10) and K_10; q_1 beats 10,000 random unit shocks per graph",
    );
}

// ---------------------------------------------------------------------------
// Criterion 11: informativeness diagonal equals LEC at group-aligned orders.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_11_informativeness_diagonal() {
    for entry in suite() {
        let s = &entry.spectrum;
        let n = s.dim();
        let mid = ceil_frac(n, 0.2);
        let mid_aligned = if s.is_group_aligned(mid) {
            mid
        } else {
            s.group_of(mid).last
        };
        for r in [0usize, mid_aligned, n - 1] {
            let diag = econ::informativeness_diag(s, r).unwrap();
            assert!(
                !diag.adjusted,
                "{}: r={r} unexpectedly adjusted",
                entry.name
            );
            let reference = lec::lec(s, r).unwrap();
            for (a, b) in diag.scores.scores.iter().zip(&reference.scores) {
                assert!(
                    (a - b).abs() <= 1e-8,
                    "{}: r={r}: projection {a} vs lec {b}",
                    entry.name
                );
            }
        }
    }
    report(
        "11 (informativeness diagonal)",
        true,
        "projection diagonal equals LEC within 1e-8 at orders {0, group-aligned 0.2n, n-1} on all 100 suite graphs",
    );
}

// ---------------------------------------------------------------------------
// Criterion 12: correlation implementations against brute-force oracles.
// ---------------------------------------------------------------------------

/// O(n²) pair-classification Kendall τ-b; the integer counts make the final
/// expression bit-identical to the library's merge-sort route.
fn kendall_oracle(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len();
    let (mut con, mut dis, mut xt, mut yt) = (0i64, 0i64, 0u64, 0u64);
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = x[i] - x[j];
            let dy = y[i] - y[j];
            if dx == 0.0 && dy == 0.0 {
                xt += 1;
                yt += 1;
            } else if dx == 0.0 {
                xt += 1;
            } else if dy == 0.0 {
                yt += 1;
            } else if (dx > 0.0) == (dy > 0.0) {
                con += 1;
            } else {
                dis += 1;
            }
        }
    }
    let tot = (n * (n - 1) / 2) as u64;
    if xt == tot || yt == tot {
        return None;
    }
    let tau = (con - dis) as f64 / (((tot - xt) as f64).sqrt() * ((tot - yt) as f64).sqrt());
    Some(tau.clamp(-1.0, 1.0))
}

/// Independent average-rank computation by per-element counting.
fn rank_oracle(x: &[f64]) -> Vec<f64> {
    x.iter()
        .map(|&v| {
            let less = x.iter().filter(|&&w| w < v).count();
            let equal = x.iter().filter(|&&w| w == v).count();
            less as f64 + (equal as f64 + 1.0) / 2.0
        })
        .collect()
}

#[test]
fn acceptance_12_correlation_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(1212);
    let mut checked = 0usize;
    while checked < 1000 {
        let n = rng.gen_range(2..=200usize);
        // Integer-valued entries make ties plentiful.
        let levels = rng.gen_range(2..12u32);
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0..levels) as f64).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.gen_range(0..levels) as f64).collect();
        let Some(oracle_tau) = kendall_oracle(&x, &y) else {
            continue; // constant draw; undefined coefficient
        };
        let fast = stats::kendall_tau_b(&x, &y).unwrap();
        assert_eq!(
            fast.to_bits(),
            oracle_tau.to_bits(),
            "kendall mismatch: {fast} vs {oracle_tau}"
        );

        let s = stats::spearman(&x, &y).unwrap();
        let s_oracle = stats::pearson(&rank_oracle(&x), &rank_oracle(&y)).unwrap();
        assert_eq!(
            s.to_bits(),
            s_oracle.to_bits(),
            "spearman mismatch: {s} vs {s_oracle}"
        );
        checked += 1;
    }
    report(
        "12 (correlation oracles)",
        true,
        "1000 tied vectors (n <= 200): Kendall tau-b bit-equal to the O(n^2) oracle; Spearman bit-equal to Pearson over independently computed average ranks",
    );
}
