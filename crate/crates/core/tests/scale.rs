//! Spectral invariants at the largest supported experiment scale.

use std::time::Instant;

use lecnet::randnet;
use lecnet::spectral::Spectrum;

#[test]
fn invariants_at_n600() {
    for (name, g) in [
        ("er", randnet::erdos_renyi(600, 8.0 / 599.0, 42).unwrap()),
        ("ba", randnet::barabasi_albert(600, 4, 42).unwrap()),
    ] {
        let l = g.laplacian();
        let t0 = Instant::now();
        let s = Spectrum::compute(&l).unwrap();
        let elapsed = t0.elapsed();
        let n = g.node_count();

        // Orthonormality, measured independently of Spectrum::verify.
        let mut ortho = 0.0f64;
        for a in 0..n {
            for b in a..n {
                let dot: f64 = (0..n).map(|i| s.component(a, i) * s.component(b, i)).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                ortho = ortho.max((dot - target).abs());
            }
        }
        assert!(ortho <= 1e-8, "{name}: orthonormality {ortho:e}");

        // Residual L q = λ q per layer.
        let scale = s.eigenvalues()[0].max(1.0);
        let mut resid = 0.0f64;
        for layer in 0..n {
            let q = s.layer(layer);
            let lq = l.mul_vec(&q);
            for i in 0..n {
                resid = resid.max((lq[i] - s.lambda(layer) * q[i]).abs());
            }
        }
        assert!(resid <= 1e-7 * scale, "{name}: residual {resid:e}");

        // Groups partition layers 1..n-1 with controlled spreads.
        let groups = s.groups();
        let mut covered = 0usize;
        for (gi, g1) in groups.iter().enumerate() {
            covered += g1.len();
            let spread = s.lambda(g1.first) - s.lambda(g1.last);
            assert!(spread <= 1e-8 * scale);
            if gi + 1 < groups.len() {
                let next = &groups[gi + 1];
                assert_eq!(next.first, g1.last + 1);
                assert!(s.lambda(g1.last) - s.lambda(next.first) > 1e-8 * scale);
            }
        }
        assert_eq!(covered, n - 1);

        println!("{name}: n=600 decomposition in {elapsed:?}, ortho {ortho:e}, residual {resid:e}");
    }
}
