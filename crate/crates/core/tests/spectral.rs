mod common;

use egonet_core::generators::{gen_erdos_renyi, gen_holme_kim};
use egonet_core::spectral::{
    adjacency_matrix, ego_energies, eigenvalues, eigenvalues_with, energies, graph_energy, laplacian_energy,
    laplacian_matrix, randic_energy, randic_matrix, EigenMethod, SymMatrix,
};
use egonet_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn assert_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len());
    for (a, b) in got.iter().zip(want) {
        assert!((a - b).abs() < tol, "got {got:?}, want {want:?}");
    }
}

#[test]
fn char_poly_oracle_on_every_small_graph() {
    for n in 1..=4 {
        for g in nonisomorphic_graphs(n) {
            for m in [adjacency_matrix(&g), randic_matrix(&g), laplacian_matrix(&g)] {
                let want = real_roots(&char_poly(&m));
                assert_close(eigenvalues(&m).unwrap().values(), &want, 1e-8);
            }
        }
    }
}

#[test]
fn nonisomorphic_class_counts() {
    let counts: Vec<usize> = (1..=4).map(|n| nonisomorphic_graphs(n).len()).collect();
    assert_eq!(counts, [1, 2, 4, 11]);
}

#[test]
fn closed_form_spectra() {
    let r2 = 2f64.sqrt();
    assert_close(
        eigenvalues(&adjacency_matrix(&path(3))).unwrap().values(),
        &[-r2, 0.0, r2],
        1e-10,
    );
    assert_close(
        eigenvalues(&laplacian_matrix(&cycle(4))).unwrap().values(),
        &[0.0, 2.0, 2.0, 4.0],
        1e-10,
    );
    // K_n adjacency: n-1 once, -1 with multiplicity n-1
    for n in 2..=8 {
        let mut want = vec![-1.0; n - 1];
        want.push(n as f64 - 1.0);
        assert_close(
            eigenvalues(&adjacency_matrix(&complete(n))).unwrap().values(),
            &want,
            1e-10,
        );
    }
}

#[test]
fn closed_form_energies() {
    assert!((graph_energy(&path(3)).unwrap() - 2.0 * 2f64.sqrt()).abs() < 1e-9);
    assert!((graph_energy(&cycle(4)).unwrap() - 4.0).abs() < 1e-9);
    assert!((laplacian_energy(&cycle(4)).unwrap() - 4.0).abs() < 1e-9);
    for n in 2..=8 {
        assert!((randic_energy(&complete(n)).unwrap() - 2.0).abs() < 1e-9, "K{n}");
        // E_G(K_n) = 2(n - 1)
        assert!((graph_energy(&complete(n)).unwrap() - 2.0 * (n as f64 - 1.0)).abs() < 1e-9);
    }
}

#[test]
fn star_center_egonet() {
    // Egonet of the center of K_{1,3} is the star itself.
    let e = ego_energies(&star(3), 0).unwrap();
    assert!((e.graph_energy - 12f64.sqrt()).abs() < 1e-12);
    assert!((e.randic_energy - 2.0).abs() < 1e-12);
    assert!((e.laplacian_energy - 5.0).abs() < 1e-12);
    // A leaf sees a single edge.
    let leaf = ego_energies(&star(3), 2).unwrap();
    assert!((leaf.graph_energy - 2.0).abs() < 1e-12);
    assert!((leaf.laplacian_energy - 2.0).abs() < 1e-12);
}

#[test]
fn degenerate_graphs_have_zero_energy() {
    for g in [Graph::empty(0), Graph::empty(1), Graph::empty(5)] {
        let e = energies(&g).unwrap();
        assert_eq!((e.graph_energy, e.randic_energy, e.laplacian_energy), (0.0, 0.0, 0.0));
    }
    let isolated = Graph::new(3, [(0, 1)]).unwrap();
    assert_eq!(ego_energies(&isolated, 2).unwrap(), Default::default());
}

#[test]
fn regular_graphs_have_equal_graph_and_laplacian_energy() {
    let mut graphs: Vec<Graph> = (3..=12).map(cycle).collect();
    graphs.extend((2..=8).map(complete));
    graphs.push(cube());
    for g in graphs {
        assert!(g.is_regular());
        let e = energies(&g).unwrap();
        assert!((e.graph_energy - e.laplacian_energy).abs() < 1e-7, "{e:?}");
    }
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let x = rng.random_range(-(n as f64)..=n as f64);
            entries[i * n + j] = x;
            entries[j * n + i] = x;
        }
    }
    SymMatrix::from_row_major(n, entries).unwrap()
}

#[test]
fn solvers_agree_and_preserve_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [1, 2, 3, 5, 8, 16, 17, 32, 64] {
        for _ in 0..5 {
            let m = random_symmetric(&mut rng, n);
            let j = eigenvalues_with(&m, EigenMethod::Jacobi).unwrap();
            let t = eigenvalues_with(&m, EigenMethod::Tridiagonal).unwrap();
            assert_close(j.values(), t.values(), 1e-8);
            assert!((j.sum() - m.trace()).abs() < 1e-8 * n as f64);
            assert!((t.sum() - m.trace()).abs() < 1e-8 * n as f64);
            assert!(j.values().windows(2).all(|w| w[0] <= w[1]));
        }
    }
}

#[test]
fn spectral_moments_match_graph_counts() {
    // sum mu = 0, sum mu^2 = 2m, sum lambda = 2m, sum rho = 0
    for seed in 0..20 {
        let g = gen_erdos_renyi(25, 0.2, seed).unwrap();
        let m = g.size() as f64;
        let a = eigenvalues(&adjacency_matrix(&g)).unwrap();
        assert!(a.sum().abs() < 1e-9);
        assert!((a.values().iter().map(|x| x * x).sum::<f64>() - 2.0 * m).abs() < 1e-8);
        assert!((eigenvalues(&laplacian_matrix(&g)).unwrap().sum() - 2.0 * m).abs() < 1e-8);
        assert!(eigenvalues(&randic_matrix(&g)).unwrap().sum().abs() < 1e-9);
    }
}

#[test]
fn laplacian_spectrum_is_nonnegative_with_one_zero_per_component() {
    for seed in 0..20 {
        let g = gen_erdos_renyi(20, 0.1, seed).unwrap();
        let spec = eigenvalues(&laplacian_matrix(&g)).unwrap();
        assert!(spec.values()[0] > -1e-9);
        let zeros = spec.values().iter().filter(|x| x.abs() < 1e-8).count();
        assert_eq!(zeros, g.connected_components().len());
    }
}

#[test]
fn randic_spectrum_lies_in_unit_interval() {
    for seed in 0..10 {
        let g = gen_holme_kim(40, 2, 0.5, seed).unwrap();
        let spec = eigenvalues(&randic_matrix(&g)).unwrap();
        assert!(spec.values().iter().all(|x| x.abs() <= 1.0 + 1e-9));
        // connected graph: largest Randic eigenvalue is exactly 1
        assert!((spec.values().last().unwrap() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn asymmetric_or_nonfinite_matrices_are_rejected() {
    assert!(SymMatrix::from_row_major(2, vec![0.0, 1.0, 2.0, 0.0]).is_err());
    assert!(SymMatrix::from_row_major(1, vec![f64::NAN]).is_err());
    assert!(SymMatrix::from_row_major(2, vec![0.0; 3]).is_err());
}
