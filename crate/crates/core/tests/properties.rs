use foolset::{
    brute_force_fooling, construct, cross_free_check, cross_symmetry_check, is_fooling_submatrix,
    kron, matrix_from_sequence, max_fooling_submatrix, verify_fooling, zero_blocks_check, Lrs,
    Matrix, PatternMatrix, PrimeField, DEFAULT_NODE_BUDGET, DEFAULT_PERIOD_CAP,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn arb_lrs() -> impl Strategy<Value = Lrs> {
    (0usize..4, 1usize..=5).prop_flat_map(|(pi, r)| {
        let p = PRIMES[pi];
        (
            Just(p),
            1..p as i64,
            prop::collection::vec(0..p as i64, r - 1),
            prop::collection::vec(0..p as i64, r),
        )
            .prop_map(|(p, c0, rest, init)| {
                let mut coeffs = vec![c0];
                coeffs.extend(rest);
                Lrs::general(p, &coeffs, &init).unwrap()
            })
    })
}

fn arb_pattern(max: usize) -> impl Strategy<Value = PatternMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(any::<bool>(), r * c)
            .prop_map(move |s| PatternMatrix::new(r, c, s).unwrap())
    })
}

proptest! {
    #[test]
    fn forward_backward_consistency(seq in arb_lrs(), k in -100i64..=100) {
        let r = seq.order() as i64;
        let rebased = seq.rebased(k - r);
        prop_assert_eq!(rebased.eval(r), seq.eval(k));
        // And from the far side, so f(k) is reached by backward steps.
        let ahead = seq.rebased(k + 1);
        prop_assert_eq!(ahead.eval(-1), seq.eval(k));
    }

    #[test]
    fn period_soundness(seq in arb_lrs(), picks in prop::collection::vec(0u64..10_000, 200)) {
        let n = seq.period(DEFAULT_PERIOD_CAP).unwrap() as i64;
        for x in picks {
            let k = (x as i64 % (4 * n + 1)) - 2 * n;
            prop_assert_eq!(seq.eval(k), seq.eval(k + n));
        }
    }

    #[test]
    fn window_matches_pointwise_eval(seq in arb_lrs(), start in -60i64..60, len in 0usize..40) {
        let w = seq.window(start, len);
        prop_assert_eq!(w.len(), len);
        let fresh = Lrs::from_residues(seq.field(), seq.coeffs().to_vec(), seq.init().to_vec()).unwrap();
        for (i, v) in w.into_iter().enumerate() {
            prop_assert_eq!(v, fresh.eval(start + i as i64));
        }
    }

    #[test]
    fn fooling_iff_cross_symmetry(seq in arb_lrs(), n in 2usize..30) {
        // With f(0) != 0 the diagonal is nonzero and the two checks must agree.
        prop_assume!(seq.eval_raw(0) != 0);
        let m = matrix_from_sequence(&seq, n);
        let fooling = verify_fooling(&m).unwrap().passed();
        prop_assert_eq!(fooling, cross_symmetry_check(&seq, n as u64).passed());
    }

    #[test]
    fn sequence_matrices_are_circulant_when_period_divides(seq in arb_lrs()) {
        let period = seq.period(DEFAULT_PERIOD_CAP).unwrap() as usize;
        prop_assume!(period <= 60);
        let m = matrix_from_sequence(&seq, period * 2);
        prop_assert!(m.is_circulant());
    }

    #[test]
    fn search_result_is_certified(a in arb_pattern(6)) {
        let res = max_fooling_submatrix(&a, DEFAULT_NODE_BUDGET);
        prop_assert!(res.optimal);
        prop_assert_eq!(res.size, res.cells.len());
        prop_assert!(is_fooling_submatrix(&a, &res.cells));
        prop_assert!(cross_free_check(&a, &res.cells).unwrap());
        prop_assert!(res.cells.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn fooling_cells_iff_cross_free(a in arb_pattern(5), picks in prop::collection::vec(0usize..64, 0..5)) {
        let support = a.support_cells();
        prop_assume!(!support.is_empty());
        let mut cells: Vec<_> = picks.iter().map(|&x| support[x % support.len()]).collect();
        cells.sort_unstable();
        cells.dedup();
        prop_assert_eq!(is_fooling_submatrix(&a, &cells), cross_free_check(&a, &cells).unwrap());
    }

    #[test]
    fn deleting_lines_never_helps(a in arb_pattern(5), x in 0usize..5) {
        let full = max_fooling_submatrix(&a, DEFAULT_NODE_BUDGET).size;
        if let Some(b) = a.without_row(x % a.rows()) {
            prop_assert!(max_fooling_submatrix(&b, DEFAULT_NODE_BUDGET).size <= full);
        }
        if let Some(b) = a.without_col(x % a.cols()) {
            prop_assert!(max_fooling_submatrix(&b, DEFAULT_NODE_BUDGET).size <= full);
        }
    }
}

#[test]
fn periodicity_lemma_on_grid() {
    for (p, t) in [(2u64, 1u32), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1)] {
        let r = p.pow(t) as usize + 1;
        let n = (r * (r - 1) + 1) as i64;
        let seq = Lrs::standard(p, r).unwrap();
        let minimal = seq.period(DEFAULT_PERIOD_CAP).unwrap() as i64;
        assert_eq!(n % minimal, 0, "p={p} t={t}");
        for k in -2 * n..=2 * n {
            assert_eq!(seq.eval(k), seq.eval(k + n));
        }
        assert!(zero_blocks_check(&seq, r).passed());
        assert!(cross_symmetry_check(&seq, n as u64).passed());
    }
}

#[test]
fn grid_matrices_are_circulant() {
    for (p, t) in [(2u64, 1u32), (2, 2), (3, 1), (5, 1)] {
        let b = construct(p, t).unwrap();
        assert!(b.matrix.is_circulant());
    }
}

#[test]
fn rank_is_permutation_invariant() {
    let b = construct(3, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = b.n;
    for _ in 0..50 {
        let mut rows: Vec<usize> = (0..n).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
        assert_eq!(b.matrix.permuted(&rows, &cols).rank(), b.rank);
    }
}

#[test]
fn solver_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let density = rng.gen_range(0.1..0.9);
        let a = PatternMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(density));
        if a.support_size() > 24 {
            continue;
        }
        let fast = max_fooling_submatrix(&a, DEFAULT_NODE_BUDGET);
        let slow = brute_force_fooling(&a).unwrap();
        assert_eq!(fast.size, slow.size, "{a:?}");
        assert_eq!(fast.cells, slow.cells, "{a:?}");
    }
}

#[test]
fn fooling_bound_by_rank_over_f2() {
    let f2 = PrimeField::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..40 {
        let n = rng.gen_range(1..=10);
        let m = Matrix::from_fn(f2, n, n, |_, _| rng.gen_range(0..2));
        let size = max_fooling_submatrix(&PatternMatrix::from_matrix(&m), DEFAULT_NODE_BUDGET).size;
        let rank = m.rank();
        assert!(size <= rank * rank, "size {size} rank {rank}");
    }
}

fn random_fooling_matrix(rng: &mut ChaCha8Rng, field: PrimeField, n: usize) -> Matrix {
    let p = field.modulus() as u64;
    let mut m = vec![0u64; n * n];
    for k in 0..n {
        m[k * n + k] = rng.gen_range(1..p);
        for l in k + 1..n {
            // At most one of the two opposite entries is nonzero.
            let v = rng.gen_range(0..p);
            if rng.gen_bool(0.5) {
                m[k * n + l] = v;
            } else {
                m[l * n + k] = v;
            }
        }
    }
    Matrix::from_fn(field, n, n, |i, j| m[i * n + j])
}

#[test]
fn kron_preserves_fooling_and_multiplies_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..40 {
        let field = PrimeField::new(PRIMES[rng.gen_range(0..4)]).unwrap();
        let p = field.modulus() as u64;
        let (na, nb) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let a = random_fooling_matrix(&mut rng, field, na);
        let b = random_fooling_matrix(&mut rng, field, nb);
        let k = kron(&a, &b).unwrap();
        assert_eq!((k.rows(), k.cols()), (a.rows() * b.rows(), a.cols() * b.cols()));
        assert!(verify_fooling(&k).unwrap().passed());
        assert_eq!(k.rank(), a.rank() * b.rank());

        // Arbitrary (non-fooling, rectangular) factors for rank multiplicativity.
        let (r1, c1, r2, c2) = (rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let x = Matrix::from_fn(field, r1, c1, |_, _| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(0..p) });
        let y = Matrix::from_fn(field, r2, c2, |_, _| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(0..p) });
        assert_eq!(kron(&x, &y).unwrap().rank(), x.rank() * y.rank());
    }
    for (p, t) in [(2u64, 1u32), (3, 1)] {
        let m = construct(p, t).unwrap().matrix;
        let k = kron(&m, &m).unwrap();
        assert!(verify_fooling(&k).unwrap().passed());
    }
}
