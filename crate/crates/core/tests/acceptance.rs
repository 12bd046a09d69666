//! One line per acceptance criterion. All arithmetic is exact, so every
//! comparison is an equality.

use std::process::ExitCode;
use std::time::Instant;

use osp_core::oracle::{
    check_degree_saturation, check_antisymmetrization, check_regular_shift_table, check_hesselink_double, check_partition_oracles, check_poincare,
    check_rank_one_closed_forms, check_rank_one_h_decomposition, check_sign_det, check_total_multiplicity,
    check_zero_locus, dominant_weights_in_box, Outcome, GRID_BOUND,
};
use osp_core::{build_root_system, RootSystem};

const CAP: usize = 6;

fn rs(l: i64) -> RootSystem {
    build_root_system(l).unwrap()
}

/// Runs `f` for every rank, stopping at the first failure.
fn over_ranks(ranks: impl IntoIterator<Item = i64>, f: impl Fn(&RootSystem) -> Outcome) -> Outcome {
    for l in ranks {
        if let Some(w) = f(&rs(l))? {
            return Ok(Some(format!("l={l}: {w}")));
        }
    }
    Ok(None)
}

fn boxed(rs: &RootSystem) -> Vec<osp_core::Weight> {
    dominant_weights_in_box(rs.rank, 3)
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("antisymmetrization identity, l=1..3, q-order 12", Box::new(|| over_ranks(1..=3, |r| check_antisymmetrization(r, 12, CAP)))),
        (
            "Poincaré product and sgn=det=(-1)^length, l=1..4",
            Box::new(|| {
                over_ranks(1..=4, |r| match check_poincare(r.rank, CAP)? {
                    None => check_sign_det(r.rank, CAP),
                    some => Ok(some),
                })
            }),
        ),
        ("unique regular γ_r matching the table, l=1..3", Box::new(|| over_ranks(1..=3, |r| check_regular_shift_table(r.rank)))),
        (
            "direct and alternating Hesselink series agree, l<=2, coords<=3, N=10",
            Box::new(|| over_ranks(1..=2, |r| check_hesselink_double(r, &boxed(r), 10, CAP))),
        ),
        (
            "P_λ(1) = dim V(λ)_0 at the stabilization order, l<=2, coords<=3",
            Box::new(|| over_ranks(1..=2, |r| check_total_multiplicity(r, &boxed(r), CAP))),
        ),
        ("l=1 PRV closed forms, n=0..10", Box::new(|| check_rank_one_closed_forms(&rs(1), 21, CAP))),
        ("l=1 decomposition H^n = V(2n) + V(2n-3), n=2..6", Box::new(|| check_rank_one_h_decomposition(&rs(1), 2, 6, CAP))),
        (
            "PRV total degree equals the degree bound, l<=2, coords<=3",
            Box::new(|| over_ranks(1..=2, |r| check_degree_saturation(r, &boxed(r), CAP))),
        ),
        (
            "zero locus on the half-integer grid [-4,4]^l, l<=2",
            Box::new(|| over_ranks(1..=2, |r| check_zero_locus(r, &boxed(r), GRID_BOUND, CAP))),
        ),
        ("memoized τ, τ̄ equal exhaustive counts, height<=8, l<=2", Box::new(|| over_ranks(1..=2, |r| check_partition_oracles(r, 8)))),
    ];

    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(None) => println!("criterion {:>2} PASS  {label}  ({ms} ms)", i + 1),
            Ok(Some(w)) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: {w}", i + 1);
            }
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: error: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
