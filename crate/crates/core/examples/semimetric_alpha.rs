//! Validate distance matrices and read off the relaxation parameter alpha.
//!
//! `cargo run --example semimetric_alpha`

use divmax::testkit::{gen_semimetric, semimetric_from_points};
use divmax::{Error, SemiMetric};

fn main() -> divmax::Result<()> {
    let triangle = SemiMetric::validate(&[[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]])?;
    println!("equilateral triangle: alpha = {}", triangle.alpha());

    let stretched = SemiMetric::validate(&[[0.0, 3.0, 1.0], [3.0, 0.0, 1.0], [1.0, 1.0, 0.0]])?;
    println!("d(0,1) = 3 over a 1 + 1 detour: alpha = {}", stretched.alpha());

    // squared Euclidean distance on a line doubles the detour penalty
    let squared = semimetric_from_points(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)], 2.0)?;
    println!("squared distances on a line: alpha = {}", squared.alpha());

    for beta in [1.0, 1.5, 2.0, 3.0] {
        let worst = (0..50)
            .map(|seed| gen_semimetric(8, beta, seed).alpha())
            .fold(1.0, f64::max);
        println!(
            "beta = {beta}: worst alpha over 50 random clouds = {worst:.4} (ceiling {})",
            2f64.powf(beta - 1.0)
        );
    }

    match SemiMetric::validate(&[
        [0.0, 1.0, 1.0, 1.0],
        [1.0, 0.0, 1.0, 2.0],
        [1.0, 1.0, 0.0, 1.0],
        [1.0, 1.0, 1.0, 0.0],
    ]) {
        Err(e @ Error::Asymmetric(..)) => println!("rejected: {e}"),
        other => println!("unexpected: {other:?}"),
    }
    match SemiMetric::validate(&[[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]) {
        Err(e) => println!("rejected: {e}"),
        Ok(m) => println!("unexpected alpha {}", m.alpha()),
    }
    Ok(())
}
