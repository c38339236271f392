//! Instance files: write a generated instance as JSON, read it back, and
//! solve it from disk the way the `divmax` binary does.
//!
//! `cargo run --example instance_files`

use divmax::cli::{cmd_solve, Algorithm, ImproveArg, SolveArgs};
use divmax::testkit::{gen_instance, ConstraintKind, GenParams, ObjectiveKind};
use divmax::Instance;

fn main() -> divmax::Result<()> {
    let inst = gen_instance(&GenParams {
        n: 5,
        beta: 1.5,
        objective: ObjectiveKind::Coverage,
        constraint: ConstraintKind::Partition { parts: 2, rank: 2 },
        lambda: 1.0,
        seed: 4,
    })?;
    let dir = std::env::temp_dir().join("divmax-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("instance.json");
    inst.save(&path)?;
    println!("wrote {}:\n{}", path.display(), inst.to_json());

    let back = Instance::load(&path)?;
    assert_eq!(back, inst);

    let report = cmd_solve(&SolveArgs {
        instance: path,
        algorithm: Algorithm::Local,
        out: None,
        improve: ImproveArg::First,
        max_iters: None,
        random_start: None,
        compare: true,
    })?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
