//! The library sketch from README.md, compiled and run verbatim so the
//! README cannot drift from the real API.

use osalg::field::{PrimeField, Rationals};
use osalg::matroid::Matroid;
use osalg::os::{is_quadratic, os_dims, phi3};
use osalg::resonance::resonance_q;

#[test]
fn the_readme_sketch_runs_as_written() -> osalg::Result<()> {
    // Cycle matroid of K4: edges 0..6, lines = the four triangles (bitmasks).
    let k4 = Matroid::from_rank3_lines(6, vec![0b001011, 0b010101, 0b100110, 0b111000])?;

    assert_eq!(os_dims(&k4, &Rationals)?, vec![1, 6, 11, 6]);
    assert_eq!(os_dims(&k4, &PrimeField::new(5)?)?, vec![1, 6, 11, 6]);
    assert_eq!(phi3(&k4, &Rationals)?, 10);
    assert!(is_quadratic(&k4, &Rationals)?);
    let components = resonance_q(&k4, 10_000_000)?; // 4 local + 1 non-local
    assert_eq!(components.len(), 5);
    Ok(())
}
