//! Walks the 4x4 example through the keyed transform, a forced crossover
//! and mutation schedule, and back.
//!
//! ```text
//! cargo run --example worked_example
//! ```

use defc::{
    apply_crossover_pass, apply_mutation_pass, keyed_dft_2d, keyed_idft_2d, CrossoverSchedule,
    KeyScalar, MutationSchedule, PixelMatrix, SpectralMatrix,
};

fn show(title: &str, s: &SpectralMatrix) {
    println!("{title}");
    for r in 0..s.rows() {
        let row: Vec<String> = (0..s.cols())
            .map(|c| {
                let v = s.get(r, c);
                format!("{:>9.1}{:+9.1}i", v.re, v.im)
            })
            .collect();
        println!("  {}", row.join(" "));
    }
}

fn main() -> defc::Result<()> {
    let img = PixelMatrix::new(
        4,
        4,
        vec![
            2.0, 4.0, 17.0, 100.0, 3955.0, 4.0, 23.0, 199.0, 1.0, 3.0, 4.0, 5.0, 9.0, 7.0, 6.0, 5.0,
        ],
    )?;
    let k = KeyScalar::new(16)?;
    let mut spec = keyed_dft_2d(&img, k)?;
    show("keyed DFT, k_s = 16", &spec);

    // every row, adjacent column pairs
    let pairs = (0..4)
        .flat_map(|r| [((r, 0), (r, 1)), ((r, 2), (r, 3))])
        .collect();
    let crossover = CrossoverSchedule::new(4, 4, pairs)?;
    apply_crossover_pass(&mut spec, &crossover)?;
    show("after crossover", &spec);

    let targets = (0..4).flat_map(|r| [(r, 0), (r, 2)]).collect();
    let mutation = MutationSchedule::new(4, 4, targets)?;
    let five = KeyScalar::new(5)?;
    apply_mutation_pass(&mut spec, &mutation, five)?;
    show("after mutation with constant 5", &spec);

    apply_mutation_pass(&mut spec, &mutation, five)?;
    apply_crossover_pass(&mut spec, &crossover)?;
    let back = keyed_idft_2d(&spec, k)?;
    let pixels: Vec<f64> = back.as_slice().iter().map(|v| v.re.round()).collect();
    println!("recovered  {pixels:?}");
    Ok(())
}
