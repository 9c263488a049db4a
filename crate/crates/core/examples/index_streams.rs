//! Shows an LFSR register cycling through its states and the index streams
//! a key derives.
//!
//! ```text
//! cargo run --example index_streams -- [hex-key]
//! ```

use defc::{IndexStream, LfsrBank, LfsrRegister, SecretKey, StreamLabel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let key: SecretKey = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("1589853085422475")
        .parse()?;

    let start = LfsrRegister::new(0x01);
    let mut r = start;
    let mut states = Vec::new();
    loop {
        states.push(r.state());
        r = r.step();
        if r == start {
            break;
        }
    }
    println!(
        "register 0x01: period {}, first states {:02x?}",
        states.len(),
        &states[..8]
    );

    let mut bank = LfsrBank::seed(&key);
    println!("first bank output {:x}", bank.output());

    for label in [
        StreamLabel::CrossoverRow,
        StreamLabel::MutationRow,
        StreamLabel::MutationCol,
    ] {
        let mut stream = IndexStream::derive(&key, label);
        let idx: defc::Result<Vec<usize>> = (0..10).map(|_| stream.next_index(256)).collect();
        println!("{label:?}: {:?}", idx?);
    }
    Ok(())
}
