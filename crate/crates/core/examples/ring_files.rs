//! Load every ring file in `examples/rings`, describe it, and round-trip
//! the finite ones through the table format.
//!
//! ```text
//! cargo run --example ring_files
//! ```

use std::path::Path;

use hyperideal::format::{Ring, RingSpec};
use hyperideal::ideal::enumerate_hyperideals;
use hyperideal::HyperStructure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/rings");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)?.map(|e| e.map(|e| e.path())).collect::<Result<_, _>>()?;
    paths.sort();
    for path in paths {
        let spec = RingSpec::parse(&std::fs::read_to_string(&path)?)?;
        let name = path.file_name().unwrap().to_string_lossy();
        match spec.build()? {
            Ring::Finite(ring) => {
                let again = RingSpec::parse(&RingSpec::from_ring(&ring).emit())?;
                let Ring::Finite(rebuilt) = again.build()? else { unreachable!() };
                println!(
                    "{name}: order {}, units {}, {} hyperideals, round-trip {}",
                    ring.order(),
                    ring.units(),
                    enumerate_hyperideals(&ring).len(),
                    if rebuilt.hyp_table() == ring.hyp_table() { "ok" } else { "differs" }
                );
            }
            Ring::Mul(table) => println!("{name}: multiplication only, order {}", table.order()),
            Ring::Zt(z) => println!("{name}: ℤ_T with T = {:?}, ideal ⟨{}⟩", z.t(), z.modulus()),
        }
    }
    Ok(())
}
