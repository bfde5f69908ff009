//! Run the registered properties on a small desk and print the report.
//! Pass property ids to run a subset.
//!
//! ```text
//! cargo run --release --example verify_suite -- DOWNGRADE PRODUCT-AB
//! ```

use hyperideal::harness::{find, registry, report, run, Desk, DeskSpec};

const SPEC: &str = r#"
max_u = 3

[zmt]
moduli = [4, 6, 8]

[products]
max_order = 16

[matrix]
max_u = 2
bases = [{ m = 2, T = [0] }]

[zt]
contexts = [{ T = [2, 4], n = 15 }]
grid_t = [[2, 4]]
grid_n = [6]
max_u = 3
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let desk = Desk::build(&DeskSpec::parse(SPEC)?, 0)?;
    let ids: Vec<String> = std::env::args().skip(1).collect();
    let properties = if ids.is_empty() {
        registry().to_vec()
    } else {
        ids.iter().map(|id| find(id)).collect::<Result<_, _>>()?
    };
    let verdicts: Vec<_> = properties.iter().map(|p| run(p, &desk)).collect();
    print!("{}", report(&desk, &verdicts));
    Ok(())
}
