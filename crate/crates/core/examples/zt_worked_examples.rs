//! Principal ideals of `ℤ_T` with `T = {2, 4}`. The predicates are decided
//! by scanning residue multisets modulo `n`; witnesses are reported as
//! integer lifts and replayed.
//!
//! ```text
//! cargo run --release --example zt_worked_examples
//! ```

use hyperideal::zt::{ZtContext, ZtKind};

fn report(z: &ZtContext, kind: ZtKind, u: usize, v: usize) -> Result<(), Box<dyn std::error::Error>> {
    let verdict = z.check(kind, u, v)?;
    let name = match kind {
        ZtKind::Plain => "absorbing",
        ZtKind::Prime => "absorbing prime",
    };
    println!("⟨{}⟩ ({u},{v})-{name}: {}", z.modulus(), verdict.holds);
    if let Some(w) = verdict.witness {
        print!("{w}");
        assert_eq!(z.replay(kind, v, &w.tuple), Some(w));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z150 = ZtContext::new(&[2, 4], 150)?;
    report(&z150, ZtKind::Plain, 3, 2)?;
    report(&z150, ZtKind::Plain, 4, 3)?;
    report(&z150, ZtKind::Plain, 4, 2)?;

    let z15 = ZtContext::new(&[2, 4], 15)?;
    report(&z15, ZtKind::Plain, 3, 1)?;
    report(&z15, ZtKind::Plain, 3, 2)?;
    report(&z15, ZtKind::Prime, 3, 1)?;

    let xs = [3, 3, 5];
    let products: Vec<String> = z15.integer_product(&xs).iter().map(|p| p.to_string()).collect();
    println!("3 ∘ 3 ∘ 5 = {{{}}}", products.join(","));
    Ok(())
}
