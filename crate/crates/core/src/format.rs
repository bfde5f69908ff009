//! Ring description files (TOML).
//!
//! Three shapes are accepted:
//!
//! ```toml
//! # explicit tables over {0, .., order-1}
//! order = 2
//! add = [[0, 1], [1, 0]]
//! hyp = [[[0], [0]], [[0], [0, 1]]]
//! identity = 1          # optional: which identity plays the role of 1
//! labels = ["0", "a"]   # optional display names
//! ```
//!
//! ```toml
//! # multiplication only, for constructed structures whose addition is not
//! # single-valued (monomial extensions, localizations)
//! order = 2
//! hyp = [[[0], [0]], [[0], [1]]]
//! identity = 1          # optional
//! ```
//!
//! ```toml
//! [zmt]                 # ℤ_m with a ∘ b = {a·t·b mod m : t ∈ T}
//! m = 6
//! T = [1, 3]
//! ```
//!
//! ```toml
//! [zt]                  # ℤ_T relative to the ideal ⟨n⟩
//! T = [2, 4]
//! n = 150
//! ```
//!
//! [`RingSpec::emit`] writes the canonical form: keys in the order above,
//! `T` sorted without repeats, hyperproducts sorted. Parsing a canonical
//! file and emitting it again reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::constructions::MulTable;
use crate::element_set::ElementSet;
use crate::hyperring::HyperStructure;
use crate::error::{Error, Result};
use crate::hyperring::{build_zmt, Hyperring};
use crate::zt::ZtContext;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Table {
        order: usize,
        add: Vec<Vec<usize>>,
        hyp: Vec<Vec<Vec<usize>>>,
        identity: Option<usize>,
        labels: Option<Vec<String>>,
    },
    Mul {
        order: usize,
        hyp: Vec<Vec<Vec<usize>>>,
        identity: Option<usize>,
    },
    Zmt {
        m: usize,
        t: Vec<usize>,
    },
    Zt {
        t: Vec<i64>,
        n: u64,
    },
}

/// What a ring file describes once built.
#[derive(Debug, Clone)]
pub enum Ring {
    Finite(Hyperring),
    Mul(MulTable),
    Zt(ZtContext),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    order: Option<usize>,
    add: Option<Vec<Vec<usize>>>,
    hyp: Option<Vec<Vec<Vec<usize>>>>,
    identity: Option<usize>,
    labels: Option<Vec<String>>,
    zmt: Option<RawZmt>,
    zt: Option<RawZt>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawZmt {
    m: usize,
    #[serde(rename = "T")]
    t: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawZt {
    #[serde(rename = "T")]
    t: Vec<i64>,
    n: u64,
}

fn sorted_unique<T: Ord + Copy>(xs: &[T]) -> Vec<T> {
    xs.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFile = toml::from_str(text).map_err(|e| Error::Format(e.message().to_string()))?;
        let table = raw.order.is_some() || raw.add.is_some() || raw.hyp.is_some();
        match (table, raw.zmt, raw.zt) {
            (true, None, None) => {
                let order = raw.order.ok_or_else(|| Error::Format("missing `order`".into()))?;
                let hyp = raw.hyp.ok_or_else(|| Error::Format("missing `hyp`".into()))?;
                if hyp.len() != order || hyp.iter().any(|row| row.len() != order) {
                    return Err(Error::Format(format!("`hyp` must be {order}×{order}")));
                }
                let Some(add) = raw.add else {
                    if raw.labels.is_some() {
                        return Err(Error::Format("`labels` needs the `add` table".into()));
                    }
                    return Ok(RingSpec::Mul {
                        order,
                        hyp: hyp
                            .into_iter()
                            .map(|row| row.into_iter().map(|cell| sorted_unique(&cell)).collect())
                            .collect(),
                        identity: raw.identity,
                    });
                };
                if add.len() != order || add.iter().any(|row| row.len() != order) {
                    return Err(Error::Format(format!("`add` must be {order}×{order}")));
                }
                if let Some(labels) = &raw.labels {
                    if labels.len() != order {
                        return Err(Error::Format(format!("`labels` must have {order} entries")));
                    }
                }
                let hyp = hyp
                    .into_iter()
                    .map(|row| row.into_iter().map(|cell| sorted_unique(&cell)).collect())
                    .collect();
                Ok(RingSpec::Table {
                    order,
                    add,
                    hyp,
                    identity: raw.identity,
                    labels: raw.labels,
                })
            }
            (false, Some(z), None) if raw.identity.is_none() && raw.labels.is_none() => Ok(RingSpec::Zmt {
                m: z.m,
                t: sorted_unique(&z.t),
            }),
            (false, None, Some(z)) if raw.identity.is_none() && raw.labels.is_none() => Ok(RingSpec::Zt {
                t: sorted_unique(&z.t),
                n: z.n,
            }),
            _ => Err(Error::Format(
                "a ring file holds exactly one of: tables, [zmt], [zt]".into(),
            )),
        }
    }

    pub fn from_ring(ring: &Hyperring) -> Self {
        let n = ring.order();
        RingSpec::Table {
            order: n,
            add: (0..n).map(|x| (0..n).map(|y| ring.add(x, y)).collect()).collect(),
            hyp: (0..n)
                .map(|x| (0..n).map(|y| ring.hyp_at(x, y).to_vec()).collect())
                .collect(),
            identity: ring
                .one()
                .filter(|&e| ring.identity_elements().first() != Some(e)),
            labels: None,
        }
    }

    /// The multiplication table of any structure, with `identity` recorded
    /// when given.
    pub fn from_mul<S: HyperStructure + ?Sized>(s: &S, identity: Option<usize>) -> Self {
        let n = s.order();
        RingSpec::Mul {
            order: n,
            hyp: (0..n).map(|x| (0..n).map(|y| s.mul(x, y).to_vec()).collect()).collect(),
            identity,
        }
    }

    pub fn build(&self) -> Result<Ring> {
        match self {
            RingSpec::Table {
                order,
                add,
                hyp,
                identity,
                ..
            } => {
                let add = add.iter().flatten().copied().collect();
                let hyp = hyp
                    .iter()
                    .flatten()
                    .map(|cell| cell.iter().copied().collect::<ElementSet>())
                    .collect();
                let mut ring = Hyperring::new(*order, add, hyp)?;
                if let Some(e) = identity {
                    ring = ring.with_identity(*e)?;
                }
                Ok(Ring::Finite(ring))
            }
            RingSpec::Mul { order, hyp, identity } => {
                let mut mul = Vec::with_capacity(order * order);
                for cell in hyp.iter().flatten() {
                    if cell.is_empty() || cell.iter().any(|&x| x >= *order) {
                        return Err(Error::Format(format!("bad product cell {cell:?} for order {order}")));
                    }
                    mul.push(cell.iter().copied().collect::<ElementSet>());
                }
                let bare = MulTable::new(*order, mul.clone(), None);
                let one = match identity {
                    Some(e) if bare.identities().contains(*e) => Some(*e),
                    Some(e) => return Err(Error::Format(format!("{e} is not an identity"))),
                    None => bare.identities().iter().next(),
                };
                Ok(Ring::Mul(MulTable::new(*order, mul, one)))
            }
            RingSpec::Zmt { m, t } => Ok(Ring::Finite(build_zmt(*m, t)?)),
            RingSpec::Zt { t, n } => Ok(Ring::Zt(ZtContext::new(t, *n)?)),
        }
    }

    pub fn emit(&self) -> String {
        let list = |xs: &mut dyn Iterator<Item = String>| format!("[{}]", xs.collect::<Vec<_>>().join(", "));
        let mut out = String::new();
        match self {
            RingSpec::Table {
                order,
                add,
                hyp,
                identity,
                labels,
            } => {
                let _ = writeln!(out, "order = {order}");
                out.push_str("add = [\n");
                for row in add {
                    let _ = writeln!(out, "  {},", list(&mut row.iter().map(|x| x.to_string())));
                }
                out.push_str("]\nhyp = [\n");
                for row in hyp {
                    let cells = row.iter().map(|cell| list(&mut cell.iter().map(|x| x.to_string())));
                    let _ = writeln!(out, "  {},", list(&mut cells.into_iter()));
                }
                out.push_str("]\n");
                if let Some(e) = identity {
                    let _ = writeln!(out, "identity = {e}");
                }
                if let Some(labels) = labels {
                    let _ = writeln!(out, "labels = {}", list(&mut labels.iter().map(|l| format!("{l:?}"))));
                }
            }
            RingSpec::Mul { order, hyp, identity } => {
                let _ = writeln!(out, "order = {order}");
                out.push_str("hyp = [\n");
                for row in hyp {
                    let cells = row.iter().map(|cell| list(&mut cell.iter().map(|x| x.to_string())));
                    let _ = writeln!(out, "  {},", list(&mut cells.into_iter()));
                }
                out.push_str("]\n");
                if let Some(e) = identity {
                    let _ = writeln!(out, "identity = {e}");
                }
            }
            RingSpec::Zmt { m, t } => {
                let _ = write!(out, "[zmt]\nm = {m}\nT = {}\n", list(&mut t.iter().map(|x| x.to_string())));
            }
            RingSpec::Zt { t, n } => {
                let _ = write!(out, "[zt]\nT = {}\nn = {n}\n", list(&mut t.iter().map(|x| x.to_string())));
            }
        }
        out
    }
}

/// Parse an ideal argument: an element list `0,3` or generators `gen:[2]`.
pub fn parse_ideal(ring: &Hyperring, text: &str) -> Result<ElementSet> {
    let text = text.trim();
    let (generated, body) = match text.strip_prefix("gen:") {
        Some(rest) => (true, rest.trim()),
        None => (false, text),
    };
    let body = body.trim_start_matches('[').trim_end_matches(']').trim_start_matches('{').trim_end_matches('}');
    let mut set = ElementSet::empty();
    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let x: usize = part
            .parse()
            .map_err(|_| Error::Format(format!("`{part}` is not an element")))?;
        if x >= ring.order() {
            return Err(Error::Format(format!("element {x} outside a carrier of order {}", ring.order())));
        }
        set.insert(x);
    }
    if generated {
        Ok(crate::ideal::generated_hyperideal(ring, &set))
    } else if crate::ideal::is_hyperideal(ring, &set) {
        Ok(set)
    } else {
        Err(Error::NotAHyperideal(set.to_string()))
    }
}
