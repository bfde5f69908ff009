//! Small combinatorial enumerators used by the predicate kernels.

/// All `k`-subsets of `{0, .., n-1}` as ascending position vectors, in
/// lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: (0..k).collect(),
        done: k > n,
    }
}

pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Nondecreasing sequences of length `k` over `{0, .., n-1}` (multisets), in
/// lexicographic order.
pub fn multisets(n: usize, k: usize) -> Multisets {
    Multisets {
        n,
        current: vec![0; k],
        done: n == 0 && k > 0,
    }
}

pub struct Multisets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Multisets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] + 1 < self.n {
                let next = self.current[i] + 1;
                for slot in &mut self.current[i..] {
                    *slot = next;
                }
                break;
            }
        }
        Some(out)
    }
}

/// The distinct sub-multisets of size `k` of a sorted slice, each sorted, in
/// lexicographic order.
pub fn distinct_submultisets<T: Copy + Ord>(sorted: &[T], k: usize) -> Vec<Vec<T>> {
    debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
    let mut groups: Vec<(T, usize)> = Vec::new();
    for &x in sorted {
        match groups.last_mut() {
            Some((y, c)) if *y == x => *c += 1,
            _ => groups.push((x, 1)),
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fill(&groups, 0, k, &mut current, &mut out);
    out
}

fn fill<T: Copy>(groups: &[(T, usize)], g: usize, left: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    if g == groups.len() {
        return;
    }
    let (x, mult) = groups[g];
    for take in (0..=mult.min(left)).rev() {
        for _ in 0..take {
            cur.push(x);
        }
        fill(groups, g + 1, left - take, cur, out);
        cur.truncate(cur.len() - take);
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
