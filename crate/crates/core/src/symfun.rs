//! Schur, skew Schur and hook Schur polynomials, computed by enumerating
//! semistandard tableaux.
//!
//! Polynomials live in a two-block alphabet `x_1..x_k; y_1..y_l`. Every
//! exponent vector has `k + l` slots, x-exponents first.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{sub_partitions, Partition, SkewShape};

/// One of the two variable alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    X,
    Y,
}

/// A sparse polynomial in `x_1..x_{num_x}; y_1..y_{num_y}` with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    num_x: usize,
    num_y: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    x: Vec<u32>,
    y: Vec<u32>,
}

impl MultiPoly {
    pub fn zero(num_x: usize, num_y: usize) -> Self {
        Self {
            num_x,
            num_y,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_x: usize, num_y: usize) -> Self {
        let mut p = Self::zero(num_x, num_y);
        p.terms.insert(vec![0; num_x + num_y], BigInt::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials. Panics if an exponent vector has the wrong length.
    pub fn from_terms(
        num_x: usize,
        num_y: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(num_x, num_y);
        for (exps, c) in terms {
            p.add_term(exps, c);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(
            exps.len(),
            self.num_x + self.num_y,
            "exponent vector length"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn num_y(&self) -> usize {
        self.num_y
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degrees of the monomials, without repetition, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Re-embeds into a larger alphabet; the new variables get exponent 0.
    pub fn embed(&self, num_x: usize, num_y: usize) -> MultiPoly {
        assert!(
            num_x >= self.num_x && num_y >= self.num_y,
            "embed cannot drop variables"
        );
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exps = vec![0; num_x + num_y];
                exps[..self.num_x].copy_from_slice(&e[..self.num_x]);
                exps[num_x..num_x + self.num_y].copy_from_slice(&e[self.num_x..]);
                (exps, c.clone())
            })
            .collect();
        MultiPoly {
            num_x,
            num_y,
            terms,
        }
    }

    /// Exchanges the roles of the two alphabets: `x_i <-> y_i`.
    pub fn swap_blocks(&self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exps = e[self.num_x..].to_vec();
                exps.extend_from_slice(&e[..self.num_x]);
                (exps, c.clone())
            })
            .collect();
        MultiPoly {
            num_x: self.num_y,
            num_y: self.num_x,
            terms,
        }
    }

    fn same_layout(&self, other: &MultiPoly) {
        assert!(
            self.num_x == other.num_x && self.num_y == other.num_y,
            "alphabet mismatch: ({}, {}) vs ({}, {})",
            self.num_x,
            self.num_y,
            other.num_x,
            other.num_y
        );
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.same_layout(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.same_layout(other);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            num_x: self.num_x,
            num_y: self.num_y,
            terms,
        }
    }

    fn block_range(&self, block: Block) -> std::ops::Range<usize> {
        match block {
            Block::X => 0..self.num_x,
            Block::Y => self.num_x..self.num_x + self.num_y,
        }
    }

    /// Invariance under every adjacent transposition inside `block`.
    pub fn is_symmetric_in_block(&self, block: Block) -> bool {
        let range = self.block_range(block);
        (range.start..range.end.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Terms in graded lexicographic order, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| grlex(b, a));
        terms
    }

    /// `[{"coeff":"3","x":[2],"y":[1]}, ...]` in rendering order.
    pub fn to_json(&self) -> String {
        let terms: Vec<TermJson> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                coeff: c.to_string(),
                x: e[..self.num_x].to_vec(),
                y: e[self.num_x..].to_vec(),
            })
            .collect();
        serde_json::to_string(&terms).expect("polynomial serializes")
    }

    pub fn from_json(text: &str, num_x: usize, num_y: usize) -> Result<MultiPoly> {
        let terms: Vec<TermJson> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = MultiPoly::zero(num_x, num_y);
        for t in terms {
            if t.x.len() != num_x || t.y.len() != num_y {
                return Err(Error::Parse(format!(
                    "term has {}+{} exponents, expected {num_x}+{num_y}",
                    t.x.len(),
                    t.y.len()
                )));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|e| Error::Parse(format!("{:?}: {e}", t.coeff)))?;
            let mut exps = t.x;
            exps.extend(t.y);
            p.add_term(exps, c);
        }
        Ok(p)
    }

    /// Header-free `coeff,x1,..,xk,y1,..,yl` rows in rendering order.
    pub fn to_csv(&self) -> String {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                std::iter::once(c.to_string())
                    .chain(e.iter().map(ToString::to_string))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (exps, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            let mag = c.abs();
            let constant = exps.iter().all(|&e| e == 0);
            if constant || !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (slot, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if slot < self.num_x {
                    format!("x{}", slot + 1)
                } else {
                    format!("y{}", slot - self.num_x + 1)
                };
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Content vectors of the semistandard fillings of `shape` with entries in
/// `1..=num_vars`, with multiplicities. Cells are filled in row-major order and
/// the row/column conditions are checked as each cell is placed.
fn tableau_contents(shape: &SkewShape, num_vars: usize) -> BTreeMap<Vec<u32>, BigInt> {
    let outer = shape.outer();
    let inner = shape.inner();
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).map(move |c| (r, c)))
        .collect();

    struct Search<'a> {
        cells: &'a [(usize, usize)],
        inner: &'a Partition,
        num_vars: usize,
        grid: Vec<Vec<usize>>,
        content: Vec<u32>,
        out: BTreeMap<Vec<u32>, BigInt>,
    }

    impl Search<'_> {
        fn fill(&mut self, idx: usize) {
            let Some(&(r, c)) = self.cells.get(idx) else {
                *self.out.entry(self.content.clone()).or_default() += 1;
                return;
            };
            let mut lo = 1;
            if c > self.inner.part(r) {
                lo = lo.max(self.grid[r][c - 1]);
            }
            if r > 0 && c >= self.inner.part(r - 1) {
                lo = lo.max(self.grid[r - 1][c] + 1);
            }
            for v in lo..=self.num_vars {
                self.grid[r][c] = v;
                self.content[v - 1] += 1;
                self.fill(idx + 1);
                self.content[v - 1] -= 1;
            }
            self.grid[r][c] = 0;
        }
    }

    let mut search = Search {
        cells: &cells,
        inner,
        num_vars,
        grid: vec![vec![0; outer.width()]; outer.len()],
        content: vec![0; num_vars],
        out: BTreeMap::new(),
    };
    search.fill(0);
    search.out
}

/// `s_λ(x_1..x_k)`, as a polynomial in the x-block only.
pub fn schur_poly(lambda: &Partition, k: usize) -> MultiPoly {
    MultiPoly {
        num_x: k,
        num_y: 0,
        terms: tableau_contents(&SkewShape::from(lambda.clone()), k),
    }
}

/// `s_{λ/μ}(y_1..y_l)`, as a polynomial in the y-block only.
pub fn skew_schur_poly(shape: &SkewShape, l: usize) -> MultiPoly {
    MultiPoly {
        num_x: 0,
        num_y: l,
        terms: tableau_contents(shape, l),
    }
}

/// The hook Schur polynomial
/// `HS_λ(x; y) = Σ_{μ ⊆ λ} s_μ(x_1..x_k) · s_{λ'/μ'}(y_1..y_l)`.
///
/// The sum runs over every partition contained in `λ`, including `[]` and `λ`.
pub fn hook_schur(lambda: &Partition, k: usize, l: usize) -> MultiPoly {
    let conj = lambda.conjugate();
    let mut total = MultiPoly::zero(k, l);
    for mu in sub_partitions(lambda) {
        let sx = schur_poly(&mu, k);
        if sx.is_zero() {
            continue;
        }
        let shape = SkewShape::new(conj.clone(), mu.conjugate())
            .expect("conjugation preserves containment");
        let sy = skew_schur_poly(&shape, l);
        if sy.is_zero() {
            continue;
        }
        total = total.add(&sx.embed(k, l).mul(&sy.embed(k, l)));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn poly(num_x: usize, num_y: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            num_x,
            num_y,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            schur_poly(&part(&[1]), 2),
            poly(2, 0, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(schur_poly(&part(&[2]), 1), poly(1, 0, &[(&[2], 1)]));
        assert!(schur_poly(&part(&[1, 1]), 1).is_zero());
        // the two SSYT of shape (2,1) in {1,2}: 11/2 and 12/2
        assert_eq!(
            schur_poly(&part(&[2, 1]), 2),
            poly(2, 0, &[(&[2, 1], 1), (&[1, 2], 1)])
        );
        assert_eq!(schur_poly(&Partition::empty(), 0), MultiPoly::one(0, 0));
        assert!(schur_poly(&part(&[1]), 0).is_zero());
    }

    #[test]
    fn schur_of_two_rows_in_three_variables() {
        // s_(2,1)(x1,x2,x3) = Σ x_i^2 x_j (i≠j) + 2 x1x2x3: 8 SSYT in total
        let s = schur_poly(&part(&[2, 1]), 3);
        assert_eq!(s.len(), 7);
        assert_eq!(s.terms()[&vec![1, 1, 1]], BigInt::from(2));
        assert!(s.is_symmetric_in_block(Block::X));
    }

    #[test]
    fn skew_schur_examples() {
        let sk = |o: &[usize], i: &[usize]| SkewShape::new(part(o), part(i)).unwrap();
        assert_eq!(skew_schur_poly(&sk(&[1], &[]), 1), poly(0, 1, &[(&[1], 1)]));
        // (2,2)/(1,1) is one column of two cells; it needs two distinct values
        assert!(skew_schur_poly(&sk(&[2, 2], &[1, 1]), 1).is_zero());
        assert_eq!(
            skew_schur_poly(&sk(&[2, 2], &[1, 1]), 2),
            poly(0, 2, &[(&[1, 1], 1)])
        );
        assert_eq!(
            skew_schur_poly(&sk(&[2], &[1]), 2),
            poly(0, 2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        // (2,1)/(1) is two disconnected cells: (y1 + y2)^2
        assert_eq!(
            skew_schur_poly(&sk(&[2, 1], &[1]), 2),
            poly(0, 2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
    }

    #[test]
    fn hook_schur_examples() {
        assert_eq!(
            hook_schur(&part(&[1]), 1, 1),
            poly(1, 1, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            hook_schur(&part(&[2]), 1, 1),
            poly(1, 1, &[(&[2, 0], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            hook_schur(&part(&[1, 1]), 1, 1),
            poly(1, 1, &[(&[0, 2], 1), (&[1, 1], 1)])
        );
        assert!(hook_schur(&part(&[2, 2]), 1, 1).is_zero());
        assert_eq!(hook_schur(&Partition::empty(), 2, 3), MultiPoly::one(2, 3));
    }

    #[test]
    fn symmetry_checks() {
        assert!(poly(2, 0, &[(&[1, 0], 1), (&[0, 1], 1)]).is_symmetric_in_block(Block::X));
        assert!(!poly(2, 0, &[(&[1, 0], 1)]).is_symmetric_in_block(Block::X));
        assert!(poly(2, 1, &[(&[1, 0, 1], 1), (&[0, 1, 1], 1)]).is_symmetric_in_block(Block::X));
        assert!(!poly(1, 2, &[(&[1, 1, 0], 1)]).is_symmetric_in_block(Block::Y));
        assert!(poly(1, 2, &[(&[1, 1, 0], 1)]).is_symmetric_in_block(Block::X));
    }

    #[test]
    fn arithmetic_cancels() {
        let a = poly(1, 1, &[(&[1, 0], 2), (&[0, 1], 1)]);
        let b = poly(1, 1, &[(&[1, 0], -2)]);
        assert_eq!(a.add(&b), poly(1, 1, &[(&[0, 1], 1)]));
        let c = poly(1, 1, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let d = poly(1, 1, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(c.mul(&d), poly(1, 1, &[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn embed_and_swap() {
        let a = poly(1, 1, &[(&[2, 1], 3)]);
        assert_eq!(a.embed(2, 2), poly(2, 2, &[(&[2, 0, 1, 0], 3)]));
        assert_eq!(
            a.embed(2, 2).swap_blocks(),
            poly(2, 2, &[(&[1, 0, 2, 0], 3)])
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(hook_schur(&part(&[1]), 1, 1).to_string(), "x1 + y1");
        assert_eq!(hook_schur(&part(&[2]), 1, 0).to_string(), "x1^2");
        assert_eq!(hook_schur(&part(&[2, 2]), 1, 1).to_string(), "0");
        assert_eq!(
            schur_poly(&part(&[2, 1]), 2).to_string(),
            "x1^2*x2 + x1*x2^2"
        );
        assert_eq!(
            poly(1, 1, &[(&[2, 1], 3), (&[0, 0], -4), (&[1, 0], -1)]).to_string(),
            "3*x1^2*y1 - x1 - 4"
        );
        assert_eq!(poly(0, 1, &[(&[1], -1)]).to_string(), "-y1");
    }

    #[test]
    fn json_round_trip() {
        let h = hook_schur(&part(&[2, 1]), 1, 1);
        let json = h.to_json();
        assert_eq!(MultiPoly::from_json(&json, 1, 1).unwrap(), h);
        assert_eq!(MultiPoly::from_json(&json, 1, 1).unwrap().to_json(), json);
        assert_eq!(
            hook_schur(&part(&[1]), 1, 1).to_json(),
            r#"[{"coeff":"1","x":[1],"y":[0]},{"coeff":"1","x":[0],"y":[1]}]"#
        );
        assert!(MultiPoly::from_json(&json, 2, 1).is_err());
    }

    #[test]
    fn csv_rows() {
        assert_eq!(hook_schur(&part(&[2]), 1, 1).to_csv(), "1,2,0\n1,1,1");
    }
}
