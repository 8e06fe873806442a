//! Formal Chern roots and the fundamental theorem of symmetric polynomials.
//!
//! Works in `ℤ[x_1, …, x_N]` truncated at a total degree. Exterior powers are
//! handled by forming the `p`-fold root sums, taking their elementary
//! symmetric functions, and rewriting those back in the elementary symmetric
//! functions `e_1, …, e_N` of the original roots by leading-term elimination.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

/// Exponent vector over the roots `x_1..x_N`.
type Exps = Vec<u8>;

/// A polynomial in the formal roots with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootPoly {
    terms: HashMap<Exps, i128>,
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("root-ring coefficient overflow")
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("root-ring coefficient overflow")
}

impl RootPoly {
    pub fn one(num_roots: usize) -> RootPoly {
        let mut terms = HashMap::new();
        terms.insert(vec![0; num_roots], 1);
        RootPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u8]) -> i128 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exps, c: i128) {
        if c == 0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                let v = checked_add(*o.get(), c);
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn mul(&self, other: &RootPoly) -> RootPoly {
        let mut acc: HashMap<Exps, i128> = HashMap::with_capacity(self.terms.len() * 2);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let key: Exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let slot = acc.entry(key).or_insert(0);
                *slot = checked_add(*slot, checked_mul(*ca, *cb));
            }
        }
        acc.retain(|_, c| *c != 0);
        RootPoly { terms: acc }
    }

    /// Lexicographically largest monomial (x_1 most significant).
    fn leading(&self) -> Option<(&Exps, i128)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0)).map(|(k, v)| (k, *v))
    }
}

/// Exponents `λ` over `e_1..e_N` and the integer coefficient of `∏ e_i^{λ_i}`.
pub type ElementaryTerm = (Vec<u32>, i128);

/// A ring of `num_roots` formal Chern roots truncated above `truncation_degree`.
#[derive(Debug, Clone)]
pub struct SymmetricContext {
    num_roots: usize,
    truncation_degree: usize,
    elementary: Vec<RootPoly>,
    products: HashMap<Vec<u32>, RootPoly>,
}

impl SymmetricContext {
    pub fn new(num_roots: usize, truncation_degree: usize) -> SymmetricContext {
        assert!(num_roots > 0, "need at least one root");
        let elementary = (0..=num_roots)
            .map(|k| {
                let mut e = RootPoly::default();
                for subset in combinations(num_roots, k) {
                    let mut exps = vec![0u8; num_roots];
                    for i in subset {
                        exps[i] = 1;
                    }
                    e.add_term(exps, 1);
                }
                e
            })
            .collect();
        SymmetricContext {
            num_roots,
            truncation_degree,
            elementary,
            products: HashMap::new(),
        }
    }

    pub fn num_roots(&self) -> usize {
        self.num_roots
    }

    pub fn truncation_degree(&self) -> usize {
        self.truncation_degree
    }

    /// `e_k(x_1, …, x_N)`.
    pub fn elementary(&self, k: usize) -> &RootPoly {
        &self.elementary[k]
    }

    /// Graded pieces `σ_0, …, σ_T` of `∏_S (1 + Σ_{i∈S} x_i)` over all
    /// `p`-subsets `S`, i.e. the elementary symmetric functions of the
    /// `p`-fold root sums.
    pub fn elementary_of_root_sums(&self, p: usize) -> Vec<RootPoly> {
        let n = self.num_roots;
        let t = self.truncation_degree;
        let mut graded: Vec<HashMap<Exps, i128>> = vec![HashMap::new(); t + 1];
        graded[0].insert(vec![0; n], 1);
        for subset in combinations(n, p) {
            for k in (1..=t).rev() {
                let (lower, upper) = graded.split_at_mut(k);
                let src = &lower[k - 1];
                let dst = &mut upper[0];
                for (exps, c) in src {
                    for &i in &subset {
                        let mut e = exps.clone();
                        e[i] += 1;
                        let slot = dst.entry(e).or_insert(0);
                        *slot = checked_add(*slot, *c);
                    }
                }
            }
        }
        graded
            .into_iter()
            .map(|mut terms| {
                terms.retain(|_, c| *c != 0);
                RootPoly { terms }
            })
            .collect()
    }

    fn elementary_product(&mut self, lambda: &[u32]) -> &RootPoly {
        if !self.products.contains_key(lambda) {
            let mut acc = RootPoly::one(self.num_roots);
            for (i, &k) in lambda.iter().enumerate() {
                for _ in 0..k {
                    acc = acc.mul(&self.elementary[i + 1]);
                }
            }
            self.products.insert(lambda.to_vec(), acc);
        }
        &self.products[lambda]
    }

    /// Rewrites a symmetric polynomial as `Σ c_λ ∏ e_i^{λ_i}`.
    ///
    /// Panics if the input is not symmetric.
    pub fn express_in_elementary(&mut self, poly: &RootPoly) -> Vec<ElementaryTerm> {
        let mut rest = poly.clone();
        let mut out = Vec::new();
        while let Some((lead, c)) = rest.leading() {
            let lead = lead.clone();
            assert!(
                lead.windows(2).all(|w| w[0] >= w[1]),
                "polynomial is not symmetric: leading exponent {lead:?}"
            );
            let lambda: Vec<u32> = (0..self.num_roots)
                .map(|i| {
                    let next = lead.get(i + 1).copied().unwrap_or(0);
                    (lead[i] - next) as u32
                })
                .collect();
            let prod = self.elementary_product(&lambda).clone();
            for (exps, pc) in &prod.terms {
                rest.add_term(exps.clone(), -checked_mul(c, *pc));
            }
            out.push((lambda, c));
        }
        out.sort();
        out
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
