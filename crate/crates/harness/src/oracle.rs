//! Exhaustive oracles over a finite ring `Z/m`.
//!
//! Everything here works with explicit element sets and plain residue
//! matrices, sharing no code with the solver in `subproj-core`. A module
//! `(Z/m)^g / span(A)` is represented by the set of its relation span, and a
//! morphism by the canonical representatives of the images of the generators.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use subproj_core::complex::{ChainMap, Complex};
use subproj_core::{Matrix, PresentedModule};

use crate::HarnessError;

/// Cap on the number of raw matrix tuples a search may range over.
pub const SEARCH_LIMIT: u128 = 1 << 24;

/// Dense residue matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mz {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mz {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mz { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_matrix(a: &Matrix, m: u64) -> Self {
        let md = BigInt::from(m);
        let data = a
            .entries()
            .iter()
            .map(|x| {
                let r = ((x % &md) + &md) % &md;
                r.to_u64().expect("residue fits")
            })
            .collect();
        Mz { rows: a.rows(), cols: a.cols(), data }
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    fn from_columns(rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut out = Mz::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                out.data[i * cols.len() + j] = x;
            }
        }
        out
    }

    pub fn mul(&self, other: &Mz, m: u64) -> Mz {
        assert_eq!(self.cols, other.rows);
        let mut out = Mz::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.at(k, j)) % m;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mz, m: u64) -> Mz {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a + b) % m).collect();
        Mz { rows: self.rows, cols: self.cols, data }
    }
}

/// `(Z/m)^g / span(relations)` with its relation span listed explicitly.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    modulus: u64,
    generators: usize,
    span: HashSet<Vec<u64>>,
}

impl FiniteModule {
    pub fn free(generators: usize, modulus: u64) -> Self {
        let mut span = HashSet::new();
        span.insert(vec![0; generators]);
        FiniteModule { modulus, generators, span }
    }

    pub fn from_presented(p: &PresentedModule, modulus: u64) -> Self {
        let g = p.generators();
        let rel = Mz::from_matrix(p.relations(), modulus);
        let cols: Vec<Vec<u64>> = (0..rel.cols).map(|j| rel.column(j)).collect();
        let mut span: HashSet<Vec<u64>> = HashSet::new();
        let mut queue = vec![vec![0; g]];
        span.insert(vec![0; g]);
        while let Some(v) = queue.pop() {
            for c in &cols {
                let w: Vec<u64> = v.iter().zip(c).map(|(a, b)| (a + b) % modulus).collect();
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        FiniteModule { modulus, generators: g, span }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn order(&self) -> u128 {
        (self.modulus as u128).pow(self.generators as u32) / self.span.len() as u128
    }

    pub fn contains_zero(&self, v: &[u64]) -> bool {
        self.span.contains(v)
    }

    /// Lexicographically least member of `v + span`.
    pub fn canonical(&self, v: &[u64]) -> Vec<u64> {
        self.span
            .iter()
            .map(|s| v.iter().zip(s).map(|(a, b)| (a + b) % self.modulus).collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = BTreeSet::new();
        let total = (self.modulus as usize).pow(self.generators as u32);
        for mut idx in 0..total {
            let mut v = vec![0; self.generators];
            for x in v.iter_mut() {
                *x = (idx % self.modulus as usize) as u64;
                idx /= self.modulus as usize;
            }
            out.insert(self.canonical(&v));
        }
        out.into_iter().collect()
    }

    fn canonical_matrix(&self, a: &Mz) -> Mz {
        let cols: Vec<Vec<u64>> = (0..a.cols).map(|j| self.canonical(&a.column(j))).collect();
        Mz::from_columns(self.generators, &cols)
    }

    /// Whether two matrices define the same map into this module.
    pub fn same_map(&self, a: &Mz, b: &Mz) -> bool {
        (0..a.cols).all(|j| {
            let d: Vec<u64> = a
                .column(j)
                .iter()
                .zip(b.column(j))
                .map(|(x, y)| (x + self.modulus - y) % self.modulus)
                .collect();
            self.contains_zero(&d)
        })
    }
}

/// All morphisms `A → B`, one canonical matrix per morphism.
pub fn homs(a: &FiniteModule, a_rel: &Mz, b: &FiniteModule) -> Vec<Mz> {
    let m = a.modulus;
    let elems = b.elements();
    let g = a.generators;
    let mut out = Vec::new();
    let mut choice = vec![0usize; g];
    loop {
        let cols: Vec<Vec<u64>> = choice.iter().map(|&c| elems[c].clone()).collect();
        let f = Mz::from_columns(b.generators, &cols);
        let image = f.mul(a_rel, m);
        if (0..image.cols).all(|j| b.contains_zero(&image.column(j))) {
            out.push(f);
        }
        let mut k = 0;
        loop {
            if k == g {
                return out;
            }
            choice[k] += 1;
            if choice[k] < elems.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// A complex over `Z/m` in oracle form.
#[derive(Clone, Debug)]
pub struct FiniteComplex {
    modulus: u64,
    lo: i64,
    hi: i64,
    modules: Vec<FiniteModule>,
    relations: Vec<Mz>,
    diffs: Vec<Mz>,
    zero: FiniteModule,
}

impl FiniteComplex {
    pub fn from_complex(c: &Complex) -> Result<Self, HarnessError> {
        let m = c
            .ring()
            .modulus()
            .ok_or_else(|| HarnessError::UnsuitableRing("exhaustive oracles need a finite ring".into()))?;
        let (lo, hi) = c.window();
        Ok(FiniteComplex {
            modulus: m,
            lo,
            hi,
            modules: (lo..=hi).map(|n| FiniteModule::from_presented(&c.module(n), m)).collect(),
            relations: (lo..=hi).map(|n| Mz::from_matrix(c.module(n).relations(), m)).collect(),
            diffs: (lo + 1..=hi).map(|n| Mz::from_matrix(c.differential(n).matrix(), m)).collect(),
            zero: FiniteModule::free(0, m),
        })
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn module(&self, n: i64) -> &FiniteModule {
        if n < self.lo || n > self.hi {
            &self.zero
        } else {
            &self.modules[(n - self.lo) as usize]
        }
    }

    fn relations(&self, n: i64) -> Mz {
        if n < self.lo || n > self.hi {
            Mz::zeros(0, 0)
        } else {
            self.relations[(n - self.lo) as usize].clone()
        }
    }

    pub fn gens(&self, n: i64) -> usize {
        self.module(n).generators
    }

    /// `d_n: X_n → X_{n-1}`.
    pub fn d(&self, n: i64) -> Mz {
        if n <= self.lo || n > self.hi {
            Mz::zeros(self.gens(n - 1), self.gens(n))
        } else {
            self.diffs[(n - self.lo - 1) as usize].clone()
        }
    }

    fn homs(&self, n: i64, other: &FiniteComplex, k: i64) -> Vec<Mz> {
        homs(self.module(n), &self.relations(n), other.module(k))
    }
}

fn raw_size(m: u64, shapes: impl Iterator<Item = (usize, usize)>) -> u128 {
    let mut bits = 0f64;
    for (r, c) in shapes {
        bits += (r * c) as f64 * (m as f64).log2();
    }
    if bits > 100.0 {
        u128::MAX
    } else {
        2f64.powf(bits).round() as u128
    }
}

fn check_space(size: u128) -> Result<(), HarnessError> {
    if size > SEARCH_LIMIT {
        Err(HarnessError::SearchSpaceTooLarge(size))
    } else {
        Ok(())
    }
}

/// All chain maps `X → Y` as component families over the window of `X`.
pub fn chain_map_families(x: &FiniteComplex, y: &FiniteComplex) -> Result<Vec<Vec<Mz>>, HarnessError> {
    let m = x.modulus;
    let (lo, hi) = x.window();
    check_space(raw_size(m, (lo..=hi).map(|n| (y.gens(n), x.gens(n)))))?;
    let cands: Vec<Vec<Mz>> = (lo..=hi).map(|n| x.homs(n, y, n)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Mz> = Vec::new();
    fn go(
        x: &FiniteComplex,
        y: &FiniteComplex,
        cands: &[Vec<Mz>],
        stack: &mut Vec<Mz>,
        out: &mut Vec<Vec<Mz>>,
    ) {
        let i = stack.len();
        if i == cands.len() {
            out.push(stack.clone());
            return;
        }
        let n = x.lo + i as i64;
        let m = x.modulus;
        for f in &cands[i] {
            let lhs = y.d(n).mul(f, m);
            let rhs = match stack.last() {
                Some(prev) => prev.mul(&x.d(n), m),
                None => Mz::zeros(y.gens(n - 1), x.gens(n)),
            };
            if y.module(n - 1).same_map(&lhs, &rhs) {
                stack.push(f.clone());
                go(x, y, cands, stack, out);
                stack.pop();
            }
        }
    }
    go(x, y, &cands, &mut stack, &mut out);
    Ok(out)
}

/// Exhaustive list of the chain maps `X → Y`, deduplicated up to equality of morphisms.
pub fn enumerate_chain_maps(x: &Arc<Complex>, y: &Arc<Complex>) -> Result<Vec<ChainMap>, HarnessError> {
    let fx = FiniteComplex::from_complex(x)?;
    let fy = FiniteComplex::from_complex(y)?;
    chain_map_families(&fx, &fy)?
        .into_iter()
        .map(|fam| Ok(ChainMap::new(x.clone(), y.clone(), fam.iter().map(Mz::to_matrix).collect())?))
        .collect()
}

fn family_of(f: &ChainMap) -> Result<Vec<Mz>, HarnessError> {
    let m = f
        .ring()
        .modulus()
        .ok_or_else(|| HarnessError::UnsuitableRing("exhaustive oracles need a finite ring".into()))?;
    let (lo, hi) = f.source().window();
    Ok((lo..=hi).map(|n| Mz::from_matrix(f.component(n).matrix(), m)).collect())
}

/// Whether some `s` with `f_n = d s_n + s_{n-1} d` exists, by exhaustive search.
pub fn brute_force_null_homotopic(f: &ChainMap) -> Result<bool, HarnessError> {
    let x = FiniteComplex::from_complex(f.source())?;
    let y = FiniteComplex::from_complex(f.target())?;
    family_null_homotopic(&family_of(f)?, &x, &y)
}

fn family_null_homotopic(f: &[Mz], x: &FiniteComplex, y: &FiniteComplex) -> Result<bool, HarnessError> {
    let m = x.modulus;
    let (lo, hi) = x.window();
    check_space(raw_size(m, (lo..=hi).map(|n| (y.gens(n + 1), x.gens(n)))))?;
    let cands: Vec<Vec<Mz>> = (lo..=hi).map(|n| x.homs(n, y, n + 1)).collect();
    fn go(f: &[Mz], x: &FiniteComplex, y: &FiniteComplex, cands: &[Vec<Mz>], prev: Option<&Mz>, i: usize) -> bool {
        if i == cands.len() {
            return true;
        }
        let n = x.lo + i as i64;
        let m = x.modulus;
        let tail = match prev {
            Some(p) => p.mul(&x.d(n), m),
            None => Mz::zeros(y.gens(n), x.gens(n)),
        };
        cands[i].iter().any(|s| {
            let total = y.d(n + 1).mul(s, m).add(&tail, m);
            y.module(n).same_map(&total, &f[i]) && go(f, x, y, cands, Some(s), i + 1)
        })
    }
    Ok(go(f, x, y, &cands, None, 0))
}

/// Canonical keys of all null-homotopic maps `X → Y`.
fn null_homotopic_set(x: &FiniteComplex, y: &FiniteComplex) -> Result<HashSet<Vec<Mz>>, HarnessError> {
    let m = x.modulus;
    let (lo, hi) = x.window();
    check_space(raw_size(m, (lo..=hi).map(|n| (y.gens(n + 1), x.gens(n)))))?;
    let cands: Vec<Vec<Mz>> = (lo..=hi).map(|n| x.homs(n, y, n + 1)).collect();
    let mut out = HashSet::new();
    let mut choice = vec![0usize; cands.len()];
    if cands.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        let key: Vec<Mz> = (lo..=hi)
            .map(|n| {
                let i = (n - lo) as usize;
                let mut f = y.d(n + 1).mul(&cands[i][choice[i]], m);
                if i > 0 {
                    f = f.add(&cands[i - 1][choice[i - 1]].mul(&x.d(n), m), m);
                }
                y.module(n).canonical_matrix(&f)
            })
            .collect();
        out.insert(key);
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < cands[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Orders of `Hom_C(X, Y)` and `Hom_K(X, Y)` by counting.
pub fn brute_force_hom_orders(x: &Arc<Complex>, y: &Arc<Complex>) -> Result<(u128, u128), HarnessError> {
    let fx = FiniteComplex::from_complex(x)?;
    let fy = FiniteComplex::from_complex(y)?;
    let chain = chain_map_families(&fx, &fy)?.len() as u128;
    let null = null_homotopic_set(&fx, &fy)?.len() as u128;
    Ok((chain, chain / null.max(1)))
}

/// The epi `P → N` from `P_k = F(N_k) ⊕ F(N_{k+1})` with `d^P(a, b) = (0, a)`
/// and `π_k(a, b) = a + d^N_{k+1} b`, built without sign conventions.
struct Cover {
    p: FiniteComplex,
    pi: Vec<Mz>,
}

fn cover(n: &FiniteComplex) -> Cover {
    let m = n.modulus;
    let (lo, hi) = (n.lo - 1, n.hi);
    let g = |k: i64| n.gens(k);
    let mut modules = Vec::new();
    let mut relations = Vec::new();
    let mut pi = Vec::new();
    for k in lo..=hi {
        let size = g(k) + g(k + 1);
        modules.push(FiniteModule::free(size, m));
        relations.push(Mz::zeros(size, 0));
        let mut p = Mz::zeros(g(k), size);
        for i in 0..g(k) {
            p.data[i * size + i] = 1;
        }
        let d = n.d(k + 1);
        for i in 0..g(k) {
            for j in 0..g(k + 1) {
                p.data[i * size + g(k) + j] = d.at(i, j);
            }
        }
        pi.push(p);
    }
    let mut diffs = Vec::new();
    for k in lo + 1..=hi {
        let (src, tgt) = (g(k) + g(k + 1), g(k - 1) + g(k));
        let mut d = Mz::zeros(tgt, src);
        for i in 0..g(k) {
            d.data[(g(k - 1) + i) * src + i] = 1;
        }
        diffs.push(d);
    }
    Cover {
        p: FiniteComplex { modulus: m, lo, hi, modules, relations, diffs, zero: FiniteModule::free(0, m) },
        pi,
    }
}

impl Cover {
    fn pi(&self, k: i64, n: &FiniteComplex) -> Mz {
        if k < self.p.lo || k > self.p.hi {
            Mz::zeros(n.gens(k), self.p.gens(k))
        } else {
            self.pi[(k - self.p.lo) as usize].clone()
        }
    }
}

fn family_lifts(f: &[Mz], m_c: &FiniteComplex, n_c: &FiniteComplex, cv: &Cover) -> Result<bool, HarnessError> {
    let md = m_c.modulus;
    let (lo, hi) = m_c.window();
    check_space(raw_size(md, (lo..=hi).map(|k| (cv.p.gens(k), m_c.gens(k)))))?;
    let cands: Vec<Vec<Mz>> = (lo..=hi)
        .map(|k| {
            let i = (k - lo) as usize;
            m_c.homs(k, &cv.p, k)
                .into_iter()
                .filter(|h| n_c.module(k).same_map(&cv.pi(k, n_c).mul(h, md), &f[i]))
                .collect()
        })
        .collect();
    fn go(m_c: &FiniteComplex, p: &FiniteComplex, cands: &[Vec<Mz>], prev: Option<&Mz>, i: usize) -> bool {
        if i == cands.len() {
            return true;
        }
        let k = m_c.lo + i as i64;
        let md = m_c.modulus;
        let rhs = match prev {
            Some(h) => h.mul(&m_c.d(k), md),
            None => Mz::zeros(p.gens(k - 1), m_c.gens(k)),
        };
        cands[i]
            .iter()
            .any(|h| p.module(k - 1).same_map(&p.d(k).mul(h, md), &rhs) && go(m_c, p, cands, Some(h), i + 1))
    }
    Ok(go(m_c, &cv.p, &cands, None, 0))
}

/// Whether every chain map `M → N` factors through a projective complex,
/// decided by trying to lift every chain map along an explicit epi `P → N`.
pub fn brute_force_subprojective(m: &Arc<Complex>, n: &Arc<Complex>) -> Result<bool, HarnessError> {
    let fm = FiniteComplex::from_complex(m)?;
    let fn_ = FiniteComplex::from_complex(n)?;
    let cv = cover(&fn_);
    for f in chain_map_families(&fm, &fn_)? {
        if !family_lifts(&f, &fm, &fn_, &cv)? {
            return Ok(false);
        }
    }
    Ok(true)
}
