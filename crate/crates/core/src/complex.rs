//! Bounded chain complexes and chain maps.
//!
//! A complex lives on a window `[lo, hi]`; the component of degree `n` is
//! stored at index `n - lo` and `d_n: X_n → X_{n-1}` exists for `n` in
//! `(lo, hi]`. Everything outside the window is zero, so checks that quantify
//! over all degrees only need the padded window `[lo - 1, hi + 1]`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{LinearSystem, Matrix, Unknown};
use crate::modules::{cokernel, kernel, lifts_through, ModuleMorphism, PresentedModule};
use crate::ring::{sign_power, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Complex {
    ring: Ring,
    lo: i64,
    modules: Vec<Arc<PresentedModule>>,
    // diffs[k] is d_{lo + k + 1}
    diffs: Vec<ModuleMorphism>,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Complex[{}; window {}..={}]", self.ring, self.lo, self.hi())?;
        for n in (self.lo..=self.hi()).rev() {
            writeln!(f, "  X_{n} = {:?}", self.module(n))?;
            if n > self.lo {
                writeln!(f, "  d_{n} = {:?}", self.differential(n).matrix())?;
            }
        }
        Ok(())
    }
}

impl Complex {
    /// Builds and validates a complex from relation matrices (one per degree
    /// `lo, lo+1, …`) and differential matrices `d_{lo+1}, …, d_hi`.
    pub fn new(ring: Ring, lo: i64, modules: Vec<PresentedModule>, differentials: Vec<Matrix>) -> Result<Self> {
        if modules.is_empty() {
            return Err(Error::InvalidComplex("a complex needs a nonempty window".into()));
        }
        if differentials.len() + 1 != modules.len() {
            return Err(Error::InvalidComplex(format!(
                "{} components need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                differentials.len()
            )));
        }
        let modules: Vec<Arc<PresentedModule>> = modules.into_iter().map(Arc::new).collect();
        let mut diffs = Vec::with_capacity(differentials.len());
        for (k, d) in differentials.into_iter().enumerate() {
            let n = lo + k as i64 + 1;
            let m = ModuleMorphism::new(modules[k + 1].clone(), modules[k].clone(), d).map_err(|e| match e {
                Error::IllDefined(msg) => Error::IllDefined(format!("differential d_{n}: {msg}")),
                Error::DimensionMismatch(msg) => Error::DimensionMismatch(format!("differential d_{n}: {msg}")),
                other => other,
            })?;
            diffs.push(m);
        }
        Complex::from_parts(ring, lo, modules, diffs)
    }

    /// Validates `d∘d ≡ 0` and adjacency for already-built morphisms.
    pub fn from_parts(
        ring: Ring,
        lo: i64,
        modules: Vec<Arc<PresentedModule>>,
        diffs: Vec<ModuleMorphism>,
    ) -> Result<Self> {
        if modules.is_empty() || diffs.len() + 1 != modules.len() {
            return Err(Error::InvalidComplex("window and differentials disagree".into()));
        }
        for m in &modules {
            if m.ring() != ring {
                return Err(Error::RingMismatch(format!("component over {} in a complex over {}", m.ring(), ring)));
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source().as_ref() != modules[k + 1].as_ref() || d.target().as_ref() != modules[k].as_ref() {
                return Err(Error::InvalidComplex(format!(
                    "differential d_{} does not join adjacent components",
                    lo + k as i64 + 1
                )));
            }
        }
        for k in 1..diffs.len() {
            let dd = diffs[k - 1].compose(&diffs[k])?;
            if !dd.is_zero() {
                return Err(Error::NotAComplex { degree: lo + k as i64 + 1 });
            }
        }
        Ok(Complex {
            ring,
            lo,
            modules,
            diffs,
        })
    }

    /// The zero complex on the window `[0, 0]`.
    pub fn zero(ring: Ring) -> Self {
        Complex {
            ring,
            lo: 0,
            modules: vec![Arc::new(PresentedModule::zero(ring))],
            diffs: Vec::new(),
        }
    }

    /// `M` in degrees `n + 1` and `n`, joined by `(-1)^n·id` so that
    /// `disc(M, n)` is exactly the `n`-fold shift of `disc(M, 0)`.
    pub fn disc(m: &PresentedModule, n: i64) -> Self {
        let m = Arc::new(m.clone());
        let d = ModuleMorphism::identity(&m).scale(&BigInt::from(sign_power(n)));
        Complex {
            ring: m.ring(),
            lo: n,
            modules: vec![m.clone(), m],
            diffs: vec![d],
        }
    }

    /// `M` concentrated in degree `n`.
    pub fn sphere(m: &PresentedModule, n: i64) -> Self {
        Complex {
            ring: m.ring(),
            lo: n,
            modules: vec![Arc::new(m.clone())],
            diffs: Vec::new(),
        }
    }

    /// `X_{i-n}` in degree `i` with differential `(-1)^n d_{i-n}`.
    pub fn shift(&self, n: i64) -> Self {
        let sign = BigInt::from(sign_power(n));
        Complex {
            ring: self.ring,
            lo: self.lo + n,
            modules: self.modules.clone(),
            diffs: self.diffs.iter().map(|d| if n % 2 == 0 { d.clone() } else { d.scale(&sign) }).collect(),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi())
    }

    pub fn in_window(&self, n: i64) -> bool {
        n >= self.lo && n <= self.hi()
    }

    /// Component in degree `n`; the zero module outside the window.
    pub fn module(&self, n: i64) -> Arc<PresentedModule> {
        if self.in_window(n) {
            self.modules[(n - self.lo) as usize].clone()
        } else {
            Arc::new(PresentedModule::zero(self.ring))
        }
    }

    /// `d_n: X_n → X_{n-1}`; the zero map outside `(lo, hi]`.
    pub fn differential(&self, n: i64) -> ModuleMorphism {
        if n > self.lo && n <= self.hi() {
            self.diffs[(n - self.lo - 1) as usize].clone()
        } else {
            ModuleMorphism::zero(&self.module(n), &self.module(n - 1))
        }
    }

    /// Whether every component is the zero module.
    pub fn is_zero(&self) -> bool {
        self.modules.iter().all(|m| m.is_zero())
    }

    /// Same complex on the larger window `[lo, hi]`, padded with zero modules.
    pub fn widen(&self, lo: i64, hi: i64) -> Self {
        let lo = lo.min(self.lo);
        let hi = hi.max(self.hi());
        let modules: Vec<_> = (lo..=hi).map(|n| self.module(n)).collect();
        let diffs: Vec<_> = (lo + 1..=hi).map(|n| self.differential(n)).collect();
        Complex {
            ring: self.ring,
            lo,
            modules,
            diffs,
        }
    }

    /// Degreewise direct sum with canonical injections and projections.
    pub fn direct_sum(ring: Ring, parts: &[Complex]) -> Result<ComplexSum> {
        for p in parts {
            if p.ring != ring {
                return Err(Error::RingMismatch(format!("summand over {} in a sum over {}", p.ring, ring)));
            }
        }
        if parts.is_empty() {
            return Ok(ComplexSum {
                complex: Arc::new(Complex::zero(ring)),
                injections: Vec::new(),
                projections: Vec::new(),
            });
        }
        let lo = parts.iter().map(|p| p.lo).min().unwrap();
        let hi = parts.iter().map(|p| p.hi()).max().unwrap();
        let sums: Vec<_> = (lo..=hi)
            .map(|n| {
                let comps: Vec<PresentedModule> = parts.iter().map(|p| p.module(n).as_ref().clone()).collect();
                PresentedModule::direct_sum(ring, &comps)
            })
            .collect();
        let modules: Vec<_> = sums.iter().map(|s| s.module.clone()).collect();
        let mut diffs = Vec::new();
        for n in lo + 1..=hi {
            let blocks: Vec<Matrix> = parts.iter().map(|p| p.differential(n).matrix().clone()).collect();
            let refs: Vec<&Matrix> = blocks.iter().collect();
            let d = Matrix::block_diagonal(&refs);
            let k = (n - lo) as usize;
            diffs.push(ModuleMorphism::new(modules[k].clone(), modules[k - 1].clone(), d)?);
        }
        let complex = Arc::new(Complex::from_parts(ring, lo, modules, diffs)?);
        let mut injections = Vec::new();
        let mut projections = Vec::new();
        for (j, p) in parts.iter().enumerate() {
            let p = Arc::new(p.clone());
            let inj: Vec<ModuleMorphism> = (p.lo..=p.hi())
                .map(|n| retarget(&sums[(n - lo) as usize].injections[j], &p.module(n), &complex.module(n)))
                .collect();
            let proj: Vec<ModuleMorphism> = (lo..=hi)
                .map(|n| retarget(&sums[(n - lo) as usize].projections[j], &complex.module(n), &p.module(n)))
                .collect();
            injections.push(ChainMap::from_morphisms(p.clone(), complex.clone(), inj)?);
            projections.push(ChainMap::from_morphisms(complex.clone(), p, proj)?);
        }
        Ok(ComplexSum {
            complex,
            injections,
            projections,
        })
    }

    /// `H_n` together with the cycles, their inclusion and the quotient map.
    pub fn homology(&self, n: i64) -> Result<Homology> {
        let (z, mu) = kernel(&self.differential(n));
        let d = self.differential(n + 1);
        let lift = lifts_through(&d, &mu)?
            .ok_or_else(|| Error::Internal(format!("boundaries at degree {n} are not cycles")))?;
        let (raw, eps) = cokernel(&lift);
        let s = raw.simplify();
        let eps = s.to_simple.compose(&eps)?;
        Ok(Homology {
            degree: n,
            module: s.module,
            cycles: z,
            cycle_inclusion: mu,
            boundary_lift: lift,
            projection: eps,
        })
    }

    /// Whether every homology module vanishes. Only the window matters since
    /// the padded degrees carry zero modules.
    pub fn is_exact(&self) -> Result<bool> {
        for n in self.lo..=self.hi() {
            if !self.homology(n)?.module.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn retarget(m: &ModuleMorphism, s: &Arc<PresentedModule>, t: &Arc<PresentedModule>) -> ModuleMorphism {
    ModuleMorphism::new(s.clone(), t.clone(), m.matrix().clone()).expect("same presentations")
}

pub struct ComplexSum {
    pub complex: Arc<Complex>,
    pub injections: Vec<ChainMap>,
    pub projections: Vec<ChainMap>,
}

/// `H_n(X) = Z_n / B_n`.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: i64,
    pub module: Arc<PresentedModule>,
    pub cycles: Arc<PresentedModule>,
    /// `μ_n: Z_n → X_n`
    pub cycle_inclusion: ModuleMorphism,
    /// `d_{n+1}` factored through `Z_n`
    pub boundary_lift: ModuleMorphism,
    /// `ε_n: Z_n → H_n`
    pub projection: ModuleMorphism,
}

/// A family `f_n: X_n → Y_n`, stored over the source window.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: Arc<Complex>,
    target: Arc<Complex>,
    components: Vec<ModuleMorphism>,
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainMap[")?;
        for n in self.source.lo..=self.source.hi() {
            write!(f, " f_{n} = {:?}", self.component(n).matrix())?;
        }
        write!(f, " ]")
    }
}

impl ChainMap {
    /// Builds a chain map from component matrices `f_lo, …, f_hi` over the
    /// source window and validates every square.
    pub fn new(source: Arc<Complex>, target: Arc<Complex>, components: Vec<Matrix>) -> Result<Self> {
        let (lo, hi) = source.window();
        if components.len() as i64 != hi - lo + 1 {
            return Err(Error::DimensionMismatch(format!(
                "chain map needs {} components, got {}",
                hi - lo + 1,
                components.len()
            )));
        }
        let comps = components
            .into_iter()
            .enumerate()
            .map(|(k, f)| {
                let n = lo + k as i64;
                ModuleMorphism::new(source.module(n), target.module(n), f)
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMap::from_morphisms(source, target, comps)
    }

    pub fn from_morphisms(source: Arc<Complex>, target: Arc<Complex>, components: Vec<ModuleMorphism>) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", source.ring, target.ring)));
        }
        let (lo, hi) = source.window();
        if components.len() as i64 != hi - lo + 1 {
            return Err(Error::DimensionMismatch("component count".into()));
        }
        for (k, c) in components.iter().enumerate() {
            let n = lo + k as i64;
            if c.source().as_ref() != source.module(n).as_ref() || c.target().as_ref() != target.module(n).as_ref() {
                return Err(Error::DimensionMismatch(format!("component f_{n} has the wrong source or target")));
            }
        }
        let f = ChainMap {
            source,
            target,
            components,
        };
        if let Some(n) = f.failing_square() {
            return Err(Error::NotChainMap { degree: n });
        }
        Ok(f)
    }

    /// First degree `n` with `d^Y_n f_n ≢ f_{n-1} d^X_n`.
    pub fn failing_square(&self) -> Option<i64> {
        let (lo, hi) = self.source.window();
        (lo..=hi).find(|&n| {
            let left = self.target.differential(n).compose(&self.component(n)).expect("adjacent");
            let right = self.component(n - 1).compose(&self.source.differential(n)).expect("adjacent");
            !left.equals(&right).expect("parallel")
        })
    }

    pub fn verify(&self) -> bool {
        self.components.iter().all(ModuleMorphism::verify) && self.failing_square().is_none()
    }

    pub fn identity(x: &Arc<Complex>) -> Self {
        ChainMap {
            source: x.clone(),
            target: x.clone(),
            components: (x.lo..=x.hi()).map(|n| ModuleMorphism::identity(&x.module(n))).collect(),
        }
    }

    pub fn zero(x: &Arc<Complex>, y: &Arc<Complex>) -> Self {
        ChainMap {
            source: x.clone(),
            target: y.clone(),
            components: (x.lo..=x.hi()).map(|n| ModuleMorphism::zero(&x.module(n), &y.module(n))).collect(),
        }
    }

    pub fn source(&self) -> &Arc<Complex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex> {
        &self.target
    }

    pub fn ring(&self) -> Ring {
        self.source.ring
    }

    /// `f_n`; zero outside the source window.
    pub fn component(&self, n: i64) -> ModuleMorphism {
        if self.source.in_window(n) {
            self.components[(n - self.source.lo) as usize].clone()
        } else {
            ModuleMorphism::zero(&self.source.module(n), &self.target.module(n))
        }
    }

    pub fn components(&self) -> &[ModuleMorphism] {
        &self.components
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::DimensionMismatch("composition of non-adjacent chain maps".into()));
        }
        let x = &first.source;
        let components = (x.lo..=x.hi())
            .map(|n| self.component(n).compose(&first.component(n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainMap {
            source: x.clone(),
            target: self.target.clone(),
            components,
        })
    }

    fn check_parallel(&self, other: &ChainMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch("chain maps have different source or target".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.check_parallel(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    pub fn scale(&self, c: &BigInt) -> ChainMap {
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            components: self.components.iter().map(|f| f.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> ChainMap {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        self.add(&other.neg())
    }

    /// Degreewise equality modulo relations.
    pub fn equals(&self, other: &ChainMap) -> Result<bool> {
        self.check_parallel(other)?;
        for (a, b) in self.components.iter().zip(&other.components) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ModuleMorphism::is_zero)
    }

    /// First degree where the map is not surjective, if any.
    pub fn first_non_epi_degree(&self) -> Option<i64> {
        let (lo, hi) = self.target.window();
        (lo..=hi).find(|&n| !self.component(n).is_epi())
    }

    pub fn is_epi(&self) -> bool {
        self.first_non_epi_degree().is_none()
    }

    /// The same family viewed as a map `shift(X, k) → shift(Y, k)`.
    pub fn shift(&self, k: i64) -> ChainMap {
        let source = Arc::new(self.source.shift(k));
        let target = Arc::new(self.target.shift(k));
        let components = (source.lo..=source.hi())
            .map(|n| retarget(&self.component(n - k), &source.module(n), &target.module(n)))
            .collect();
        ChainMap {
            source,
            target,
            components,
        }
    }
}

/// Kernel of a chain map with its inclusion `μ: K → X`.
pub fn chain_kernel(f: &ChainMap) -> Result<(Arc<Complex>, ChainMap)> {
    let x = f.source.clone();
    let parts: Vec<_> = (x.lo..=x.hi()).map(|n| kernel(&f.component(n))).collect();
    induced_subcomplex(&x, parts)
}

/// Subcomplex of `ambient` given by monomorphisms `μ_n: S_n → X_n` (one per
/// degree of the ambient window) whose images are stable under `d`.
pub(crate) fn induced_subcomplex(
    ambient: &Arc<Complex>,
    parts: Vec<(Arc<PresentedModule>, ModuleMorphism)>,
) -> Result<(Arc<Complex>, ChainMap)> {
    let lo = ambient.lo;
    let mut diffs = Vec::new();
    for n in lo + 1..=ambient.hi() {
        let (_, mu_n) = &parts[(n - lo) as usize];
        let (_, mu_prev) = &parts[(n - lo - 1) as usize];
        let image = ambient.differential(n).compose(mu_n)?;
        let d = lifts_through(&image, mu_prev)?
            .ok_or_else(|| Error::Internal(format!("subobject not stable under d_{n}")))?;
        diffs.push(d);
    }
    let modules: Vec<_> = parts.iter().map(|(m, _)| m.clone()).collect();
    let sub = Arc::new(Complex::from_parts(ambient.ring, lo, modules, diffs)?);
    let mu = ChainMap::from_morphisms(sub.clone(), ambient.clone(), parts.into_iter().map(|(_, m)| m).collect())?;
    Ok((sub, mu))
}

/// For each chain map `f: M → N`, a chain map `h: M → P` with `π∘h ≡ f`, or
/// `None` when `f` does not lift. One coefficient matrix serves all targets.
pub fn lift_chain_maps(fs: &[ChainMap], pi: &ChainMap) -> Result<Vec<Option<ChainMap>>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let m = first.source.clone();
    let p = pi.source.clone();
    let n = pi.target.clone();
    for f in fs {
        if f.source.as_ref() != m.as_ref() || f.target.as_ref() != n.as_ref() {
            return Err(Error::DimensionMismatch("all maps must share source and π's target".into()));
        }
    }
    let ring = m.ring;
    let (lo, hi) = m.window();
    let mut sys = LinearSystem::new(ring);
    let h: Vec<Unknown> = (lo..=hi)
        .map(|k| sys.unknown(p.module(k).generators(), m.module(k).generators()))
        .collect();
    let mut rhs_shapes: Vec<(usize, usize)> = Vec::new();
    let mut lift_eqs = Vec::new();
    for (idx, k) in (lo..=hi).enumerate() {
        let (mk, pk, nk) = (m.module(k), p.module(k), n.module(k));
        // well-definedness of H_k
        let w = sys.unknown(pk.relations().cols(), mk.relations().cols());
        let e = sys.equation(pk.generators(), mk.relations().cols());
        sys.right_term(e, h[idx], mk.relations().clone());
        sys.left_term(e, pk.relations().neg(), w);
        rhs_shapes.push((pk.generators(), mk.relations().cols()));
        // chain condition d^P_k H_k − H_{k−1} d^M_k ∈ relators of P_{k−1}
        let pprev = p.module(k - 1);
        let c = sys.unknown(pprev.relations().cols(), mk.generators());
        let e = sys.equation(pprev.generators(), mk.generators());
        sys.left_term(e, p.differential(k).matrix().clone(), h[idx]);
        if idx > 0 {
            sys.right_term(e, h[idx - 1], m.differential(k).matrix().neg());
        }
        sys.left_term(e, pprev.relations().neg(), c);
        rhs_shapes.push((pprev.generators(), mk.generators()));
        // π_k H_k ≡ f_k
        let t = sys.unknown(nk.relations().cols(), mk.generators());
        let e = sys.equation(nk.generators(), mk.generators());
        sys.left_term(e, pi.component(k).matrix().clone(), h[idx]);
        sys.left_term(e, nk.relations().neg(), t);
        lift_eqs.push(rhs_shapes.len());
        rhs_shapes.push((nk.generators(), mk.generators()));
    }
    let rhs: Vec<Vec<Matrix>> = fs
        .iter()
        .map(|f| {
            let mut r: Vec<Matrix> = rhs_shapes.iter().map(|&(a, b)| Matrix::zeros(a, b)).collect();
            for (idx, k) in (lo..=hi).enumerate() {
                r[lift_eqs[idx]] = f.component(k).matrix().clone();
            }
            r
        })
        .collect();
    let sols = sys.solve_each(&rhs)?;
    sols.into_iter()
        .map(|s| {
            s.map(|s| {
                let comps = h.iter().map(|&u| sys.extract(&s, u)).collect();
                ChainMap::new(m.clone(), p.clone(), comps)
            })
            .transpose()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::Integers
    }

    fn zz() -> PresentedModule {
        PresentedModule::free(z(), 1)
    }

    fn m(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(rows)
    }

    fn mult2() -> Complex {
        Complex::new(z(), 0, vec![zz(), zz()], vec![m(&[vec![2]])]).unwrap()
    }

    #[test]
    fn make_complex_examples() {
        assert_eq!(mult2().window(), (0, 1));
        let bad = Complex::new(z(), 0, vec![zz(), zz(), zz()], vec![m(&[vec![1]]), m(&[vec![1]])]);
        assert_eq!(bad.unwrap_err(), Error::NotAComplex { degree: 2 });
        assert!(Complex::zero(z()).is_zero());
    }

    #[test]
    fn disc_sphere_shift() {
        let d = Complex::disc(&zz(), 0);
        assert_eq!(d.window(), (0, 1));
        assert_eq!(d.differential(1).matrix(), &m(&[vec![1]]));
        assert!(Complex::disc(&PresentedModule::zero(z()), 4).is_zero());
        let d3 = Complex::disc(&PresentedModule::cyclic(z(), 2), 3);
        assert_eq!(d3.window(), (3, 4));
        assert_eq!(Complex::disc(&zz(), 0).shift(3), Complex::disc(&zz(), 3));

        let x = mult2();
        assert_eq!(x.shift(0), x);
        assert_eq!(x.shift(1).shift(1), x.shift(2));
        assert_eq!(x.shift(1).differential(2).matrix(), &m(&[vec![-2]]));
        assert_eq!(Complex::sphere(&zz(), 0).shift(5), Complex::sphere(&zz(), 5));
    }

    #[test]
    fn direct_sum_examples() {
        let s = Complex::direct_sum(z(), &[Complex::disc(&zz(), 0), Complex::disc(&zz(), 1)]).unwrap();
        let c = &s.complex;
        assert_eq!(c.window(), (0, 2));
        assert_eq!(c.module(1).generators(), 2);
        assert_eq!(c.module(2).generators(), 1);
        for (i, p) in s.injections.iter().zip(&s.projections) {
            let id = ChainMap::identity(i.source());
            assert!(p.compose(i).unwrap().equals(&id).unwrap());
        }
        let x = mult2();
        let s = Complex::direct_sum(z(), &[x.clone(), Complex::zero(z())]).unwrap();
        assert!(s.complex.homology(0).unwrap().module.is_isomorphic(&PresentedModule::cyclic(z(), 2)));
    }

    #[test]
    fn homology_examples() {
        let h = Complex::sphere(&zz(), 0).homology(0).unwrap();
        assert!(h.module.is_isomorphic(&zz()));
        let d = Complex::disc(&zz(), 0);
        assert!(d.homology(0).unwrap().module.is_zero());
        assert!(d.homology(1).unwrap().module.is_zero());
        let x = mult2();
        assert!(x.homology(0).unwrap().module.is_isomorphic(&PresentedModule::cyclic(z(), 2)));
        assert!(x.homology(1).unwrap().module.is_zero());
    }

    #[test]
    fn exactness() {
        assert!(Complex::disc(&PresentedModule::cyclic(z(), 3), 2).is_exact().unwrap());
        assert!(!Complex::sphere(&zz(), 0).is_exact().unwrap());
        let ses = Complex::new(
            z(),
            0,
            vec![PresentedModule::cyclic(z(), 2), zz(), zz()],
            vec![m(&[vec![1]]), m(&[vec![2]])],
        )
        .unwrap();
        assert!(ses.is_exact().unwrap());
    }

    #[test]
    fn chain_map_examples() {
        let d = Arc::new(Complex::disc(&zz(), 0));
        assert!(ChainMap::identity(&d).verify());
        let s = Arc::new(Complex::sphere(&zz(), 0));
        let bad = ChainMap::new(d.clone(), s.clone(), vec![m(&[vec![1]]), Matrix::zeros(0, 1)]);
        assert_eq!(bad.unwrap_err(), Error::NotChainMap { degree: 1 });
        let s1 = Arc::new(Complex::sphere(&zz(), 1));
        let epi = ChainMap::new(d.clone(), s1, vec![Matrix::zeros(0, 1), m(&[vec![1]])]).unwrap();
        assert!(epi.is_epi());
        let (k, mu) = chain_kernel(&epi).unwrap();
        assert!(k.homology(0).unwrap().module.is_isomorphic(&zz()));
        assert!(epi.compose(&mu).unwrap().is_zero());
    }

    #[test]
    fn lifting_chain_maps() {
        // sphere(Z, 1) lifts to disc(Z, 0) only through the zero map
        let d = Arc::new(Complex::disc(&zz(), 0));
        let s1 = Arc::new(Complex::sphere(&zz(), 1));
        let epi = ChainMap::new(d.clone(), s1.clone(), vec![Matrix::zeros(0, 1), m(&[vec![1]])]).unwrap();
        let id = ChainMap::identity(&s1);
        let out = lift_chain_maps(&[id, ChainMap::zero(&s1, &s1)], &epi).unwrap();
        assert!(out[0].is_none());
        assert!(out[1].as_ref().unwrap().is_zero());
    }
}
