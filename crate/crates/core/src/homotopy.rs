//! Hom complexes, null-homotopies and constructions built from them.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{ChainMap, Complex, Homology};
use crate::error::{Error, Result};
use crate::linalg::{LinearSystem, Matrix, Unknown};
use crate::modules::{hom_module, image, kernel, HomModule, ModuleMorphism, PresentedModule};
use crate::par;
use crate::ring::sign_power;

/// One factor `Hom(X_i, Y_{i+n})` of the degree-`n` component.
#[derive(Clone, Debug)]
pub struct HomBlock {
    pub source_degree: i64,
    pub hom: HomModule,
    /// Position of the block's first generator in the component.
    pub offset: usize,
}

/// `Hom•(X, Y)` restricted to a window of degrees, with the block structure
/// needed to turn coordinates back into families `(ψ_i)`.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub source: Arc<Complex>,
    pub target: Arc<Complex>,
    pub complex: Arc<Complex>,
    blocks: Vec<Vec<HomBlock>>,
}

/// Degree range in which `Hom•(X, Y)` can be nonzero.
pub fn hom_window(x: &Complex, y: &Complex) -> (i64, i64) {
    (y.lo() - x.hi(), y.hi() - x.lo())
}

/// The full Hom complex.
pub fn hom_complex(x: &Arc<Complex>, y: &Arc<Complex>) -> Result<HomComplex> {
    let (lo, hi) = hom_window(x, y);
    HomComplex::build(x, y, lo, hi)
}

impl HomComplex {
    /// Components in degrees `lo..=hi` and the differentials between them.
    /// Generators of a component are ordered by source degree, then by the
    /// order inside each Hom module (source generator, then target generator).
    pub fn build(x: &Arc<Complex>, y: &Arc<Complex>, lo: i64, hi: i64) -> Result<Self> {
        if x.ring() != y.ring() {
            return Err(Error::RingMismatch(format!("{} vs {}", x.ring(), y.ring())));
        }
        let ring = x.ring();
        let pairs: Vec<(i64, i64)> = (lo..=hi)
            .flat_map(|n| (x.lo()..=x.hi()).filter(move |&i| y.in_window(i + n)).map(move |i| (n, i)))
            .collect();
        let homs = par::map(&pairs, |&(n, i)| hom_module(&x.module(i), &y.module(i + n)));
        let mut blocks: Vec<Vec<HomBlock>> = (lo..=hi).map(|_| Vec::new()).collect();
        for (&(n, i), hom) in pairs.iter().zip(homs) {
            let list = &mut blocks[(n - lo) as usize];
            let offset = list.last().map_or(0, |b: &HomBlock| b.offset + b.hom.generators.len());
            list.push(HomBlock {
                source_degree: i,
                hom,
                offset,
            });
        }
        let modules: Vec<Arc<PresentedModule>> = blocks
            .iter()
            .map(|list| {
                let parts: Vec<PresentedModule> = list.iter().map(|b| b.hom.module.as_ref().clone()).collect();
                PresentedModule::direct_sum(ring, &parts).module
            })
            .collect();
        let degrees: Vec<i64> = (lo + 1..=hi).collect();
        let diff_matrices = par::map(&degrees, |&n| {
            differential_matrix(x, y, n, &blocks[(n - lo) as usize], &blocks[(n - lo - 1) as usize], &modules[(n - lo - 1) as usize])
        });
        let mut diffs = Vec::with_capacity(degrees.len());
        for (&n, d) in degrees.iter().zip(diff_matrices) {
            let k = (n - lo) as usize;
            diffs.push(ModuleMorphism::new(modules[k].clone(), modules[k - 1].clone(), d?)?);
        }
        let complex = Arc::new(Complex::from_parts(ring, lo, modules, diffs)?);
        Ok(HomComplex {
            source: x.clone(),
            target: y.clone(),
            complex,
            blocks,
        })
    }

    pub fn blocks(&self, n: i64) -> &[HomBlock] {
        if self.complex.in_window(n) {
            &self.blocks[(n - self.complex.lo()) as usize]
        } else {
            &[]
        }
    }

    /// The family `(ψ_i: X_i → Y_{i+n})` with the given coordinates.
    pub fn family(&self, n: i64, coeffs: &[BigInt]) -> BTreeMap<i64, ModuleMorphism> {
        self.blocks(n)
            .iter()
            .map(|b| {
                let len = b.hom.generators.len();
                (b.source_degree, b.hom.combine(&coeffs[b.offset..b.offset + len]))
            })
            .collect()
    }

    /// Coordinates of a family `ψ_i: X_i → Y_{i+n}` given as matrices keyed
    /// by source degree; missing entries are zero.
    pub fn coordinates(&self, n: i64, family: &BTreeMap<i64, Matrix>) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for b in self.blocks(n) {
            match family.get(&b.source_degree) {
                Some(f) => out.extend(b.hom.coordinates(f)?),
                None => out.extend(std::iter::repeat_n(BigInt::zero(), b.hom.generators.len())),
            }
        }
        Ok(out)
    }

    /// Coordinates of a chain map `shift(X, n) → Y` in degree `n`.
    pub fn chain_map_coordinates(&self, n: i64, f: &ChainMap) -> Result<Vec<BigInt>> {
        let family = self
            .blocks(n)
            .iter()
            .map(|b| (b.source_degree, f.component(b.source_degree + n).matrix().clone()))
            .collect();
        self.coordinates(n, &family)
    }

    /// The chain map `shift(X, n) → Y` whose degree-`j` component is `ψ_{j-n}`.
    pub fn chain_map(&self, n: i64, coeffs: &[BigInt]) -> Result<ChainMap> {
        let fam = self.family(n, coeffs);
        let xs = Arc::new(self.source.shift(n));
        let comps = (xs.lo()..=xs.hi())
            .map(|j| match fam.get(&(j - n)) {
                Some(m) => m.matrix().clone(),
                None => Matrix::zeros(self.target.module(j).generators(), xs.module(j).generators()),
            })
            .collect();
        ChainMap::new(xs, self.target.clone(), comps)
    }
}

fn differential_matrix(
    x: &Complex,
    y: &Complex,
    n: i64,
    from: &[HomBlock],
    to: &[HomBlock],
    to_module: &PresentedModule,
) -> Result<Matrix> {
    let rows = to_module.generators();
    let cols: usize = from.iter().map(|b| b.hom.generators.len()).sum();
    let mut d = Matrix::zeros(rows, cols);
    let sign = BigInt::from(-sign_power(n));
    let find = |i: i64| to.iter().find(|b| b.source_degree == i);
    for b in from {
        let i = b.source_degree;
        for (k, g) in b.hom.generators.iter().enumerate() {
            let col = b.offset + k;
            // d^Y_{i+n} ∘ ψ_i lands in the block of source degree i
            if let Some(t) = find(i) {
                let m = y.differential(i + n).compose(g)?;
                for (r, c) in t.hom.coordinates(m.matrix())?.into_iter().enumerate() {
                    d[(t.offset + r, col)] += c;
                }
            }
            // −(−1)^n ψ_i ∘ d^X_{i+1} lands in the block of source degree i + 1
            if let Some(t) = find(i + 1) {
                let m = g.compose(&x.differential(i + 1))?.scale(&sign);
                for (r, c) in t.hom.coordinates(m.matrix())?.into_iter().enumerate() {
                    d[(t.offset + r, col)] += c;
                }
            }
        }
    }
    Ok(d.reduce(x.ring()))
}

/// `Z_n(Hom•(X, Y))`, i.e. chain maps `shift(X, n) → Y`.
#[derive(Clone, Debug)]
pub struct ChainMapGroup {
    pub module: Arc<PresentedModule>,
    pub generators: Vec<ChainMap>,
    pub hom: HomComplex,
}

pub fn chain_maps_group(x: &Arc<Complex>, y: &Arc<Complex>, n: i64) -> Result<ChainMapGroup> {
    let hom = HomComplex::build(x, y, n - 1, n)?;
    let (z, mu) = kernel(&hom.complex.differential(n));
    let generators = (0..z.generators())
        .map(|k| hom.chain_map(n, &mu.matrix().column(k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChainMapGroup {
        module: z,
        generators,
        hom,
    })
}

/// `H_n(Hom•(X, Y)) = Hom_K(shift(X, n), Y)`.
pub fn hom_k(x: &Arc<Complex>, y: &Arc<Complex>, n: i64) -> Result<Homology> {
    let hom = HomComplex::build(x, y, n - 1, n + 1)?;
    hom.complex.homology(n)
}

/// A family `s_n: X_n → Y_{n+1}` with `f = d s + s d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyWitness {
    lo: i64,
    maps: Vec<ModuleMorphism>,
}

impl HomotopyWitness {
    /// `s_lo, s_{lo+1}, …`; must be morphisms `X_n → Y_{n+1}`.
    pub fn new(lo: i64, maps: Vec<ModuleMorphism>) -> Self {
        HomotopyWitness { lo, maps }
    }

    /// The zero family for maps `X → Y`.
    pub fn zero(x: &Complex, y: &Complex) -> Self {
        HomotopyWitness {
            lo: x.lo(),
            maps: (x.lo()..=x.hi()).map(|n| ModuleMorphism::zero(&x.module(n), &y.module(n + 1))).collect(),
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn maps(&self) -> &[ModuleMorphism] {
        &self.maps
    }

    /// `s_n`, or `None` outside the stored range.
    pub fn get(&self, n: i64) -> Option<&ModuleMorphism> {
        if n < self.lo {
            return None;
        }
        self.maps.get((n - self.lo) as usize)
    }

    fn s(&self, n: i64, x: &Complex, y: &Complex) -> ModuleMorphism {
        match self.get(n) {
            Some(m) => m.clone(),
            None => ModuleMorphism::zero(&x.module(n), &y.module(n + 1)),
        }
    }

    /// Re-checks `f_n ≡ d^Y_{n+1} s_n + s_{n-1} d^X_n` on the padded window.
    pub fn check(&self, f: &ChainMap) -> Result<()> {
        let x = f.source();
        let y = f.target();
        for (k, m) in self.maps.iter().enumerate() {
            let n = self.lo + k as i64;
            if m.source().as_ref() != x.module(n).as_ref() || m.target().as_ref() != y.module(n + 1).as_ref() || !m.verify() {
                return Err(Error::InvalidWitness { degree: n });
            }
        }
        let lo = x.lo().min(self.lo) - 1;
        let hi = x.hi().max(self.lo + self.maps.len() as i64) + 1;
        for n in lo..=hi {
            let a = y.differential(n + 1).compose(&self.s(n, x, y))?;
            let b = self.s(n - 1, x, y).compose(&x.differential(n))?;
            if !a.add(&b)?.equals(&f.component(n))? {
                return Err(Error::InvalidWitness { degree: n });
            }
        }
        Ok(())
    }
}

/// Null-homotopies for a batch of parallel chain maps, solved as one system
/// in all the `s_n` at once.
pub fn null_homotopies(fs: &[ChainMap]) -> Result<Vec<Option<HomotopyWitness>>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let x = first.source().clone();
    let y = first.target().clone();
    for f in fs {
        if f.source() != &x || f.target() != &y {
            return Err(Error::DimensionMismatch("null_homotopies needs parallel maps".into()));
        }
    }
    let (lo, hi) = x.window();
    let mut sys = LinearSystem::new(x.ring());
    let s: Vec<Unknown> = (lo..=hi)
        .map(|k| sys.unknown(y.module(k + 1).generators(), x.module(k).generators()))
        .collect();
    let mut shapes = Vec::new();
    let mut f_eq = Vec::new();
    for (idx, k) in (lo..=hi).enumerate() {
        let (xk, yk, yk1) = (x.module(k), y.module(k), y.module(k + 1));
        let w = sys.unknown(yk1.relations().cols(), xk.relations().cols());
        let e = sys.equation(yk1.generators(), xk.relations().cols());
        sys.right_term(e, s[idx], xk.relations().clone());
        sys.left_term(e, yk1.relations().neg(), w);
        shapes.push((yk1.generators(), xk.relations().cols()));

        let t = sys.unknown(yk.relations().cols(), xk.generators());
        let e = sys.equation(yk.generators(), xk.generators());
        sys.left_term(e, y.differential(k + 1).matrix().clone(), s[idx]);
        if idx > 0 {
            sys.right_term(e, s[idx - 1], x.differential(k).matrix().clone());
        }
        sys.left_term(e, yk.relations().neg(), t);
        f_eq.push(shapes.len());
        shapes.push((yk.generators(), xk.generators()));
    }
    let rhs: Vec<Vec<Matrix>> = fs
        .iter()
        .map(|f| {
            let mut r: Vec<Matrix> = shapes.iter().map(|&(a, b)| Matrix::zeros(a, b)).collect();
            for (idx, k) in (lo..=hi).enumerate() {
                r[f_eq[idx]] = f.component(k).matrix().clone();
            }
            r
        })
        .collect();
    let sols = sys.solve_each(&rhs)?;
    sols.into_iter()
        .map(|sol| {
            sol.map(|sol| {
                let maps = (lo..=hi)
                    .zip(&s)
                    .map(|(k, &u)| ModuleMorphism::new(x.module(k), y.module(k + 1), sys.extract(&sol, u)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(HomotopyWitness { lo, maps })
            })
            .transpose()
        })
        .collect()
}

/// A witness `s` with `f = ds + sd`, or `None` when `f` is not null-homotopic.
pub fn is_null_homotopic(f: &ChainMap) -> Result<Option<HomotopyWitness>> {
    Ok(null_homotopies(std::slice::from_ref(f))?.pop().flatten())
}

/// `X ≅ ⊕_n disc(B_n, n)` with `B_n = im d_{n+1}`.
#[derive(Clone, Debug)]
pub struct ContractibleDecomposition {
    pub summands: Vec<(i64, Arc<PresentedModule>)>,
    pub discs: Arc<Complex>,
    pub to_discs: ChainMap,
    pub from_discs: ChainMap,
}

#[derive(Clone, Debug)]
pub struct Contraction {
    pub witness: HomotopyWitness,
    pub decomposition: ContractibleDecomposition,
}

/// Decides contractibility; on success returns a contracting homotopy and
/// an explicit decomposition into discs with inverse isomorphisms.
pub fn is_contractible(x: &Arc<Complex>) -> Result<Option<Contraction>> {
    let id = ChainMap::identity(x);
    let Some(witness) = is_null_homotopic(&id)? else {
        return Ok(None);
    };
    let decomposition = decompose(x, &witness)?;
    Ok(Some(Contraction {
        witness,
        decomposition,
    }))
}

// With id = ds + sd, t = s d s also contracts X and satisfies t∘t = 0. Then
// x ↦ (d t x, ±d x) and (b, c) ↦ b ± t c are inverse isomorphisms between X
// and the sum of discs on the boundaries.
fn decompose(x: &Arc<Complex>, s: &HomotopyWitness) -> Result<ContractibleDecomposition> {
    let ring = x.ring();
    let (lo, hi) = x.window();
    let t: BTreeMap<i64, Matrix> = (lo - 1..=hi + 1)
        .map(|n| {
            let sn = s.s(n, x, x);
            let t = sn.compose(&x.differential(n + 1)).and_then(|a| a.compose(&sn));
            t.map(|t| (n, t.matrix().clone()))
        })
        .collect::<Result<_>>()?;
    let mut summands = Vec::new();
    let mut discs = Vec::new();
    for n in (lo..hi).rev() {
        let (b, _) = image(&x.differential(n + 1));
        summands.push((n, b.clone()));
        discs.push(Complex::disc(&b, n));
    }
    let q = if discs.is_empty() {
        Arc::new(Complex::zero(ring).shift(lo))
    } else {
        Complex::direct_sum(ring, &discs)?.complex
    };
    let tau = |n: i64| BigInt::from(sign_power(n - 1));
    let gens = |n: i64| x.module(n).generators();
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    for n in lo..=hi {
        // Q_n = B_n ⊕ B_{n-1}; B_n is generated by X_{n+1}, B_{n-1} by X_n
        let top = if n < hi { gens(n + 1) } else { 0 };
        let bottom = if n > lo { gens(n) } else { 0 };
        let mut p = Matrix::zeros(top + bottom, gens(n));
        if top > 0 {
            p.set_block(0, 0, &t[&n]);
        }
        if bottom > 0 {
            p.set_block(top, 0, &Matrix::identity(gens(n)).scale(&tau(n)));
        }
        phi.push(p);
        let mut r = Matrix::zeros(gens(n), top + bottom);
        if top > 0 {
            r.set_block(0, 0, x.differential(n + 1).matrix());
        }
        if bottom > 0 {
            let c = t[&(n - 1)].mul(x.differential(n).matrix()).scale(&tau(n));
            r.set_block(0, top, &c);
        }
        psi.push(r);
    }
    if q.window() != x.window() {
        return Err(Error::Internal("disc sum has an unexpected window".into()));
    }
    let to_discs = ChainMap::new(x.clone(), q.clone(), phi)?;
    let from_discs = ChainMap::new(q.clone(), x.clone(), psi)?;
    if !from_discs.compose(&to_discs)?.equals(&ChainMap::identity(x))?
        || !to_discs.compose(&from_discs)?.equals(&ChainMap::identity(&q))?
    {
        return Err(Error::Internal("disc decomposition is not an isomorphism".into()));
    }
    Ok(ContractibleDecomposition {
        summands,
        discs: q,
        to_discs,
        from_discs,
    })
}

/// Mapping cone of `g: shift(M, -1) → K` with the sequence `0 → K → cone → M → 0`.
#[derive(Clone, Debug)]
pub struct MappingCone {
    pub cone: Arc<Complex>,
    pub base: Arc<Complex>,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// Degree `n` of the cone is `K_n ⊕ M_n` with differential
/// `[[d^K_n, g_{n-1}], [0, d^M_n]]`.
pub fn mapping_cone(g: &ChainMap) -> Result<MappingCone> {
    let ring = g.ring();
    let k = g.target().clone();
    let m = Arc::new(g.source().shift(1));
    let lo = k.lo().min(m.lo());
    let hi = k.hi().max(m.hi());
    let sums: Vec<_> = (lo..=hi)
        .map(|n| PresentedModule::direct_sum(ring, &[k.module(n).as_ref().clone(), m.module(n).as_ref().clone()]))
        .collect();
    let modules: Vec<_> = sums.iter().map(|s| s.module.clone()).collect();
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let (kn, kp) = (k.module(n).generators(), k.module(n - 1).generators());
        let (mn, mp) = (m.module(n).generators(), m.module(n - 1).generators());
        let mut d = Matrix::zeros(kp + mp, kn + mn);
        d.set_block(0, 0, k.differential(n).matrix());
        d.set_block(0, kn, g.component(n - 1).matrix());
        d.set_block(kp, kn, m.differential(n).matrix());
        let i = (n - lo) as usize;
        diffs.push(ModuleMorphism::new(modules[i].clone(), modules[i - 1].clone(), d)?);
    }
    let cone = Arc::new(Complex::from_parts(ring, lo, modules, diffs)?);
    let inclusion = ChainMap::new(
        k.clone(),
        cone.clone(),
        (k.lo()..=k.hi()).map(|n| sums[(n - lo) as usize].injections[0].matrix().clone()).collect(),
    )?;
    let projection = ChainMap::new(
        cone.clone(),
        m.clone(),
        (lo..=hi).map(|n| sums[(n - lo) as usize].projections[1].matrix().clone()).collect(),
    )?;
    Ok(MappingCone {
        cone,
        base: m,
        inclusion,
        projection,
    })
}

/// `s_n = β_n ∘ α_n` through a module `L_{n+1}`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub degree: i64,
    pub alpha: ModuleMorphism,
    pub beta: ModuleMorphism,
}

/// `f = h ∘ g` through the contractible complex `Z`.
#[derive(Clone, Debug)]
pub struct ContractibleFactorization {
    pub z: Arc<Complex>,
    pub g: ChainMap,
    pub h: ChainMap,
    /// `L_{n+1}` indexed by `n`.
    pub factors: BTreeMap<i64, Arc<PresentedModule>>,
}

/// Factors a null-homotopic `f` through `Z` with `Z_n = L_{n+1} ⊕ L_n` and
/// `d^Z(t, z) = (z, 0)`, where `g_n = (α_n, α_{n-1} d^X_n)` and
/// `h_n(t, z) = d^Y_{n+1} β_n t + β_{n-1} z`. Degrees without a supplied
/// factorization use `L_{n+1} = Y_{n+1}`, `α_n = s_n`, `β_n = id`.
pub fn factor_through_contractible(
    f: &ChainMap,
    s: &HomotopyWitness,
    factorizations: &[Factorization],
) -> Result<ContractibleFactorization> {
    s.check(f)?;
    let x = f.source();
    let y = f.target();
    let ring = f.ring();
    let given: BTreeMap<i64, &Factorization> = factorizations.iter().map(|fa| (fa.degree, fa)).collect();
    let klo = x.lo().min(y.lo() - 1);
    let khi = x.hi().max(y.hi() - 1);
    let mut alpha: BTreeMap<i64, ModuleMorphism> = BTreeMap::new();
    let mut beta: BTreeMap<i64, ModuleMorphism> = BTreeMap::new();
    for k in klo..=khi {
        let sk = s.s(k, x, y);
        match given.get(&k) {
            Some(fa) => {
                let ok = fa.alpha.source().as_ref() == x.module(k).as_ref()
                    && fa.beta.target().as_ref() == y.module(k + 1).as_ref()
                    && fa.alpha.target() == fa.beta.source()
                    && fa.beta.compose(&fa.alpha)?.equals(&sk)?;
                if !ok {
                    return Err(Error::InvalidFactorization { degree: k });
                }
                alpha.insert(k, fa.alpha.clone());
                beta.insert(k, fa.beta.clone());
            }
            None => {
                beta.insert(k, ModuleMorphism::identity(&y.module(k + 1)));
                alpha.insert(k, sk);
            }
        }
    }
    for k in given.keys() {
        if !(klo..=khi).contains(k) {
            return Err(Error::InvalidFactorization { degree: *k });
        }
    }
    let zero = Arc::new(PresentedModule::zero(ring));
    let l = |k: i64| beta.get(&k).map_or(zero.clone(), |b| b.source().clone());
    let zlo = klo;
    let zhi = khi + 1;
    let sums: Vec<_> = (zlo..=zhi)
        .map(|n| PresentedModule::direct_sum(ring, &[l(n).as_ref().clone(), l(n - 1).as_ref().clone()]))
        .collect();
    let modules: Vec<_> = sums.iter().map(|s| s.module.clone()).collect();
    let mut diffs = Vec::new();
    for n in zlo + 1..=zhi {
        let (a, b) = (l(n).generators(), l(n - 1).generators());
        let c = l(n - 2).generators();
        let mut d = Matrix::zeros(b + c, a + b);
        d.set_block(0, a, &Matrix::identity(b));
        let i = (n - zlo) as usize;
        diffs.push(ModuleMorphism::new(modules[i].clone(), modules[i - 1].clone(), d)?);
    }
    let z = Arc::new(Complex::from_parts(ring, zlo, modules, diffs)?);

    let alpha_at = |k: i64| alpha.get(&k).cloned().unwrap_or_else(|| ModuleMorphism::zero(&x.module(k), &l(k)));
    let g_comps = (x.lo()..=x.hi())
        .map(|n| {
            let top = alpha_at(n).matrix().clone();
            let bottom = alpha_at(n - 1).compose(&x.differential(n))?.matrix().clone();
            Ok(top.vstack(&bottom))
        })
        .collect::<Result<Vec<_>>>()?;
    let g = ChainMap::new(x.clone(), z.clone(), g_comps)?;

    let beta_at = |k: i64| beta.get(&k).cloned().unwrap_or_else(|| ModuleMorphism::zero(&l(k), &y.module(k + 1)));
    let h_comps = (zlo..=zhi)
        .map(|n| {
            let left = y.differential(n + 1).compose(&beta_at(n))?.matrix().clone();
            let right = beta_at(n - 1).matrix().clone();
            Ok(left.hstack(&right))
        })
        .collect::<Result<Vec<_>>>()?;
    let h = ChainMap::new(z.clone(), y.clone(), h_comps)?;
    if !h.compose(&g)?.equals(f)? {
        return Err(Error::Internal("h∘g does not recompose f".into()));
    }
    let factors = (klo..=khi).map(|k| (k, l(k))).collect();
    Ok(ContractibleFactorization { z, g, h, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn z() -> Ring {
        Ring::Integers
    }

    fn zz() -> PresentedModule {
        PresentedModule::free(z(), 1)
    }

    fn arc(c: Complex) -> Arc<Complex> {
        Arc::new(c)
    }

    fn mult2() -> Arc<Complex> {
        arc(Complex::new(z(), 0, vec![zz(), zz()], vec![Matrix::from_rows(&[vec![2]])]).unwrap())
    }

    #[test]
    fn hom_complex_examples() {
        let s = arc(Complex::sphere(&zz(), 0));
        let n = mult2();
        let h = hom_complex(&s, &n).unwrap();
        for d in 0..=1 {
            assert!(h.complex.module(d).is_isomorphic(&n.module(d)));
        }
        let zero = arc(Complex::zero(z()));
        assert!(hom_complex(&n, &zero).unwrap().complex.is_zero());
        let d = arc(Complex::disc(&zz(), 0));
        assert!(hom_complex(&d, &d).unwrap().complex.is_exact().unwrap());
    }

    #[test]
    fn chain_map_group_examples() {
        let s = arc(Complex::sphere(&zz(), 0));
        let g = chain_maps_group(&s, &s, 0).unwrap();
        assert!(g.module.is_isomorphic(&zz()));
        assert!(g.generators[0].equals(&ChainMap::identity(&s)).unwrap()
            || g.generators[0].neg().equals(&ChainMap::identity(&s)).unwrap());

        let z2 = PresentedModule::cyclic(z(), 2);
        let g = chain_maps_group(&arc(Complex::disc(&z2, 0)), &arc(Complex::sphere(&z2, 0)), 0).unwrap();
        assert!(g.module.is_zero());

        let g = chain_maps_group(&s, &arc(Complex::disc(&zz(), 0)), 0).unwrap();
        assert!(g.module.is_isomorphic(&zz()));
    }

    #[test]
    fn null_homotopy_examples() {
        let d = arc(Complex::disc(&zz(), 0));
        let id = ChainMap::identity(&d);
        let w = is_null_homotopic(&id).unwrap().unwrap();
        w.check(&id).unwrap();
        let s = arc(Complex::sphere(&zz(), 0));
        assert!(is_null_homotopic(&ChainMap::identity(&s)).unwrap().is_none());
        // any map between discs
        let a = arc(Complex::disc(&PresentedModule::cyclic(z(), 4), 0));
        let b = arc(Complex::disc(&PresentedModule::cyclic(z(), 2), 0));
        let f = ChainMap::new(a, b, vec![Matrix::from_rows(&[vec![1]]), Matrix::from_rows(&[vec![1]])]).unwrap();
        let w = is_null_homotopic(&f).unwrap().unwrap();
        w.check(&f).unwrap();
    }

    #[test]
    fn hom_k_examples() {
        let s = arc(Complex::sphere(&zz(), 0));
        let n = mult2();
        assert!(hom_k(&s, &n, 0).unwrap().module.is_isomorphic(&PresentedModule::cyclic(z(), 2)));
        assert!(hom_k(&s, &n, 1).unwrap().module.is_zero());
        let p = arc(Complex::direct_sum(z(), &[Complex::disc(&zz(), 0), Complex::disc(&zz(), 1)]).unwrap().complex.as_ref().clone());
        for k in -2..=2 {
            assert!(hom_k(&n, &p, k).unwrap().module.is_zero());
        }
    }

    #[test]
    fn contractible_examples() {
        let d = arc(Complex::disc(&PresentedModule::cyclic(z(), 6), 3));
        let c = is_contractible(&d).unwrap().unwrap();
        assert_eq!(c.decomposition.summands.len(), 1);
        assert!(is_contractible(&arc(Complex::sphere(&zz(), 0))).unwrap().is_none());
        assert!(is_contractible(&mult2()).unwrap().is_none());
        let sum = Complex::direct_sum(z(), &[Complex::disc(&zz(), 0), Complex::disc(&PresentedModule::cyclic(z(), 3), 1)])
            .unwrap();
        assert!(is_contractible(&sum.complex).unwrap().is_some());
    }

    #[test]
    fn cone_examples() {
        let k = mult2();
        let m = arc(Complex::sphere(&zz(), 0));
        let g = ChainMap::zero(&arc(m.shift(-1)), &k);
        let c = mapping_cone(&g).unwrap();
        assert_eq!(c.cone.module(0).generators(), 2);
        // cone of the identity, read as shift(shift(X, 1), -1) → X, is contractible
        let x = mult2();
        let g = ChainMap::identity(&x);
        let c = mapping_cone(&g).unwrap();
        assert!(is_contractible(&c.cone).unwrap().is_some());
        assert!(c.projection.compose(&c.inclusion).unwrap().is_zero());
    }

    #[test]
    fn lemma_factorization() {
        let d = arc(Complex::disc(&zz(), 0));
        let id = ChainMap::identity(&d);
        let w = is_null_homotopic(&id).unwrap().unwrap();
        let fac = factor_through_contractible(&id, &w, &[]).unwrap();
        assert!(fac.h.compose(&fac.g).unwrap().equals(&id).unwrap());
        assert!(is_contractible(&fac.z).unwrap().is_some());
        for n in -1..=2 {
            assert_eq!(fac.z.module(n).generators(), d.module(n + 1).generators() + d.module(n).generators());
        }
        let zero = ChainMap::zero(&d, &d);
        let fac = factor_through_contractible(&zero, &HomotopyWitness::zero(&d, &d), &[]).unwrap();
        assert!(fac.g.is_zero());
        assert!(matches!(
            factor_through_contractible(&id, &HomotopyWitness::zero(&d, &d), &[]),
            Err(Error::InvalidWitness { .. })
        ));
    }
}
