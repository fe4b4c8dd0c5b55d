//! Finitely presented modules, their morphisms and Hom modules.
//!
//! A module is the cokernel of its relation matrix `A: R^k → R^g`; the columns
//! of `A` are relators among the `g` generators. A morphism `M → N` is a
//! generator-level matrix `F` together with a certificate `X` for
//! `F·A_M = A_N·X`, which says that relators are sent to relators.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{column_span_basis, kernel_basis, smith_normal_form, solve_right, LinearSystem, Matrix};
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PresentedModule {
    ring: Ring,
    relations: Matrix,
}

impl PresentedModule {
    /// Module with `relations.rows()` generators. Entries are reduced to
    /// canonical representatives of `ring`.
    pub fn new(ring: Ring, relations: Matrix) -> Self {
        PresentedModule {
            ring,
            relations: relations.reduce(ring),
        }
    }

    pub fn free(ring: Ring, rank: usize) -> Self {
        PresentedModule::new(ring, Matrix::zeros(rank, 0))
    }

    pub fn zero(ring: Ring) -> Self {
        PresentedModule::free(ring, 0)
    }

    /// `R/(d)` on one generator.
    pub fn cyclic(ring: Ring, d: impl Into<BigInt>) -> Self {
        PresentedModule::new(ring, Matrix::from_vec(1, 1, vec![d.into()]))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn has_no_generators(&self) -> bool {
        self.generators() == 0
    }

    /// Whether the column vectors `v` (in generator coordinates) are all zero in the module.
    pub fn is_zero_element(&self, v: &Matrix) -> bool {
        assert_eq!(v.rows(), self.generators());
        if v.reduce(self.ring).is_zero() {
            return true;
        }
        matches!(solve_right(&self.relations, v, self.ring), Ok(Some(_)))
    }

    /// Whether the module is the zero module (every generator is a relator).
    pub fn is_zero(&self) -> bool {
        self.is_zero_element(&Matrix::identity(self.generators()))
    }

    /// Whether the module is free on its given generators.
    pub fn is_visibly_free(&self) -> bool {
        self.relations.reduce(self.ring).is_zero()
    }

    /// Relation matrix as seen by a `Z`-module: over `Z/m` the relators
    /// `m·e_i` are appended.
    pub(crate) fn integer_relations(&self) -> Matrix {
        match self.ring {
            Ring::Integers => self.relations.clone(),
            Ring::IntegersMod(m) => self
                .relations
                .hstack(&Matrix::scalar(self.generators(), BigInt::from(m))),
        }
    }

    /// Non-unit invariant factors of the module, `0` standing for a free
    /// summand of `Z`. Over `Z/m` every factor divides `m` and a free summand
    /// shows up as `m`. Two modules are isomorphic iff these lists agree.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let a = self.integer_relations();
        let g = self.generators();
        let snf = smith_normal_form(&a);
        let factors = snf.invariant_factors();
        let mut out: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
        out.extend(std::iter::repeat_n(BigInt::zero(), g - snf.rank()));
        out
    }

    /// Number of elements, or `None` for an infinite module.
    pub fn order(&self) -> Option<BigInt> {
        let f = self.invariant_factors();
        if f.iter().any(Zero::is_zero) {
            return None;
        }
        Some(f.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    pub fn is_isomorphic(&self, other: &PresentedModule) -> bool {
        self.ring == other.ring && self.invariant_factors() == other.invariant_factors()
    }

    /// Direct sum with its canonical injections and projections.
    pub fn direct_sum(ring: Ring, parts: &[PresentedModule]) -> DirectSum {
        let rels: Vec<&Matrix> = parts.iter().map(|p| &p.relations).collect();
        let sum = Arc::new(PresentedModule::new(ring, Matrix::block_diagonal(&rels)));
        let total = sum.generators();
        let mut injections = Vec::with_capacity(parts.len());
        let mut projections = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for p in parts {
            let g = p.generators();
            let mut inj = Matrix::zeros(total, g);
            inj.set_block(offset, 0, &Matrix::identity(g));
            let part = Arc::new(p.clone());
            injections.push(
                ModuleMorphism::new(part.clone(), sum.clone(), inj.clone())
                    .expect("injection into a direct sum is well defined"),
            );
            projections.push(
                ModuleMorphism::new(sum.clone(), part, inj.transpose())
                    .expect("projection from a direct sum is well defined"),
            );
            offset += g;
        }
        DirectSum {
            module: sum,
            injections,
            projections,
        }
    }

    /// Removes generators that some relator expresses through the others (a
    /// unit coefficient), then canonicalizes the remaining relators.
    pub fn simplify(self: &Arc<Self>) -> Simplified {
        let ring = self.ring;
        let g = self.generators();
        let mut rel = self.relations.clone();
        // to: old generators in new coordinates; from: new generators in old coordinates
        let mut to = Matrix::identity(g);
        let mut from = Matrix::identity(g);
        while let Some((i, j)) = find_unit(&rel, ring) {
            let n = rel.rows();
            let u_inv = unit_inverse(&rel[(i, j)], ring);
            let mut step = Matrix::zeros(n - 1, n);
            let mut incl = Matrix::zeros(n, n - 1);
            let mut k = 0;
            for l in 0..n {
                if l == i {
                    continue;
                }
                step[(k, l)] = BigInt::one();
                step[(k, i)] = -(&u_inv * &rel[(l, j)]);
                incl[(l, k)] = BigInt::one();
                k += 1;
            }
            rel = step.mul(&rel).reduce(ring);
            to = step.mul(&to).reduce(ring);
            from = from.mul(&incl);
        }
        let rel = column_span_basis(&rel.reduce(ring).nonzero_columns(), ring).nonzero_columns();
        let simple = Arc::new(PresentedModule::new(ring, rel));
        Simplified {
            to_simple: ModuleMorphism::new(self.clone(), simple.clone(), to)
                .expect("elimination map is well defined"),
            from_simple: ModuleMorphism::new(simple.clone(), self.clone(), from)
                .expect("inclusion of kept generators is well defined"),
            module: simple,
        }
    }
}

fn find_unit(rel: &Matrix, ring: Ring) -> Option<(usize, usize)> {
    for j in 0..rel.cols() {
        for i in 0..rel.rows() {
            if ring.is_unit(&rel[(i, j)]) {
                return Some((i, j));
            }
        }
    }
    None
}

fn unit_inverse(u: &BigInt, ring: Ring) -> BigInt {
    match ring {
        Ring::Integers => u.clone(),
        Ring::IntegersMod(m) => {
            let m = BigInt::from(m);
            u.modpow(&(totient_exponent(&m) - 1), &m)
        }
    }
}

// an exponent e with u^e = 1 for every unit u mod m
fn totient_exponent(m: &BigInt) -> BigInt {
    let mut n = u64::try_from(m).expect("modulus fits in u64");
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    BigInt::from(phi)
}

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module[{}; {} gens, relations {:?}]",
            self.ring,
            self.generators(),
            self.relations
        )
    }
}

pub struct DirectSum {
    pub module: Arc<PresentedModule>,
    pub injections: Vec<ModuleMorphism>,
    pub projections: Vec<ModuleMorphism>,
}

/// A presentation with fewer generators together with mutually inverse isomorphisms.
pub struct Simplified {
    pub module: Arc<PresentedModule>,
    pub to_simple: ModuleMorphism,
    pub from_simple: ModuleMorphism,
}

#[derive(Clone)]
pub struct ModuleMorphism {
    source: Arc<PresentedModule>,
    target: Arc<PresentedModule>,
    matrix: Matrix,
    witness: Matrix,
}

// Structural equality of the data; the witness is a by-product and is ignored.
impl PartialEq for ModuleMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.matrix == other.matrix
    }
}

impl Eq for ModuleMorphism {}

impl fmt::Debug for ModuleMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism[{} -> {} gens: {:?}]",
            self.source.generators(),
            self.target.generators(),
            self.matrix
        )
    }
}

impl ModuleMorphism {
    /// Validates `matrix` as a morphism `source → target` and stores the
    /// certificate. Fails with `IllDefined` if some relator of the source is
    /// not sent into the relators of the target.
    pub fn new(
        source: Arc<PresentedModule>,
        target: Arc<PresentedModule>,
        matrix: Matrix,
    ) -> Result<Self> {
        let ring = source.ring;
        if target.ring != ring {
            return Err(Error::RingMismatch(format!("{} vs {}", ring, target.ring)));
        }
        if matrix.shape() != (target.generators(), source.generators()) {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators(),
                source.generators()
            )));
        }
        let matrix = matrix.reduce(ring);
        let image = matrix.mul(&source.relations).reduce(ring);
        let witness = match solve_right(&target.relations, &image, ring)? {
            Some(x) => x.reduce(ring),
            None => {
                return Err(Error::IllDefined(
                    "relators are not sent into the target's relators".into(),
                ))
            }
        };
        Ok(ModuleMorphism {
            source,
            target,
            matrix,
            witness,
        })
    }

    /// Convenience wrapper taking modules by value.
    pub fn from_modules(
        source: &PresentedModule,
        target: &PresentedModule,
        matrix: Matrix,
    ) -> Result<Self> {
        ModuleMorphism::new(Arc::new(source.clone()), Arc::new(target.clone()), matrix)
    }

    pub fn identity(m: &Arc<PresentedModule>) -> Self {
        let g = m.generators();
        ModuleMorphism {
            source: m.clone(),
            target: m.clone(),
            matrix: Matrix::identity(g),
            witness: Matrix::identity(m.relations.cols()),
        }
    }

    pub fn zero(source: &Arc<PresentedModule>, target: &Arc<PresentedModule>) -> Self {
        ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(target.generators(), source.generators()),
            witness: Matrix::zeros(target.relations.cols(), source.relations.cols()),
        }
    }

    pub fn source(&self) -> &Arc<PresentedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedModule> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn witness(&self) -> &Matrix {
        &self.witness
    }

    pub fn ring(&self) -> Ring {
        self.source.ring
    }

    /// Re-checks `F·A_M = A_N·X` exactly.
    pub fn verify(&self) -> bool {
        let ring = self.ring();
        let lhs = self.matrix.mul(&self.source.relations).reduce(ring);
        let rhs = self.target.relations.mul(&self.witness).reduce(ring);
        lhs == rhs
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ModuleMorphism) -> Result<ModuleMorphism> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::DimensionMismatch(
                "composition of non-adjacent morphisms".into(),
            ));
        }
        let ring = self.ring();
        Ok(ModuleMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix).reduce(ring),
            witness: self.witness.mul(&first.witness).reduce(ring),
        })
    }

    pub fn add(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.check_parallel(other)?;
        let ring = self.ring();
        Ok(ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix).reduce(ring),
            witness: self.witness.add(&other.witness).reduce(ring),
        })
    }

    pub fn sub(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModuleMorphism {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> ModuleMorphism {
        let ring = self.ring();
        ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(c).reduce(ring),
            witness: self.witness.scale(c).reduce(ring),
        }
    }

    fn check_parallel(&self, other: &ModuleMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch(
                "morphisms have different source or target".into(),
            ));
        }
        Ok(())
    }

    /// Equality as elements of `Hom(M, N)`: `F − F'` has columns in the
    /// relator span of the target.
    pub fn equals(&self, other: &ModuleMorphism) -> Result<bool> {
        self.check_parallel(other)?;
        Ok(self
            .target
            .is_zero_element(&self.matrix.sub(&other.matrix)))
    }

    pub fn is_zero(&self) -> bool {
        self.target.is_zero_element(&self.matrix)
    }

    /// Surjective as a map of modules: the image together with the target's
    /// relators spans every generator.
    pub fn is_epi(&self) -> bool {
        let span = self.matrix.hstack(&self.target.relations);
        matches!(
            solve_right(&span, &Matrix::identity(self.target.generators()), self.ring()),
            Ok(Some(_))
        )
    }

    pub fn is_mono(&self) -> bool {
        kernel(self).0.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.is_epi() && self.is_mono()
    }
}

/// Kernel of `f` with its canonical monomorphism `μ: K → source`.
pub fn kernel(f: &ModuleMorphism) -> (Arc<PresentedModule>, ModuleMorphism) {
    let ring = f.ring();
    let m = &f.source;
    let n = &f.target;
    let gm = m.generators();
    // x with F·x ∈ im A_N
    let big = f.matrix.hstack(&n.relations.neg());
    let k = kernel_basis(&big, ring);
    let pre = k.block(0, 0, gm, k.cols());
    let gens = column_span_basis(&pre, ring).nonzero_columns();
    let r = gens.cols();
    // relators: c with G·c ∈ im A_M
    let rel_sys = gens.hstack(&m.relations.neg());
    let kk = kernel_basis(&rel_sys, ring);
    let rel = kk.block(0, 0, r, kk.cols());
    let raw = Arc::new(PresentedModule::new(
        ring,
        column_span_basis(&rel.reduce(ring), ring).nonzero_columns(),
    ));
    let mu_raw = ModuleMorphism::new(raw.clone(), m.clone(), gens)
        .expect("kernel inclusion is well defined");
    let s = raw.simplify();
    let mu = mu_raw
        .compose(&s.from_simple)
        .expect("simplification composes with the inclusion");
    (s.module, mu)
}

/// Cokernel of `f`: the target presented with the columns of `F` as extra
/// relators, and the quotient map `ε` (identity on generators).
pub fn cokernel(f: &ModuleMorphism) -> (Arc<PresentedModule>, ModuleMorphism) {
    let ring = f.ring();
    let n = &f.target;
    let rel = n.relations.hstack(&f.matrix);
    let c = Arc::new(PresentedModule::new(ring, rel));
    let eps = ModuleMorphism::new(n.clone(), c.clone(), Matrix::identity(n.generators()))
        .expect("quotient map is well defined");
    (c, eps)
}

/// Image of `f`, generated by the images of the source generators, with the
/// inclusion into the target.
pub fn image(f: &ModuleMorphism) -> (Arc<PresentedModule>, ModuleMorphism) {
    let ring = f.ring();
    let gm = f.source.generators();
    let big = f.matrix.hstack(&f.target.relations.neg());
    let k = kernel_basis(&big, ring);
    let rel = k.block(0, 0, gm, k.cols());
    let img = Arc::new(PresentedModule::new(
        ring,
        column_span_basis(&rel.reduce(ring), ring).nonzero_columns(),
    ));
    let incl = ModuleMorphism::new(img.clone(), f.target.clone(), f.matrix.clone())
        .expect("image inclusion is well defined");
    (img, incl)
}

/// `Hom_R(M, N)` as a presented module with one morphism per generator.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub source: Arc<PresentedModule>,
    pub target: Arc<PresentedModule>,
    pub module: Arc<PresentedModule>,
    pub generators: Vec<ModuleMorphism>,
}

impl HomModule {
    /// Coordinates of `f` in terms of the generators, so that
    /// `Σ c_k·generators[k] ≡ f`.
    pub fn coordinates(&self, f: &Matrix) -> Result<Vec<BigInt>> {
        let ring = self.module.ring();
        let gn = self.target.generators();
        let gm = self.source.generators();
        assert_eq!(f.shape(), (gn, gm));
        let r = self.generators.len();
        let mut cols = Matrix::zeros(gn * gm, r);
        for (k, g) in self.generators.iter().enumerate() {
            for (i, v) in g.matrix.vectorize().into_iter().enumerate() {
                cols[(i, k)] = v;
            }
        }
        let relators = Matrix::identity(gm).kron(&self.target.relations);
        let a = cols.hstack(&relators);
        let b = Matrix::column_vector(f.vectorize());
        match solve_right(&a, &b, ring)? {
            Some(x) => Ok((0..r).map(|k| ring.reduce(&x[(k, 0)])).collect()),
            None => Err(Error::IllDefined(
                "matrix is not a morphism between these modules".into(),
            )),
        }
    }

    pub fn combine(&self, coeffs: &[BigInt]) -> ModuleMorphism {
        assert_eq!(coeffs.len(), self.generators.len());
        let mut acc = ModuleMorphism::zero(&self.source, &self.target);
        for (c, g) in coeffs.iter().zip(&self.generators) {
            if !c.is_zero() {
                acc = acc.add(&g.scale(c)).expect("parallel morphisms");
            }
        }
        acc
    }
}

pub fn hom_module(m: &Arc<PresentedModule>, n: &Arc<PresentedModule>) -> HomModule {
    let ring = m.ring();
    let (gm, km) = (m.generators(), m.relations.cols());
    let (gn, kn) = (n.generators(), n.relations.cols());

    // well-defined F: F·A_M − A_N·X = 0, solved for (F, X) jointly
    let mut sys = LinearSystem::new(ring);
    let f = sys.unknown(gn, gm);
    let x = sys.unknown(kn, km);
    let eq = sys.equation(gn, km);
    sys.right_term(eq, f, m.relations.clone());
    sys.left_term(eq, n.relations.neg(), x);
    let sols = sys.homogeneous_generators();
    let mut pre = Matrix::zeros(gn * gm, sols.len());
    for (k, s) in sols.iter().enumerate() {
        for (i, v) in sys.extract(s, f).vectorize().into_iter().enumerate() {
            pre[(i, k)] = v;
        }
    }
    let gens = column_span_basis(&pre, ring).nonzero_columns();
    let r = gens.cols();

    // relators: combinations that are zero morphisms, i.e. equal A_N·Y
    let relators = Matrix::identity(gm).kron(&n.relations);
    let big = gens.hstack(&relators.neg());
    let kk = kernel_basis(&big, ring);
    let rel = kk.block(0, 0, r, kk.cols());
    let raw = Arc::new(PresentedModule::new(
        ring,
        column_span_basis(&rel.reduce(ring), ring).nonzero_columns(),
    ));
    let s = raw.simplify();
    let from = s.from_simple.matrix();
    let generators = (0..s.module.generators())
        .map(|k| {
            let mut v = vec![BigInt::zero(); gn * gm];
            for (j, slot) in (0..r).map(|j| (j, &from[(j, k)])) {
                if slot.is_zero() {
                    continue;
                }
                for (i, acc) in v.iter_mut().enumerate() {
                    *acc += slot * &gens[(i, j)];
                }
            }
            ModuleMorphism::new(m.clone(), n.clone(), Matrix::unvectorize(gn, gm, &v))
                .expect("Hom generators are well defined")
        })
        .collect();
    HomModule {
        source: m.clone(),
        target: n.clone(),
        module: s.module,
        generators,
    }
}

/// Free module on the generators of `n` with the canonical epimorphism onto `n`.
pub fn free_cover(n: &Arc<PresentedModule>) -> (Arc<PresentedModule>, ModuleMorphism) {
    let f = Arc::new(PresentedModule::free(n.ring(), n.generators()));
    let pi = ModuleMorphism::new(f.clone(), n.clone(), Matrix::identity(n.generators()))
        .expect("free cover is well defined");
    (f, pi)
}

/// For each `f: M → N`, some `h: M → B` with `π∘h ≡ f`, or `None` when `f`
/// does not lift. All targets share one coefficient matrix.
pub fn lift_many(fs: &[ModuleMorphism], pi: &ModuleMorphism) -> Result<Vec<Option<ModuleMorphism>>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let m = first.source.clone();
    let n = pi.target.clone();
    let b = pi.source.clone();
    for f in fs {
        if f.target.as_ref() != n.as_ref() || f.source.as_ref() != m.as_ref() {
            return Err(Error::DimensionMismatch(
                "lift target must be the codomain of π".into(),
            ));
        }
    }
    let ring = m.ring();
    let (gm, km) = (m.generators(), m.relations.cols());
    let (gb, kb) = (b.generators(), b.relations.cols());
    let kn = n.relations.cols();
    let gn = n.generators();

    let mut sys = LinearSystem::new(ring);
    let h = sys.unknown(gb, gm);
    let w = sys.unknown(kb, km);
    let t = sys.unknown(kn, gm);
    let wd = sys.equation(gb, km);
    sys.right_term(wd, h, m.relations.clone());
    sys.left_term(wd, b.relations.neg(), w);
    let lift = sys.equation(gn, gm);
    sys.left_term(lift, pi.matrix.clone(), h);
    sys.left_term(lift, n.relations.neg(), t);

    let rhs: Vec<Vec<Matrix>> = fs
        .iter()
        .map(|f| vec![Matrix::zeros(gb, km), f.matrix.clone()])
        .collect();
    let sols = sys.solve_each(&rhs)?;
    sols.into_iter()
        .map(|s| {
            s.map(|s| ModuleMorphism::new(m.clone(), b.clone(), sys.extract(&s, h)))
                .transpose()
        })
        .collect()
}

/// Some `h` with `π∘h ≡ f`, or `None` if `f` does not lift along `π`.
pub fn lifts_through(f: &ModuleMorphism, pi: &ModuleMorphism) -> Result<Option<ModuleMorphism>> {
    Ok(lift_many(std::slice::from_ref(f), pi)?.pop().flatten())
}

/// Evidence for or against `N ∈ Pr⁻¹(M)` at module level.
#[derive(Clone, Debug)]
pub enum ModuleCertificate {
    /// Each Hom generator `f` with a lift `h` through the free cover of `N`.
    Yes { lifts: Vec<(ModuleMorphism, ModuleMorphism)> },
    /// A generator of `Hom(M, N)` that does not lift through the free cover.
    No { counterexample: ModuleMorphism },
}

impl ModuleCertificate {
    pub fn is_yes(&self) -> bool {
        matches!(self, ModuleCertificate::Yes { .. })
    }
}

/// Whether every morphism `M → N` factors through a projective module.
///
/// Liftable morphisms form a submodule of `Hom(M, N)` and a morphism factors
/// through some projective iff it lifts along the fixed epimorphism from the
/// free cover, so it is enough to lift each Hom generator along that one map.
pub fn is_subprojective_module(
    m: &Arc<PresentedModule>,
    n: &Arc<PresentedModule>,
) -> Result<ModuleCertificate> {
    let hom = hom_module(m, n);
    let (_, pi) = free_cover(n);
    let lifts = lift_many(&hom.generators, &pi)?;
    let mut out = Vec::with_capacity(lifts.len());
    for (f, h) in hom.generators.iter().zip(lifts) {
        match h {
            Some(h) => out.push((f.clone(), h)),
            None => {
                return Ok(ModuleCertificate::No {
                    counterexample: f.clone(),
                })
            }
        }
    }
    Ok(ModuleCertificate::Yes { lifts: out })
}
