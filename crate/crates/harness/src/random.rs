//! Random instances. Differentials are built through kernels so that
//! `d∘d = 0` holds by construction instead of by rejection.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use subproj_core::complex::{ChainMap, Complex};
use subproj_core::homotopy::{chain_maps_group, HomotopyWitness};
use subproj_core::modules::{free_cover, hom_module, kernel, ModuleMorphism, PresentedModule};
use subproj_core::{Matrix, Result};

use crate::config::TrialConfig;

/// Which modules a generator may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Any,
    Free,
}

pub fn random_entry<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R) -> BigInt {
    match cfg.ring.modulus() {
        Some(m) => BigInt::from(rng.gen_range(0..m)),
        None => {
            let b = cfg.entry_bound as i64;
            BigInt::from(rng.gen_range(-b..=b))
        }
    }
}

pub fn random_matrix<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| random_entry(cfg, rng)).collect();
    Matrix::from_vec(rows, cols, data)
}

pub fn random_module<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R, shape: Shape) -> PresentedModule {
    // zero modules make most questions trivial, so keep them rare
    let g = if cfg.max_generators == 0 || rng.gen_bool(0.1) { 0 } else { rng.gen_range(1..=cfg.max_generators) };
    random_module_with(cfg, rng, g, shape)
}

pub fn random_module_with<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R, g: usize, shape: Shape) -> PresentedModule {
    if g == 0 || shape == Shape::Free || rng.gen_bool(0.35) {
        return PresentedModule::free(cfg.ring, g);
    }
    let k = rng.gen_range(1..=g);
    PresentedModule::new(cfg.ring, random_matrix(cfg, rng, g, k))
}

fn small_coefficient<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R) -> BigInt {
    match cfg.ring.modulus() {
        Some(m) => BigInt::from(rng.gen_range(0..m)),
        None => BigInt::from(rng.gen_range(-2i64..=2)),
    }
}

/// A random element of `Hom(M, N)`.
pub fn random_morphism<R: Rng + ?Sized>(
    cfg: &TrialConfig,
    rng: &mut R,
    m: &Arc<PresentedModule>,
    n: &Arc<PresentedModule>,
) -> ModuleMorphism {
    let hom = hom_module(m, n);
    let coeffs: Vec<BigInt> = hom.generators.iter().map(|_| small_coefficient(cfg, rng)).collect();
    let f = hom.combine(&coeffs);
    ModuleMorphism::new(m.clone(), n.clone(), f.matrix().clone()).expect("Hom elements are well defined")
}

pub fn random_window<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R) -> (i64, usize) {
    (rng.gen_range(-1..=1), rng.gen_range(1..=cfg.max_window))
}

/// A random complex with window length at most `cfg.max_window`.
pub fn random_complex<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R) -> Result<Complex> {
    let (lo, len) = random_window(cfg, rng);
    random_complex_on(cfg, rng, lo, len, Shape::Any)
}

/// `d_{n+1}` is a random map into `ker d_n`, pushed forward along the inclusion.
pub fn random_complex_on<R: Rng + ?Sized>(
    cfg: &TrialConfig,
    rng: &mut R,
    lo: i64,
    len: usize,
    shape: Shape,
) -> Result<Complex> {
    let modules: Vec<Arc<PresentedModule>> = (0..len).map(|_| Arc::new(random_module(cfg, rng, shape))).collect();
    let mut diffs: Vec<ModuleMorphism> = Vec::with_capacity(len.saturating_sub(1));
    for k in 1..len {
        let d = if k == 1 {
            random_morphism(cfg, rng, &modules[1], &modules[0])
        } else {
            let (z, mu) = kernel(&diffs[k - 2]);
            let r = random_morphism(cfg, rng, &modules[k], &z);
            mu.compose(&r)?
        };
        diffs.push(d);
    }
    Complex::from_parts(cfg.ring, lo, modules, diffs)
}

/// A random exact complex: each new term covers the cycles below it,
/// plus a random extra summand; the top term is the last cycle module.
pub fn random_exact_complex<R: Rng + ?Sized>(cfg: &TrialConfig, rng: &mut R) -> Result<Complex> {
    let ring = cfg.ring;
    let (lo, len) = random_window(cfg, rng);
    if len == 1 {
        return Complex::new(ring, lo, vec![PresentedModule::zero(ring)], Vec::new());
    }
    let first = Arc::new(random_module(cfg, rng, Shape::Any));
    let mut modules = vec![first.clone()];
    let mut diffs = Vec::new();
    let mut cycles = (first.clone(), ModuleMorphism::identity(&first));
    for k in 1..len {
        let (z, mu) = cycles.clone();
        if k == len - 1 {
            modules.push(z);
            diffs.push(mu);
            break;
        }
        let (f, pi) = free_cover(&z);
        let room = cfg.max_generators.saturating_sub(f.generators());
        let extra = Arc::new(if room == 0 {
            PresentedModule::zero(ring)
        } else {
            let g = rng.gen_range(0..=room);
            random_module_with(cfg, rng, g, Shape::Any)
        });
        let rz = random_morphism(cfg, rng, &extra, &z);
        let sum = PresentedModule::direct_sum(ring, &[f.as_ref().clone(), extra.as_ref().clone()]);
        let to_z = pi.compose(&sum.projections[0])?.add(&rz.compose(&sum.projections[1])?)?;
        let d = mu.compose(&to_z)?;
        modules.push(sum.module.clone());
        cycles = kernel(&d);
        diffs.push(d);
    }
    Complex::from_parts(ring, lo, modules, diffs)
}

/// A random element of the chain maps `X → Y`.
pub fn random_chain_map<R: Rng + ?Sized>(
    cfg: &TrialConfig,
    rng: &mut R,
    x: &Arc<Complex>,
    y: &Arc<Complex>,
) -> Result<ChainMap> {
    let group = chain_maps_group(x, y, 0)?;
    let mut f = ChainMap::zero(x, y);
    for g in &group.generators {
        f = f.add(&g.scale(&small_coefficient(cfg, rng)))?;
    }
    Ok(f)
}

/// `f = ds + sd` for a random family `s_n: X_n → Y_{n+1}`.
pub fn random_null_homotopic<R: Rng + ?Sized>(
    cfg: &TrialConfig,
    rng: &mut R,
    x: &Arc<Complex>,
    y: &Arc<Complex>,
) -> Result<(ChainMap, HomotopyWitness)> {
    let (lo, hi) = x.window();
    let s: Vec<ModuleMorphism> = (lo..=hi)
        .map(|n| random_morphism(cfg, rng, &x.module(n), &y.module(n + 1)))
        .collect();
    let mut comps = Vec::with_capacity(s.len());
    for n in lo..=hi {
        let i = (n - lo) as usize;
        let mut f = y.differential(n + 1).compose(&s[i])?;
        if i > 0 {
            f = f.add(&s[i - 1].compose(&x.differential(n))?)?;
        }
        comps.push(ModuleMorphism::new(x.module(n), y.module(n), f.matrix().clone())?);
    }
    let f = ChainMap::from_morphisms(x.clone(), y.clone(), comps)?;
    Ok((f, HomotopyWitness::new(lo, s)))
}
