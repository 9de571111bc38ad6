//! The superalgebra isomorphism from the degenerate affine Hecke-Clifford
//! algebra to `C_n (x) saH`, with scalars solved inside a fixed ansatz, and
//! the transport of candidate bases through it.

mod solve;
mod tensor;
mod transport;

pub use solve::{beta, cyc_sqrt, solve_generator_images, CycScalar, GeneratorImages, ImageTarget};
pub use tensor::{clifford_is_unit, CliffordElement, TensorAlgebra, TensorElement, TensorMono};
pub use transport::{transport_independence, verify_iso, IsoReport};

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::One;
use thiserror::Error;

use crate::cocenter::CocenterError;
use crate::hecke::{relations_in, HeckeClifford, PBWElement, PBWMono};
use crate::spin::{CocycleTable, SpinHecke};
use crate::weyl::{WeylError, WeylGroup, WeylType};
use crate::{Cyclotomic, Rational};

#[derive(Debug, Error)]
pub enum MoritaError {
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Cocenter(#[from] CocenterError),
}

/// The map `Phi` for one solution of the generator images, from the
/// Hecke-Clifford algebra at `u = 1`, `v = v0`.
pub struct Morita {
    pub images: GeneratorImages,
    pub hc: HeckeClifford<Cyclotomic>,
    pub tensor: TensorAlgebra<Cyclotomic>,
    s: Vec<TensorElement<Cyclotomic>>,
    x: Vec<TensorElement<Cyclotomic>>,
    c: Vec<TensorElement<Cyclotomic>>,
    cache: RwLock<HashMap<PBWMono, TensorElement<Cyclotomic>>>,
}

impl Morita {
    /// Solves and takes the first solution.
    pub fn new(ty: WeylType, v0: &Rational) -> Result<Self, MoritaError> {
        let images = solve_generator_images(ty, v0)?.swap_remove(0);
        Self::from_images(images)
    }

    pub fn from_images(images: GeneratorImages) -> Result<Self, MoritaError> {
        let ty = images.ty;
        let hc = HeckeClifford::<Cyclotomic>::specialized(ty, images.u0.clone(), images.v0.clone())?;
        let group: Arc<WeylGroup> = hc.group().clone();
        let cocycle = Arc::new(CocycleTable::compute(group));
        let tensor = TensorAlgebra::new(SpinHecke::new(cocycle, Cyclotomic::one(), images.spin_u.clone()));
        let k = hc.b_node().clone();
        let target = ImageTarget::new(&tensor, &images.kappa, &images.lambda, images.u0.clone(), k);
        let (s, x, c) = (target.s.clone(), target.x.clone(), target.c.clone());
        Ok(Morita { images, hc, tensor, s, x, c, cache: RwLock::new(HashMap::new()) })
    }

    pub fn ty(&self) -> WeylType {
        self.images.ty
    }

    /// Every defining relation, with whether its image vanishes.
    pub fn relation_checks(&self) -> Vec<(String, bool)> {
        let k = self.hc.b_node().clone();
        let target = ImageTarget::new(&self.tensor, &self.images.kappa, &self.images.lambda, self.images.u0.clone(), k);
        relations_in(&target).into_iter().map(|r| (r.name.clone(), r.lhs == r.rhs)).collect()
    }

    /// `Phi(x^alpha c^eps w)`.
    pub fn phi_mono(&self, m: &PBWMono) -> TensorElement<Cyclotomic> {
        if let Some(v) = self.cache.read().expect("cache lock").get(m) {
            return v.clone();
        }
        let group = self.hc.group();
        let mut factors = Vec::new();
        for (i, &a) in m.alpha.iter().enumerate().take(self.ty().n) {
            factors.extend(std::iter::repeat_n(self.x[i].clone(), a as usize));
        }
        for i in 0..self.ty().n {
            if m.eps & (1 << i) != 0 {
                factors.push(self.c[i].clone());
            }
        }
        for &i in group.word(m.w) {
            factors.push(self.s[i as usize - 1].clone());
        }
        let out = self.tensor.product(&factors);
        self.cache.write().expect("cache lock").insert(*m, out.clone());
        out
    }

    pub fn phi(&self, a: &PBWElement<Cyclotomic>) -> TensorElement<Cyclotomic> {
        let mut out = TensorElement::zero();
        for (m, x) in a.terms() {
            out.add_scaled(&self.phi_mono(m), x);
        }
        out
    }
}
