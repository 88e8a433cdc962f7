use super::certificate::{cm_certificate, CMCertificate};
use super::hsop::{component_pool, restrict_hsop, search_hsop, verify_hsop, Hsop};
use super::presentation::{decompose_over_subring, present_subgroup_algebra, AlgebraPresentation, Subring};
use super::secondary::{build_secondaries_g, subgroup_secondaries, SecondaryBuild, SecondarySearch, SecondarySet};
use super::setting::{Ambient, Setting};
use crate::error::Result;
use crate::fixtures::printed;
use crate::gf2::MatrixGroup;
use crate::groebner::PresentedQuotient;
use crate::poly::Polynomial;

/// Degrees of the hsop searched for the Sylow 2-subgroup.
pub const SYLOW_HSOP_DEGREES: [u32; 6] = [1, 1, 2, 2, 2, 4];

/// Fresh secondaries of the full group are only sought up to this degree.
pub const FRESH_SECONDARY_BOUND: u32 = 7;

/// Every stage of the construction of `F2[a..f]^G`, from the primaries on the
/// permutation module to the secondaries of `G`.
#[derive(Clone, Debug)]
pub struct Reproduction {
    /// Primaries on `w1..w7`, as printed.
    pub permutation_primaries: Hsop,
    /// Their restriction to `a..f`.
    pub primaries: Hsop,
    pub sylow: MatrixGroup,
    pub sylow_hsop: Hsop,
    pub sylow_secondaries: SecondarySet,
    pub certificate: CMCertificate,
    pub presentation: AlgebraPresentation,
    /// `f_1..f_6` written in the presentation generators.
    pub primary_expressions: Vec<Polynomial>,
    pub quotient: PresentedQuotient,
    pub subring: Subring,
    pub secondaries: SecondaryBuild,
}

impl Reproduction {
    pub fn run(setting: &Setting) -> Result<Self> {
        let omega = Ambient::W.ring();
        let quartic = Ambient::WPrime.ring();
        let printed_f: Vec<Polynomial> =
            printed::F_HAT.iter().map(|t| Polynomial::parse(t, &omega)).collect::<Result<_>>()?;
        let permutation_primaries = verify_hsop(&printed_f, &setting.on_omega)?;
        let primaries = restrict_hsop(setting, &permutation_primaries)?;

        let sylow = setting.sylow2(Ambient::WPrime);
        let pool = component_pool(&sylow, &quartic, &SYLOW_HSOP_DEGREES)?;
        let sylow_hsop = search_hsop(&sylow, &SYLOW_HSOP_DEGREES, &pool)?;
        let sylow_series = setting.quartic_series(&setting.sylow2)?;
        let sylow_secondaries = subgroup_secondaries(&sylow, &sylow_hsop, &sylow_series)?;
        let certificate = cm_certificate(&setting.on_quartic, &sylow, &sylow_hsop, &sylow_secondaries)?;

        let presentation = present_subgroup_algebra(&sylow_hsop, &sylow_secondaries)?;
        let mut subring = presentation.subring(&sylow);
        let primary_expressions = primaries
            .polynomials
            .iter()
            .map(|p| decompose_over_subring(p, &mut subring))
            .collect::<Result<Vec<_>>>()?;
        let quotient = presentation.quotient(&primary_expressions)?;

        let series = setting.quartic_series(&setting.all_indices())?;
        let secondaries = build_secondaries_g(SecondarySearch {
            group: &setting.on_quartic,
            primaries: &primaries,
            series: &series,
            subring: &mut subring,
            quotient: &quotient,
            fresh_degree_bound: FRESH_SECONDARY_BOUND,
        })?;
        Ok(Reproduction {
            permutation_primaries,
            primaries,
            sylow,
            sylow_hsop,
            sylow_secondaries,
            certificate,
            presentation,
            primary_expressions,
            quotient,
            subring,
            secondaries,
        })
    }

    /// The secondaries that are not products of others, `g_1` included.
    pub fn generator_secondaries(&self) -> Vec<usize> {
        self.secondaries.set.fresh()
    }
}
