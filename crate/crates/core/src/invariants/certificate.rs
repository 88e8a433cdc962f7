use super::hsop::Hsop;
use super::secondary::SecondarySet;
use crate::error::{Error, Result};
use crate::gf2::MatrixGroup;

/// A Cohen-Macaulay certificate for an invariant ring in characteristic 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CMCertificate {
    /// `s·|H| = Π d_i` for an hsop of degrees `d_i` and `s` module generators.
    ProductCriterion { group_order: usize, secondary_count: usize, degrees: Vec<u32> },
    /// The ring of a group containing a subgroup of odd index with a certificate.
    SubgroupTransfer { group_order: usize, base: Box<CMCertificate> },
    /// Group order prime to the characteristic.
    OddOrder { group_order: usize },
}

impl CMCertificate {
    pub fn group_order(&self) -> usize {
        match self {
            CMCertificate::ProductCriterion { group_order, .. }
            | CMCertificate::SubgroupTransfer { group_order, .. }
            | CMCertificate::OddOrder { group_order } => *group_order,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CMCertificate::ProductCriterion { .. } => "product-criterion",
            CMCertificate::SubgroupTransfer { .. } => "subgroup-transfer",
            CMCertificate::OddOrder { .. } => "odd-order",
        }
    }

    /// Group orders from the base of the chain to this certificate.
    pub fn chain(&self) -> Vec<usize> {
        match self {
            CMCertificate::SubgroupTransfer { group_order, base } => {
                let mut c = base.chain();
                c.push(*group_order);
                c
            }
            _ => vec![self.group_order()],
        }
    }

    /// Recomputes every arithmetic witness in the chain.
    pub fn validate(&self) -> Result<()> {
        match self {
            CMCertificate::ProductCriterion { group_order, secondary_count, degrees } => {
                let product: u64 = degrees.iter().map(|&d| d as u64).product();
                let lhs = (*secondary_count as u64) * (*group_order as u64);
                if lhs != product || degrees.contains(&0) {
                    return Err(Error::WitnessFails(format!("{secondary_count}·{group_order} = {lhs} ≠ {product}")));
                }
                Ok(())
            }
            CMCertificate::SubgroupTransfer { group_order, base } => {
                let sub = base.group_order();
                if sub == 0 || group_order % sub != 0 {
                    return Err(Error::WitnessFails(format!("{sub} does not divide {group_order}")));
                }
                let index = group_order / sub;
                if index % 2 == 0 {
                    return Err(Error::EvenIndex(index));
                }
                base.validate()
            }
            CMCertificate::OddOrder { group_order } => {
                if group_order % 2 == 0 {
                    return Err(Error::WitnessFails(format!("group order {group_order} is even")));
                }
                Ok(())
            }
        }
    }
}

impl std::fmt::Display for CMCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CMCertificate::ProductCriterion { group_order, secondary_count, degrees } => {
                let product: u64 = degrees.iter().map(|&d| d as u64).product();
                let factors: Vec<String> = degrees.iter().map(u32::to_string).collect();
                write!(f, "{secondary_count}·{group_order} = {product} = {}", factors.join("·"))
            }
            CMCertificate::SubgroupTransfer { group_order, base } => {
                write!(f, "[{base}] → index {} → order {group_order}", group_order / base.group_order().max(1))
            }
            CMCertificate::OddOrder { group_order } => write!(f, "odd order {group_order}"),
        }
    }
}

/// The product criterion for `secondaries` over `hsop` as invariants of `group`.
pub fn product_criterion(group: &MatrixGroup, hsop: &Hsop, secondaries: &SecondarySet) -> Result<CMCertificate> {
    let cert = CMCertificate::ProductCriterion {
        group_order: group.order(),
        secondary_count: secondaries.len(),
        degrees: hsop.degree_multiset(),
    };
    cert.validate()?;
    Ok(cert)
}

/// Transfers a certificate for `subgroup` to `group`.
pub fn transfer(group: &MatrixGroup, subgroup: &MatrixGroup, base: CMCertificate) -> Result<CMCertificate> {
    if base.group_order() != subgroup.order() || group.indices_of(subgroup).is_none() {
        return Err(Error::NotASubgroup);
    }
    let cert = CMCertificate::SubgroupTransfer { group_order: group.order(), base: Box::new(base) };
    cert.validate()?;
    Ok(cert)
}

/// Product criterion for `subgroup`, then transfer to `group`.
pub fn cm_certificate(
    group: &MatrixGroup,
    subgroup: &MatrixGroup,
    hsop: &Hsop,
    secondaries: &SecondarySet,
) -> Result<CMCertificate> {
    if group.order() % 2 == 1 {
        return Ok(CMCertificate::OddOrder { group_order: group.order() });
    }
    transfer(group, subgroup, product_criterion(subgroup, hsop, secondaries)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_recompute() {
        let base = CMCertificate::ProductCriterion { group_order: 8, secondary_count: 4, degrees: vec![1, 1, 2, 2, 2, 4] };
        assert!(base.validate().is_ok());
        let up = CMCertificate::SubgroupTransfer { group_order: 168, base: Box::new(base.clone()) };
        assert!(up.validate().is_ok());
        assert_eq!(up.chain(), vec![8, 168]);
        let bad = CMCertificate::ProductCriterion { group_order: 8, secondary_count: 3, degrees: vec![1, 1, 2, 2, 2, 4] };
        assert!(matches!(bad.validate(), Err(Error::WitnessFails(_))));
        let even = CMCertificate::SubgroupTransfer { group_order: 16, base: Box::new(base) };
        assert_eq!(even.validate(), Err(Error::EvenIndex(2)));
        assert!(CMCertificate::OddOrder { group_order: 21 }.validate().is_ok());
    }
}
