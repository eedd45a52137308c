//! Elements of the twisted algebras over `PB_n` and `M_n`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::poly::Polynomial2;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::monoid::Family;

/// `x^l y^p`, where `l` and `p` count the floating loops and paths of the
/// product graph of `a` and `b`.
pub fn twist(a: &Diagram, b: &Diagram) -> Result<Polynomial2> {
    let r = a.multiply(b)?;
    Ok(Polynomial2::monomial(r.loops, r.paths))
}

/// A finite formal sum of diagrams with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraElement {
    n: usize,
    family: Family,
    #[serde(serialize_with = "serialize_terms")]
    terms: BTreeMap<Diagram, Polynomial2>,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &BTreeMap<Diagram, Polynomial2>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(terms.len()))?;
    for (d, p) in terms {
        seq.serialize_element(&(d.to_string(), p))?;
    }
    seq.end()
}

fn check_family(family: Family) -> Result<()> {
    if matches!(family, Family::PB | Family::M) {
        Ok(())
    } else {
        Err(Error::FamilyMismatch(format!("no twisted algebra is provided for {family}")))
    }
}

impl AlgebraElement {
    pub fn zero(family: Family, n: usize) -> Result<Self> {
        check_family(family)?;
        Ok(AlgebraElement { n, family, terms: BTreeMap::new() })
    }

    pub fn basis(family: Family, d: &Diagram) -> Result<Self> {
        let mut e = Self::zero(family, d.degree())?;
        e.add_term(d.clone(), Polynomial2::one())?;
        Ok(e)
    }

    pub fn from_terms(
        family: Family,
        n: usize,
        terms: impl IntoIterator<Item = (Diagram, Polynomial2)>,
    ) -> Result<Self> {
        let mut e = Self::zero(family, n)?;
        for (d, p) in terms {
            e.add_term(d, p)?;
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, Polynomial2> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &Diagram) -> Polynomial2 {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, d: Diagram, p: Polynomial2) -> Result<()> {
        if d.degree() != self.n {
            return Err(Error::DegreeMismatch(self.n, d.degree()));
        }
        if !self.family.contains(&d) {
            return Err(Error::FamilyMismatch(format!("{d} is not in {}_{}", self.family, self.n)));
        }
        self.add_term_unchecked(d, &p);
        Ok(())
    }

    fn add_term_unchecked(&mut self, d: Diagram, p: &Polynomial2) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(e) => {
                *e += p;
                if e.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, p.clone());
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch(format!("{} vs {}", self.family, other.family)));
        }
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (d, p) in &other.terms {
            out.add_term_unchecked(d.clone(), p);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Polynomial2) -> Self {
        let mut out = AlgebraElement { n: self.n, family: self.family, terms: BTreeMap::new() };
        for (d, p) in &self.terms {
            out.add_term_unchecked(d.clone(), &(p * c));
        }
        out
    }

    /// The twisted product `α ⋆ β = τ(α, β) αβ`, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = AlgebraElement { n: self.n, family: self.family, terms: BTreeMap::new() };
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                let r = a.multiply(b)?;
                let coeff = &(p * q) * &Polynomial2::monomial(r.loops, r.paths);
                out.add_term_unchecked(r.product, &coeff);
            }
        }
        Ok(out)
    }

    /// Linear extension of the diagram involution.
    pub fn star(&self) -> Self {
        AlgebraElement {
            n: self.n,
            family: self.family,
            terms: self.terms.iter().map(|(d, p)| (d.star(), p.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, s: &str) -> Diagram {
        Diagram::parse_text(n, s).unwrap()
    }

    #[test]
    fn twist_examples() {
        let a = d(12, "{1,3},{2,2'},{5,9},{6,8},{10,11},{12,11'},{3',6'},{4',5'},{7',10'},{8',9'}");
        let b = d(12, "{2,3},{4,7'},{5,4'},{6,5'},{8,9},{10,12},{1',3'},{8',9'},{11',12'}");
        assert_eq!(twist(&a, &b).unwrap().to_string(), "x*y^2");
        assert_eq!(twist(&Diagram::identity(12), &a).unwrap(), Polynomial2::one());
        let t = d(2, "{1,2},{1',2'}");
        assert_eq!(twist(&t, &t).unwrap(), Polynomial2::x());
        let e = d(2, "{2,2'}");
        assert_eq!(twist(&e, &e).unwrap(), Polynomial2::y());

        let u = AlgebraElement::basis(Family::PB, &a).unwrap();
        let v = AlgebraElement::basis(Family::PB, &b).unwrap();
        let w = u.mul(&v).unwrap();
        assert_eq!(w.terms().len(), 1);
        assert_eq!(w.coefficient(&a.compose(&b)).to_string(), "x*y^2");
    }

    #[test]
    fn element_basics() {
        let t = d(2, "{1,2},{1',2'}");
        let one = AlgebraElement::basis(Family::M, &Diagram::identity(2)).unwrap();
        let u = AlgebraElement::from_terms(
            Family::M,
            2,
            [(t.clone(), Polynomial2::constant(3)), (Diagram::singletons(2), Polynomial2::y())],
        )
        .unwrap();
        assert_eq!(u.mul(&one).unwrap(), u);
        assert_eq!(one.mul(&u).unwrap(), u);
        let neg = u.scale(&Polynomial2::constant(-1));
        assert!(u.add(&neg).unwrap().is_zero());
        let sigma = d(2, "{1,2'},{2,1'}");
        assert!(matches!(AlgebraElement::basis(Family::M, &sigma), Err(Error::FamilyMismatch(_))));
        let pb = AlgebraElement::basis(Family::PB, &t).unwrap();
        assert!(matches!(pb.mul(&u), Err(Error::FamilyMismatch(_))));
        assert!(AlgebraElement::zero(Family::I, 2).is_err());
        let js = serde_json::to_string(&u).unwrap();
        assert!(js.contains("\"family\":\"M\""));
    }
}
