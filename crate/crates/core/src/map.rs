//! Continuous maps between finite spaces.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::space::FiniteSpace;

/// A map whose continuity (monotonicity of the specialization orders) was
/// checked when it was built.
#[derive(Debug, Clone)]
pub struct SpaceMap {
    source: FiniteSpace,
    target: FiniteSpace,
    assignment: Vec<usize>,
}

impl SpaceMap {
    pub fn new(source: &FiniteSpace, target: &FiniteSpace, assignment: Vec<usize>) -> Result<SpaceMap> {
        if assignment.len() != source.len() {
            return Err(Error::NotContinuous(format!(
                "assignment has {} entries for {} points",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= target.len()) {
            return Err(Error::NotContinuous(format!("target index {bad} out of range")));
        }
        for i in 0..source.len() {
            for j in source.up_of_point(i).iter() {
                if !target.leq(assignment[i], assignment[j]) {
                    return Err(Error::NotContinuous(format!(
                        "{} <= {} but {} !<= {}",
                        source.label(i),
                        source.label(j),
                        target.label(assignment[i]),
                        target.label(assignment[j])
                    )));
                }
            }
        }
        Ok(SpaceMap { source: source.clone(), target: target.clone(), assignment })
    }

    pub fn from_labels<S: AsRef<str>>(source: &FiniteSpace, target: &FiniteSpace, pairs: &[(S, S)]) -> Result<SpaceMap> {
        let mut a = vec![usize::MAX; source.len()];
        for (x, y) in pairs {
            a[source.index_of(x.as_ref())?] = target.index_of(y.as_ref())?;
        }
        if let Some(i) = a.iter().position(|&v| v == usize::MAX) {
            return Err(Error::NotContinuous(format!("`{}` is unassigned", source.label(i))));
        }
        SpaceMap::new(source, target, a)
    }

    pub fn identity(x: &FiniteSpace) -> SpaceMap {
        SpaceMap { source: x.clone(), target: x.clone(), assignment: (0..x.len()).collect() }
    }

    pub fn constant(x: &FiniteSpace, y: &FiniteSpace, value: usize) -> SpaceMap {
        SpaceMap { source: x.clone(), target: y.clone(), assignment: vec![value; x.len()] }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn image(&self, a: Bits) -> Bits {
        Bits::from_iter(a.iter().map(|i| self.assignment[i]))
    }

    pub fn preimage(&self, b: Bits) -> Bits {
        Bits::from_iter((0..self.source.len()).filter(|&i| b.contains(self.assignment[i])))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SpaceMap) -> Result<SpaceMap> {
        if self.target.id() != g.source.id() {
            return Err(Error::EndpointMismatch);
        }
        Ok(SpaceMap {
            source: self.source.clone(),
            target: g.target.clone(),
            assignment: self.assignment.iter().map(|&y| g.assignment[y]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let img = self.image(self.source.full());
        img.len() == self.source.len()
    }

    /// Order embedding: `x <= y` iff `f(x) <= f(y)`.
    pub fn is_order_embedding(&self) -> bool {
        let n = self.source.len();
        (0..n).all(|i| (0..n).all(|j| self.source.leq(i, j) == self.target.leq(self.assignment[i], self.assignment[j])))
    }

    /// Same assignment and same endpoints.
    pub fn same_as(&self, other: &SpaceMap) -> bool {
        self.source.id() == other.source.id() && self.target.id() == other.target.id() && self.assignment == other.assignment
    }

    pub fn describe(&self) -> Vec<(String, String)> {
        (0..self.source.len())
            .map(|i| (self.source.label(i).to_string(), self.target.label(self.assignment[i]).to_string()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_check() {
        let s = FiniteSpace::sierpinski();
        assert!(SpaceMap::new(&s, &s, vec![1, 0]).is_err());
        assert!(SpaceMap::new(&s, &s, vec![0, 1]).is_ok());
        let f = SpaceMap::new(&s, &s, vec![1, 1]).unwrap();
        let g = SpaceMap::identity(&s);
        assert_eq!(f.then(&g).unwrap().assignment(), &[1, 1]);
    }
}
