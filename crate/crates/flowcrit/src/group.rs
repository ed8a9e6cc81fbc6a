//! Finite abelian groups presented as products of cyclic factors.
//!
//! A [`Group`] is an ordered list of factor orders, each at least 2; an
//! element is the tuple of its residues. Keeping elements as concrete
//! residue tuples (rather than opaque handles) keeps flow search loops
//! allocation-free and lets boundaries serialize directly.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group must have at least one cyclic factor")]
    Empty,
    #[error("cyclic factor order {0} is below 2")]
    FactorTooSmall(u16),
    #[error("cannot parse {0:?} as a factor order")]
    BadFactor(String),
}

/// Residues of one group element, aligned with the group's factor list.
///
/// Stored inline for the common case of at most four factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    residues: SmallVec<[u16; 4]>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u16] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// A finite abelian group, the product of cyclic groups of the given orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Group {
    orders: Vec<u16>,
}

impl Group {
    pub fn new(orders: &[u16]) -> Result<Group, GroupError> {
        if orders.is_empty() {
            return Err(GroupError::Empty);
        }
        for &k in orders {
            if k < 2 {
                return Err(GroupError::FactorTooSmall(k));
            }
        }
        Ok(Group {
            orders: orders.to_vec(),
        })
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: u16) -> Result<Group, GroupError> {
        Group::new(&[n])
    }

    pub fn factor_orders(&self) -> &[u16] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Total number of elements.
    pub fn order(&self) -> usize {
        self.orders.iter().map(|&k| k as usize).product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            residues: self.orders.iter().map(|_| 0).collect(),
        }
    }

    /// Builds an element from residues, reducing each one modulo its factor.
    ///
    /// # Panics
    /// Panics when the residue count differs from the factor count.
    pub fn element(&self, residues: &[u16]) -> GroupElement {
        assert_eq!(
            residues.len(),
            self.orders.len(),
            "element arity {} does not match group rank {}",
            residues.len(),
            self.orders.len()
        );
        GroupElement {
            residues: residues
                .iter()
                .zip(&self.orders)
                .map(|(&r, &k)| r % k)
                .collect(),
        }
    }

    /// # Panics
    /// Panics when the arities of `a` and `b` do not match this group.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        assert_eq!(a.residues.len(), self.orders.len(), "element arity mismatch");
        assert_eq!(b.residues.len(), self.orders.len(), "element arity mismatch");
        GroupElement {
            residues: self
                .orders
                .iter()
                .zip(a.residues.iter().zip(&b.residues))
                .map(|(&k, (&x, &y))| {
                    let s = x as u32 + y as u32;
                    (s % k as u32) as u16
                })
                .collect(),
        }
    }

    /// # Panics
    /// Panics when the arity of `a` does not match this group.
    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        assert_eq!(a.residues.len(), self.orders.len(), "element arity mismatch");
        GroupElement {
            residues: self
                .orders
                .iter()
                .zip(&a.residues)
                .map(|(&k, &x)| if x == 0 { 0 } else { k - x })
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// All elements in lexicographic residue order; zero comes first.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }

    pub fn nonzero_elements(&self) -> Vec<GroupElement> {
        self.elements().into_iter().filter(|e| !e.is_zero()).collect()
    }

    /// Lexicographic rank of an element; inverse of [`Group::element_at`].
    pub fn index_of(&self, e: &GroupElement) -> usize {
        assert_eq!(e.residues.len(), self.orders.len(), "element arity mismatch");
        let mut idx = 0usize;
        for (&r, &k) in e.residues.iter().zip(&self.orders) {
            idx = idx * k as usize + r as usize;
        }
        idx
    }

    /// Element with the given lexicographic rank (`0` is the zero element).
    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        assert!(idx < self.order(), "element index {idx} out of range");
        let mut residues: SmallVec<[u16; 4]> = self.orders.iter().map(|_| 0).collect();
        for j in (0..self.orders.len()).rev() {
            let k = self.orders[j] as usize;
            residues[j] = (idx % k) as u16;
            idx /= k;
        }
        GroupElement { residues }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// Parses the CLI spelling: comma-separated factor orders, e.g. `3` or `2,2`.
impl FromStr for Group {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Group, GroupError> {
        let mut orders = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let k: u16 = part
                .parse()
                .map_err(|_| GroupError::BadFactor(part.to_string()))?;
            orders.push(k);
        }
        Group::new(&orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_degenerate_groups() {
        assert_eq!(Group::new(&[]), Err(GroupError::Empty));
        assert_eq!(Group::new(&[3, 1]), Err(GroupError::FactorTooSmall(1)));
        assert_eq!(Group::new(&[0]), Err(GroupError::FactorTooSmall(0)));
    }

    #[test]
    fn klein_four_group_tables() {
        let g = Group::new(&[2, 2]).unwrap();
        assert_eq!(g.order(), 4);
        let a = g.element(&[1, 0]);
        let b = g.element(&[0, 1]);
        assert_eq!(g.add(&a, &b), g.element(&[1, 1]));
        assert_eq!(g.add(&a, &a), g.zero());
        assert_eq!(g.neg(&a), a);
    }

    #[test]
    fn element_order_is_lexicographic_with_zero_first() {
        let g = Group::new(&[2, 3]).unwrap();
        let all: Vec<Vec<u16>> = g.elements().iter().map(|e| e.residues().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
        assert_eq!(g.nonzero_elements().len(), 5);
    }

    #[test]
    fn parses_cli_spellings() {
        assert_eq!("3".parse::<Group>().unwrap(), Group::cyclic(3).unwrap());
        assert_eq!("2,2".parse::<Group>().unwrap(), Group::new(&[2, 2]).unwrap());
        assert!("".parse::<Group>().is_err());
        assert!("3,x".parse::<Group>().is_err());
    }

    #[test]
    #[should_panic(expected = "arity")]
    fn mixed_arity_panics() {
        let g3 = Group::cyclic(3).unwrap();
        let g22 = Group::new(&[2, 2]).unwrap();
        let _ = g3.add(&g3.zero(), &g22.zero());
    }

    proptest! {
        #[test]
        fn group_axioms_hold(orders in prop::collection::vec(2u16..6, 1..4), seed in 0usize..1000) {
            let g = Group::new(&orders).unwrap();
            let n = g.order();
            let a = g.element_at(seed % n);
            let b = g.element_at((seed / 7) % n);
            let c = g.element_at((seed / 49) % n);
            // associativity, commutativity, identity, inverse
            prop_assert_eq!(g.add(&g.add(&a, &b), &c), g.add(&a, &g.add(&b, &c)));
            prop_assert_eq!(g.add(&a, &b), g.add(&b, &a));
            prop_assert_eq!(g.add(&a, &g.zero()), a.clone());
            prop_assert_eq!(g.add(&a, &g.neg(&a)), g.zero());
            // rank round-trip
            prop_assert_eq!(g.element_at(g.index_of(&b)), b);
        }
    }
}
