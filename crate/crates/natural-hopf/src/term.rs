//! Terms of the free operad: planar rooted trees with decorated internal
//! nodes and unlabeled leaves.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Gen, Result, Signature};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf,
    Node(Gen, Vec<Term>),
}

impl Term {
    /// The term with a single internal node decorated by `g`.
    pub fn corolla(sig: &Signature, g: Gen) -> Term {
        Term::Node(g, alloc::vec![Term::Leaf; sig.arity(g)])
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Term::Leaf)
    }

    /// Number of internal nodes.
    pub fn degree(&self) -> usize {
        match self {
            Term::Leaf => 0,
            Term::Node(_, children) => 1 + children.iter().map(Term::degree).sum::<usize>(),
        }
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        match self {
            Term::Leaf => 1,
            Term::Node(_, children) => children.iter().map(Term::arity).sum(),
        }
    }

    /// Height of the deepest internal node, the root having height 0.
    pub fn depth(&self) -> Option<usize> {
        match self {
            Term::Leaf => None,
            Term::Node(_, children) => Some(
                children
                    .iter()
                    .filter_map(Term::depth)
                    .map(|d| d + 1)
                    .max()
                    .unwrap_or(0),
            ),
        }
    }

    /// Checks that every node has as many children as its generator's arity.
    pub fn check(&self, sig: &Signature) -> Result<()> {
        match self {
            Term::Leaf => Ok(()),
            Term::Node(g, children) => {
                if g.index() >= sig.len() {
                    return Err(Error::UnknownGenerator(alloc::format!("#{}", g.0)));
                }
                if children.len() != sig.arity(*g) {
                    return Err(Error::ChildCount {
                        name: sig.name(*g).into(),
                        expected: sig.arity(*g),
                        found: children.len(),
                    });
                }
                children.iter().try_for_each(|c| c.check(sig))
            }
        }
    }

    /// Decorations in preorder.
    pub fn decorations(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        self.push_decorations(&mut out);
        out
    }

    fn push_decorations(&self, out: &mut Vec<Gen>) {
        if let Term::Node(g, children) = self {
            out.push(*g);
            for c in children {
                c.push_decorations(out);
            }
        }
    }

    /// Grafts `args[i]` on the `i`-th leaf, leaves being read left to right.
    pub fn compose(&self, args: &[Term]) -> Result<Term> {
        let expected = self.arity();
        if args.len() != expected {
            return Err(Error::ArgumentCount {
                expected,
                found: args.len(),
            });
        }
        let mut next = args.iter();
        Ok(self.graft_all(&mut next))
    }

    fn graft_all<'a>(&self, next: &mut impl Iterator<Item = &'a Term>) -> Term {
        match self {
            Term::Leaf => next.next().cloned().unwrap_or(Term::Leaf),
            Term::Node(g, children) => {
                Term::Node(*g, children.iter().map(|c| c.graft_all(next)).collect())
            }
        }
    }

    /// Grafts `s` on the `i`-th leaf (1-based).
    pub fn partial_compose(&self, i: usize, s: &Term) -> Result<Term> {
        let bound = self.arity();
        if i == 0 || i > bound {
            return Err(Error::IndexOutOfRange { index: i, bound });
        }
        let mut remaining = i - 1;
        Ok(self.graft_one(&mut remaining, s))
    }

    fn graft_one(&self, remaining: &mut usize, s: &Term) -> Term {
        match self {
            Term::Leaf => {
                let hit = *remaining == 0;
                *remaining = remaining.wrapping_sub(1);
                if hit {
                    s.clone()
                } else {
                    Term::Leaf
                }
            }
            Term::Node(g, children) => Term::Node(
                *g,
                children.iter().map(|c| c.graft_one(remaining, s)).collect(),
            ),
        }
    }

    fn cmp_shape(&self, other: &Term) -> Ordering {
        match (self, other) {
            (Term::Leaf, Term::Leaf) => Ordering::Equal,
            (Term::Leaf, Term::Node(..)) => Ordering::Less,
            (Term::Node(..), Term::Leaf) => Ordering::Greater,
            (Term::Node(g, a), Term::Node(h, b)) => g.cmp(h).then_with(|| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.cmp_shape(y))
                    .find(|o| o.is_ne())
                    .unwrap_or_else(|| a.len().cmp(&b.len()))
            }),
        }
    }
}

/// Terms are ordered by degree, then by a preorder comparison in which a
/// leaf precedes any node and nodes compare by generator index first.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_shape(other))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn node(g: u32, children: Vec<Term>) -> Term {
        Term::Node(Gen(g), children)
    }

    #[test]
    fn statistics() {
        // c(*, b(*, a(*)), b(*, *)) over a:1, b:2, c:3
        let t = node(
            2,
            vec![
                Term::Leaf,
                node(1, vec![Term::Leaf, node(0, vec![Term::Leaf])]),
                node(1, vec![Term::Leaf, Term::Leaf]),
            ],
        );
        assert_eq!((t.degree(), t.arity()), (4, 5));
        assert_eq!(t.depth(), Some(2));
        assert_eq!(Term::Leaf.depth(), None);
    }

    #[test]
    fn grafting() {
        let b = node(1, vec![Term::Leaf, Term::Leaf]);
        let a = node(0, vec![Term::Leaf]);
        assert_eq!(
            b.compose(&[a.clone(), Term::Leaf]).unwrap(),
            node(1, vec![a.clone(), Term::Leaf])
        );
        assert_eq!(Term::Leaf.compose(&[b.clone()]).unwrap(), b);
        assert_eq!(a.partial_compose(1, &a).unwrap(), node(0, vec![a.clone()]));
        assert_eq!(
            b.partial_compose(3, &a),
            Err(Error::IndexOutOfRange { index: 3, bound: 2 })
        );
        assert!(b.compose(&[Term::Leaf]).is_err());
    }
}
