//! The relation `ν ∼ ν̃` on numerator vertices: both reach, through some
//! descendant leaf and at equal distance, a common denominator vertex.

use crate::error::{Error, Result};
use crate::forest::{Forest, ForestLayout, Tree};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClasses {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl VertexClasses {
    /// Classes of `num`'s internal vertices (preorder indices), closed
    /// transitively; `perm` sends numerator leaves to denominator leaves.
    pub fn on_layouts(num: &ForestLayout, perm: &Perm, den: &ForestLayout) -> Result<VertexClasses> {
        if perm.degree() != num.leaf_count() || perm.degree() != den.leaf_count() {
            return Err(Error::DegreeMismatch { expected: num.leaf_count(), got: perm.degree() });
        }
        let n = num.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut owner: Vec<Option<usize>> = vec![None; den.vertex_count];
        for (j, path) in num.leaf_paths.iter().enumerate() {
            let target = &den.leaf_paths[perm.apply(j)].edges;
            let len = path.edges.len();
            for (i, e) in path.edges.iter().enumerate() {
                let dist = len - i;
                if dist > target.len() {
                    continue;
                }
                let witness = target[target.len() - dist].vertex;
                match owner[witness] {
                    None => owner[witness] = Some(e.vertex),
                    Some(o) => {
                        let (a, b) = (find(&mut parent, o), find(&mut parent, e.vertex));
                        parent[a] = b;
                    }
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut index = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; n];
        for v in 0..n {
            let r = roots[v];
            if index[r] == usize::MAX {
                index[r] = classes.len();
                classes.push(Vec::new());
            }
            class_of[v] = index[r];
            classes[index[r]].push(v);
        }
        Ok(VertexClasses { class_of, classes })
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// `∼` for the fraction `(σ∘t)/t'`.
pub fn vertex_classes(t: &Tree, t_prime: &Tree, sigma: &Perm) -> Result<VertexClasses> {
    VertexClasses::on_layouts(
        &ForestLayout::new(&Forest::from_tree(t)),
        sigma,
        &ForestLayout::new(&Forest::from_tree(t_prime)),
    )
}
