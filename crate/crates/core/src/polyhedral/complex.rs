use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

/// A face of an abstract simplicial complex: strictly increasing vertex indices.
pub type Simplex = Vec<usize>;

fn normalize(mut s: Simplex) -> Simplex {
    s.sort_unstable();
    s.dedup();
    s
}

/// A finite set of simplices on vertices `0..n`, always containing the empty face.
///
/// Construction does not close the set under subsets; [`SimplicialComplex::from_maximal`]
/// does, and [`SimplicialComplex::is_closed`] reports whether closure holds.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SimplicialComplex {
    faces: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn new<I: IntoIterator<Item = Simplex>>(faces: I) -> Self {
        let mut set: BTreeSet<Simplex> = faces.into_iter().map(normalize).collect();
        set.insert(Vec::new());
        SimplicialComplex { faces: set }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex::new(core::iter::empty())
    }

    /// Downward closure of the given faces.
    pub fn from_maximal<I: IntoIterator<Item = Simplex>>(faces: I) -> Self {
        let mut set = BTreeSet::new();
        set.insert(Vec::new());
        for f in faces {
            let f = normalize(f);
            for sub in subsets(&f) {
                set.insert(sub);
            }
        }
        SimplicialComplex { faces: set }
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        if s.windows(2).all(|w| w[0] < w[1]) {
            self.faces.contains(s)
        } else {
            self.faces.contains(&normalize(s.to_vec()))
        }
    }

    pub fn faces(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    /// True for `{∅}`.
    pub fn is_empty(&self) -> bool {
        self.faces.len() == 1
    }

    /// First face (in lexicographic order) missing one of its codimension-one faces,
    /// returned as `(face, missing subface)`.
    pub fn missing_subface(&self) -> Option<(Simplex, Simplex)> {
        for f in &self.faces {
            for skip in 0..f.len() {
                let sub: Simplex = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                if !self.faces.contains(&sub) {
                    return Some((f.clone(), sub));
                }
            }
        }
        None
    }

    pub fn is_closed(&self) -> bool {
        self.missing_subface().is_none()
    }

    /// Faces not properly contained in any other face, in lexicographic order.
    pub fn maximal_faces(&self) -> Vec<Simplex> {
        self.faces
            .iter()
            .filter(|f| !self.faces.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect()
    }

    pub fn faces_of_size(&self, k: usize) -> Vec<Simplex> {
        self.faces.iter().filter(|f| f.len() == k).cloned().collect()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.faces.iter().flatten().copied().collect()
    }

    pub fn max_face_size(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` when every maximal face has exactly `d` vertices.
    pub fn pure_dim(&self) -> Option<usize> {
        let maximal = self.maximal_faces();
        let d = maximal.first().map_or(0, Vec::len);
        maximal.iter().all(|f| f.len() == d).then_some(d)
    }

    /// For a pure complex of face size `d`: every face of size `d − 1` lies in
    /// exactly two faces of size `d`. Returns the first offending wall otherwise.
    pub fn wall_violation(&self, d: usize) -> Option<(Simplex, usize)> {
        if d == 0 {
            return None;
        }
        let mut counts: BTreeMap<Simplex, usize> = self.faces_of_size(d - 1).into_iter().map(|w| (w, 0)).collect();
        for top in self.faces_of_size(d) {
            for skip in 0..d {
                let wall: Simplex = top.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                *counts.entry(wall).or_insert(0) += 1;
            }
        }
        counts.into_iter().find(|&(_, c)| c != 2)
    }

    /// Whether the faces of size `d` are connected through shared faces of size `d − 1`.
    pub fn top_faces_connected(&self, d: usize) -> bool {
        let tops = self.faces_of_size(d);
        if tops.len() <= 1 {
            return true;
        }
        let mut seen = alloc::vec![false; tops.len()];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in 0..tops.len() {
                if !seen[b] && intersection_len(&tops[a], &tops[b]) + 1 == d {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `{I ⊔ (J + offset)}`: the join with `other` relabelled past `offset`.
    pub fn join(&self, other: &SimplicialComplex, offset: usize) -> SimplicialComplex {
        let mut faces = BTreeSet::new();
        for a in &self.faces {
            for b in &other.faces {
                let mut f = a.clone();
                f.extend(b.iter().map(|v| v + offset));
                faces.insert(normalize(f));
            }
        }
        SimplicialComplex { faces }
    }

    /// Applies a vertex relabelling to every face.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> SimplicialComplex {
        SimplicialComplex::new(self.faces.iter().map(|s| s.iter().map(|&v| f(v)).collect()))
    }
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

pub fn intersection(a: &[usize], b: &[usize]) -> Simplex {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

pub fn difference(a: &[usize], b: &[usize]) -> Simplex {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

fn intersection_len(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.binary_search(x).is_ok()).count()
}

/// All subsets of a sorted simplex, each sorted.
pub fn subsets(s: &[usize]) -> impl Iterator<Item = Simplex> + '_ {
    assert!(s.len() < usize::BITS as usize, "simplex too large to enumerate faces");
    (0usize..1 << s.len()).map(move |mask| {
        s.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
    })
}
