use fixedbitset::FixedBitSet;

use super::{Element, FiniteSemigroup};

/// Green's relations of a finite semigroup.
///
/// Class ids are numbered by the smallest element they contain, so class
/// `0` of every relation contains element `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreensData {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub r_classes: Vec<Vec<Element>>,
    pub l_classes: Vec<Vec<Element>>,
    pub j_classes: Vec<Vec<Element>>,
    pub h_classes: Vec<Vec<Element>>,
}

impl GreensData {
    pub fn compute(s: &FiniteSemigroup) -> Self {
        let n = s.size();
        // sS¹ and S¹s
        let mut right = vec![FixedBitSet::with_capacity(n); n];
        let mut left = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            right[x].insert(x);
            left[x].insert(x);
            for y in 0..n {
                right[x].insert(s.mul(x, y));
                left[x].insert(s.mul(y, x));
            }
        }
        // S¹sS¹ = union of the left ideals of the elements of sS¹
        let mut two_sided = Vec::with_capacity(n);
        for x in 0..n {
            let mut ideal = FixedBitSet::with_capacity(n);
            for y in right[x].ones() {
                ideal.union_with(&left[y]);
            }
            two_sided.push(ideal);
        }

        let (r_class, r_classes) = classes(n, |x, y| right[x].contains(y) && right[y].contains(x));
        let (l_class, l_classes) = classes(n, |x, y| left[x].contains(y) && left[y].contains(x));
        let (j_class, j_classes) =
            classes(n, |x, y| two_sided[x].contains(y) && two_sided[y].contains(x));
        let (h_class, h_classes) =
            classes(n, |x, y| r_class[x] == r_class[y] && l_class[x] == l_class[y]);

        GreensData {
            r_class,
            l_class,
            j_class,
            h_class,
            r_classes,
            l_classes,
            j_classes,
            h_classes,
        }
    }

    pub fn r_class_count(&self) -> usize {
        self.r_classes.len()
    }

    pub fn l_class_count(&self) -> usize {
        self.l_classes.len()
    }

    pub fn j_class_count(&self) -> usize {
        self.j_classes.len()
    }

    pub fn h_class_count(&self) -> usize {
        self.h_classes.len()
    }

    pub fn r_related(&self, x: Element, y: Element) -> bool {
        self.r_class[x] == self.r_class[y]
    }

    pub fn l_related(&self, x: Element, y: Element) -> bool {
        self.l_class[x] == self.l_class[y]
    }

    pub fn j_related(&self, x: Element, y: Element) -> bool {
        self.j_class[x] == self.j_class[y]
    }

    pub fn h_related(&self, x: Element, y: Element) -> bool {
        self.h_class[x] == self.h_class[y]
    }
}

fn classes(n: usize, related: impl Fn(usize, usize) -> bool) -> (Vec<usize>, Vec<Vec<Element>>) {
    let mut class = vec![usize::MAX; n];
    let mut members: Vec<Vec<Element>> = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut m = vec![x];
        class[x] = id;
        for y in x + 1..n {
            if class[y] == usize::MAX && related(x, y) {
                class[y] = id;
                m.push(y);
            }
        }
        members.push(m);
    }
    (class, members)
}
