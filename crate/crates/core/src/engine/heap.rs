//! Binary max-heap over variables keyed by activity.
//!
//! Equal activities order by the lower variable index.

use crate::lit::Var;

const ABSENT: usize = usize::MAX;

#[derive(Clone, Debug, Default)]
pub(crate) struct VarHeap {
    heap: Vec<u32>,
    pos: Vec<usize>,
}

fn better(a: u32, b: u32, act: &[f64]) -> bool {
    let (x, y) = (act[a as usize], act[b as usize]);
    x > y || (x == y && a < b)
}

impl VarHeap {
    pub(crate) fn with_vars(n: usize) -> Self {
        // Identity order is a valid heap when all activities are equal.
        VarHeap {
            heap: (0..n as u32).collect(),
            pos: (0..n).collect(),
        }
    }

    pub(crate) fn contains(&self, v: Var) -> bool {
        self.pos[v.index()] != ABSENT
    }

    pub(crate) fn len(&self) -> usize {
        self.heap.len()
    }

    pub(crate) fn insert(&mut self, v: Var, act: &[f64]) {
        if self.contains(v) {
            return;
        }
        self.pos[v.index()] = self.heap.len();
        self.heap.push(v.index() as u32);
        self.sift_up(self.heap.len() - 1, act);
    }

    /// Restores the heap after `v`'s activity grew.
    pub(crate) fn increased(&mut self, v: Var, act: &[f64]) {
        if let Some(&p) = self.pos.get(v.index()).filter(|&&p| p != ABSENT) {
            self.sift_up(p, act);
        }
    }

    pub(crate) fn pop(&mut self, act: &[f64]) -> Option<Var> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("non-empty");
        self.pos[top as usize] = ABSENT;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last as usize] = 0;
            self.sift_down(0, act);
        }
        Some(Var::new(top))
    }

    fn sift_up(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if !better(v, self.heap[parent], act) {
                break;
            }
            self.heap[i] = self.heap[parent];
            self.pos[self.heap[i] as usize] = i;
            i = parent;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i;
    }

    fn sift_down(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        loop {
            let left = 2 * i + 1;
            if left >= self.heap.len() {
                break;
            }
            let right = left + 1;
            let child = if right < self.heap.len() && better(self.heap[right], self.heap[left], act)
            {
                right
            } else {
                left
            };
            if !better(self.heap[child], v, act) {
                break;
            }
            self.heap[i] = self.heap[child];
            self.pos[self.heap[i] as usize] = i;
            i = child;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ties_pop_lowest_index_first() {
        let act = vec![0.0; 5];
        let mut h = VarHeap::with_vars(5);
        let order: Vec<usize> = std::iter::from_fn(|| h.pop(&act)).map(Var::index).collect();
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
    }

    proptest! {
        #[test]
        fn pops_in_activity_order(acts in prop::collection::vec(0u8..6, 1..40)) {
            let mut act: Vec<f64> = vec![0.0; acts.len()];
            let mut h = VarHeap::with_vars(acts.len());
            for (i, a) in acts.iter().enumerate() {
                act[i] = f64::from(*a);
                h.increased(Var::new(i as u32), &act);
            }
            let popped: Vec<usize> = std::iter::from_fn(|| h.pop(&act)).map(Var::index).collect();
            let mut expected: Vec<usize> = (0..acts.len()).collect();
            expected.sort_by(|&a, &b| act[b].partial_cmp(&act[a]).unwrap().then(a.cmp(&b)));
            prop_assert_eq!(popped, expected);
        }
    }
}
